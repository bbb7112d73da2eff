//! Machine-readable reports and their plain-text rendering.
//!
//! Every report is a JSON object with a `schema`/`schema_version` header and
//! a `command` tag selecting the body. Output is deterministic: no
//! timestamps, and every list is in the library's canonical order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::character::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::ktheory::{IdealPresentation, KGroupPresentation, SphereModel, SplittingReport};
use crate::verification::{CheckResult, Status};

pub const SCHEMA: &str = "equivk-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: ReportBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum ReportBody {
    Chartab(TableReport),
    Kgroup(KGroupReport),
    Verify(VerifyReport),
}

/// An element of `Q(ζ_m)` in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicValue {
    pub modulus: u32,
    pub coefficients: Vec<i64>,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub denominator: i64,
}

fn one() -> i64 {
    1
}

fn is_one(d: &i64) -> bool {
    *d == 1
}

impl From<&Cyclotomic> for CyclotomicValue {
    fn from(c: &Cyclotomic) -> CyclotomicValue {
        CyclotomicValue {
            modulus: c.modulus(),
            coefficients: c.coefficients().to_vec(),
            denominator: c.denominator(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub representative: String,
    pub size: usize,
    pub element_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub degree: usize,
    pub values: Vec<CyclotomicValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub group: String,
    pub order: usize,
    pub modulus: u32,
    pub classes: Vec<ClassReport>,
    pub characters: Vec<CharacterReport>,
}

impl TableReport {
    pub fn new(group: &str, table: &CharacterTable) -> TableReport {
        let g = table.group();
        let classes = table.classes();
        TableReport {
            group: group.to_string(),
            order: g.order(),
            modulus: table.modulus(),
            classes: (0..classes.len())
                .map(|j| ClassReport {
                    representative: g.label(classes.representative(j)).to_string(),
                    size: classes.size(j),
                    element_order: classes.element_order(j),
                })
                .collect(),
            characters: table
                .rows()
                .iter()
                .zip(table.degrees())
                .map(|(row, &degree)| CharacterReport {
                    degree,
                    values: row.iter().map(CyclotomicValue::from).collect(),
                })
                .collect(),
        }
    }
}

/// One basis element `χ_r − χ_p` (in `R(H)` for `S^{1⊕λ}`, in `R(G)` for
/// `S^λ`) with its full coefficient vector over the irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub label: String,
    pub representative: usize,
    pub partner: usize,
    pub coefficients: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGroupReport {
    pub group: String,
    pub lambda: String,
    pub sphere: SphereModel,
    pub rank: usize,
    /// Representation ring holding the basis coefficient vectors.
    pub ring: String,
    /// `action[i]`: matrix of the `i`-th irreducible of `G` on coordinate
    /// columns.
    pub action: Vec<Vec<Vec<i64>>>,
    pub basis: Vec<BasisReport>,
    pub product: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingReport>,
}

impl KGroupReport {
    pub fn from_s1_lambda(
        group: &str,
        lambda: &str,
        p: &KGroupPresentation,
        splitting: SplittingReport,
    ) -> KGroupReport {
        KGroupReport {
            group: group.to_string(),
            lambda: lambda.to_string(),
            sphere: p.sphere,
            rank: p.rank,
            ring: "R(H)".into(),
            action: p.action.clone(),
            basis: p
                .basis
                .iter()
                .map(|b| BasisReport {
                    label: b.label.clone(),
                    representative: b.representative,
                    partner: b.partner,
                    coefficients: b.element.coefficients().to_vec(),
                })
                .collect(),
            product: "zero".into(),
            splitting: Some(splitting),
        }
    }

    pub fn from_s_lambda(group: &str, lambda: &str, p: &IdealPresentation) -> KGroupReport {
        KGroupReport {
            group: group.to_string(),
            lambda: lambda.to_string(),
            sphere: p.sphere,
            rank: p.rank,
            ring: "R(G)".into(),
            action: p.action.clone(),
            basis: p
                .basis
                .iter()
                .map(|b| BasisReport {
                    label: format!("φ{}−λφ{}", b.representative, b.representative),
                    representative: b.representative,
                    partner: b.partner,
                    coefficients: b.element.coefficients().to_vec(),
                })
                .collect(),
            product: "ideal of R(G)".into(),
            splitting: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scope: String,
    pub passed: usize,
    pub failed: usize,
    pub info: usize,
    pub results: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn new(scope: &str, results: Vec<CheckResult>) -> VerifyReport {
        let count = |s: Status| results.iter().filter(|r| r.status == s).count();
        VerifyReport {
            scope: scope.to_string(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            info: count(Status::Info),
            results,
        }
    }
}

impl Report {
    pub fn new(body: ReportBody) -> Report {
        Report {
            schema: SCHEMA.into(),
            schema_version: SCHEMA_VERSION,
            body,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report> {
        let report: Report =
            serde_json::from_str(text).map_err(|e| Error::spec("$", format!("not a report: {e}")))?;
        if report.schema != SCHEMA || report.schema_version != SCHEMA_VERSION {
            return Err(Error::spec(
                "schema_version",
                format!("unsupported report {} v{}", report.schema, report.schema_version),
            ));
        }
        Ok(report)
    }

    /// Human-readable rendering.
    pub fn to_text(&self, table: Option<&CharacterTable>) -> String {
        match &self.body {
            ReportBody::Chartab(t) => render_table(t, table),
            ReportBody::Kgroup(k) => render_kgroup(k),
            ReportBody::Verify(v) => render_verify(v),
        }
    }
}

fn render_table(t: &TableReport, table: Option<&CharacterTable>) -> String {
    let cell = |i: usize, j: usize| -> String {
        match table {
            Some(tab) => tab.value(i, j).to_string(),
            None => {
                let v = &t.characters[i].values[j];
                format!("{:?}", v.coefficients)
            }
        }
    };
    let mut grid: Vec<Vec<String>> = vec![
        std::iter::once("class".to_string())
            .chain(t.classes.iter().map(|c| c.representative.clone()))
            .collect(),
        std::iter::once("size".to_string())
            .chain(t.classes.iter().map(|c| c.size.to_string()))
            .collect(),
        std::iter::once("order".to_string())
            .chain(t.classes.iter().map(|c| c.element_order.to_string()))
            .collect(),
    ];
    for i in 0..t.characters.len() {
        grid.push(
            std::iter::once(format!("χ{i}"))
                .chain((0..t.classes.len()).map(|j| cell(i, j)))
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..=t.classes.len())
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = format!(
        "{}: order {}, {} classes, values in Q(z), z = exp(2πi/{})\n",
        t.group,
        t.order,
        t.classes.len(),
        t.modulus
    );
    for (r, row) in grid.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
        if r == 2 {
            out.push('\n');
        }
    }
    out
}

fn render_kgroup(k: &KGroupReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "K̃_G({}) for G = {}, λ = {}", k.sphere, k.group, k.lambda);
    let _ = writeln!(out, "rank {}", k.rank);
    if let Some(s) = &k.splitting {
        let _ = writeln!(
            out,
            "orbits on Irr(H): {} with isotropy H, {} with isotropy G",
            s.orbits_isotropy_h, s.orbits_isotropy_g
        );
    }
    for (n, b) in k.basis.iter().enumerate() {
        let name = if k.ring == "R(H)" { "χ" } else { "φ" };
        let _ = writeln!(
            out,
            "e{n} = {name}{} − {name}{}   {}   coefficients in {}: {:?}",
            b.representative, b.partner, b.label, k.ring, b.coefficients
        );
    }
    if k.rank > 0 {
        let coords = if k.rank == 1 { "e0".to_string() } else { format!("e0 … e{}", k.rank - 1) };
        let _ = writeln!(out, "action of the irreducibles of G on ({coords}):");
        for (i, m) in k.action.iter().enumerate() {
            let rows: Vec<String> = m.iter().map(|r| format!("{r:?}")).collect();
            let _ = writeln!(out, "  φ{i}: [{}]", rows.join(", "));
        }
    }
    let _ = writeln!(out, "product: {}", k.product);
    out
}

fn render_verify(v: &VerifyReport) -> String {
    let mut out = String::new();
    for r in &v.results {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        };
        let lambda = r.lambda.as_deref().map(|l| format!(" λ={l}")).unwrap_or_default();
        let _ = writeln!(out, "{status}  {:<22} {}{}  {}", r.check, r.group, lambda, r.details);
    }
    let _ = writeln!(
        out,
        "{}: {} passed, {} failed, {} info",
        v.scope, v.passed, v.failed, v.info
    );
    out
}
