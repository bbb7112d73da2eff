//! JSON problem specifications: a group family plus an optional choice of
//! sign homomorphism.
//!
//! ```json
//! {"family": "D", "n": 4, "lambda": {"convention": "reflection-sign"}}
//! {"family": "product", "factors": [{"family": "C", "n": 2}, {"family": "S", "n": 3}]}
//! {"generators": [[1, 0, 2], [1, 2, 0]], "lambda": {"generator_signs": [-1, 1]}}
//! ```
//!
//! Families: `C`/`cyclic` (`n`), `D`/`dihedral` (`n`, order `2n`),
//! `Q8`/`quaternion`, `S`/`symmetric` (`n ≤ 6`), `A`/`alternating` (`n ≤ 6`),
//! `product`/`direct_product` (`factors`, two or more specs, folded left), or
//! a bare `generators` list of permutations of `0..d`.

use std::fmt;
use std::sync::Arc;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::group::{
    all_sign_homomorphisms, build_group_with_limit, GroupSpec, GroupTable, SignHomomorphism,
};

/// Named ways to pick `λ` without listing generator signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// The first surjection in generator-sign enumeration order: pattern `t`
    /// sends generator `i` to `-1` iff bit `i` of `t` is set, `t = 1, 2, …`.
    OntoPm1,
    /// Dihedral groups: rotations `↦ +1`, reflections `↦ −1`, so the kernel
    /// is the rotation subgroup.
    ReflectionSign,
    /// Same homomorphism as [`Convention::ReflectionSign`]; both names are in
    /// use for the dihedral λ whose kernel is the rotations.
    RotationSign,
    /// Permutation groups: the parity of a permutation.
    Sign,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention::OntoPm1,
        Convention::ReflectionSign,
        Convention::RotationSign,
        Convention::Sign,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Convention::OntoPm1 => "onto-pm1",
            Convention::ReflectionSign => "reflection-sign",
            Convention::RotationSign => "rotation-sign",
            Convention::Sign => "sign",
        }
    }

    pub fn from_name(name: &str) -> Option<Convention> {
        Convention::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How `λ` is chosen.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LambdaSpec {
    Convention(Convention),
    GeneratorSigns(Vec<i8>),
}

/// A parsed specification.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    pub group: GroupSpec,
    pub lambda: Option<LambdaSpec>,
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<ProblemSpec> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::spec("$", format!("not valid JSON: {e}")))?;
        ProblemSpec::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<ProblemSpec> {
        let obj = as_object(value, "$")?;
        let group = parse_group(obj, "")?;
        let lambda = obj.get("lambda").map(|v| parse_lambda(v, "lambda")).transpose()?;
        Ok(ProblemSpec { group, lambda })
    }

    /// Builds the group, refusing orders above `order_limit`.
    pub fn build(&self, order_limit: usize) -> Result<Arc<GroupTable>> {
        build_group_with_limit(&self.group, order_limit)
    }

    /// The chosen `λ` on `g`, which must be the group built from this spec.
    /// `Ok(None)` when the spec names no `λ`.
    pub fn resolve_lambda(&self, g: &GroupTable) -> Result<Option<SignHomomorphism>> {
        self.lambda
            .as_ref()
            .map(|l| resolve_lambda(&self.group, l, g))
            .transpose()
    }
}

pub fn resolve_lambda(group: &GroupSpec, lambda: &LambdaSpec, g: &GroupTable) -> Result<SignHomomorphism> {
    match lambda {
        LambdaSpec::GeneratorSigns(signs) => {
            if signs.len() != g.generators().len() {
                return Err(Error::spec(
                    "lambda.generator_signs",
                    format!(
                        "expected {} signs (one per generator of {group}), got {}",
                        g.generators().len(),
                        signs.len()
                    ),
                ));
            }
            SignHomomorphism::from_generator_signs(g, signs)
                .map_err(|e| Error::spec("lambda.generator_signs", e.to_string()))
        }
        LambdaSpec::Convention(c) => resolve_convention(group, *c, g),
    }
}

fn resolve_convention(group: &GroupSpec, c: Convention, g: &GroupTable) -> Result<SignHomomorphism> {
    let field = "lambda.convention";
    let signs: Vec<i8> = match (c, group) {
        (Convention::OntoPm1, _) => {
            return all_sign_homomorphisms(g).into_iter().next().ok_or_else(|| {
                Error::spec(field, format!("{group} has no surjection onto {{+1, -1}}"))
            });
        }
        (Convention::ReflectionSign | Convention::RotationSign, GroupSpec::Dihedral(_)) => vec![1, -1],
        (Convention::Sign, _) => match group.permutation_generators() {
            Some((_, gens)) => gens.iter().map(|p| parity(p)).collect(),
            None => {
                return Err(Error::spec(field, format!("`sign` needs a permutation group, not {group}")));
            }
        },
        (_, _) => {
            return Err(Error::spec(field, format!("`{c}` applies to dihedral groups, not {group}")));
        }
    };
    SignHomomorphism::from_generator_signs(g, &signs).map_err(|e| Error::spec(field, e.to_string()))
}

fn parity(p: &[usize]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::spec(path, "expected a JSON object"))
}

fn get_usize(obj: &Map<String, Value>, prefix: &str, key: &str) -> Result<usize> {
    let path = join(prefix, key);
    match obj.get(key) {
        None => Err(Error::spec(path, "missing")),
        Some(v) => v
            .as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| Error::spec(path, format!("expected a non-negative integer, got {v}"))),
    }
}

fn parse_group(obj: &Map<String, Value>, prefix: &str) -> Result<GroupSpec> {
    if let Some(gens) = obj.get("generators") {
        if obj.contains_key("family") {
            return Err(Error::spec(join(prefix, "generators"), "give either `family` or `generators`, not both"));
        }
        return parse_generators(obj, gens, prefix);
    }
    let family_path = join(prefix, "family");
    let family = match obj.get("family") {
        None => return Err(Error::spec(family_path, "missing (or give `generators`)")),
        Some(v) => v
            .as_str()
            .ok_or_else(|| Error::spec(&family_path, "expected a string"))?,
    };
    let spec = match family {
        "C" | "cyclic" => GroupSpec::Cyclic(get_usize(obj, prefix, "n")?),
        "D" | "dihedral" => GroupSpec::Dihedral(get_usize(obj, prefix, "n")?),
        "Q8" | "Q" | "quaternion" => {
            if obj.contains_key("n") && get_usize(obj, prefix, "n")? != 8 {
                return Err(Error::spec(join(prefix, "n"), "only the quaternion group of order 8 is built in"));
            }
            GroupSpec::Quaternion
        }
        "S" | "symmetric" => GroupSpec::Symmetric(get_usize(obj, prefix, "n")?),
        "A" | "alternating" => GroupSpec::Alternating(get_usize(obj, prefix, "n")?),
        "product" | "direct_product" => {
            let path = join(prefix, "factors");
            let factors = obj
                .get("factors")
                .ok_or_else(|| Error::spec(&path, "missing"))?
                .as_array()
                .ok_or_else(|| Error::spec(&path, "expected an array of group specs"))?;
            if factors.len() < 2 {
                return Err(Error::spec(&path, "need at least two factors"));
            }
            let mut specs = factors.iter().enumerate().map(|(i, f)| {
                let p = format!("{path}[{i}]");
                parse_group(as_object(f, &p)?, &p)
            });
            let first = specs.next().expect("two factors")?;
            specs.try_fold(first, |acc, next| Ok(GroupSpec::direct_product(acc, next?)))?
        }
        other => {
            return Err(Error::spec(
                family_path,
                format!("unknown family `{other}` (expected C, D, Q8, S, A or product)"),
            ))
        }
    };
    match &spec {
        GroupSpec::Cyclic(0) | GroupSpec::Dihedral(0) => Err(Error::spec(join(prefix, "n"), "must be at least 1")),
        GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) if *n == 0 || *n > 6 => {
            Err(Error::spec(join(prefix, "n"), format!("degree {n} outside 1..=6")))
        }
        _ => Ok(spec),
    }
}

fn parse_generators(obj: &Map<String, Value>, gens: &Value, prefix: &str) -> Result<GroupSpec> {
    let path = join(prefix, "generators");
    let list = gens
        .as_array()
        .ok_or_else(|| Error::spec(&path, "expected an array of permutations"))?;
    let mut perms = Vec::with_capacity(list.len());
    for (i, p) in list.iter().enumerate() {
        let p_path = format!("{path}[{i}]");
        let images = p
            .as_array()
            .ok_or_else(|| Error::spec(&p_path, "expected an array of point images"))?;
        let perm = images
            .iter()
            .enumerate()
            .map(|(j, x)| {
                x.as_u64()
                    .and_then(|x| usize::try_from(x).ok())
                    .ok_or_else(|| Error::spec(format!("{p_path}[{j}]"), format!("expected a point index, got {x}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        perms.push(perm);
    }
    let degree = match obj.get("degree") {
        Some(_) => get_usize(obj, prefix, "degree")?,
        None => perms.first().map_or(1, Vec::len),
    };
    if degree == 0 || degree > u8::MAX as usize {
        return Err(Error::spec(join(prefix, "degree"), format!("degree {degree} outside 1..=255")));
    }
    for (i, p) in perms.iter().enumerate() {
        let p_path = format!("{path}[{i}]");
        if p.len() != degree {
            return Err(Error::spec(p_path, format!("has {} images, expected {degree}", p.len())));
        }
        let mut seen = vec![false; degree];
        for (j, &x) in p.iter().enumerate() {
            if x >= degree || seen[x] {
                return Err(Error::spec(
                    format!("{p_path}[{j}]"),
                    format!("image {x} makes this not a bijection of 0..{degree}"),
                ));
            }
            seen[x] = true;
        }
    }
    Ok(GroupSpec::Permutations { degree, generators: perms })
}

fn parse_lambda(v: &Value, path: &str) -> Result<LambdaSpec> {
    let obj = as_object(v, path)?;
    match (obj.get("convention"), obj.get("generator_signs")) {
        (Some(_), Some(_)) => Err(Error::spec(path, "give either `convention` or `generator_signs`, not both")),
        (Some(c), None) => {
            let c_path = format!("{path}.convention");
            let name = c.as_str().ok_or_else(|| Error::spec(&c_path, "expected a string"))?;
            Convention::from_name(name).map(LambdaSpec::Convention).ok_or_else(|| {
                let known: Vec<&str> = Convention::ALL.iter().map(|c| c.name()).collect();
                Error::spec(c_path, format!("unknown convention `{name}` (expected one of {})", known.join(", ")))
            })
        }
        (None, Some(s)) => {
            let s_path = format!("{path}.generator_signs");
            let list = s.as_array().ok_or_else(|| Error::spec(&s_path, "expected an array of ±1"))?;
            list.iter()
                .enumerate()
                .map(|(i, x)| match x.as_i64() {
                    Some(1) => Ok(1),
                    Some(-1) => Ok(-1),
                    _ => Err(Error::spec(format!("{s_path}[{i}]"), format!("expected 1 or -1, got {x}"))),
                })
                .collect::<Result<Vec<i8>>>()
                .map(LambdaSpec::GeneratorSigns)
        }
        (None, None) => Err(Error::spec(path, "expected `convention` or `generator_signs`")),
    }
}
