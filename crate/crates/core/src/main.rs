fn main() {
    std::process::exit(equivk::cli::run(std::env::args_os()));
}
