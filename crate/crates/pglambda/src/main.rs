fn main() {
    std::process::exit(pglambda::cli::run());
}
