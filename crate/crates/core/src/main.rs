fn main() {
    std::process::exit(qtet_core::cli::main());
}
