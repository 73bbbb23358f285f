fn main() {
    std::process::exit(superplane::cli::main());
}
