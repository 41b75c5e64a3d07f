fn main() {
    std::process::exit(lindbloch::cli::run());
}
