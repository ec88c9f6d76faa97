fn main() {
    std::process::exit(qeuler::cli::run());
}
