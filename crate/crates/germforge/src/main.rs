fn main() {
    std::process::exit(germforge::cli::run());
}
