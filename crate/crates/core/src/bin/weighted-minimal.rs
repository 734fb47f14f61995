fn main() {
    std::process::exit(weighted_minimal::cli::run(std::env::args_os()));
}
