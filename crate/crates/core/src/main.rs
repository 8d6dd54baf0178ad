fn main() {
    std::process::exit(admissible::cli::run(std::env::args_os()));
}
