fn main() {
    std::process::exit(latstack::cli::run(std::env::args_os()));
}
