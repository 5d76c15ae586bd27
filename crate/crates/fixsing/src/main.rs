fn main() {
    std::process::exit(fixsing::cli::run(std::env::args_os()));
}
