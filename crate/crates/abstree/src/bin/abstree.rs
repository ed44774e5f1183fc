fn main() {
    std::process::exit(abstree::cli::run(std::env::args_os()));
}
