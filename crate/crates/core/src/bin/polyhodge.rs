fn main() {
    std::process::exit(polyhodge::cli::run(std::env::args_os()));
}
