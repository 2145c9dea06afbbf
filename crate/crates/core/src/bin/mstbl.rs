fn main() {
    std::process::exit(mstbl::cli::run(std::env::args_os()));
}
