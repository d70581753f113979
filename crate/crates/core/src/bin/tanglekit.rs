fn main() {
    std::process::exit(tanglekit::cli::main_with_args(std::env::args_os()));
}
