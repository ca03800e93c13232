fn main() {
    std::process::exit(circdom::cli::main_with_args(std::env::args_os()));
}
