fn main() {
    std::process::exit(hardy_calculus::cli::main_with_args(std::env::args_os()));
}
