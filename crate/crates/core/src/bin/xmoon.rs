fn main() {
    std::process::exit(xmoon::cli::main_with_args(std::env::args_os()));
}
