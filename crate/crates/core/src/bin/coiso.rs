fn main() {
    std::process::exit(coisotropy::cli::main_with_args(std::env::args_os()));
}
