fn main() {
    std::process::exit(double_irs::cli::main_with_args(std::env::args_os()));
}
