fn main() {
    std::process::exit(wakeford::cli::main_with_args(std::env::args_os()));
}
