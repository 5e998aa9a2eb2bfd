fn main() {
    std::process::exit(nsfam::cli::main_with_args(std::env::args_os()));
}
