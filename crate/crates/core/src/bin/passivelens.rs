fn main() {
    std::process::exit(passivelens::cli::main_with_args(std::env::args_os()));
}
