fn main() {
    std::process::exit(burr_records::cli::main_with_args(std::env::args_os()));
}
