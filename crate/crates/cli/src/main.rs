fn main() {
    std::process::exit(edix_cli::cli_dispatch(std::env::args_os()));
}
