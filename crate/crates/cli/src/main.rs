fn main() {
    std::process::exit(hampow_cli::run(std::env::args_os()));
}
