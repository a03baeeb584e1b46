fn main() {
    std::process::exit(reidemeister_cli::app::run(std::env::args_os()));
}
