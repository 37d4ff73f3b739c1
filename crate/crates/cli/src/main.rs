fn main() {
    std::process::exit(frobring_cli::run(std::env::args_os()));
}
