fn main() {
    std::process::exit(floplen_cli::run());
}
