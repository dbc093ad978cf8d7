fn main() {
    std::process::exit(qschubert_cli::run(std::env::args_os()));
}
