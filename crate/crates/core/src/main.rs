fn main() {
    std::process::exit(rayleigh::cli::run(std::env::args_os()));
}
