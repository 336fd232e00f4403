fn main() {
    std::process::exit(dsnip::cli::run(std::env::args_os()));
}
