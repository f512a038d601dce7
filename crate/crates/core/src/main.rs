fn main() {
    std::process::exit(gencert::cli::run(std::env::args_os()));
}
