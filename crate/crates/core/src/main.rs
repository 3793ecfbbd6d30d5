fn main() {
    std::process::exit(girth7::cli::run(std::env::args_os()));
}
