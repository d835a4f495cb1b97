fn main() {
    std::process::exit(modulislope::cli::run(std::env::args_os()));
}
