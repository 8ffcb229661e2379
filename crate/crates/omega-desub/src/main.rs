fn main() {
    std::process::exit(omega_desub::cli::run(std::env::args_os()));
}
