fn main() {
    std::process::exit(gqs_core::cli::main_with(std::env::args_os()));
}
