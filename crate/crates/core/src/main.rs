fn main() {
    std::process::exit(satake_kit::cli::main_with_env());
}
