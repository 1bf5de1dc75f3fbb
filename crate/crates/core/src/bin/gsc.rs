fn main() {
    std::process::exit(gsc::cli::main_from_env());
}
