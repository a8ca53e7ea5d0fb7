fn main() {
    std::process::exit(loop_schubert_cli::main_with_env());
}
