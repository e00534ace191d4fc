fn main() -> std::process::ExitCode {
    mbcut::cli::main()
}
