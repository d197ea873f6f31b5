fn main() -> std::process::ExitCode {
    nonassoc::cli::main()
}
