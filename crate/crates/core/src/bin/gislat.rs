fn main() -> std::process::ExitCode {
    gislat::cli::main()
}
