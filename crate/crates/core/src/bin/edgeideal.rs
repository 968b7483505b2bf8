fn main() -> std::process::ExitCode {
    edgeideal::cli::main()
}
