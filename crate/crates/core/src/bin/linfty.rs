fn main() {
    std::process::exit(linfty::cli::main())
}
