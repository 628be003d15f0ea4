fn main() {
    std::process::exit(normalcut::cli::main_entry());
}
