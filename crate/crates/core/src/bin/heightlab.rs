fn main() {
    std::process::exit(heightlab::cli::main_entry());
}
