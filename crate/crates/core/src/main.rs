fn main() {
    std::process::exit(cwsurgery::cli::main_entry());
}
