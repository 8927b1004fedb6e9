fn main() {
    std::process::exit(clone_search::cli::run());
}
