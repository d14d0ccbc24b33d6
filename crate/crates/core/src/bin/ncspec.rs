fn main() {
    std::process::exit(ncspec::cli::run(std::env::args()));
}
