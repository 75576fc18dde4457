fn main() {
    std::process::exit(mahonian::cli::run());
}
