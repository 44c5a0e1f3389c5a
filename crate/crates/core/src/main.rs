fn main() {
    std::process::exit(reptype::cli::run());
}
