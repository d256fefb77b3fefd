fn main() {
    std::process::exit(skewsym::cli::run());
}
