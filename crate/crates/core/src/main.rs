fn main() {
    std::process::exit(rmtdpp::cli::run(std::env::args()));
}
