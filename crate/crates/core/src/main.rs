fn main() {
    std::process::exit(robin_graph::cli::run(std::env::args_os()));
}
