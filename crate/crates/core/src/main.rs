fn main() {
    std::process::exit(greedy_grid::cli::run(std::env::args_os()));
}
