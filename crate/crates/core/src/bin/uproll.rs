fn main() { std::process::exit(uproll::cli::run(std::env::args())); }
