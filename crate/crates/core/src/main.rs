fn main() {
    std::process::exit(curve_census::cli::cli_main(std::env::args_os()));
}
