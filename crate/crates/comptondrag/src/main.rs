fn main() {
    std::process::exit(comptondrag::cli::run_main());
}
