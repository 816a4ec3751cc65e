fn main() {
    std::process::exit(moment_angle::cli::run_main());
}
