fn main() {
    std::process::exit(goursat_kit::run(std::env::args_os()));
}
