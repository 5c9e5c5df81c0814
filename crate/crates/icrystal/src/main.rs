fn main() {
    std::process::exit(icrystal::run(std::env::args_os()));
}
