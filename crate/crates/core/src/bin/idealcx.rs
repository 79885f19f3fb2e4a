fn main() {
    let out = ideal_complexity::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
