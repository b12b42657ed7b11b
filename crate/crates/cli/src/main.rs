use std::io::Write;

fn main() {
    let format = std::env::var("MPWEYL_FORMAT").ok();
    let out = mpweyl_cli::run(std::env::args_os(), format.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
