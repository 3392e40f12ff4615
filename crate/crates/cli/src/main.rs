use std::io::{stderr, stdout};

fn main() {
    let mut out = stdout();
    let mut err = stderr();
    let code = bhix_cli::run_from(std::env::args_os(), &mut out, &mut err);
    std::process::exit(code);
}
