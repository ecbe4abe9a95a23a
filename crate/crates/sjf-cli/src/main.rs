use std::io::Write;

fn main() {
    let (text, code) = sjf_cli::main_with_args(std::env::args().collect());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
    std::process::exit(code);
}
