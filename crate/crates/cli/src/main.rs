use std::io::Write;

fn main() {
    let (out, err, code) = flagherm_cli::run(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    std::io::stdout().flush().ok();
    std::process::exit(code);
}
