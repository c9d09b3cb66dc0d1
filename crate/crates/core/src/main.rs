use std::io::Write;

fn main() {
    let result = mcsd::cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", result.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", result.stderr);
    std::process::exit(result.exit_code);
}
