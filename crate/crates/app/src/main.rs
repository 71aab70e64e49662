use clap::Parser;
use graceful_app::cli::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let stdin = std::io::stdin();
    let code = run(cli, &mut stdin.lock(), &mut std::io::stdout());
    std::process::exit(code);
}
