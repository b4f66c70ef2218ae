use clap::Parser;
use higher_auslander::cli::{execute, Cli, Status};

fn main() -> anyhow::Result<()> {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::InputError as i32 } else { 0 };
            e.print()?;
            std::process::exit(code);
        }
    };
    let outcome = execute(&cli);
    match outcome.status {
        Status::InputError => eprintln!("{}", outcome.output),
        _ => println!("{}", outcome.output),
    }
    std::process::exit(outcome.status as i32);
}
