use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = koszul_cli::run(std::env::args_os());
    let text = outcome.render();
    if outcome.usage.is_some() && outcome.code != 0 {
        eprint!("{text}");
    } else {
        let _ = std::io::stdout().write_all(text.as_bytes());
    }
    if outcome.usage.is_none() && !outcome.json && outcome.code == 2 {
        for f in &outcome.report.failures {
            eprintln!("error: {}", f.reason);
        }
    }
    ExitCode::from(outcome.code as u8)
}
