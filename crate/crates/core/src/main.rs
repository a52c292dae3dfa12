use clap::Parser;

use precsys::cli::{run, RunConfig, EXIT_INPUT};

fn main() {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = run(&cfg, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
