use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let budget = std::env::var("STACKY_BUDGET").ok();
    let out = stacky::cli::run(&args, budget.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
