use clap::Parser;
use moment_angle::cli::{run, JobConfig};

fn main() {
    let config = JobConfig::parse();
    let outcome = run(&config);
    if outcome.status == moment_angle::cli::EXIT_INPUT {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    std::process::exit(outcome.status);
}
