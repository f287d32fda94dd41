use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cobordism_core::cli::{self, Params, Profile};

#[derive(Parser)]
#[command(
    name = "cobordism",
    version,
    about = "Verification suites for the CP²- and RP²-bundle generator computations"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite, or `all`.
    Run {
        check_id: String,
        #[arg(long)]
        max_degree: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        t_max: Option<u64>,
        /// Also write the report as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
        #[arg(long, default_value = "full", value_parser = ["quick", "full"])]
        profile: String,
        /// Print every case, not only failures.
        #[arg(long, short)]
        verbose: bool,
    },
    /// List the registered suites.
    List,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match args.command {
        Command::List => {
            for s in cli::registry() {
                println!("{:<22} {}", s.id, s.description);
            }
            ExitCode::SUCCESS
        }
        Command::Run { check_id, max_degree, n, max_n, t_max, json, profile, verbose } => {
            let profile: Profile = profile.parse().expect("restricted by clap");
            let params = Params { profile, max_degree, n, max_n, t_max };
            let report = if check_id == "all" {
                let agg = cli::run_all_with(&cli::registry(), &params);
                for r in &agg.reports {
                    print!("{}", r.render(verbose));
                }
                println!("all: {} in {} ms", agg.summary.status, agg.summary.wall_time_ms);
                agg.summary
            } else {
                match cli::run(&check_id, &params) {
                    Ok(r) => {
                        print!("{}", r.render(verbose));
                        r
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
            };
            if let Some(path) = json {
                if let Err(e) = cli::write_json(&report, &path) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
    }
}
