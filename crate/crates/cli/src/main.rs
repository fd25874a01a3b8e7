mod params;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use freeq::aut::DEFAULT_ORBIT_CAP;
use freeq::format::{self, SCHEMA};
use freeq::oracle::{brute_force_solutions, certify, BallSpec};
use freeq::solver::{
    classify_word, describe_variety, generate_solution, sweep_params, two_level_family, verify_mega,
    verify_solution, Budgets, EquationInstance, JsjCase,
};
use freeq::{Alphabet, Error, Word};

const EXIT_USAGE: u8 = 1;
const EXIT_UNRESOLVED: u8 = 2;
const EXIT_UNCOVERED: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

/// Solution sets of equations w(x,y) = u over a free group.
///
/// Words use lowercase letters for generators and uppercase for inverses;
/// `x` and `y` are the variables. The grammar also accepts `1`, `(..)^n`
/// and commutators `[g,h] = g^-1 h^-1 g h`.
///
/// Exit codes: 0 ok, 1 usage or parse error, 2 unresolved classification,
/// 3 certification found uncovered solutions.
#[derive(Debug, Parser)]
#[command(name = "freeq", version)]
struct Cli {
    /// Coefficient generators, e.g. `ab`.
    #[arg(long, global = true, default_value = "ab")]
    alphabet: String,
    /// Maximum number of words in an automorphic orbit search.
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_CAP, value_parser = positive)]
    orbit_cap: usize,
    /// Maximum number of bases examined when looking for an HNN splitting.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = positive)]
    hnn_budget: usize,
    /// Length ball. For `brute` and `certify` the per-coordinate radius
    /// (default |u|+2); for `solve` and `gen` the minimization radius
    /// (default 2|u|+4).
    #[arg(long, global = true)]
    ball: Option<usize>,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, value_parser = positive)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Structured)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Splitting case of F(x,y) relative to w.
    Classify {
        #[arg(long)]
        w: String,
    },
    /// Full description of the solution set.
    Solve {
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
    },
    /// Instantiate solutions from the description.
    Gen {
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
        /// Family member, e.g. `rank1:m=2`, `item1:i=0,n=1`,
        /// `item2:i=0,n=1,m=-1`, `item3:i=0,sigma=dx dy^-1`,
        /// `primitive:z=ab`, `trivial:r=ab,n1=1,n2=0`. Repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Emit every family member with parameters in [-K, K].
        #[arg(long, value_name = "K")]
        sweep: Option<i64>,
    },
    /// Check a candidate pair.
    Verify {
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
        /// `g1,g2`.
        #[arg(long)]
        pair: String,
    },
    /// Every solution in the length ball.
    Brute {
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
    },
    /// Check the description against brute force.
    Certify {
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
    },
    /// The two-level family of solutions of the fixed coefficient equation.
    DemoTwoLevel {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        verify: bool,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Unresolved(_) | Error::BudgetExhausted(_) => EXIT_UNRESOLVED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message,
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }
}

impl Cli {
    fn budgets(&self) -> Budgets {
        Budgets {
            orbit_cap: self.orbit_cap,
            hnn_budget: self.hnn_budget,
            ball: self.ball,
            ..Budgets::default()
        }
    }

    fn equation(&self, w: &str, u: &str) -> Result<EquationInstance, Failure> {
        Ok(EquationInstance::parse(&self.alphabet, w, u)?)
    }

    fn oracle_ball(&self, eq: &EquationInstance) -> BallSpec {
        BallSpec::new(self.ball.unwrap_or(eq.u.len() + 2), eq.alphabet.clone())
    }

    fn structured(&self) -> bool {
        self.format == Format::Structured
    }
}

fn parse_pair(alphabet: &Alphabet, text: &str) -> Result<(Word, Word), Failure> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| usage(format!("expected g1,g2, got {text:?}")))?;
    Ok((alphabet.parse(a.trim())?, alphabet.parse(b.trim())?))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Classify { w } => {
            let w = Alphabet::variables().parse(w)?;
            let case = classify_word(&w, &cli.budgets())?;
            let text = if cli.structured() {
                format::classify_structured(&w, &case)
            } else {
                format!("{w}: {}\n", case.tag())
            };
            let code = if matches!(case, JsjCase::Unresolved(_)) { EXIT_UNRESOLVED } else { 0 };
            Ok(Output { text, code })
        }
        Command::Solve { w, u } => {
            let eq = cli.equation(w, u)?;
            let desc = describe_variety(&eq, &cli.budgets())?;
            let text = if cli.structured() {
                format::variety_structured(&desc)
            } else {
                format::variety_human(&desc)
            };
            let code = if desc.is_unresolved() { EXIT_UNRESOLVED } else { 0 };
            Ok(Output { text, code })
        }
        Command::Gen { w, u, params, sweep } => {
            let eq = cli.equation(w, u)?;
            let desc = describe_variety(&eq, &cli.budgets())?;
            if desc.is_unresolved() {
                return Err(Failure {
                    code: EXIT_UNRESOLVED,
                    message: format!("{}: classification unresolved", eq),
                });
            }
            let mut all = params
                .iter()
                .map(|s| params::parse(s).map_err(usage))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(k) = sweep {
                all.extend(sweep_params(&desc, *k));
            }
            let mut text = String::new();
            if cli.structured() {
                let _ = writeln!(text, "{SCHEMA} gen");
            }
            for p in &all {
                let (g1, g2) = generate_solution(&desc, p)?;
                if cli.structured() {
                    let _ = writeln!(text, "solution: {g1},{g2}");
                } else {
                    let _ = writeln!(text, "x = {g1}, y = {g2}    ({p:?})");
                }
            }
            if cli.structured() {
                text.push_str("end\n");
            }
            Ok(Output::ok(text))
        }
        Command::Verify { w, u, pair } => {
            let eq = cli.equation(w, u)?;
            let (g1, g2) = parse_pair(&eq.alphabet, pair)?;
            let (ok, rank) = verify_solution(&eq, &g1, &g2);
            Ok(Output::ok(format!("{ok} rank={rank}\n")))
        }
        Command::Brute { w, u } => {
            let eq = cli.equation(w, u)?;
            let ball = cli.oracle_ball(&eq);
            let sols = brute_force_solutions(&eq, &ball);
            let text = if cli.structured() {
                format::brute_structured(&eq, ball.max_len, &sols)
            } else {
                let mut t = format!("{} solutions with |x|,|y| <= {}\n", sols.len(), ball.max_len);
                for s in &sols {
                    let _ = writeln!(t, "  x = {}, y = {} (rank {})", s.x, s.y, s.rank);
                }
                t
            };
            Ok(Output::ok(text))
        }
        Command::Certify { w, u } => {
            let eq = cli.equation(w, u)?;
            let budgets = Budgets {
                ball: None,
                ..cli.budgets()
            };
            let desc = describe_variety(&eq, &budgets)?;
            let ball = cli.oracle_ball(&eq);
            let report = certify(&eq, &desc, &ball)?;
            let text = if cli.structured() {
                format::certify_structured(&eq, &report)
            } else {
                format::certify_human(&report)
            };
            let code = if !report.covered() {
                EXIT_UNCOVERED
            } else if desc.is_unresolved() {
                EXIT_UNRESOLVED
            } else {
                0
            };
            Ok(Output { text, code })
        }
        Command::DemoTwoLevel { n, m, verify } => {
            let pair = two_level_family(*n, *m);
            let mut text = String::new();
            if cli.structured() {
                let _ = writeln!(text, "{SCHEMA} demo-two-level");
                let _ = writeln!(text, "n: {n}\nm: {m}");
                let _ = writeln!(text, "pair: {},{}", pair.0, pair.1);
                if *verify {
                    let _ = writeln!(text, "verified: {}", verify_mega(&pair));
                }
                text.push_str("end\n");
            } else {
                let _ = writeln!(text, "x = {}, y = {}", pair.0, pair.1);
                if *verify {
                    let _ = writeln!(text, "verified: {}", verify_mega(&pair));
                }
            }
            Ok(Output::ok(text))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("freeq: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("freeq: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("freeq: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
