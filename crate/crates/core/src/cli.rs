//! The `brauerlab` command line. All work happens here so the binary is a
//! one-line wrapper and the commands can be driven from tests.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinatorics::{standard_tableaux, two_partitions, Partition};
use crate::diagrams::{enumerate_all, BrauerDiagram, BrauerElement, Generator, IntPolynomial};
use crate::symgroup::Permutation;
use crate::suites::{run_suite, summary, Bounds, Suite};
use crate::tensor::{kernel_phi, verify_kernel_theorem};
use crate::xbasis::x_lambda_t;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Labels {
    /// Top row `1, 3, …, 2n−1`, bottom row `2, 4, …, 2n`.
    Interleaved,
    /// Both rows `1..n`, bottom vertices primed: `(1 2')(2 1')`.
    Rows,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Relations,
    Staraction,
    Xbasis,
    Filtration,
    Kernel,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Staraction => Suite::StarAction,
            SuiteArg::Xbasis => Suite::XBasis,
            SuiteArg::Filtration => Suite::Filtration,
            SuiteArg::Kernel => Suite::Kernel,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "brauerlab", version, about = "Exact computations with Brauer diagrams")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every Brauer n-diagram in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Labels::Interleaved)]
        labels: Labels,
    },
    /// Multiply two diagrams (or generators such as `s1`, `e2`, `id`).
    Mult {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = Labels::Interleaved)]
        labels: Labels,
    },
    /// Apply a permutation of `1..2n` to a diagram by the ∗-action.
    Star {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diagram: String,
        /// One-line images (`2 1 3 4`) or cycles (`(1 2)`).
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Labels::Interleaved)]
        labels: Labels,
    },
    /// The basis elements `X_{λ,t}`, for one even partition or all of them.
    Xbasis {
        #[arg(long)]
        n: usize,
        /// An even partition of 2n such as `4,2`.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// A basis of the annihilator of the symplectic tensor space.
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Also compare the kernel with the filtration module it should equal.
        #[arg(long)]
        check_theorem: bool,
        /// Coordinates as CSV (text format only).
        #[arg(long)]
        csv: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        /// Include the n = 4 filtration and (4, 2) kernel cases.
        #[arg(long)]
        slow: bool,
    },
}

/// What a command produced: exit code and the two streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

type Failure = Box<dyn std::error::Error + Send + Sync>;

struct Produced {
    text: String,
    json: Value,
    pass: bool,
}

fn parse_diagram(text: &str, n: usize, labels: Labels) -> Result<BrauerDiagram, Failure> {
    let t = text.trim();
    if t == "id" || t == "1" {
        return Ok(BrauerDiagram::identity(n));
    }
    if !t.starts_with('(') {
        let g: Generator = t.parse()?;
        return Ok(g.to_diagram(n)?);
    }
    let d = match labels {
        Labels::Interleaved => BrauerDiagram::parse_interleaved(t, Some(n))?,
        Labels::Rows => BrauerDiagram::parse_rows(t, Some(n))?,
    };
    Ok(d)
}

fn show(d: &BrauerDiagram, labels: Labels) -> String {
    match labels {
        Labels::Interleaved => d.to_string(),
        Labels::Rows => d.to_row_string(),
    }
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 || n > 12 {
        return Err(format!("n = {n} is out of range 1..=12").into());
    }
    Ok(())
}

fn pairs_json(d: &BrauerDiagram) -> Value {
    json!(d.pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())
}

fn enumerate(n: usize, labels: Labels) -> Result<Produced, Failure> {
    check_n(n)?;
    if n > 7 {
        return Err(format!("enumerating n = {n} would print too many diagrams").into());
    }
    let all = enumerate_all(n);
    let text = all.iter().map(|d| show(d, labels) + "\n").collect();
    let json = json!({
        "n": n,
        "count": all.len(),
        "diagrams": all.iter().map(pairs_json).collect::<Vec<_>>(),
    });
    Ok(Produced { text, json, pass: true })
}

fn mult(n: usize, lhs: &str, rhs: &str, labels: Labels) -> Result<Produced, Failure> {
    check_n(n)?;
    let a = parse_diagram(lhs, n, labels)?;
    let b = parse_diagram(rhs, n, labels)?;
    let (d, loops) = a.compose(&b)?;
    let element = BrauerElement::from_diagram(d.clone()).scale(&IntPolynomial::x_pow(loops));
    let text = format!("{} loops={loops}\n", show(&d, labels));
    let json = json!({
        "n": n,
        "lhs": pairs_json(&a),
        "rhs": pairs_json(&b),
        "product": pairs_json(&d),
        "loops": loops,
        "element": element.to_json(),
    });
    Ok(Produced { text, json, pass: true })
}

fn star(n: usize, diagram: &str, perm: &str, labels: Labels) -> Result<Produced, Failure> {
    check_n(n)?;
    let d = parse_diagram(diagram, n, labels)?;
    let w = Permutation::parse(perm, 2 * n)?;
    let out = d.star(&w)?;
    let text = format!("{}\n", show(&out, labels));
    let json = json!({"n": n, "permutation": w.images(), "diagram": pairs_json(&d), "result": pairs_json(&out)});
    Ok(Produced { text, json, pass: true })
}

fn xbasis(n: usize, lambda: Option<&str>) -> Result<Produced, Failure> {
    check_n(n)?;
    if n > 5 {
        return Err(format!("n = {n} is too large for a full listing").into());
    }
    let shapes = match lambda {
        Some(s) => {
            let l: Partition = s.parse()?;
            if l.size() != 2 * n || !l.all_parts_even() {
                return Err(format!("lambda = {l} is not an even partition of {}", 2 * n).into());
            }
            vec![l]
        }
        None => two_partitions(n),
    };
    let mut text = String::new();
    let mut items = Vec::new();
    for l in &shapes {
        for t in standard_tableaux(l) {
            let e = x_lambda_t(l, &t)?;
            text.push_str(&format!("lambda=({l}) t={:?}: {}\n", t.rows(), e.value));
            items.push(json!({
                "lambda": l.parts(),
                "tableau": t.rows(),
                "element": e.value.to_json(),
            }));
        }
    }
    let json = json!({"n": n, "count": items.len(), "elements": items});
    Ok(Produced { text, json, pass: true })
}

fn kernel(n: usize, m: usize, check_theorem: bool, csv: bool) -> Result<Produced, Failure> {
    check_n(n)?;
    if m == 0 {
        return Err("m must be positive".into());
    }
    let k = kernel_phi(n, m)?;
    let mut json = k.to_json();
    let mut text = if csv {
        k.to_csv()
    } else {
        let mut t = format!("kernel n={n} m={m} dimension={} phi_rank={}\n", k.dimension(), k.phi_rank);
        for v in &k.vectors {
            t.push_str(&format!("{v}\n"));
        }
        t
    };
    let mut pass = true;
    if check_theorem {
        let r = verify_kernel_theorem(n, m)?;
        pass = r.pass;
        if !csv {
            text.push_str(&r.text_line());
            text.push('\n');
        }
        json["report"] = r.to_json();
    }
    Ok(Produced { text, json, pass })
}

fn verify(suite: Suite, bounds: Bounds) -> Result<Produced, Failure> {
    let reports = run_suite(suite, bounds)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    let mut text: String = reports.iter().map(|r| r.text_line() + "\n").collect();
    text.push_str(&format!(
        "suite {suite}: {} checks, {failed} failed\n",
        reports.len()
    ));
    Ok(Produced {
        text,
        json: summary(suite, &reports),
        pass: failed == 0,
    })
}

fn dispatch(cmd: &Command) -> Result<Produced, Failure> {
    match cmd {
        Command::Enumerate { n, labels } => enumerate(*n, *labels),
        Command::Mult { n, lhs, rhs, labels } => mult(*n, lhs, rhs, *labels),
        Command::Star { n, diagram, perm, labels } => star(*n, diagram, perm, *labels),
        Command::Xbasis { n, lambda } => xbasis(*n, lambda.as_deref()),
        Command::Kernel { n, m, check_theorem, csv } => kernel(*n, *m, *check_theorem, *csv),
        Command::Verify { suite, max_n, max_m, slow } => verify(
            (*suite).into(),
            Bounds {
                max_n: *max_n,
                max_m: *max_m,
                slow: *slow,
            },
        ),
    }
}

fn wants_json(args: &[OsString]) -> bool {
    args.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

fn error_outcome(message: &str, json_mode: bool) -> Outcome {
    let line = message.lines().next().unwrap_or("error").trim().to_string();
    if json_mode {
        Outcome {
            code: 2,
            stdout: json!({"error": line, "exit_code": 2}).to_string() + "\n",
            stderr: String::new(),
        }
    } else {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", line.trim_start_matches("error: ")),
        }
    }
}

/// Parses arguments (the first is the program name) and runs the command.
/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_mode = wants_json(&args);
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            return error_outcome(&e.to_string(), json_mode);
        }
    };
    let json_mode = cli.format == Format::Json;
    let produced = match dispatch(&cli.command) {
        Ok(p) => p,
        Err(e) => return error_outcome(&e.to_string(), json_mode),
    };
    let body = match cli.format {
        Format::Text => produced.text,
        Format::Json => {
            serde_json::to_string_pretty(&produced.json).expect("values serialize") + "\n"
        }
    };
    let code = if produced.pass { 0 } else { 1 };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => error_outcome(&format!("cannot write {}: {e}", path.display()), json_mode),
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}
