use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use scldpc_core::io::{
    detect_format, parse_hs, parse_hx, serialize_hs, serialize_hx, to_alist, Format,
};
use scldpc_core::search::{self as searcher, verify, Checkpoint, Proposal};
use scldpc_core::tanner::{conv_girth_with, OracleConfig};
use scldpc_core::{
    bound, construct_prop1, construct_prop2, exhaustive_min_lh, BoundQuery, Error, Feasibility,
    Mode, PolyMatrix, SearchSpec, SyndromeFormer,
};
use serde_json::json;

use crate::args::*;

pub const EXIT_NEGATIVE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn usage(e: impl ToString) -> Self {
        Self::new(EXIT_USAGE, e.to_string())
    }

    fn data(e: impl ToString) -> Self {
        Self::new(EXIT_DATA, e.to_string())
    }
}

/// Maps a library error from flag-derived input.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams(_) | Error::CapExceeded { .. } => EXIT_USAGE,
            Error::NonCanonical(_) | Error::EmptyMatrix | Error::Parse(_) => EXIT_DATA,
            Error::ResourceLimit { .. } | Error::BudgetExceeded { .. } => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

/// Successful outcome: text for standard output and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

type Run = Result<Outcome, Failure>;

pub fn run(cmd: Command) -> Run {
    match cmd {
        Command::Bound(a) => cmd_bound(&a),
        Command::Convert(a) => cmd_convert(&a),
        Command::Girth(a) => cmd_girth(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Search(a) => cmd_search(&a),
        Command::Construct(a) => cmd_construct(&a),
        Command::Sweep(a) => cmd_sweep(&a),
    }
}

fn weights(a: u32, w: &[u32]) -> Result<Vec<u32>, Failure> {
    match w {
        [w] => Ok(vec![*w; a as usize]),
        list if list.len() == a as usize => Ok(list.to_vec()),
        list => Err(Failure::usage(format!(
            "{} row weights given for a={a}",
            list.len()
        ))),
    }
}

fn cmd_bound(args: &BoundArgs) -> Run {
    let q = BoundQuery {
        a: args.a,
        c: args.c,
        row_weights: weights(args.a, &args.w)?,
        girth: args.g,
    };
    let r = bound(&q)?;
    let na = |v: Option<String>| v.unwrap_or_else(|| "na".into());
    let stdout = format!(
        "L_h_lower={} v_s_lower={} formula={} feasible={}\n",
        na(r.lh_lower.map(|v| v.to_string())),
        na(r.v_s_lower().map(|v| v.to_string())),
        r.formula,
        r.feasibility
    );
    let code = if r.feasibility == Feasibility::Feasible {
        0
    } else {
        EXIT_NEGATIVE
    };
    Ok(Outcome { stdout, code })
}

enum Loaded {
    Hs(SyndromeFormer),
    Hx(PolyMatrix),
}

impl Loaded {
    fn syndrome_former(&self) -> Result<SyndromeFormer, Failure> {
        match self {
            Loaded::Hs(hs) => Ok(hs.clone()),
            Loaded::Hx(p) => p.to_syndrome_former().map_err(Failure::data),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    let text = read_input(&input.input)?;
    let format = match input.format {
        Some(InputFormat::Hs) => Format::Hs,
        Some(InputFormat::Hx) => Format::Hx,
        None => detect_format(&text).ok_or_else(|| {
            Failure::data(format!(
                "{}: cannot tell .hs from .hx (header must have 3 or 2 fields)",
                input.input.display()
            ))
        })?,
    };
    let with_path = |e: Error| Failure::data(format!("{}: {e}", input.input.display()));
    Ok(match format {
        Format::Hs => Loaded::Hs(parse_hs(&text).map_err(with_path)?),
        Format::Hx => Loaded::Hx(parse_hx(&text).map_err(with_path)?),
    })
}

fn write_output(path: Option<&Path>, text: &str) -> Run {
    match path {
        Some(p) => {
            fs::write(p, text)
                .map_err(|e| Failure::new(EXIT_INTERNAL, format!("{}: {e}", p.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text.to_string())),
    }
}

fn cmd_convert(args: &ConvertArgs) -> Run {
    let loaded = load(&args.input)?;
    let to = args.to.unwrap_or(match loaded {
        Loaded::Hs(_) => OutputFormat::Hx,
        Loaded::Hx(_) => OutputFormat::Hs,
    });
    let text = match to {
        OutputFormat::Hs => serialize_hs(&loaded.syndrome_former()?),
        OutputFormat::Hx => match &loaded {
            Loaded::Hs(hs) => serialize_hx(&hs.to_poly()),
            Loaded::Hx(p) => serialize_hx(p),
        },
        OutputFormat::Alist => {
            let hs = loaded.syndrome_former()?;
            let blocks = args.blocks.unwrap_or(hs.m_h() + 1);
            if blocks == 0 {
                return Err(Failure::usage("--blocks must be positive"));
            }
            to_alist(&hs.expand_window(blocks))
        }
    };
    write_output(args.output.as_deref(), &text)
}

fn oracle(workers: usize) -> OracleConfig {
    OracleConfig {
        workers,
        ..OracleConfig::default()
    }
}

fn cmd_girth(args: &GirthArgs) -> Run {
    let hs = load(&args.input)?.syndrome_former()?;
    let g = conv_girth_with(&hs, args.cap, oracle(args.workers))?;
    Ok(Outcome::ok(format!("girth={g}\n")))
}

fn cmd_verify(args: &GirthArgs) -> Run {
    let hs = load(&args.input)?.syndrome_former()?;
    let r = verify(&hs, args.cap, args.workers)?;
    let mut s = String::new();
    let rate = r.rate.map_or_else(|| "na".to_string(), |x| x.to_string());
    let _ = writeln!(
        s,
        "a={} c={} L_h={} m_h={} v_s={} rate={rate}",
        r.a, r.c, r.l_h, r.m_h, r.v_s
    );
    let _ = writeln!(
        s,
        "girth={} girth_differences={} consistent={}",
        r.girth,
        r.girth_differences,
        r.consistent()
    );
    let _ = writeln!(s, "witnesses={}", r.witnesses.len());
    for w in &r.witnesses {
        let _ = writeln!(s, "{}", w.report_line());
    }
    if !r.consistent() {
        return Err(Failure::new(
            EXIT_INTERNAL,
            format!("{s}oracle and difference routes disagree"),
        ));
    }
    Ok(Outcome::ok(s))
}

fn log_lines(checkpoints: &[Checkpoint]) -> String {
    let mut s = String::new();
    for cp in checkpoints {
        let line = json!({
            "candidates": cp.candidates,
            "best_mh": cp.best_mh,
            "elapsed_s": cp.elapsed_s,
        });
        let _ = writeln!(s, "{line}");
    }
    s
}

fn write_log(path: Option<&Path>, checkpoints: &[Checkpoint]) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, log_lines(checkpoints))
            .map_err(|e| Failure::new(EXIT_INTERNAL, format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn cmd_search(args: &SearchArgs) -> Run {
    let mut spec = SearchSpec::new(
        args.c,
        weights(args.a, &args.w)?,
        args.g,
        match args.mode {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Random => Mode::Random,
        },
    );
    spec.proposal = match args.proposal {
        ProposalArg::Uniform => Proposal::Uniform,
        ProposalArg::Greedy => Proposal::Greedy,
    };
    spec.lh_min = args.lh_min;
    spec.lh_max = args.lh_max;
    spec.budget = args.budget;
    spec.seed = args.seed;
    spec.workers = args.workers;
    spec.checkpoint_every = args.checkpoint_every;
    let out = match searcher::search(&spec) {
        Ok(out) => out,
        Err(Error::BudgetExceeded { budget, progress }) => {
            let cp = Checkpoint {
                candidates: progress.candidates,
                best_mh: None,
                elapsed_s: 0.0,
            };
            write_log(args.log.as_deref(), &[cp])?;
            return Err(Error::BudgetExceeded { budget, progress }.into());
        }
        Err(e) => return Err(e.into()),
    };
    write_log(args.log.as_deref(), &out.checkpoints)?;
    let Some(hs) = &out.best else {
        let (lo, hi) = spec.range();
        eprintln!(
            "none found for L_h in [{lo}, {hi}] after {} candidates",
            out.candidates
        );
        return Ok(Outcome {
            stdout: String::new(),
            code: EXIT_NEGATIVE,
        });
    };
    eprintln!(
        "L_h={} m_h={} v_s={} girth={} candidates={} complete={} bound={}",
        hs.l_h(),
        hs.m_h(),
        hs.v_s(),
        out.girth.map_or_else(|| "na".into(), |g| g.to_string()),
        out.candidates,
        out.complete,
        out.bound.map_or_else(|| "na".into(), |b| b.to_string()),
    );
    write_output(args.output.as_deref(), &serialize_hs(hs))
}

fn cmd_construct(args: &ConstructArgs) -> Run {
    let hs = match args.which {
        Construction::Prop1 => construct_prop1(args.a),
        Construction::Prop2 => construct_prop2(args.a),
    }?;
    write_output(args.output.as_deref(), &serialize_hs(&hs))
}

fn cmd_sweep(args: &SweepArgs) -> Run {
    let mut csv = String::from("a,c,bound_Lh,search_Lh,match\n");
    for &c in &args.c {
        for a in args.a.clone() {
            if a <= c {
                continue;
            }
            let q = BoundQuery::regular(a, c, args.w, args.g);
            let lower = bound(&q)?.lh_lower;
            let mut spec = SearchSpec::regular(a, c, args.w, args.g, Mode::Exhaustive);
            // Start below the bound so that the comparison can fail.
            spec.lh_min = Some(args.w.max(c + 1));
            spec.budget = args.budget;
            spec.workers = args.workers;
            let (found, matched) = match exhaustive_min_lh(&spec) {
                Ok(out) => match (out.l_h(), lower) {
                    (Some(l), Some(b)) => (l.to_string(), (l == b).to_string()),
                    (Some(l), None) => (l.to_string(), "na".into()),
                    (None, _) => ("none".into(), "false".into()),
                },
                Err(Error::BudgetExceeded { progress, .. }) => (
                    format!(">={}", progress.completed_below_lh),
                    "budget".into(),
                ),
                Err(e) => return Err(e.into()),
            };
            let b = lower.map_or_else(|| "na".into(), |b| b.to_string());
            let _ = writeln!(csv, "{a},{c},{b},{found},{matched}");
        }
    }
    write_output(args.output.as_deref(), &csv)
}

pub fn emit(out: &Outcome) -> io::Result<()> {
    let mut stdout = io::stdout().lock();
    stdout.write_all(out.stdout.as_bytes())?;
    stdout.flush()
}
