//! Command-line front end: parse, rewrite, compare and typecheck objects,
//! translate them to proof nets, and run the property drivers.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lmcalc::equiv::{self, Bounds, EquivResult};
use lmcalc::gen::Gen;
use lmcalc::harness::{self, Report};
use lmcalc::lmu::sigma_instances;
use lmcalc::ppn;
use lmcalc::reduce::{self, Mode};
use lmcalc::typing::{self, NameCtx, VarCtx};
use lmcalc::{parse_object, Object};

#[derive(Parser)]
#[command(name = "lmtool", version, about = "Lambda-mu with explicit substitutions and replacements")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Plain,
    Refined,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Plain => Mode::Plain,
            ModeArg::Refined => Mode::Refined,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NfArg {
    None,
    Mult,
    Full,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 20_000)]
    max_states: usize,
    #[arg(long, default_value_t = 12)]
    max_depth: usize,
}

impl SearchArgs {
    fn bounds(&self) -> Bounds {
        Bounds { max_states: self.max_states, max_depth: self.max_depth }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 12)]
    size: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an object and print it with its sort.
    Parse { obj: String },
    /// Print the canonical form.
    Canon {
        obj: String,
        #[arg(long)]
        trace: bool,
    },
    /// List every one-step reduct.
    Step {
        obj: String,
        #[arg(long, value_enum, default_value = "plain")]
        mode: ModeArg,
    },
    /// Reduce to normal form, leftmost-outermost.
    Reduce {
        obj: String,
        #[arg(long, value_enum, default_value = "plain")]
        mode: ModeArg,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long)]
        trace: bool,
    },
    /// List the meaningful reducts of the canonical form.
    Meaningful { obj: String },
    /// List the single sigma rewrites.
    Sigma { obj: String },
    /// Search for an equivalence certificate between two objects.
    Equiv {
        left: String,
        right: String,
        /// Also use the renaming axiom.
        #[arg(long)]
        ren: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Typecheck an annotated object.
    Typecheck {
        obj: String,
        /// Types of free identifiers, as `x:A, 'a:B -> C`.
        #[arg(long, default_value = "")]
        env: String,
        #[arg(long)]
        trace: bool,
    },
    /// Translate a typed object to a proof net.
    Ppn {
        obj: String,
        #[arg(long, default_value = "")]
        env: String,
        #[arg(long, value_enum, default_value = "none")]
        nf: NfArg,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Write the net in DOT format to this file (`-` for stdout).
        #[arg(long)]
        dot: Option<String>,
    },
    /// Check proof-net simulation on generated reduction steps.
    Simcheck {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Check the bisimulation property on two objects, or on generated pairs.
    BisimCheck {
        left: Option<String>,
        right: Option<String>,
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Check that generated typed terms have a unique normal form.
    ConfluenceCheck {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 10_000)]
        max_states: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Print generated typed terms, one `env |- object` per line.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 1)]
        cases: usize,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn object(src: &str) -> Result<Object, Failure> {
    parse_object(src).map_err(|e| usage(format!("{:?}: {}", src, e)))
}

fn env(src: &str) -> Result<(VarCtx, NameCtx), Failure> {
    typing::parse_env(src).map_err(usage)
}

fn report(rep: &Report, trace: bool) -> Outcome {
    println!("{}", rep.summary());
    let shown = if trace { rep.failures.len() } else { rep.failures.len().min(5) };
    for f in &rep.failures[..shown] {
        println!("  {}", f.trim_end().replace('\n', "\n  "));
    }
    if shown < rep.failures.len() {
        println!("  ... {} more (use --trace)", rep.failures.len() - shown);
    }
    if rep.passed() {
        println!("PASS");
        Ok(())
    } else {
        println!("FAIL");
        Err(Failure::Violation(format!("{} failures", rep.failures.len())))
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Parse { obj } => {
            let o = object(&obj)?;
            println!("{}", o);
            println!("sort: {:?}, size: {}", o.sort(), o.size());
        }
        Cmd::Canon { obj, trace } => {
            let (c, steps) = reduce::canon_traced(&object(&obj)?);
            if trace {
                for s in &steps {
                    println!("{}", s);
                }
            }
            println!("{}", c);
        }
        Cmd::Step { obj, mode } => {
            let o = object(&obj)?;
            for (r, p) in reduce::redexes(&o, mode.into()) {
                let q = reduce::lm_step(&o, r, &p).map_err(|e| Failure::Violation(e.to_string()))?;
                println!("{} @ {} \u{21d2} {}", r, p, q);
            }
        }
        Cmd::Reduce { obj, mode, budget, trace } => {
            let (nf, steps) =
                reduce::reduce_to_nf(&object(&obj)?, budget, mode.into()).map_err(|e| Failure::Violation(e.to_string()))?;
            if trace {
                for s in &steps {
                    println!("{}", s);
                }
            }
            println!("{}", nf);
        }
        Cmd::Meaningful { obj } => {
            let c = reduce::canon(&object(&obj)?);
            for (r, p, q) in reduce::meaningful_reducts(&c) {
                println!("{} @ {} \u{21d2} {}", r, p, q);
            }
        }
        Cmd::Sigma { obj } => {
            for s in sigma_instances(&object(&obj)?) {
                let dir = if s.left_to_right { "+" } else { "-" };
                println!("{}{} @ {} \u{21d2} {}", s.kind, dir, s.path, s.result);
            }
        }
        Cmd::Equiv { left, right, ren, search } => {
            let (o, p) = (object(&left)?, object(&right)?);
            match equiv::equiv(&o, &p, search.bounds(), ren) {
                EquivResult::Equivalent(c) => {
                    equiv::check_certificate(&c, &p, ren).map_err(|e| Failure::Violation(e.to_string()))?;
                    println!("EQUIVALENT");
                    println!("{}", c.start);
                    print!("{}", c);
                }
                EquivResult::Exhausted { states } | EquivResult::Unknown { states } => {
                    println!("NOT-WITHIN-BOUNDS ({} states)", states);
                    return Err(Failure::Violation("no certificate".into()));
                }
            }
        }
        Cmd::Typecheck { obj, env: e, trace } => {
            let o = object(&obj)?;
            let (g, d) = env(&e)?;
            let der = typing::check(&o, &g, &d).map_err(|e| Failure::Violation(e.to_string()))?;
            if trace {
                print_derivation(&der, 0);
            } else {
                println!("{}", der.judgment());
            }
        }
        Cmd::Ppn { obj, env: e, nf, budget, dot } => {
            let o = object(&obj)?;
            let (g, d) = env(&e)?;
            let der = typing::check(&o, &g, &d).map_err(|e| Failure::Violation(e.to_string()))?;
            let mut net = ppn::translate(&der);
            let steps = match nf {
                NfArg::None => 0,
                NfArg::Mult => ppn::mult_nf(&mut net),
                NfArg::Full => ppn::full_nf(&mut net, budget).map_err(|e| Failure::Violation(e.to_string()))?,
            };
            net.validate().map_err(|e| Failure::Violation(e.to_string()))?;
            let net = net.compact();
            println!("nodes: {}, cuts: {}, cut steps: {}", net.node_count(), net.cut_count(), steps);
            for (l, w) in net.conclusions() {
                println!("conclusion {:?}: {}", l, net.wire(w).formula);
            }
            match dot.as_deref() {
                None => {}
                Some("-") => print!("{}", ppn::dot::to_dot(&net)),
                Some(path) => std::fs::write(path, ppn::dot::to_dot(&net)).map_err(usage)?,
            }
        }
        Cmd::Simcheck { gen, cases, budget, trace } => {
            report(&harness::ppn_simulation(gen.seed, cases, gen.size, budget), trace)?;
        }
        Cmd::BisimCheck { left, right, gen, cases, search, trace } => match (left, right) {
            (Some(l), Some(r)) => {
                let (o, p) = (reduce::canon(&object(&l)?), reduce::canon(&object(&r)?));
                let mut rep = Report::new("bisimulation");
                rep.cases = 1;
                match harness::bisim_pair(&o, &p, search.bounds()) {
                    Ok(n) => rep.notes.push(format!("{} steps matched", n)),
                    Err(e) => rep.failures.push(e),
                }
                report(&rep, trace)?;
            }
            (None, None) => report(&harness::bisim_check(gen.seed, cases, gen.size, search.bounds()), trace)?,
            _ => return Err(usage("bisim-check takes two objects or none")),
        },
        Cmd::ConfluenceCheck { gen, cases, max_states, trace } => {
            report(&harness::confluence_check(gen.seed, cases, gen.size, max_states), trace)?;
        }
        Cmd::Gen { gen, cases } => {
            let mut g = Gen::new(gen.seed);
            for _ in 0..cases {
                let t = g.typed_term(gen.size);
                let mut env: Vec<String> = t.gamma.iter().map(|(x, ty)| format!("{}:{}", x, ty)).collect();
                env.extend(t.delta.iter().map(|(a, ty)| format!("{}:{}", a, ty)));
                println!("{} |- {}", env.join(", "), t.obj);
            }
        }
    }
    Ok(())
}

fn print_derivation(d: &typing::Derivation, depth: usize) {
    println!("{}{:?}  {}", "  ".repeat(depth), d.rule, d.judgment());
    for p in &d.premises {
        print_derivation(p, depth + 1);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(m)) => {
            eprintln!("lmtool: {}", m);
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("lmtool: {}", m);
            ExitCode::from(2)
        }
    }
}
