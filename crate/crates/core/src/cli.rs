//! The `idealcx` command line.
//!
//! Exit codes: 0 computed, 1 negative decision (not a member, word not
//! trivial), 2 usage or parse error, 3 budget exhausted (partial results are
//! still printed and flagged).

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::area::{area_exact, verify_certificate, AreaCertificate, Pruning, SearchConfig};
use crate::complexity::{complexity_table, EnumerationBudget};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::io::{parse_ideal, read_ideal_file};
use crate::metabelian::{
    collect, dehn_datapoint, is_trivial, word_from_poly, DehnRecord, GroupWord, Ordering,
};
use crate::poly::{Mode, Poly, Ring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "idealcx",
    version,
    about = "Ideal membership, area and complexity over Z[x] and Z[x^±]"
)]
pub struct Cli {
    /// Accepted for harness compatibility; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IdealSource {
    /// Ideal file: header `mode=polynomial|laurent vars=k`, then one generator per line.
    #[arg(long, value_name = "FILE", conflicts_with = "ideal_text")]
    pub ideal: Option<PathBuf>,
    /// The same format inline, lines separated by `;`.
    #[arg(long, value_name = "TEXT")]
    pub ideal_text: Option<String>,
}

impl IdealSource {
    fn load(&self) -> Result<Ideal> {
        match (&self.ideal, &self.ideal_text) {
            (Some(p), _) => read_ideal_file(p),
            (None, Some(t)) => parse_ideal(t),
            (None, None) => Err(Error::Invalid(
                "one of --ideal or --ideal-text is required".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PruningArg {
    None,
    Connectivity,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderingArg {
    Input,
    Greedy,
}

impl From<OrderingArg> for Ordering {
    fn from(o: OrderingArg) -> Self {
        match o {
            OrderingArg::Input => Ordering::Input,
            OrderingArg::Greedy => Ordering::Greedy,
        }
    }
}

#[derive(Debug, Args)]
pub struct AreaBudget {
    #[arg(long, default_value_t = 24)]
    pub max_area: usize,
    #[arg(long, default_value_t = 0)]
    pub radius_slack: u64,
    #[arg(long, value_enum, default_value_t = PruningArg::None)]
    pub pruning: PruningArg,
}

impl AreaBudget {
    fn config(&self) -> Result<SearchConfig> {
        if self.max_area == 0 {
            return Err(Error::Invalid("--max-area must be positive".into()));
        }
        Ok(SearchConfig {
            max_area: self.max_area,
            radius_slack: self.radius_slack,
            pruning: match self.pruning {
                PruningArg::None => Pruning::None,
                PruningArg::Connectivity => Pruning::Connectivity,
            },
            ..SearchConfig::default()
        })
    }
}

#[derive(Debug, Args)]
pub struct TableBudget {
    #[arg(long, default_value_t = 2_000_000)]
    pub max_candidates: usize,
    /// Area budget per member.
    #[arg(long, default_value_t = 24)]
    pub max_area: usize,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub seconds: Option<u64>,
}

impl TableBudget {
    fn budget(&self) -> Result<EnumerationBudget> {
        if self.max_candidates == 0 || self.max_area == 0 || self.seconds == Some(0) {
            return Err(Error::Invalid("budgets must be positive".into()));
        }
        Ok(EnumerationBudget {
            max_candidates: self.max_candidates,
            max_area: self.max_area,
            wall_clock: self.seconds.map(Duration::from_secs),
        })
    }

    fn json(&self) -> Value {
        json!({
            "max_candidates": self.max_candidates,
            "max_area": self.max_area,
            "seconds": self.seconds,
        })
    }

    fn text(&self) -> String {
        let secs = self.seconds.map_or("none".to_string(), |s| format!("{s}s"));
        format!(
            "budget: max_candidates={} max_area={} wall_clock={secs}",
            self.max_candidates, self.max_area
        )
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a polynomial lies in the ideal.
    Member {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// Normal form modulo a Gröbner basis of the ideal.
    Nf {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// Cofactors over the given generators and the area bound they imply.
    Represent {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// Exact minimal area with a certificate.
    Area {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        budget: AreaBudget,
        #[command(flatten)]
        out: Output,
    },
    /// Table of C(m, n) for 1 ≤ m ≤ M, 1 ≤ n ≤ N.
    Table {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        max_m: u64,
        #[arg(long)]
        max_n: u64,
        /// Also write the table as CSV (`-` for standard output).
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[command(flatten)]
        budget: TableBudget,
        #[command(flatten)]
        out: Output,
    },
    /// The group word of a Laurent polynomial.
    Word {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value_t = OrderingArg::Greedy)]
        ordering: OrderingArg,
        #[command(flatten)]
        out: Output,
    },
    /// Wreath normal form (f, q) of a group word.
    Collect {
        #[arg(long)]
        word: String,
        #[arg(long)]
        vars: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Whether a group word is trivial in the metabelian group of the ideal.
    Trivial {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        out: Output,
    },
    /// Dehn function lower-bound datapoints at (m, n), or (m, 1..=N).
    Dehn {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        m: u64,
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        n: Option<u64>,
        #[arg(long)]
        max_n: Option<u64>,
        #[command(flatten)]
        budget: TableBudget,
        #[command(flatten)]
        out: Output,
    },
}

/// What an invocation printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Self {
        Outcome { code, stdout }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            Outcome::new(code, e.render().to_string())
        }
    }
}

pub fn execute(cmd: &Command) -> Outcome {
    match dispatch(cmd) {
        Ok(o) => o,
        Err(e) => {
            let code = match e {
                Error::BudgetExceeded(_) | Error::RadiusExhausted { .. } => EXIT_BUDGET,
                Error::NotMember => EXIT_NEGATIVE,
                _ => EXIT_USAGE,
            };
            let json = match cmd {
                Command::Member { out, .. }
                | Command::Nf { out, .. }
                | Command::Represent { out, .. }
                | Command::Area { out, .. }
                | Command::Table { out, .. }
                | Command::Word { out, .. }
                | Command::Collect { out, .. }
                | Command::Trivial { out, .. }
                | Command::Dehn { out, .. } => out.json,
            };
            let body = if json {
                pretty(&json!({ "error": e.to_string(), "exit_code": code }))
            } else {
                format!("error: {e}\n")
            };
            Outcome::new(code, body)
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn generators(ideal: &Ideal) -> Value {
    ideal.generators().iter().map(|g| g.to_string()).collect()
}

fn ideal_json(ideal: &Ideal) -> Value {
    json!({
        "mode": ideal.ring().mode.to_string(),
        "vars": ideal.ring().nvars,
        "generators": generators(ideal),
    })
}

fn certificate_json(c: &AreaCertificate) -> Value {
    c.entries()
        .iter()
        .map(|e| {
            json!({
                "generator": e.generator + 1,
                "sign": if e.sign == crate::area::Sign::Plus { "+" } else { "-" },
                "shift": e.shift.entries(),
            })
        })
        .collect()
}

fn check_vars(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Invalid("--vars must be at least 1".into()));
    }
    Ok(())
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Member { src, poly, out } => {
            let ideal = src.load()?;
            let g = Poly::parse(poly, ideal.ring())?;
            let yes = ideal.is_member(&g)?;
            let code = if yes { EXIT_OK } else { EXIT_NEGATIVE };
            let body = if out.json {
                pretty(&json!({
                    "command": "member",
                    "ideal": ideal_json(&ideal),
                    "poly": g.to_string(),
                    "member": yes,
                }))
            } else if yes {
                "member: true\n".to_string()
            } else {
                format!("member: false\n{g} reduces to a nonzero normal form modulo {ideal}\n")
            };
            Ok(Outcome::new(code, body))
        }
        Command::Nf { src, poly, out } => {
            let ideal = src.load()?;
            let g = Poly::parse(poly, ideal.ring())?;
            let nf = ideal.normal_form(&g)?;
            let rem = match ideal.ring().mode {
                Mode::Polynomial => nf.remainder.clone(),
                Mode::Laurent => nf.remainder.unlift(ideal.ring())?,
            };
            let basis: Vec<String> = ideal
                .groebner()?
                .elements()
                .iter()
                .map(|b| b.to_string())
                .collect();
            let body = if out.json {
                pretty(&json!({
                    "command": "nf",
                    "ideal": ideal_json(&ideal),
                    "poly": g.to_string(),
                    "normal_form": rem.to_string(),
                    "member": nf.remainder.is_zero(),
                    "engine_basis": basis,
                    "order": ideal.groebner()?.order().to_string(),
                }))
            } else {
                format!("normal form: {rem}\n")
            };
            Ok(Outcome::new(EXIT_OK, body))
        }
        Command::Represent { src, poly, out } => {
            let ideal = src.load()?;
            let g = Poly::parse(poly, ideal.ring())?;
            let rep = match ideal.representation(&g) {
                Ok(r) => r,
                Err(Error::NotMember) => {
                    let body = if out.json {
                        pretty(
                            &json!({"command": "represent", "poly": g.to_string(), "member": false}),
                        )
                    } else {
                        format!("member: false\n{g} has no representation over {ideal}\n")
                    };
                    return Ok(Outcome::new(EXIT_NEGATIVE, body));
                }
                Err(e) => return Err(e),
            };
            let hs: Vec<String> = rep.cofactors.iter().map(|h| h.to_string()).collect();
            let body = if out.json {
                pretty(&json!({
                    "command": "represent",
                    "poly": g.to_string(),
                    "member": true,
                    "cofactors": hs,
                    "area_bound": rep.area_bound.to_string(),
                }))
            } else {
                let mut s = String::new();
                for (i, h) in hs.iter().enumerate() {
                    s.push_str(&format!("h{} = {h}\n", i + 1));
                }
                s.push_str(&format!("area bound: {}\n", rep.area_bound));
                s
            };
            Ok(Outcome::new(EXIT_OK, body))
        }
        Command::Area {
            src,
            poly,
            budget,
            out,
        } => {
            let ideal = src.load()?;
            let cfg = budget.config()?;
            let g = Poly::parse(poly, ideal.ring())?;
            let budget_json = json!({
                "max_area": cfg.max_area,
                "radius_slack": cfg.radius_slack,
                "pruning": format!("{:?}", cfg.pruning).to_lowercase(),
            });
            let budget_text = format!(
                "budget: max_area={} radius_slack={} pruning={:?}",
                cfg.max_area, cfg.radius_slack, cfg.pruning
            )
            .to_lowercase();
            match area_exact(&g, &ideal, &cfg) {
                Ok(cert) => {
                    let v = verify_certificate(&cert, &ideal);
                    let body =
                        if out.json {
                            pretty(&json!({
                                "command": "area",
                                "poly": g.to_string(),
                                "member": true,
                                "area": cert.area(),
                                "certificate": certificate_json(&cert),
                                "degree_bound": {
                                    "max_cofactor_degree": v.max_cofactor_degree.finite(),
                                    "limit": v.degree_limit,
                                    "holds": v.degree_bound_holds,
                                },
                                "budget": budget_json,
                            }))
                        } else {
                            format!(
                            "area: {}\n{}degree bound: max deg h = {} <= {}: {}\n{budget_text}\n",
                            cert.area(),
                            cert.to_text(),
                            v.max_cofactor_degree.finite().map_or("-inf".into(), |d| d.to_string()),
                            v.degree_limit,
                            v.degree_bound_holds
                        )
                        };
                    Ok(Outcome::new(EXIT_OK, body))
                }
                Err(Error::NotMember) => {
                    let body = if out.json {
                        pretty(
                            &json!({"command": "area", "poly": g.to_string(), "member": false, "budget": budget_json}),
                        )
                    } else {
                        format!("member: false\n{g} is not in {ideal}, so it has no area\n")
                    };
                    Ok(Outcome::new(EXIT_NEGATIVE, body))
                }
                Err(e @ (Error::BudgetExceeded(_) | Error::RadiusExhausted { .. })) => {
                    let body = if out.json {
                        pretty(&json!({
                            "command": "area",
                            "poly": g.to_string(),
                            "member": true,
                            "error": e.to_string(),
                            "budget": budget_json,
                        }))
                    } else {
                        format!("member: true\nerror: {e}\n{budget_text}\n")
                    };
                    Ok(Outcome::new(EXIT_BUDGET, body))
                }
                Err(e) => Err(e),
            }
        }
        Command::Table {
            src,
            max_m,
            max_n,
            csv,
            budget,
            out,
        } => {
            let ideal = src.load()?;
            let b = budget.budget()?;
            let table = complexity_table(&ideal, *max_m, *max_n, &b)?;
            let exact = table.cells.iter().all(|c| c.exact);
            let csv_text = table.to_csv()?;
            let mut body = String::new();
            match csv {
                Some(p) if p.as_os_str() == "-" => body.push_str(&csv_text),
                Some(p) => std::fs::write(p, &csv_text)
                    .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
                None => {}
            }
            if out.json {
                body.push_str(&pretty(&json!({
                    "command": "table",
                    "ideal": ideal_json(&ideal),
                    "exact": exact,
                    "budget": budget.json(),
                    "rows": table.to_json(),
                })));
            } else if !matches!(csv, Some(p) if p.as_os_str() == "-") {
                for c in &table.cells {
                    let flag = if c.exact { "" } else { " (lower bound)" };
                    body.push_str(&format!(
                        "C({}, {}) = {}{flag}  witness {}  candidates {}\n",
                        c.m, c.n, c.value, c.witness, c.candidates
                    ));
                }
                body.push_str(&budget.text());
                body.push('\n');
            }
            Ok(Outcome::new(
                if exact { EXIT_OK } else { EXIT_BUDGET },
                body,
            ))
        }
        Command::Word {
            poly,
            vars,
            ordering,
            out,
        } => {
            check_vars(*vars)?;
            let g = Poly::parse(poly, Ring::laurent(*vars))?;
            let w = word_from_poly(&g, (*ordering).into());
            let body = if out.json {
                pretty(&json!({
                    "command": "word",
                    "poly": g.to_string(),
                    "ordering": format!("{ordering:?}").to_lowercase(),
                    "word": w.to_string(),
                    "length": w.len(),
                }))
            } else {
                format!("{w}\nlength: {}\n", w.len())
            };
            Ok(Outcome::new(EXIT_OK, body))
        }
        Command::Collect { word, vars, out } => {
            check_vars(*vars)?;
            let w = GroupWord::parse(word, *vars)?;
            let c = collect(&w);
            let body = if out.json {
                pretty(&json!({
                    "command": "collect",
                    "word": w.to_string(),
                    "f": c.f.to_string(),
                    "q": c.q.entries(),
                }))
            } else {
                format!("f = {}\nq = {}\n", c.f, c.q)
            };
            Ok(Outcome::new(EXIT_OK, body))
        }
        Command::Trivial { src, word, out } => {
            let ideal = src.load()?;
            let w = GroupWord::parse(word, ideal.ring().nvars)?;
            let yes = is_trivial(&w, &ideal)?;
            let c = collect(&w);
            let body = if out.json {
                pretty(&json!({
                    "command": "trivial",
                    "word": w.to_string(),
                    "trivial": yes,
                    "f": c.f.to_string(),
                    "q": c.q.entries(),
                }))
            } else if yes {
                "trivial: true\n".to_string()
            } else if !c.q.is_zero() {
                format!("trivial: false\nthe word translates by q = {}\n", c.q)
            } else {
                format!("trivial: false\nf = {} is not in {ideal}\n", c.f)
            };
            Ok(Outcome::new(
                if yes { EXIT_OK } else { EXIT_NEGATIVE },
                body,
            ))
        }
        Command::Dehn {
            src,
            m,
            n,
            max_n,
            budget,
            out,
        } => {
            let ideal = src.load()?;
            let b = budget.budget()?;
            let ns: Vec<u64> = match (n, max_n) {
                (Some(n), _) => vec![*n],
                (None, Some(big)) => (1..=*big).collect(),
                (None, None) => unreachable!("clap requires --n or --max-n"),
            };
            let mut rows = Vec::new();
            for n in ns {
                rows.push(dehn_datapoint(&ideal, *m, n, &b)?);
            }
            let exact = rows.iter().all(|r| r.exact);
            let body = if out.json {
                let recs: Vec<DehnRecord> = rows.iter().map(DehnRecord::from).collect();
                pretty(&json!({
                    "command": "dehn",
                    "ideal": ideal_json(&ideal),
                    "exact": exact,
                    "budget": budget.json(),
                    "rows": recs,
                }))
            } else {
                let mut s = String::new();
                for r in &rows {
                    let flag = if r.exact { "" } else { " (lower bound)" };
                    s.push_str(&format!(
                        "m={} n={} L={} bound={}{flag}  witness {}  word {}\n",
                        r.m, r.n, r.length, r.bound, r.witness, r.word
                    ));
                }
                s.push_str(&budget.text());
                s.push('\n');
                s
            };
            Ok(Outcome::new(
                if exact { EXIT_OK } else { EXIT_BUDGET },
                body,
            ))
        }
    }
}
