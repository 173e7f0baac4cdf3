//! Argument parsing and subcommand dispatch for the `hgpoly` binary.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgpoly_core::betti::pd_reg_depth;
use hgpoly_core::enumerate::PolyKind;
use hgpoly_core::reconstruct::{
    check_deck, reconstruct_f_vector, reconstruct_hilbert, reconstruct_multigraded_betti, reconstruct_p, reconstruct_s,
};
use hgpoly_core::stanley_reisner::{h_vector, SrInvariants};
use hgpoly_core::{BiPoly, Deck, Hypergraph, Limits};
use serde_json::{json, Value};

use crate::corpus::load_corpus;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::io::{read_hypergraph, write_hypergraph};
use crate::json::{betti_to_json, bigints_to_json, bipoly_to_json, unipoly_to_json};
use crate::report;
use crate::text::betti_table;
use crate::verify::{verify, Selection, Status};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

/// Name of the environment variable holding limit flags, e.g. `--n-max 20`.
pub const LIMITS_ENV: &str = "HGPOLY_LIMITS";

#[derive(Parser, Debug)]
#[command(
    name = "hgpoly",
    version,
    about = "Subhypergraph polynomials, Stanley-Reisner invariants and deck reconstruction"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest vertex or edge count for subset sweeps.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: Option<u64>,
    /// Largest vertex count for homology computations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub homology_n_max: Option<u64>,
    /// Split sweeps and Hochster subproblems across threads.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyArg {
    /// Edge-induced polynomial.
    #[value(name = "S", alias = "s")]
    S,
    /// Vertex-induced polynomial.
    #[value(name = "P", alias = "p")]
    P,
}

impl PolyArg {
    fn kind(self) -> PolyKind {
        match self {
            PolyArg::S => PolyKind::EdgeInduced,
            PolyArg::P => PolyKind::VertexInduced,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "P", alias = "p")]
    P,
    Fvector,
    Hilbert,
    Betti,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// One hypergraph file (JSON or line format).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// A directory of hypergraph files.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print S_H or P_H.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        poly: PolyArg,
    },
    /// K-polynomial, reduced Hilbert series and Hilbert function.
    Hilbert {
        #[arg(long)]
        input: PathBuf,
        /// Highest degree k of the Hilbert function to print.
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Face counts of the independence complex, starting with the empty face.
    Fvector {
        #[arg(long)]
        input: PathBuf,
    },
    Hvector {
        #[arg(long)]
        input: PathBuf,
    },
    /// Graded and multigraded Betti numbers of the edge ideal quotient.
    Betti {
        #[arg(long)]
        input: PathBuf,
    },
    /// Write the vertex-deleted cards as card_00.json, card_01.json, ...
    Deck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Rebuild an invariant from a directory of cards.
    Reconstruct {
        #[arg(long)]
        deck: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Check the identity suite; exits 1 if any identity fails.
    Verify {
        #[command(flatten)]
        source: Source,
        /// 4.2, 2.3, 3.2, 4.3, all, or an identity name.
        #[arg(long, default_value = "all")]
        identity: Selection,
    },
    /// Every invariant as one JSON document.
    Report {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
}

/// Reads `--n-max` and `--homology-n-max` from the environment value.
pub fn parse_env_limits(value: &str) -> Result<(Option<usize>, Option<usize>)> {
    let mut tokens = value.split_whitespace();
    let (mut n_max, mut homology) = (None, None);
    while let Some(tok) = tokens.next() {
        let (flag, inline) = match tok.split_once('=') {
            Some((f, v)) => (f, Some(v)),
            None => (tok, None),
        };
        let raw = match inline {
            Some(v) => v,
            None => tokens.next().ok_or_else(|| Error::Limits(format!("{flag} needs a value")))?,
        };
        let v: usize = raw.parse().map_err(|_| Error::Limits(format!("{flag}: {raw:?} is not a count")))?;
        if v == 0 {
            return Err(Error::Limits(format!("{flag} must be positive")));
        }
        match flag {
            "--n-max" => n_max = Some(v),
            "--homology-n-max" => homology = Some(v),
            other => return Err(Error::Limits(format!("unknown flag {other:?} in {LIMITS_ENV}"))),
        }
    }
    Ok((n_max, homology))
}

/// Flags win over the environment, which wins over the defaults.
pub fn resolve_limits(cli: &Cli, env: Option<&str>) -> Result<Limits> {
    let (env_n, env_h) = match env {
        Some(v) => parse_env_limits(v)?,
        None => (None, None),
    };
    Ok(Limits {
        enumerate_max: cli.n_max.map(|v| v as usize).or(env_n).unwrap_or(Limits::DEFAULT_ENUMERATE_MAX),
        homology_max: cli.homology_n_max.map(|v| v as usize).or(env_h).unwrap_or(Limits::DEFAULT_HOMOLOGY_MAX),
    })
}

struct Output {
    text: String,
    verified: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, verified: true }
    }
}

fn render(format: Format, value: Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n",
        Format::Text => text(),
    }
}

fn join(v: &[impl ToString]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn sources(source: &Source) -> Result<Vec<(PathBuf, Hypergraph)>> {
    match (&source.input, &source.corpus) {
        (Some(p), _) => Ok(vec![(p.clone(), read_hypergraph(p)?)]),
        (None, Some(dir)) => load_corpus(dir),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn load_deck(dir: &Path) -> Result<Deck> {
    let cards = load_corpus(dir)?.into_iter().map(|(_, h)| h).collect();
    let deck = Deck::from_cards(cards)?;
    check_deck(&deck)?;
    Ok(deck)
}

fn write_poly(format: Format, name: &str, p: &BiPoly) -> String {
    render(format, json!({ "poly": name, "terms": bipoly_to_json(p) }), || format!("{p}\n"))
}

fn execute(cli: &Cli, limits: Limits) -> Result<Output> {
    let engine = Engine::new(limits, cli.parallel);
    let format = cli.format;
    Ok(match &cli.command {
        Command::Compute { input, poly } => {
            let h = read_hypergraph(input)?;
            let p = engine.poly(poly.kind(), &h)?;
            Output::ok(write_poly(format, if *poly == PolyArg::S { "S" } else { "P" }, &p))
        }
        Command::Hilbert { input, terms } => {
            let h = read_hypergraph(input)?;
            let sr = SrInvariants::compute(&h, &limits)?;
            let hf = sr.hilbert_function(*terms);
            let value = json!({
                "k_polynomial": unipoly_to_json(&sr.k_polynomial),
                "reduced_numerator": unipoly_to_json(&sr.reduced.numerator),
                "reduced_denominator_power": sr.reduced.denominator_power,
                "krull_dim": sr.krull_dim,
                "multiplicity": sr.multiplicity.to_string(),
                "hilbert_function": bigints_to_json(&hf),
            });
            Output::ok(render(format, value, || {
                let mut s = String::new();
                let _ = writeln!(s, "K(t) = {}", sr.k_polynomial);
                let _ = writeln!(s, "H(t) = ({}) / (1 - t)^{}", sr.reduced.numerator, sr.reduced.denominator_power);
                let _ = writeln!(s, "krull dimension = {}", sr.krull_dim);
                let _ = writeln!(s, "multiplicity = {}", sr.multiplicity);
                let _ = writeln!(s, "hilbert function (k = 0..{terms}): {}", join(&hf));
                s
            }))
        }
        Command::Fvector { input } => {
            let h = read_hypergraph(input)?;
            let sr = SrInvariants::compute(&h, &limits)?;
            Output::ok(render(format, json!({ "f_vector": bigints_to_json(&sr.f) }), || format!("{}\n", join(&sr.f))))
        }
        Command::Hvector { input } => {
            let h = read_hypergraph(input)?;
            let sr = SrInvariants::compute(&h, &limits)?;
            let value = json!({ "h_vector": bigints_to_json(&sr.h), "krull_dim": sr.krull_dim });
            Output::ok(render(format, value, || format!("{}\n", join(&sr.h))))
        }
        Command::Betti { input } => {
            let h = read_hypergraph(input)?;
            let table = engine.betti(&h)?;
            let inv = pd_reg_depth(&table, h.n());
            let mut value = betti_to_json(&table, h.vertices());
            value["projective_dimension"] = json!(inv.projective_dimension);
            value["regularity"] = json!(inv.regularity);
            value["ideal_regularity"] = json!(inv.ideal_regularity());
            value["depth"] = json!(inv.depth);
            Output::ok(render(format, value, || {
                let mut s = betti_table(&table);
                let _ = writeln!(s, "projective dimension = {}", inv.projective_dimension);
                let _ = writeln!(s, "regularity = {} (quotient ring)", inv.regularity);
                match inv.ideal_regularity() {
                    Some(r) => {
                        let _ = writeln!(s, "regularity = {r} (edge ideal)");
                    }
                    None => s.push_str("regularity undefined (zero edge ideal)\n"),
                }
                let _ = writeln!(s, "depth = {}", inv.depth);
                for (&(i, b), &v) in &table.multigraded {
                    let _ = writeln!(s, "b({i}, {{{}}}) = {v}", h.labels_of(b).join(","));
                }
                s
            }))
        }
        Command::Deck { input, out_dir } => {
            let h = read_hypergraph(input)?;
            fs::create_dir_all(out_dir).map_err(|source| Error::Io { path: out_dir.clone(), source })?;
            let width = h.n().saturating_sub(1).to_string().len().max(2);
            let mut written = Vec::new();
            for (l, card) in h.deck().cards().iter().enumerate() {
                let path = out_dir.join(format!("card_{l:0width$}.json"));
                write_hypergraph(&path, card)?;
                written.push(path.display().to_string());
            }
            Output::ok(render(format, json!({ "cards": written }), || {
                format!("wrote {} cards to {}\n", written.len(), out_dir.display())
            }))
        }
        Command::Reconstruct { deck, target, terms } => {
            let deck = load_deck(deck)?;
            let n = deck.origin_n();
            let text = match target {
                Target::S => {
                    let s = reconstruct_s(&engine.deck_polys(&deck, PolyKind::EdgeInduced)?, n)?;
                    write_poly(format, "S", &s)
                }
                Target::P => {
                    let p = reconstruct_p(&engine.deck_polys(&deck, PolyKind::VertexInduced)?, n)?;
                    write_poly(format, "P", &p)
                }
                Target::Fvector => {
                    let f = reconstruct_f_vector(&deck, &limits)?;
                    let d = f.len() - 1;
                    let h = h_vector(&f, d)?;
                    let value =
                        json!({ "f_vector": bigints_to_json(&f), "h_vector": bigints_to_json(&h), "krull_dim": d });
                    render(format, value, || format!("f = {}\nh = {}\n", join(&f), join(&h)))
                }
                Target::Hilbert => {
                    let hf = reconstruct_hilbert(&deck, *terms, &limits)?;
                    render(format, json!({ "hilbert_function": bigints_to_json(&hf) }), || format!("{}\n", join(&hf)))
                }
                Target::Betti => {
                    let partial = reconstruct_multigraded_betti(&deck, &limits)?;
                    let labels = deck.parent_labels()?;
                    let mut value = betti_to_json(&partial.table, &labels);
                    let unknown: Vec<Vec<&str>> =
                        partial.unknown.iter().map(|b| b.iter().map(|v| labels[v].as_str()).collect()).collect();
                    value["unknown"] = json!(unknown);
                    render(format, value, || {
                        let mut s = betti_table(&partial.table);
                        s.push_str("entries with |B| = n are not determined by the deck\n");
                        for (&(i, b), &v) in &partial.table.multigraded {
                            let names: Vec<&str> = b.iter().map(|x| labels[x].as_str()).collect();
                            let _ = writeln!(s, "b({i}, {{{}}}) = {v}", names.join(","));
                        }
                        s
                    })
                }
            };
            Output::ok(text)
        }
        Command::Verify { source, identity } => {
            let inputs = sources(source)?;
            let many = source.corpus.is_some();
            let mut verified = true;
            let mut lines = Vec::new();
            let mut text = String::new();
            for (path, h) in &inputs {
                for o in verify(&engine, h, &identity.0)? {
                    verified &= !matches!(o.status, Status::Failed(_));
                    let (status, detail) = match &o.status {
                        Status::Passed => ("pass", None),
                        Status::Failed(d) => ("fail", Some(d.clone())),
                        Status::Skipped(d) => ("skip", Some(d.clone())),
                    };
                    lines.push(json!({
                        "file": path.display().to_string(),
                        "identity": o.identity.name(),
                        "status": status,
                        "detail": detail,
                    }));
                    if many {
                        let _ = write!(text, "{}: ", path.display());
                    }
                    let _ = writeln!(text, "{o}");
                }
            }
            Output { text: render(format, json!({ "results": lines, "passed": verified }), || text), verified }
        }
        Command::Report { source, terms } => {
            let inputs = sources(source)?;
            let mut verified = true;
            let mut docs = Vec::new();
            for (path, h) in &inputs {
                let r = report::build(&engine, h, *terms)?;
                verified &= r.all_consistent();
                docs.push((path.display().to_string(), r));
            }
            // a report is a JSON document in either format
            let text = if source.corpus.is_some() {
                let all: Vec<Value> = docs.iter().map(|(f, r)| json!({ "file": f, "report": r })).collect();
                serde_json::to_string_pretty(&all).expect("reports serialize")
            } else {
                docs[0].1.to_json()
            };
            Output { text: text + "\n", verified }
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    if e.is_limit() {
        EXIT_LIMIT
    } else {
        EXIT_INPUT
    }
}

/// Runs the command line `args` and returns the process exit code.
pub fn run<I, T>(args: I, env_limits: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = resolve_limits(&cli, env_limits).and_then(|limits| execute(&cli, limits));
    match result {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            if output.verified {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
