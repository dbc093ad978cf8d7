//! The `qschubert` command line.

pub mod cache;
pub mod render;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qschubert::fusion::{fusion_product, verify_quantum_vs_fusion, CharacterTable};
use qschubert::verify::{run_all, SweepReport};
use qschubert::{
    belkale_default, belkale_reduce, classical_product, dmax_slide, dmin, lr_coefficient, maximal_squares, quantum_lr,
    BelkaleReduction, BoxShape, BoxedPartition, Error, Partition, QuantumClass, QuantumRing, Result,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use cache::Cache;
use render::{ProductDoc, ShapeDoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Parser, Debug)]
#[command(name = "qschubert", version, about = "Quantum Schubert calculus on Grassmannians")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Report tool version and timing (on stderr, or as a `meta` field in JSON).
    #[arg(long, global = true)]
    meta: bool,
    /// Worker threads for parallel commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct PairArgs {
    /// Grassmannian `Gr(k,n)` as `k,n`.
    #[arg(long)]
    shape: BoxShape,
    /// First partition, e.g. `5,4,4,3` (`0` for the empty partition).
    #[arg(long)]
    lambda: Partition,
    /// Second partition.
    #[arg(long)]
    mu: Partition,
}

impl PairArgs {
    fn boxed(&self) -> Result<(BoxShape, BoxedPartition, BoxedPartition)> {
        let s = self.shape;
        Ok((s, s.boxed(self.lambda.clone())?, s.boxed(self.mu.clone())?))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quantum product σ_λ * σ_μ.
    Qprod(PairArgs),
    /// Classical product σ_λ · σ_μ.
    Cprod(PairArgs),
    /// A single Littlewood-Richardson number; quantum when --shape is given.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        shape: Option<BoxShape>,
        /// Power of q (requires --shape).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Smallest power of q in the product.
    Dmin(PairArgs),
    /// Largest power of q in the product, cross-checked by the torus slide.
    Dmax(PairArgs),
    /// Maximal squares inside λ and outside the dual of μ.
    Squares(PairArgs),
    /// Belkale's reduction of the minimal term.
    Belkale {
        #[command(flatten)]
        pair: PairArgs,
        /// Top row of the square to use (default: the first along λ's path).
        #[arg(long, requires = "col")]
        row: Option<usize>,
        #[arg(long, requires = "row")]
        col: Option<usize>,
    },
    /// Fusion-ring product, or a full comparison with the quantum ring.
    Fusion {
        #[arg(long)]
        shape: BoxShape,
        #[arg(long, required_unless_present = "verify")]
        lambda: Option<Partition>,
        #[arg(long, required_unless_present = "verify")]
        mu: Option<Partition>,
        #[arg(long, conflicts_with_all = ["lambda", "mu"])]
        verify: bool,
    },
    /// Every product of two Schubert classes.
    Table {
        #[arg(long)]
        shape: BoxShape,
    },
    /// Runs every invariant sweep.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Seed for the sampled associativity triples.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// A rendered result in all three formats.
struct Doc {
    plain: String,
    json: Value,
    latex: String,
    ok: bool,
}

impl Doc {
    fn new(plain: String, json: Value, latex: String) -> Self {
        Doc { plain, json, latex, ok: true }
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

fn shape_json(s: BoxShape) -> Value {
    to_value(ShapeDoc::from(s))
}

fn cached_product(cache: &mut Option<Cache>, l: &BoxedPartition, m: &BoxedPartition) -> Result<QuantumClass> {
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(l, m)) {
        return Ok(hit.clone());
    }
    let p = qschubert::quantum_product(l.shape(), l, m)?;
    if let Some(c) = cache {
        c.insert(l, m, &p);
    }
    Ok(p)
}

fn save(cache: &mut Option<Cache>) {
    if let Some(c) = cache {
        if let Err(e) = c.save() {
            eprintln!("warning: could not write cache {}: {e}", c.path().display());
        }
    }
}

fn product_doc(p: &QuantumClass) -> Doc {
    Doc::new(render::plain_class(p), to_value(ProductDoc::from_class(p)), render::latex_class(p))
}

fn number_doc(shape: Option<BoxShape>, field: &str, latex: &str, value: impl ToString) -> Doc {
    let v = value.to_string();
    let number: serde_json::Number = v.parse().expect("integer");
    let mut obj = serde_json::Map::new();
    if let Some(s) = shape {
        obj.insert("shape".into(), shape_json(s));
    }
    obj.insert(field.into(), Value::Number(number));
    Doc::new(v.clone(), Value::Object(obj), format!("{latex} = {v}"))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SquareDoc {
    size: usize,
    row: usize,
    col: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BelkaleDoc {
    shape: ShapeDoc,
    d: usize,
    square: Option<SquareDoc>,
    a: usize,
    b: usize,
    lambda_prime: Vec<usize>,
    mu_prime: Vec<usize>,
}

fn belkale_doc(shape: BoxShape, r: &BelkaleReduction) -> Doc {
    let json = to_value(BelkaleDoc {
        shape: shape.into(),
        d: r.d,
        square: r.square.map(|s| SquareDoc { size: s.size, row: s.row, col: s.col }),
        a: r.a,
        b: r.b,
        lambda_prime: render::parts_json(r.lambda_prime.partition()),
        mu_prime: render::parts_json(r.mu_prime.partition()),
    });
    let latex = format!(
        "d = {}, a = {}, b = {}, \\lambda' = {}, \\mu' = {}",
        r.d,
        r.a,
        r.b,
        r.lambda_prime.partition(),
        r.mu_prime.partition()
    );
    Doc::new(serde_json::to_string(&json).expect("json"), json, latex)
}

fn sweep_json(r: &SweepReport) -> Value {
    json!({
        "name": r.name,
        "checked": r.checked,
        "failed": r.failed,
        "note": r.note,
        "examples": r.examples,
    })
}

/// Recomputes every cached product.
fn verify_cache(cache: &Cache) -> SweepReport {
    let entries: Vec<_> = cache.entries().collect();
    let failures: Vec<String> = entries
        .par_iter()
        .filter_map(|(l, m, p)| match qschubert::quantum_product(l.shape(), l, m) {
            Ok(fresh) if fresh == **p => None,
            Ok(fresh) => Some(format!("{} {l}*{m}: cached {p}, computed {fresh}", l.shape())),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    SweepReport {
        name: "cache entries".into(),
        checked: entries.len(),
        failed: failures.len(),
        examples: failures.into_iter().take(qschubert::verify::MAX_EXAMPLES).collect(),
        note: Some(cache.path().display().to_string()),
    }
}

fn execute(cli: &Cli) -> Result<Doc> {
    match &cli.command {
        Command::Qprod(args) => {
            let (_, l, m) = args.boxed()?;
            let mut cache = Cache::from_env();
            let p = cached_product(&mut cache, &l, &m)?;
            save(&mut cache);
            Ok(product_doc(&p))
        }
        Command::Cprod(args) => {
            let (s, l, m) = args.boxed()?;
            let c = classical_product(s, &l, &m)?;
            Ok(Doc::new(
                render::plain_combination(render::classical_terms(&c)),
                to_value(ProductDoc::from_classical(s, &c)),
                render::latex_combination(render::classical_terms(&c)),
            ))
        }
        Command::Lr { lambda, mu, nu, shape, degree } => match shape {
            None if degree.is_some() => Err(Error::InvalidInput("--degree needs --shape".into())),
            None => Ok(number_doc(None, "coeff", "c", lr_coefficient(lambda, mu, nu))),
            Some(s) => {
                let b = |p: &Partition| s.boxed(p.clone());
                let c = quantum_lr(*s, &b(lambda)?, &b(mu)?, &b(nu)?, degree.unwrap_or(0))?;
                Ok(number_doc(Some(*s), "coeff", "c", c))
            }
        },
        Command::Dmin(args) => {
            let (s, l, m) = args.boxed()?;
            Ok(number_doc(Some(s), "dmin", "d_{\\min}", dmin(s, &l, &m)?))
        }
        Command::Dmax(args) => {
            let (s, l, m) = args.boxed()?;
            Ok(number_doc(Some(s), "dmax", "d_{\\max}", dmax_slide(s, &l, &m)?))
        }
        Command::Squares(args) => {
            let (s, l, m) = args.boxed()?;
            let squares = maximal_squares(s, &l, &m)?;
            let plain = if squares.is_empty() {
                "none".to_string()
            } else {
                let lines: Vec<String> =
                    squares.iter().map(|q| format!("size={} row={} col={}", q.size, q.row, q.col)).collect();
                lines.join("\n")
            };
            let latex = squares
                .iter()
                .map(|q| format!("{0}\\times{0} \\text{{ at }} ({1},{2})", q.size, q.row, q.col))
                .collect::<Vec<_>>()
                .join(",\\ ");
            let docs: Vec<SquareDoc> =
                squares.iter().map(|q| SquareDoc { size: q.size, row: q.row, col: q.col }).collect();
            let json = json!({ "shape": shape_json(s), "squares": docs });
            Ok(Doc::new(plain, json, if latex.is_empty() { "\\emptyset".into() } else { latex }))
        }
        Command::Belkale { pair, row, col } => {
            let (s, l, m) = pair.boxed()?;
            let r = match (row, col) {
                (Some(row), Some(col)) => {
                    let squares = maximal_squares(s, &l, &m)?;
                    let sq = squares
                        .iter()
                        .find(|q| q.row == *row && q.col == *col)
                        .ok_or_else(|| Error::InvalidInput(format!("no maximal square at ({row},{col})")))?;
                    belkale_reduce(s, &l, &m, sq)?
                }
                _ => belkale_default(s, &l, &m)?,
            };
            Ok(belkale_doc(s, &r))
        }
        Command::Fusion { shape, lambda, mu, verify } => {
            if *verify {
                let r = verify_quantum_vs_fusion(*shape)?;
                let plain = format!(
                    "{}: {} pairs, {} mismatches, max residual {:.1e}",
                    r.shape,
                    r.pairs,
                    r.mismatches.len(),
                    r.max_residual.max(r.max_rounding)
                );
                let json = json!({
                    "shape": shape_json(*shape),
                    "pairs": r.pairs,
                    "mismatches": r.mismatches.len(),
                    "maxResidual": r.max_residual,
                    "maxRounding": r.max_rounding,
                });
                let latex = format!("\\text{{{plain}}}");
                return Ok(Doc::new(plain, json, latex));
            }
            let (l, m) = (lambda.clone().expect("required"), mu.clone().expect("required"));
            let (l, m) = (shape.boxed(l)?, shape.boxed(m)?);
            let table = CharacterTable::new(*shape)?;
            let f = fusion_product(&table, &l, &m)?;
            let terms: Vec<Value> = render::fusion_terms(&f.coefficients)
                .map(|(nu, c)| json!({ "nu": render::parts_json(nu), "coeff": c.parse::<serde_json::Number>().expect("integer") }))
                .collect();
            Ok(Doc::new(
                render::plain_combination(render::fusion_terms(&f.coefficients)),
                json!({ "shape": shape_json(*shape), "terms": terms }),
                render::latex_combination(render::fusion_terms(&f.coefficients)),
            ))
        }
        Command::Table { shape } => {
            let s = *shape;
            let all = s.partitions();
            let mut cache = Cache::from_env();
            let ring = QuantumRing::new(s);
            let pairs: Vec<(&BoxedPartition, &BoxedPartition)> =
                all.iter().flat_map(|l| all.iter().map(move |m| (l, m))).collect();
            let products: Vec<QuantumClass> = pairs
                .par_iter()
                .map(|(l, m)| match cache.as_ref().and_then(|c| c.get(l, m)) {
                    Some(hit) => Ok(hit.clone()),
                    None => ring.product(l, m).map(|p| (*p).clone()),
                })
                .collect::<Result<_>>()?;
            if let Some(c) = &mut cache {
                for ((l, m), p) in pairs.iter().zip(&products) {
                    c.insert(l, m, p);
                }
            }
            save(&mut cache);
            let mut plain = Vec::new();
            let mut latex = Vec::new();
            let mut rows = Vec::new();
            for ((l, m), p) in pairs.iter().zip(&products) {
                let (lp, mp) = (l.partition(), m.partition());
                plain.push(format!("{} * {} = {p}", render::plain_partition(lp), render::plain_partition(mp)));
                latex.push(format!("\\sigma_{{{lp}}} * \\sigma_{{{mp}}} &= {} \\\\", render::latex_class(p)));
                let doc = ProductDoc::from_class(p);
                rows.push(json!({
                    "lambda": render::parts_json(lp),
                    "mu": render::parts_json(mp),
                    "terms": doc.terms,
                }));
            }
            Ok(Doc::new(plain.join("\n"), json!({ "shape": shape_json(s), "products": rows }), latex.join("\n")))
        }
        Command::Selftest { max_n, seed } => {
            if *max_n < 2 {
                return Err(Error::InvalidInput("--max-n must be at least 2".into()));
            }
            let mut reports = run_all(*max_n, *seed);
            if let Some(cache) = Cache::from_env().filter(|c| !c.is_empty()) {
                reports.push(verify_cache(&cache));
            }
            let checks: usize = reports.iter().map(|r| r.checked).sum();
            let failures: usize = reports.iter().map(|r| r.failed).sum();
            let failed_sweeps = reports.iter().filter(|r| !r.passed()).count();
            let summary =
                format!("selftest (n <= {max_n}): {} sweeps, {checks} checks, {failures} failures", reports.len());
            let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            lines.push(summary.clone());
            let json = json!({
                "maxN": max_n,
                "sweeps": reports.iter().map(sweep_json).collect::<Vec<_>>(),
                "checks": checks,
                "failures": failures,
            });
            let mut doc = Doc::new(lines.join("\n"), json, format!("\\text{{{summary}}}"));
            doc.ok = failed_sweeps == 0;
            Ok(doc)
        }
    }
}

/// Exit status for an error: 2 invalid input, 3 inconsistency or numerical
/// failure, 4 resource limit.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) => 2,
        Error::Inconsistency(_) | Error::Numerical(_) => 3,
        Error::ResourceLimit(_) => 4,
    }
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return 2;
        }
        // Fails only when a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let start = Instant::now();
    let doc = match execute(&cli) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let elapsed = start.elapsed();
    let out = match cli.format {
        Format::Plain => doc.plain,
        Format::Latex => doc.latex,
        Format::Json => {
            let mut json = doc.json;
            if cli.meta {
                if let Value::Object(obj) = &mut json {
                    obj.insert(
                        "meta".into(),
                        json!({ "version": env!("CARGO_PKG_VERSION"), "elapsedMs": elapsed.as_millis() as u64 }),
                    );
                }
            }
            serde_json::to_string(&json).expect("json")
        }
    };
    println!("{out}");
    if cli.meta && cli.format != Format::Json {
        eprintln!("qschubert {} in {} ms", env!("CARGO_PKG_VERSION"), elapsed.as_millis());
    }
    if doc.ok {
        0
    } else {
        3
    }
}
