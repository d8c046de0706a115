use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crystal_embed::crystal::{generate_graph, Cartan, CartanType, Crystal, GraphError, GraphOptions, HalfWeight};
use crystal_embed::embedding::Pipeline;
use crystal_embed::json::Element;
use crystal_embed::lusztig::{phi_lambda, FoldedDatum, LusztigModel};
use crystal_embed::verify::{self, SuiteReport};
use crystal_embed::weyl::weyl_dim;

const EXIT_FAIL: u8 = 1;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "crystal-embed",
    version,
    about = "Crystals of types B and C: KN tableaux, spinor and Verma models, Lusztig data"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Ty {
    B,
    C,
}

impl From<Ty> for CartanType {
    fn from(t: Ty) -> Self {
        match t {
            Ty::B => CartanType::B,
            Ty::C => CartanType::C,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Kn,
    Spinor,
    Verma,
    Lusztig,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Map {
    Psi,
    Theta,
    Phi,
    Xi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "paper-examples")]
    WorkedExamples,
    Oracle,
    Morphism,
    Lusztig,
    Structural,
    All,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    ty: Ty,
    #[arg(long)]
    n: usize,
    /// Comma-separated parts; half-integers (e.g. 3/2) select a spin shape.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    lambda: String,
    /// Add a spin column (type B).
    #[arg(long)]
    spin: bool,
    #[arg(long, value_enum)]
    model: Model,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = 1_000_000)]
    cap: usize,
    /// Depth bound, required for the infinite Verma and Lusztig crystals.
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate the crystal graph of a model from its highest weight element.
    Enumerate(EnumerateArgs),
    /// Apply one of the maps to an element or to every node of a graph.
    Map {
        #[arg(long, value_enum)]
        which: Map,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Restrict to one type (default: both).
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: Option<Ty>,
        /// Restrict to one rank (default: 2 and 3; up to 4 for Lusztig data).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        max_cols: usize,
        /// Seed for randomized checks (default: CRYSTAL_EMBED_SEED or a fixed value).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
        /// Number of random data per Lusztig check.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Dimension of the irreducible module by the Weyl formula.
    Dim {
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: Ty,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        spin: bool,
    },
}

/// Parses `λ` as `(μ, spin)`: all parts integers, or all parts in `ℤ + 1/2`.
fn parse_lambda(s: &str, n: usize, ty: CartanType, spin_flag: bool) -> Result<(Vec<usize>, bool)> {
    let mut doubled = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let d = if let Some((num, den)) = part.split_once('/') {
            let num: i64 = num.trim().parse().with_context(|| format!("bad part `{part}`"))?;
            match den.trim() {
                "2" => num,
                "1" => 2 * num,
                _ => bail!("bad part `{part}`: only halves are allowed"),
            }
        } else if let Some(int) = part.strip_suffix(".5") {
            2 * int.parse::<i64>().with_context(|| format!("bad part `{part}`"))? + 1
        } else {
            2 * part.parse::<i64>().with_context(|| format!("bad part `{part}`"))?
        };
        if d < 0 {
            bail!("parts of λ must be non-negative");
        }
        doubled.push(d);
    }
    let half = doubled.iter().any(|d| d % 2 == 1);
    if half {
        if doubled.len() != n || doubled.iter().any(|d| d % 2 == 0) {
            bail!("a spin weight needs exactly n parts, all in ℤ + 1/2");
        }
        if spin_flag {
            bail!("give either half-integer parts or --spin, not both");
        }
    }
    let spin = half || spin_flag;
    if spin && ty != CartanType::B {
        bail!("spin weights exist only in type B");
    }
    let mut mu: Vec<usize> = doubled.iter().map(|d| (d / 2) as usize).collect();
    while mu.last() == Some(&0) {
        mu.pop();
    }
    if mu.len() > n || mu.windows(2).any(|w| w[0] < w[1]) {
        bail!("λ must be a partition with at most n parts");
    }
    Ok((mu, spin))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, format!("{text}\n")).with_context(|| format!("cannot write {}", path.display()))
}

fn cap_or<T>(r: std::result::Result<T, GraphError>) -> Result<T> {
    r.map_err(anyhow::Error::new)
}

fn render<C: Crystal>(
    model: &C,
    seed: C::Elem,
    opts: GraphOptions,
    format: Format,
    node: impl Fn(&C::Elem) -> Value,
) -> Result<String> {
    let g = cap_or(generate_graph(model, seed, opts))?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&g.to_json(node))?,
        Format::Dot => g.to_dot(|b| model.label(b)),
    })
}

fn enumerate(args: &EnumerateArgs) -> Result<String> {
    let EnumerateArgs { n, ref lambda, spin, model, format, cap, depth, .. } = *args;
    let ty: CartanType = args.ty.into();
    if n == 0 {
        bail!("n must be positive");
    }
    let (mu, spin) = parse_lambda(lambda, n, ty, spin)?;
    let p = Pipeline::new(ty, n, &mu, spin);
    let opts = GraphOptions { cap, max_depth: depth, lowering_only: false };
    match model {
        Model::Kn => render(&p.kn, p.kn.highest(), opts, format, |t| Element::Kn(p.kn.clone(), t.clone()).to_json()),
        Model::Spinor => render(&p.spinor, p.spinor.highest(), opts, format, |t| {
            Element::Spinor(p.spinor.clone(), t.clone()).to_json()
        }),
        Model::Verma => {
            if depth.is_none() {
                bail!("the Verma crystal is infinite; pass --depth");
            }
            render(&p.verma, p.verma.highest(), opts, format, |v| Element::Verma(p.verma.clone(), v.clone()).to_json())
        }
        Model::Lusztig => {
            if depth.is_none() {
                bail!("the Lusztig crystal is infinite; pass --depth");
            }
            let lm = LusztigModel::new(Cartan::new(ty, n));
            render(&lm, FoldedDatum::zero(n), opts, format, |d| Element::Lusztig(lm, d.clone()).to_json())
        }
    }
}

fn apply(which: Map, e: Element) -> Result<Element> {
    let wrong =
        |e: &Element, want: &str| anyhow::anyhow!("this map takes a `{want}` element, got `{}`", e.model_name());
    let pipeline = |c: Cartan, mu: &[usize], spin: bool| Pipeline::new(c.ty, c.n, mu, spin);
    Ok(match (which, e) {
        (Map::Psi, Element::Kn(m, t)) => {
            let p = pipeline(m.cartan, &m.mu, m.spin);
            Element::Spinor(p.spinor.clone(), p.psi(&t)?)
        }
        (Map::Theta, Element::Spinor(m, t)) => {
            let p = pipeline(m.cartan, &m.mu(), m.spin);
            Element::Verma(p.verma.clone(), p.theta(&t)?)
        }
        (Map::Phi, Element::Verma(m, v)) => {
            Element::Lusztig(LusztigModel::new(m.cartan), phi_lambda(m.cartan.ty, m.cartan.n, &v)?)
        }
        (Map::Xi, Element::Kn(m, t)) => {
            let p = pipeline(m.cartan, &m.mu, m.spin);
            Element::Lusztig(p.lusztig, p.xi(&t)?)
        }
        (Map::Psi | Map::Xi, e) => return Err(wrong(&e, "kn")),
        (Map::Theta, e) => return Err(wrong(&e, "spinor")),
        (Map::Phi, e) => return Err(wrong(&e, "verma")),
    })
}

fn map(which: Map, input: &Path) -> Result<String> {
    let text = fs::read_to_string(input).with_context(|| format!("cannot read {}", input.display()))?;
    let v: Value = serde_json::from_str(&text).context("input is not valid JSON")?;
    let out = if let Some(nodes) = v.get("nodes").and_then(Value::as_array) {
        let mapped = nodes
            .iter()
            .enumerate()
            .map(|(k, node)| {
                let e = Element::from_json(node).with_context(|| format!("node {k}"))?;
                Ok(apply(which, e).with_context(|| format!("node {k}"))?.to_json())
            })
            .collect::<Result<Vec<_>>>()?;
        json!({"nodes": mapped, "edges": v.get("edges").cloned().unwrap_or(json!([])), "root": v.get("root").cloned().unwrap_or(json!(0))})
    } else {
        apply(which, Element::from_json(&v)?)?.to_json()
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

fn verify_cmd(
    suite: Suite,
    ty: Option<Ty>,
    n: Option<usize>,
    max_cols: usize,
    seed: u64,
    cap: usize,
    samples: usize,
) -> SuiteReport {
    let types: Vec<CartanType> = match ty {
        Some(t) => vec![t.into()],
        None => vec![CartanType::B, CartanType::C],
    };
    let ranks: Vec<usize> = n.map_or(vec![2, 3], |n| vec![n]);
    let want = |s: Suite| suite == s || suite == Suite::All;
    let mut rep = SuiteReport::default();
    if want(Suite::WorkedExamples) {
        rep.extend(verify::worked_examples());
    }
    for &t in &types {
        for &n in &ranks {
            if want(Suite::Oracle) {
                rep.extend(verify::oracle(t, n, max_cols, cap));
            }
            if want(Suite::Morphism) {
                rep.extend(verify::morphisms(t, n, max_cols, cap));
            }
            if want(Suite::Structural) {
                rep.extend(verify::structural(t, n, max_cols, cap, seed));
            }
        }
    }
    if want(Suite::Lusztig) {
        match n {
            Some(n) => {
                for &t in &types {
                    rep.run(format!("Lusztig {t}{n}, {samples} random data"), || {
                        verify::lusztig_properties(t, n, samples, seed)
                    });
                }
            }
            None => rep.extend(verify::lusztig_suite(&types, 4, samples, seed)),
        }
    }
    rep
}

fn dim(ty: CartanType, n: usize, lambda: &str, spin: bool) -> Result<u128> {
    if n == 0 {
        bail!("n must be positive");
    }
    let (mu, spin) = parse_lambda(lambda, n, ty, spin)?;
    let mut w = HalfWeight::zero(n);
    for (k, &m) in mu.iter().enumerate() {
        w.add_doubled(k + 1, 2 * m as i32);
    }
    if spin {
        w = &w + &HalfWeight::half_sum(n, 1);
    }
    Ok(weyl_dim(ty, &w))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Enumerate(args) => match enumerate(&args) {
            Ok(text) => write(&args.out, &text)?,
            Err(e) if e.downcast_ref::<GraphError>().is_some() => {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(EXIT_CAP));
            }
            Err(e) => return Err(e),
        },
        Cmd::Map { which, input, out } => write(&out, &map(which, &input)?)?,
        Cmd::Verify { suite, ty, n, max_cols, seed, cap, samples } => {
            let seed = seed.unwrap_or_else(verify::env_seed);
            let rep = verify_cmd(suite, ty, n, max_cols, seed, cap, samples);
            println!("{rep}");
            if rep.cap_exceeded() {
                eprintln!("error: node cap {cap} exceeded; raise --cap or lower --max-cols");
                return Ok(ExitCode::from(EXIT_CAP));
            }
            if !rep.passed() {
                return Ok(ExitCode::from(EXIT_FAIL));
            }
        }
        Cmd::Dim { ty, n, lambda, spin } => println!("{}", dim(ty.into(), n, &lambda, spin)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
