//! Single binary exposing every operation: `cartan`, `roots`, `weyl`, `lie`,
//! `weights`, `module`, `group` and `check` subcommands with text or JSON
//! output.
//!
//! Exit codes: 0 on success (and on all checks passing), 1 on a check
//! failure, 2 on usage errors (including invalid input files).

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use chevalier::{json as fmt_json, verify};
use chevalier_core::cartan::CartanMatrix;
use chevalier_core::canbasis::LieAlgebraData;
use chevalier_core::chevgroup;
use chevalier_core::exact::{int, Gfp, Int, IntPoly, Rat, SparseMat};
use chevalier_core::roots::RootSystem;
use chevalier_core::weights::{self, RepModule};
use chevalier_core::weyl::{self, WeylPerm};

#[derive(Parser)]
#[command(name = "chevalier", version, about = "Exact root systems, Weyl groups, Lie algebras and Chevalley groups from a Cartan matrix")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate and classify a generalized Cartan matrix
    Cartan(CartanCmd),
    /// Generate the root system
    Roots(RootsCmd),
    /// Weyl group computations on the root permutation representation
    Weyl(WeylCmd),
    /// The Lie algebra model, canonical basis and structure constants
    Lie(LieCmd),
    /// Weight-lattice combinatorics
    Weights(WeightsCmd),
    /// Representation modules with admissible lattices
    Module(ModuleCmd),
    /// Chevalley group generator matrices
    Group(GroupCmd),
    /// Run verification suites
    Check(CheckCmd),
}

#[derive(Args, Clone)]
struct Source {
    /// Standard type, lowercase family and rank ("g2", "e8", "a3")
    #[arg(long = "type", value_name = "TYPE")]
    type_: Option<String>,
    /// JSON file with {"cartan": [[...]]}
    #[arg(long, value_name = "FILE", conflicts_with = "type_")]
    matrix: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<CartanMatrix> {
        match (&self.type_, &self.matrix) {
            (Some(t), None) => {
                let (family, rank) = CartanMatrix::parse_type(t)
                    .ok_or_else(|| anyhow!("unrecognized type {t:?}"))?;
                CartanMatrix::standard(family, rank)
                    .map_err(|e| anyhow!("no standard matrix for {t:?}: {e}"))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let value: Value = serde_json::from_str(&text)
                    .with_context(|| format!("parsing {}", path.display()))?;
                fmt_json::cartan_from_json(&value)
            }
            _ => bail!("exactly one of --type or --matrix is required"),
        }
    }

    fn roots(&self) -> Result<RootSystem> {
        RootSystem::generate(self.load()?).map_err(|e| anyhow!("{e}"))
    }

    fn algebra(&self) -> Result<LieAlgebraData> {
        LieAlgebraData::build(self.load()?).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Args)]
struct CartanCmd {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RootsCmd {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WeylCmd {
    #[command(flatten)]
    source: Source,
    /// Group order via a stabilizer chain
    #[arg(long)]
    order: bool,
    /// Enumerate one reduced word per element up to this length
    #[arg(long, value_name = "MAXLEN")]
    allwords: Option<usize>,
    /// Enumerate reduced words for the whole group
    #[arg(long)]
    allwords_full: bool,
    /// Reduced word of the permutation given as a 1-based image tuple
    #[arg(long, value_name = "TUPLE")]
    permword: Option<String>,
    /// Permutation tuple of a generator word like "2,1"
    #[arg(long, value_name = "WORD")]
    wordperm: Option<String>,
    /// The longest element
    #[arg(long)]
    longest: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LieCmd {
    #[command(flatten)]
    source: Source,
    /// Verify the Chevalley relations on the generator matrices
    #[arg(long)]
    checkrels: bool,
    /// Structure constant for two 1-based root indices
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    structconst: Option<Vec<usize>>,
    /// Print the full structure constant table
    #[arg(long)]
    nrs_table: bool,
    /// Print the generator matrices e_i, f_i, h_i
    #[arg(long)]
    gens: bool,
    /// Print the canonical-system matrix for a 1-based root index
    #[arg(long, value_name = "ROOT")]
    canbasis: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WeightsCmd {
    #[command(flatten)]
    source: Source,
    /// Indices of the minuscule fundamental weights
    #[arg(long)]
    minuscule: bool,
    /// Weight orbit of comma-separated fundamental-weight coordinates
    #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
    orbit: Option<String>,
    /// Dominant representative and the word reaching it
    #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
    dominant: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ModuleCmd {
    #[command(flatten)]
    source: Source,
    /// Module selection: "adjoint", "minuscule:1[,6]", "sl2irrep:4"
    #[arg(long, value_name = "SPEC")]
    rep: Option<String>,
    /// Load a module from a JSON file
    #[arg(long, value_name = "FILE")]
    load: Option<PathBuf>,
    /// Re-run the admissibility checks and report
    #[arg(long)]
    check: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GroupCmd {
    #[command(flatten)]
    source: Source,
    /// Module selection: "adjoint", "minuscule:1[,6]", "sl2irrep:4"
    #[arg(long, value_name = "SPEC", default_value = "adjoint")]
    rep: String,
    /// Load the module from a JSON file instead
    #[arg(long, value_name = "FILE")]
    load: Option<PathBuf>,
    /// Coefficient ring "ZT" (polynomials over the integers)
    #[arg(long, value_name = "RING")]
    ring: Option<String>,
    /// Field: a prime p for GF(p), or "q" for the rationals
    #[arg(long, value_name = "FIELD", conflicts_with = "ring")]
    field: Option<String>,
    /// Generator kind: x, y, xi, yi, n, h, nalpha, halpha, nw
    #[arg(long, value_name = "KIND")]
    gen: Option<String>,
    /// 1-based root index for x/y/nalpha/halpha
    #[arg(long, value_name = "ROOT")]
    root: Option<usize>,
    /// 1-based generator index for xi/yi/n/h (default 1)
    #[arg(long, value_name = "I", default_value_t = 1)]
    index: usize,
    /// Generator word for nw, like "1,2,1"
    #[arg(long, value_name = "WORD")]
    word: Option<String>,
    /// Parameter value: integer or "num/den" (defaults to T over ZT, 1 over fields)
    #[arg(long, value_name = "VALUE", allow_hyphen_values = true)]
    param: Option<String>,
    /// Run the full relation suite over the chosen field
    #[arg(long)]
    check_all: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckCmd {
    /// Run every acceptance criterion
    #[arg(long)]
    all: bool,
    /// Run one acceptance criterion by number (1..=10)
    #[arg(long, value_name = "N")]
    criterion: Option<usize>,
    /// Named suite for one type: "chevrels", "relations", "admissible"
    #[arg(long, value_name = "SUITE")]
    suite: Option<String>,
    #[arg(long = "type", value_name = "TYPE")]
    type_: Option<String>,
    /// Field for the "relations" suite
    #[arg(long, value_name = "FIELD", default_value = "5")]
    field: String,
    /// Sampling seed (CHEVALIER_SEED overrides the default)
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    // die quietly when stdout is closed early (e.g. piped into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Cartan(c) => cmd_cartan(c),
        Cmd::Roots(c) => cmd_roots(c),
        Cmd::Weyl(c) => cmd_weyl(c),
        Cmd::Lie(c) => cmd_lie(c),
        Cmd::Weights(c) => cmd_weights(c),
        Cmd::Module(c) => cmd_module(c),
        Cmd::Group(c) => cmd_group(c),
        Cmd::Check(c) => cmd_check(c),
    }
}

fn parse_csv_i64(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| anyhow!("bad integer {t:?} in list")))
        .collect()
}

fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    parse_csv_i64(s)?
        .into_iter()
        .map(|v| {
            if v >= 1 && (v as usize) <= rank {
                Ok(v as usize - 1)
            } else {
                Err(anyhow!("generator index {v} out of range 1..={rank}"))
            }
        })
        .collect()
}

fn print_matrix<R: chevalier_core::exact::Ring + Display>(m: &SparseMat<R>, zero: &str)
where
    for<'a> &'a R: chevalier_core::exact::RingOps<R>,
{
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|c| m.get(r, c).map_or_else(|| zero.to_string(), |v| v.to_string()))
            .collect();
        let width = row.iter().map(|s| s.len()).max().unwrap_or(1);
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        println!("{}", line.join(" "));
    }
}

fn emit(value: Value) -> Result<ExitCode> {
    println!("{}", serde_json::to_string(&value)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_cartan(c: CartanCmd) -> Result<ExitCode> {
    let m = c.source.load()?;
    let eps = m.epsilon().map_err(|e| anyhow!("{e}"))?;
    let comps = m.components();
    let mut blocks = Vec::new();
    for comp in &comps {
        let sub = m.submatrix(comp);
        let class = sub.classify().map_err(|e| anyhow!("{e}"))?;
        let dynkin = sub.recognize().ok();
        blocks.push((comp.clone(), class, dynkin));
    }
    let fundamental = m.fundamental_group().ok();
    if c.json {
        return emit(json!({
            "cartan": m.rows(),
            "blocks": blocks.iter().map(|(comp, class, dynkin)| json!({
                "vertices": comp.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "class": class.to_string(),
                "type": dynkin.as_ref().map(|t| t.to_string()),
                "relabel": dynkin.as_ref().map(|t| t.relabel.iter().map(|v| v + 1).collect::<Vec<_>>()),
                "alternatives": dynkin.as_ref().map(|t| t.alternatives.iter()
                    .map(|(f, _)| format!("{f}{}", comp.len())).collect::<Vec<_>>()),
            })).collect::<Vec<_>>(),
            "epsilon": eps,
            "fundamental_group": fundamental.map(|f| f.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
        }));
    }
    println!("cartan matrix:");
    for row in m.rows() {
        println!("  {row:?}");
    }
    for (comp, class, dynkin) in &blocks {
        let vertices: Vec<usize> = comp.iter().map(|v| v + 1).collect();
        print!("block {vertices:?}: {class}");
        if let Some(t) = dynkin {
            print!(", type {t}");
            if t.relabel.iter().enumerate().any(|(i, &v)| i != v) {
                let lab: Vec<usize> = t.relabel.iter().map(|v| v + 1).collect();
                print!(" under relabelling {lab:?}");
            }
            for (f, _) in &t.alternatives {
                print!(" (also {f}{} relabelled)", comp.len());
            }
        }
        println!();
    }
    println!("epsilon: {eps:?}");
    match m.fundamental_group() {
        Ok(f) if f.is_empty() => println!("fundamental group: trivial"),
        Ok(f) => println!(
            "fundamental group: {}",
            f.iter().map(|v| format!("Z/{v}")).collect::<Vec<_>>().join(" x ")
        ),
        Err(_) => println!("fundamental group: (finite type only)"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_roots(c: RootsCmd) -> Result<ExitCode> {
    let rs = c.source.roots()?;
    if c.json {
        return emit(fmt_json::roots_to_json(&rs));
    }
    for k in 0..rs.num_positive() {
        println!("{:?}", rs.root(k));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_weyl(c: WeylCmd) -> Result<ExitCode> {
    let rs = c.source.roots()?;
    if c.order {
        let n = weyl::order(&rs);
        if c.json {
            return emit(json!({"order": n.to_string()}));
        }
        println!("{n}");
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(maxlen) = c.allwords {
        return weyl_allwords(&rs, Some(maxlen), c.json);
    }
    if c.allwords_full {
        return weyl_allwords(&rs, None, c.json);
    }
    if let Some(t) = &c.permword {
        let tuple: Vec<u32> = parse_csv_i64(t)?
            .into_iter()
            .map(|v| {
                if v >= 1 && (v as usize) <= rs.num_roots() {
                    Ok(v as u32 - 1)
                } else {
                    Err(anyhow!("tuple value {v} out of range 1..={}", rs.num_roots()))
                }
            })
            .collect::<Result<_>>()?;
        let w = WeylPerm::from_tuple(&rs, tuple).map_err(|e| anyhow!("{e}"))?;
        let word: Vec<usize> = weyl::permword(&rs, &w).iter().map(|i| i + 1).collect();
        if c.json {
            return emit(json!({"word": word}));
        }
        println!("{}", word.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(wtext) = &c.wordperm {
        let word = parse_word(wtext, rs.rank())?;
        let w = weyl::wordperm(&rs, &word).map_err(|e| anyhow!("{e}"))?;
        let tuple: Vec<u32> = w.tuple().iter().map(|v| v + 1).collect();
        if c.json {
            return emit(json!({"tuple": tuple, "length": w.length(&rs)}));
        }
        println!("({})", tuple.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        return Ok(ExitCode::SUCCESS);
    }
    if c.longest {
        let w0 = weyl::longest_element(&rs);
        let tuple: Vec<u32> = w0.tuple().iter().map(|v| v + 1).collect();
        if c.json {
            return emit(json!({"tuple": tuple, "length": w0.length(&rs)}));
        }
        println!("length {}", w0.length(&rs));
        println!("({})", tuple.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        return Ok(ExitCode::SUCCESS);
    }
    bail!("choose one of --order, --allwords, --allwords-full, --permword, --wordperm, --longest")
}

fn weyl_allwords(rs: &RootSystem, maxlen: Option<usize>, as_json: bool) -> Result<ExitCode> {
    let levels = weyl::allwords(rs, maxlen);
    if as_json {
        let words: Vec<Vec<Vec<usize>>> = levels
            .iter()
            .map(|l| {
                l.iter().map(|w| w.iter().map(|i| i + 1).collect()).collect()
            })
            .collect();
        return emit(json!({"levels": words, "total": levels.iter().map(|l| l.len()).sum::<usize>()}));
    }
    let mut line = Vec::new();
    for level in &levels {
        for word in level {
            let w: Vec<usize> = word.iter().map(|i| i + 1).collect();
            line.push(format!("{w:?}"));
        }
    }
    println!("{}", line.join(" "));
    println!("total {}", levels.iter().map(|l| l.len()).sum::<usize>());
    Ok(ExitCode::SUCCESS)
}

fn cmd_lie(c: LieCmd) -> Result<ExitCode> {
    let d = c.source.algebra()?;
    if c.checkrels {
        let rep = d.checkrels();
        if c.json {
            let code = if rep.pass { ExitCode::SUCCESS } else { ExitCode::from(1) };
            emit(json!({"pass": rep.pass, "checked": rep.checked, "violation": rep.first_violation}))?;
            return Ok(code);
        }
        println!("{rep}");
        return Ok(if rep.pass { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    if let Some(ab) = &c.structconst {
        let (a, b) = (ab[0], ab[1]);
        let n2 = d.roots().num_roots();
        if a == 0 || b == 0 || a > n2 || b > n2 {
            bail!("root indices must be in 1..={n2}");
        }
        let sc = d.structconst(a - 1, b - 1).map_err(|e| anyhow!("{e}"))?;
        let target = sc.target.map(|t| t + 1).unwrap_or(0);
        if c.json {
            return emit(json!({"a": a, "b": b, "value": sc.value.to_string(), "target": target}));
        }
        println!("({a}, {b}, {}, {target})", sc.value);
        return Ok(ExitCode::SUCCESS);
    }
    if c.nrs_table {
        let n2 = d.roots().num_roots();
        let label = |r: usize| -> String {
            let rs = d.roots();
            let digits: String =
                rs.root(if rs.is_positive(r) { r } else { rs.negative(r) })
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
            if rs.is_positive(r) {
                digits
            } else {
                format!("-{digits}")
            }
        };
        print!("{:>10} |", "N(a,b)");
        for b in 0..n2 {
            print!("{:>6}", label(b));
        }
        println!();
        for a in 0..n2 {
            print!("{:>10} |", label(a));
            for b in 0..n2 {
                match d.structconst(a, b) {
                    Err(_) => print!("{:>6}", "*"),
                    Ok(sc) if sc.target.is_none() => print!("{:>6}", "."),
                    Ok(sc) => print!("{:>6}", sc.value.to_string()),
                }
            }
            println!();
        }
        return Ok(ExitCode::SUCCESS);
    }
    if c.gens {
        if c.json {
            let l = d.roots().rank();
            return emit(json!({
                "e": (0..l).map(|i| fmt_json::matrix_int_to_json(d.e(i))).collect::<Vec<_>>(),
                "f": (0..l).map(|i| fmt_json::matrix_int_to_json(d.f(i))).collect::<Vec<_>>(),
                "h": (0..l).map(|i| fmt_json::matrix_int_to_json(d.h(i))).collect::<Vec<_>>(),
            }));
        }
        for i in 0..d.roots().rank() {
            println!("e_{}:", i + 1);
            print_matrix(d.e(i), ".");
            println!("f_{}:", i + 1);
            print_matrix(d.f(i), ".");
            println!("h_{}:", i + 1);
            print_matrix(d.h(i), ".");
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(root) = c.canbasis {
        let n2 = d.roots().num_roots();
        if root == 0 || root > n2 {
            bail!("root index must be in 1..={n2}");
        }
        if c.json {
            return emit(fmt_json::matrix_int_to_json(d.ad_e(root - 1)));
        }
        print_matrix(d.ad_e(root - 1), ".");
        return Ok(ExitCode::SUCCESS);
    }
    if c.json {
        // bare --json: export every matrix of the model
        let l = d.roots().rank();
        let n2 = d.roots().num_roots();
        return emit(json!({
            "dim": d.dim(),
            "e": (0..l).map(|i| fmt_json::matrix_int_to_json(d.e(i))).collect::<Vec<_>>(),
            "f": (0..l).map(|i| fmt_json::matrix_int_to_json(d.f(i))).collect::<Vec<_>>(),
            "h": (0..l).map(|i| fmt_json::matrix_int_to_json(d.h(i))).collect::<Vec<_>>(),
            "ade": (0..n2).map(|r| fmt_json::matrix_int_to_json(d.ad_e(r))).collect::<Vec<_>>(),
            "adh": (0..l).map(|j| fmt_json::matrix_int_to_json(d.ad_h(j))).collect::<Vec<_>>(),
        }));
    }
    bail!("choose one of --checkrels, --structconst, --nrs-table, --gens, --canbasis, --json")
}

fn cmd_weights(c: WeightsCmd) -> Result<ExitCode> {
    let rs = c.source.roots()?;
    if c.minuscule {
        let idx: Vec<usize> = weights::minuscule_weights(&rs).iter().map(|i| i + 1).collect();
        if c.json {
            return emit(json!({"minuscule": idx}));
        }
        println!(
            "{}",
            idx.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        );
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(coords) = &c.orbit {
        let m = parse_csv_i64(coords)?;
        if m.len() != rs.rank() {
            bail!("expected {} coordinates", rs.rank());
        }
        let orbit = weights::weight_orbit(rs.cartan(), &m);
        if c.json {
            return emit(json!({"orbit": orbit, "size": orbit.len()}));
        }
        for w in &orbit {
            println!("{w:?}");
        }
        println!("size {}", orbit.len());
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(coords) = &c.dominant {
        let m = parse_csv_i64(coords)?;
        if m.len() != rs.rank() {
            bail!("expected {} coordinates", rs.rank());
        }
        let (rep, word) = weights::dominant_rep(rs.cartan(), &m);
        let word1: Vec<usize> = word.iter().map(|i| i + 1).collect();
        if c.json {
            return emit(json!({"dominant": rep, "word": word1}));
        }
        println!("{rep:?} via {word1:?}");
        return Ok(ExitCode::SUCCESS);
    }
    bail!("choose one of --minuscule, --orbit, --dominant")
}

fn build_module(source: &Source, rep: &str, load: Option<&PathBuf>) -> Result<RepModule> {
    if let Some(path) = load {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let value: Value = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))?;
        return fmt_json::module_from_json(&value);
    }
    if rep == "adjoint" {
        return Ok(RepModule::adjoint(&source.algebra()?));
    }
    if let Some(spec) = rep.strip_prefix("minuscule:") {
        let rs = source.roots()?;
        let idx: Vec<usize> = spec
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| anyhow!("bad index {t:?}")))
            .collect::<Result<_>>()?;
        let lams: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| {
                if i == 0 || i > rs.rank() {
                    bail!("fundamental weight index {i} out of range 1..={}", rs.rank());
                }
                let mut m = vec![0i64; rs.rank()];
                m[i - 1] = 1;
                Ok(m)
            })
            .collect::<Result<_>>()?;
        return RepModule::minuscule(&rs, &lams).map_err(|e| anyhow!("{e}"));
    }
    if let Some(spec) = rep.strip_prefix("sl2irrep:") {
        let m: usize = spec.trim().parse().map_err(|_| anyhow!("bad sl2irrep spec {spec:?}"))?;
        if source.type_.as_deref().is_some_and(|t| t != "a1") {
            bail!("sl2irrep modules are A1 modules; use --type a1");
        }
        return Ok(RepModule::sl2_irrep(m));
    }
    bail!("unrecognized --rep {rep:?} (use adjoint, minuscule:I[,J], sl2irrep:M)")
}

fn cmd_module(c: ModuleCmd) -> Result<ExitCode> {
    let rep = c.rep.as_deref().unwrap_or("adjoint");
    let m = build_module(&c.source, rep, c.load.as_ref())?;
    if c.check {
        let report = m.check_admissible();
        if c.json {
            emit(json!({
                "admissible": report.admissible,
                "failures": report.failures,
                "max_divided_power": report.max_divided_power,
            }))?;
            return Ok(if report.admissible { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        if report.admissible {
            println!("admissible (largest divided power {})", report.max_divided_power);
            return Ok(ExitCode::SUCCESS);
        }
        println!("NOT admissible:");
        for f in &report.failures {
            println!("  {f}");
        }
        return Ok(ExitCode::from(1));
    }
    if c.json {
        return emit(fmt_json::module_to_json(&m));
    }
    println!("dimension {}", m.dim());
    let factors: Vec<String> = m
        .lattice_index_factors()
        .iter()
        .filter(|f| **f != int(1))
        .map(|f| f.to_string())
        .collect();
    println!(
        "weight lattice index factors: {}",
        if factors.is_empty() { "trivial".to_string() } else { factors.join(",") }
    );
    for k in 0..m.dim() {
        println!("basis {:>3}: weight {:?}", k + 1, m.weight(k));
    }
    Ok(ExitCode::SUCCESS)
}

enum FieldChoice {
    Rationals,
    Prime(Gfp),
}

fn parse_field(s: &str) -> Result<FieldChoice> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldChoice::Rationals);
    }
    let p: u64 = s.parse().map_err(|_| anyhow!("field must be a prime or \"q\""))?;
    Ok(FieldChoice::Prime(Gfp::field(p).map_err(|e| anyhow!("{e}"))?))
}

fn parse_rat(s: &str) -> Result<Rat> {
    if let Some((n, d)) = s.split_once('/') {
        let num: Int = n.trim().parse().map_err(|_| anyhow!("bad numerator {n:?}"))?;
        let den: Int = d.trim().parse().map_err(|_| anyhow!("bad denominator {d:?}"))?;
        if den == int(0) {
            bail!("zero denominator");
        }
        Ok(Rat::new(num, den))
    } else {
        let v: Int = s.trim().parse().map_err(|_| anyhow!("bad integer {s:?}"))?;
        Ok(Rat::from_integer(v))
    }
}

fn cmd_group(c: GroupCmd) -> Result<ExitCode> {
    let module = build_module(&c.source, &c.rep, c.load.as_ref())?;
    let rs = module.roots().clone();
    if c.check_all {
        let seed = chevalier::seed_from_env();
        let field = parse_field(c.field.as_deref().unwrap_or("q"))?;
        let report = match field {
            FieldChoice::Rationals => {
                chevgroup::relation_suite(&module, &chevgroup::rat_params(seed))
            }
            FieldChoice::Prime(f) => {
                chevgroup::relation_suite(&module, &chevgroup::gfp_params(f.modulus(), seed))
            }
        };
        print!("{report}");
        return Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }

    let gen = c.gen.as_deref().ok_or_else(|| anyhow!("--gen is required (x, y, xi, yi, n, h, nalpha, halpha, nw)"))?;
    let needs_root = matches!(gen, "x" | "y" | "nalpha" | "halpha");
    let root = if needs_root {
        let r = c.root.ok_or_else(|| anyhow!("--root is required for --gen {gen}"))?;
        if r == 0 || r > rs.num_roots() {
            bail!("root index must be in 1..={}", rs.num_roots());
        }
        r - 1
    } else {
        0
    };
    let i = c.index;
    if i == 0 || i > rs.rank() {
        bail!("generator index must be in 1..={}", rs.rank());
    }
    let i = i - 1;

    // ring dispatch
    match (c.ring.as_deref(), c.field.as_deref()) {
        (Some(r), None) if r.eq_ignore_ascii_case("zt") => {
            let t = IntPoly::t();
            let value = match c.param.as_deref() {
                None | Some("T") | Some("t") => t,
                Some(other) => IntPoly::constant(
                    other.parse::<Int>().map_err(|_| anyhow!("bad integer parameter {other:?}"))?,
                ),
            };
            let m = match gen {
                "x" => chevgroup::x_gen(&module, root, &value),
                "y" => chevgroup::x_gen(&module, rs.negative(root), &value),
                "xi" => chevgroup::xi_gen(&module, i, &value),
                "yi" => chevgroup::yi_gen(&module, i, &value),
                "n" | "h" | "nalpha" | "halpha" | "nw" => {
                    bail!("monomial and diagonal elements need a field; use --field")
                }
                other => bail!("unknown generator kind {other:?}"),
            };
            if c.json {
                return emit(fmt_json::matrix_poly_to_json(&m));
            }
            print_matrix(&m, ".");
            Ok(ExitCode::SUCCESS)
        }
        (None, Some(f)) => match parse_field(f)? {
            FieldChoice::Rationals => {
                let value = match c.param.as_deref() {
                    Some(p) => parse_rat(p)?,
                    None => Rat::from_integer(int(1)),
                };
                let m = group_element(&module, gen, root, i, c.word.as_deref(), &value)?;
                if c.json {
                    return emit(fmt_json::matrix_rat_to_json(&m));
                }
                print_matrix(&m, ".");
                Ok(ExitCode::SUCCESS)
            }
            FieldChoice::Prime(fld) => {
                let value = match c.param.as_deref() {
                    Some(p) => fld.elt(p.parse::<i64>().map_err(|_| anyhow!("bad parameter {p:?}"))?),
                    None => fld.elt(1),
                };
                let m = group_element(&module, gen, root, i, c.word.as_deref(), &value)?;
                if c.json {
                    return emit(fmt_json::matrix_gfp_to_json(&m));
                }
                print_matrix(&m, ".");
                Ok(ExitCode::SUCCESS)
            }
        },
        (None, None) => bail!("choose a coefficient ring: --ring ZT or --field <p|q>"),
        _ => bail!("choose exactly one of --ring and --field"),
    }
}

fn group_element<F: chevalier_core::exact::Field>(
    module: &RepModule,
    gen: &str,
    root: usize,
    i: usize,
    word: Option<&str>,
    value: &F,
) -> Result<SparseMat<F>>
where
    for<'a> &'a F: chevalier_core::exact::RingOps<F>,
{
    let rs = module.roots();
    let m = match gen {
        "x" => chevgroup::x_gen(module, root, value),
        "y" => chevgroup::x_gen(module, rs.negative(root), value),
        "xi" => chevgroup::xi_gen(module, i, value),
        "yi" => chevgroup::yi_gen(module, i, value),
        "n" => chevgroup::n_gen(module, i, value).map_err(|e| anyhow!("{e}"))?,
        "h" => chevgroup::h_gen(module, i, value).map_err(|e| anyhow!("{e}"))?,
        "nalpha" => chevgroup::n_alpha_gen(module, root, value).map_err(|e| anyhow!("{e}"))?,
        "halpha" => chevgroup::h_alpha_gen(module, root, value).map_err(|e| anyhow!("{e}"))?,
        "nw" => {
            let text = word.ok_or_else(|| anyhow!("--word is required for --gen nw"))?;
            let w = parse_word(text, rs.rank())?;
            chevgroup::n_word_reduced(module, &w, &value.one_like())
        }
        other => bail!("unknown generator kind {other:?}"),
    };
    Ok(m)
}

fn cmd_check(c: CheckCmd) -> Result<ExitCode> {
    let seed = c.seed.unwrap_or_else(chevalier::seed_from_env);
    if c.all || c.criterion.is_some() {
        let results = match c.criterion {
            Some(id) => {
                let r = verify::run_one(id, seed)
                    .ok_or_else(|| anyhow!("criterion {id} is not in 1..=10"))?;
                vec![r]
            }
            None => verify::run_all(seed),
        };
        let mut ok = true;
        for r in &results {
            println!("{}", r.line());
            ok &= r.pass;
        }
        println!("{}", if ok { "all criteria pass" } else { "FAILURES present" });
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    let suite = c.suite.as_deref().ok_or_else(|| anyhow!("choose --all, --criterion N, or --suite <name>"))?;
    let source = Source { type_: c.type_.clone(), matrix: None };
    match suite {
        "chevrels" => {
            let d = source.algebra()?;
            let rep = d.checkrels();
            println!("{rep}");
            Ok(if rep.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "relations" => {
            let module = RepModule::adjoint(&source.algebra()?);
            let report = match parse_field(&c.field)? {
                FieldChoice::Rationals => {
                    chevgroup::relation_suite(&module, &chevgroup::rat_params(seed))
                }
                FieldChoice::Prime(f) => {
                    chevgroup::relation_suite(&module, &chevgroup::gfp_params(f.modulus(), seed))
                }
            };
            print!("{report}");
            Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "admissible" => {
            let module = RepModule::adjoint(&source.algebra()?);
            let report = module.check_admissible();
            if report.admissible {
                println!("admissible (largest divided power {})", report.max_divided_power);
                Ok(ExitCode::SUCCESS)
            } else {
                for f in &report.failures {
                    println!("{f}");
                }
                Ok(ExitCode::from(1))
            }
        }
        other => bail!("unknown suite {other:?} (chevrels, relations, admissible)"),
    }
}
