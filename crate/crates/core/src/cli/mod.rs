//! Command-line front end: `normalize`, `symmetries`, `classify`, `render`,
//! `verify` and `report`.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when `--strict` is set and
//! the result is uncertain.

mod parse;
pub mod report;

pub use parse::{parse_constant, parse_expr, parse_map, Expr, MapExpression};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{RationalTurn, SymmetryGroup, TurnPair};
use crate::classify::classify_with;
use crate::error::{Error, Result};
use crate::numerics::{
    compactness_check, render_slice, verify_symmetry_numeric, Compactness, GreenEvaluator, JuliaSamples,
    SymmetryRealizer, VerifyConfig, VerifyReport, Window,
};
use crate::skew::{normalize, SkewProduct};
use crate::symmetry::{symmetry_group_with, SymmetryConfig};

/// Rotation added to `μ` to build non-members for discrimination checks.
pub const PERTURBATION_RAD: f64 = 0.05;
/// Candidates verified numerically when the group is large.
pub const MAX_VERIFY_CANDIDATES: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "skewsym", version, about = "Symmetries of Julia sets of polynomial skew products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Centroids, translation and scaling to normal form.
    Normalize(Common),
    /// The symmetry group with its status and certificate.
    Symmetries(Common),
    /// Type I–IV or finite, with witnesses and the shape of J_f.
    Classify(Common),
    /// Fiber slice of the Julia set as PGM plus a JSON sidecar.
    Render(RenderArgs),
    /// Numeric check that group elements preserve J_f.
    Verify(VerifyArgs),
    /// Everything above in one document.
    Report(Common),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Map expression "(P, Q)" or a file containing one.
    #[arg(long)]
    map: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long = "max-order")]
    max_order: Option<i64>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    strict: bool,
    #[arg(long = "no-timestamp")]
    no_timestamp: bool,
    /// key=value file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct RenderArgs {
    #[command(flatten)]
    common: Common,
    /// Base point z of the slice.
    #[arg(long, default_value = "0")]
    fiber: String,
    #[arg(long)]
    res: Option<usize>,
    /// Window center "x,y".
    #[arg(long, allow_hyphen_values = true)]
    center: Option<String>,
    #[arg(long)]
    width: Option<f64>,
    /// Boundary band width in pixels.
    #[arg(long)]
    band: Option<f64>,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Candidate μ as a turn "k/m"; defaults to group elements.
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    nu: Option<String>,
}

/// Resolved run parameters: defaults, then config file, then flags.
#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub max_order: i64,
    pub depth: usize,
    pub strict: bool,
    pub no_timestamp: bool,
    pub res: usize,
    pub width: f64,
    pub band: f64,
    pub modulus_samples: usize,
    pub modulus_tol: f64,
}

impl Default for Settings {
    fn default() -> Self {
        let v = VerifyConfig::default();
        let s = SymmetryConfig::default();
        Settings {
            seed: 0,
            samples: v.samples,
            tol: v.tol,
            max_order: 4,
            depth: v.depth,
            strict: false,
            no_timestamp: false,
            res: 512,
            width: 4.0,
            band: 1.0,
            modulus_samples: s.modulus_samples,
            modulus_tol: s.modulus_tol,
        }
    }
}

fn parse_val<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Config(format!("bad value for {key}: {v}")))
}

impl Settings {
    /// Applies `key=value` lines; `#` starts a comment.
    pub fn apply_config(&mut self, text: &str) -> Result<()> {
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=value: {line}")))?;
            let (k, v) = (k.trim().replace('_', "-"), v.trim());
            match k.as_str() {
                "seed" => self.seed = parse_val(&k, v)?,
                "samples" => self.samples = parse_val(&k, v)?,
                "tol" => self.tol = parse_val(&k, v)?,
                "max-order" => self.max_order = parse_val(&k, v)?,
                "depth" => self.depth = parse_val(&k, v)?,
                "strict" => self.strict = parse_val(&k, v)?,
                "no-timestamp" => self.no_timestamp = parse_val(&k, v)?,
                "res" => self.res = parse_val(&k, v)?,
                "width" => self.width = parse_val(&k, v)?,
                "band" => self.band = parse_val(&k, v)?,
                "modulus-samples" => self.modulus_samples = parse_val(&k, v)?,
                "modulus-tol" => self.modulus_tol = parse_val(&k, v)?,
                _ => return Err(Error::Config(format!("unknown key {k}"))),
            }
        }
        Ok(())
    }

    fn from_common(c: &Common) -> Result<Self> {
        let mut s = Settings::default();
        if let Some(path) = &c.config {
            s.apply_config(&std::fs::read_to_string(path)?)?;
        }
        if let Some(v) = c.seed {
            s.seed = v;
        }
        if let Some(v) = c.samples {
            s.samples = v;
        }
        if let Some(v) = c.tol {
            s.tol = v;
        }
        if let Some(v) = c.max_order {
            s.max_order = v;
        }
        if let Some(v) = c.depth {
            s.depth = v;
        }
        s.strict |= c.strict;
        s.no_timestamp |= c.no_timestamp;
        if s.max_order < 1 || s.samples == 0 || s.tol <= 0.0 {
            return Err(Error::Config("max-order, samples and tol must be positive".into()));
        }
        Ok(s)
    }

    pub fn symmetry_config(&self) -> SymmetryConfig {
        SymmetryConfig {
            modulus_samples: self.modulus_samples,
            modulus_tol: self.modulus_tol,
            seed: self.seed,
            ..SymmetryConfig::default()
        }
    }

    pub fn verify_config(&self) -> VerifyConfig {
        VerifyConfig { samples: self.samples, tol: self.tol, seed: self.seed, depth: self.depth }
    }
}

fn load_map(arg: &str) -> Result<(String, SkewProduct)> {
    let text = if Path::new(arg).is_file() { std::fs::read_to_string(arg)?.trim().to_string() } else { arg.to_string() };
    let f = parse_map(&text)?;
    Ok((text, f))
}

fn parse_turn(s: &str) -> Result<RationalTurn> {
    let bad = || Error::Config(format!("expected a turn k/m, got {s}"));
    let (k, m) = s.split_once('/').unwrap_or((s, "1"));
    let k: i64 = k.trim().parse().map_err(|_| bad())?;
    let m: i64 = m.trim().parse().map_err(|_| bad())?;
    if m <= 0 {
        return Err(bad());
    }
    Ok(RationalTurn::new(k, m))
}

fn header(cmd: &str, s: &Settings) -> Value {
    let mut v = json!({
        "schema": report::SCHEMA,
        "command": cmd,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "seed": s.seed,
    });
    if !s.no_timestamp {
        let t = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        v["generated_unix"] = json!(t);
    }
    v
}

/// Group elements of order `≤ max_order`, identity first, at most
/// `MAX_VERIFY_CANDIDATES` of them.
pub fn verify_candidates(g: &SymmetryGroup, max_order: i64) -> Vec<TurnPair> {
    let mut es = g.elements_up_to_order(max_order);
    es.sort_by_key(|(a, b)| (a.order().max(b.order()), *a, *b));
    es.truncate(MAX_VERIFY_CANDIDATES);
    es
}

/// Verifies every candidate and its `μ`-perturbation. Members should pass
/// and the perturbed maps should fail.
pub fn verify_with_perturbations(
    f: &SkewProduct,
    candidates: &[TurnPair],
    cfg: VerifyConfig,
) -> Result<Vec<(Value, VerifyReport, VerifyReport)>> {
    let eval = GreenEvaluator::new(f);
    let samples = JuliaSamples::generate(&eval, cfg)?;
    let realizer = SymmetryRealizer::new(f);
    let rot = Complex64::from_polar(1.0, PERTURBATION_RAD);
    Ok(candidates
        .iter()
        .map(|&(mu, nu)| {
            let (m, n) = (mu.to_complex(), nu.to_complex());
            let member = verify_symmetry_numeric(&eval, &realizer, m, n, &samples);
            let perturbed = verify_symmetry_numeric(&eval, &realizer, m * rot, n, &samples);
            (json!([[mu.k(), mu.order()], [nu.k(), nu.order()]]), member, perturbed)
        })
        .collect())
}

fn verification_json(results: &[(Value, VerifyReport, VerifyReport)], cfg: &VerifyConfig) -> (Value, bool) {
    let ok = results.iter().all(|(_, m, p)| m.pass && !p.pass);
    let v = json!({
        "samples": cfg.samples,
        "tol": cfg.tol,
        "seed": cfg.seed,
        "depth": cfg.depth,
        "perturbation_rad": PERTURBATION_RAD,
        "consistent": ok,
        "candidates": results
            .iter()
            .map(|(g, m, p)| json!({ "element": g, "member": m, "perturbed": p }))
            .collect::<Vec<_>>(),
    });
    (v, ok)
}

struct Outcome {
    doc: Value,
    uncertain: bool,
}

fn cmd_normalize(c: &Common, s: &Settings) -> Result<Outcome> {
    let (text, f) = load_map(&c.map)?;
    let mut doc = header("normalize", s);
    doc["input"] = report::input(&text, &f);
    doc["normalization"] = report::normalization(&normalize(&f));
    Ok(Outcome { doc, uncertain: false })
}

fn cmd_symmetries(c: &Common, s: &Settings) -> Result<Outcome> {
    let (text, f) = load_map(&c.map)?;
    let r = symmetry_group_with(&f, &s.symmetry_config())?;
    let mut doc = header("symmetries", s);
    doc["input"] = report::input(&text, &f);
    doc["normalization"] = report::normalization(&r.normalized);
    doc["symmetries"] = report::symmetries(&r);
    Ok(Outcome { doc, uncertain: !r.status.is_exact() })
}

fn cmd_classify(c: &Common, s: &Settings) -> Result<Outcome> {
    let (text, f) = load_map(&c.map)?;
    let r = classify_with(&f, &s.symmetry_config())?;
    let mut doc = header("classify", s);
    doc["input"] = report::input(&text, &f);
    doc["symmetries"] = report::symmetries(&r.symmetry);
    doc["classification"] = report::classification(&r);
    doc["compactness"] = report::compactness(&r.compactness);
    let uncertain = r.uncertain || r.compactness.verdict == Compactness::Uncertain;
    Ok(Outcome { doc, uncertain })
}

fn cmd_verify(a: &VerifyArgs, s: &Settings) -> Result<Outcome> {
    let (text, f) = load_map(&a.common.map)?;
    let candidates = match (&a.mu, &a.nu) {
        (None, None) => {
            let r = symmetry_group_with(&f, &s.symmetry_config())?;
            verify_candidates(&r.group, s.max_order)
        }
        (mu, nu) => {
            let one = RationalTurn::identity();
            let mu = mu.as_deref().map(parse_turn).transpose()?.unwrap_or(one);
            let nu = nu.as_deref().map(parse_turn).transpose()?.unwrap_or(one);
            vec![(mu, nu)]
        }
    };
    let cfg = s.verify_config();
    let results = verify_with_perturbations(&f, &candidates, cfg)?;
    let (v, ok) = verification_json(&results, &cfg);
    let mut doc = header("verify", s);
    doc["input"] = report::input(&text, &f);
    doc["verification"] = v;
    Ok(Outcome { doc, uncertain: !ok })
}

fn cmd_render(a: &RenderArgs, s: &Settings) -> Result<Outcome> {
    let (text, f) = load_map(&a.common.map)?;
    let z = parse_constant(&a.fiber)?.to_complex64();
    let center = match &a.center {
        None => Complex64::new(0.0, 0.0),
        Some(c) => {
            let (x, y) = c.split_once(',').ok_or_else(|| Error::Config("center must be x,y".into()))?;
            Complex64::new(parse_val("center", x.trim())?, parse_val("center", y.trim())?)
        }
    };
    let res = a.res.unwrap_or(s.res);
    let width = a.width.unwrap_or(s.width);
    let band = a.band.unwrap_or(s.band);
    if res == 0 || width <= 0.0 || band <= 0.0 {
        return Err(Error::Config("res, width and band must be positive".into()));
    }
    let eval = GreenEvaluator::new(&f);
    let slice = render_slice(&eval, z, Window::new(center, width), res, band);
    let dir = a.common.out.clone().unwrap_or_else(|| PathBuf::from("."));
    let stem = "slice";
    slice.write(&dir, stem, s.seed)?;
    let mut doc = header("render", s);
    doc["input"] = report::input(&text, &f);
    doc["image"] = json!(dir.join(format!("{stem}.pgm")).display().to_string());
    doc["sidecar"] = slice.sidecar(s.seed);
    Ok(Outcome { doc, uncertain: false })
}

fn cmd_report(c: &Common, s: &Settings) -> Result<Outcome> {
    let (text, f) = load_map(&c.map)?;
    let r = classify_with(&f, &s.symmetry_config())?;
    let cfg = s.verify_config();
    let results = verify_with_perturbations(&f, &verify_candidates(&r.gamma, s.max_order), cfg)?;
    let (v, ok) = verification_json(&results, &cfg);
    let mut doc = header("report", s);
    doc["input"] = report::input(&text, &f);
    doc["normalization"] = report::normalization(&r.symmetry.normalized);
    doc["symmetries"] = report::symmetries(&r.symmetry);
    doc["classification"] = report::classification(&r);
    doc["compactness"] = report::compactness(&compactness_check(&f));
    doc["verification"] = v;
    let uncertain = r.uncertain || r.compactness.verdict == Compactness::Uncertain || !ok;
    Ok(Outcome { doc, uncertain })
}

fn dispatch(cmd: &Command) -> Result<(Outcome, Settings, Option<PathBuf>, &'static str)> {
    let (common, name) = match cmd {
        Command::Normalize(c) => (c, "normalize"),
        Command::Symmetries(c) => (c, "symmetries"),
        Command::Classify(c) => (c, "classify"),
        Command::Render(a) => (&a.common, "render"),
        Command::Verify(a) => (&a.common, "verify"),
        Command::Report(c) => (c, "report"),
    };
    let s = Settings::from_common(common)?;
    let out = match cmd {
        Command::Normalize(c) => cmd_normalize(c, &s)?,
        Command::Symmetries(c) => cmd_symmetries(c, &s)?,
        Command::Classify(c) => cmd_classify(c, &s)?,
        Command::Render(a) => cmd_render(a, &s)?,
        Command::Verify(a) => cmd_verify(a, &s)?,
        Command::Report(c) => cmd_report(c, &s)?,
    };
    Ok((out, s, common.out.clone(), name))
}

/// Runs the CLI with `args` (including the program name), writing JSON to
/// `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 1;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match dispatch(&cli.command) {
        Ok((out, s, dir, name)) => {
            let text = serde_json::to_string_pretty(&out.doc).expect("json");
            if let Some(dir) = dir {
                if let Err(e) = std::fs::create_dir_all(&dir).and_then(|_| std::fs::write(dir.join(format!("{name}.json")), &text)) {
                    let _ = writeln!(stderr, "error: {e}");
                    return 1;
                }
            }
            let _ = writeln!(stdout, "{text}");
            if s.strict && out.uncertain {
                let _ = writeln!(stderr, "uncertain result");
                2
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("skewsym").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn config_and_flags() {
        let mut s = Settings::default();
        s.apply_config("seed = 7\n# comment\nmax_order=3\n").unwrap();
        assert_eq!((s.seed, s.max_order), (7, 3));
        assert!(s.apply_config("colour=red").is_err());
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_args(&["symmetries", "--map", "(w, z)"]);
        assert_eq!(code, 1);
        assert!(err.contains("first component must depend only on z"));
        let (code, out, _) = run_args(&["symmetries", "--map", "(z^3, z*w^2 + z)", "--no-timestamp", "--strict"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["symmetries"]["group"]["order"], 4);
        assert_eq!(v["symmetries"]["status"]["label"], "Exact");
        assert_eq!(run_args(&["bogus"]).0, 1);
    }

    #[test]
    fn strict_uncertain() {
        // Fiber centroid (-z)/(2(z^2+1)) is not Laurent.
        let (code, out, _) = run_args(&["symmetries", "--map", "(z^2, (z^2+1)*w^2 + z*w)", "--strict", "--no-timestamp"]);
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["symmetries"]["status"]["label"], "CandidateUpperBound");
    }
}
