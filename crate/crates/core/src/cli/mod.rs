//! Command-line front end.
//!
//! Every subcommand produces a JSON value. Under `--json` it is printed pretty with
//! sorted keys, otherwise as aligned text. Expensive results go through the on-disk
//! [`cache::Cache`].

pub mod cache;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::affine::{block_member, block_of, character, leading_exponents, normal_form, structure_of, BlockId};
use crate::affine::{CharacterTarget, ModuleLabel, Truncation};
use crate::error::Error;
use crate::exact::{fmt_rational, parse_rational, qi, Rational};
use crate::fusion::{branch, branching_char_verify, fuse, induct_decompose, BranchingParams};
use crate::levels::{coset_triple, dual_levels, level_from_uv, ribbon_known, virasoro_h};
use crate::n2::{self, C1Space, FreeFieldSpec};
use crate::virasoro::{c1_quotient_dims, find_singular_vectors, HighestWeightSpec};

pub use cache::Cache;

/// Exit code for malformed input.
pub const EXIT_USAGE: i32 = 64;
/// Exit code for violated preconditions.
pub const EXIT_DOMAIN: i32 = 2;

fn rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn positive_rat(s: &str) -> Result<Rational, String> {
    let x = rat(s)?;
    if x <= qi(0) {
        return Err(format!("{s} is not positive"));
    }
    Ok(x)
}

fn label(s: &str) -> Result<ModuleLabel, String> {
    s.parse::<ModuleLabel>().map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "admissible", version, about = "Exact computations for admissible-level sl2, Virasoro and N=2")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

/// Global options; each can also be set through an `ADMISSIBLE_*` environment variable.
#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Print JSON instead of text.
    #[arg(long, global = true, env = "ADMISSIBLE_JSON", value_parser = clap::builder::FalseyValueParser::new())]
    pub json: bool,
    /// q-order above the leading exponent.
    #[arg(long, global = true, env = "ADMISSIBLE_Q_ORDER", default_value = "8", value_parser = positive_rat)]
    pub q_order: Rational,
    /// Half-width of the z-window.
    #[arg(long, global = true, env = "ADMISSIBLE_Z_WINDOW", default_value_t = 8, value_parser = clap::value_parser!(i64).range(0..))]
    pub z_window: i64,
    #[arg(long, global = true, env = "ADMISSIBLE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, env = "ADMISSIBLE_NO_CACHE", value_parser = clap::builder::FalseyValueParser::new())]
    pub no_cache: bool,
    /// Seed for sampled inputs.
    #[arg(long, global = true, env = "ADMISSIBLE_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Level data for k = -2 + u/v.
    Levels { u: i64, v: i64 },
    /// Singular vectors of a Virasoro Verma module.
    Singular(SingularArgs),
    /// Truncated two-variable character.
    Char {
        #[arg(value_parser = label, required_unless_present = "level_one")]
        label: Option<ModuleLabel>,
        /// Integrable level-one module 1 (vacuum) or 2.
        #[arg(long, conflicts_with = "label")]
        level_one: Option<i64>,
    },
    /// Fusion of the ordinary module L_r with a module.
    Fuse {
        r: i64,
        #[arg(value_parser = label)]
        label: ModuleLabel,
    },
    /// Coset branching of label ⊗ L¹_a, or the inverse decomposition with --induct.
    Branch {
        #[arg(value_parser = label)]
        label: ModuleLabel,
        #[arg(long, required_unless_present = "induct")]
        a: Option<i64>,
        /// First minimal-model index r; the label is then a minimal-side module at level k+1.
        #[arg(long, conflicts_with = "a")]
        induct: Option<i64>,
    },
    /// Residual of the relaxed branching character identity.
    BranchVerify {
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        a: i64,
        #[arg(long, default_value_t = 0)]
        flow: i64,
        #[arg(long, value_parser = rat)]
        lambda: Rational,
    },
    /// Block, position and Loewy data of a module.
    Blocks {
        #[arg(value_parser = label)]
        label: ModuleLabel,
    },
    /// N=2 relations on the free-field module.
    N2Verify {
        #[command(flatten)]
        data: N2Data,
        /// Depth and mode bound.
        #[arg(long, default_value = "2", value_parser = rat)]
        level: Rational,
    },
    /// C₁-membership and the quotient of the free-field module.
    #[command(name = "n2-c1")]
    N2C1 {
        #[command(flatten)]
        data: N2Data,
        /// Use the simple Virasoro factor instead of the Verma module.
        #[arg(long)]
        simple: bool,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Largest depth for the quotient dimensions.
        #[arg(long, default_value = "3", value_parser = rat)]
        depth: Rational,
    },
    /// Per-level dimensions of W/C₁(W) for a Virasoro highest-weight module.
    C1Vir(C1VirArgs),
}

#[derive(Args, Debug)]
struct N2Data {
    #[arg(long, value_parser = rat, allow_hyphen_values = true)]
    ell: Rational,
    #[arg(long, value_parser = rat, allow_hyphen_values = true)]
    h: Rational,
    #[arg(long, value_parser = rat, allow_hyphen_values = true)]
    lambda: Rational,
}

#[derive(Args, Debug)]
struct SingularArgs {
    /// t = u/v; with --r and --s gives c(t) and h_{r,s}(t) at level rs.
    #[arg(long, value_parser = rat, requires_all = ["r", "s"], conflicts_with_all = ["c", "h"])]
    t: Option<Rational>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long, value_parser = rat, allow_hyphen_values = true)]
    c: Option<Rational>,
    #[arg(long, value_parser = rat, allow_hyphen_values = true, conflicts_with = "random_h")]
    h: Option<Rational>,
    #[arg(long)]
    level: Option<u32>,
    /// Sample this many rational h (see --seed) and count singular vectors for each.
    #[arg(long)]
    random_h: Option<usize>,
}

#[derive(Args, Debug)]
struct C1VirArgs {
    #[arg(long, value_parser = rat, requires_all = ["r", "s"], conflicts_with_all = ["c", "h"])]
    t: Option<Rational>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long, value_parser = rat, allow_hyphen_values = true, requires = "h")]
    c: Option<Rational>,
    #[arg(long, value_parser = rat, allow_hyphen_values = true, requires = "c")]
    h: Option<Rational>,
    /// Quotient by the singular vector at this level (implied by --t/--r/--s).
    #[arg(long)]
    singular: Option<u32>,
    #[arg(long, default_value_t = 6)]
    level_max: u32,
}

fn fr(x: &Rational) -> Value {
    Value::String(fmt_rational(x))
}

/// Runs the CLI on `argv` with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI on `argv`, writing to the given streams, and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let cache = if cli.config.no_cache {
        Cache::disabled()
    } else {
        Cache::new(cli.config.cache_dir.clone().or_else(cache::default_dir))
    };
    match dispatch(&cli.command, &cli.config, &cache, err) {
        Ok(v) => {
            let text = if cli.config.json {
                serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
            } else {
                render::text(&v)
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            }
        }
    }
}

fn trunc(cfg: &Config) -> Result<Truncation, Error> {
    Truncation::new(cfg.q_order.clone(), cfg.z_window)
}

fn dispatch(cmd: &Command, cfg: &Config, cache: &Cache, warn: &mut dyn Write) -> Result<Value, Error> {
    let params = json!({
        "command": format!("{cmd:?}"),
        "q_order": fmt_rational(&cfg.q_order),
        "z_window": cfg.z_window,
        "seed": cfg.seed,
    });
    match cmd {
        Command::Levels { u, v } => levels(*u, *v),
        Command::Fuse { r, label } => Ok(json!({
            "r": r,
            "label": label.to_string(),
            "summands": fuse(*r, label)?.to_json(),
        })),
        Command::Branch { label, a, induct } => {
            let d = match (a, induct) {
                (Some(a), _) => branch(label, *a)?,
                (None, Some(r)) => induct_decompose(*r, label)?,
                (None, None) => return Err(Error::Parse("branch needs --a or --induct".into())),
            };
            let mut v = d.to_json();
            v["label"] = json!(label.to_string());
            Ok(v)
        }
        Command::Blocks { label } => blocks(label),
        Command::Char { .. } => cache.get_or_compute("char", &params, warn, || char_cmd(cmd, cfg)),
        Command::Singular(a) => cache.get_or_compute("singular", &params, warn, || singular(a, cfg.seed)),
        Command::BranchVerify { .. } => cache.get_or_compute("branch-verify", &params, warn, || branch_verify(cmd, cfg)),
        Command::N2Verify { data, level } => cache.get_or_compute("n2-verify", &params, warn, || {
            let rep = n2::verify_relations(&data.ell, &data.h, &data.lambda, level)?;
            let mut v = rep.to_json();
            v["ell"] = fr(&data.ell);
            v["h"] = fr(&data.h);
            v["lambda"] = fr(&data.lambda);
            v["level"] = fr(level);
            v["c"] = fr(&n2::n2_central_charge(&data.ell));
            Ok(v)
        }),
        Command::N2C1 { data, simple, n, depth } => {
            cache.get_or_compute("n2-c1", &params, warn, || n2_c1(data, *simple, *n, depth))
        }
        Command::C1Vir(a) => cache.get_or_compute("c1-vir", &params, warn, || c1_vir(a)),
    }
}

fn levels(u: i64, v: i64) -> Result<Value, Error> {
    let lvl = level_from_uv(u, v)?;
    let dual = dual_levels(&lvl)?;
    let coset = coset_triple(&lvl)?;
    Ok(json!({
        "u": u,
        "v": v,
        "k": fr(&lvl.k()),
        "t": fr(&lvl.t()),
        "c_vir": fr(&lvl.c_vir()),
        "c_sug": fr(&lvl.c_sug()),
        "integral": lvl.is_integral(),
        "k_w": fr(&dual.k_w),
        "c_n2": fr(&dual.c_n2),
        "k_plus_one": fr(&coset.shifted.k()),
        "k_prime": fr(&coset.k_prime()),
        "minimal_model": [coset.minimal.0, coset.minimal.1],
        "ribbon": ribbon_known(&lvl),
    }))
}

fn blocks(x: &ModuleLabel) -> Result<Value, Error> {
    let nf = normal_form(x);
    let (block, pos) = block_of(&nf)?;
    let structure = structure_of(&nf).ok().map(|s| s.to_json());
    let neighbours = match &block {
        BlockId::C { r, n } => (pos - 2..=pos + 2)
            .map(|p| block_member(&nf.level, *r, *n, p).map(|m| json!({"position": p, "label": m.to_string()})))
            .collect::<Result<Vec<_>, _>>()?,
        BlockId::Eblock { .. } => vec![json!({"position": pos, "label": nf.to_string()})],
    };
    Ok(json!({
        "label": x.to_string(),
        "normal_form": nf.to_string(),
        "block": block.to_string(),
        "position": pos,
        "structure": structure,
        "neighbours": neighbours,
    }))
}

fn char_cmd(cmd: &Command, cfg: &Config) -> Result<Value, Error> {
    let Command::Char { label, level_one } = cmd else { unreachable!() };
    let target = match (label, level_one) {
        (Some(x), _) => CharacterTarget::Module(x.clone()),
        (None, Some(a)) => CharacterTarget::LevelOne(*a),
        (None, None) => return Err(Error::Parse("char needs a label or --level-one".into())),
    };
    let ch = character(&target, &trunc(cfg)?)?;
    let lead: Vec<Value> = leading_exponents(&ch)
        .iter()
        .map(|(z, e)| json!({"z": fr(z), "q": e.as_ref().map(fr)}))
        .collect();
    Ok(json!({
        "target": match &target {
            CharacterTarget::Module(x) => x.to_string(),
            CharacterTarget::LevelOne(a) => format!("L1[{a}]"),
        },
        "q_order": fr(&cfg.q_order),
        "z_window": cfg.z_window,
        "leading": lead,
        "character": ch.to_json(),
    }))
}

fn singular(a: &SingularArgs, seed: u64) -> Result<Value, Error> {
    if let Some(count) = a.random_h {
        let c = a.c.clone().ok_or_else(|| Error::Parse("--random-h needs --c".into()))?;
        let n = a.level.ok_or_else(|| Error::Parse("--random-h needs --level".into()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<Value> = (0..count)
            .map(|_| {
                let h = Rational::new(rng.gen_range(-60i64..=60).into(), rng.gen_range(1i64..=37).into());
                json!({"h": fr(&h), "count": find_singular_vectors(&c, &h, n).len()})
            })
            .collect();
        return Ok(json!({"c": fr(&c), "level": n, "seed": seed, "samples": samples}));
    }
    let (c, h, n) = match (&a.t, &a.c, &a.h) {
        (Some(t), _, _) => {
            let (r, s) = (a.r.unwrap(), a.s.unwrap());
            if r < 1 || s < 1 {
                return Err(Error::Domain(format!("(r, s) = ({r}, {s}) must be positive")));
            }
            let level = a.level.unwrap_or((r * s) as u32);
            (crate::levels::c_vir(t), virasoro_h(r, s, t)?, level)
        }
        (None, Some(c), Some(h)) => {
            let n = a.level.ok_or_else(|| Error::Parse("--c/--h need --level".into()))?;
            (c.clone(), h.clone(), n)
        }
        _ => return Err(Error::Parse("singular needs --t/--r/--s or --c/--h/--level".into())),
    };
    if n == 0 {
        return Err(Error::Domain("level must be at least 1".into()));
    }
    let vs = find_singular_vectors(&c, &h, n);
    Ok(json!({
        "c": fr(&c),
        "h": fr(&h),
        "level": n,
        "count": vs.len(),
        "vectors": vs.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
    }))
}

fn branch_verify(cmd: &Command, cfg: &Config) -> Result<Value, Error> {
    let Command::BranchVerify { u, v, r, s, a, flow, lambda } = cmd else { unreachable!() };
    let p = BranchingParams {
        level: level_from_uv(*u, *v)?,
        r: *r,
        s: *s,
        a: *a,
        flow: *flow,
        lambda: lambda.clone(),
    };
    let mut out = branching_char_verify(&p, &cfg.q_order, cfg.z_window)?.to_json();
    out["z_window"] = json!(cfg.z_window);
    Ok(out)
}

fn n2_c1(data: &N2Data, simple: bool, n: u32, depth: &Rational) -> Result<Value, Error> {
    let spec = if simple {
        FreeFieldSpec::simple(data.ell.clone(), data.h.clone(), data.lambda.clone())
    } else {
        FreeFieldSpec::verma(data.ell.clone(), data.h.clone(), data.lambda.clone())
    };
    let mut c1 = C1Space::new(spec)?;
    let one = n2::step_one_target(c1.system(), n)?;
    let two = n2::step_two_target(c1.system(), n)?;
    let span = n2::step_three_spanning_set(c1.system(), n)?;
    let mut mismatches = Vec::new();
    let in_one = c1.contains(&one)?;
    if !in_one {
        mismatches.push(json!(format!("T_{{-1}}^{n} G+_{{-1/2}} z is not in C1")));
    }
    let in_two = c1.contains(&two)?;
    if !in_two {
        mismatches.push(json!(format!("T_{{-1}}^{n} G-_{{-1/2}} z is not in C1")));
    }
    let dims = c1.quotient_dims(depth)?;
    let spans = c1.spans_quotient(&span, depth)?;
    if !spans {
        mismatches.push(json!("spanning set does not fill the quotient"));
    }
    let total: usize = dims.values().sum();
    Ok(json!({
        "ell": fr(&data.ell),
        "h": fr(&data.h),
        "lambda": fr(&data.lambda),
        "simple": simple,
        "n": n,
        "depth": fr(depth),
        "checked": 3,
        "mismatches": mismatches,
        "step_one": in_one,
        "step_two": in_two,
        "spanning_set_size": span.len(),
        "spans_quotient": spans,
        "quotient_total": total,
        "quotient_dims": dims
            .iter()
            .map(|((d, ch), n)| json!({"weight": fr(d), "charge": ch, "dim": n}))
            .collect::<Vec<_>>(),
    }))
}

fn c1_vir(a: &C1VirArgs) -> Result<Value, Error> {
    let spec = match (&a.t, &a.c, &a.h) {
        (Some(t), _, _) => {
            let (r, s) = (a.r.unwrap(), a.s.unwrap());
            if r < 1 || s < 1 {
                return Err(Error::Domain(format!("(r, s) = ({r}, {s}) must be positive")));
            }
            let level = a.singular.unwrap_or((r * s) as u32);
            HighestWeightSpec::modulo_singular(crate::levels::c_vir(t), virasoro_h(r, s, t)?, level)?
        }
        (None, Some(c), Some(h)) => match a.singular {
            Some(level) => HighestWeightSpec::modulo_singular(c.clone(), h.clone(), level)?,
            None => HighestWeightSpec::verma(c.clone(), h.clone()),
        },
        _ => return Err(Error::Parse("c1-vir needs --t/--r/--s or --c/--h".into())),
    };
    let dims = c1_quotient_dims(&spec, a.level_max)?;
    Ok(json!({
        "c": fr(&spec.c),
        "h": fr(&spec.h),
        "relations": spec.relations.len(),
        "level_max": a.level_max,
        "dims": dims,
        "total": dims.iter().sum::<usize>(),
    }))
}
