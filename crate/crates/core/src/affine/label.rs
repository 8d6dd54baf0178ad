use std::fmt;

use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::exact::rational::rem_euclid;
use crate::exact::{parse_rational, qi, Rational};
use crate::levels::{lambda_rs, level_from_uv, AdmissibleLevel};

/// Kind of a weight module, with its indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    L { r: i64 },
    Dplus { r: i64, s: i64 },
    Dminus { r: i64, s: i64 },
    /// Relaxed module; `lambda` is stored in `[0, 2)`.
    E { lambda: Rational, r: i64, s: i64 },
    Eplus { r: i64, s: i64 },
    Eminus { r: i64, s: i64 },
    /// Projective cover of `D⁺_{r,s}` (of `σ(L_{u−r})` when `s = v−1`).
    P { r: i64, s: i64 },
}

impl Kind {
    pub fn r(&self) -> i64 {
        match self {
            Kind::L { r }
            | Kind::Dplus { r, .. }
            | Kind::Dminus { r, .. }
            | Kind::E { r, .. }
            | Kind::Eplus { r, .. }
            | Kind::Eminus { r, .. }
            | Kind::P { r, .. } => *r,
        }
    }

    pub fn s(&self) -> Option<i64> {
        match self {
            Kind::L { .. } => None,
            Kind::Dplus { s, .. }
            | Kind::Dminus { s, .. }
            | Kind::E { s, .. }
            | Kind::Eplus { s, .. }
            | Kind::Eminus { s, .. }
            | Kind::P { s, .. } => Some(*s),
        }
    }

    /// Same kind with the first index replaced.
    pub fn with_r(&self, r: i64) -> Kind {
        match self.clone() {
            Kind::L { .. } => Kind::L { r },
            Kind::Dplus { s, .. } => Kind::Dplus { r, s },
            Kind::Dminus { s, .. } => Kind::Dminus { r, s },
            Kind::E { lambda, s, .. } => Kind::E { lambda, r, s },
            Kind::Eplus { s, .. } => Kind::Eplus { r, s },
            Kind::Eminus { s, .. } => Kind::Eminus { r, s },
            Kind::P { s, .. } => Kind::P { r, s },
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, Kind::L { .. } | Kind::Dplus { .. } | Kind::Dminus { .. } | Kind::E { .. })
    }
}

/// `σ^flow(kind)` at a fixed admissible level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleLabel {
    pub level: AdmissibleLevel,
    pub flow: i64,
    pub kind: Kind,
}

fn check_r(lvl: &AdmissibleLevel, r: i64) -> Result<()> {
    if r < 1 || r > lvl.u - 1 {
        return domain(format!("r = {r} outside 1..{}", lvl.u - 1));
    }
    Ok(())
}

fn check_rs(lvl: &AdmissibleLevel, r: i64, s: i64) -> Result<()> {
    check_r(lvl, r)?;
    if s < 1 || s > lvl.v - 1 {
        return domain(format!("s = {s} outside 1..{} at level {lvl}", lvl.v - 1));
    }
    Ok(())
}

/// Whether `λ` avoids the excluded values `λ_{r,s}` and `λ_{u−r,v−s}` modulo 2.
pub fn lambda_allowed(lvl: &AdmissibleLevel, lambda: &Rational, r: i64, s: i64) -> bool {
    let two = qi(2);
    let a = lambda_rs(r, s, lvl);
    let b = lambda_rs(lvl.u - r, lvl.v - s, lvl);
    let ok = |x: &Rational| !rem_euclid(&(lambda - x), &two).is_zero();
    ok(&a) && ok(&b)
}

impl ModuleLabel {
    /// Validates the index ranges; `E` labels get `λ` reduced into `[0, 2)`.
    pub fn new(level: AdmissibleLevel, flow: i64, kind: Kind) -> Result<Self> {
        let kind = match kind {
            Kind::L { r } => {
                check_r(&level, r)?;
                Kind::L { r }
            }
            Kind::E { lambda, r, s } => {
                check_rs(&level, r, s)?;
                let lambda = rem_euclid(&lambda, &qi(2));
                if !lambda_allowed(&level, &lambda, r, s) {
                    return domain(format!(
                        "λ = {lambda} coincides with an excluded value λ_{{{r},{s}}} or λ_{{{},{}}} mod 2",
                        level.u - r,
                        level.v - s
                    ));
                }
                Kind::E { lambda, r, s }
            }
            other => {
                check_rs(&level, other.r(), other.s().unwrap())?;
                other
            }
        };
        Ok(ModuleLabel { level, flow, kind })
    }

    pub fn l(level: AdmissibleLevel, flow: i64, r: i64) -> Result<Self> {
        Self::new(level, flow, Kind::L { r })
    }

    pub fn dplus(level: AdmissibleLevel, flow: i64, r: i64, s: i64) -> Result<Self> {
        Self::new(level, flow, Kind::Dplus { r, s })
    }

    pub fn dminus(level: AdmissibleLevel, flow: i64, r: i64, s: i64) -> Result<Self> {
        Self::new(level, flow, Kind::Dminus { r, s })
    }

    pub fn e(level: AdmissibleLevel, flow: i64, lambda: Rational, r: i64, s: i64) -> Result<Self> {
        Self::new(level, flow, Kind::E { lambda, r, s })
    }

    pub fn eplus(level: AdmissibleLevel, flow: i64, r: i64, s: i64) -> Result<Self> {
        Self::new(level, flow, Kind::Eplus { r, s })
    }

    pub fn eminus(level: AdmissibleLevel, flow: i64, r: i64, s: i64) -> Result<Self> {
        Self::new(level, flow, Kind::Eminus { r, s })
    }

    pub fn p(level: AdmissibleLevel, flow: i64, r: i64, s: i64) -> Result<Self> {
        Self::new(level, flow, Kind::P { r, s })
    }

    pub fn with_flow(&self, flow: i64) -> Self {
        ModuleLabel { flow, ..self.clone() }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match &self.kind {
            Kind::L { r } => format!("L[{r}]"),
            Kind::Dplus { r, s } => format!("D+[{r},{s}]"),
            Kind::Dminus { r, s } => format!("D-[{r},{s}]"),
            Kind::E { lambda, r, s } => format!("E[{lambda};{r},{s}]"),
            Kind::Eplus { r, s } => format!("E+[{r},{s}]"),
            Kind::Eminus { r, s } => format!("E-[{r},{s}]"),
            Kind::P { r, s } => format!("P[{r},{s}]"),
        };
        if self.flow == 0 {
            write!(f, "{body}@{}", self.level)
        } else {
            write!(f, "s{}({body})@{}", self.flow, self.level)
        }
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {x:?}"))))
        .collect()
}

impl std::str::FromStr for ModuleLabel {
    type Err = Error;

    /// Grammar: `[s<flow>(]<kind>[<indices>][)]@(<u>,<v>)`, e.g. `s3(E[1/3;1,1])@(3,2)`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("label {text:?}: {why}"));
        let t = text.trim();
        let (body, lvl) = t.rsplit_once('@').ok_or_else(|| bad("missing @(u,v)"))?;
        let lvl = lvl.trim();
        let inner = lvl
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| bad("level must read (u,v)"))?;
        let uv = parse_ints(inner)?;
        if uv.len() != 2 {
            return Err(bad("level must have two integers"));
        }
        let level = level_from_uv(uv[0], uv[1])?;
        let body = body.trim();
        let (flow, kind_text) = if let Some(rest) = body.strip_prefix('s') {
            let open = rest.find('(').ok_or_else(|| bad("flow prefix needs parentheses"))?;
            let flow: i64 = rest[..open].parse().map_err(|_| bad("bad flow"))?;
            let k = rest[open + 1..].strip_suffix(')').ok_or_else(|| bad("unbalanced parentheses"))?;
            (flow, k)
        } else {
            (0, body)
        };
        let open = kind_text.find('[').ok_or_else(|| bad("missing ["))?;
        let name = &kind_text[..open];
        let args = kind_text[open + 1..].strip_suffix(']').ok_or_else(|| bad("missing ]"))?;
        let two = |args: &str| -> Result<(i64, i64)> {
            let v = parse_ints(args)?;
            if v.len() != 2 {
                return Err(bad("expected two indices"));
            }
            Ok((v[0], v[1]))
        };
        let kind = match name {
            "L" => {
                let v = parse_ints(args)?;
                if v.len() != 1 {
                    return Err(bad("L takes one index"));
                }
                Kind::L { r: v[0] }
            }
            "D+" => two(args).map(|(r, s)| Kind::Dplus { r, s })?,
            "D-" => two(args).map(|(r, s)| Kind::Dminus { r, s })?,
            "E+" => two(args).map(|(r, s)| Kind::Eplus { r, s })?,
            "E-" => two(args).map(|(r, s)| Kind::Eminus { r, s })?,
            "P" => two(args).map(|(r, s)| Kind::P { r, s })?,
            "E" => {
                let (lam, rs) = args.split_once(';').ok_or_else(|| bad("E needs λ;r,s"))?;
                let lambda = parse_rational(lam)?;
                let (r, s) = two(rs)?;
                Kind::E { lambda, r, s }
            }
            _ => return Err(bad("unknown kind")),
        };
        ModuleLabel::new(level, flow, kind)
    }
}
