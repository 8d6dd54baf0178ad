use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::sign::{koszul, Parity};
use crate::error::{Error, Result};
use crate::exact::rational::is_integer as is_integer_mode;
use crate::exact::{q, qi, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Moding {
    Integer,
    HalfInteger,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub parity: Parity,
    /// Weight used for the weight-adjusted mode labels: `A(z) = Σ A_n z^{−n−Δ}`.
    pub weight: Rational,
    pub moding: Moding,
}

/// A mode `x_m` named by generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    pub generator: String,
    pub index: Rational,
}

impl Mode {
    pub fn new(generator: &str, index: Rational) -> Self {
        Mode { generator: generator.to_string(), index }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{}}}", self.generator, self.index)
    }
}

/// Linear combination of modes plus a central scalar.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModeCombination {
    pub terms: Vec<(Mode, Rational)>,
    pub central: Rational,
}

impl ModeCombination {
    pub fn normalized(mut self) -> Self {
        self.terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mode, Rational)> = Vec::new();
        for (m, c) in self.terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ModeCombination { terms: out, central: self.central }
    }

    pub fn add_scaled(&mut self, other: &ModeCombination, c: &Rational) {
        for (m, x) in &other.terms {
            self.terms.push((m.clone(), x * c));
        }
        self.central += &other.central * c;
    }
}

/// Bracket in index form: `[x_m, y_n] = Σ coeff · g_p + central`.
#[derive(Clone, Debug, Default)]
pub struct Bracket {
    pub terms: Vec<(usize, Rational, Rational)>,
    pub central: Rational,
}

type Table = dyn Fn(usize, &Rational, usize, &Rational) -> Bracket + Send + Sync;

/// Generators with a closed-form super-bracket table. Immutable once built.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    generators: Vec<GeneratorSpec>,
    table: Arc<Table>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("name", &self.name).field("generators", &self.generators).finish()
    }
}

fn delta(x: &Rational) -> bool {
    x.is_zero()
}

fn gen(name: &str, parity: Parity, weight: Rational, moding: Moding) -> GeneratorSpec {
    GeneratorSpec { name: name.into(), parity, weight, moding }
}

impl Algebra {
    pub fn new<F>(name: &str, generators: Vec<GeneratorSpec>, table: F) -> Self
    where
        F: Fn(usize, &Rational, usize, &Rational) -> Bracket + Send + Sync + 'static,
    {
        Algebra { name: name.into(), generators, table: Arc::new(table) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::Domain(format!("unknown generator {name:?} in algebra {}", self.name)))
    }

    pub fn spec(&self, i: usize) -> &GeneratorSpec {
        &self.generators[i]
    }

    /// Checks that a mode index is compatible with the moding of generator `i`.
    pub fn check_mode(&self, i: usize, m: &Rational) -> Result<()> {
        let g = &self.generators[i];
        let ok = match g.moding {
            Moding::Integer => is_integer_mode(m),
            Moding::HalfInteger => is_integer_mode(&(m - q(1, 2))),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("mode {m} incompatible with the moding of {}", g.name)))
        }
    }

    /// Super-bracket of two generator modes by index.
    pub fn bracket_idx(&self, a: usize, m: &Rational, b: usize, n: &Rational) -> Bracket {
        (self.table)(a, m, b, n)
    }

    /// `[x, y]` as a combination of modes plus a central term.
    pub fn commutator(&self, x: &Mode, y: &Mode) -> Result<ModeCombination> {
        let a = self.index_of(&x.generator)?;
        let b = self.index_of(&y.generator)?;
        self.check_mode(a, &x.index)?;
        self.check_mode(b, &y.index)?;
        let br = self.bracket_idx(a, &x.index, b, &y.index);
        Ok(self.to_combination(br))
    }

    fn to_combination(&self, br: Bracket) -> ModeCombination {
        ModeCombination {
            terms: br
                .terms
                .into_iter()
                .map(|(g, p, c)| (Mode { generator: self.generators[g].name.clone(), index: p }, c))
                .collect(),
            central: br.central,
        }
        .normalized()
    }

    /// `[x, Σ c_i y_i + κ]`, linear in the second slot; central terms bracket to zero.
    pub fn commutator_with(&self, x: &Mode, y: &ModeCombination) -> Result<ModeCombination> {
        let mut out = ModeCombination::default();
        for (m, c) in &y.terms {
            out.add_scaled(&self.commutator(x, m)?, c);
        }
        Ok(out.normalized())
    }

    pub fn parity_of(&self, m: &Mode) -> Result<Parity> {
        Ok(self.generators[self.index_of(&m.generator)?].parity)
    }

    /// Virasoro algebra with generator `L`.
    pub fn virasoro(c: Rational) -> Self {
        Algebra::new(
            "Vir",
            vec![gen("L", Parity::Even, qi(2), Moding::Integer)],
            move |_, m, _, n| vir_bracket(0, m, n, &c),
        )
    }

    /// N=2 superconformal algebra on generators `T, J, G+, G-` (indices 0..4).
    pub fn n2(c: Rational) -> Self {
        let gens = vec![
            gen("T", Parity::Even, qi(2), Moding::Integer),
            gen("J", Parity::Even, qi(1), Moding::Integer),
            gen("G+", Parity::Odd, q(3, 2), Moding::HalfInteger),
            gen("G-", Parity::Odd, q(3, 2), Moding::HalfInteger),
        ];
        let parities: Vec<Parity> = gens.iter().map(|g| g.parity).collect();
        Algebra::new("N2", gens, move |a, m, b, n| {
            if a <= b {
                n2_ordered(a, m, b, n, &c)
            } else {
                let mut br = n2_ordered(b, n, a, m, &c);
                let s = -koszul(parities[a], parities[b]);
                for t in &mut br.terms {
                    t.2 *= &s;
                }
                br.central *= &s;
                br
            }
        })
    }

    /// Free fields `L` (Virasoro at `c_l`), `X` (Heisenberg, `[X_m, X_n] = κ m δ`),
    /// and a fermion pair `ψ±` with `{ψ⁺_r, ψ⁻_s} = δ_{r+s,0}`.
    ///
    /// The fermions carry the weights `3/2` and `−1/2` of the shifted N=2 grading,
    /// so `ψ⁺_n` and `G⁺_n` share mode labels.
    pub fn free_field(c_l: Rational, kappa: Rational) -> Self {
        let gens = vec![
            gen("L", Parity::Even, qi(2), Moding::Integer),
            gen("X", Parity::Even, qi(1), Moding::Integer),
            gen("psi+", Parity::Odd, q(3, 2), Moding::HalfInteger),
            gen("psi-", Parity::Odd, q(-1, 2), Moding::HalfInteger),
        ];
        Algebra::new("FreeField", gens, move |a, m, b, n| match (a, b) {
            (0, 0) => vir_bracket(0, m, n, &c_l),
            (1, 1) => Bracket {
                terms: vec![],
                central: if delta(&(m + n)) { &kappa * m } else { Rational::zero() },
            },
            (2, 3) | (3, 2) => Bracket {
                terms: vec![],
                central: if delta(&(m + n)) { Rational::one() } else { Rational::zero() },
            },
            _ => Bracket::default(),
        })
    }
}

fn vir_bracket(g: usize, m: &Rational, n: &Rational, c: &Rational) -> Bracket {
    let central = if delta(&(m + n)) { (m * m * m - m) / qi(12) * c } else { Rational::zero() };
    Bracket { terms: vec![(g, m + n, m - n)], central }
}

fn n2_ordered(a: usize, m: &Rational, b: usize, n: &Rational, c: &Rational) -> Bracket {
    let zero = Rational::zero;
    let p = m + n;
    match (a, b) {
        (0, 0) => vir_bracket(0, m, n, c),
        (0, 1) => Bracket { terms: vec![(1, p, -n.clone())], central: zero() },
        (1, 1) => Bracket {
            terms: vec![],
            central: if delta(&p) { m * c / qi(3) } else { zero() },
        },
        (0, 2) | (0, 3) => Bracket { terms: vec![(b, p, m / qi(2) - n)], central: zero() },
        (1, 2) => Bracket { terms: vec![(2, p, Rational::one())], central: zero() },
        (1, 3) => Bracket { terms: vec![(3, p, -Rational::one())], central: zero() },
        (2, 3) => Bracket {
            terms: vec![(0, p.clone(), qi(2)), (1, p.clone(), m - n)],
            central: if delta(&p) { (qi(4) * m * m - qi(1)) / qi(12) * c } else { zero() },
        },
        _ => Bracket::default(),
    }
}
