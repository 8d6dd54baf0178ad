use serde::Serialize;

use super::module::{check_ell, FFVector, FreeFieldModule};
use crate::error::{Error, Result};
use crate::exact::rational::is_integer;
use crate::exact::{q, qi, Rational};
use crate::modekernel::{Algebra, FieldArena, FieldId, ModeEngine};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum N2Generator {
    T,
    J,
    Gplus,
    Gminus,
}

impl N2Generator {
    pub const ALL: [N2Generator; 4] = [N2Generator::T, N2Generator::J, N2Generator::Gplus, N2Generator::Gminus];

    /// Index in [`Algebra::n2`].
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn weight(self) -> Rational {
        match self {
            N2Generator::T => qi(2),
            N2Generator::J => qi(1),
            _ => q(3, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            N2Generator::T => "T",
            N2Generator::J => "J",
            N2Generator::Gplus => "G+",
            N2Generator::Gminus => "G-",
        }
    }
}

/// A mode `x_n` of an N=2 generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct N2ModeOp {
    pub which: N2Generator,
    pub index: Rational,
}

impl N2ModeOp {
    pub fn new(which: N2Generator, index: Rational) -> Result<Self> {
        if !is_integer(&(&index - which.weight())) {
            return Err(Error::Domain(format!("{}_{{{index}}} is outside its moding", which.name())));
        }
        Ok(N2ModeOp { which, index })
    }
}

impl std::fmt::Display for N2ModeOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}_{{{}}}", self.which.name(), self.index)
    }
}

/// `c = 3ℓ/(ℓ+2)`
pub fn n2_central_charge(ell: &Rational) -> Rational {
    qi(3) * ell / (ell + qi(2))
}

/// The fields `T, J, G±` inside the free-field algebra.
///
/// With `Φ = :ψ⁺ψ⁻: − (ℓ/4)X`:
/// `J = −ℓ/(2(ℓ+2)) X + :ψ⁺ψ⁻:`, `G⁺ = ψ⁺`,
/// `G⁻ = 2/(ℓ+2) · ((ℓ+2):Lψ⁻: − :Φ:Φψ⁻:: − (ℓ+1):∂Φ ψ⁻:)` and
/// `T = L + L^ψ + L^X + ∂((ℓ/4)X − :ψ⁺ψ⁻:)`.
///
/// The factor `2/(ℓ+2)` puts `{G⁺, G⁻}` in the standard form `2T + …`; the normal
/// ordering of the quadratic term nests to the right.
pub struct N2Realization {
    pub arena: FieldArena,
    pub ell: Rational,
    fields: [FieldId; 4],
    psi_minus: FieldId,
}

impl N2Realization {
    pub fn new(module: &FreeFieldModule) -> Result<Self> {
        let ell = module.spec().ell.clone();
        check_ell(&ell)?;
        let kappa = module.kappa().clone();
        let mut f = FieldArena::new(crate::modekernel::GradedModule::algebra(module).clone());
        let l = f.generator("L")?;
        let x = f.generator("X")?;
        let pp = f.generator("psi+")?;
        let pm = f.generator("psi-")?;
        let np = f.normal(pp, pm);
        let jx = f.scale(-&ell / (qi(2) * (&ell + qi(2))), x);
        let j = f.sum(vec![jx, np])?;
        let xs = f.scale(-&ell / qi(4), x);
        let phi = f.sum(vec![np, xs])?;
        let lpm = f.normal(l, pm);
        let a = f.scale(&ell + qi(2), lpm);
        let phipm = f.normal(phi, pm);
        let phiphipm = f.normal(phi, phipm);
        let b = f.scale(qi(-1), phiphipm);
        let dphi = f.deriv(phi);
        let dphipm = f.normal(dphi, pm);
        let c = f.scale(-(&ell + qi(1)), dphipm);
        let gm_raw = f.sum(vec![a, b, c])?;
        let gm = f.scale(qi(2) / (&ell + qi(2)), gm_raw);
        let dpp = f.deriv(pp);
        let dpm = f.deriv(pm);
        let t1 = f.normal(dpp, pm);
        let t2 = f.normal(dpm, pp);
        let lpsi_sum = f.sum(vec![t1, t2])?;
        let lpsi = f.scale(q(1, 2), lpsi_sum);
        let xx = f.normal(x, x);
        let lx = f.scale(Rational::from_integer(1.into()) / (qi(2) * &kappa), xx);
        let xq = f.scale(&ell / qi(4), x);
        let npm = f.scale(qi(-1), np);
        let shift_sum = f.sum(vec![xq, npm])?;
        let shift = f.deriv(shift_sum);
        let t = f.sum(vec![l, lpsi, lx, shift])?;
        Ok(N2Realization { arena: f, ell, fields: [t, j, pp, gm], psi_minus: pm })
    }

    pub fn field(&self, g: N2Generator) -> FieldId {
        self.fields[g.index()]
    }

    /// The free fermion `ψ⁻`.
    pub fn psi_minus(&self) -> FieldId {
        self.psi_minus
    }

    /// The N=2 algebra the fields should satisfy.
    pub fn target_algebra(&self) -> Algebra {
        Algebra::n2(n2_central_charge(&self.ell))
    }

    pub fn apply(&self, engine: &ModeEngine<'_, FreeFieldModule>, op: &N2ModeOp, v: &FFVector) -> Result<FFVector> {
        engine.mode(self.field(op.which), &op.index, v)
    }
}
