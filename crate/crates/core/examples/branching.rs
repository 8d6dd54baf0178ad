//! Coset branching of a relaxed module and the exact character identity behind it.
use admissible::affine::ModuleLabel;
use admissible::exact::{q, qi};
use admissible::fusion::{branch, branching_char_verify, BranchingParams};
use admissible::levels::level_from_uv;

fn main() -> admissible::Result<()> {
    let x: ModuleLabel = "E[1/3;1,1]@(3,2)".parse()?;
    for a in [1, 2] {
        let d = branch(&x, a)?;
        for ((y, m), n) in &d.summands {
            println!("{x} (x) L1[{a}] contains {n} x {y} (x) {m}");
        }
        let p = BranchingParams { level: level_from_uv(3, 2)?, r: 1, s: 1, a, flow: 0, lambda: q(1, 3) };
        let check = branching_char_verify(&p, &qi(4), 3)?;
        println!("  character identity to order 4: {}", check.is_identity());
    }
    Ok(())
}
