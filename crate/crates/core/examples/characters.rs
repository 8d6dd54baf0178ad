//! Leading terms of a relaxed character and of its spectral flow.
use admissible::affine::{character, leading_exponents, CharacterTarget, ModuleLabel, Truncation};
use admissible::exact::qi;

fn main() -> admissible::Result<()> {
    let trunc = Truncation::new(qi(3), 2)?;
    for s in ["E[1/3;1,1]@(3,2)", "s1(E[1/3;1,1])@(3,2)"] {
        let x: ModuleLabel = s.parse()?;
        let ch = character(&CharacterTarget::Module(x.clone()), &trunc)?;
        println!("{x}");
        for (z, lead) in leading_exponents(&ch) {
            let lead = lead.map(|e| e.to_string()).unwrap_or_else(|| "-".into());
            println!("  z^{z:<6} q^{lead}");
        }
    }
    Ok(())
}
