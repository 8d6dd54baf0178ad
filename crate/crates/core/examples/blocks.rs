//! Walks the block C[1,0] at (3,2) and prints Loewy data of the projectives.
use admissible::affine::{block_member, block_of, structure_of, ModuleLabel};
use admissible::levels::level_from_uv;

fn main() -> admissible::Result<()> {
    let l = level_from_uv(3, 2)?;
    for pos in -3..=3 {
        let x = block_member(&l, 1, 0, pos)?;
        let (b, p) = block_of(&x)?;
        println!("{b} position {p:>2}: {x}");
    }
    let p = ModuleLabel::p(l, 0, 1, 1)?;
    let s = structure_of(&p)?;
    for (i, layer) in s.layers.iter().enumerate() {
        let names: Vec<String> = layer.iter().map(|x| x.to_string()).collect();
        println!("{p} layer {i}: {}", names.join(", "));
    }
    Ok(())
}
