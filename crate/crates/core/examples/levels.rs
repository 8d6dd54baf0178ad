//! Level data for a few admissible levels.
use admissible::levels::{coset_triple, dual_levels, level_from_uv, ribbon_known};

fn main() -> admissible::Result<()> {
    for (u, v) in [(3, 2), (5, 3), (4, 3), (7, 2)] {
        let l = level_from_uv(u, v)?;
        let d = dual_levels(&l)?;
        let c = coset_triple(&l)?;
        println!(
            "k = {:>5}  c_vir = {:>6}  c_sug = {:>5}  k_w = {:>5}  k' = {:>5}  ribbon = {}",
            l.k(),
            l.c_vir(),
            l.c_sug(),
            d.k_w,
            c.k_prime(),
            ribbon_known(&l)
        );
    }
    Ok(())
}
