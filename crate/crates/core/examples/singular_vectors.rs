//! Singular vectors of Virasoro Verma modules at Kac weights, and C₁-quotients.
use admissible::exact::q;
use admissible::levels::{c_vir, virasoro_h};
use admissible::virasoro::{c1_quotient_dims, find_singular_vectors, HighestWeightSpec};

fn main() -> admissible::Result<()> {
    let t = q(4, 3);
    let c = c_vir(&t);
    for (r, s) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let h = virasoro_h(r, s, &t)?;
        let n = (r * s) as u32;
        for v in find_singular_vectors(&c, &h, n) {
            println!("h_{{{r},{s}}} = {h}: {v}");
        }
        let spec = HighestWeightSpec::modulo_singular(c.clone(), h, n)?;
        println!("  dim W/C1(W) by level: {:?}", c1_quotient_dims(&spec, 6)?);
    }
    Ok(())
}
