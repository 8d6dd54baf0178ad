//! The N=2 relations on the free-field module, top-state data and the p_r factorization.
use admissible::exact::q;
use admissible::n2::{gminus_factor_check, p_r, top_data, verify_relations};

fn main() -> admissible::Result<()> {
    let (l, h, lam) = (q(-4, 3), q(3, 11), q(2, 7));
    let report = verify_relations(&l, &h, &lam, &q(2, 1))?;
    println!("checked {} brackets, {} mismatches", report.checked, report.mismatches.len());
    let top = top_data(&l, &h, &lam)?;
    println!("Delta = {}  mu = {}  lambda^tau = {}  mu + mu^tau = {}", top.delta, top.mu, top.lambda_tau, top.mu_sum());
    for r in 1..=3 {
        println!("p_{r} = {}", p_r(&l, &h, &lam, r));
    }
    println!("G-_(-5/2) G-_(-3/2) G-_(-1/2) factors: {}", gminus_factor_check(&l, &h, &lam, &[q(5, 2), q(3, 2), q(1, 2)])?);
    Ok(())
}
