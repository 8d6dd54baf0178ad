//! C₁-membership for the free-field module at the dual data of level (3,2).
use admissible::exact::{q, qi};
use admissible::n2::{step_one_target, step_three_spanning_set, step_two_target, C1Space, FreeFieldSpec};

fn main() -> admissible::Result<()> {
    let mut c1 = C1Space::new(FreeFieldSpec::simple(q(-1, 2), qi(0), q(1, 5)))?;
    let one = step_one_target(c1.system(), 1)?;
    let two = step_two_target(c1.system(), 1)?;
    let span = step_three_spanning_set(c1.system(), 1)?;
    println!("T_-1 G+_-1/2 z in C1: {}", c1.contains(&one)?);
    println!("T_-1 G-_-1/2 z in C1: {}", c1.contains(&two)?);
    for ((w, ch), d) in c1.quotient_dims(&qi(3))? {
        println!("quotient at weight {w}, charge {ch}: {d}");
    }
    println!("{} vectors span the quotient: {}", span.len(), c1.spans_quotient(&span, &qi(3))?);
    Ok(())
}
