//! Fusing ordinary modules with the simple, relaxed and projective modules at (5,3).
use admissible::affine::ModuleLabel;
use admissible::fusion::fuse;

fn main() -> admissible::Result<()> {
    for s in ["L[2]@(5,3)", "s-1(D+[2,1])@(5,3)", "E[1/5;1,1]@(5,3)", "P[2,1]@(5,3)"] {
        let x: ModuleLabel = s.parse()?;
        for r in 1..5 {
            println!("L[{r}] x {x} = {}", fuse(r, &x)?);
        }
    }
    Ok(())
}
