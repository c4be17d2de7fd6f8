// The right action of S_2n on diagrams by conjugating their involutions.

use std::error::Error;

use brauerlab::diagrams::{enumerate_all, BrauerDiagram};
use brauerlab::symgroup::Permutation;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 3;
    let d = BrauerDiagram::identity(n);
    let w = Permutation::parse("(2 3)(4 5)", 2 * n)?;
    let e = d.star(&w)?;
    println!("{d} * {w} = {e}  (rows: {})", e.to_row_string());

    let orbit = d.orbit();
    println!("orbit of the identity: {} diagrams of {}", orbit.len(), enumerate_all(n).len());
    assert_eq!(orbit.len(), 15);

    let stab = d.stabilizer();
    println!("stabilizer order {} = 2^{n} * {n}!", stab.len());
    assert_eq!(stab.len(), 48);

    // right action: (D * u) * v = D * (uv)
    let u = Permutation::parse("(1 4 2)", 2 * n)?;
    let v = Permutation::parse("(3 6)", 2 * n)?;
    assert_eq!(d.star(&u)?.star(&v)?, d.star(&u.then(&v))?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
