// The S_2n-equivariant basis {X_{λ,t}} and its unimodularity.

use std::error::Error;

use brauerlab::combinatorics::Partition;
use brauerlab::xbasis::{lemma27_check, verify_basis, x_lambda, XBasis};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = x_lambda(&Partition::new(vec![4, 2])?)?;
    println!("X_(4,2) has {} terms: {x}", x.len());

    for n in 1..=4 {
        let check = verify_basis(n)?;
        println!(
            "n={n}: {} elements, rank {}, Z-basis: {}",
            check.size,
            check.rank,
            check.is_z_basis()
        );
    }

    let basis = XBasis::new(3)?;
    for lambda in ["6", "4,2", "2,2,2"] {
        let l: Partition = lambda.parse()?;
        println!("({lambda}) occupies positions {:?}", basis.positions(&l));
    }

    let out = lemma27_check(&Partition::new(vec![4, 2])?)?;
    println!(
        "(4,2): identity holds with multiplier {}: {}; paired-columns coefficient {}",
        out.multiplier, out.holds, out.witness_coefficient
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
