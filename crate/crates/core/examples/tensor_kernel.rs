// The annihilator of symplectic tensor space inside B_n(-2m).

use std::error::Error;

use brauerlab::diagrams::BrauerElement;
use brauerlab::tensor::{
    act_element, expected_kernel_dimension, kernel_phi, symplectic_length, verify_kernel_theorem,
    SimpleTensor, SymplecticSpace, TensorVector,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let space = SymplecticSpace::new(1)?;
    let v = TensorVector::from_simple(SimpleTensor::new(vec![1, 2], &space)?);
    let a = BrauerElement::identity(2)
        .plus(&BrauerElement::s(1, 2)?)?
        .plus(&BrauerElement::e(1, 2)?)?
        .specialize(&space.delta());
    println!("(v1⊗v2)(1 + s1 + e1) = {}", act_element(&v, &a, &space)?);

    for (n, m) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2)] {
        let k = kernel_phi(n, m)?;
        let r = verify_kernel_theorem(n, m)?;
        println!(
            "n={n} m={m}: dim Ker = {} (expected {}), rank of phi {}, equals filtration module: {}",
            k.dimension(),
            expected_kernel_dimension(n, m),
            k.phi_rank,
            r.pass
        );
    }

    let space = SymplecticSpace::new(2)?;
    let t = SimpleTensor::new(vec![1, 4, 2, 3], &space)?;
    println!("symplectic length of {t}: {}", symplectic_length(&t, &space));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
