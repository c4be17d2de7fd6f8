// Murphy elements of permutation modules and their images in the Brauer
// algebra.

use std::error::Error;

use brauerlab::combinatorics::{semistandard_tableaux, standard_tableaux, Partition};
use brauerlab::symgroup::{jm_element, murphy_element};
use brauerlab::xbasis::{distinguished_vector, pi_lambda, XBasis};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lambda = Partition::new(vec![2, 2])?;
    let mu = Partition::new(vec![3, 1])?;
    let basis = XBasis::new(2)?.with_coordinates()?;
    for s in semistandard_tableaux(&mu, &lambda)? {
        for t in standard_tableaux(&mu) {
            let x = murphy_element(&s, &t)?;
            let image = pi_lambda(&lambda, &x)?;
            let inside = basis.in_filtration(&lambda, &image)?;
            println!("S={:?} t={:?}: {} terms, image {image}, in M^(2,2): {inside}", s.rows(), t.rows(), x.len());
            assert!(inside);
        }
    }

    // the distinguished vector is an eigenvector of every Jucys-Murphy element
    let lambda = Partition::new(vec![4, 2])?;
    let v = distinguished_vector(&lambda)?;
    for a in 1..=6 {
        let w = v.star_element(&jm_element(a, 6)?)?;
        let ratio = w.coefficient(v.terms().keys().next().expect("nonzero")) / v.terms().values().next().expect("nonzero");
        println!("L_{a} eigenvalue {ratio}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
