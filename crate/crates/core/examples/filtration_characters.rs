// Characters of the filtration quotients M^λ / M^{▷λ} against the
// Murnaghan-Nakayama characters.

use std::error::Error;

use brauerlab::combinatorics::{mn_character, two_partitions};
use brauerlab::exactla::Rational;
use brauerlab::symgroup::conjugacy_class_reps;
use brauerlab::xbasis::{filtration_module, XBasis};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 3;
    let basis = XBasis::new(n)?.with_coordinates()?;
    for lambda in two_partitions(n) {
        let full = filtration_module(&lambda, false)?.dimension();
        let strict = filtration_module(&lambda, true)?.dimension();
        let mut row = Vec::new();
        for (rho, w) in conjugacy_class_reps(2 * n) {
            let chi = basis.quotient_character(&lambda, &w)?;
            assert_eq!(chi, Rational::from_integer(mn_character(&lambda, &rho)?));
            row.push(chi.to_string());
        }
        println!("({lambda}) dim {full} - {strict}: [{}]", row.join(", "));
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
