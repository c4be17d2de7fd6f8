// Even partitions, standard tableaux and Specht characters.

use std::error::Error;

use brauerlab::combinatorics::{
    double_factorial_odd, mn_character, standard_tableaux, two_partitions,
};
use brauerlab::symgroup::conjugacy_class_reps;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 1..=4 {
        let shapes = two_partitions(n);
        let counts: Vec<String> = shapes
            .iter()
            .map(|l| format!("({l}):{}", standard_tableaux(l).len()))
            .collect();
        let total: usize = shapes.iter().map(|l| standard_tableaux(l).len()).sum();
        println!("n={n}: {} -> {total} = {}", counts.join(" "), double_factorial_odd(n));
    }

    let lambda = "4,2".parse()?;
    println!("characters of S^(4,2):");
    for (rho, _) in conjugacy_class_reps(6) {
        println!("  class ({rho}): {}", mn_character(&lambda, &rho)?);
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
