// X_(6,2) is a rational but not an integral combination of the ∗-orbit of
// X_(4,4).

use std::error::Error;

use brauerlab::xbasis::remark213_check;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let out = remark213_check()?;
    println!("orbit of X_(4,4): {} elements in Z^{}", out.orbit_size, out.ambient_dimension);
    println!("X_(6,2) in the rational span: {}", out.rational_member);
    println!("X_(6,2) in the integer span:  {}", out.integer_member);
    assert!(out.rational_member && !out.integer_member);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
