// Multiplying Brauer diagrams and checking a few defining relations.

use std::error::Error;

use brauerlab::diagrams::{enumerate_all, BrauerDiagram, BrauerElement, IntPolynomial};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 1..=5 {
        println!("|BD_{n}| = {}", enumerate_all(n).len());
    }

    let e1 = BrauerDiagram::generator_e(1, 3)?;
    let e2 = BrauerDiagram::generator_e(2, 3)?;
    let (d, loops) = e1.compose(&e1)?;
    println!("e1 * e1 = x^{loops} {d}");
    assert_eq!((d, loops), (e1.clone(), 1));

    let (d, loops) = e1.compose(&e2)?;
    let (d, more) = d.compose(&e1)?;
    println!("e1 e2 e1 = x^{} {}", loops + more, d.to_row_string());
    assert_eq!(d, e1);

    // (1 + s1 + e1)^2 = 2 + 2 s1 + (4 + x) e1 in B_2(x)
    let one = BrauerElement::identity(2);
    let s1 = BrauerElement::s(1, 2)?;
    let e1 = BrauerElement::e(1, 2)?;
    let a = one.plus(&s1)?.plus(&e1)?;
    let sq = a.multiply(&a)?;
    let two = IntPolynomial::from_i64(&[2]);
    let want = one
        .scale(&two)
        .plus(&s1.scale(&two))?
        .plus(&e1.scale(&IntPolynomial::from_i64(&[4, 1])))?;
    println!("(1 + s1 + e1)^2 = {sq}");
    assert_eq!(sq, want);

    let row = BrauerDiagram::parse_rows("(1 2')(2 1')(3 3')", None)?;
    println!("parsed {} as interleaved {row}", row.to_row_string());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
