// Normal forms d1^{-1} e1 e3 ... sigma d2 and the two ways of acting on
// tensors.

use std::error::Error;

use brauerlab::diagrams::{d_nu_set, enumerate_all, BrauerDiagram};
use brauerlab::tensor::{act_diagram_direct, act_diagram_word, SymplecticSpace, TensorVector};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let d = BrauerDiagram::parse_rows("(1 3)(2 3')(1' 2')", None)?;
    let nf = d.to_normal_form();
    let word: Vec<String> = nf.word().iter().map(ToString::to_string).collect();
    println!("{} = {nf}", d.to_row_string());
    println!("word: {}", word.join(" "));
    assert_eq!(BrauerDiagram::from_normal_form(&nf), d);

    for n in 1..=5 {
        let sizes: Vec<usize> = (0..=n / 2).map(|f| d_nu_set(n, f).len()).collect();
        println!("n={n}: |D_nu_f| = {sizes:?}");
    }

    let space = SymplecticSpace::new(1)?;
    let mut agree = 0;
    for d in enumerate_all(3) {
        for t in space.simple_tensors(3) {
            let v = TensorVector::from_simple(t);
            assert_eq!(act_diagram_direct(&v, &d, &space)?, act_diagram_word(&v, &d, &space)?);
            agree += 1;
        }
    }
    println!("routes agree on {agree} (diagram, tensor) pairs");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
