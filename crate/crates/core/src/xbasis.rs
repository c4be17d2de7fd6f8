//! Block orbit sums `X_λ`, their translates `X_{λ,t} = X_λ ∗ d(t)`, and the
//! filtration of `B_n` they span.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::combinatorics::{
    semistandard_tableaux, standard_tableaux, two_partitions, CombinatoricsError, Composition,
    Partition, Tableau,
};
use crate::diagrams::{
    bd_sum, diagram_index, enumerate_all, BdFamily, BrauerDiagram, BrauerElement, DiagramError,
    DiagramSum,
};
use crate::exactla::{hermite_solve, EchelonBasis, IntegerMatrix, LinAlgError, Rational, RationalMatrix};
use crate::symgroup::{
    h_element, jm_element, murphy_element, n_lambda, tilde_order, y_element, GroupAlgebraElement,
    Permutation, SymGroupError,
};

#[derive(Debug, Error)]
pub enum XBasisError {
    #[error("partition {0} does not have all parts even")]
    NotEvenPartition(String),
    #[error("expected a partition of {expected}, found one of {found}")]
    WrongSize { expected: usize, found: usize },
    #[error("tableau is not standard of shape {0}")]
    NotStandard(String),
    #[error("element is not constant on the left coset of {0}")]
    NotInvariant(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    SymGroup(#[from] SymGroupError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// `n` with `λ ⊢ 2n`, checking every part is even.
pub fn check_even(lambda: &Partition) -> Result<usize, XBasisError> {
    if !lambda.all_parts_even() || lambda.is_empty() {
        return Err(XBasisError::NotEvenPartition(lambda.to_string()));
    }
    Ok(lambda.size() / 2)
}

/// `X^{(a)}_{(b)}`.
pub fn x_block(a: usize, b: usize, n: usize) -> Result<DiagramSum, XBasisError> {
    Ok(bd_sum(n, &BdFamily::Block { a, b })?)
}

/// Every perfect matching of the label blocks `1..λ₁`, `λ₁+1..λ₁+λ₂`, …,
/// one per diagram.
fn block_matchings(lambda: &Partition) -> Vec<BrauerDiagram> {
    fn rec(block: usize, bounds: &[(usize, usize)], partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
        let Some(&(lo, hi)) = bounds.get(block) else {
            out.push(BrauerDiagram::from_partner0(partner.clone()).expect("complete matching"));
            return;
        };
        let Some(first) = (lo..hi).find(|&v| partner[v] == usize::MAX) else {
            rec(block + 1, bounds, partner, out);
            return;
        };
        for second in first + 1..hi {
            if partner[second] == usize::MAX {
                partner[first] = second;
                partner[second] = first;
                rec(block, bounds, partner, out);
                partner[first] = usize::MAX;
                partner[second] = usize::MAX;
            }
        }
    }
    let mut bounds = Vec::new();
    let mut start = 0;
    for &p in lambda.parts() {
        bounds.push((start, start + p));
        start += p;
    }
    let mut out = Vec::new();
    rec(0, &bounds, &mut vec![usize::MAX; lambda.size()], &mut out);
    out
}

/// `X_λ`: the sum of all diagrams matching within consecutive label blocks
/// of sizes `λ₁, λ₂, …`.
pub fn x_lambda(lambda: &Partition) -> Result<DiagramSum, XBasisError> {
    let n = check_even(lambda)?;
    Ok(DiagramSum::sum_of(n, block_matchings(lambda)))
}

/// `X_λ` as the product `X^{(0)}_{(λ₁)} X^{(λ₁)}_{(λ₂)} ⋯` in `B_n(x)`.
pub fn x_lambda_product(lambda: &Partition) -> Result<BrauerElement, XBasisError> {
    let n = check_even(lambda)?;
    let mut acc = BrauerElement::identity(n);
    let mut offset = 0;
    for &p in lambda.parts() {
        acc = acc.multiply(&x_block(offset, p, n)?.to_brauer())?;
        offset += p;
    }
    Ok(acc)
}

/// `X_{λ,t}` together with its labels.
#[derive(Clone, Debug, PartialEq)]
pub struct XBasisElement {
    pub lambda: Partition,
    pub tableau: Tableau,
    pub value: DiagramSum,
}

/// `X_λ ∗ d(t)` for a standard λ-tableau `t`.
pub fn x_lambda_t(lambda: &Partition, t: &Tableau) -> Result<XBasisElement, XBasisError> {
    let x = x_lambda(lambda)?;
    if t.shape() != lambda || !t.is_standard() {
        return Err(XBasisError::NotStandard(lambda.to_string()));
    }
    let d = t.d_permutation()?;
    Ok(XBasisElement {
        lambda: lambda.clone(),
        tableau: t.clone(),
        value: x.star(&d)?,
    })
}

fn translates(lambda: &Partition) -> Result<Vec<XBasisElement>, XBasisError> {
    let x = x_lambda(lambda)?;
    standard_tableaux(lambda)
        .into_iter()
        .map(|t| {
            let d = t.d_permutation()?;
            Ok(XBasisElement {
                lambda: lambda.clone(),
                value: x.star(&d)?,
                tableau: t,
            })
        })
        .collect()
}

/// The spanning set of `M^λ` (or `M^{▷λ}` when `strict`).
#[derive(Clone, Debug)]
pub struct FiltrationModule {
    pub lambda: Partition,
    pub strict: bool,
    pub basis: Vec<XBasisElement>,
}

impl FiltrationModule {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn filtration_module(lambda: &Partition, strict: bool) -> Result<FiltrationModule, XBasisError> {
    let n = check_even(lambda)?;
    let mut basis = Vec::new();
    for nu in two_partitions(n) {
        let keep = if strict {
            nu.strictly_dominates(lambda)?
        } else {
            nu.dominates(lambda)?
        };
        if keep {
            basis.extend(translates(&nu)?);
        }
    }
    Ok(FiltrationModule {
        lambda: lambda.clone(),
        strict,
        basis,
    })
}

/// The full family `{X_{λ,t}}` for `B_n`, with coordinates against it.
///
/// Order: λ in decreasing lexicographic order, then tableaux by reading word.
pub struct XBasis {
    n: usize,
    elements: Vec<XBasisElement>,
    diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
    inverse: Option<Vec<Vec<Rational>>>,
}

impl XBasis {
    pub fn new(n: usize) -> Result<Self, XBasisError> {
        let lambdas = two_partitions(n);
        let parts: Vec<Vec<XBasisElement>> = lambdas
            .par_iter()
            .map(translates)
            .collect::<Result<_, _>>()?;
        Ok(XBasis {
            n,
            elements: parts.into_iter().flatten().collect(),
            diagrams: enumerate_all(n),
            index: diagram_index(n),
            inverse: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[XBasisElement] {
        &self.elements
    }

    pub fn diagrams(&self) -> &[BrauerDiagram] {
        &self.diagrams
    }

    pub fn diagram_index(&self) -> &HashMap<BrauerDiagram, usize> {
        &self.index
    }

    /// Coordinates of a diagram sum against the diagram basis.
    pub fn diagram_vector(&self, v: &DiagramSum) -> Vec<BigInt> {
        v.coordinates(&self.index)
    }

    /// Rows are the basis elements in diagram coordinates.
    pub fn matrix(&self) -> IntegerMatrix {
        let rows = self.elements.iter().map(|e| self.diagram_vector(&e.value)).collect();
        IntegerMatrix::from_rows(rows).expect("rows share a length")
    }

    /// Positions of the elements indexed by `lambda`.
    pub fn positions(&self, lambda: &Partition) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| &self.elements[i].lambda == lambda)
            .collect()
    }

    /// Prepares exact coordinates by inverting the basis matrix.
    pub fn with_coordinates(mut self) -> Result<Self, XBasisError> {
        let inv = self.matrix().to_rational().inverse()?;
        self.inverse = Some((0..inv.nrows()).map(|r| inv.row(r)).collect());
        Ok(self)
    }

    /// `c` with `Σ c_i X_i = v`. Requires [`XBasis::with_coordinates`].
    pub fn coordinates(&self, v: &DiagramSum) -> Vec<Rational> {
        let inv = self
            .inverse
            .as_ref()
            .expect("coordinates need with_coordinates()");
        let mut c = vec![Rational::zero(); self.elements.len()];
        for (d, coeff) in v.terms() {
            let row = &inv[self.index[d]];
            let coeff = Rational::from_integer(coeff.clone());
            for (cj, rj) in c.iter_mut().zip(row) {
                if !rj.is_zero() {
                    *cj += &coeff * rj;
                }
            }
        }
        c
    }

    /// Trace of `∗w` on `M^λ / M^{▷λ}`, read from the λ block of the
    /// coordinate matrix.
    pub fn quotient_character(&self, lambda: &Partition, w: &Permutation) -> Result<Rational, XBasisError> {
        check_even(lambda)?;
        let mut trace = Rational::zero();
        for i in self.positions(lambda) {
            let image = self.elements[i].value.star(w)?;
            trace += &self.coordinates(&image)[i];
        }
        Ok(trace)
    }

    /// Whether `v` lies in the span of the elements with `ν ⊵ λ`, judged by
    /// its coordinates.
    pub fn in_filtration(&self, lambda: &Partition, v: &DiagramSum) -> Result<bool, XBasisError> {
        let c = self.coordinates(v);
        for (ci, e) in c.iter().zip(&self.elements) {
            if !ci.is_zero() && !e.lambda.dominates(lambda)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Rank and Smith invariant factors of the basis matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCheck {
    pub n: usize,
    pub size: usize,
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl BasisCheck {
    /// Full rank with every invariant factor one: a Z-basis.
    pub fn is_z_basis(&self) -> bool {
        self.rank == self.size
            && self.invariant_factors.len() == self.size
            && self.invariant_factors.iter().all(One::is_one)
    }
}

pub fn verify_basis(n: usize) -> Result<BasisCheck, XBasisError> {
    let basis = XBasis::new(n)?;
    let m = basis.matrix();
    Ok(BasisCheck {
        n,
        size: m.nrows(),
        rank: m.to_rational().rank(),
        invariant_factors: m.smith_form(),
    })
}

/// `x_λ`-side of `π_λ`: the left-coset key of `w` for the Young subgroup of
/// `λ` is the image sequence sorted within each row block; it is also the
/// minimal-length coset representative.
fn left_coset_rep(lambda: &Partition, w: &Permutation) -> Permutation {
    let mut images = w.images0().to_vec();
    let mut start = 0;
    for &p in lambda.parts() {
        images[start..start + p].sort_unstable();
        start += p;
    }
    Permutation::from_images0(images)
}

/// `π_λ(a)` for `a` constant on each left coset `S_λ w`.
pub fn pi_lambda(lambda: &Partition, a: &GroupAlgebraElement) -> Result<DiagramSum, XBasisError> {
    let n = check_even(lambda)?;
    if a.degree() != 2 * n {
        return Err(XBasisError::WrongSize {
            expected: 2 * n,
            found: a.degree(),
        });
    }
    let subgroup_order: usize = lambda.parts().iter().map(|&p| (1..=p).product::<usize>()).product();
    let mut cosets: BTreeMap<Permutation, (BigInt, usize)> = BTreeMap::new();
    for (w, c) in a.terms() {
        let rep = left_coset_rep(lambda, w);
        let entry = cosets.entry(rep.clone()).or_insert_with(|| (c.clone(), 0));
        if &entry.0 != c {
            return Err(XBasisError::NotInvariant(rep.to_string()));
        }
        entry.1 += 1;
    }
    let x = x_lambda(lambda)?;
    let mut out = DiagramSum::zero(n);
    for (rep, (c, count)) in cosets {
        if count != subgroup_order {
            return Err(XBasisError::NotInvariant(rep.to_string()));
        }
        out = out.add_scaled(&x.star(&rep)?, &c)?;
    }
    Ok(out)
}

/// `w_λ` with `t^λ w_λ = t_λ`.
pub fn w_lambda(lambda: &Partition) -> Result<Permutation, XBasisError> {
    Ok(Tableau::column_tableau(lambda).d_permutation()?)
}

/// `X_λ ∗ (w_λ h_λ)`.
pub fn distinguished_vector(lambda: &Partition) -> Result<DiagramSum, XBasisError> {
    let w = w_lambda(lambda)?;
    Ok(x_lambda(lambda)?.star_element(&h_element(lambda).left_mul_perm(&w))?)
}

/// The diagram joining `t_λ(i, 2j−1)` to `t_λ(i, 2j)` for every row `i`.
pub fn witness_diagram(lambda: &Partition) -> Result<BrauerDiagram, XBasisError> {
    let n = check_even(lambda)?;
    let t = Tableau::column_tableau(lambda);
    let mut pairs = Vec::with_capacity(n);
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 1..=p / 2 {
            pairs.push((t.get(i + 1, 2 * j - 1), t.get(i + 1, 2 * j)));
        }
    }
    Ok(BrauerDiagram::from_pairs(n, &pairs)?)
}

/// Evidence for the identity `X_λ ∗ (w_λ y_{λ'}) = c · X_λ ∗ (w_λ h_λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma27Outcome {
    /// The multiplier for which the identity holds: `|~S_λ|`.
    pub multiplier: BigInt,
    /// Whether the identity holds with `multiplier`.
    pub holds: bool,
    /// `Π (λ_i − λ_{i+1})!`, the product formula for the multiplier.
    pub product_formula: BigInt,
    /// Whether the identity also holds with the product formula.
    pub holds_with_product_formula: bool,
    /// Coefficient of [`witness_diagram`] in `X_λ ∗ (w_λ h_λ)`.
    pub witness_coefficient: BigInt,
    /// The first diagram, in canonical order, whose coefficient is `±1`.
    pub unit_term: Option<BrauerDiagram>,
    /// Gcd of all coefficients of `X_λ ∗ (w_λ h_λ)`.
    pub content: BigInt,
}

impl Lemma27Outcome {
    /// The identity holds and the witness diagram has coefficient one.
    pub fn pass(&self) -> bool {
        self.holds && self.witness_coefficient.is_one()
    }

    /// Some coefficient is a unit, so the vector survives reduction modulo
    /// every prime.
    pub fn nonzero_mod_every_prime(&self) -> bool {
        self.unit_term.is_some()
    }
}

pub fn lemma27_check(lambda: &Partition) -> Result<Lemma27Outcome, XBasisError> {
    let w = w_lambda(lambda)?;
    let x = x_lambda(lambda)?;
    let conj = lambda.conjugate();
    let lhs = x.star_element(&y_element(&Composition::from(&conj)).left_mul_perm(&w))?;
    let rhs = distinguished_vector(lambda)?;
    let multiplier = tilde_order(lambda);
    let product_formula = n_lambda(lambda);
    Ok(Lemma27Outcome {
        holds: lhs == rhs.scale(&multiplier),
        holds_with_product_formula: lhs == rhs.scale(&product_formula),
        witness_coefficient: rhs.coefficient(&witness_diagram(lambda)?),
        unit_term: rhs
            .terms()
            .iter()
            .find(|(_, c)| c.magnitude().is_one())
            .map(|(d, _)| d.clone()),
        content: rhs
            .terms()
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c)),
        multiplier,
        product_formula,
    })
}

/// `(X_λ ∗ w_λ h_λ) ∗ L_a = res_{t_λ}(a) · (X_λ ∗ w_λ h_λ)`.
pub fn jm_eigen_check(lambda: &Partition, a: usize) -> Result<bool, XBasisError> {
    let v = distinguished_vector(lambda)?;
    let l = jm_element(a, lambda.size())?;
    let res = Tableau::column_tableau(lambda).residue(a)?;
    Ok(v.star_element(&l)? == v.scale(&BigInt::from(res)))
}

/// Evidence that `X_{(6,2)}` is outside the integer span of the orbit of
/// `X_{(4,4)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remark213Outcome {
    pub orbit_size: usize,
    pub orbit_term_count: usize,
    pub target_term_count: usize,
    pub ambient_dimension: usize,
    /// Whether the target is in the rational span of the orbit.
    pub rational_member: bool,
    /// Whether the target is in the integer span of the orbit.
    pub integer_member: bool,
}

impl Remark213Outcome {
    pub fn pass(&self) -> bool {
        !self.integer_member
    }
}

/// The ∗-orbit of a diagram sum under `S_2n`, deduplicated by the JSON
/// serialization and sorted by it.
pub fn element_orbit(v: &DiagramSum) -> Vec<DiagramSum> {
    let k = 2 * v.n();
    let gens: Vec<Permutation> = (1..k).map(|i| Permutation::simple(i, k).expect("in range")).collect();
    let mut seen: BTreeMap<String, DiagramSum> = BTreeMap::new();
    seen.insert(v.to_json().to_string(), v.clone());
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            let next = cur.star(g).expect("degrees agree");
            let key = next.to_json().to_string();
            if !seen.contains_key(&key) {
                seen.insert(key, next.clone());
                queue.push_back(next);
            }
        }
    }
    seen.into_values().collect()
}

pub fn remark213_check() -> Result<Remark213Outcome, XBasisError> {
    let source = x_lambda(&Partition::new(vec![4, 4])?)?;
    let target = x_lambda(&Partition::new(vec![6, 2])?)?;
    let orbit = element_orbit(&source);
    let index = diagram_index(4);
    let rows: Vec<Vec<BigInt>> = orbit.iter().map(|v| v.coordinates(&index)).collect();
    let goal = target.coordinates(&index);
    let mut span = EchelonBasis::new(index.len());
    for r in &rows {
        span.insert_integer(r);
    }
    let lattice = IntegerMatrix::from_rows(rows)?;
    Ok(Remark213Outcome {
        orbit_size: orbit.len(),
        orbit_term_count: source.len(),
        target_term_count: target.len(),
        ambient_dimension: index.len(),
        rational_member: span.contains_integer(&goal),
        integer_member: hermite_solve(&lattice, &goal)?.is_some(),
    })
}

/// Span of a module's basis, for membership tests by elimination.
pub fn module_span(module: &FiltrationModule, index: &HashMap<BrauerDiagram, usize>) -> EchelonBasis {
    let mut span = EchelonBasis::new(index.len());
    for e in &module.basis {
        span.insert_integer(&e.value.coordinates(index));
    }
    span
}

/// Every `π_λ(x_{S,t})` for `μ ⊵ λ`, `S` semistandard of shape μ and type
/// λ, `t ∈ Std(μ)`.
pub fn murphy_images(lambda: &Partition) -> Result<Vec<(Partition, DiagramSum)>, XBasisError> {
    let n = check_even(lambda)?;
    let mut out = Vec::new();
    for mu in crate::combinatorics::partitions_of(2 * n) {
        if !mu.dominates(lambda)? {
            continue;
        }
        for s in semistandard_tableaux(&mu, lambda)? {
            for t in standard_tableaux(&mu) {
                let x = murphy_element(&s, &t)?;
                out.push((mu.clone(), pi_lambda(lambda, &x)?));
            }
        }
    }
    Ok(out)
}

/// The rational matrix of a module's basis in diagram coordinates.
pub fn module_matrix(module: &FiltrationModule, index: &HashMap<BrauerDiagram, usize>) -> RationalMatrix {
    let rows: Vec<Vec<BigInt>> = module.basis.iter().map(|e| e.value.coordinates(index)).collect();
    RationalMatrix::from_integer_rows(&rows).unwrap_or_else(|_| RationalMatrix::zeros(0, index.len()))
}
