//! The symplectic tensor space `V^{⊗n}`, `dim V = 2m`, as a right module for
//! the Brauer algebra specialized at `x = −2m`, and the annihilator of that
//! action.
//!
//! Basis vectors are `v_1, …, v_{2m}` with `i' = 2m+1−i`. Diagrams act with
//! the top row as input and the bottom row as output.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::combinatorics::{two_partitions, CombinatoricsError, Partition};
use crate::diagrams::{
    bd_sum, enumerate_all, BdFamily, BrauerDiagram, DiagramError, DiagramSum, Generator,
    NormalForm, RationalCombination, SpecializedElement,
};
use crate::exactla::{rational_to_string, EchelonBasis, EchelonBasisModP, IntRow, Rational};
use crate::report::Report;
use crate::xbasis::{filtration_module, XBasisError};

/// Default bound on the number of columns of the matrix of `φ`.
pub const DEFAULT_MAX_COLUMNS: u64 = 1 << 24;

/// Environment variable overriding [`DEFAULT_MAX_COLUMNS`].
pub const MAX_COLUMNS_ENV: &str = "BRAUERLAB_MAX_COLUMNS";

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("m must be positive")]
    ZeroDimension,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("tensor length {found} does not match n = {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("action routes disagree for {diagram} on {tensor}")]
    RouteMismatch { diagram: String, tensor: String },
    #[error("element specialized at {found}, space needs {expected}")]
    SpecializationMismatch { expected: String, found: String },
    #[error("matrix needs {required} columns, limit is {limit} (set {MAX_COLUMNS_ENV} to raise it)")]
    TooLarge { required: String, limit: u64 },
    #[error("a + b = {0} is odd")]
    Parity(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    XBasis(#[from] XBasisError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// The symplectic space of dimension `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    m: usize,
}

impl SymplecticSpace {
    pub fn new(m: usize) -> Result<Self, TensorError> {
        if m == 0 {
            return Err(TensorError::ZeroDimension);
        }
        Ok(SymplecticSpace { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    /// `i' = 2m+1−i`.
    pub fn prime(&self, i: usize) -> usize {
        2 * self.m + 1 - i
    }

    /// `ε_{i,j}`: `1` if `j = i'` and `i < j`, `−1` if `j = i'` and `i > j`.
    pub fn epsilon(&self, i: usize, j: usize) -> i64 {
        if j != self.prime(i) {
            0
        } else if i < j {
            1
        } else {
            -1
        }
    }

    /// The specialization parameter `−2m`.
    pub fn delta(&self) -> Rational {
        Rational::from_integer(-BigInt::from(2 * self.m))
    }

    /// Number of simple tensors of length `n`, if it fits in `u64`.
    pub fn simple_count(&self, n: usize) -> Option<u64> {
        (self.dim() as u64).checked_pow(n as u32)
    }

    /// Position of a simple tensor in base-`2m` order, first factor most
    /// significant.
    pub fn tensor_index(&self, t: &SimpleTensor) -> usize {
        t.indices
            .iter()
            .fold(0, |acc, &i| acc * self.dim() + (i - 1))
    }

    /// All simple tensors of length `n` in [`SymplecticSpace::tensor_index`]
    /// order.
    pub fn simple_tensors(&self, n: usize) -> Vec<SimpleTensor> {
        let count = self.simple_count(n).expect("tensor count fits") as usize;
        (0..count)
            .map(|mut k| {
                let mut idx = vec![0; n];
                for slot in idx.iter_mut().rev() {
                    *slot = k % self.dim() + 1;
                    k /= self.dim();
                }
                SimpleTensor { indices: idx }
            })
            .collect()
    }
}

/// `v_{i₁} ⊗ ⋯ ⊗ v_{i_n}`, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleTensor {
    indices: Vec<usize>,
}

impl SimpleTensor {
    pub fn new(indices: Vec<usize>, space: &SymplecticSpace) -> Result<Self, TensorError> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > space.dim()) {
            return Err(TensorError::IndexOutOfRange {
                index: bad,
                max: space.dim(),
            });
        }
        Ok(SimpleTensor { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for SimpleTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| format!("v{i}")).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// A rational combination of simple tensors of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    terms: BTreeMap<SimpleTensor, Rational>,
}

impl TensorVector {
    pub fn zero(n: usize) -> Self {
        TensorVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_simple(t: SimpleTensor) -> Self {
        let mut v = TensorVector::zero(t.len());
        v.terms.insert(t, Rational::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<SimpleTensor, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &SimpleTensor) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, t: SimpleTensor, c: Rational) {
        assert_eq!(t.len(), self.n, "tensor length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(t.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorVector, c: &Rational) {
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = TensorVector::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(t, c)| json!({"indices": t.indices, "coeff_rational": rational_to_string(c)}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    fn check_space(&self, space: &SymplecticSpace) -> Result<(), TensorError> {
        for t in self.terms.keys() {
            SimpleTensor::new(t.indices.clone(), space)?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| format!("[{}]{t}", rational_to_string(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ_k (v_{k'}⊗v_k − v_k⊗v_{k'})` as `(first, second, sign)` triples.
fn contraction_terms(space: &SymplecticSpace) -> Vec<(usize, usize, i64)> {
    (1..=space.m())
        .flat_map(|k| [(space.prime(k), k, 1), (k, space.prime(k), -1)])
        .collect()
}

/// `(v_ı)g` for one simple tensor, as signed simple tensors.
fn generator_on_simple(
    idx: &[usize],
    g: Generator,
    space: &SymplecticSpace,
) -> Vec<(Vec<usize>, i64)> {
    let j = g.index();
    match g {
        Generator::S(_) => {
            let mut out = idx.to_vec();
            out.swap(j - 1, j);
            vec![(out, -1)]
        }
        Generator::E(_) => {
            let eps = space.epsilon(idx[j - 1], idx[j]);
            if eps == 0 {
                return Vec::new();
            }
            contraction_terms(space)
                .into_iter()
                .map(|(a, b, s)| {
                    let mut out = idx.to_vec();
                    out[j - 1] = a;
                    out[j] = b;
                    (out, eps * s)
                })
                .collect()
        }
    }
}

/// `v·g` for a generator `s_j` or `e_j`.
pub fn act_generator(
    v: &TensorVector,
    g: Generator,
    space: &SymplecticSpace,
) -> Result<TensorVector, TensorError> {
    let n = v.n();
    if g.index() == 0 || g.index() >= n {
        return Err(TensorError::GeneratorOutOfRange { index: g.index(), n });
    }
    v.check_space(space)?;
    let mut out = TensorVector::zero(n);
    for (t, c) in &v.terms {
        for (idx, s) in generator_on_simple(&t.indices, g, space) {
            out.add_term(SimpleTensor { indices: idx }, c * Rational::from_integer(s.into()));
        }
    }
    Ok(out)
}

fn check_diagram(v: &TensorVector, d: &BrauerDiagram, space: &SymplecticSpace) -> Result<(), TensorError> {
    if v.n() != d.n() {
        return Err(TensorError::LengthMismatch {
            expected: d.n(),
            found: v.n(),
        });
    }
    v.check_space(space)
}

/// `v·D` by writing `D` as its normal-form word and acting letter by letter.
pub fn act_diagram_word(
    v: &TensorVector,
    d: &BrauerDiagram,
    space: &SymplecticSpace,
) -> Result<TensorVector, TensorError> {
    check_diagram(v, d, space)?;
    let mut acc = v.clone();
    for g in d.to_normal_form().word() {
        acc = act_generator(&acc, g, space)?;
    }
    Ok(acc)
}

/// `(v_ı)D` read off the normal form: sign `(−1)^{ℓ(d₁⁻¹σd₂)}`, strands carry
/// factors from top `(j)d₁` to bottom `(j)σd₂`, and each bottom bar receives
/// `ε` of its top bar times the contraction vector.
fn direct_on_simple(idx: &[usize], nf: &NormalForm, space: &SymplecticSpace) -> Vec<(Vec<usize>, i64)> {
    let n = nf.n();
    let (d1, sigma, d2) = (nf.d1(), nf.sigma(), nf.d2());
    let mut coeff = if nf.permutation_part().length() % 2 == 0 { 1 } else { -1 };
    let mut base = vec![0; n];
    for j in 2 * nf.f() + 1..=n {
        base[d2.image(sigma.image(j)) - 1] = idx[d1.image(j) - 1];
    }
    let mut bars = Vec::with_capacity(nf.f());
    for k in 1..=nf.f() {
        let eps = space.epsilon(idx[d1.image(2 * k - 1) - 1], idx[d1.image(2 * k) - 1]);
        if eps == 0 {
            return Vec::new();
        }
        coeff *= eps;
        bars.push((d2.image(2 * k - 1) - 1, d2.image(2 * k) - 1));
    }
    let contraction = contraction_terms(space);
    let mut out = vec![(base, coeff)];
    for &(c, d) in &bars {
        let mut next = Vec::with_capacity(out.len() * contraction.len());
        for (t, s) in &out {
            for &(a, b, sign) in &contraction {
                let mut u = t.clone();
                u[c] = a;
                u[d] = b;
                next.push((u, s * sign));
            }
        }
        out = next;
    }
    out
}

/// `v·D` straight from the normal form of `D`.
pub fn act_diagram_direct(
    v: &TensorVector,
    d: &BrauerDiagram,
    space: &SymplecticSpace,
) -> Result<TensorVector, TensorError> {
    check_diagram(v, d, space)?;
    let nf = d.to_normal_form();
    let mut out = TensorVector::zero(v.n());
    for (t, c) in &v.terms {
        for (idx, s) in direct_on_simple(&t.indices, &nf, space) {
            out.add_term(SimpleTensor { indices: idx }, c * Rational::from_integer(s.into()));
        }
    }
    Ok(out)
}

/// `v·D`, computed by both routes; disagreement is an error.
pub fn act_diagram(
    v: &TensorVector,
    d: &BrauerDiagram,
    space: &SymplecticSpace,
) -> Result<TensorVector, TensorError> {
    let direct = act_diagram_direct(v, d, space)?;
    let word = act_diagram_word(v, d, space)?;
    if direct != word {
        return Err(TensorError::RouteMismatch {
            diagram: d.to_string(),
            tensor: v.to_string(),
        });
    }
    Ok(direct)
}

/// `v·a` for `a ∈ B_n(−2m)`.
pub fn act_element(
    v: &TensorVector,
    a: &SpecializedElement,
    space: &SymplecticSpace,
) -> Result<TensorVector, TensorError> {
    if a.delta != space.delta() {
        return Err(TensorError::SpecializationMismatch {
            expected: rational_to_string(&space.delta()),
            found: rational_to_string(&a.delta),
        });
    }
    let mut out = TensorVector::zero(v.n());
    for (d, c) in a.value.terms() {
        out.add_scaled(&act_diagram(v, d, space)?, c);
    }
    Ok(out)
}

/// Column bound from the environment, or the default.
pub fn max_columns() -> u64 {
    std::env::var(MAX_COLUMNS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_COLUMNS)
}

/// The matrix of `φ`: one row per diagram, one column per (input, output)
/// pair of simple tensors, column `input·(2m)^n + output`. Entries are
/// integers.
#[derive(Clone, Debug)]
pub struct PhiMatrix {
    n: usize,
    space: SymplecticSpace,
    diagrams: Vec<BrauerDiagram>,
    rows: Vec<IntRow>,
}

impl PhiMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.space.m()
    }

    pub fn diagrams(&self) -> &[BrauerDiagram] {
        &self.diagrams
    }

    pub fn rows(&self) -> &[IntRow] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        let t = self.space.simple_count(self.n).expect("checked at construction") as usize;
        t * t
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.ncols());
        self.rows.iter().filter(|r| basis.insert_sparse((*r).clone())).count()
    }

    /// Rank over `F_p`.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let mut basis = EchelonBasisModP::new(self.ncols(), p);
        self.rows.iter().filter(|r| basis.insert_sparse(r)).count()
    }

    /// `Σ_D y_D row_D` for integer coordinates `y` over the diagrams.
    pub fn combine(&self, y: &[BigInt]) -> IntRow {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (row, c) in self.rows.iter().zip(y) {
            if c.is_zero() {
                continue;
            }
            for (col, v) in row {
                *acc.entry(*col).or_insert_with(BigInt::zero) += c * v;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// The input and output simple tensors of a column.
    pub fn column_tensors(&self, col: usize) -> (SimpleTensor, SimpleTensor) {
        let t = self.space.simple_count(self.n).expect("checked") as usize;
        let unpack = |mut k: usize| {
            let mut idx = vec![0; self.n];
            for slot in idx.iter_mut().rev() {
                *slot = k % self.space.dim() + 1;
                k /= self.space.dim();
            }
            SimpleTensor { indices: idx }
        };
        (unpack(col / t), unpack(col % t))
    }
}

fn phi_row(d: &BrauerDiagram, space: &SymplecticSpace, inputs: &[SimpleTensor]) -> IntRow {
    let nf = d.to_normal_form();
    let t = inputs.len();
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for (k, input) in inputs.iter().enumerate() {
        for (idx, s) in direct_on_simple(&input.indices, &nf, space) {
            let out = space.tensor_index(&SimpleTensor { indices: idx });
            *acc.entry(k * t + out).or_insert(0) += s;
        }
    }
    acc.into_iter()
        .filter(|(_, v)| *v != 0)
        .map(|(c, v)| (c, BigInt::from(v)))
        .collect()
}

/// Builds the matrix of `φ` under the column bound from the environment.
pub fn phi_matrix(n: usize, m: usize) -> Result<PhiMatrix, TensorError> {
    phi_matrix_with_limit(n, m, max_columns())
}

pub fn phi_matrix_with_limit(n: usize, m: usize, limit: u64) -> Result<PhiMatrix, TensorError> {
    let space = SymplecticSpace::new(m)?;
    let required = BigInt::from(2 * m).pow(2 * n as u32);
    if required > BigInt::from(limit) {
        return Err(TensorError::TooLarge {
            required: required.to_string(),
            limit,
        });
    }
    let diagrams = enumerate_all(n);
    let inputs = space.simple_tensors(n);
    let rows = diagrams
        .par_iter()
        .map(|d| phi_row(d, &space, &inputs))
        .collect();
    Ok(PhiMatrix {
        n,
        space,
        diagrams,
        rows,
    })
}

/// `Σ_{λ ∈ 2P_n, λ₁ > 2m} dim S^λ`.
pub fn expected_kernel_dimension(n: usize, m: usize) -> BigInt {
    two_partitions(n)
        .iter()
        .filter(|l| l.part(1) > 2 * m)
        .map(Partition::dimension)
        .sum()
}

/// A basis of `Ker φ` as rational diagram combinations.
#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub n: usize,
    pub m: usize,
    pub phi_rank: usize,
    pub diagrams: Vec<BrauerDiagram>,
    pub vectors: Vec<RationalCombination>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self.vectors.iter().map(|v| v.to_json()["terms"].clone()).collect();
        json!({
            "n": self.n,
            "m": self.m,
            "dimension": self.dimension(),
            "phi_rank": self.phi_rank,
            "basis": basis,
        })
    }

    /// One row per basis vector, one column per diagram in canonical order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vector");
        for d in &self.diagrams {
            out.push(',');
            out.push_str(&d.to_row_string());
        }
        out.push('\n');
        for (k, v) in self.vectors.iter().enumerate() {
            out.push_str(&k.to_string());
            for d in &self.diagrams {
                out.push(',');
                out.push_str(&rational_to_string(&v.coefficient(d)));
            }
            out.push('\n');
        }
        out
    }
}

/// The left null space of the matrix of `φ`, by elimination of the rows
/// augmented with an identity block.
pub fn kernel_of(phi: &PhiMatrix) -> KernelBasis {
    let cols = phi.ncols();
    let count = phi.nrows();
    let mut basis = EchelonBasis::new(cols + count);
    let mut rank = 0;
    let mut vectors = Vec::new();
    for (k, row) in phi.rows.iter().enumerate() {
        let mut aug = row.clone();
        aug.push((cols + k, BigInt::one()));
        let reduced = basis.reduce_sparse(aug);
        match reduced.first() {
            None => unreachable!("augmented rows are independent"),
            Some(&(lead, _)) if lead < cols => rank += 1,
            Some(_) => {
                let terms = reduced.iter().map(|(c, v)| {
                    (phi.diagrams[c - cols].clone(), Rational::from_integer(v.clone()))
                });
                vectors.push(
                    RationalCombination::from_terms(phi.n, terms).expect("diagrams share n"),
                );
            }
        }
        basis.insert_sparse(reduced);
    }
    KernelBasis {
        n: phi.n,
        m: phi.m(),
        phi_rank: rank,
        diagrams: phi.diagrams.clone(),
        vectors,
    }
}

pub fn kernel_phi(n: usize, m: usize) -> Result<KernelBasis, TensorError> {
    Ok(kernel_of(&phi_matrix(n, m)?))
}

/// `(2m+2, 2^{n−m−1})`, or `None` when `n ≤ m`.
pub fn kernel_shape(n: usize, m: usize) -> Option<Partition> {
    if n < m + 1 {
        return None;
    }
    let mut parts = vec![2 * m + 2];
    parts.extend(std::iter::repeat(2).take(n - m - 1));
    Some(Partition::new(parts).expect("valid parts"))
}

fn integer_coordinates(v: &RationalCombination, index: &HashMap<BrauerDiagram, usize>) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); index.len()];
    for (d, c) in v.terms() {
        debug_assert!(c.is_integer());
        out[index[d]] = c.to_integer();
    }
    out
}

/// Compares `Ker φ` with `M^{(2m+2, 2^{n−m−1})}`: the module annihilates
/// every simple tensor, the dimensions agree with each other and with the
/// sum of Specht dimensions, and the joint span has that same rank.
pub fn verify_kernel_theorem(n: usize, m: usize) -> Result<Report, TensorError> {
    let phi = phi_matrix(n, m)?;
    let kernel = kernel_of(&phi);
    let expected = expected_kernel_dimension(n, m);
    let index: HashMap<BrauerDiagram, usize> = phi
        .diagrams
        .iter()
        .enumerate()
        .map(|(k, d)| (d.clone(), k))
        .collect();
    let module = match kernel_shape(n, m) {
        Some(shape) => Some(filtration_module(&shape, false)?),
        None => None,
    };
    let module_vectors: Vec<Vec<BigInt>> = module
        .iter()
        .flat_map(|mo| mo.basis.iter().map(|e| e.value.coordinates(&index)))
        .collect();
    let mut witness = Value::Null;
    for (k, y) in module_vectors.iter().enumerate() {
        let image = phi.combine(y);
        if let Some(&(col, ref c)) = image.first() {
            let (input, output) = phi.column_tensors(col);
            let e = &module.as_ref().expect("nonempty").basis[k];
            witness = json!({
                "element": e.tableau.rows(),
                "input": input.indices,
                "output": output.indices,
                "coefficient": c.to_string(),
            });
            break;
        }
    }
    let annihilates = witness.is_null();
    let mut joint = EchelonBasis::new(index.len());
    for v in &kernel.vectors {
        joint.insert_integer(&integer_coordinates(v, &index));
    }
    for y in &module_vectors {
        joint.insert_integer(y);
    }
    let module_dim = {
        let mut span = EchelonBasis::new(index.len());
        module_vectors.iter().filter(|y| span.insert_integer(y)).count()
    };
    let dim_kernel = kernel.dimension();
    let pass = annihilates
        && module_dim == dim_kernel
        && BigInt::from(dim_kernel) == expected
        && joint.rank() == dim_kernel;
    let shape = kernel_shape(n, m).map(|s| s.to_string());
    let mut detail = json!({
        "shape": shape,
        "dim_kernel": dim_kernel,
        "dim_module": module_dim,
        "expected": expected.to_string(),
        "joint_rank": joint.rank(),
        "phi_rank": kernel.phi_rank,
        "annihilates": annihilates,
    });
    if !annihilates {
        detail["witness"] = witness;
    }
    Ok(Report::new("kernel_theorem", n, pass, detail).with_m(m))
}

/// Whether `Σ_{D ∈ BD_n(a,b)} D` annihilates every simple tensor.
pub fn verify_bd_annihilation(n: usize, m: usize, a: usize, b: usize) -> Result<bool, TensorError> {
    if (a + b) % 2 == 1 {
        return Err(TensorError::Parity(a + b));
    }
    let sum = bd_sum(n, &BdFamily::Ab { a, b })?;
    annihilates_all(&sum, m)
}

/// Whether a diagram sum acts as zero on `V^{⊗n}`.
pub fn annihilates_all(sum: &DiagramSum, m: usize) -> Result<bool, TensorError> {
    let space = SymplecticSpace::new(m)?;
    let n = sum.n();
    let nfs: Vec<(NormalForm, &BigInt)> = sum
        .terms()
        .iter()
        .map(|(d, c)| (d.to_normal_form(), c))
        .collect();
    Ok(space.simple_tensors(n).par_iter().all(|t| {
        let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (nf, c) in &nfs {
            for (idx, s) in direct_on_simple(&t.indices, nf, &space) {
                *acc.entry(idx).or_insert_with(BigInt::zero) += *c * BigInt::from(s);
            }
        }
        acc.values().all(Zero::is_zero)
    }))
}

/// Maximal number of disjoint pairs `s < t` with `i_s = (i_t)'`, by
/// augmenting paths in the bipartite pair graph.
pub fn symplectic_length(t: &SimpleTensor, space: &SymplecticSpace) -> usize {
    let idx = &t.indices;
    let left: Vec<usize> = (0..idx.len()).filter(|&s| idx[s] <= space.m()).collect();
    let mut matched_right: Vec<Option<usize>> = vec![None; idx.len()];

    fn augment(
        s: usize,
        idx: &[usize],
        space: &SymplecticSpace,
        seen: &mut [bool],
        matched_right: &mut [Option<usize>],
    ) -> bool {
        for r in 0..idx.len() {
            if idx[r] != space.prime(idx[s]) || seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match matched_right[r] {
                None => true,
                Some(other) => augment(other, idx, space, seen, matched_right),
            };
            if free {
                matched_right[r] = Some(s);
                return true;
            }
        }
        false
    }

    left.iter()
        .filter(|&&s| {
            let mut seen = vec![false; idx.len()];
            augment(s, idx, space, &mut seen, &mut matched_right)
        })
        .count()
}

/// Ranks of `φ` over `F_p` against the rational rank. Findings only; the
/// kernel statement is not asserted away from characteristic zero.
pub fn rank_mod_p_report(phi: &PhiMatrix, rational_rank: usize, p: u64) -> Report {
    let rank = phi.rank_mod_p(p);
    Report::new(
        "phi_rank_mod_p",
        phi.n(),
        true,
        json!({"p": p, "rank_mod_p": rank, "rank": rational_rank, "agrees": rank == rational_rank}),
    )
    .with_m(phi.m())
}

/// Number of columns `(2m)^{2n}` as `u64`, if it fits.
pub fn column_count(n: usize, m: usize) -> Option<u64> {
    (2 * m as u64).checked_pow(2 * n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::BrauerElement;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(k: i64) -> Rational {
        Rational::from_integer(BigInt::from(k))
    }

    fn simple(idx: &[usize]) -> TensorVector {
        TensorVector::from_simple(SimpleTensor {
            indices: idx.to_vec(),
        })
    }

    fn vector(terms: &[(&[usize], i64)]) -> TensorVector {
        let mut v = TensorVector::zero(terms[0].0.len());
        for (idx, c) in terms {
            v.add_term(SimpleTensor { indices: idx.to_vec() }, q(*c));
        }
        v
    }

    #[test]
    fn space_structure() {
        let s = SymplecticSpace::new(2).unwrap();
        for i in 1..=4 {
            assert_eq!(s.prime(s.prime(i)), i);
            for j in 1..=4 {
                assert_eq!(s.epsilon(i, j), -s.epsilon(j, i));
            }
        }
        assert_eq!(s.epsilon(1, 4), 1);
        assert_eq!(s.epsilon(3, 2), -1);
        assert_eq!(s.epsilon(1, 3), 0);
        assert!(SymplecticSpace::new(0).is_err());
        assert!(SimpleTensor::new(vec![1, 5], &s).is_err());
        let all = s.simple_tensors(2);
        assert_eq!(all.len(), 16);
        for (k, t) in all.iter().enumerate() {
            assert_eq!(s.tensor_index(t), k);
        }
    }

    #[test]
    fn generator_examples() {
        let s1 = SymplecticSpace::new(1).unwrap();
        let out = act_generator(&simple(&[1, 2]), Generator::S(1), &s1).unwrap();
        assert_eq!(out, vector(&[(&[2, 1], -1)]));
        let out = act_generator(&simple(&[1, 1]), Generator::E(1), &s1).unwrap();
        assert!(out.is_zero());
        let out = act_generator(&simple(&[1, 2]), Generator::E(1), &s1).unwrap();
        assert_eq!(out, vector(&[(&[2, 1], 1), (&[1, 2], -1)]));
        assert!(act_generator(&simple(&[1, 2]), Generator::E(2), &s1).is_err());
        assert!(act_generator(&simple(&[1, 2]), Generator::S(0), &s1).is_err());
    }

    #[test]
    fn diagram_examples() {
        let s1 = SymplecticSpace::new(1).unwrap();
        let v = simple(&[1, 2]);
        assert_eq!(act_diagram(&v, &BrauerDiagram::identity(2), &s1).unwrap(), v);
        let e1 = BrauerDiagram::generator_e(1, 2).unwrap();
        assert_eq!(
            act_diagram(&v, &e1, &s1).unwrap(),
            act_generator(&v, Generator::E(1), &s1).unwrap()
        );
        let a = BrauerElement::identity(2)
            .plus(&BrauerElement::s(1, 2).unwrap())
            .unwrap()
            .plus(&BrauerElement::e(1, 2).unwrap())
            .unwrap()
            .specialize(&s1.delta());
        assert!(act_element(&v, &a, &s1).unwrap().is_zero());
        let wrong = BrauerElement::identity(2).specialize(&q(3));
        assert!(matches!(
            act_element(&v, &wrong, &s1),
            Err(TensorError::SpecializationMismatch { .. })
        ));
    }

    #[test]
    fn e_squared_scales_by_minus_two_m() {
        for m in 1..=2 {
            let space = SymplecticSpace::new(m).unwrap();
            let e = BrauerElement::e(1, 3).unwrap().specialize(&space.delta());
            let ee = e.multiply(&e).unwrap();
            for t in space.simple_tensors(3) {
                let v = TensorVector::from_simple(t);
                let lhs = act_element(&v, &ee, &space).unwrap();
                let rhs = act_element(&v, &e, &space).unwrap().scale(&space.delta());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn routes_agree_exhaustively_small() {
        for n in 1..=3 {
            for m in 1..=2 {
                let space = SymplecticSpace::new(m).unwrap();
                for d in enumerate_all(n) {
                    for t in space.simple_tensors(n) {
                        let v = TensorVector::from_simple(t);
                        assert_eq!(
                            act_diagram_direct(&v, &d, &space).unwrap(),
                            act_diagram_word(&v, &d, &space).unwrap(),
                            "{d} on {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn routes_agree_on_samples_n4() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let diagrams = enumerate_all(4);
        for m in 1..=2 {
            let space = SymplecticSpace::new(m).unwrap();
            for _ in 0..300 {
                let d = &diagrams[rng.gen_range(0..diagrams.len())];
                let idx: Vec<usize> = (0..4).map(|_| rng.gen_range(1..=2 * m)).collect();
                let v = simple(&idx);
                assert!(act_diagram(&v, d, &space).is_ok(), "{d} on {v}");
            }
        }
    }

    #[test]
    fn phi_sizes_and_ranks() {
        let phi = phi_matrix(2, 1).unwrap();
        assert_eq!((phi.nrows(), phi.ncols()), (3, 16));
        assert_eq!(phi.rank(), 2);
        let phi = phi_matrix(4, 1).unwrap();
        assert_eq!(phi.rank(), 14);
        assert!(matches!(
            phi_matrix_with_limit(3, 2, 1000),
            Err(TensorError::TooLarge { .. })
        ));
    }

    #[test]
    fn kernel_n2_m1_is_one_plus_s_plus_e() {
        let k = kernel_phi(2, 1).unwrap();
        assert_eq!(k.dimension(), 1);
        let v = &k.vectors[0];
        assert_eq!(v.len(), 3);
        let c = v.coefficient(&BrauerDiagram::identity(2));
        for d in enumerate_all(2) {
            assert_eq!(v.coefficient(&d), c);
        }
        let csv = k.to_csv();
        assert_eq!(csv.lines().count(), 2);
        assert_eq!(k.to_json()["dimension"], 1);
    }

    #[test]
    fn kernel_dimensions_match_specht_sum() {
        for (n, m, dim) in [(1, 1, 0), (2, 1, 1), (2, 2, 0), (3, 1, 10), (3, 2, 1), (4, 1, 91)] {
            let k = kernel_phi(n, m).unwrap();
            assert_eq!(k.dimension(), dim, "n={n} m={m}");
            assert_eq!(expected_kernel_dimension(n, m), BigInt::from(dim));
            assert_eq!(k.phi_rank + dim, k.diagrams.len());
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        for (n, m) in [(2, 1), (3, 1), (3, 2)] {
            let k = kernel_phi(n, m).unwrap();
            let space = SymplecticSpace::new(m).unwrap();
            for v in &k.vectors {
                let a = SpecializedElement::new(space.delta(), v.clone());
                for t in space.simple_tensors(n) {
                    let out = act_element(&TensorVector::from_simple(t), &a, &space).unwrap();
                    assert!(out.is_zero());
                }
            }
        }
    }

    #[test]
    fn kernel_theorem_small_cases() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
            let r = verify_kernel_theorem(n, m).unwrap();
            assert!(r.pass, "{}", r.text_line());
        }
        let r = verify_kernel_theorem(3, 1).unwrap();
        assert_eq!(r.detail["dim_kernel"], 10);
    }

    #[test]
    fn bd_annihilation_cases() {
        assert!(verify_bd_annihilation(2, 1, 2, 2).unwrap());
        assert!(verify_bd_annihilation(3, 1, 3, 1).unwrap());
        assert!(verify_bd_annihilation(2, 2, 1, 2).is_err());
        for n in 1..=3 {
            for m in 1..=2 {
                for a in 0..=n {
                    for b in 0..=n {
                        if (a + b) % 2 == 0 && a + b >= 2 * m + 2 {
                            assert!(verify_bd_annihilation(n, m, a, b).unwrap(), "n={n} m={m} ({a},{b})");
                        }
                    }
                }
            }
        }
        // below the bound the identity diagram alone survives
        assert!(!verify_bd_annihilation(2, 2, 0, 0).unwrap());
    }

    fn length_oracle(idx: &[usize], space: &SymplecticSpace) -> usize {
        (1..=space.m())
            .map(|i| {
                let a = idx.iter().filter(|&&x| x == i).count();
                let b = idx.iter().filter(|&&x| x == space.prime(i)).count();
                a.min(b)
            })
            .sum()
    }

    #[test]
    fn symplectic_length_examples() {
        let s1 = SymplecticSpace::new(1).unwrap();
        let s2 = SymplecticSpace::new(2).unwrap();
        let t = |idx: &[usize], s: &SymplecticSpace| SimpleTensor::new(idx.to_vec(), s).unwrap();
        assert_eq!(symplectic_length(&t(&[1, 1], &s1), &s1), 0);
        assert_eq!(symplectic_length(&t(&[1, 4, 2], &s2), &s2), 1);
        assert_eq!(symplectic_length(&t(&[1, 4, 2, 3], &s2), &s2), 2);
    }

    #[test]
    fn rank_mod_p_small() {
        let phi = phi_matrix(3, 1).unwrap();
        let rank = phi.rank();
        for p in [2, 3, 5] {
            let r = rank_mod_p_report(&phi, rank, p);
            assert!(r.detail["rank_mod_p"].as_u64().unwrap() <= rank as u64);
        }
        assert_eq!(phi.rank_mod_p(5), rank);
    }

    proptest! {
        #[test]
        fn symplectic_length_matches_count(m in 1usize..4, idx in prop::collection::vec(1usize..7, 0..9)) {
            let space = SymplecticSpace::new(m).unwrap();
            let idx: Vec<usize> = idx.into_iter().map(|i| (i - 1) % (2 * m) + 1).collect();
            let t = SimpleTensor::new(idx.clone(), &space).unwrap();
            prop_assert_eq!(symplectic_length(&t, &space), length_oracle(&idx, &space));
        }

        #[test]
        fn action_is_a_representation(
            n in 2usize..4,
            m in 1usize..3,
            seed in any::<u64>(),
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let space = SymplecticSpace::new(m).unwrap();
            let diagrams = enumerate_all(n);
            let random_element = |rng: &mut ChaCha8Rng| {
                let terms = (0..3).map(|_| {
                    (diagrams[rng.gen_range(0..diagrams.len())].clone(), q(rng.gen_range(-3..=3)))
                });
                SpecializedElement::new(
                    space.delta(),
                    RationalCombination::from_terms(n, terms).unwrap(),
                )
            };
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let mut v = TensorVector::zero(n);
            for _ in 0..3 {
                let idx: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2 * m)).collect();
                v.add_term(SimpleTensor { indices: idx }, q(rng.gen_range(-2..=2)));
            }
            let ab = a.multiply(&b).unwrap();
            let lhs = act_element(&v, &ab, &space).unwrap();
            let rhs = act_element(&act_element(&v, &a, &space).unwrap(), &b, &space).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
