//! Exact linear algebra over the rationals and the integers.
//!
//! Rational elimination is fraction-free: every row is cleared to a primitive
//! integer vector, pivots are chosen by least bit-size, and eliminated rows are
//! divided by their content after every step. Integer matrices carry Hermite
//! and Smith normal forms for unimodularity and lattice-membership questions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

/// Matrices with more entries than this are stored row-sparse.
pub const SPARSE_THRESHOLD: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A sparse integer row: `(column, value)` pairs, strictly increasing columns,
/// no stored zeros.
pub type IntRow = Vec<(usize, BigInt)>;

pub(crate) fn rational_from_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn bit_size(row: &IntRow) -> u64 {
    row.iter().map(|(_, v)| v.bits()).sum()
}

fn make_primitive(row: &mut IntRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if row[0].1.is_negative() {
        for (_, v) in row.iter_mut() {
            *v = -std::mem::take(v);
        }
    }
}

/// `a * row - b * other`, merged by column.
fn combine(a: &BigInt, row: &IntRow, b: &BigInt, other: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_left = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_right = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_left {
            out.push((row[i].0, a * &row[i].1));
            i += 1;
        } else if take_right {
            out.push((other[j].0, -(b * &other[j].1)));
            j += 1;
        } else {
            let v = a * &row[i].1 - b * &other[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry_of(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| &row[k].1)
}

/// Eliminates `row`'s entry at `col` against `pivot` (whose entry at `col` is
/// nonzero) and returns the primitive result.
fn eliminate(row: &IntRow, pivot: &IntRow, col: usize) -> IntRow {
    let p = entry_of(pivot, col).expect("pivot entry");
    let r = match entry_of(row, col) {
        Some(r) => r,
        None => return row.clone(),
    };
    let g = p.gcd(r);
    let mut a = p / &g;
    let mut b = r / &g;
    if a.is_negative() {
        a = -a;
        b = -b;
    }
    let mut out = combine(&a, row, &b, pivot);
    make_primitive(&mut out);
    out
}

/// Clears denominators of a rational row and returns the primitive integer row.
pub fn primitive_int_row(values: &[Rational]) -> IntRow {
    let mut l = BigInt::one();
    for v in values {
        if !v.is_zero() {
            l = l.lcm(v.denom());
        }
    }
    let mut row: IntRow = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.numer() * (&l / v.denom())))
        .collect();
    make_primitive(&mut row);
    row
}

/// Primitive integer form of a vector: entries divided by their gcd, first
/// nonzero entry positive.
pub fn primitive_vector(values: &[BigInt]) -> Vec<BigInt> {
    let mut row: IntRow = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect();
    make_primitive(&mut row);
    let mut out = vec![BigInt::zero(); values.len()];
    for (c, v) in row {
        out[c] = v;
    }
    out
}

#[derive(Clone, Debug)]
enum Storage {
    Dense(Vec<Rational>),
    Sparse(Vec<BTreeMap<usize, Rational>>),
}

/// Exact rational matrix. Dense below [`SPARSE_THRESHOLD`] entries, row-sparse
/// above; the two layouts behave identically.
#[derive(Clone, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    storage: Storage,
}

/// Row echelon form produced by fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub cols: usize,
    pub rows: Vec<IntRow>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

impl PartialEq for RationalMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && (0..self.rows).all(|r| self.row(r) == other.row(r))
    }
}

impl Eq for RationalMatrix {}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let storage = if rows * cols > SPARSE_THRESHOLD {
            Storage::Sparse(vec![BTreeMap::new(); rows])
        } else {
            Storage::Dense(vec![Rational::zero(); rows * cols])
        };
        RationalMatrix {
            rows,
            cols,
            storage,
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, c, v);
                }
            }
        }
        Ok(m)
    }

    pub fn from_integer_rows(rows: &[Vec<BigInt>]) -> Result<Self, LinAlgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
                .collect(),
        )
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinAlgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols + c].clone(),
            Storage::Sparse(s) => s[r].get(&c).cloned().unwrap_or_else(Rational::zero),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match &mut self.storage {
            Storage::Dense(d) => d[r * self.cols + c] = v,
            Storage::Sparse(s) => {
                if v.is_zero() {
                    s[r].remove(&c);
                } else {
                    s[r].insert(c, v);
                }
            }
        }
    }

    pub fn row(&self, r: usize) -> Vec<Rational> {
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols..(r + 1) * self.cols].to_vec(),
            Storage::Sparse(s) => {
                let mut out = vec![Rational::zero(); self.cols];
                for (c, v) in &s[r] {
                    out[*c] = v.clone();
                }
                out
            }
        }
    }

    /// Nonzero entries of row `r` as `(column, value)` pairs.
    pub fn row_entries(&self, r: usize) -> Vec<(usize, Rational)> {
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols..(r + 1) * self.cols]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
            Storage::Sparse(s) => s[r].iter().map(|(c, v)| (*c, v.clone())).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for (c, v) in self.row_entries(r) {
                t.set(c, r, v);
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        let other_rows: Vec<_> = (0..other.rows).map(|r| other.row_entries(r)).collect();
        for r in 0..self.rows {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in self.row_entries(r) {
                for (c, b) in &other_rows[k] {
                    *acc.entry(*c).or_insert_with(Rational::zero) += &a * b;
                }
            }
            for (c, v) in acc {
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    /// Each row cleared to a primitive integer row.
    pub fn int_rows(&self) -> Vec<IntRow> {
        (0..self.rows)
            .map(|r| {
                let entries = self.row_entries(r);
                let mut l = BigInt::one();
                for (_, v) in &entries {
                    l = l.lcm(v.denom());
                }
                let mut row: IntRow = entries
                    .into_iter()
                    .map(|(c, v)| (c, v.numer() * (&l / v.denom())))
                    .collect();
                make_primitive(&mut row);
                row
            })
            .collect()
    }

    /// Row echelon form. Deterministic: the pivot for each column is the
    /// candidate row of least bit-size, ties broken by position.
    pub fn row_echelon(&self) -> Echelon {
        echelon_from_int_rows(self.cols, self.int_rows())
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rank()
    }

    /// Reduced row echelon form (pivots equal to one) and its pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let ech = self.row_echelon();
        let reduced = back_substitute(&ech);
        let mut out = Self::zeros(reduced.len(), self.cols);
        for (r, row) in reduced.iter().enumerate() {
            let p = &row[0].1;
            for (c, v) in row {
                out.set(r, *c, Rational::new(v.clone(), p.clone()));
            }
        }
        (out, ech.pivots)
    }

    /// Basis of `{x : M x = 0}`, each vector integral and primitive.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let ech = self.row_echelon();
        let reduced = back_substitute(&ech);
        let pivot_set: HashMap<usize, usize> = ech
            .pivots
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i))
            .collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains_key(c)) {
            // x_free = 1, x_{p_i} = -R[i][free] / R[i][p_i]
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (i, row) in reduced.iter().enumerate() {
                if let Some(v) = entry_of(row, free) {
                    x[ech.pivots[i]] = -Rational::new(v.clone(), row[0].1.clone());
                }
            }
            let row = primitive_int_row(&x);
            let mut v = vec![BigInt::zero(); self.cols];
            for (c, val) in row {
                v[c] = val;
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{y : y M = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<BigInt>> {
        self.transpose().nullspace()
    }

    /// One solution of `M x = b` (free variables zero), or `None`.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for (c, v) in self.row_entries(r) {
                aug.set(r, c, v);
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (rref, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rref.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<RationalMatrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let k = self.rows;
        let mut aug = Self::zeros(k, 2 * k);
        for r in 0..k {
            for (c, v) in self.row_entries(r) {
                aug.set(r, c, v);
            }
            aug.set(r, k + r, Rational::one());
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() < k || pivots[k - 1] >= k {
            return Err(LinAlgError::Singular);
        }
        let mut inv = Self::zeros(k, k);
        for r in 0..k {
            for c in 0..k {
                let v = rref.get(r, k + c);
                if !v.is_zero() {
                    inv.set(r, c, v);
                }
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<Rational, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        // det(M) = det(D M) / det(D) where D clears each row's denominators.
        let mut scale = BigInt::one();
        let mut int_rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let row = self.row(r);
            let mut l = BigInt::one();
            for v in &row {
                l = l.lcm(v.denom());
            }
            int_rows.push(row.iter().map(|v| v.numer() * (&l / v.denom())).collect());
            scale *= l;
        }
        let det = bareiss_determinant(int_rows);
        Ok(Rational::new(det, scale))
    }

    /// Coordinate-list text: one `row col numerator/denominator` line per
    /// nonzero entry, 0-based indices, row-major order.
    pub fn to_coordinate_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            for (c, v) in self.row_entries(r) {
                out.push_str(&format!("{} {} {}\n", r, c, rational_to_string(&v)));
            }
        }
        out
    }

    pub fn from_coordinate_text(text: &str, rows: usize, cols: usize) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(rows, cols);
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |reason: &str| LinAlgError::Parse {
                line: i + 1,
                reason: reason.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(parse_err("expected `row col value`"));
            }
            let r: usize = fields[0].parse().map_err(|_| parse_err("bad row index"))?;
            let c: usize = fields[1].parse().map_err(|_| parse_err("bad column index"))?;
            if r >= rows || c >= cols {
                return Err(parse_err("index out of range"));
            }
            let v = rational_from_str(fields[2]).ok_or_else(|| parse_err("bad rational"))?;
            m.set(r, c, v);
        }
        Ok(m)
    }

    pub fn to_json(&self) -> MatrixJson {
        let mut entries = Vec::new();
        for r in 0..self.rows {
            for (c, v) in self.row_entries(r) {
                entries.push((r, c, rational_to_string(&v)));
            }
        }
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(json.rows, json.cols);
        for (i, (r, c, v)) in json.entries.iter().enumerate() {
            let err = |reason: &str| LinAlgError::Parse {
                line: i + 1,
                reason: reason.to_string(),
            };
            if *r >= json.rows || *c >= json.cols {
                return Err(err("index out of range"));
            }
            m.set(*r, *c, rational_from_str(v).ok_or_else(|| err("bad rational"))?);
        }
        Ok(m)
    }
}

/// JSON wrapper for the coordinate-list format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(rational_to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn echelon_from_int_rows(cols: usize, rows: Vec<IntRow>) -> Echelon {
    let mut remaining: Vec<IntRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut out_rows = Vec::new();
    let mut pivots = Vec::new();
    while !remaining.is_empty() {
        let col = remaining.iter().map(|r| r[0].0).min().expect("nonempty");
        let (cands, rest): (Vec<IntRow>, Vec<IntRow>) =
            remaining.into_iter().partition(|r| r[0].0 == col);
        let best = cands
            .iter()
            .enumerate()
            .min_by_key(|(i, r)| (bit_size(r), *i))
            .map(|(i, _)| i)
            .expect("nonempty candidates");
        let pivot = cands[best].clone();
        remaining = rest;
        for (i, r) in cands.into_iter().enumerate() {
            if i == best {
                continue;
            }
            let reduced = eliminate(&r, &pivot, col);
            if !reduced.is_empty() {
                remaining.push(reduced);
            }
        }
        pivots.push(col);
        out_rows.push(pivot);
    }
    Echelon {
        cols,
        rows: out_rows,
        pivots,
    }
}

/// Clears entries above every pivot, keeping rows integral and primitive.
fn back_substitute(ech: &Echelon) -> Vec<IntRow> {
    let mut rows = ech.rows.clone();
    for i in (0..rows.len()).rev() {
        let col = ech.pivots[i];
        let pivot = rows[i].clone();
        for row in rows.iter_mut().take(i) {
            if entry_of(row, col).is_some() {
                *row = eliminate(row, &pivot, col);
            }
        }
    }
    rows
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// One solution `c` of `sum_i c_i * vectors[i] = target`, or `None` when the
/// target lies outside the span.
pub fn solve_in_span(
    vectors: &[Vec<Rational>],
    target: &[Rational],
) -> Result<Option<Vec<Rational>>, LinAlgError> {
    let dim = target.len();
    let mut m = RationalMatrix::zeros(dim, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        if v.len() != dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    m.solve(target)
}

/// Incrementally built row space. Rows are stored primitive and reduced only
/// at their leading term, so insertion order fixes the basis.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<IntRow>,
    by_pivot: HashMap<usize, usize>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            by_pivot: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[IntRow] {
        &self.rows
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        make_primitive(&mut row);
        while let Some(&(lead, _)) = row.first() {
            match self.by_pivot.get(&lead) {
                Some(&k) => row = eliminate(&row, &self.rows[k], lead),
                None => break,
            }
        }
        row
    }

    /// Reduces a row against the stored pivots. The result is primitive and
    /// empty exactly when the row lies in the span.
    pub fn reduce_sparse(&self, row: IntRow) -> IntRow {
        self.reduce(row)
    }

    /// Adds a sparse integer row; returns whether the rank grew.
    pub fn insert_sparse(&mut self, row: IntRow) -> bool {
        debug_assert!(row.iter().all(|(c, v)| *c < self.dim && !v.is_zero()));
        let reduced = self.reduce(row);
        match reduced.first() {
            None => false,
            Some(&(lead, _)) => {
                self.by_pivot.insert(lead, self.rows.len());
                self.rows.push(reduced);
                true
            }
        }
    }

    pub fn insert_integer(&mut self, values: &[BigInt]) -> bool {
        assert_eq!(values.len(), self.dim, "vector length");
        let row = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.insert_sparse(row)
    }

    pub fn insert_rational(&mut self, values: &[Rational]) -> bool {
        assert_eq!(values.len(), self.dim, "vector length");
        self.insert_sparse(primitive_int_row(values))
    }

    pub fn contains_rational(&self, values: &[Rational]) -> bool {
        self.reduce(primitive_int_row(values)).is_empty()
    }

    pub fn contains_integer(&self, values: &[BigInt]) -> bool {
        let row = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.reduce(row).is_empty()
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows.len(), self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, Rational::from_integer(v.clone()));
            }
        }
        m
    }
}

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

/// Hermite normal form of the row lattice together with a unimodular
/// transform: `transform * original = form`.
///
/// Convention: columns are reduced left to right; each pivot is positive and
/// the entries above it lie in `[0, pivot)`. Zero rows sit at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    pub form: IntegerMatrix,
    pub transform: IntegerMatrix,
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinAlgError::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinAlgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r][c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r]
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_integer_rows(&self.data).expect("rectangular")
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other.data[k][c];
                    if !b.is_zero() {
                        out.data[r][c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `x * self` for a row vector `x`.
    pub fn left_apply(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LinAlgError> {
        if x.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                found: x.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (r, xr) in x.iter().enumerate() {
            if xr.is_zero() {
                continue;
            }
            for (c, v) in self.data[r].iter().enumerate() {
                if !v.is_zero() {
                    out[c] += xr * v;
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        echelon_from_int_rows(
            self.cols,
            self.data
                .iter()
                .map(|r| {
                    let mut row: IntRow = r
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(c, v)| (c, v.clone()))
                        .collect();
                    make_primitive(&mut row);
                    row
                })
                .collect(),
        )
        .rank()
    }

    pub fn determinant(&self) -> Result<BigInt, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss_determinant(self.data.clone()))
    }

    pub fn hermite_form(&self) -> HermiteForm {
        let (r, c) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut u = Self::identity(r).data;
        let mut pivots = Vec::new();
        let mut k = 0;
        for col in 0..c {
            if k == r {
                break;
            }
            loop {
                // smallest nonzero |entry| at or below row k
                let best = (k..r)
                    .filter(|&i| !a[i][col].is_zero())
                    .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()).then(i.cmp(&j)));
                let Some(best) = best else { break };
                a.swap(k, best);
                u.swap(k, best);
                let mut clean = true;
                for i in k + 1..r {
                    if a[i][col].is_zero() {
                        continue;
                    }
                    let q = a[i][col].div_floor(&a[k][col]);
                    sub_row_multiple(&mut a, i, k, &q);
                    sub_row_multiple(&mut u, i, k, &q);
                    if !a[i][col].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if a[k][col].is_zero() {
                continue;
            }
            if a[k][col].is_negative() {
                negate_row(&mut a, k);
                negate_row(&mut u, k);
            }
            for i in 0..k {
                let q = a[i][col].div_floor(&a[k][col]);
                if !q.is_zero() {
                    sub_row_multiple(&mut a, i, k, &q);
                    sub_row_multiple(&mut u, i, k, &q);
                }
            }
            pivots.push(col);
            k += 1;
        }
        HermiteForm {
            form: IntegerMatrix {
                rows: r,
                cols: c,
                data: a,
            },
            transform: IntegerMatrix {
                rows: r,
                cols: r,
                data: u,
            },
            pivots,
        }
    }

    /// Nonzero Smith invariant factors `d_1 | d_2 | ... | d_r`.
    pub fn smith_form(&self) -> Vec<BigInt> {
        let (r, c) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut factors = Vec::new();
        let mut t = 0;
        while t < r.min(c) {
            let Some((pi, pj)) = min_abs_entry(&a, t, t) else {
                break;
            };
            a.swap(t, pi);
            swap_cols(&mut a, t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..r {
                    if !a[i][t].is_zero() {
                        let q = a[i][t].div_floor(&a[t][t]);
                        sub_row_multiple(&mut a, i, t, &q);
                        clean &= a[i][t].is_zero();
                    }
                }
                for j in t + 1..c {
                    if !a[t][j].is_zero() {
                        let q = a[t][j].div_floor(&a[t][t]);
                        for row in a.iter_mut().skip(t) {
                            let v = &q * &row[t];
                            row[j] -= v;
                        }
                        clean &= a[t][j].is_zero();
                    }
                }
                if !clean {
                    // move the smallest remainder in row/column t onto the diagonal
                    let mut best = (t, t);
                    let mut best_abs = a[t][t].abs();
                    for i in t + 1..r {
                        if !a[i][t].is_zero() && a[i][t].abs() < best_abs {
                            best = (i, t);
                            best_abs = a[i][t].abs();
                        }
                    }
                    for j in t + 1..c {
                        if !a[t][j].is_zero() && a[t][j].abs() < best_abs {
                            best = (t, j);
                            best_abs = a[t][j].abs();
                        }
                    }
                    a.swap(t, best.0);
                    swap_cols(&mut a, t, best.1);
                    continue;
                }
                let p = a[t][t].clone();
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        let row_i = a[i].clone();
                        for (x, y) in a[t].iter_mut().zip(row_i) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            }
            factors.push(a[t][t].abs());
            t += 1;
        }
        factors
    }

    /// Square, and every Smith invariant factor equals one.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && {
            let f = self.smith_form();
            f.len() == self.rows && f.iter().all(One::is_one)
        }
    }
}

fn sub_row_multiple(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (src, dst) = if source < target {
        let (lo, hi) = a.split_at_mut(target);
        (&lo[source], &mut hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(source);
        (&hi[0], &mut lo[target])
    };
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

fn negate_row(a: &mut [Vec<BigInt>], r: usize) {
    for v in a[r].iter_mut() {
        *v = -std::mem::take(v);
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

fn min_abs_entry(a: &[Vec<BigInt>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, v) in row.iter().enumerate().skip(c0) {
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                best = Some((i, j, abs));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Integer coefficients `x` with `x * lattice = target` (lattice generated by
/// the rows), or `None` when the target is not a lattice vector.
pub fn hermite_solve(
    lattice: &IntegerMatrix,
    target: &[BigInt],
) -> Result<Option<Vec<BigInt>>, LinAlgError> {
    if target.len() != lattice.cols {
        return Err(LinAlgError::DimensionMismatch {
            expected: lattice.cols,
            found: target.len(),
        });
    }
    let hnf = lattice.hermite_form();
    let mut residual = target.to_vec();
    let mut y = vec![BigInt::zero(); lattice.rows];
    for (k, &col) in hnf.pivots.iter().enumerate() {
        let p = hnf.form.get(k, col);
        let (q, rem) = residual[col].div_rem(p);
        if !rem.is_zero() {
            return Ok(None);
        }
        if !q.is_zero() {
            for (res, h) in residual.iter_mut().zip(hnf.form.row(k)) {
                if !h.is_zero() {
                    *res -= &q * h;
                }
            }
        }
        y[k] = q;
    }
    if residual.iter().any(|v| !v.is_zero()) {
        return Ok(None);
    }
    Ok(Some(hnf.transform.left_apply(&y)?))
}

/// Incremental row space over the prime field `F_p`.
#[derive(Clone, Debug)]
pub struct EchelonBasisModP {
    p: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
    by_pivot: HashMap<usize, usize>,
}

impl EchelonBasisModP {
    pub fn new(dim: usize, p: u64) -> Self {
        assert!(p >= 2, "modulus must be prime");
        EchelonBasisModP {
            p,
            dim,
            rows: Vec::new(),
            by_pivot: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat; p is small and prime
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn insert_sparse(&mut self, row: &IntRow) -> bool {
        let mut dense = vec![BigInt::zero(); self.dim];
        for (c, v) in row {
            dense[*c] = v.clone();
        }
        self.insert_integer(&dense)
    }

    pub fn insert_integer(&mut self, values: &[BigInt]) -> bool {
        assert_eq!(values.len(), self.dim, "vector length");
        let pb = BigInt::from(self.p);
        let mut v: Vec<u64> = values
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().expect("reduced mod p"))
            .collect();
        for col in 0..self.dim {
            if v[col] == 0 {
                continue;
            }
            match self.by_pivot.get(&col) {
                Some(&k) => {
                    let f = v[col];
                    for (x, y) in v.iter_mut().zip(&self.rows[k]) {
                        *x = (*x + self.p - f * y % self.p) % self.p;
                    }
                }
                None => {
                    let inv = self.inv(v[col]);
                    for x in v.iter_mut() {
                        *x = *x * inv % self.p;
                    }
                    self.by_pivot.insert(col, self.rows.len());
                    self.rows.push(v);
                    return true;
                }
            }
        }
        false
    }
}
