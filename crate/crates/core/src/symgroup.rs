//! Permutations acting on the right of points, the integral group algebra,
//! Young subgroups and the elements built from them.
//!
//! Products read left to right: `(i)(uv) = ((i)u)v`. The public API is
//! 1-based; storage is 0-based.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::combinatorics::{
    CombinatoricsError, Composition, Partition, SemistandardTableau, Tableau,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymGroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("index {index} out of range 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// From 1-based images: `images[i-1] = (i)w`.
    pub fn from_images(images: &[usize]) -> Result<Self, SymGroupError> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(SymGroupError::InvalidPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    /// From 0-based images. Panics unless `images` is a bijection.
    pub fn from_images0(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    pub fn transposition(i: usize, j: usize, k: usize) -> Result<Self, SymGroupError> {
        for x in [i, j] {
            if x == 0 || x > k {
                return Err(SymGroupError::IndexOutOfRange { index: x, k });
            }
        }
        let mut p = Self::identity(k);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The Coxeter generator `s_i = (i, i+1)`.
    pub fn simple(i: usize, k: usize) -> Result<Self, SymGroupError> {
        if i == 0 || i >= k {
            return Err(SymGroupError::IndexOutOfRange { index: i, k });
        }
        Self::transposition(i, i + 1, k)
    }

    pub fn from_cycles(cycles: &[Vec<usize>], k: usize) -> Result<Self, SymGroupError> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut used = vec![false; k];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                if a == 0 || a > k {
                    return Err(SymGroupError::IndexOutOfRange { index: a, k });
                }
                if used[a - 1] {
                    return Err(SymGroupError::InvalidPermutation(format!(
                        "point {a} repeated in cycles"
                    )));
                }
                used[a - 1] = true;
                images[a - 1] = cycle[(idx + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 3 2)(4 5)`; `()` is the identity.
    pub fn parse_cycles(s: &str, k: usize) -> Result<Self, SymGroupError> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| SymGroupError::Parse(s.to_string()))?;
            let close = open
                .find(')')
                .ok_or_else(|| SymGroupError::Parse(s.to_string()))?;
            let body = &open[..close];
            let cycle: Result<Vec<usize>, _> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect();
            let cycle = cycle.map_err(|_| SymGroupError::Parse(s.to_string()))?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(&cycles, k)
    }

    /// Parses one-line notation (`3 1 2 4`) or, if the text starts with `(`,
    /// cycle notation of degree `k`.
    pub fn parse(s: &str, k: usize) -> Result<Self, SymGroupError> {
        if s.trim_start().starts_with('(') {
            return Self::parse_cycles(s, k);
        }
        let p: Self = s.parse()?;
        if p.degree() != k {
            return Err(SymGroupError::DegreeMismatch {
                left: p.degree(),
                right: k,
            });
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `(i)w`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// `(i)w`, 0-based.
    #[inline]
    pub fn image0(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self · other`: apply `self` first.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let k = self.degree();
        let mut count = 0;
        for i in 0..k {
            for j in i + 1..k {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[i_1, …, i_l]` with `self = s_{i_1} s_{i_2} ⋯ s_{i_l}`,
    /// obtained by bubble sort of the image sequence.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut seq = self.images.clone();
        let mut word = Vec::new();
        // left-multiplying by s_i swaps positions i, i+1 of the image sequence
        loop {
            let mut swapped = false;
            for i in 0..seq.len().saturating_sub(1) {
                if seq[i] > seq[i + 1] {
                    seq.swap(i, i + 1);
                    word.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, ordered by that point (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut parts = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur];
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle lengths form a partition")
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }

    /// The permutation of degree `k` acting as `self` on `offset+1..=offset+deg`
    /// and fixing everything else.
    pub fn embed(&self, k: usize, offset: usize) -> Result<Permutation, SymGroupError> {
        if offset + self.degree() > k {
            return Err(SymGroupError::IndexOutOfRange {
                index: offset + self.degree(),
                k,
            });
        }
        let mut images: Vec<usize> = (0..k).collect();
        for (i, &v) in self.images.iter().enumerate() {
            images[offset + i] = offset + v;
        }
        Ok(Permutation { images })
    }

    /// Product of the simple reflections of a word, left to right.
    pub fn from_word(word: &[usize], k: usize) -> Result<Permutation, SymGroupError> {
        let mut p = Self::identity(k);
        for &i in word {
            p = p.then(&Self::simple(i, k)?);
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = SymGroupError;

    /// One-line notation, whitespace or comma separated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images: Result<Vec<usize>, _> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect();
        let images = images.map_err(|_| SymGroupError::Parse(s.to_string()))?;
        Self::from_images(&images)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

/// All permutations of degree `k` in lexicographic order of image sequences.
pub fn all_permutations(k: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).expect("successor");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Sparse integral combination of permutations of a fixed degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    k: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(k: usize) -> Self {
        GroupAlgebraElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_permutation(Permutation::identity(k))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let k = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::one());
        GroupAlgebraElement { k, terms }
    }

    pub fn from_terms<I>(k: usize, terms: I) -> Result<Self, SymGroupError>
    where
        I: IntoIterator<Item = (Permutation, BigInt)>,
    {
        let mut e = Self::zero(k);
        for (p, c) in terms {
            if p.degree() != k {
                return Err(SymGroupError::DegreeMismatch {
                    left: k,
                    right: p.degree(),
                });
            }
            e.add_term(p, c);
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, p: Permutation, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.k);
        }
        GroupAlgebraElement {
            k: self.k,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, SymGroupError> {
        if self.k != other.k {
            return Err(SymGroupError::DegreeMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let mut acc: HashMap<Permutation, BigInt> = HashMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                *acc.entry(p.then(q)).or_default() += a * b;
            }
        }
        Ok(GroupAlgebraElement {
            k: self.k,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn right_mul_perm(&self, w: &Permutation) -> Self {
        GroupAlgebraElement {
            k: self.k,
            terms: self.terms.iter().map(|(p, c)| (p.then(w), c.clone())).collect(),
        }
    }

    pub fn left_mul_perm(&self, w: &Permutation) -> Self {
        GroupAlgebraElement {
            k: self.k,
            terms: self.terms.iter().map(|(p, c)| (w.then(p), c.clone())).collect(),
        }
    }

    /// Sum of absolute values of the coefficients.
    pub fn weight(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.k, rhs.k, "degree mismatch");
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn neg(self) -> GroupAlgebraElement {
        GroupAlgebraElement {
            k: self.k,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{}*{}", c, p.to_cycle_string()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Elements of the Young subgroup `S_μ`, the row stabilizer of `t^μ`, in
/// lexicographic order.
pub fn young_subgroup(mu: &Composition) -> Vec<Permutation> {
    let k = mu.size();
    let mut out = vec![Permutation::identity(k)];
    let mut offset = 0;
    for &part in mu.parts() {
        if part > 1 {
            let block: Vec<Permutation> = all_permutations(part)
                .into_iter()
                .map(|p| p.embed(k, offset).expect("block fits"))
                .collect();
            out = out
                .iter()
                .flat_map(|a| block.iter().map(move |b| a.then(b)))
                .collect();
        }
        offset += part;
    }
    out.sort();
    out
}

/// `x_μ`, the sum of `S_μ`.
pub fn x_element(mu: &Composition) -> GroupAlgebraElement {
    let k = mu.size();
    GroupAlgebraElement {
        k,
        terms: young_subgroup(mu).into_iter().map(|p| (p, BigInt::one())).collect(),
    }
}

/// `y_μ`, the signed sum of `S_μ`.
pub fn y_element(mu: &Composition) -> GroupAlgebraElement {
    let k = mu.size();
    GroupAlgebraElement {
        k,
        terms: young_subgroup(mu)
            .into_iter()
            .map(|p| {
                let s = BigInt::from(p.sign());
                (p, s)
            })
            .collect(),
    }
}

/// The Jucys–Murphy element `L_a = (1,a) + (2,a) + ⋯ + (a-1,a)`.
pub fn jm_element(a: usize, k: usize) -> Result<GroupAlgebraElement, SymGroupError> {
    if a == 0 || a > k {
        return Err(SymGroupError::IndexOutOfRange { index: a, k });
    }
    let mut e = GroupAlgebraElement::zero(k);
    for i in 1..a {
        e.add_term(Permutation::transposition(i, a, k)?, BigInt::one());
    }
    Ok(e)
}

/// Elements of the column stabilizer of `t_λ` that move the rows of each
/// block of equal-length rows of `t_λ` uniformly across columns.
pub fn tilde_subgroup(lambda: &Partition) -> Vec<Permutation> {
    let conj = lambda.conjugate();
    let t = Tableau::column_tableau(lambda);
    let parts = lambda.parts();
    // blocks of equal parts: (first row, last row), 1-based inclusive
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=parts.len() {
        if i == parts.len() || parts[i] != parts[start] {
            blocks.push((start + 1, i));
            start = i;
        }
    }
    young_subgroup(&Composition::from(&conj))
        .into_iter()
        .filter(|w| {
            blocks.iter().all(|&(lo, hi)| {
                let width = parts[hi - 1];
                (lo..=hi).all(|i| {
                    (lo..=hi).all(|j| {
                        let sends = |a: usize| w.image(t.get(i, a)) == t.get(j, a);
                        let first = sends(1);
                        (2..=width).all(|a| sends(a) == first)
                    })
                })
            })
        })
        .collect()
}

/// `Π_i (λ_i - λ_{i+1})!` with `λ_{ℓ+1} = 0`, as printed in the statement of
/// the `h_λ` identity.
pub fn n_lambda(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let mut out = BigInt::one();
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        out *= factorial(parts[i] - next);
    }
    out
}

/// `|~S_λ| = Π_i k_i!` where `k_i` are the multiplicities of the parts of λ.
pub fn tilde_order(lambda: &Partition) -> BigInt {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.values().map(|&c| factorial(c)).product()
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// `h_λ`: the signed sum of minimal-length representatives of the right
/// cosets of `~S_λ` in `S_{λ'}`.
pub fn h_element(lambda: &Partition) -> GroupAlgebraElement {
    let k = lambda.size();
    let tilde = tilde_subgroup(lambda);
    let conj = lambda.conjugate();
    let mut best: BTreeMap<Permutation, Permutation> = BTreeMap::new();
    for w in young_subgroup(&Composition::from(&conj)) {
        let key = tilde.iter().map(|u| u.then(&w)).min().expect("nonempty subgroup");
        let replace = match best.get(&key) {
            None => true,
            Some(cur) => (w.length(), &w) < (cur.length(), cur),
        };
        if replace {
            best.insert(key, w);
        }
    }
    let mut e = GroupAlgebraElement::zero(k);
    for w in best.into_values() {
        let s = BigInt::from(w.sign());
        e.add_term(w, s);
    }
    e
}

/// The Murphy element `x_{S,t} = Σ d(s)^{-1} x_μ d(t)` over standard
/// μ-tableaux `s` whose type-λ tableau is `S`.
pub fn murphy_element(
    s_tab: &SemistandardTableau,
    t: &Tableau,
) -> Result<GroupAlgebraElement, SymGroupError> {
    let mu = s_tab.shape();
    if t.shape() != mu {
        return Err(CombinatoricsError::SizeMismatch {
            left: t.shape().size(),
            right: mu.size(),
        }
        .into());
    }
    if !t.is_standard() {
        return Err(CombinatoricsError::NotStandard.into());
    }
    let x_mu = x_element(&Composition::from(mu));
    let dt = t.d_permutation()?;
    let mut out = GroupAlgebraElement::zero(mu.size());
    for s in crate::combinatorics::standard_tableaux(mu) {
        if s.type_tableau(s_tab.content())?.rows() == s_tab.rows() {
            let ds_inv = s.d_permutation()?.inverse();
            let term = x_mu.left_mul_perm(&ds_inv).right_mul_perm(&dt);
            out = &out + &term;
        }
    }
    Ok(out)
}

/// One representative per cycle type of degree `k`: consecutive cycles
/// `(1..ρ_1)(ρ_1+1..)…`, identity first.
pub fn conjugacy_class_reps(k: usize) -> Vec<(Partition, Permutation)> {
    let mut parts = crate::combinatorics::partitions_of(k);
    parts.reverse();
    parts
        .into_iter()
        .map(|rho| {
            let mut cycles = Vec::new();
            let mut next = 1;
            for &len in rho.parts() {
                cycles.push((next..next + len).collect::<Vec<_>>());
                next += len;
            }
            let p = Permutation::from_cycles(&cycles, k).expect("valid cycles");
            (rho, p)
        })
        .collect()
}

/// Number of permutations of degree `|ρ|` with cycle type ρ.
pub fn class_size(rho: &Partition) -> BigInt {
    let mut denom = BigInt::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (len, c) in counts {
        denom *= BigInt::from(len).pow(c as u32) * factorial(c);
    }
    factorial(rho.size()) / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn right_action_composition() {
        // (1)(uv) = ((1)u)v
        let u = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let v = Permutation::parse_cycles("(2 3)", 3).unwrap();
        assert_eq!((&u * &v).image(1), 3);
        assert_eq!((&u * &v).to_cycle_string(), "(1 3 2)");
    }

    #[test]
    fn one_line_round_trip() {
        let p: Permutation = "3 1 2 4".parse().unwrap();
        assert_eq!(p.to_string(), "3 1 2 4");
        assert_eq!(Permutation::parse("(1 3 2)", 4).unwrap(), p);
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!(Permutation::parse_cycles("(1 5)", 4).is_err());
    }

    #[test]
    fn simple_reflection_squares_to_one() {
        let s = GroupAlgebraElement::from_permutation(Permutation::simple(1, 3).unwrap());
        assert_eq!(s.multiply(&s).unwrap(), GroupAlgebraElement::identity(3));
        assert!(Permutation::simple(3, 3).is_err());
    }

    #[test]
    fn x_22_squared() {
        let x = x_element(&comp(&[2, 2]));
        assert_eq!(x.len(), 4);
        assert!(x.terms().values().all(One::is_one));
        assert_eq!(x.multiply(&x).unwrap(), x.scale(&BigInt::from(4)));
    }

    #[test]
    fn young_subgroup_generated_by_simple_reflections() {
        // S_(2,3,1) = <s1, s3, s4>
        let sub = young_subgroup(&comp(&[2, 3, 1]));
        assert_eq!(sub.len(), 12);
        let gens: Vec<Permutation> = [1, 3, 4]
            .iter()
            .map(|&i| Permutation::simple(i, 6).unwrap())
            .collect();
        let mut closure = vec![Permutation::identity(6)];
        let mut frontier = closure.clone();
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = p.then(g);
                if !closure.contains(&q) {
                    closure.push(q.clone());
                    frontier.push(q);
                }
            }
        }
        closure.sort();
        assert_eq!(closure, sub);
        assert_eq!(young_subgroup(&comp(&[1, 1, 1])), vec![Permutation::identity(3)]);
        assert_eq!(young_subgroup(&comp(&[4])).len(), 24);
    }

    #[test]
    fn y_two() {
        let y = y_element(&comp(&[2]));
        assert_eq!(y.coefficient(&Permutation::identity(2)), BigInt::one());
        assert_eq!(y.coefficient(&perm(&[2, 1])), -BigInt::one());
        assert_eq!(x_element(&comp(&[1, 1, 1])), GroupAlgebraElement::identity(3));
    }

    #[test]
    fn jucys_murphy_elements() {
        assert!(jm_element(1, 4).unwrap().is_zero());
        let l2 = jm_element(2, 4).unwrap();
        assert_eq!(l2.len(), 1);
        assert_eq!(l2.coefficient(&Permutation::transposition(1, 2, 4).unwrap()), BigInt::one());
        assert_eq!(jm_element(4, 4).unwrap().len(), 3);
        assert!(jm_element(5, 4).is_err());
        for a in 1..=5 {
            for b in 1..=5 {
                let la = jm_element(a, 5).unwrap();
                let lb = jm_element(b, 5).unwrap();
                assert_eq!(la.multiply(&lb).unwrap(), lb.multiply(&la).unwrap());
            }
        }
    }

    #[test]
    fn tilde_subgroup_examples() {
        let t22 = tilde_subgroup(&part(&[2, 2]));
        assert_eq!(
            t22,
            vec![Permutation::identity(4), Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap()]
        );
        assert_eq!(tilde_subgroup(&part(&[4])).len(), 1);
        assert_eq!(tilde_subgroup(&part(&[4, 2])).len(), 1);
    }

    #[test]
    fn tilde_subgroup_order_and_parity() {
        for n in 1..=4 {
            for lambda in crate::combinatorics::two_partitions(n) {
                let sub = tilde_subgroup(&lambda);
                assert_eq!(BigInt::from(sub.len()), tilde_order(&lambda), "{lambda}");
                assert!(sub.iter().all(|w| w.length() % 2 == 0), "{lambda}");
            }
        }
    }

    #[test]
    fn n_lambda_printed_values() {
        assert_eq!(n_lambda(&part(&[4, 2])), BigInt::from(4));
        assert_eq!(n_lambda(&part(&[4])), BigInt::from(24));
        assert_eq!(n_lambda(&part(&[2, 2])), BigInt::from(2));
    }

    #[test]
    fn h_element_cosets() {
        let h = h_element(&part(&[2, 2]));
        assert_eq!(h.len(), 2);
        assert_eq!(h.coefficient(&Permutation::identity(4)), BigInt::one());
        // min-length representatives: identity and one transposition
        assert!(h.terms().keys().all(|p| p.length() <= 1));
        let h42 = h_element(&part(&[4, 2]));
        assert_eq!(h42.len(), 4);
    }

    #[test]
    fn reduced_word_reproduces_permutation() {
        for p in all_permutations(5) {
            let w = p.reduced_word();
            assert_eq!(w.len(), p.length());
            assert_eq!(Permutation::from_word(&w, 5).unwrap(), p);
        }
    }

    #[test]
    fn class_reps() {
        let reps = conjugacy_class_reps(2);
        assert_eq!(reps[0], (part(&[1, 1]), Permutation::identity(2)));
        assert_eq!(reps[1], (part(&[2]), perm(&[2, 1])));
        let reps4 = conjugacy_class_reps(4);
        assert_eq!(reps4.len(), 5);
        for (rho, p) in &reps4 {
            assert_eq!(&p.cycle_type(), rho);
        }
        let total: BigInt = reps4.iter().map(|(rho, _)| class_size(rho)).sum();
        assert_eq!(total, BigInt::from(24));
    }

    #[test]
    fn x_absorbs_subgroup() {
        for k in 1..=5 {
            for lambda in crate::combinatorics::partitions_of(k) {
                let mu = Composition::from(&lambda);
                let x = x_element(&mu);
                for w in young_subgroup(&mu) {
                    assert_eq!(x.right_mul_perm(&w), x);
                    assert_eq!(x.left_mul_perm(&w), x);
                }
            }
        }
        // compositions with zeros and unsorted parts
        let mu = comp(&[1, 0, 3, 2]);
        let x = x_element(&mu);
        for w in young_subgroup(&mu) {
            assert_eq!(x.right_mul_perm(&w), x);
        }
    }

    fn arb_perm(k: usize) -> impl Strategy<Value = Permutation> {
        Just((0..k).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(Permutation::from_images0)
    }

    proptest! {
        #[test]
        fn length_parity_is_multiplicative(k in 1usize..=8, seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut a: Vec<usize> = (0..k).collect();
            let mut b: Vec<usize> = (0..k).collect();
            a.shuffle(&mut rng);
            b.shuffle(&mut rng);
            let u = Permutation::from_images0(a);
            let v = Permutation::from_images0(b);
            prop_assert_eq!((u.then(&v).length()) % 2, (u.length() + v.length()) % 2);
        }

        #[test]
        fn inverse_cancels(p in arb_perm(7)) {
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert!(p.inverse().then(&p).is_identity());
        }

        #[test]
        fn group_algebra_associative(a in arb_perm(4), b in arb_perm(4), c in arb_perm(4)) {
            let ea = &GroupAlgebraElement::from_permutation(a.clone()) + &GroupAlgebraElement::identity(4);
            let eb = GroupAlgebraElement::from_permutation(b);
            let ec = &GroupAlgebraElement::from_permutation(c) - &GroupAlgebraElement::from_permutation(a);
            let left = ea.multiply(&eb).unwrap().multiply(&ec).unwrap();
            let right = ea.multiply(&eb.multiply(&ec).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
