//! Partitions, compositions, dominance, and tableaux.
//!
//! Cells are addressed `(row, column)`, 1-based. Tableaux are stored as a
//! shape plus the row-major entry sequence (the reading word).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::symgroup::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("tableau is not row-standard")]
    NotRowStandard,
    #[error("tableau is not standard")]
    NotStandard,
    #[error("entry {0} does not occur in the tableau")]
    EntryAbsent(usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid semistandard tableau: {0}")]
    InvalidSemistandard(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weakly decreasing positive parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i`, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// `self ⊵ other`: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool, CombinatoricsError> {
        if self.size() != other.size() {
            return Err(CombinatoricsError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self ▷ other`: dominates and differs.
    pub fn strictly_dominates(&self, other: &Partition) -> Result<bool, CombinatoricsError> {
        Ok(self != other && self.dominates(other)?)
    }

    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Cells `(row, column)` in row-major order, 1-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Hook length of cell `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) - j;
        let leg = self.conjugate().part(j) - i;
        arm + leg + 1
    }

    /// `dim S^λ` by the hook length formula.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, j) in self.cells() {
            hooks *= BigInt::from(self.part(i) - j + conj.part(j) - i + 1);
        }
        let k_fact: BigInt = (1..=self.size()).map(BigInt::from).product();
        k_fact / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = CombinatoricsError;

    /// Comma-separated parts, optionally parenthesized: `4,2,2` or `(4,2,2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect();
        let parts = parts.map_err(|_| CombinatoricsError::InvalidPartition(s.to_string()))?;
        if parts.contains(&0) {
            return Err(CombinatoricsError::InvalidPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

/// A sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts.clone(),
        }
    }
}

/// All partitions of `k` in decreasing lexicographic order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `2n` with all parts even, in decreasing lexicographic order.
pub fn two_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n).iter().map(Partition::doubled).collect()
}

/// A bijective filling of a Young diagram by distinct positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    shape: Partition,
    entries: Vec<usize>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, CombinatoricsError> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| CombinatoricsError::InvalidTableau(format!("{rows:?}")))?;
        if rows.iter().any(Vec::is_empty) {
            return Err(CombinatoricsError::InvalidTableau(format!("{rows:?}")));
        }
        let entries: Vec<usize> = rows.into_iter().flatten().collect();
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if sorted.contains(&0) || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(CombinatoricsError::InvalidTableau(format!(
                "entries must be distinct positive integers: {entries:?}"
            )));
        }
        Ok(Tableau { shape, entries })
    }

    /// `t^λ`: rows filled left to right, top to bottom.
    pub fn row_tableau(shape: &Partition) -> Self {
        Tableau {
            shape: shape.clone(),
            entries: (1..=shape.size()).collect(),
        }
    }

    /// `t_λ`: columns filled top to bottom, left to right.
    pub fn column_tableau(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut value = HashMap::new();
        let mut next = 1;
        for j in 1..=conj.len() {
            for i in 1..=conj.part(j) {
                value.insert((i, j), next);
                next += 1;
            }
        }
        Tableau {
            shape: shape.clone(),
            entries: shape.cells().iter().map(|c| value[c]).collect(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Row-major entries.
    pub fn reading_word(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut idx = 0;
        for &p in self.shape.parts() {
            out.push(self.entries[idx..idx + p].to_vec());
            idx += p;
        }
        out
    }

    /// `t(i, j)`, 1-based. Panics outside the diagram.
    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(j >= 1 && j <= self.shape.part(i), "cell ({i},{j}) outside shape");
        let offset: usize = self.shape.parts()[..i - 1].iter().sum();
        self.entries[offset + j - 1]
    }

    pub fn position(&self, a: usize) -> Option<(usize, usize)> {
        let idx = self.entries.iter().position(|&e| e == a)?;
        Some(self.shape.cells()[idx])
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        let conj = self.shape.conjugate();
        (1..=conj.len()).all(|j| (2..=conj.part(j)).all(|i| self.get(i - 1, j) < self.get(i, j)))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// `res_t(a) = j - i` where `t(i, j) = a`.
    pub fn residue(&self, a: usize) -> Result<i64, CombinatoricsError> {
        let (i, j) = self.position(a).ok_or(CombinatoricsError::EntryAbsent(a))?;
        Ok(j as i64 - i as i64)
    }

    /// The permutation `w` with `(t^λ(i,j))w = t(i,j)` for every cell. The
    /// entries must be exactly `1..=k`.
    pub fn permutation_from_row_tableau(&self) -> Result<Permutation, CombinatoricsError> {
        Permutation::from_images(&self.entries)
            .map_err(|_| CombinatoricsError::InvalidTableau("entries are not 1..k".into()))
    }

    /// `d(t)`, defined by `t^λ d(t) = t`; requires `t` row-standard.
    pub fn d_permutation(&self) -> Result<Permutation, CombinatoricsError> {
        if !self.is_row_standard() {
            return Err(CombinatoricsError::NotRowStandard);
        }
        self.permutation_from_row_tableau()
    }

    /// `t w`: every entry `a` replaced by `(a)w`.
    pub fn act(&self, w: &Permutation) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&a| w.image(a)).collect(),
        }
    }

    /// The tableau of type `content` obtained by replacing every entry in the
    /// `r`-th consecutive block of `1..=k` (block sizes from `content`) by `r`.
    pub fn type_tableau(&self, content: &Partition) -> Result<TypedTableau, CombinatoricsError> {
        if content.size() != self.shape.size() {
            return Err(CombinatoricsError::SizeMismatch {
                left: self.shape.size(),
                right: content.size(),
            });
        }
        let mut block_of = vec![0; content.size() + 1];
        let mut a = 1;
        for (r, &len) in content.parts().iter().enumerate() {
            for _ in 0..len {
                block_of[a] = r + 1;
                a += 1;
            }
        }
        let rows = self
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(|e| block_of[e]).collect())
            .collect();
        Ok(TypedTableau {
            shape: self.shape.clone(),
            content: content.clone(),
            rows,
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// A filling with repeated entries: entry `r` appears `content_r` times.
/// Not necessarily semistandard.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TypedTableau {
    shape: Partition,
    content: Partition,
    rows: Vec<Vec<usize>>,
}

impl TypedTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn content(&self) -> &Partition {
        &self.content
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .enumerate()
                .all(|(j, v)| pair[0][j] < *v)
        });
        rows_ok && cols_ok
    }

    pub fn into_semistandard(self) -> Option<SemistandardTableau> {
        self.is_semistandard().then_some(SemistandardTableau(self))
    }
}

impl fmt::Display for TypedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Rows weakly increase, columns strictly increase, entry `r` appears
/// `content_r` times.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemistandardTableau(TypedTableau);

impl SemistandardTableau {
    pub fn new(
        shape: &Partition,
        content: &Partition,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, CombinatoricsError> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(CombinatoricsError::InvalidSemistandard("row lengths".into()));
        }
        let mut counts = vec![0; content.len() + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > content.len() {
                return Err(CombinatoricsError::InvalidSemistandard(format!("entry {v}")));
            }
            counts[v] += 1;
        }
        if counts[1..] != *content.parts() {
            return Err(CombinatoricsError::InvalidSemistandard("content".into()));
        }
        TypedTableau {
            shape: shape.clone(),
            content: content.clone(),
            rows,
        }
        .into_semistandard()
        .ok_or_else(|| CombinatoricsError::InvalidSemistandard("not semistandard".into()))
    }

    pub fn shape(&self) -> &Partition {
        &self.0.shape
    }

    pub fn content(&self) -> &Partition {
        &self.0.content
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.0.rows
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Standard tableaux of shape λ in lexicographic order of reading words;
/// `t^λ` comes first.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(
        shape: &Partition,
        filled: &mut Vec<usize>,
        grid: &mut Vec<Vec<usize>>,
        next: usize,
        out: &mut Vec<Tableau>,
    ) {
        if next > shape.size() {
            out.push(Tableau {
                shape: shape.clone(),
                entries: grid.iter().flatten().copied().collect(),
            });
            return;
        }
        for i in 0..shape.len() {
            let j = filled[i];
            if j < shape.parts()[i] && (i == 0 || filled[i - 1] > j) {
                grid[i][j] = next;
                filled[i] += 1;
                rec(shape, filled, grid, next + 1, out);
                filled[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    rec(shape, &mut vec![0; shape.len()], &mut grid, 1, &mut out);
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    out
}

/// Semistandard tableaux of shape μ and type λ, in row-major lexicographic
/// order. Empty unless μ ⊵ λ.
pub fn semistandard_tableaux(
    mu: &Partition,
    lambda: &Partition,
) -> Result<Vec<SemistandardTableau>, CombinatoricsError> {
    if mu.size() != lambda.size() {
        return Err(CombinatoricsError::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    // place entries 1, 2, … as horizontal strips
    fn rec(
        mu: &Partition,
        lambda: &Partition,
        entry: usize,
        filled: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if entry > lambda.len() {
            out.push(SemistandardTableau(TypedTableau {
                shape: mu.clone(),
                content: lambda.clone(),
                rows: rows.clone(),
            }));
            return;
        }
        let count = lambda.part(entry);
        strip(mu, lambda, entry, 0, count, filled, rows, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn strip(
        mu: &Partition,
        lambda: &Partition,
        entry: usize,
        row: usize,
        remaining: usize,
        filled: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if remaining == 0 {
            rec(mu, lambda, entry + 1, filled, rows, out);
            return;
        }
        if row >= mu.len() {
            return;
        }
        // cells added in this row must sit below cells filled before this entry
        let above_limit = if row == 0 {
            mu.parts()[0]
        } else {
            rows[row - 1].len() - rows[row - 1].iter().filter(|&&v| v == entry).count()
        };
        let limit = above_limit.min(mu.parts()[row]);
        let max_here = limit.saturating_sub(filled[row]).min(remaining);
        for take in (0..=max_here).rev() {
            for _ in 0..take {
                rows[row].push(entry);
            }
            filled[row] += take;
            strip(mu, lambda, entry, row + 1, remaining - take, filled, rows, out);
            filled[row] -= take;
            for _ in 0..take {
                rows[row].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); mu.len()];
    rec(mu, lambda, 1, &mut vec![0; mu.len()], &mut rows, &mut out);
    out.sort_by(|a, b| a.rows().concat().cmp(&b.rows().concat()));
    Ok(out)
}

/// The tableau `μ(s)` of type λ; see [`Tableau::type_tableau`].
pub fn type_tableau_of(s: &Tableau, lambda: &Partition) -> Result<TypedTableau, CombinatoricsError> {
    s.type_tableau(lambda)
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule, removing rim hooks of lengths
/// `ρ_1, ρ_2, …` as bead moves on an abacus.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<BigInt, CombinatoricsError> {
    if lambda.size() != rho.size() {
        return Err(CombinatoricsError::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.parts()[i] + (l - 1 - i)).collect();
    let mut memo = HashMap::new();
    Ok(mn_rec(beta, rho.parts(), &mut memo))
}

fn mn_rec(
    beta: Vec<usize>,
    hooks: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let Some((&r, rest)) = hooks.split_first() else {
        return BigInt::one();
    };
    let key = (beta.clone(), hooks.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::from(0);
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[idx] = b - r;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let v = mn_rec(next, rest, memo);
        if between % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `(2n-1)!! = (2n-1)(2n-3)⋯3·1`.
pub fn double_factorial_odd(n: usize) -> BigInt {
    (1..=n).map(|i| BigInt::from(2 * i - 1)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent oracle: partitions of k by filtering all weakly decreasing
    /// sequences built from compositions.
    fn count_partitions_oracle(k: usize) -> usize {
        // p(k) via Euler's recurrence on generating function coefficients
        let mut table = vec![0usize; k + 1];
        table[0] = 1;
        for part in 1..=k {
            for total in part..=k {
                table[total] += table[total - part];
            }
        }
        table[k]
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        for k in 0..=12 {
            let ps = partitions_of(k);
            assert_eq!(ps.len(), count_partitions_oracle(k));
            assert!(ps.windows(2).all(|w| w[0] > w[1]), "decreasing lex");
        }
        assert_eq!(two_partitions(3), vec![p(&[6]), p(&[4, 2]), p(&[2, 2, 2])]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        for k in 0..=10 {
            for lam in partitions_of(k) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn dominance() {
        assert!(p(&[4]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[4, 2]).dominates(&p(&[4, 4])).is_err());
        for k in 0..=8 {
            let ps = partitions_of(k);
            for a in &ps {
                assert!(a.dominates(a).unwrap());
                for b in &ps {
                    if a != b && a.dominates(b).unwrap() {
                        assert!(!b.dominates(a).unwrap());
                    }
                    for c in &ps {
                        if a.dominates(b).unwrap() && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    /// Independent oracle: count fillings of the diagram by 1..k that are
    /// row- and column-increasing, by brute force over all permutations.
    fn standard_count_bruteforce(shape: &Partition) -> usize {
        crate::symgroup::all_permutations(shape.size())
            .into_iter()
            .filter(|w| {
                Tableau {
                    shape: shape.clone(),
                    entries: w.images(),
                }
                .is_standard()
            })
            .count()
    }

    #[test]
    fn standard_tableaux_counts() {
        assert_eq!(standard_tableaux(&p(&[4])).len(), 1);
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), standard_count_bruteforce(&p(&[2, 2])));
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[4, 2])).len(), standard_count_bruteforce(&p(&[4, 2])));
        assert_eq!(standard_tableaux(&p(&[4, 2])).len(), 9);
    }

    #[test]
    fn standard_tableaux_hook_formula() {
        for k in 0..=8 {
            for lam in partitions_of(k) {
                let tabs = standard_tableaux(&lam);
                // hook product computed cell by cell from arm and leg counts
                let mut hooks = 1u64;
                for (i, j) in lam.cells() {
                    let arm = lam.parts()[i - 1] - j;
                    let leg = lam.parts().iter().skip(i).filter(|&&r| r >= j).count();
                    hooks *= (arm + leg + 1) as u64;
                }
                let fact: u64 = (1..=k as u64).product();
                assert_eq!(tabs.len() as u64, fact / hooks, "{lam}");
                assert_eq!(tabs[0], Tableau::row_tableau(&lam));
                assert!(tabs.iter().all(Tableau::is_standard));
                assert!(tabs.windows(2).all(|w| w[0].entries < w[1].entries));
            }
        }
    }

    #[test]
    fn dimension_identity_for_even_partitions() {
        for n in 1..=5 {
            let total: usize = two_partitions(n).iter().map(|l| standard_tableaux(l).len()).sum();
            assert_eq!(BigInt::from(total), double_factorial_odd(n));
        }
    }

    #[test]
    fn d_permutations() {
        let lam = p(&[2, 2]);
        assert!(Tableau::row_tableau(&lam).d_permutation().unwrap().is_identity());
        let t = Tableau::from_rows(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(
            t.d_permutation().unwrap(),
            Permutation::parse_cycles("(2 3)", 4).unwrap()
        );
        let bad = Tableau::from_rows(vec![vec![3, 1], vec![2, 4]]).unwrap();
        assert_eq!(bad.d_permutation(), Err(CombinatoricsError::NotRowStandard));
        let mu = p(&[3, 2, 1]);
        let w = Tableau::column_tableau(&mu).d_permutation().unwrap();
        assert_eq!(w, Permutation::parse_cycles("(2 4)(3 6)", 6).unwrap());
        for k in 1..=6 {
            for lam in partitions_of(k) {
                for t in standard_tableaux(&lam) {
                    let d = t.d_permutation().unwrap();
                    assert_eq!(Tableau::row_tableau(&lam).act(&d), t);
                }
            }
        }
    }

    #[test]
    fn residues() {
        assert_eq!(Tableau::row_tableau(&p(&[4])).residue(3).unwrap(), 2);
        assert_eq!(Tableau::column_tableau(&p(&[2, 2])).residue(2).unwrap(), -1);
        assert_eq!(Tableau::row_tableau(&p(&[2, 2])).residue(4).unwrap(), 0);
        assert_eq!(
            Tableau::row_tableau(&p(&[2, 2])).residue(5),
            Err(CombinatoricsError::EntryAbsent(5))
        );
    }

    /// Independent oracle: all fillings of μ with content λ (multiset
    /// permutations), filtered by the semistandard conditions.
    fn semistandard_bruteforce(mu: &Partition, lambda: &Partition) -> usize {
        let k = mu.size();
        let mut content = Vec::new();
        for (r, &c) in lambda.parts().iter().enumerate() {
            content.extend(std::iter::repeat_n(r + 1, c));
        }
        let mut seen = std::collections::HashSet::new();
        for w in crate::symgroup::all_permutations(k) {
            let word: Vec<usize> = w.images0().iter().map(|&i| content[i]).collect();
            if seen.insert(word.clone()) {
                let mut rows = Vec::new();
                let mut idx = 0;
                for &len in mu.parts() {
                    rows.push(word[idx..idx + len].to_vec());
                    idx += len;
                }
                let t = TypedTableau {
                    shape: mu.clone(),
                    content: lambda.clone(),
                    rows,
                };
                if !t.is_semistandard() {
                    seen.remove(&word);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn semistandard_enumeration() {
        let s = semistandard_tableaux(&p(&[4]), &p(&[2, 2])).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].rows(), &[vec![1, 1, 2, 2]]);
        assert!(semistandard_tableaux(&p(&[2, 2]), &p(&[4])).unwrap().is_empty());
        let forced = semistandard_tableaux(&p(&[3, 2]), &p(&[3, 2])).unwrap();
        assert_eq!(forced.len(), 1);
        assert_eq!(forced[0].rows(), &[vec![1, 1, 1], vec![2, 2]]);
        assert!(semistandard_tableaux(&p(&[3]), &p(&[2])).is_err());
        for k in 1..=6 {
            for mu in partitions_of(k) {
                for lam in partitions_of(k) {
                    let got = semistandard_tableaux(&mu, &lam).unwrap();
                    assert_eq!(got.len(), semistandard_bruteforce(&mu, &lam), "{mu} {lam}");
                    if !got.is_empty() {
                        assert!(mu.dominates(&lam).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn type_tableaux() {
        let mu = p(&[4]);
        let t = type_tableau_of(&Tableau::row_tableau(&mu), &p(&[2, 2])).unwrap();
        assert_eq!(t.rows(), &[vec![1, 1, 2, 2]]);
        let lam = p(&[2, 2]);
        let second = &standard_tableaux(&lam)[1];
        let t = type_tableau_of(second, &lam).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2], vec![1, 2]]);
        assert!(!t.is_semistandard());
        let forced = type_tableau_of(&Tableau::row_tableau(&lam), &lam).unwrap();
        assert!(forced.into_semistandard().is_some());
    }

    #[test]
    fn characters() {
        assert_eq!(mn_character(&p(&[4]), &p(&[2, 1, 1])).unwrap(), BigInt::one());
        assert_eq!(mn_character(&p(&[1, 1, 1, 1]), &p(&[2, 1, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(), BigInt::from(2));
        assert!(mn_character(&p(&[2]), &p(&[3])).is_err());
        for k in 1..=8 {
            let ones = Partition::new(vec![1; k]).unwrap();
            for lam in partitions_of(k) {
                assert_eq!(
                    mn_character(&lam, &ones).unwrap(),
                    BigInt::from(standard_tableaux(&lam).len())
                );
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        // Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) = k! δ_{λμ}
        for k in 1..=6 {
            let ps = partitions_of(k);
            for a in &ps {
                for b in &ps {
                    let s: BigInt = ps
                        .iter()
                        .map(|rho| {
                            crate::symgroup::class_size(rho)
                                * mn_character(a, rho).unwrap()
                                * mn_character(b, rho).unwrap()
                        })
                        .sum();
                    let expect = if a == b { crate::symgroup::factorial(k) } else { BigInt::from(0) };
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn partition_text() {
        assert_eq!("4,2,2".parse::<Partition>().unwrap(), p(&[4, 2, 2]));
        assert_eq!("(4,2)".parse::<Partition>().unwrap().to_string(), "4,2");
        assert!("2,4".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    proptest! {
        #[test]
        fn hook_dimension_matches_enumeration(k in 1usize..=7, idx in 0usize..15) {
            let ps = partitions_of(k);
            let lam = &ps[idx % ps.len()];
            prop_assert_eq!(lam.dimension(), BigInt::from(standard_tableaux(lam).len()));
        }
    }
}
