//! Brauer diagrams, their multiplication, and the right action of `S_2n`
//! by conjugation of the corresponding involutions.
//!
//! Vertices use the interleaved labeling: the top row is `1, 3, …, 2n-1` and
//! the bottom row `2, 4, …, 2n`, left to right. The row labeling (top `i`,
//! bottom `i'`) is a view converted at the boundary.

mod element;
mod families;
mod normal_form;
mod poly;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::symgroup::{factorial, Permutation, SymGroupError};

pub use element::{
    BrauerElement, Coefficient, Combination, DiagramSum, RationalCombination, SpecializedElement,
};
pub use families::{bd_set, bd_sum, BdFamily};
pub use normal_form::{d_nu_set, in_d_nu, Generator, NormalForm};
pub use poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("not a Brauer diagram: {0}")]
    InvalidDiagram(String),
    #[error("size mismatch: n = {left} vs n = {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot parse diagram: {0}")]
    Parse(String),
    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("specialization mismatch: {left} vs {right}")]
    SpecializationMismatch { left: String, right: String },
    #[error("malformed element JSON: {0}")]
    Json(String),
    #[error(transparent)]
    SymGroup(#[from] SymGroupError),
}

/// A vertex in the row labeling, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl Vertex {
    /// Interleaved label: top `p` is `2p-1`, bottom `p` is `2p`.
    pub fn label(self) -> usize {
        match self {
            Vertex::Top(p) => 2 * p - 1,
            Vertex::Bottom(p) => 2 * p,
        }
    }

    pub fn from_label(label: usize) -> Self {
        if label % 2 == 1 {
            Vertex::Top(label.div_ceil(2))
        } else {
            Vertex::Bottom(label / 2)
        }
    }
}

/// `γ`: swaps `2i-1` and `2i`.
pub fn gamma(i: usize) -> usize {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

/// A perfect matching on `2n` vertices. Stored as the 0-based partner array
/// in interleaved labels; the derived ordering is the canonical one (it agrees
/// with lexicographic order of the sorted pair list).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<usize>,
}

impl BrauerDiagram {
    /// From a 0-based partner array of length `2n`.
    pub fn from_partner0(partner: Vec<usize>) -> Result<Self, DiagramError> {
        let len = partner.len();
        if len % 2 == 1 {
            return Err(DiagramError::InvalidDiagram("odd number of vertices".into()));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= len || p == i || partner[p] != i {
                return Err(DiagramError::InvalidDiagram(format!(
                    "vertex {} has inconsistent partner",
                    i + 1
                )));
            }
        }
        Ok(BrauerDiagram { n: len / 2, partner })
    }

    pub(crate) fn from_partner0_unchecked(partner: Vec<usize>) -> Self {
        debug_assert!(Self::from_partner0(partner.clone()).is_ok());
        BrauerDiagram {
            n: partner.len() / 2,
            partner,
        }
    }

    /// From 1-based interleaved pairs covering every vertex exactly once.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            for v in [a, b] {
                if v == 0 || v > 2 * n {
                    return Err(DiagramError::IndexOutOfRange { index: v, n });
                }
                if partner[v - 1] != usize::MAX {
                    return Err(DiagramError::InvalidDiagram(format!("vertex {v} repeated")));
                }
            }
            if a == b {
                return Err(DiagramError::InvalidDiagram(format!("loop at {a}")));
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        if let Some(v) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(DiagramError::InvalidDiagram(format!("vertex {} unmatched", v + 1)));
        }
        Ok(BrauerDiagram { n, partner })
    }

    /// `1_{B_n}`: top `i` joined to bottom `i`, i.e. `2i-1 ↔ 2i`.
    pub fn identity(n: usize) -> Self {
        BrauerDiagram {
            n,
            partner: (0..2 * n).map(|v| v ^ 1).collect(),
        }
    }

    /// The diagram of `s_i`: strands `i` and `i+1` crossed.
    pub fn generator_s(i: usize, n: usize) -> Result<Self, DiagramError> {
        if i == 0 || i >= n {
            return Err(DiagramError::IndexOutOfRange { index: i, n });
        }
        let mut d = Self::identity(n);
        let (t1, b1, t2, b2) = (2 * i - 2, 2 * i - 1, 2 * i, 2 * i + 1);
        d.partner[t1] = b2;
        d.partner[b2] = t1;
        d.partner[t2] = b1;
        d.partner[b1] = t2;
        Ok(d)
    }

    /// The diagram of `e_i`: bars joining `i, i+1` in both rows.
    pub fn generator_e(i: usize, n: usize) -> Result<Self, DiagramError> {
        if i == 0 || i >= n {
            return Err(DiagramError::IndexOutOfRange { index: i, n });
        }
        let mut d = Self::identity(n);
        let (t1, b1, t2, b2) = (2 * i - 2, 2 * i - 1, 2 * i, 2 * i + 1);
        d.partner[t1] = t2;
        d.partner[t2] = t1;
        d.partner[b1] = b2;
        d.partner[b2] = b1;
        Ok(d)
    }

    /// The permutation diagram of `w ∈ S_n`: top `i` joined to bottom `(i)w`.
    pub fn from_permutation(w: &Permutation) -> Self {
        let n = w.degree();
        let mut partner = vec![0; 2 * n];
        for i in 0..n {
            let j = w.image0(i);
            partner[2 * i] = 2 * j + 1;
            partner[2 * j + 1] = 2 * i;
        }
        BrauerDiagram { n, partner }
    }

    /// `β^{-1}`: a fixed-point-free involution of `S_2n` as a diagram.
    pub fn from_involution(w: &Permutation) -> Result<Self, DiagramError> {
        Self::from_partner0(w.images0().to_vec())
    }

    /// `β(D)`.
    pub fn to_involution(&self) -> Permutation {
        Permutation::from_images0(self.partner.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partner of a 1-based interleaved label.
    pub fn partner(&self, label: usize) -> usize {
        self.partner[label - 1] + 1
    }

    #[inline]
    pub fn partner0(&self, v: usize) -> usize {
        self.partner[v]
    }

    pub fn partner_array0(&self) -> &[usize] {
        &self.partner
    }

    pub fn partner_of(&self, v: Vertex) -> Vertex {
        Vertex::from_label(self.partner(v.label()))
    }

    /// Edges as `(min, max)` 1-based interleaved pairs, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n)
            .filter(|&v| v < self.partner[v])
            .map(|v| (v + 1, self.partner[v] + 1))
            .collect()
    }

    /// Horizontal edges of the top row as `(a, b)`, `a < b`, sorted by `a`.
    pub fn top_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter_map(|p| {
                let q = self.partner[2 * p];
                (q % 2 == 0 && q > 2 * p).then_some((p + 1, q / 2 + 1))
            })
            .collect()
    }

    /// Horizontal edges of the bottom row as `(c, d)`, `c < d`, sorted by `c`.
    pub fn bottom_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter_map(|p| {
                let q = self.partner[2 * p + 1];
                (q % 2 == 1 && q > 2 * p + 1).then_some((p + 1, q / 2 + 1))
            })
            .collect()
    }

    /// Vertical strands as `(top, bottom)`, sorted by top position.
    pub fn vertical_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter_map(|p| {
                let q = self.partner[2 * p];
                (q % 2 == 1).then_some((p + 1, q / 2 + 1))
            })
            .collect()
    }

    /// Number of horizontal edges in each row.
    pub fn horizontal_count(&self) -> usize {
        (self.n - self.vertical_edges().len()) / 2
    }

    /// The permutation `w` if this is the diagram of `w`.
    pub fn as_permutation(&self) -> Option<Permutation> {
        let vert = self.vertical_edges();
        (vert.len() == self.n).then(|| {
            Permutation::from_images0(vert.iter().map(|&(_, b)| b - 1).collect())
        })
    }

    /// Stacks `self` over `other` and returns the composite with the number of
    /// closed loops removed.
    pub fn compose(&self, other: &BrauerDiagram) -> Result<(BrauerDiagram, usize), DiagramError> {
        if self.n != other.n {
            return Err(DiagramError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(compose_unchecked(self, other))
    }

    /// `D ∗ w`: the edge `{a, b}` becomes `{(a)w, (b)w}`.
    pub fn star(&self, w: &Permutation) -> Result<BrauerDiagram, DiagramError> {
        if w.degree() != 2 * self.n {
            return Err(DiagramError::SizeMismatch {
                left: self.n,
                right: w.degree() / 2,
            });
        }
        Ok(self.star_unchecked(w))
    }

    pub(crate) fn star_unchecked(&self, w: &Permutation) -> BrauerDiagram {
        let mut partner = vec![0; 2 * self.n];
        for a in 0..2 * self.n {
            partner[w.image0(a)] = w.image0(self.partner[a]);
        }
        BrauerDiagram { n: self.n, partner }
    }

    /// The ∗-orbit, sorted. Generated by breadth-first search over the
    /// Coxeter generators of `S_2n`.
    pub fn orbit(&self) -> Vec<BrauerDiagram> {
        let k = 2 * self.n;
        let gens: Vec<Permutation> = (1..k)
            .map(|i| Permutation::simple(i, k).expect("in range"))
            .collect();
        let mut seen = BTreeSet::new();
        seen.insert(self.clone());
        let mut queue = VecDeque::from([self.clone()]);
        while let Some(d) = queue.pop_front() {
            for g in &gens {
                let e = d.star_unchecked(g);
                if seen.insert(e.clone()) {
                    queue.push_back(e);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `|S_2n| / |orbit|`.
    pub fn stabilizer_order(&self) -> BigInt {
        factorial(2 * self.n) / BigInt::from(self.orbit().len())
    }

    /// All `w ∈ S_2n` with `D ∗ w = D`, by exhaustive search.
    pub fn stabilizer(&self) -> Vec<Permutation> {
        crate::symgroup::all_permutations(2 * self.n)
            .into_iter()
            .filter(|w| self.star_unchecked(w) == *self)
            .collect()
    }

    /// Parses interleaved text `(1 3)(2 4)`; `n` is inferred when `None`.
    pub fn parse_interleaved(text: &str, n: Option<usize>) -> Result<Self, DiagramError> {
        let pairs = parse_pair_groups(text)?
            .into_iter()
            .map(|(a, b)| {
                let a: usize = a.parse().map_err(|_| DiagramError::Parse(text.into()))?;
                let b: usize = b.parse().map_err(|_| DiagramError::Parse(text.into()))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>, DiagramError>>()?;
        let n = n.unwrap_or_else(|| pairs.len());
        Self::from_pairs(n, &pairs)
    }

    /// Parses row-labeled text `(1 2')(2 1')`: primed numbers are bottom
    /// vertices.
    pub fn parse_rows(text: &str, n: Option<usize>) -> Result<Self, DiagramError> {
        let vertex = |t: &str| -> Result<usize, DiagramError> {
            let (num, bottom) = match t.strip_suffix('\'') {
                Some(s) => (s, true),
                None => (t, false),
            };
            let p: usize = num.parse().map_err(|_| DiagramError::Parse(text.into()))?;
            if p == 0 {
                return Err(DiagramError::Parse(text.into()));
            }
            Ok(if bottom {
                Vertex::Bottom(p).label()
            } else {
                Vertex::Top(p).label()
            })
        };
        let pairs = parse_pair_groups(text)?
            .into_iter()
            .map(|(a, b)| Ok((vertex(&a)?, vertex(&b)?)))
            .collect::<Result<Vec<_>, DiagramError>>()?;
        let n = n.unwrap_or_else(|| pairs.len());
        Self::from_pairs(n, &pairs)
    }

    /// Row-labeled text, e.g. `(1 2')(2 1')` for `s_1`.
    pub fn to_row_string(&self) -> String {
        let show = |v: Vertex| match v {
            Vertex::Top(p) => p.to_string(),
            Vertex::Bottom(p) => format!("{p}'"),
        };
        let mut edges: Vec<(Vertex, Vertex)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (Vertex::from_label(a), Vertex::from_label(b));
                if y < x {
                    (y, x)
                } else {
                    (x, y)
                }
            })
            .collect();
        edges.sort();
        edges
            .into_iter()
            .map(|(x, y)| format!("({} {})", show(x), show(y)))
            .collect()
    }
}

fn parse_pair_groups(text: &str) -> Result<Vec<(String, String)>, DiagramError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| DiagramError::Parse(text.into()))?;
        let close = inner.find(')').ok_or_else(|| DiagramError::Parse(text.into()))?;
        let tokens: Vec<&str> = inner[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() != 2 {
            return Err(DiagramError::Parse(text.into()));
        }
        out.push((tokens[0].to_string(), tokens[1].to_string()));
        rest = inner[close + 1..].trim_start();
    }
    Ok(out)
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Union-find over the `4n` vertices of the stacked picture: slots `0..2n`
/// hold the upper diagram, `2n..4n` the lower one.
pub(crate) fn compose_unchecked(upper: &BrauerDiagram, lower: &BrauerDiagram) -> (BrauerDiagram, usize) {
    let n = upper.n;
    let off = 2 * n;
    let mut parent: Vec<usize> = (0..4 * n).collect();
    for v in 0..2 * n {
        union(&mut parent, v, upper.partner[v]);
        union(&mut parent, off + v, off + lower.partner[v]);
    }
    for p in 0..n {
        union(&mut parent, 2 * p + 1, off + 2 * p);
    }
    // outer vertices: upper top rows (2p) become top p; lower bottom rows
    // (off + 2p + 1) become bottom p
    let mut first_outer = vec![usize::MAX; 4 * n];
    let mut partner = vec![0; 2 * n];
    let mut has_outer = vec![false; 4 * n];
    for p in 0..n {
        for (slot, label) in [(2 * p, 2 * p), (off + 2 * p + 1, 2 * p + 1)] {
            let r = find(&mut parent, slot);
            has_outer[r] = true;
            if first_outer[r] == usize::MAX {
                first_outer[r] = label;
            } else {
                let other = first_outer[r];
                partner[other] = label;
                partner[label] = other;
            }
        }
    }
    let mut loops = 0;
    for v in 0..4 * n {
        if find(&mut parent, v) == v && !has_outer[v] {
            loops += 1;
        }
    }
    (BrauerDiagram::from_partner0_unchecked(partner), loops)
}

/// All Brauer `n`-diagrams in canonical order: the least unmatched vertex is
/// paired with each remaining vertex in increasing order.
pub fn enumerate_all(n: usize) -> Vec<BrauerDiagram> {
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(BrauerDiagram::from_partner0_unchecked(partner.clone()));
            return;
        };
        for second in first + 1..partner.len() {
            if partner[second] == usize::MAX {
                partner[first] = second;
                partner[second] = first;
                rec(partner, out);
                partner[first] = usize::MAX;
                partner[second] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; 2 * n], &mut out);
    out
}

/// Position of each diagram in [`enumerate_all`] order.
pub fn diagram_index(n: usize) -> std::collections::HashMap<BrauerDiagram, usize> {
    enumerate_all(n)
        .into_iter()
        .enumerate()
        .map(|(i, d)| (d, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::double_factorial_odd;
    use proptest::prelude::*;

    fn d(n: usize, text: &str) -> BrauerDiagram {
        BrauerDiagram::parse_interleaved(text, Some(n)).unwrap()
    }

    #[test]
    fn generators_in_interleaved_labels() {
        assert_eq!(BrauerDiagram::identity(2), d(2, "(1 2)(3 4)"));
        assert_eq!(BrauerDiagram::generator_s(1, 2).unwrap(), d(2, "(1 4)(2 3)"));
        assert_eq!(BrauerDiagram::generator_e(1, 2).unwrap(), d(2, "(1 3)(2 4)"));
        assert!(BrauerDiagram::generator_e(2, 2).is_err());
        assert!(BrauerDiagram::generator_s(0, 2).is_err());
    }

    #[test]
    fn text_forms() {
        let s1 = BrauerDiagram::generator_s(1, 2).unwrap();
        assert_eq!(s1.to_string(), "(1 4)(2 3)");
        assert_eq!(s1.to_row_string(), "(1 2')(2 1')");
        assert_eq!(BrauerDiagram::parse_rows("(1 2')(2 1')", None).unwrap(), s1);
        assert_eq!(BrauerDiagram::parse_rows("(1 2)(1' 2')", None).unwrap(),
                   BrauerDiagram::generator_e(1, 2).unwrap());
        assert!(BrauerDiagram::parse_interleaved("(1 2)(2 3)", None).is_err());
        assert!(BrauerDiagram::parse_interleaved("(1 2)(3)", None).is_err());
        assert!(BrauerDiagram::parse_interleaved("(1 2", None).is_err());
    }

    /// Independent oracle: follow paths through the stacked picture vertex by
    /// vertex, alternating diagram edges and middle-row identifications.
    fn compose_by_path_tracing(a: &BrauerDiagram, b: &BrauerDiagram) -> (Vec<(Vertex, Vertex)>, usize) {
        #[derive(Clone, Copy, PartialEq, Eq, Debug)]
        enum Slot {
            Up(Vertex),
            Low(Vertex),
        }
        let n = a.n();
        let step_edge = |s: Slot| match s {
            Slot::Up(v) => Slot::Up(a.partner_of(v)),
            Slot::Low(v) => Slot::Low(b.partner_of(v)),
        };
        let step_middle = |s: Slot| match s {
            Slot::Up(Vertex::Bottom(p)) => Some(Slot::Low(Vertex::Top(p))),
            Slot::Low(Vertex::Top(p)) => Some(Slot::Up(Vertex::Bottom(p))),
            _ => None,
        };
        let outer = |s: Slot| match s {
            Slot::Up(Vertex::Top(p)) => Some(Vertex::Top(p)),
            Slot::Low(Vertex::Bottom(p)) => Some(Vertex::Bottom(p)),
            _ => None,
        };
        let mut edges = Vec::new();
        let mut visited_middle = std::collections::HashSet::new();
        let starts: Vec<Slot> = (1..=n)
            .map(|p| Slot::Up(Vertex::Top(p)))
            .chain((1..=n).map(|p| Slot::Low(Vertex::Bottom(p))))
            .collect();
        for start in starts {
            let mut cur = step_edge(start);
            loop {
                if let Some(end) = outer(cur) {
                    let s = outer(start).unwrap();
                    if s < end {
                        edges.push((s, end));
                    }
                    break;
                }
                visited_middle.insert(format!("{cur:?}"));
                let next = step_middle(cur).unwrap();
                visited_middle.insert(format!("{next:?}"));
                cur = step_edge(next);
            }
        }
        // remaining middle vertices form loops; each loop has an even number
        // of middle slots, count by walking
        let mut loops = 0;
        for p in 1..=n {
            let s = Slot::Up(Vertex::Bottom(p));
            if visited_middle.contains(&format!("{s:?}")) {
                continue;
            }
            loops += 1;
            let mut cur = s;
            loop {
                visited_middle.insert(format!("{cur:?}"));
                let nxt = step_middle(cur).unwrap();
                visited_middle.insert(format!("{nxt:?}"));
                cur = step_edge(nxt);
                if cur == s {
                    break;
                }
            }
        }
        edges.sort();
        (edges, loops)
    }

    fn row_edges(d: &BrauerDiagram) -> Vec<(Vertex, Vertex)> {
        let mut e: Vec<_> = d
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (Vertex::from_label(a), Vertex::from_label(b));
                if x < y { (x, y) } else { (y, x) }
            })
            .collect();
        e.sort();
        e
    }

    #[test]
    fn compose_matches_path_tracing_exhaustively() {
        for n in 1..=3 {
            let all = enumerate_all(n);
            for a in &all {
                for b in &all {
                    let (c, loops) = a.compose(b).unwrap();
                    let (edges, oracle_loops) = compose_by_path_tracing(a, b);
                    assert_eq!(row_edges(&c), edges);
                    assert_eq!(loops, oracle_loops);
                }
            }
        }
    }

    #[test]
    fn basic_products() {
        let e1 = BrauerDiagram::generator_e(1, 2).unwrap();
        assert_eq!(e1.compose(&e1).unwrap(), (e1.clone(), 1));
        let s1 = BrauerDiagram::generator_s(1, 2).unwrap();
        assert_eq!(s1.compose(&s1).unwrap(), (BrauerDiagram::identity(2), 0));
        let e1 = BrauerDiagram::generator_e(1, 3).unwrap();
        let e2 = BrauerDiagram::generator_e(2, 3).unwrap();
        let (p, l1) = e1.compose(&e2).unwrap();
        let (q, l2) = p.compose(&e1).unwrap();
        assert_eq!((q, l1 + l2), (e1, 0));
        assert!(BrauerDiagram::identity(2).compose(&BrauerDiagram::identity(3)).is_err());
    }

    #[test]
    fn counts() {
        for n in 1..=6 {
            let all = enumerate_all(n);
            assert_eq!(BigInt::from(all.len()), double_factorial_odd(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            // canonical order equals lexicographic order of pair lists
            assert!(all.windows(2).all(|w| w[0].pairs() < w[1].pairs()));
        }
    }

    #[test]
    fn star_examples() {
        let id = BrauerDiagram::identity(2);
        let w = Permutation::parse_cycles("(2 3)", 4).unwrap();
        assert_eq!(id.star(&w).unwrap(), BrauerDiagram::generator_e(1, 2).unwrap());
        assert_eq!(id.star(&Permutation::identity(4)).unwrap(), id);
        assert!(id.star(&Permutation::identity(3)).is_err());
        // conjugation of the involution
        let inv = id.to_involution();
        let conj = w.inverse().then(&inv).then(&w);
        assert_eq!(BrauerDiagram::from_involution(&conj).unwrap(), id.star(&w).unwrap());
    }

    #[test]
    fn worked_example_shape() {
        // s_7 swaps the bottom-right vertex 8 with the top-right vertex 7
        let dgm = d(4, "(1 4)(2 6)(3 8)(5 7)");
        let s7 = Permutation::transposition(7, 8, 8).unwrap();
        let e = dgm.star(&s7).unwrap();
        assert_eq!(e, d(4, "(1 4)(2 6)(3 7)(5 8)"));
        assert_eq!(e.star(&s7).unwrap(), dgm);
    }

    #[test]
    fn orbits_and_stabilizers() {
        for n in 1..=4 {
            let id = BrauerDiagram::identity(n);
            let orbit = id.orbit();
            assert_eq!(orbit, enumerate_all(n));
            let expect = BigInt::from(2u32).pow(n as u32) * factorial(n);
            assert_eq!(id.stabilizer_order(), expect);
        }
        assert_eq!(BrauerDiagram::identity(2).orbit().len(), 3);
        assert_eq!(BrauerDiagram::identity(2).stabilizer_order(), BigInt::from(8));
        assert_eq!(BrauerDiagram::identity(3).stabilizer_order(), BigInt::from(48));
        // the stabilizer of 1_{B_n} is exactly the centralizer of γ
        let id = BrauerDiagram::identity(3);
        let gamma_perm = Permutation::from_images0((0..6).map(|v| v ^ 1).collect());
        let stab = id.stabilizer();
        assert_eq!(stab.len(), 48);
        for w in crate::symgroup::all_permutations(6) {
            let commutes = w.then(&gamma_perm) == gamma_perm.then(&w);
            assert_eq!(commutes, stab.contains(&w));
        }
    }

    #[test]
    fn permutation_diagrams() {
        for w in crate::symgroup::all_permutations(4) {
            let dg = BrauerDiagram::from_permutation(&w);
            assert_eq!(dg.as_permutation(), Some(w.clone()));
            for u in crate::symgroup::all_permutations(4).iter().step_by(5) {
                let (c, loops) = dg.compose(&BrauerDiagram::from_permutation(u)).unwrap();
                assert_eq!(loops, 0);
                assert_eq!(c, BrauerDiagram::from_permutation(&w.then(u)));
            }
        }
        assert_eq!(BrauerDiagram::generator_e(1, 3).unwrap().as_permutation(), None);
    }

    fn arb_diagram(n: usize) -> impl Strategy<Value = BrauerDiagram> {
        Just((0..2 * n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|order| {
                let mut partner = vec![0; order.len()];
                for c in order.chunks(2) {
                    partner[c[0]] = c[1];
                    partner[c[1]] = c[0];
                }
                BrauerDiagram::from_partner0_unchecked(partner)
            })
    }

    fn arb_perm(k: usize) -> impl Strategy<Value = Permutation> {
        Just((0..k).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(Permutation::from_images0)
    }

    proptest! {
        #[test]
        fn star_is_right_action(dg in arb_diagram(4), u in arb_perm(8), v in arb_perm(8)) {
            let left = dg.star(&u).unwrap().star(&v).unwrap();
            let right = dg.star(&u.then(&v)).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn composition_is_associative(a in arb_diagram(4), b in arb_diagram(4), c in arb_diagram(4)) {
            let (ab, l1) = a.compose(&b).unwrap();
            let (abc, l2) = ab.compose(&c).unwrap();
            let (bc, l3) = b.compose(&c).unwrap();
            let (abc2, l4) = a.compose(&bc).unwrap();
            prop_assert_eq!(abc, abc2);
            prop_assert_eq!(l1 + l2, l3 + l4);
        }

        #[test]
        fn loops_bounded(a in arb_diagram(5), b in arb_diagram(5)) {
            let (_, loops) = a.compose(&b).unwrap();
            // each loop consumes a bottom bar of `a` and a top bar of `b`
            prop_assert!(loops <= a.horizontal_count().min(b.horizontal_count()));
        }
    }
}
