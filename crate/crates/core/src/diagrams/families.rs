//! Sets of Brauer diagrams cut out by connection constraints.

use super::normal_form::d_nu_set;
use super::{gamma, BrauerDiagram, DiagramError, DiagramSum, NormalForm};
use crate::symgroup::{all_permutations, Permutation};

/// A family of diagrams. Labels are interleaved except for the two
/// normal-form families, whose permutations act on row positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BdFamily {
    /// `BD_n(i, j)`: `i_s` is joined to `j_s` for every `s`.
    FixedPairs { i: Vec<usize>, j: Vec<usize> },
    /// `BD^{(a)}_{(b)}`: every label `k ≤ a` or `k > a+b` is joined to `γ(k)`.
    Block { a: usize, b: usize },
    /// `BD_n(a, b)`: the first `a` top and `b` bottom vertices, suitably
    /// completed, are matched among themselves.
    Ab { a: usize, b: usize },
    /// `BD_n^{i,j}(A¹, A²)`: `A¹ ∪ A²` matched internally, the rest by the
    /// fixed pairs `i_s ↔ j_s`.
    Sets {
        odd: Vec<usize>,
        even: Vec<usize>,
        i: Vec<usize>,
        j: Vec<usize>,
    },
    /// `BD^{(f)}(n; d₂)`: bottom bars exactly `((2k−1)d₂, (2k)d₂)`.
    BottomFixed { f: usize, d2: Permutation },
    /// `BD^{(f)}(d₁; n)`: top bars exactly `((2k−1)d₁, (2k)d₁)`.
    TopFixed { f: usize, d1: Permutation },
}

impl BdFamily {
    /// `BD_n^{i,j}(A¹, A²)` with the complement paired off in increasing order.
    pub fn sets_default(n: usize, odd: Vec<usize>, even: Vec<usize>) -> Self {
        let rest: Vec<usize> = (1..=2 * n)
            .filter(|v| !odd.contains(v) && !even.contains(v))
            .collect();
        let i = rest.iter().step_by(2).copied().collect();
        let j = rest.iter().skip(1).step_by(2).copied().collect();
        BdFamily::Sets { odd, even, i, j }
    }

    /// The fixed pairs and the free vertices for the label-based families.
    fn constraints(&self, n: usize) -> Result<(Vec<(usize, usize)>, Vec<usize>), DiagramError> {
        let bad = |s: String| Err(DiagramError::InvalidFamily(s));
        match self {
            BdFamily::FixedPairs { i, j } => {
                if i.len() != j.len() {
                    return bad(format!("index lists of lengths {} and {}", i.len(), j.len()));
                }
                let pairs: Vec<(usize, usize)> = i.iter().copied().zip(j.iter().copied()).collect();
                let used: Vec<usize> = i.iter().chain(j).copied().collect();
                let free = (1..=2 * n).filter(|v| !used.contains(v)).collect();
                Ok((pairs, free))
            }
            BdFamily::Block { a, b } => {
                let (a, b) = (*a, *b);
                if a % 2 == 1 || b % 2 == 1 || a + b > 2 * n {
                    return bad(format!("block ({a}, {b}) needs even a, b with a + b <= {}", 2 * n));
                }
                let pairs = (1..=2 * n)
                    .filter(|&k| (k <= a || k > a + b) && k % 2 == 1)
                    .map(|k| (k, gamma(k)))
                    .collect();
                Ok((pairs, (a + 1..=a + b).collect()))
            }
            BdFamily::Ab { a, b } => {
                let (a, b) = (*a, *b);
                if a > n || b > n || (a + b) % 2 == 1 {
                    return bad(format!("BD({a}, {b}) needs a, b <= {n} and a + b even"));
                }
                let mut pairs = Vec::new();
                let free: Vec<usize>;
                let strands_from;
                if a >= b {
                    free = (1..=2 * b).chain((2 * b + 1..2 * a).step_by(2)).collect();
                    strands_from = a + 1;
                    for s in 1..=(a - b) / 2 {
                        pairs.push((2 * b + 4 * s - 2, 2 * b + 4 * s));
                    }
                } else {
                    free = (1..=2 * a).chain((2 * a + 2..=2 * b).step_by(2)).collect();
                    strands_from = b + 1;
                    for s in 1..=(b - a) / 2 {
                        pairs.push((2 * a + 4 * s - 3, 2 * a + 4 * s - 1));
                    }
                }
                for s in strands_from..=n {
                    pairs.push((2 * s - 1, 2 * s));
                }
                Ok((pairs, free))
            }
            BdFamily::Sets { odd, even, i, j } => {
                if odd.iter().any(|v| v % 2 == 0) {
                    return bad("A¹ must contain odd labels only".into());
                }
                if even.iter().any(|v| v % 2 == 1) {
                    return bad("A² must contain even labels only".into());
                }
                if i.len() != j.len() {
                    return bad(format!("index lists of lengths {} and {}", i.len(), j.len()));
                }
                let pairs = i.iter().copied().zip(j.iter().copied()).collect();
                let free = odd.iter().chain(even).copied().collect();
                Ok((pairs, free))
            }
            BdFamily::BottomFixed { .. } | BdFamily::TopFixed { .. } => {
                unreachable!("normal-form families are enumerated separately")
            }
        }
    }
}

/// All diagrams containing `pairs` whose other edges join vertices of `free`.
fn constrained(
    n: usize,
    pairs: &[(usize, usize)],
    free: &[usize],
) -> Result<Vec<BrauerDiagram>, DiagramError> {
    let mut partner = vec![usize::MAX; 2 * n];
    let mut seen = vec![false; 2 * n];
    let all = pairs.iter().flat_map(|&(a, b)| [a, b]).chain(free.iter().copied());
    for v in all {
        if v == 0 || v > 2 * n {
            return Err(DiagramError::IndexOutOfRange { index: v, n });
        }
        if seen[v - 1] {
            return Err(DiagramError::InvalidFamily(format!("label {v} used twice")));
        }
        seen[v - 1] = true;
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(DiagramError::InvalidFamily(format!("label {} is unconstrained", v + 1)));
    }
    if free.len() % 2 == 1 {
        return Err(DiagramError::InvalidFamily(format!(
            "free block of odd size {}",
            free.len()
        )));
    }
    for &(a, b) in pairs {
        partner[a - 1] = b - 1;
        partner[b - 1] = a - 1;
    }
    let mut free0: Vec<usize> = free.iter().map(|v| v - 1).collect();
    free0.sort_unstable();
    fn rec(free: &[usize], partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
        let Some(pos) = free.iter().position(|&v| partner[v] == usize::MAX) else {
            out.push(BrauerDiagram::from_partner0_unchecked(partner.clone()));
            return;
        };
        let first = free[pos];
        for &second in &free[pos + 1..] {
            if partner[second] == usize::MAX {
                partner[first] = second;
                partner[second] = first;
                rec(free, partner, out);
                partner[first] = usize::MAX;
                partner[second] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&free0, &mut partner, &mut out);
    out.sort();
    Ok(out)
}

fn normal_form_family(
    n: usize,
    f: usize,
    fixed: &Permutation,
    fixed_is_bottom: bool,
) -> Result<Vec<BrauerDiagram>, DiagramError> {
    if fixed.degree() != n {
        return Err(DiagramError::SizeMismatch {
            left: n,
            right: fixed.degree(),
        });
    }
    if !super::in_d_nu(fixed, f) {
        return Err(DiagramError::InvalidFamily(format!(
            "{fixed} is not in D_nu for f = {f}"
        )));
    }
    let sigmas: Vec<Permutation> = all_permutations(n - 2 * f)
        .into_iter()
        .map(|s| s.embed(n, 2 * f).expect("fits"))
        .collect();
    let mut out = Vec::new();
    for d in d_nu_set(n, f) {
        for s in &sigmas {
            let nf = if fixed_is_bottom {
                NormalForm::new(f, d.clone(), s.clone(), fixed.clone())?
            } else {
                NormalForm::new(f, fixed.clone(), s.clone(), d.clone())?
            };
            out.push(nf.to_diagram());
        }
    }
    out.sort();
    Ok(out)
}

/// The diagrams of a family, sorted.
pub fn bd_set(n: usize, family: &BdFamily) -> Result<Vec<BrauerDiagram>, DiagramError> {
    match family {
        BdFamily::BottomFixed { f, d2 } => normal_form_family(n, *f, d2, true),
        BdFamily::TopFixed { f, d1 } => normal_form_family(n, *f, d1, false),
        _ => {
            let (pairs, free) = family.constraints(n)?;
            constrained(n, &pairs, &free)
        }
    }
}

/// The sum of a family's diagrams.
pub fn bd_sum(n: usize, family: &BdFamily) -> Result<DiagramSum, DiagramError> {
    Ok(DiagramSum::sum_of(n, bd_set(n, family)?))
}
