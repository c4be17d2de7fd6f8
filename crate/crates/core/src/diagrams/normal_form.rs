//! The factorization `D = d₁⁻¹ e₁e₃⋯e_{2f−1} σ d₂` of a Brauer diagram.
//!
//! Positions here are row labels `1..=n`.

use std::fmt;
use std::str::FromStr;

use super::{BrauerDiagram, DiagramError, Vertex};
use crate::symgroup::Permutation;

/// A Coxeter-style generator of `B_n(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S(usize),
    E(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::S(i) | Generator::E(i) => i,
        }
    }

    pub fn to_diagram(self, n: usize) -> Result<BrauerDiagram, DiagramError> {
        match self {
            Generator::S(i) => BrauerDiagram::generator_s(i, n),
            Generator::E(i) => BrauerDiagram::generator_e(i, n),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S(i) => write!(f, "s{i}"),
            Generator::E(i) => write!(f, "e{i}"),
        }
    }
}

impl FromStr for Generator {
    type Err = DiagramError;

    /// `s3`, `e1`, also `s_3`.
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let t = s.trim();
        let bad = || DiagramError::Parse(format!("unknown generator `{s}`"));
        let (kind, rest) = t.split_at_checked(1).ok_or_else(bad)?;
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let i: usize = rest.parse().map_err(|_| bad())?;
        match kind {
            "s" | "S" => Ok(Generator::S(i)),
            "e" | "E" => Ok(Generator::E(i)),
            _ => Err(bad()),
        }
    }
}

/// Membership in `D_ν` for `ν = ((2^f), (n−2f))`, read off the bitableau
/// `t^ν d`: its first component has rows `((2i−1)d, (2i)d)` and its second
/// the single row `((2f+1)d, …, (n)d)`.
pub fn in_d_nu(d: &Permutation, f: usize) -> bool {
    let n = d.degree();
    if 2 * f > n {
        return false;
    }
    let first: Vec<[usize; 2]> = (1..=f).map(|i| [d.image(2 * i - 1), d.image(2 * i)]).collect();
    let second: Vec<usize> = (2 * f + 1..=n).map(|j| d.image(j)).collect();
    let rows_standard =
        first.iter().all(|r| r[0] < r[1]) && second.windows(2).all(|w| w[0] < w[1]);
    let first_column_increasing = first.windows(2).all(|w| w[0][0] < w[1][0]);
    rows_standard && first_column_increasing
}

/// All of `D_ν`, in lexicographic order of image sequences.
pub fn d_nu_set(n: usize, f: usize) -> Vec<Permutation> {
    if 2 * f > n {
        return Vec::new();
    }
    // pairs are chosen with increasing first entries; leftovers go last
    fn rec(
        f: usize,
        start: usize,
        used: &mut Vec<bool>,
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = used.len();
        if images.len() == 2 * f {
            let mut all = images.clone();
            all.extend((0..n).filter(|&v| !used[v]));
            out.push(all);
            return;
        }
        for a in start..n {
            if used[a] {
                continue;
            }
            used[a] = true;
            for b in a + 1..n {
                if !used[b] {
                    used[b] = true;
                    images.extend([a, b]);
                    rec(f, a + 1, used, images, out);
                    images.truncate(images.len() - 2);
                    used[b] = false;
                }
            }
            used[a] = false;
        }
    }
    let mut out = Vec::new();
    rec(f, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    let mut perms: Vec<Permutation> = out.into_iter().map(Permutation::from_images0).collect();
    perms.sort();
    perms
}

/// `D = d₁⁻¹ e₁e₃⋯e_{2f−1} σ d₂` with `d₁, d₂ ∈ D_ν` and `σ` fixing
/// `1..=2f` pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    f: usize,
    d1: Permutation,
    sigma: Permutation,
    d2: Permutation,
}

impl NormalForm {
    pub fn new(
        f: usize,
        d1: Permutation,
        sigma: Permutation,
        d2: Permutation,
    ) -> Result<Self, DiagramError> {
        let n = d1.degree();
        if sigma.degree() != n || d2.degree() != n {
            return Err(DiagramError::InvalidNormalForm("degrees differ".into()));
        }
        if 2 * f > n {
            return Err(DiagramError::InvalidNormalForm(format!("f = {f} exceeds n/2")));
        }
        if !in_d_nu(&d1, f) {
            return Err(DiagramError::InvalidNormalForm(format!("d1 = {d1} is not in D_nu")));
        }
        if !in_d_nu(&d2, f) {
            return Err(DiagramError::InvalidNormalForm(format!("d2 = {d2} is not in D_nu")));
        }
        if (1..=2 * f).any(|i| sigma.image(i) != i) {
            return Err(DiagramError::InvalidNormalForm(format!(
                "sigma = {sigma} moves a point of 1..{}",
                2 * f
            )));
        }
        Ok(NormalForm { f, d1, sigma, d2 })
    }

    pub fn n(&self) -> usize {
        self.d1.degree()
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn d1(&self) -> &Permutation {
        &self.d1
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn d2(&self) -> &Permutation {
        &self.d2
    }

    /// `d₁⁻¹ σ d₂`, whose length fixes the sign of the tensor action.
    pub fn permutation_part(&self) -> Permutation {
        self.d1.inverse().then(&self.sigma).then(&self.d2)
    }

    /// Builds the diagram directly: top bars `((2i−1)d₁, (2i)d₁)`, bottom
    /// bars `((2i−1)d₂, (2i)d₂)`, strands from top `(j)d₁` to bottom
    /// `(j)σd₂`.
    pub fn to_diagram(&self) -> BrauerDiagram {
        let n = self.n();
        let mut pairs = Vec::with_capacity(n);
        for i in 1..=self.f {
            let (a, b) = (self.d1.image(2 * i - 1), self.d1.image(2 * i));
            pairs.push((Vertex::Top(a).label(), Vertex::Top(b).label()));
            let (c, d) = (self.d2.image(2 * i - 1), self.d2.image(2 * i));
            pairs.push((Vertex::Bottom(c).label(), Vertex::Bottom(d).label()));
        }
        for j in 2 * self.f + 1..=n {
            let top = self.d1.image(j);
            let bottom = self.d2.image(self.sigma.image(j));
            pairs.push((Vertex::Top(top).label(), Vertex::Bottom(bottom).label()));
        }
        BrauerDiagram::from_pairs(n, &pairs).expect("normal form yields a matching")
    }

    /// The generator word: a reduced word for `d₁⁻¹`, then `e₁, e₃, …`, then
    /// reduced words for `σ` and `d₂`.
    pub fn word(&self) -> Vec<Generator> {
        let mut w: Vec<Generator> = self
            .d1
            .inverse()
            .reduced_word()
            .into_iter()
            .map(Generator::S)
            .collect();
        w.extend((1..=self.f).map(|i| Generator::E(2 * i - 1)));
        w.extend(self.sigma.reduced_word().into_iter().map(Generator::S));
        w.extend(self.d2.reduced_word().into_iter().map(Generator::S));
        w
    }

    /// Multiplies out [`NormalForm::word`] in the diagram algebra. Returns
    /// the product diagram and the total loop count.
    pub fn word_product(&self) -> (BrauerDiagram, usize) {
        let n = self.n();
        let mut acc = BrauerDiagram::identity(n);
        let mut loops = 0;
        for g in self.word() {
            let gd = g.to_diagram(n).expect("word letters are in range");
            let (next, l) = super::compose_unchecked(&acc, &gd);
            acc = next;
            loops += l;
        }
        (acc, loops)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f={} d1=[{}] sigma=[{}] d2=[{}]",
            self.f, self.d1, self.sigma, self.d2
        )
    }
}

/// The `D_ν` element sending `2i−1, 2i` to the ends of the `i`-th bar and
/// `2f+1..n` to the remaining positions in increasing order.
fn d_from_bars(n: usize, bars: &[(usize, usize)]) -> Permutation {
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    for &(a, b) in bars {
        images.push(a - 1);
        images.push(b - 1);
        used[a] = true;
        used[b] = true;
    }
    images.extend((1..=n).filter(|&p| !used[p]).map(|p| p - 1));
    Permutation::from_images0(images)
}

impl BrauerDiagram {
    pub fn to_normal_form(&self) -> NormalForm {
        let n = self.n();
        let top = self.top_edges();
        let bottom = self.bottom_edges();
        let f = top.len();
        let d1 = d_from_bars(n, &top);
        let d2 = d_from_bars(n, &bottom);
        let d2_inv = d2.inverse();
        let mut images: Vec<usize> = (0..n).collect();
        for j in 2 * f + 1..=n {
            match self.partner_of(Vertex::Top(d1.image(j))) {
                Vertex::Bottom(b) => images[j - 1] = d2_inv.image(b) - 1,
                Vertex::Top(_) => unreachable!("free top vertex lies on a strand"),
            }
        }
        NormalForm {
            f,
            d1,
            sigma: Permutation::from_images0(images),
            d2,
        }
    }

    pub fn from_normal_form(nf: &NormalForm) -> BrauerDiagram {
        nf.to_diagram()
    }
}

/// Every normal form for `n`, by brute force over `S_n³`. Used to cross-check
/// enumeration for tiny `n`.
#[cfg(test)]
pub(crate) fn all_normal_forms_brute(n: usize) -> Vec<NormalForm> {
    let perms = crate::symgroup::all_permutations(n);
    let mut out = Vec::new();
    for f in 0..=n / 2 {
        let ds: Vec<&Permutation> = perms.iter().filter(|d| in_d_nu(d, f)).collect();
        let sigmas: Vec<&Permutation> = perms
            .iter()
            .filter(|s| (1..=2 * f).all(|i| s.image(i) == i))
            .collect();
        for d1 in &ds {
            for s in &sigmas {
                for d2 in &ds {
                    out.push(NormalForm {
                        f,
                        d1: (*d1).clone(),
                        sigma: (*s).clone(),
                        d2: (*d2).clone(),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::double_factorial_odd;
    use crate::diagrams::enumerate_all;
    use crate::symgroup::{all_permutations, factorial};
    use num_bigint::BigInt;
    use std::collections::BTreeSet;

    #[test]
    fn small_examples() {
        let e1 = BrauerDiagram::generator_e(1, 2).unwrap();
        let nf = e1.to_normal_form();
        assert_eq!(nf.f(), 1);
        assert!(nf.d1().is_identity() && nf.d2().is_identity() && nf.sigma().is_identity());
        let s1 = BrauerDiagram::generator_s(1, 2).unwrap();
        let nf = s1.to_normal_form();
        assert_eq!(nf.f(), 0);
        assert_eq!(nf.sigma(), &Permutation::simple(1, 2).unwrap());
        assert!(nf.d1().is_identity() && nf.d2().is_identity());
    }

    #[test]
    fn rejects_malformed() {
        let id = Permutation::identity(4);
        let bad = Permutation::parse_cycles("(1 2)", 4).unwrap();
        assert!(NormalForm::new(1, bad.clone(), id.clone(), id.clone()).is_err());
        assert!(NormalForm::new(1, id.clone(), id.clone(), bad.clone()).is_err());
        assert!(NormalForm::new(1, id.clone(), bad, id.clone()).is_err());
        assert!(NormalForm::new(3, id.clone(), id.clone(), id.clone()).is_err());
        assert!(NormalForm::new(2, id.clone(), id.clone(), id).is_ok());
    }

    #[test]
    fn d_nu_matches_definition() {
        for n in 1..=6 {
            let perms = all_permutations(n);
            for f in 0..=n / 2 {
                let by_filter: Vec<Permutation> =
                    perms.iter().filter(|d| in_d_nu(d, f)).cloned().collect();
                assert_eq!(d_nu_set(n, f), by_filter, "n={n} f={f}");
                let expect = factorial(n)
                    / (BigInt::from(2u32).pow(f as u32) * factorial(f) * factorial(n - 2 * f));
                assert_eq!(BigInt::from(by_filter.len()), expect);
            }
        }
    }

    #[test]
    fn round_trips() {
        for n in 1..=4 {
            for d in enumerate_all(n) {
                let nf = d.to_normal_form();
                let rebuilt =
                    NormalForm::new(nf.f(), nf.d1().clone(), nf.sigma().clone(), nf.d2().clone())
                        .unwrap();
                assert_eq!(rebuilt.to_diagram(), d);
                assert_eq!(nf.f(), d.horizontal_count());
            }
            let forms = all_normal_forms_brute(n);
            assert_eq!(BigInt::from(forms.len()), double_factorial_odd(n));
            let mut images = BTreeSet::new();
            for nf in &forms {
                let d = nf.to_diagram();
                assert_eq!(&d.to_normal_form(), nf);
                images.insert(d);
            }
            assert_eq!(images.len(), forms.len());
        }
    }

    #[test]
    fn count_identity() {
        for n in 1..=5 {
            let mut total = BigInt::from(0);
            for f in 0..=n / 2 {
                let k = BigInt::from(d_nu_set(n, f).len());
                total += &k * &k * factorial(n - 2 * f);
            }
            assert_eq!(total, double_factorial_odd(n));
        }
    }

    #[test]
    fn word_product_equals_diagram() {
        for n in 1..=5 {
            for d in enumerate_all(n) {
                let nf = d.to_normal_form();
                let (p, loops) = nf.word_product();
                assert_eq!(p, d);
                assert_eq!(loops, 0);
            }
        }
    }

    #[test]
    fn generator_text() {
        assert_eq!("s3".parse::<Generator>().unwrap(), Generator::S(3));
        assert_eq!("e_1".parse::<Generator>().unwrap(), Generator::E(1));
        assert!("t1".parse::<Generator>().is_err());
        assert!("s".parse::<Generator>().is_err());
        assert_eq!(Generator::E(2).to_string(), "e2");
    }
}
