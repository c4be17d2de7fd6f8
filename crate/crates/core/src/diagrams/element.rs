use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use super::{compose_unchecked, BrauerDiagram, DiagramError, IntPolynomial};
use crate::exactla::{rational_from_str, rational_to_string, Rational};
use crate::symgroup::{GroupAlgebraElement, Permutation};

/// Coefficient rings for diagram combinations.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_bigint(v: &BigInt) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// The JSON key and value for one term's coefficient.
    fn to_json_entry(&self) -> (&'static str, Value);
    fn from_json_entry(term: &Map<String, Value>) -> Result<Self, String>;
}

fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("not an integer: {num}")),
        Value::String(s) => s.parse().map_err(|_| format!("not an integer: {s}")),
        other => Err(format!("not an integer: {other}")),
    }
}

fn poly_from_json(term: &Map<String, Value>) -> Result<IntPolynomial, String> {
    let arr = term
        .get("coeff")
        .and_then(Value::as_array)
        .ok_or("missing `coeff` array")?;
    let coeffs = arr.iter().map(bigint_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(IntPolynomial::from_coeffs(coeffs))
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn to_json_entry(&self) -> (&'static str, Value) {
        ("coeff", json!([bigint_to_json(self)]))
    }
    fn from_json_entry(term: &Map<String, Value>) -> Result<Self, String> {
        let p = poly_from_json(term)?;
        match p.coeffs() {
            [] => Ok(<BigInt as Zero>::zero()),
            [c] => Ok(c.clone()),
            _ => Err("expected an integer coefficient, found a polynomial".into()),
        }
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn to_json_entry(&self) -> (&'static str, Value) {
        ("coeff_rational", json!(rational_to_string(self)))
    }
    fn from_json_entry(term: &Map<String, Value>) -> Result<Self, String> {
        let s = term
            .get("coeff_rational")
            .and_then(Value::as_str)
            .ok_or("missing `coeff_rational` string")?;
        rational_from_str(s).ok_or_else(|| format!("bad rational `{s}`"))
    }
}

impl Coefficient for IntPolynomial {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(v: &BigInt) -> Self {
        IntPolynomial::constant(v.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn to_json_entry(&self) -> (&'static str, Value) {
        ("coeff", Value::Array(self.coeffs().iter().map(bigint_to_json).collect()))
    }
    fn from_json_entry(term: &Map<String, Value>) -> Result<Self, String> {
        poly_from_json(term)
    }
}

/// A finite linear combination of Brauer `n`-diagrams. Zero coefficients are
/// never stored; terms iterate in canonical diagram order.
#[derive(Clone, PartialEq, Debug)]
pub struct Combination<C> {
    n: usize,
    terms: BTreeMap<BrauerDiagram, C>,
}

/// Elements of `B_n(x)`.
pub type BrauerElement = Combination<IntPolynomial>;
/// Integer combinations, e.g. orbit sums.
pub type DiagramSum = Combination<BigInt>;
/// Rational combinations, e.g. kernel vectors.
pub type RationalCombination = Combination<Rational>;

impl<C: Coefficient> Combination<C> {
    pub fn zero(n: usize) -> Self {
        Combination {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        let n = d.n();
        let mut terms = BTreeMap::new();
        terms.insert(d, C::from_bigint(&BigInt::one()));
        Combination { n, terms }
    }

    /// Each diagram with coefficient one, repeats accumulating.
    pub fn sum_of<I: IntoIterator<Item = BrauerDiagram>>(n: usize, diagrams: I) -> Self {
        let one = C::from_bigint(&BigInt::one());
        let mut out = Self::zero(n);
        for d in diagrams {
            out.add_term(d, one.clone());
        }
        out
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = (BrauerDiagram, C)>,
    {
        let mut out = Self::zero(n);
        for (d, c) in terms {
            if d.n() != n {
                return Err(DiagramError::SizeMismatch { left: n, right: d.n() });
            }
            out.add_term(d, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, C> {
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

    pub fn coefficient(&self, d: &BrauerDiagram) -> C {
        self.terms.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: C) {
        debug_assert_eq!(d.n(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_n(&self, other: &Self) -> Result<(), DiagramError> {
        if self.n != other.n {
            return Err(DiagramError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, other: &Self, c: &C) -> Result<Self, DiagramError> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (d, v) in &other.terms {
            out.add_term(d.clone(), v.mul_ref(c));
        }
        Ok(out)
    }

    pub fn plus(&self, other: &Self) -> Result<Self, DiagramError> {
        self.add_scaled(other, &C::from_bigint(&BigInt::one()))
    }

    pub fn minus(&self, other: &Self) -> Result<Self, DiagramError> {
        self.add_scaled(other, &C::from_bigint(&-BigInt::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v.mul_ref(c));
        }
        out
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Combination<D> {
        let mut out = Combination::zero(self.n);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), f(v));
        }
        out
    }

    /// `a ∗ w`, extended linearly.
    pub fn star(&self, w: &Permutation) -> Result<Self, DiagramError> {
        if w.degree() != 2 * self.n {
            return Err(DiagramError::SizeMismatch {
                left: self.n,
                right: w.degree() / 2,
            });
        }
        // ∗w is a bijection on diagrams, so no coefficients merge
        Ok(Combination {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.star_unchecked(w), c.clone()))
                .collect(),
        })
    }

    /// `a ∗ u` for `u` in the group algebra of `S_2n`.
    pub fn star_element(&self, u: &GroupAlgebraElement) -> Result<Self, DiagramError> {
        if u.degree() != 2 * self.n {
            return Err(DiagramError::SizeMismatch {
                left: self.n,
                right: u.degree() / 2,
            });
        }
        let mut acc: HashMap<BrauerDiagram, C> = HashMap::new();
        for (w, c) in u.terms() {
            let c = C::from_bigint(c);
            for (d, v) in &self.terms {
                acc.entry(d.star_unchecked(w))
                    .or_insert_with(C::zero)
                    .add_assign_ref(&v.mul_ref(&c));
            }
        }
        Ok(Combination {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Product in the diagram algebra; every closed loop contributes
    /// `loop_weight(loops)`.
    pub fn multiply_with(
        &self,
        other: &Self,
        loop_weight: impl Fn(usize) -> C,
    ) -> Result<Self, DiagramError> {
        self.check_n(other)?;
        let mut acc: HashMap<BrauerDiagram, C> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (d, loops) = compose_unchecked(a, b);
                let c = ca.mul_ref(cb).mul_ref(&loop_weight(loops));
                acc.entry(d).or_insert_with(C::zero).add_assign_ref(&c);
            }
        }
        Ok(Combination {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Dense coordinates against the diagram basis indexed by `index`.
    pub fn coordinates(&self, index: &HashMap<BrauerDiagram, usize>) -> Vec<C> {
        let mut v = vec![C::zero(); index.len()];
        for (d, c) in &self.terms {
            v[index[d]] = c.clone();
        }
        v
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| {
                let pairs: Vec<Value> = d.pairs().iter().map(|&(a, b)| json!([a, b])).collect();
                let (key, value) = c.to_json_entry();
                let mut obj = Map::new();
                obj.insert("diagram".into(), Value::Array(pairs));
                obj.insert(key.into(), value);
                Value::Object(obj)
            })
            .collect();
        json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Self, DiagramError> {
        let err = |s: &str| DiagramError::Json(s.to_string());
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| err("missing `n`"))? as usize;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| err("missing `terms`"))?;
        let mut out = Self::zero(n);
        for term in terms {
            let obj = term.as_object().ok_or_else(|| err("term is not an object"))?;
            let pairs = obj
                .get("diagram")
                .and_then(Value::as_array)
                .ok_or_else(|| err("missing `diagram`"))?
                .iter()
                .map(|p| {
                    let pair = p.as_array().filter(|a| a.len() == 2);
                    let get = |i: usize| pair.and_then(|a| a[i].as_u64()).map(|v| v as usize);
                    match (get(0), get(1)) {
                        (Some(a), Some(b)) => Ok((a, b)),
                        _ => Err(err("diagram edge must be a pair of labels")),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            let d = BrauerDiagram::from_pairs(n, &pairs)?;
            let c = C::from_json_entry(obj).map_err(|e| err(&e))?;
            out.add_term(d, c);
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Display for Combination<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| format!("[{c}]{d}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl BrauerElement {
    pub fn identity(n: usize) -> Self {
        Self::from_diagram(BrauerDiagram::identity(n))
    }

    pub fn s(i: usize, n: usize) -> Result<Self, DiagramError> {
        Ok(Self::from_diagram(BrauerDiagram::generator_s(i, n)?))
    }

    pub fn e(i: usize, n: usize) -> Result<Self, DiagramError> {
        Ok(Self::from_diagram(BrauerDiagram::generator_e(i, n)?))
    }

    /// Product in `B_n(x)`: each loop contributes a factor `x`.
    pub fn multiply(&self, other: &Self) -> Result<Self, DiagramError> {
        self.multiply_with(other, IntPolynomial::x_pow)
    }

    /// Evaluates every coefficient at `x = δ`.
    pub fn specialize(&self, delta: &Rational) -> SpecializedElement {
        SpecializedElement {
            delta: delta.clone(),
            value: self.map(|p| p.eval(delta)),
        }
    }
}

impl DiagramSum {
    pub fn to_brauer(&self) -> BrauerElement {
        self.map(|c| IntPolynomial::constant(c.clone()))
    }

    pub fn to_rational(&self) -> RationalCombination {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

/// An element of `B_n(δ)` with rational coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct SpecializedElement {
    pub delta: Rational,
    pub value: RationalCombination,
}

impl SpecializedElement {
    pub fn new(delta: Rational, value: RationalCombination) -> Self {
        SpecializedElement { delta, value }
    }

    pub fn n(&self) -> usize {
        self.value.n()
    }

    fn check_delta(&self, other: &Self) -> Result<(), DiagramError> {
        if self.delta != other.delta {
            return Err(DiagramError::SpecializationMismatch {
                left: rational_to_string(&self.delta),
                right: rational_to_string(&other.delta),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, DiagramError> {
        self.check_delta(other)?;
        let delta = self.delta.clone();
        let value = self.value.multiply_with(&other.value, |k| {
            let mut p = Rational::one();
            for _ in 0..k {
                p *= &delta;
            }
            p
        })?;
        Ok(SpecializedElement {
            delta: self.delta.clone(),
            value,
        })
    }

    pub fn plus(&self, other: &Self) -> Result<Self, DiagramError> {
        self.check_delta(other)?;
        Ok(SpecializedElement {
            delta: self.delta.clone(),
            value: self.value.plus(&other.value)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.value.to_json();
        v["delta"] = json!(rational_to_string(&self.delta));
        v
    }
}
