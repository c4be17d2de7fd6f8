//! Verification checks, grouped into the suites exposed by `brauerlab verify`.
//!
//! Every check returns a [`Report`]. Cases inside a suite are independent
//! and run on the rayon pool; reports come back in case order.

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{
    double_factorial_odd, mn_character, standard_tableaux, two_partitions, Partition,
};
use crate::diagrams::{
    bd_set, bd_sum, d_nu_set, enumerate_all, BdFamily, BrauerDiagram, BrauerElement,
    IntPolynomial,
};
use crate::exactla::Rational;
use crate::report::Report;
use crate::symgroup::{all_permutations, conjugacy_class_reps, factorial, Permutation};
use crate::tensor::{
    act_diagram_direct, act_diagram_word, column_count, phi_matrix, rank_mod_p_report,
    verify_bd_annihilation, verify_kernel_theorem, SymplecticSpace, TensorVector,
};
use crate::xbasis::{
    jm_eigen_check, lemma27_check, murphy_images, remark213_check, verify_basis, x_lambda, XBasis,
};

pub type CheckResult = Result<Report, Box<dyn Error + Send + Sync>>;

/// Kernel cases with at least this many matrix columns run only with `slow`.
pub const SLOW_COLUMNS: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    StarAction,
    XBasis,
    Filtration,
    Kernel,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "relations" => Ok(Suite::Relations),
            "staraction" => Ok(Suite::StarAction),
            "xbasis" => Ok(Suite::XBasis),
            "filtration" => Ok(Suite::Filtration),
            "kernel" => Ok(Suite::Kernel),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Relations => "relations",
            Suite::StarAction => "staraction",
            Suite::XBasis => "xbasis",
            Suite::Filtration => "filtration",
            Suite::Kernel => "kernel",
            Suite::All => "all",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_m: usize,
    pub slow: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 3,
            max_m: 2,
            slow: false,
        }
    }
}

type Case = Box<dyn Fn() -> CheckResult + Send + Sync>;

fn case<F>(f: F) -> Case
where
    F: Fn() -> CheckResult + Send + Sync + 'static,
{
    Box::new(f)
}

fn cases_for(suite: Suite, b: Bounds) -> Vec<Case> {
    let mut out: Vec<Case> = Vec::new();
    match suite {
        Suite::Relations => {
            for n in 1..=b.max_n {
                out.push(case(move || Ok(diagram_count(n))));
            }
            for n in 2..=b.max_n {
                out.push(case(move || Ok(relations(n))));
            }
        }
        Suite::StarAction => {
            for n in 1..=b.max_n {
                out.push(case(move || Ok(star_action(n))));
                out.push(case(move || Ok(dimension_identity(n))));
                out.push(case(move || young_invariance(n)));
                out.push(case(move || fixed_pair_invariance(n)));
            }
        }
        Suite::XBasis => {
            for n in 1..=b.max_n {
                out.push(case(move || z_basis(n)));
                out.push(case(move || Ok(normal_form(n))));
                for lambda in two_partitions(n) {
                    let l = lambda.clone();
                    out.push(case(move || lemma27(&l)));
                    out.push(case(move || jm_eigenvalues(&lambda)));
                }
            }
            if b.max_n >= 4 || b.slow {
                out.push(case(remark213));
            }
        }
        Suite::Filtration => {
            let top = if b.slow { b.max_n.max(4) } else { b.max_n.min(3) };
            for n in 1..=top {
                out.push(case(move || characters(n)));
                out.push(case(move || murphy_containment(n)));
            }
        }
        Suite::Kernel => {
            let top_n = if b.slow { b.max_n.max(4) } else { b.max_n };
            for n in 1..=top_n {
                for m in 1..=b.max_m {
                    let cols = column_count(n, m).unwrap_or(u64::MAX);
                    if cols >= SLOW_COLUMNS && !b.slow {
                        continue;
                    }
                    if n <= 3 {
                        out.push(case(move || action_routes(n, m)));
                    }
                    out.push(case(move || Ok(verify_kernel_theorem(n, m)?)));
                    out.push(case(move || bd_annihilation(n, m)));
                    if cols <= 1 << 12 {
                        for p in [2, 3, 5] {
                            out.push(case(move || rank_mod_p(n, m, p)));
                        }
                    }
                }
            }
        }
        Suite::All => {
            for s in [
                Suite::Relations,
                Suite::StarAction,
                Suite::XBasis,
                Suite::Filtration,
                Suite::Kernel,
            ] {
                out.extend(cases_for(s, b));
            }
        }
    }
    out
}

/// Runs every case of a suite; the first error aborts the run.
pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<Vec<Report>, Box<dyn Error + Send + Sync>> {
    cases_for(suite, bounds)
        .par_iter()
        .map(|c| {
            let start = std::time::Instant::now();
            let mut r = c()?;
            r.wall_time = start.elapsed();
            Ok(r)
        })
        .collect()
}

/// `|BD_n| = (2n−1)!!`, with every diagram distinct.
pub fn diagram_count(n: usize) -> Report {
    let all = enumerate_all(n);
    let distinct: BTreeSet<&BrauerDiagram> = all.iter().collect();
    let want = double_factorial_odd(n);
    let pass = BigInt::from(all.len()) == want && distinct.len() == all.len();
    Report::new("diagram_count", n, pass, json!({"count": all.len(), "expected": want.to_string()}))
}

/// The twelve defining relation families of `B_n(x)`, checked as element
/// identities.
pub fn relations(n: usize) -> Report {
    let s = |i| BrauerElement::s(i, n).expect("in range");
    let e = |i| BrauerElement::e(i, n).expect("in range");
    let mul = |xs: &[&BrauerElement]| {
        xs.iter()
            .skip(1)
            .fold(xs[0].clone(), |acc, y| acc.multiply(y).expect("same n"))
    };
    let one = BrauerElement::identity(n);
    let x = IntPolynomial::x();
    let mut instances = 0usize;
    let mut failed: Vec<String> = Vec::new();
    let mut check = |name: &str, ok: bool| {
        instances += 1;
        if !ok && failed.len() < 10 {
            failed.push(name.to_string());
        }
    };
    for i in 1..n {
        check(&format!("s{i}^2=1"), mul(&[&s(i), &s(i)]) == one);
        check(&format!("e{i}^2=xe{i}"), mul(&[&e(i), &e(i)]) == e(i).scale(&x));
        check(&format!("e{i}s{i}=e{i}"), mul(&[&e(i), &s(i)]) == e(i));
        check(&format!("s{i}e{i}=e{i}"), mul(&[&s(i), &e(i)]) == e(i));
        for j in i + 2..n {
            check(&format!("s{i}s{j}=s{j}s{i}"), mul(&[&s(i), &s(j)]) == mul(&[&s(j), &s(i)]));
            check(&format!("s{i}e{j}=e{j}s{i}"), mul(&[&s(i), &e(j)]) == mul(&[&e(j), &s(i)]));
            check(&format!("s{j}e{i}=e{i}s{j}"), mul(&[&s(j), &e(i)]) == mul(&[&e(i), &s(j)]));
            check(&format!("e{i}e{j}=e{j}e{i}"), mul(&[&e(i), &e(j)]) == mul(&[&e(j), &e(i)]));
        }
        if i + 1 < n {
            let j = i + 1;
            check(
                &format!("s{i}s{j}s{i}=s{j}s{i}s{j}"),
                mul(&[&s(i), &s(j), &s(i)]) == mul(&[&s(j), &s(i), &s(j)]),
            );
            check(&format!("e{i}e{j}e{i}=e{i}"), mul(&[&e(i), &e(j), &e(i)]) == e(i));
            check(&format!("e{j}e{i}e{j}=e{j}"), mul(&[&e(j), &e(i), &e(j)]) == e(j));
            check(
                &format!("s{i}e{j}e{i}=s{j}e{i}"),
                mul(&[&s(i), &e(j), &e(i)]) == mul(&[&s(j), &e(i)]),
            );
            check(
                &format!("e{j}e{i}s{j}=e{j}s{i}"),
                mul(&[&e(j), &e(i), &s(j)]) == mul(&[&e(j), &s(i)]),
            );
        }
    }
    Report::new(
        "relations",
        n,
        failed.is_empty(),
        json!({"instances": instances, "failed": failed}),
    )
}

/// Right-action axioms of `∗` on all of `S_2n`, transitivity, and
/// stabilizers of order `2^n n!` found by exhaustive search.
pub fn star_action(n: usize) -> Report {
    let k = 2 * n;
    let diagrams = enumerate_all(n);
    let group = all_permutations(k);
    let gens: Vec<Permutation> = (1..k).map(|i| Permutation::simple(i, k).expect("in range")).collect();
    let id = Permutation::identity(k);
    let axiom_failure = diagrams.par_iter().find_map_any(|d| {
        if d.star(&id).ok()? != *d {
            return Some(json!({"diagram": d.to_string(), "w": "identity"}));
        }
        for u in &group {
            let du = d.star(u).ok()?;
            for g in &gens {
                if du.star(g).ok()? != d.star(&u.then(g)).ok()? {
                    return Some(json!({"diagram": d.to_string(), "u": u.to_string(), "v": g.to_string()}));
                }
            }
        }
        None
    });
    let orbit = BrauerDiagram::identity(n).orbit();
    let transitive = orbit.len() == diagrams.len();
    let want = BigInt::from(2).pow(n as u32) * factorial(n);
    let bad_stabilizer = diagrams
        .par_iter()
        .find_map_any(|d| {
            let size = group.iter().filter(|w| d.star(w).ok().as_ref() == Some(d)).count();
            (BigInt::from(size) != want || d.stabilizer_order() != want)
                .then(|| json!({"diagram": d.to_string(), "stabilizer": size}))
        });
    let pass = axiom_failure.is_none() && transitive && bad_stabilizer.is_none();
    let mut detail = json!({
        "diagrams": diagrams.len(),
        "group_order": group.len(),
        "orbit_of_identity": orbit.len(),
        "stabilizer_order": want.to_string(),
    });
    if let Some(w) = axiom_failure {
        detail["axiom_witness"] = w;
    }
    if let Some(w) = bad_stabilizer {
        detail["stabilizer_witness"] = w;
    }
    Report::new("star_action", n, pass, detail)
}

/// `Σ_{λ ∈ 2P_n} |Std(λ)| = (2n−1)!!`, counting tableaux one by one.
pub fn dimension_identity(n: usize) -> Report {
    let per_shape: Vec<(String, usize)> = two_partitions(n)
        .iter()
        .map(|l| (l.to_string(), standard_tableaux(l).len()))
        .collect();
    let total: usize = per_shape.iter().map(|(_, c)| c).sum();
    let hooks: BigInt = two_partitions(n).iter().map(Partition::dimension).sum();
    let want = double_factorial_odd(n);
    let pass = BigInt::from(total) == want && hooks == want;
    Report::new(
        "dimension_identity",
        n,
        pass,
        json!({"total": total, "expected": want.to_string(), "per_shape": per_shape}),
    )
}

/// `X_λ ∗ s = X_λ` for every Coxeter generator `s` of the Young subgroup.
pub fn young_invariance(n: usize) -> CheckResult {
    let mut checked = 0;
    let mut witness = Value::Null;
    'outer: for lambda in two_partitions(n) {
        let x = x_lambda(&lambda)?;
        let mut start = 0;
        for &q in lambda.parts() {
            for i in start + 1..start + q {
                let s = Permutation::simple(i, 2 * n)?;
                checked += 1;
                if x.star(&s)? != x {
                    witness = json!({"lambda": lambda.to_string(), "generator": s.to_string()});
                    break 'outer;
                }
            }
            start += q;
        }
    }
    Ok(Report::new(
        "young_invariance",
        n,
        witness.is_null(),
        json!({"checked": checked, "witness": witness}),
    ))
}

/// Every partial matching `i_s ↔ j_s` of `{1..2n}` as two index lists.
pub fn partial_matchings(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn go(rest: &[usize], i: &mut Vec<usize>, j: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<usize>)>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push((i.clone(), j.clone()));
            return;
        };
        go(tail, i, j, out);
        for (k, &other) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, &v)| v).collect();
            i.push(first);
            j.push(other);
            go(&remaining, i, j, out);
            i.pop();
            j.pop();
        }
    }
    let labels: Vec<usize> = (1..=2 * n).collect();
    let mut out = Vec::new();
    go(&labels, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// The sum over `BD_n(i, j)` is fixed by the symmetric group on the
/// unconstrained labels, for every partial matching.
pub fn fixed_pair_invariance(n: usize) -> CheckResult {
    let matchings = partial_matchings(n);
    let failure = matchings
        .par_iter()
        .map(|(i, j)| -> Result<Option<Value>, Box<dyn Error + Send + Sync>> {
            let total = bd_sum(n, &BdFamily::FixedPairs { i: i.clone(), j: j.clone() })?;
            let rest: Vec<usize> = (1..=2 * n).filter(|v| !i.contains(v) && !j.contains(v)).collect();
            for w in rest.windows(2) {
                let t = Permutation::transposition(w[0], w[1], 2 * n)?;
                if total.star(&t)? != total {
                    return Ok(Some(json!({"i": i, "j": j, "transposition": t.to_string()})));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(Report::new(
        "fixed_pair_invariance",
        n,
        failure.is_none(),
        json!({"matchings": matchings.len(), "witness": failure}),
    ))
}

/// The `X_{λ,t}` matrix is square with all Smith invariant factors `1`.
pub fn z_basis(n: usize) -> CheckResult {
    let check = verify_basis(n)?;
    let non_unit: Vec<String> = check
        .invariant_factors
        .iter()
        .filter(|d| !d.is_one())
        .map(ToString::to_string)
        .collect();
    Ok(Report::new(
        "z_basis",
        n,
        check.is_z_basis() && BigInt::from(check.size) == double_factorial_odd(n),
        json!({"size": check.size, "rank": check.rank, "non_unit_factors": non_unit}),
    ))
}

/// The identity `X_λ ∗ (w_λ y_{λ'}) = |~S_λ| · X_λ ∗ (w_λ h_λ)` and the
/// coefficient of the paired-columns diagram.
pub fn lemma27(lambda: &Partition) -> CheckResult {
    let out = lemma27_check(lambda)?;
    let detail = json!({
        "lambda": lambda.to_string(),
        "multiplier": out.multiplier.to_string(),
        "identity_holds": out.holds,
        "product_formula": out.product_formula.to_string(),
        "holds_with_product_formula": out.holds_with_product_formula,
        "witness_coefficient": out.witness_coefficient.to_string(),
        "content": out.content.to_string(),
        "unit_term": out.unit_term.as_ref().map(ToString::to_string),
    });
    Ok(Report::new("lemma27", lambda.size() / 2, out.pass(), detail))
}

/// `L_a` acts on the distinguished vector by the residue of `a`, for every
/// `a`.
pub fn jm_eigenvalues(lambda: &Partition) -> CheckResult {
    let mut failed = Vec::new();
    for a in 1..=lambda.size() {
        if !jm_eigen_check(lambda, a)? {
            failed.push(a);
        }
    }
    Ok(Report::new(
        "jm_eigenvalues",
        lambda.size() / 2,
        failed.is_empty(),
        json!({"lambda": lambda.to_string(), "failed": failed}),
    ))
}

/// Characters of the filtration quotients equal the Specht characters.
pub fn characters(n: usize) -> CheckResult {
    let basis = XBasis::new(n)?.with_coordinates()?;
    let classes = conjugacy_class_reps(2 * n);
    let mut compared = 0;
    let mut witness = Value::Null;
    'outer: for lambda in two_partitions(n) {
        for (rho, w) in &classes {
            let got = basis.quotient_character(&lambda, w)?;
            let want = mn_character(&lambda, rho)?;
            compared += 1;
            if got != Rational::from_integer(want.clone()) {
                witness = json!({
                    "lambda": lambda.to_string(),
                    "class": rho.to_string(),
                    "quotient": got.to_string(),
                    "specht": want.to_string(),
                });
                break 'outer;
            }
        }
    }
    Ok(Report::new(
        "quotient_characters",
        n,
        witness.is_null(),
        json!({"classes": classes.len(), "compared": compared, "witness": witness}),
    ))
}

/// Images of Murphy basis elements under `π_λ` lie in `M^λ`.
pub fn murphy_containment(n: usize) -> CheckResult {
    let basis = XBasis::new(n)?.with_coordinates()?;
    let mut count = 0;
    let mut witness = Value::Null;
    'outer: for lambda in two_partitions(n) {
        for (mu, image) in murphy_images(&lambda)? {
            count += 1;
            if !basis.in_filtration(&lambda, &image)? {
                witness = json!({"lambda": lambda.to_string(), "mu": mu.to_string()});
                break 'outer;
            }
        }
    }
    Ok(Report::new(
        "murphy_containment",
        n,
        witness.is_null(),
        json!({"images": count, "witness": witness}),
    ))
}

/// `X_{(6,2)}` is a rational but not an integer combination of the orbit of
/// `X_{(4,4)}`.
pub fn remark213() -> CheckResult {
    let out = remark213_check()?;
    Ok(Report::new(
        "orbit_lattice",
        4,
        out.pass(),
        json!({
            "orbit_size": out.orbit_size,
            "ambient_dimension": out.ambient_dimension,
            "rational_member": out.rational_member,
            "integer_member": out.integer_member,
        }),
    ))
}

/// Normal forms: round trips through the decomposition for every diagram,
/// `Σ_f |D_{ν_f}|² (n−2f)! = (2n−1)!!`, and the generator word multiplies
/// out to the diagram with no loops.
pub fn normal_form(n: usize) -> Report {
    let diagrams = enumerate_all(n);
    let bad = diagrams.par_iter().find_any(|d| {
        let nf = d.to_normal_form();
        BrauerDiagram::from_normal_form(&nf) != **d || nf.to_diagram() != **d || nf.word_product() != ((*d).clone(), 0)
    });
    let count: BigInt = (0..=n / 2)
        .map(|f| {
            let d = BigInt::from(d_nu_set(n, f).len());
            &d * &d * factorial(n - 2 * f)
        })
        .sum();
    let want = double_factorial_odd(n);
    Report::new(
        "normal_form",
        n,
        bad.is_none() && count == want,
        json!({"count": count.to_string(), "expected": want.to_string(), "witness": bad.map(ToString::to_string)}),
    )
}

/// Word route and direct route of the tensor action agree on every
/// (diagram, simple tensor) pair.
pub fn action_routes(n: usize, m: usize) -> CheckResult {
    let space = SymplecticSpace::new(m)?;
    let tensors = space.simple_tensors(n);
    let diagrams = enumerate_all(n);
    let bad = diagrams
        .par_iter()
        .map(|d| -> Result<Option<Value>, Box<dyn Error + Send + Sync>> {
            for t in &tensors {
                let v = TensorVector::from_simple(t.clone());
                if act_diagram_direct(&v, d, &space)? != act_diagram_word(&v, d, &space)? {
                    return Ok(Some(json!({"diagram": d.to_string(), "tensor": t.to_string()})));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(Report::new(
        "action_routes",
        n,
        bad.is_none(),
        json!({"pairs": diagrams.len() * tensors.len(), "witness": bad}),
    )
    .with_m(m))
}

/// `Σ_{D ∈ BD_n(a,b)} D` for all admissible `(a, b)`: required to annihilate
/// when `a + b ≥ 2m+2`; smaller cases are listed without a claim.
pub fn bd_annihilation(n: usize, m: usize) -> CheckResult {
    let mut required = Vec::new();
    let mut unclaimed = Vec::new();
    let mut failed = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            if (a + b) % 2 == 1 || bd_set(n, &BdFamily::Ab { a, b })?.is_empty() {
                continue;
            }
            let zero = verify_bd_annihilation(n, m, a, b)?;
            if a + b >= 2 * m + 2 {
                required.push((a, b));
                if !zero {
                    failed.push((a, b));
                }
            } else {
                unclaimed.push(json!({"a": a, "b": b, "annihilates": zero}));
            }
        }
    }
    Ok(Report::new(
        "bd_annihilation",
        n,
        failed.is_empty(),
        json!({"required": required, "failed": failed, "below_bound": unclaimed}),
    )
    .with_m(m))
}

/// Rank of `φ` over `F_p` next to the rational rank. Never fails.
pub fn rank_mod_p(n: usize, m: usize, p: u64) -> CheckResult {
    let phi = phi_matrix(n, m)?;
    let rank = phi.rank();
    Ok(rank_mod_p_report(&phi, rank, p))
}

/// Number of cases a suite would run.
pub fn case_count(suite: Suite, bounds: Bounds) -> usize {
    cases_for(suite, bounds).len()
}

/// A short JSON summary of a list of reports.
pub fn summary(suite: Suite, reports: &[Report]) -> Value {
    let failed = reports.iter().filter(|r| !r.pass).count();
    json!({
        "suite": suite.to_string(),
        "pass": failed == 0,
        "total": reports.len(),
        "failed": failed,
        "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_matching_count_is_involution_count() {
        // involutions of {1..k}: 1, 2, 4, 10, 26, 76, 232
        let want = [2usize, 10, 76, 764];
        for n in 1..=4 {
            assert_eq!(partial_matchings(n).len(), want[n - 1]);
        }
    }

    #[test]
    fn cheap_checks_pass() {
        for n in 1..=3 {
            assert!(diagram_count(n).pass);
            assert!(star_action(n).pass);
            assert!(dimension_identity(n).pass);
            assert!(normal_form(n).pass);
            assert!(young_invariance(n).unwrap().pass);
            assert!(fixed_pair_invariance(n).unwrap().pass);
        }
        assert!(relations(4).pass);
        assert_eq!(relations(3).detail["instances"], 13);
    }

    #[test]
    fn lemma27_report_records_witness() {
        let r = lemma27(&Partition::new(vec![4, 2]).unwrap()).unwrap();
        assert!(!r.pass);
        assert_eq!(r.detail["identity_holds"], true);
        assert_eq!(r.detail["witness_coefficient"], "2");
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Relations, Suite::StarAction, Suite::XBasis, Suite::Filtration, Suite::Kernel, Suite::All] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn kernel_suite_skips_slow_cases() {
        let fast = Bounds { max_n: 4, max_m: 2, slow: false };
        let reports = run_suite(Suite::Kernel, fast).unwrap();
        assert!(reports.iter().all(|r| !(r.n == 4 && r.m == Some(2))));
        assert!(reports.iter().all(|r| r.pass), "{:?}", reports.iter().find(|r| !r.pass));
    }
}
