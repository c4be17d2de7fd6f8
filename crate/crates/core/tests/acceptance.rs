//! Acceptance criteria, one line each. Pass `--slow` (or set
//! `BRAUERLAB_SLOW=1`) to add the n = 4 character comparison and the
//! (n, m) = (4, 2) kernel.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use brauerlab::combinatorics::two_partitions;
use brauerlab::report::Report;
use brauerlab::suites::{
    action_routes, bd_annihilation, characters, diagram_count, dimension_identity,
    fixed_pair_invariance, jm_eigenvalues, lemma27, normal_form, relations, remark213,
    star_action, young_invariance, z_basis,
};
use brauerlab::tensor::{expected_kernel_dimension, verify_kernel_theorem};
use num_bigint::BigInt;

struct Criterion {
    id: usize,
    title: &'static str,
    reports: Vec<Report>,
    extra: Vec<String>,
    limit: Option<Duration>,
    elapsed: Duration,
}

impl Criterion {
    fn pass(&self) -> bool {
        self.extra.is_empty()
            && self.reports.iter().all(|r| r.pass)
            && self.limit.map_or(true, |l| self.elapsed <= l)
    }

    fn line(&self) -> String {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "[{status}] C{} {} ({} checks, {:.2}s",
            self.id,
            self.title,
            self.reports.len(),
            self.elapsed.as_secs_f64()
        );
        if let Some(l) = self.limit {
            s.push_str(&format!(", limit {}s", l.as_secs()));
        }
        s.push(')');
        for r in self.reports.iter().filter(|r| !r.pass) {
            s.push_str(&format!("\n    {}", r.text_line()));
        }
        for e in &self.extra {
            s.push_str(&format!("\n    {e}"));
        }
        s
    }
}

type Outcome = Result<(Vec<Report>, Vec<String>), Box<dyn std::error::Error + Send + Sync>>;

fn run(id: usize, title: &'static str, limit: Option<u64>, f: impl FnOnce() -> Outcome) -> Criterion {
    let start = Instant::now();
    let (reports, extra) = match f() {
        Ok(v) => v,
        Err(e) => (Vec::new(), vec![format!("error: {e}")]),
    };
    Criterion {
        id,
        title,
        reports,
        extra,
        limit: limit.map(Duration::from_secs),
        elapsed: start.elapsed(),
    }
}

fn main() -> ExitCode {
    let slow = std::env::args().any(|a| a == "--slow")
        || std::env::var("BRAUERLAB_SLOW").is_ok_and(|v| v == "1");
    let mut all = Vec::new();

    all.push(run(1, "diagram counts (2n-1)!! for n = 1..6", Some(1), || {
        let want = [1u64, 3, 15, 105, 945, 10395];
        let reports: Vec<Report> = (1..=6).map(diagram_count).collect();
        let extra = reports
            .iter()
            .zip(want)
            .filter(|(r, w)| r.detail["count"] != *w)
            .map(|(r, w)| format!("n={} count {} != {w}", r.n, r.detail["count"]))
            .collect();
        Ok((reports, extra))
    }));

    all.push(run(2, "presentation relations in B_n(x), n <= 5", Some(10), || {
        Ok(((2..=5).map(relations).collect(), Vec::new()))
    }));

    all.push(run(3, "star action axioms, transitivity, stabilizer 2^n n!, n <= 4", Some(10), || {
        Ok(((1..=4).map(star_action).collect(), Vec::new()))
    }));

    all.push(run(4, "sum of |Std(lambda)| over even lambda = (2n-1)!!, n <= 5", None, || {
        Ok(((1..=5).map(dimension_identity).collect(), Vec::new()))
    }));

    all.push(run(5, "Young and fixed-pair invariance of diagram sums, n <= 4", None, || {
        let mut reports = Vec::new();
        for n in 1..=4 {
            reports.push(young_invariance(n)?);
            reports.push(fixed_pair_invariance(n)?);
        }
        Ok((reports, Vec::new()))
    }));

    all.push(run(6, "X-basis matrices are unimodular for n = 3, 4", Some(120), || {
        Ok((vec![z_basis(3)?, z_basis(4)?], Vec::new()))
    }));

    all.push(run(7, "distinguished vector identity, unit witness, JM eigenvalues, n <= 3", None, || {
        let mut reports = Vec::new();
        for n in 1..=3 {
            for lambda in two_partitions(n) {
                reports.push(lemma27(&lambda)?);
                reports.push(jm_eigenvalues(&lambda)?);
            }
        }
        Ok((reports, Vec::new()))
    }));

    let title8 = if slow {
        "filtration quotient characters = Specht characters, n <= 4"
    } else {
        "filtration quotient characters = Specht characters, n <= 3"
    };
    all.push(run(8, title8, None, || {
        let top = if slow { 4 } else { 3 };
        let mut reports = Vec::new();
        for n in 1..=top {
            reports.push(characters(n)?);
        }
        Ok((reports, Vec::new()))
    }));

    all.push(run(9, "X_(6,2) outside the Z-span of the X_(4,4) orbit", Some(60), || {
        let r = remark213()?;
        let mut extra = Vec::new();
        if r.detail["orbit_size"] != 35 {
            extra.push(format!("orbit size {}", r.detail["orbit_size"]));
        }
        if r.detail["ambient_dimension"] != 105 {
            extra.push(format!("ambient dimension {}", r.detail["ambient_dimension"]));
        }
        Ok((vec![r], extra))
    }));

    all.push(run(10, "annihilator dimension and equality with the filtration module", Some(if slow { 900 } else { 60 }), || {
        let mut cases = vec![(2, 1, 1u64), (3, 1, 10), (3, 2, 1), (4, 1, 91)];
        if slow {
            cases.push((4, 2, 21));
        }
        let mut reports = Vec::new();
        let mut extra = Vec::new();
        for (n, m, dim) in cases {
            let r = verify_kernel_theorem(n, m)?;
            if r.detail["dim_kernel"] != dim || expected_kernel_dimension(n, m) != BigInt::from(dim) {
                extra.push(format!("(n, m) = ({n}, {m}): kernel dimension {} != {dim}", r.detail["dim_kernel"]));
            }
            reports.push(r);
        }
        Ok((reports, extra))
    }));

    all.push(run(11, "BD_n(a, b) sums annihilate tensors when a + b >= 2m + 2, n <= 3, m <= 2", None, || {
        let mut reports = Vec::new();
        for n in 1..=3 {
            for m in 1..=2 {
                reports.push(bd_annihilation(n, m)?);
            }
        }
        Ok((reports, Vec::new()))
    }));

    all.push(run(12, "normal form count identity n <= 5, action routes agree n <= 3, m <= 2", None, || {
        let mut reports: Vec<Report> = (1..=5).map(normal_form).collect();
        for n in 1..=3 {
            for m in 1..=2 {
                reports.push(action_routes(n, m)?);
            }
        }
        Ok((reports, Vec::new()))
    }));

    for c in &all {
        println!("{}", c.line());
    }
    let failed: Vec<String> = all.iter().filter(|c| !c.pass()).map(|c| format!("C{}", c.id)).collect();
    println!(
        "acceptance: {} of {} criteria pass{}",
        all.len() - failed.len(),
        all.len(),
        if failed.is_empty() {
            String::new()
        } else {
            format!("; failing: {}", failed.join(", "))
        }
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
