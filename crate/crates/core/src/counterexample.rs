//! The contraction `x ↦ λx` whose Zadeh extension keeps a pair of fuzzy sets
//! exactly `1/4` apart under `d_0`, built at a finite truncation depth.
//!
//! The untruncated `u` and `v` have infinitely many levels accumulating at 1.
//! At depth `N` the top band of `u` is `(a_N, 1]` with cut `[a'_{N+1}, 1]`
//! and the top band of `v` is `(b_N, 1]` with cut `[b'_{N+2}, 1]`, which
//! continues the pattern of the lower bands.

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::dynamics::{
    contraction_ratio_report, union_extension, zadeh_extend, PlMap, RatioMetric,
};
use crate::error::{Error, Result};
use crate::fuzzy::{validate, Level, StepFuzzySet};
use crate::interval::IntervalUnion;
use crate::metrics::{
    apply_reparam, d0_bruteforce, d0_lower_bound_certificate, level_metric_dinf, reparam_objective,
    skorokhod_d0, LowerBoundCertificate, Reparam,
};
use crate::rational::{self, dyadic, q, Rational};

/// The value of `a` the construction is verified at.
pub fn default_a() -> Rational {
    q(3, 8)
}

/// `t` with knots `(0,0)`, `(a − 1/4, a)`, `(a + 1/4, a + 1/4)`, `(1,1)`.
pub fn build_t(a: &Rational) -> Result<Reparam> {
    let quarter = q(1, 4);
    if *a <= quarter || *a >= q(3, 4) {
        return Err(Error::Precondition(format!(
            "a = {} must lie in (1/4, 3/4)",
            rational::format(a)
        )));
    }
    Reparam::through([(a - &quarter, a.clone()), (a + &quarter, a + &quarter)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleInstance {
    pub a: Rational,
    pub depth: usize,
    pub t: Reparam,
    pub u: StepFuzzySet,
    pub v: StepFuzzySet,
    /// `a_0 ..= a_{N+2}`.
    pub a_seq: Vec<Rational>,
    /// `b_n = t⁻¹(a_n)`, same range.
    pub b_seq: Vec<Rational>,
    /// `a'_0 ..= a'_{N+2}`.
    pub a_prime: Vec<Rational>,
    /// `b'_0 ..= b'_{N+2}`.
    pub b_prime: Vec<Rational>,
}

/// Runs the primed recursion: given `x_0` and `x_1 = a + 1/2`, sets
/// `x_2 = x_1 + (1 − x_1)/2` and `x_{n+1} = x_n + (1 − (a + 1/2))/2^n`
/// for `n ≥ 2`.
fn primed_sequence(first: Rational, a: &Rational, len: usize) -> Vec<Rational> {
    let one = Rational::one();
    let a1 = a + q(1, 2);
    let step = &one - &a1;
    let mut out = vec![first, a1.clone()];
    out.push(&a1 + &step / rational::int(2));
    for n in 2..len.saturating_sub(1) {
        let next = &out[n] + &step * dyadic(n as u32);
        out.push(next);
    }
    out.truncate(len);
    out
}

/// Depth-`N` instance at `a = 3/8`.
pub fn build_instance(depth: usize) -> Result<CounterexampleInstance> {
    build_instance_with(&default_a(), depth)
}

/// Depth-`N` instance at a general `a ∈ (1/4, 1/2)`. Only `a = 3/8` is
/// verified; other values are exploratory.
pub fn build_instance_with(a: &Rational, depth: usize) -> Result<CounterexampleInstance> {
    if depth < 2 {
        return Err(Error::Precondition(format!(
            "depth {depth} must be at least 2"
        )));
    }
    if *a <= q(1, 4) || *a >= q(1, 2) {
        return Err(Error::Precondition(format!(
            "a = {} must lie in (1/4, 1/2)",
            rational::format(a)
        )));
    }
    let one = Rational::one();
    let quarter = q(1, 4);
    let t = build_t(a)?;
    let len = depth + 3;

    let mut a_seq = vec![a.clone()];
    for n in 0..len - 1 {
        let next = &a_seq[n] + (&one - a) * dyadic(n as u32 + 1);
        a_seq.push(next);
    }
    let b_seq = a_seq
        .iter()
        .map(|x| t.eval_inverse(x))
        .collect::<Result<Vec<_>>>()?;
    let a_prime = primed_sequence(a.clone(), a, len);
    let b_prime = primed_sequence(a - &quarter, a, len);

    let tail = |lo: &Rational| IntervalUnion::interval(lo.clone(), one.clone());

    let mut u_levels = Vec::with_capacity(depth + 2);
    for k in 0..=depth {
        u_levels.push(Level {
            alpha: a_seq[k].clone(),
            cut: tail(&a_prime[k])?,
        });
    }
    u_levels.push(Level {
        alpha: one.clone(),
        cut: tail(&a_prime[depth + 1])?,
    });
    let u = StepFuzzySet::new(u_levels, tail(a)?)?;

    let mut v_levels = Vec::with_capacity(depth + 3);
    v_levels.push(Level {
        alpha: b_seq[0].clone(),
        cut: tail(&b_prime[0])?,
    });
    v_levels.push(Level {
        alpha: a + &quarter,
        cut: tail(&b_prime[1])?,
    });
    for k in 1..=depth {
        v_levels.push(Level {
            alpha: b_seq[k].clone(),
            cut: tail(&b_prime[k + 1])?,
        });
    }
    v_levels.push(Level {
        alpha: one.clone(),
        cut: tail(&b_prime[depth + 2])?,
    });
    let v = StepFuzzySet::new(v_levels, tail(&(a - &quarter))?)?;

    Ok(CounterexampleInstance {
        a: a.clone(),
        depth,
        t,
        u,
        v,
        a_seq,
        b_seq,
        a_prime,
        b_prime,
    })
}

/// One named pass/fail item of a verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    fn equal(name: &str, got: &Rational, want: &Rational) -> Self {
        Self::new(
            name,
            got == want,
            format!(
                "got {}, expected {}",
                rational::format(got),
                rational::format(want)
            ),
        )
    }
}

/// `set` has a single band over `(lo, hi]` and its cut there is `want`.
fn constant_cut_on(set: &StepFuzzySet, lo: &Rational, hi: &Rational, want: &IntervalUnion) -> bool {
    let no_break_inside = set.breakpoints().all(|b| b <= lo || b >= hi);
    no_break_inside && set.alpha_cut(hi).map(|c| c == want).unwrap_or(false)
}

impl CounterexampleInstance {
    /// Sequence identities and the listed properties of `u` and `v`,
    /// restricted to the truncated range.
    pub fn checks(&self) -> Vec<Check> {
        let one = Rational::one();
        let zero = Rational::zero();
        let quarter = q(1, 4);
        let a = &self.a;
        let n = self.depth;
        let tail =
            |lo: &Rational| IntervalUnion::interval(lo.clone(), one.clone()).expect("lo ≤ 1");
        let mut out = Vec::new();

        let b_eq_a = (1..=n).all(|k| self.b_seq[k] == self.a_seq[k]);
        out.push(Check::new("b_n = a_n for 1 ≤ n ≤ N", b_eq_a, ""));
        if *a == default_a() {
            out.push(Check::equal("b_1 = 11/16", &self.b_seq[1], &q(11, 16)));
        }
        out.push(Check::new(
            "b_1 > a + 1/4",
            self.b_seq[1] > a + &quarter,
            format!("b_1 = {}", rational::format(&self.b_seq[1])),
        ));
        for (name, seq) in [
            ("a_n", &self.a_seq),
            ("a'_n", &self.a_prime),
            ("b'_n", &self.b_prime),
        ] {
            let increasing = seq.windows(2).all(|w| w[0] < w[1]);
            let below_one = seq.iter().all(|x| *x < one);
            out.push(Check::new(
                format!("{name} strictly increasing and below 1"),
                increasing && below_one,
                "",
            ));
        }
        out.push(Check::equal(
            "1 - a_N = (1 - a) 2^-N",
            &(&one - &self.a_seq[n]),
            &((&one - a) * dyadic(n as u32)),
        ));
        // The listed a'_2 against the general recursion taken at n = 1.
        let recursion_at_one = &self.a_prime[1] + (&one - (a + q(1, 2))) * dyadic(1);
        out.push(Check::equal(
            "a'_2 matches recursion at n = 1",
            &self.a_prime[2],
            &recursion_at_one,
        ));
        let primes_agree = (1..self.a_prime.len()).all(|k| self.a_prime[k] == self.b_prime[k]);
        out.push(Check::new("a'_n = b'_n for n ≥ 1", primes_agree, ""));

        for (name, set) in [("u", &self.u), ("v", &self.v)] {
            let raw = set.to_raw();
            let diagnostics = validate(&raw);
            out.push(Check::new(
                format!("{name} is a valid step fuzzy set"),
                diagnostics.is_empty(),
                format!("{diagnostics:?}"),
            ));
            let monotone = set
                .levels()
                .iter()
                .all(|l| l.cut.len() == 1 && l.cut.max() == Some(&one));
            out.push(Check::new(
                format!("{name} is non-decreasing in x"),
                monotone,
                "",
            ));
            out.push(Check::equal(
                &format!("{name}(1) = 1"),
                &set.membership(&one),
                &one,
            ));
        }
        out.push(Check::equal("u(0) = 0", &self.u.membership(&zero), &zero));

        out.push(Check::new(
            "[u]_0 = [a, 1]",
            self.u.support() == &tail(a),
            "",
        ));
        out.push(Check::new(
            "[v]_0 = [a - 1/4, 1]",
            self.v.support() == &tail(&(a - &quarter)),
            "",
        ));
        out.push(Check::new(
            "[u]_x = [a, 1] on (0, a]",
            constant_cut_on(&self.u, &zero, a, &tail(a)),
            "",
        ));
        let v_props = (1..n).all(|k| {
            constant_cut_on(
                &self.v,
                &self.b_seq[k],
                &self.b_seq[k + 1],
                &tail(&self.b_prime[k + 2]),
            )
        });
        let u_props = (0..n).all(|k| {
            constant_cut_on(
                &self.u,
                &self.a_seq[k],
                &self.a_seq[k + 1],
                &tail(&self.a_prime[k + 1]),
            )
        });
        out.push(Check::new(
            "[u]_x = [a'_{n+1}, 1] on (a_n, a_{n+1}]",
            u_props,
            "",
        ));
        out.push(Check::new(
            "[v]_x = [a - 1/4, 1] on (0, a - 1/4]",
            constant_cut_on(&self.v, &zero, &(a - &quarter), &tail(&(a - &quarter))),
            "",
        ));
        out.push(Check::new(
            "[v]_x = [a + 1/2, 1] on (a - 1/4, a + 1/4]",
            constant_cut_on(
                &self.v,
                &(a - &quarter),
                &(a + &quarter),
                &tail(&(a + q(1, 2))),
            ),
            "",
        ));
        out.push(Check::new(
            "[v]_x = [b'_2, 1] on (a + 1/4, b_1]",
            constant_cut_on(
                &self.v,
                &(a + &quarter),
                &self.b_seq[1],
                &tail(&self.b_prime[2]),
            ),
            "",
        ));
        out.push(Check::new(
            "[v]_x = [b'_{n+2}, 1] on (b_n, b_{n+1}]",
            v_props,
            "",
        ));
        out
    }
}

/// Outcome of one claim check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: &'static str,
    pub depth: usize,
    pub lambda: Option<Rational>,
    pub value: Rational,
    pub expected: Rational,
    pub pass: bool,
    pub witness: Option<Reparam>,
    pub certificate: Option<LowerBoundCertificate>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn finish(mut self) -> Self {
        self.pass = self.checks.iter().all(|c| c.pass);
        self
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 9)?;
        st.serialize_field("claim", self.claim)?;
        st.serialize_field("depth", &self.depth)?;
        if let Some(l) = &self.lambda {
            st.serialize_field("lambda", &rational::format(l))?;
        }
        st.serialize_field("value", &rational::format(&self.value))?;
        st.serialize_field("expected", &rational::format(&self.expected))?;
        st.serialize_field("pass", &self.pass)?;
        if let Some(w) = &self.witness {
            st.serialize_field("witness", w)?;
        }
        if let Some(c) = &self.certificate {
            st.serialize_field("certificate", c)?;
        }
        st.serialize_field("checks", &self.checks)?;
        st.end()
    }
}

fn require_default_a(inst: &CounterexampleInstance) -> Result<()> {
    if inst.a != default_a() {
        return Err(Error::Precondition(format!(
            "claims are verified at a = 3/8 only, got {}",
            rational::format(&inst.a)
        )));
    }
    Ok(())
}

/// Resolution used for the oracle at depth `N`: `2^-(N+3)`.
pub fn oracle_resolution(depth: usize) -> Rational {
    dyadic(depth as u32 + 3)
}

/// Epsilon probed by the certificates at depth `N`: `1/4 − 2^-(N+4)`.
pub fn certificate_epsilon(depth: usize) -> Rational {
    q(1, 4) - dyadic(depth as u32 + 4)
}

fn certificate_checks(
    checks: &mut Vec<Check>,
    cert: &Option<LowerBoundCertificate>,
    x: &StepFuzzySet,
    y: &StepFuzzySet,
    probe: &Rational,
    floor: &Rational,
) {
    match cert {
        Some(c) => {
            checks.push(Check::new("certificate produced", true, ""));
            checks.push(Check::new("certificate re-verifies", c.verify(x, y), ""));
            checks.push(Check::equal(
                "certificate probe level",
                &c.probe_level,
                probe,
            ));
            checks.push(Check::equal("certificate band d_H", &c.floor, floor));
        }
        None => checks.push(Check::new(
            "certificate produced",
            false,
            "no probe level separates",
        )),
    }
}

/// `d_0(u_N, v_N) = 1/4`, cross-checked by the grid oracle, a probe-level
/// lower bound, and the instance's own `t`.
pub fn verify_claim1(inst: &CounterexampleInstance) -> Result<VerificationReport> {
    require_default_a(inst)?;
    let expected = q(1, 4);
    let report = skorokhod_d0(&inst.u, &inst.v)?;
    let mut checks = vec![Check::equal(
        "d_0 by lattice program",
        &report.lower,
        &expected,
    )];
    checks.push(Check::new(
        "witness reproduces value",
        report.attained && report.upper == report.lower,
        format!("witness objective {}", rational::format(&report.upper)),
    ));

    let h = oracle_resolution(inst.depth);
    let oracle = d0_bruteforce(&inst.u, &inst.v, &h)?;
    checks.push(Check::new(
        "oracle brackets 1/4",
        oracle.lower <= expected && expected <= oracle.upper,
        format!(
            "[{}, {}] at h = {}",
            rational::format(&oracle.lower),
            rational::format(&oracle.upper),
            rational::format(&h)
        ),
    ));

    let cert = d0_lower_bound_certificate(&inst.u, &inst.v, &certificate_epsilon(inst.depth))?;
    certificate_checks(&mut checks, &cert, &inst.u, &inst.v, &inst.a, &q(1, 2));

    checks.push(Check::equal(
        "sup|t - id|",
        &inst.t.sup_deviation(),
        &expected,
    ));
    let tv = apply_reparam(&inst.t, &inst.v);
    checks.push(Check::equal(
        "d_inf(u, t v)",
        &level_metric_dinf(&inst.u, &tv)?,
        &expected,
    ));
    checks.push(Check::equal(
        "objective of t",
        &reparam_objective(&inst.u, &inst.v, &inst.t)?,
        &expected,
    ));

    Ok(VerificationReport {
        claim: "claim1",
        depth: inst.depth,
        lambda: None,
        value: report.lower,
        expected,
        pass: false,
        witness: report.witness,
        certificate: cert,
        checks,
    }
    .finish())
}

/// `d_0(f̃_λ u_N, f̃_λ v_N) = 1/4 = d_0(u_N, v_N)` for `f_λ(x) = λx`.
pub fn verify_claim2(
    inst: &CounterexampleInstance,
    lambda: &Rational,
) -> Result<VerificationReport> {
    require_default_a(inst)?;
    if *lambda < q(1, 2) || *lambda >= Rational::one() {
        return Err(Error::Precondition(format!(
            "lambda = {} must lie in [1/2, 1)",
            rational::format(lambda)
        )));
    }
    let expected = q(1, 4);
    let f = PlMap::scaling(lambda.clone())?;
    let fu = zadeh_extend(&f, &inst.u)?;
    let fv = zadeh_extend(&f, &inst.v)?;

    let image = skorokhod_d0(&fu, &fv)?;
    let base = skorokhod_d0(&inst.u, &inst.v)?;
    let mut checks = vec![Check::equal(
        "d_0 of extended pair",
        &image.lower,
        &expected,
    )];
    checks.push(Check::new(
        "d_0 does not grow (contraction bound)",
        image.lower <= base.lower,
        format!(
            "{} ≤ {}",
            rational::format(&image.lower),
            rational::format(&base.lower)
        ),
    ));

    let ratio = contraction_ratio_report(
        std::slice::from_ref(&f),
        &[(inst.u.clone(), inst.v.clone())],
        RatioMetric::D0,
    )?;
    checks.push(Check::equal(
        "d_0 ratio",
        ratio.max_ratio.as_ref().unwrap_or(&Rational::zero()),
        &Rational::one(),
    ));
    checks.push(Check::new(
        "contraction refuted",
        ratio.refutes_contraction(),
        "",
    ));

    let h = oracle_resolution(inst.depth);
    let oracle = d0_bruteforce(&fu, &fv, &h)?;
    checks.push(Check::new(
        "oracle brackets 1/4",
        oracle.lower <= expected && expected <= oracle.upper,
        format!(
            "[{}, {}]",
            rational::format(&oracle.lower),
            rational::format(&oracle.upper)
        ),
    ));

    let cert = d0_lower_bound_certificate(&fu, &fv, &certificate_epsilon(inst.depth))?;
    certificate_checks(
        &mut checks,
        &cert,
        &fu,
        &fv,
        &inst.a,
        &(lambda / rational::int(2)),
    );
    checks.push(Check::new(
        "cut of f(u) at a",
        fu.alpha_cut(&inst.a)? == &IntervalUnion::interval(lambda * &inst.a, lambda.clone())?,
        fu.alpha_cut(&inst.a)?.to_string(),
    ));

    Ok(VerificationReport {
        claim: "claim2",
        depth: inst.depth,
        lambda: Some(lambda.clone()),
        value: image.lower,
        expected,
        pass: false,
        witness: image.witness,
        certificate: cert,
        checks,
    }
    .finish())
}

/// The union lift of `x/2` and `3x/4` keeps `d_0(F u_N, F v_N) ≥ 1/4`.
pub fn verify_remark9(inst: &CounterexampleInstance) -> Result<VerificationReport> {
    require_default_a(inst)?;
    let expected = q(1, 4);
    let maps = remark9_maps();
    let fu = union_extension(&maps, &inst.u)?;
    let fv = union_extension(&maps, &inst.v)?;
    let report = skorokhod_d0(&fu, &fv)?;

    let mut checks = vec![Check::new(
        "d_0(F u, F v) ≥ 1/4",
        report.lower >= expected,
        rational::format(&report.lower),
    )];
    let cert = d0_lower_bound_certificate(&fu, &fv, &certificate_epsilon(inst.depth))?;
    certificate_checks(&mut checks, &cert, &fu, &fv, &inst.a, &expected);

    let fu_cut = IntervalUnion::interval(q(3, 16), q(3, 4))?;
    let fv_cut = IntervalUnion::canonicalize([(q(7, 16), q(1, 2)), (q(21, 32), q(3, 4))])?;
    checks.push(Check::new(
        "[F(u)]_{3/8} = [3/16, 3/4]",
        fu.alpha_cut(&inst.a)? == &fu_cut,
        fu.alpha_cut(&inst.a)?.to_string(),
    ));
    // Any t within 1/4 of the identity sends 3/8 into v's band (1/8, 5/8].
    checks.push(Check::new(
        "[F(v)] on (1/8, 5/8] = [7/16, 1/2] ∪ [21/32, 3/4]",
        constant_cut_on(&fv, &q(1, 8), &q(5, 8), &fv_cut),
        fv.alpha_cut(&q(5, 8))?.to_string(),
    ));

    let ratio =
        contraction_ratio_report(&maps, &[(inst.u.clone(), inst.v.clone())], RatioMetric::D0)?;
    checks.push(Check::new(
        "contraction refuted",
        ratio.refutes_contraction(),
        "",
    ));

    Ok(VerificationReport {
        claim: "remark9",
        depth: inst.depth,
        lambda: None,
        value: report.lower,
        expected,
        pass: false,
        witness: report.witness,
        certificate: cert,
        checks,
    }
    .finish())
}

/// `x/2` and `3x/4`.
pub fn remark9_maps() -> Vec<PlMap> {
    vec![
        PlMap::scaling(q(1, 2)).expect("valid"),
        PlMap::scaling(q(3, 4)).expect("valid"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn t_for_three_eighths() {
        let t = build_t(&q(3, 8)).unwrap();
        assert_eq!(t.eval(&q(1, 8)).unwrap(), q(3, 8));
        assert_eq!(t.eval(&q(5, 8)).unwrap(), q(5, 8));
        assert_eq!(t.eval(&q(1, 16)).unwrap(), q(3, 16));
        assert_eq!(t.eval(&q(3, 8)).unwrap(), q(1, 2));
        assert_eq!(t.sup_deviation(), q(1, 4));
        assert!(build_t(&q(1, 4)).is_err());
        assert!(build_t(&q(3, 4)).is_err());
    }

    #[test]
    fn sequences_at_depth_three() {
        let inst = build_instance(3).unwrap();
        assert_eq!(
            &inst.a_seq[..4],
            &[q(3, 8), q(11, 16), q(27, 32), q(59, 64)]
        );
        assert_eq!(&inst.b_prime[..3], &[q(1, 8), q(7, 8), q(15, 16)]);
        assert_eq!(
            &inst.a_prime[..5],
            &[q(3, 8), q(7, 8), q(15, 16), q(31, 32), q(63, 64)]
        );
        assert_eq!(inst.b_seq[0], q(1, 8));
        assert_eq!(inst.a_seq.len(), 6);
    }

    #[test]
    fn named_cuts() {
        for depth in [2, 3, 7] {
            let inst = build_instance(depth).unwrap();
            let tail = |lo| IntervalUnion::interval(lo, int(1)).unwrap();
            assert_eq!(inst.u.alpha_cut(&q(3, 8)).unwrap(), &tail(q(3, 8)));
            assert_eq!(inst.v.alpha_cut(&q(3, 8)).unwrap(), &tail(q(7, 8)));
            assert_eq!(inst.u.membership(&int(1)), int(1));
            assert_eq!(inst.u.membership(&int(0)), int(0));
            assert_eq!(inst.v.membership(&q(1, 8)), q(1, 8));
        }
    }

    #[test]
    fn instance_checks_pass() {
        for depth in 2..=8 {
            let inst = build_instance(depth).unwrap();
            let failed: Vec<_> = inst.checks().into_iter().filter(|c| !c.pass).collect();
            assert!(failed.is_empty(), "depth {depth}: {failed:?}");
        }
    }

    #[test]
    fn rejects_bad_depth_and_lambda() {
        assert!(build_instance(1).is_err());
        let inst = build_instance(2).unwrap();
        assert!(verify_claim2(&inst, &q(1, 4)).is_err());
        assert!(verify_claim2(&inst, &int(1)).is_err());
        let other = build_instance_with(&q(5, 16), 2).unwrap();
        assert!(verify_claim1(&other).is_err());
    }

    #[test]
    fn exploratory_a_still_builds() {
        let inst = build_instance_with(&q(5, 16), 4).unwrap();
        assert!(inst.checks().iter().all(|c| c.pass));
    }

    #[test]
    fn claims_at_depth_three() {
        let inst = build_instance(3).unwrap();
        let c1 = verify_claim1(&inst).unwrap();
        assert!(c1.pass, "{:?}", c1.failed_checks().collect::<Vec<_>>());
        assert_eq!(c1.value, q(1, 4));
        for lambda in [q(1, 2), q(3, 4)] {
            let c2 = verify_claim2(&inst, &lambda).unwrap();
            assert!(c2.pass, "{:?}", c2.failed_checks().collect::<Vec<_>>());
            assert_eq!(c2.certificate.unwrap().floor, &lambda / int(2));
        }
        let r9 = verify_remark9(&inst).unwrap();
        assert!(r9.pass, "{:?}", r9.failed_checks().collect::<Vec<_>>());
        assert_eq!(r9.certificate.unwrap().floor, q(1, 4));
    }
}
