//! Identity-check harness: every count the theory derives twice is checked
//! by exact integer equality over structured parameter sweeps.
//!
//! Checks are data-driven (a named check plus a [`SweepRange`]) so the CLI
//! can run subsets. Every failure records the full input echo and both
//! sides of the failed equality; there are no tolerances anywhere. A
//! deliberately corrupted ζ-reduction coefficient must be caught by the
//! suite — [`check_mutation_guard`] verifies that, so a vacuous sweep
//! cannot go unnoticed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chowring::{self, BlowupContext, ExceptionalClass};
use crate::error::Error;
use crate::invariants::{
    self, baum_bott, count_blowup_total, count_exceptional, count_on_invariant_center, nu,
    FoliationSpec, SingularComponent,
};
use crate::subvariety::{self, soares_count, SubvarietyPair};
use crate::symfun::{self, binomial, elementary, neg_one_pow, tau, wronski, MultiDegree};

/// Which orders of vanishing to sweep for each foliation degree `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EllPolicy {
    Fixed(u32),
    KMinusOne,
    UpToK,
}

impl EllPolicy {
    pub(crate) fn values(self, k: u32) -> Vec<u32> {
        match self {
            EllPolicy::Fixed(e) => vec![e],
            EllPolicy::KMinusOne => vec![k - 1],
            EllPolicy::UpToK => (0..=k).collect(),
        }
    }
}

/// Parameter grid for the sweeps. Multidegrees are enumerated as
/// non-decreasing tuples; every checked quantity is a symmetric function of
/// the degrees, and permutation invariance is itself asserted by the
/// symmetric-function check.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRange {
    pub n_min: u32,
    pub n_max: u32,
    pub d_min: u32,
    pub d_max: u32,
    pub k_min: u32,
    pub k_max: u32,
    pub ell_policy: EllPolicy,
    pub max_entry: u32,
    pub max_components: u32,
}

impl SweepRange {
    pub fn validate(&self) -> Result<(), Error> {
        if self.n_min < 3 {
            return Err(Error::invalid("range.n", "require n >= 3"));
        }
        if self.n_min > self.n_max || self.d_min > self.d_max || self.k_min > self.k_max {
            return Err(Error::invalid("range", "empty range bounds"));
        }
        if self.d_min < 2 {
            return Err(Error::invalid("range.d", "require d >= 2"));
        }
        // a well-formed range may still generate no cells (every d above
        // n-1, say); the checks then pass vacuously
        if self.k_min < 1 {
            return Err(Error::invalid("range.k", "require k >= 1"));
        }
        if self.max_entry < 1 {
            return Err(Error::invalid("range.max_entry", "require max_entry >= 1"));
        }
        Ok(())
    }
}

/// The grid the acceptance suite runs: n <= 7, d <= n-1, k <= 5, degree
/// entries <= 3, ℓ from 0 to k.
pub fn default_range() -> SweepRange {
    SweepRange {
        n_min: 3,
        n_max: 7,
        d_min: 2,
        d_max: 6,
        k_min: 1,
        k_max: 5,
        ell_policy: EllPolicy::UpToK,
        max_entry: 3,
        max_components: 3,
    }
}

/// A smaller grid for quick runs.
pub fn quick_range() -> SweepRange {
    SweepRange {
        n_min: 3,
        n_max: 5,
        d_min: 2,
        d_max: 4,
        k_min: 1,
        k_max: 3,
        ell_policy: EllPolicy::UpToK,
        max_entry: 2,
        max_components: 2,
    }
}

/// One failed equality: the input tuple and both sides.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one named check over a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    /// Observations that never fail the suite; recorded for the report
    /// instead of enforced.
    pub diagnostics: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            instances: 0,
            failures: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn assert_eq(&mut self, input: impl Fn() -> String, lhs: &BigInt, rhs: &BigInt) {
        self.instances += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                input: input(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn assert_true(&mut self, input: impl Fn() -> String, ok: bool, lhs: &str, rhs: &str) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure {
                input: input(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

/// Non-decreasing degree tuples of length `d` with entries in `1..=max`.
pub(crate) fn multidegrees(d: u32, max: u32) -> Vec<MultiDegree> {
    fn go(d: u32, min: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
        if d == 0 {
            out.push(MultiDegree::new(prefix.clone()).expect("entries >= 1"));
            return;
        }
        for k in min..=max {
            prefix.push(k);
            go(d - 1, k, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, 1, max, &mut Vec::new(), &mut out);
    out
}

/// All (n, center) cells of the range.
fn centers(range: &SweepRange) -> Vec<(u32, MultiDegree)> {
    let mut out = Vec::new();
    for n in range.n_min..=range.n_max {
        for d in range.d_min..=range.d_max.min(n - 1) {
            for md in multidegrees(d, range.max_entry) {
                out.push((n, md));
            }
        }
    }
    out
}

/// `Σ_{j=0}^{m} (-1)^j σ_j W_{m-j} = 0` for all `m > 0`, over every
/// multidegree in range and `m` up to `2n`; plus permutation invariance of
/// `σ` and `W` (checked against the reversed tuple).
pub fn check_symmetric_identity(range: &SweepRange) -> CheckReport {
    let mut report = CheckReport::new("symmetric_identity");
    let zero = BigInt::zero();
    for (n, md) in centers(range) {
        for m in 1..=(2 * n as i64) {
            let mut acc = BigInt::zero();
            for j in 0..=m {
                acc += neg_one_pow(j) * elementary(j, &md) * wronski(m - j, &md);
            }
            report.assert_eq(|| format!("n={n} w={md} m={m}"), &acc, &zero);
        }
        let mut rev = md.degrees().to_vec();
        rev.reverse();
        let rev = MultiDegree::new(rev).expect("entries >= 1");
        for idx in 0..=(md.len() as i64) {
            report.assert_eq(
                || format!("permutation w={md} idx={idx}"),
                &elementary(idx, &md),
                &elementary(idx, &rev),
            );
            report.assert_eq(
                || format!("permutation w={md} idx={idx}"),
                &wronski(idx, &md),
                &wronski(idx, &rev),
            );
        }
    }
    report
}

/// Whitney sum `C(n+1, j) = Σ_{a1+a2=j} σ_{a1} τ_{a2}` for `j <= n`, and
/// the power-series route for `τ` agreeing with the alternating-sum
/// definition.
pub fn check_whitney(range: &SweepRange) -> CheckReport {
    let mut report = CheckReport::new("whitney");
    for (n, md) in centers(range) {
        for j in 0..=(n as i64) {
            let mut acc = BigInt::zero();
            for a1 in 0..=j {
                acc += elementary(a1, &md) * tau(j - a1, n, &md);
            }
            report.assert_eq(
                || format!("n={n} w={md} j={j}"),
                &acc,
                &binomial(n as i64 + 1, j),
            );
        }
        for i in 0..=(n as i64 - md.len() as i64 + 2) {
            report.assert_eq(
                || format!("tau oracle n={n} w={md} i={i}"),
                &tau(i, n, &md),
                &symfun::tau_series_oracle(i, n, &md),
            );
        }
    }
    report
}

fn chow_relation_inner(range: &SweepRange, flip_beta: bool) -> CheckReport {
    let mut report = CheckReport::new("chow_relation");
    let zero = ExceptionalClass::zero();
    for (n, md) in centers(range) {
        let ctx = BlowupContext::new(n, md.clone()).expect("range keeps d <= n-1");
        let ctx = if flip_beta {
            ctx.with_flipped_beta()
        } else {
            ctx
        };
        let d = ctx.codim();
        // defining relation reduces to zero
        let mut rel = ExceptionalClass::zero();
        for i in 0..=d {
            rel = rel.add(&ExceptionalClass::monomial(
                i,
                d - i,
                neg_one_pow(i as i64) * ctx.sigma(i as i64),
            ));
        }
        let nf = rel.normal_form(&ctx);
        report.assert_true(
            || format!("relation nullity n={n} w={md}"),
            nf == zero,
            &format!("{nf:?}"),
            "0",
        );
        // reduction orders agree, and high powers respect the degree bounds
        for p in 0..=2u32 {
            for q in 0..=(n + 2) {
                let class = ExceptionalClass::monomial(p, q, BigInt::one());
                let a = class.normal_form(&ctx);
                let b = class.normal_form_stepwise(&ctx);
                report.assert_true(
                    || format!("confluence n={n} w={md} h^{p} zeta^{q}"),
                    a == b,
                    &format!("{a:?}"),
                    &format!("{b:?}"),
                );
                let bounded = a
                    .terms()
                    .all(|(&(tp, tq), _)| tp <= ctx.center_dim() && tq < d);
                report.assert_true(
                    || format!("normal-form bounds n={n} w={md} h^{p} zeta^{q}"),
                    bounded,
                    &format!("{a:?}"),
                    "exponents within (n-d, d-1)",
                );
            }
        }
        // the dedicated integral against the divisor-power product route
        let e = chowring::BlowupClass::e_divisor(&ctx);
        let h = chowring::BlowupClass::pullback_h(1, BigInt::one(), &ctx);
        for b in 0..=n {
            let a = n - b;
            let product = e.pow(b, &ctx).mul(&h.pow(a, &ctx), &ctx).integrate(&ctx);
            report.assert_eq(
                || format!("pushforward n={n} w={md} a={a} b={b}"),
                &chowring::integrate_blowup(a, b, &ctx),
                &product,
            );
        }
    }
    report
}

/// The defining relation reduces to zero, reduction is confluent, and
/// normal forms respect the exponent bounds, for every context in range.
pub fn check_chow_relation(range: &SweepRange) -> CheckReport {
    chow_relation_inner(range, false)
}

/// Size cap for the class-arithmetic oracle inside [`check_census`]; the
/// closed forms are swept over the whole range, the oracle over this slice.
fn oracle_slice(range: &SweepRange) -> SweepRange {
    SweepRange {
        n_max: range.n_max.min(6),
        k_max: range.k_max.min(3),
        max_entry: range.max_entry.min(2),
        ..range.clone()
    }
}

fn census_inner(range: &SweepRange, flip_beta: bool) -> CheckReport {
    let mut report = CheckReport::new("census");
    // three-formula identity over the full grid
    for (n, md) in centers(range) {
        for k in range.k_min..=range.k_max {
            for ell in range.ell_policy.values(k) {
                let total = count_blowup_total(n, k, &md, ell);
                let exc = count_exceptional(n, k, &md, ell);
                let nu_val = nu(n, k, &md, ell);
                let bb = baum_bott(n, k);
                report.assert_eq(
                    || format!("census n={n} w={md} k={k} ell={ell}"),
                    &(&total - &exc),
                    &(&bb + &nu_val),
                );
                if ell == 0 {
                    report.assert_eq(
                        || format!("invariant-center n={n} w={md} k={k}"),
                        &nu_val,
                        &(-count_on_invariant_center(n, k, &md)),
                    );
                }
            }
        }
    }
    // linear-center closed forms at ell = k-1
    for n in range.n_min..=range.n_max {
        for d in range.d_min..=range.d_max.min(n - 1) {
            let w = MultiDegree::all_ones(d as usize);
            for k in range.k_min..=range.k_max {
                let ell = k - 1;
                let kb = BigInt::from(k);
                let mut high = BigInt::zero(); // k^d + ... + k^n
                for i in d..=n {
                    high += kb.pow(i);
                }
                let mut low = BigInt::zero(); // 1 + k + ... + k^{d-1}
                for j in 0..d {
                    low += kb.pow(j);
                }
                report.assert_eq(
                    || format!("linear nu n={n} d={d} k={k}"),
                    &nu(n, k, &w, ell),
                    &(-&high),
                );
                report.assert_eq(
                    || format!("linear exceptional n={n} d={d} k={k}"),
                    &count_exceptional(n, k, &w, ell),
                    &(BigInt::from(n + 1 - d) * &low),
                );
                report.assert_eq(
                    || format!("linear total n={n} d={d} k={k}"),
                    &count_blowup_total(n, k, &w, ell),
                    &(BigInt::from(n + 2 - d) * &low),
                );
                let spec = FoliationSpec::new(
                    n,
                    k,
                    vec![SingularComponent {
                        center: w.clone(),
                        ell,
                        embedded_points: None,
                    }],
                )
                .expect("valid spec");
                report.assert_eq(
                    || format!("linear isolated sum n={n} d={d} k={k}"),
                    &invariants::isolated_sum(&spec),
                    &low,
                );
                report.assert_eq(
                    || format!("invariant linear center n={n} d={d} k={k}"),
                    &count_on_invariant_center(n, k, &w),
                    &baum_bott(n - d, k),
                );
            }
        }
    }
    // class-arithmetic oracle on the capped slice
    let slice = oracle_slice(range);
    for (n, md) in centers(&slice) {
        let ctx = BlowupContext::new(n, md.clone()).expect("range keeps d <= n-1");
        let ctx = if flip_beta {
            ctx.with_flipped_beta()
        } else {
            ctx
        };
        for k in slice.k_min..=slice.k_max {
            for ell in slice.ell_policy.values(k).into_iter().filter(|&e| e <= 2) {
                report.assert_eq(
                    || format!("oracle total n={n} w={md} k={k} ell={ell}"),
                    &count_blowup_total(n, k, &md, ell),
                    &chowring::count_total_via_classes(k, ell, &ctx),
                );
                report.assert_eq(
                    || format!("oracle exceptional n={n} w={md} k={k} ell={ell}"),
                    &count_exceptional(n, k, &md, ell),
                    &chowring::count_exceptional_via_classes(k, ell, &ctx),
                );
                report.assert_eq(
                    || format!("oracle nu n={n} w={md} k={k} ell={ell}"),
                    &nu(n, k, &md, ell),
                    &chowring::nu_via_classes(k, ell, &ctx),
                );
            }
        }
    }
    // report reproducibility for multi-component specs
    let w_pool: Vec<MultiDegree> = multidegrees(2, range.max_entry.min(2));
    let n = range.n_max.min(5);
    for r in 1..=(range.max_components.min(w_pool.len() as u32)) {
        let comps: Vec<SingularComponent> = w_pool
            .iter()
            .take(r as usize)
            .enumerate()
            .map(|(i, w)| SingularComponent {
                center: w.clone(),
                ell: i as u32 % 2,
                embedded_points: Some(i as u64),
            })
            .collect();
        let spec = FoliationSpec::new(n, range.k_max, comps).expect("valid spec");
        let rep = invariants::report(&spec);
        let mut expected = baum_bott(n, range.k_max);
        for c in spec.components() {
            expected += nu(n, spec.k(), &c.center, c.ell);
        }
        report.assert_eq(
            || format!("report isolated sum n={n} r={r}"),
            &rep.isolated_sum,
            &expected,
        );
        for (c, cr) in spec.components().iter().zip(&rep.components) {
            report.assert_eq(
                || format!("report component n={n} w={}", c.center),
                &cr.nu,
                &nu(n, spec.k(), &c.center, c.ell),
            );
        }
    }
    report
}

/// Census identities: the three-formula cross-check over the full grid,
/// the linear-center closed forms, the invariant-center specialization,
/// and the class-arithmetic oracle on a capped slice.
pub fn check_census(range: &SweepRange) -> CheckReport {
    census_inner(range, false)
}

/// Subvariety identities: the linear configuration counts, the `ℓ = 0`
/// identity against the invariant-center count, the α values of the linear
/// configuration, and the closed-form diagnostics (report-only).
pub fn check_subvariety(range: &SweepRange) -> CheckReport {
    let mut report = CheckReport::new("subvariety");
    let mut printed_mismatches = 0u64;
    let mut printed_total = 0u64;
    let mut recursion_mismatches = 0u64;
    let mut recursion_total = 0u64;
    for n in range.n_min..=range.n_max {
        for d in range.d_min..=range.d_max.min(n - 1) {
            // linear configuration: V linear of codimension d-1
            for k in range.k_min.max(2)..=range.k_max {
                let pair = SubvarietyPair::new(
                    n,
                    k,
                    MultiDegree::all_ones(d as usize),
                    MultiDegree::all_ones(d as usize - 1),
                    k - 1,
                    None,
                )
                .expect("valid linear pair");
                report.assert_eq(
                    || format!("linear strict n={n} d={d} k={k}"),
                    &subvariety::count_strict_v(&pair),
                    &BigInt::from(n + 2 - d),
                );
                report.assert_eq(
                    || format!("linear ve n={n} d={d} k={k}"),
                    &subvariety::count_ve(&pair),
                    &BigInt::from(n + 1 - d),
                );
                for i in 0..=(n as i64 - d as i64 + 1) {
                    report.assert_eq(
                        || format!("linear alpha n={n} d={d} i={i}"),
                        &subvariety::alpha_ve(i, &pair),
                        &BigInt::one(),
                    );
                }
            }
            // ell = 0 identity and diagnostics over mixed degrees
            for w in multidegrees(d, range.max_entry) {
                for m in 1..d {
                    for v in multidegrees(m, range.max_entry) {
                        for k in range.k_min..=range.k_max {
                            let pair = SubvarietyPair::new(n, k, w.clone(), v.clone(), 0, None)
                                .expect("valid pair");
                            let lhs = subvariety::nu_v_w(&pair);
                            let rhs = soares_count(n, k, m, v.degrees())
                                - count_on_invariant_center(n, k, &w);
                            report.assert_eq(
                                || format!("remark n={n} w={w} v={v} k={k}"),
                                &lhs,
                                &rhs,
                            );
                            let diag = subvariety::closed_form_diagnostic(&pair);
                            report.assert_true(
                                || format!("omega form n={n} w={w} v={v} k={k}"),
                                diag.omega_matches,
                                &diag.omega_form.to_string(),
                                &diag.difference.to_string(),
                            );
                            printed_total += 1;
                            if !diag.literal_matches {
                                printed_mismatches += 1;
                            }
                        }
                        // alternative alpha recursion versus the bundle
                        // pushforward actually used: report-only
                        let pair =
                            SubvarietyPair::new(n, range.k_min, w.clone(), v.clone(), 0, None)
                                .expect("valid pair");
                        let imax = n as i64 - m as i64 - 1;
                        recursion_total += 1;
                        let reference: Vec<BigInt> =
                            (0..=imax).map(|i| subvariety::alpha_ve(i, &pair)).collect();
                        match subvariety::ich_recursion_table(&pair, imax) {
                            Ok(table) if table == reference => {}
                            _ => recursion_mismatches += 1,
                        }
                    }
                }
            }
        }
    }
    report.diagnostics.push(format!(
        "closed-form restatement with the stray ell-power factor disagrees with the \
         defining difference on {printed_mismatches} of {printed_total} ell=0 \
         instances; recorded, not enforced"
    ));
    report.diagnostics.push(format!(
        "chern-class alpha recursion disagrees with the bundle pushforward on \
         {recursion_mismatches} of {recursion_total} pairs (its leading term only \
         holds for the linear configuration); recorded, not enforced"
    ));
    report
}

/// Non-vacuity guard: rerunning the chow and census checks with a
/// sign-flipped `β` must produce failures. Reported instances are the
/// mutated runs; a failure here means a mutated run passed. The mutated
/// reruns use a fixed small grid, so the guard stays meaningful even when
/// the caller's range generates no cells.
pub fn check_mutation_guard(_range: &SweepRange) -> CheckReport {
    let mut report = CheckReport::new("mutation_guard");
    let small = SweepRange {
        n_min: 3,
        n_max: 4,
        d_min: 2,
        d_max: 3,
        k_min: 1,
        k_max: 2,
        ell_policy: EllPolicy::UpToK,
        max_entry: 2,
        max_components: 2,
    };
    let chow = chow_relation_inner(&small, true);
    report.assert_true(
        || "chow check with flipped beta".to_string(),
        !chow.passed(),
        "no failures detected",
        "at least one failure",
    );
    let census = census_inner(&small, true);
    report.assert_true(
        || "census oracle with flipped beta".to_string(),
        !census.passed(),
        "no failures detected",
        "at least one failure",
    );
    report
}

/// Runs every check over the range. Exit-code contract for callers:
/// 0 when all reports pass, 1 on any failure, 2 for an invalid range.
pub fn run_suite(range: &SweepRange) -> Result<Vec<CheckReport>, Error> {
    range.validate()?;
    Ok(vec![
        check_symmetric_identity(range),
        check_whitney(range),
        check_chow_relation(range),
        check_census(range),
        check_subvariety(range),
        check_mutation_guard(range),
    ])
}

/// Looks up a single check by name; used by the CLI's `--check` filter.
pub fn run_check(name: &str, range: &SweepRange) -> Result<CheckReport, Error> {
    range.validate()?;
    match name {
        "symmetric_identity" => Ok(check_symmetric_identity(range)),
        "whitney" => Ok(check_whitney(range)),
        "chow_relation" => Ok(check_chow_relation(range)),
        "census" => Ok(check_census(range)),
        "subvariety" => Ok(check_subvariety(range)),
        "mutation_guard" => Ok(check_mutation_guard(range)),
        other => Err(Error::invalid(
            "check",
            format!(
                "unknown check '{other}' (expected one of symmetric_identity, whitney, \
                 chow_relation, census, subvariety, mutation_guard)"
            ),
        )),
    }
}
