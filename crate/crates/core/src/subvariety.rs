//! Counts on an invariant complete intersection `V` containing the
//! singular component `W`.
//!
//! `V` has codimension `m < d`; its strict transform `Ṽ` under the blowup
//! along `W` meets the exceptional divisor in `Ṽ_E`. The counts are
//!
//! * [`soares_count`] — singularities of the foliation on an invariant
//!   complete intersection with only isolated singularities;
//! * [`count_strict_v`] / [`count_ve`] — singularities of the strict
//!   transform on `Ṽ` and on `Ṽ_E`, built from the intersection numbers
//!   `α^(i) = ∫ (π*h)^{n-m-1-i} ζ^i` over `Ṽ_E`;
//! * [`nu_v_w`] — their difference, the count on `V∖W`;
//! * [`principal_bound`] — the upper bound for singularities off `W`.
//!
//! The `α` numbers are Segre coefficients of the bundle `N_{W/V}` (the
//! fiber of `Ṽ_E` over the center is its projectivization); the
//! verification suite exercises them against the linear configuration
//! (all values 1), the invariant-center specialization at `ℓ = 0`, and
//! the ζ-power reduction of the ambient exceptional divisor.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chowring::{beta, BlowupContext};
use crate::error::Error;
use crate::jsonnum;
use crate::symfun::{binomial, elementary, neg_one_pow, tau, wronski, wronski_slice, MultiDegree};

/// Singular component `W` (codimension `d`) sitting inside an invariant
/// complete intersection `V` (codimension `m`, `1 <= m < d`), plus the
/// foliation degree `k`, the order of vanishing `ℓ`, and optionally the
/// embedded-point count for `V∖W`.
#[derive(Debug, Clone)]
pub struct SubvarietyPair {
    n: u32,
    k: u32,
    center_w: MultiDegree,
    variety_v: MultiDegree,
    ell: u32,
    embedded_off_w: Option<u64>,
}

impl SubvarietyPair {
    pub fn new(
        n: u32,
        k: u32,
        center_w: MultiDegree,
        variety_v: MultiDegree,
        ell: u32,
        embedded_off_w: Option<u64>,
    ) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::invalid("n", format!("require n >= 3, got {n}")));
        }
        if k < 1 {
            return Err(Error::invalid("k", "require k >= 1"));
        }
        let d = center_w.len();
        let m = variety_v.len();
        if !(1..d).contains(&m) {
            return Err(Error::invalid(
                "v",
                format!("require 1 <= m < d, got m={m} with d={d}"),
            ));
        }
        if d > n as usize - 1 {
            return Err(Error::invalid(
                "w",
                format!("require d <= n-1, got d={d} with n={n}"),
            ));
        }
        Ok(Self {
            n,
            k,
            center_w,
            variety_v,
            ell,
            embedded_off_w,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn center_w(&self) -> &MultiDegree {
        &self.center_w
    }

    pub fn variety_v(&self) -> &MultiDegree {
        &self.variety_v
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn embedded_off_w(&self) -> Option<u64> {
        self.embedded_off_w
    }

    fn context(&self) -> BlowupContext {
        BlowupContext::new(self.n, self.center_w.clone())
            .expect("pair invariants imply a valid blowup context")
    }
}

/// Singularity count on an invariant complete intersection of codimension
/// `codim_v` cut by the given degrees, when the foliation has only isolated
/// singularities there:
///
/// `N(F,V) = (∏ d_i) Σ_{j=0}^{dim V} [Σ_{δ=0}^{j} (-1)^δ W_δ(d_1-1, …)] k^{dim V - j}`.
pub fn soares_count(n: u32, k: u32, codim_v: u32, degrees: &[u32]) -> BigInt {
    assert!(
        codim_v >= 1 && codim_v < n,
        "soares_count: codimension {codim_v} outside 1..={}",
        n - 1
    );
    assert_eq!(
        degrees.len(),
        codim_v as usize,
        "soares_count: {} degrees given for codimension {codim_v}",
        degrees.len()
    );
    assert!(degrees.iter().all(|&d| d >= 1), "soares_count: degree 0");
    let dim = (n - codim_v) as i64;
    let shifted: Vec<u32> = degrees.iter().map(|&d| d - 1).collect();
    let k = BigInt::from(k);
    let mut bracket = BigInt::zero();
    let mut acc = BigInt::zero();
    for j in 0..=dim {
        bracket += neg_one_pow(j) * wronski_slice(j, &shifted);
        acc += &bracket * k.pow((dim - j) as u32);
    }
    degrees.iter().map(|&d| BigInt::from(d)).product::<BigInt>() * acc
}

/// Table of `α^(0..=imax)` for the pair.
///
/// `Ṽ_E` is the projectivization of the rank-`(d-m)` bundle `N_{W/V}` with
/// total Chern class `∏(1+k_j h) / ∏(1+d_i h)`, so pushing `ζ`-powers down
/// to `W` gives Segre coefficients of that bundle:
///
/// `α^(i) = (-1)^ϱ deg(W) Σ_q (-1)^q σ_q(V) W_{i-ϱ-q}(W)`, `ϱ = d-m-1`,
///
/// zero below `ϱ` and `(-1)^ϱ deg(W)` at `ϱ`. This agrees with the
/// ζ-power reduction for `i >= d`, and with the Chern-class recursion of
/// [`ich_recursion_table`] on the linear configuration; off that family
/// the recursion's leading term breaks down and the mismatch is surfaced
/// as a diagnostic.
fn alpha_table(pair: &SubvarietyPair, imax: i64) -> Vec<BigInt> {
    let d = pair.center_w.len() as i64;
    let m = pair.variety_v.len() as i64;
    let rho = d - m - 1;
    let sign = neg_one_pow(rho) * pair.center_w.degree();
    (0..=imax)
        .map(|i| {
            if i < rho {
                return BigInt::zero();
            }
            let p = i - rho;
            let mut acc = BigInt::zero();
            for q in 0..=p.min(m) {
                acc += neg_one_pow(q)
                    * elementary(q, &pair.variety_v)
                    * wronski(p - q, &pair.center_w);
            }
            &sign * acc
        })
        .collect()
}

/// Alternative route to the same table, recursing through the Chern
/// classes of the center; kept only as a diagnostic. Its leading term is
/// valid for the linear configuration only: off that family it
/// contradicts the invariant-center identity (`W=(1,2)`, `V=(1)` in
/// dimension 3 is the smallest counterexample). Errors when the
/// recursion's division is not exact.
pub(crate) fn ich_recursion_table(pair: &SubvarietyPair, imax: i64) -> Result<Vec<BigInt>, Error> {
    let ctx = pair.context();
    let d = ctx.codim() as i64;
    let m = pair.variety_v.len() as i64;
    let rho = d - m - 1;
    let deg_w = pair.center_w.degree();
    let mut alpha = vec![BigInt::zero(); (imax + 1).max(d) as usize];
    if rho <= imax.max(d - 1) {
        alpha[rho as usize] = neg_one_pow(rho) * deg_w;
    }
    for i in (rho + 1)..=(d - 1).min(imax.max(d - 1)) {
        let mut rhs = binomial(d, rho) * ctx.tau(i - rho) * deg_w;
        for s in 1..=i {
            for a1 in 0..=s.min(d) {
                let a2 = s - a1;
                rhs -= neg_one_pow(i - s)
                    * binomial(d - a1, i - s)
                    * ctx.sigma(a1)
                    * ctx.tau(a2)
                    * &alpha[(i - s) as usize];
            }
        }
        let numerator = neg_one_pow(i) * rhs;
        let divisor = binomial(d, i);
        if (&numerator % &divisor).is_zero() {
            alpha[i as usize] = numerator / divisor;
        } else {
            return Err(Error::invalid(
                "alpha",
                format!(
                    "recursion not integral at i={i} for W={} V={}",
                    pair.center_w, pair.variety_v
                ),
            ));
        }
    }
    for i in d..=imax {
        let mut acc = BigInt::zero();
        for r in 1..=d {
            acc += beta(i, r, &ctx) * &alpha[(d - r) as usize];
        }
        alpha[i as usize] = acc;
    }
    alpha.truncate(imax as usize + 1);
    Ok(alpha)
}

/// `α^(i) = ∫_{Ṽ_E} (π*h)^{n-m-1-i} ζ^i`.
pub fn alpha_ve(i: i64, pair: &SubvarietyPair) -> BigInt {
    assert!(i >= 0, "alpha_ve: negative index {i}");
    alpha_table(pair, i).pop().expect("table has i+1 entries")
}

/// Singularities of the strict transform on `Ṽ`:
/// `N(F,V) + Σ_{i,j} C(n-m-i, j) τ_i^{(m)} (k-1)^j (-ℓ)^{γ} α^{(γ-1)}`
/// with `γ = n-m-i-j` and `τ^{(m)}` taken in the degrees of `V`.
pub fn count_strict_v(pair: &SubvarietyPair) -> BigInt {
    let n = pair.n as i64;
    let d = pair.center_w.len() as i64;
    let m = pair.variety_v.len() as i64;
    let alpha = alpha_table(pair, n - m - 1);
    let k_minus_1 = BigInt::from(pair.k) - BigInt::one();
    let ell = BigInt::from(pair.ell);
    let mut acc = soares_count(pair.n, pair.k, m as u32, pair.variety_v.degrees());
    for i in 0..=(n - d) {
        let tau_i = tau(i, pair.n, &pair.variety_v);
        if tau_i.is_zero() {
            continue;
        }
        for j in 0..=(n - d - i) {
            let g = n - m - i - j;
            acc += binomial(n - m - i, j)
                * &tau_i
                * k_minus_1.pow(j as u32)
                * neg_one_pow(g)
                * ell.pow(g as u32)
                * &alpha[(g - 1) as usize];
        }
    }
    acc
}

/// Singularities of the strict transform on `Ṽ_E = Ṽ ∩ E`.
pub fn count_ve(pair: &SubvarietyPair) -> BigInt {
    let n = pair.n as i64;
    let d = pair.center_w.len() as i64;
    let m = pair.variety_v.len() as i64;
    let alpha = alpha_table(pair, n - m - 1);
    let k_minus_1 = BigInt::from(pair.k) - BigInt::one();
    let ell = BigInt::from(pair.ell);
    let mut acc = BigInt::zero();
    for i in 0..=(n - d) {
        let tau_i = tau(i, pair.n, &pair.variety_v);
        if tau_i.is_zero() {
            continue;
        }
        for j in 0..=(n - d - i) {
            let g = n - m - i - j;
            let common =
                &tau_i * k_minus_1.pow(j as u32) * neg_one_pow(g - 1) * &alpha[(g - 1) as usize];
            for p in (i + 1)..=(n - m - j) {
                acc += binomial(n - m - p, j) * ell.pow((n - m - p - j) as u32) * &common;
            }
        }
    }
    acc
}

/// `ν(F,V,W) = N(F, V∖W)`, computed by the defining relation
/// `count_strict_v - count_ve`. Closed-form restatements are evaluated
/// for comparison only; see [`closed_form_diagnostic`].
pub fn nu_v_w(pair: &SubvarietyPair) -> BigInt {
    count_strict_v(pair) - count_ve(pair)
}

/// Upper bound for the Milnor numbers of the isolated singularities on
/// `V∖W`: `N(F,V) + ν(F,V,W) + N(F,A_{V∖W})`. A missing embedded count
/// defaults to zero, making the value a lower bound for the true bound.
pub fn principal_bound(pair: &SubvarietyPair) -> BigInt {
    let embedded = BigInt::from(pair.embedded_off_w.unwrap_or(0));
    soares_count(
        pair.n,
        pair.k,
        pair.variety_v.len() as u32,
        pair.variety_v.degrees(),
    ) + nu_v_w(pair)
        + embedded
}

/// Both readings of the closed-form restatement of `ν(F,V,W)`, compared
/// against the authoritative difference. `omega_form` carries only the
/// derivative factor `Ω^{(j)}(ℓ)/j!`; `literal_form` additionally keeps a
/// stray `ℓ^γ` factor (read at `p = i`, the only binding that makes it
/// well-formed). Diagnostics only — never used for computation.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormDiagnostic {
    #[serde(serialize_with = "jsonnum::ser")]
    pub difference: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub omega_form: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub literal_form: BigInt,
    pub omega_matches: bool,
    pub literal_matches: bool,
}

pub fn closed_form_diagnostic(pair: &SubvarietyPair) -> ClosedFormDiagnostic {
    let n = pair.n as i64;
    let d = pair.center_w.len() as i64;
    let m = pair.variety_v.len() as i64;
    let alpha = alpha_table(pair, n - m - 1);
    let k_minus_1 = BigInt::from(pair.k) - BigInt::one();
    let ell = BigInt::from(pair.ell);
    let soares = soares_count(pair.n, pair.k, m as u32, pair.variety_v.degrees());
    let mut omega_form = soares.clone();
    let mut literal_form = soares;
    for i in 0..=(n - d) {
        let tau_i = tau(i, pair.n, &pair.variety_v);
        for j in 0..=(n - d - i) {
            let g = n - m - i - j;
            // Omega^{(j)}(ell)/j! for Omega(x) = x^{n-m-i} + ... + x^{j}
            let mut omega_deriv = BigInt::zero();
            for p in i..=(n - m - j) {
                omega_deriv += binomial(n - m - p, j) * ell.pow((n - m - p - j) as u32);
            }
            let common =
                &tau_i * k_minus_1.pow(j as u32) * neg_one_pow(g) * &alpha[(g - 1) as usize];
            omega_form += &omega_deriv * &common;
            literal_form += omega_deriv * common * ell.pow(g as u32);
        }
    }
    let difference = nu_v_w(pair);
    ClosedFormDiagnostic {
        omega_matches: omega_form == difference,
        literal_matches: literal_form == difference,
        difference,
        omega_form,
        literal_form,
    }
}

/// All the counts for a pair, plus the hypotheses the formulas assume but
/// cannot check from degree data.
#[derive(Debug, Clone, Serialize)]
pub struct SubvarietyReport {
    pub n: u32,
    pub k: u32,
    pub w: Vec<u32>,
    pub v: Vec<u32>,
    pub ell: u32,
    #[serde(serialize_with = "jsonnum::ser")]
    pub soares: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub blowup_strict: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub blowup_exceptional: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub nu_v_w: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub principal_bound: BigInt,
    #[serde(
        serialize_with = "jsonnum::ser_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub embedded_off_w: Option<BigInt>,
    /// True when no embedded count was supplied; the bound then omits it.
    pub embedded_assumed_zero: bool,
    /// The defining equations of `V` are assumed to be constant
    /// combinations of those of `W`; not checkable from degrees.
    pub membership_hypothesis_assumed: bool,
    pub closed_form_diagnostic: ClosedFormDiagnostic,
}

pub fn report(pair: &SubvarietyPair) -> SubvarietyReport {
    let strict = count_strict_v(pair);
    let ve = count_ve(pair);
    let nu = &strict - &ve;
    let soares = soares_count(
        pair.n,
        pair.k,
        pair.variety_v.len() as u32,
        pair.variety_v.degrees(),
    );
    let embedded = pair.embedded_off_w.map(BigInt::from);
    let bound = &soares + &nu + embedded.clone().unwrap_or_default();
    SubvarietyReport {
        n: pair.n,
        k: pair.k,
        w: pair.center_w.degrees().to_vec(),
        v: pair.variety_v.degrees().to_vec(),
        ell: pair.ell,
        soares,
        blowup_strict: strict,
        blowup_exceptional: ve,
        nu_v_w: nu,
        principal_bound: bound,
        embedded_off_w: embedded,
        embedded_assumed_zero: pair.embedded_off_w.is_none(),
        membership_hypothesis_assumed: true,
        closed_form_diagnostic: closed_form_diagnostic(pair),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{baum_bott, count_on_invariant_center};

    fn md(ks: &[u32]) -> MultiDegree {
        MultiDegree::new(ks.to_vec()).unwrap()
    }

    fn linear_pair(n: u32, d: usize, k: u32, ell: u32) -> SubvarietyPair {
        SubvarietyPair::new(
            n,
            k,
            MultiDegree::all_ones(d),
            MultiDegree::all_ones(d - 1),
            ell,
            None,
        )
        .unwrap()
    }

    #[test]
    fn pair_validation() {
        // m >= d rejected
        assert!(SubvarietyPair::new(4, 2, md(&[1, 1]), md(&[1, 1]), 0, None).is_err());
        assert!(SubvarietyPair::new(4, 2, md(&[1, 1]), md(&[1, 1, 1]), 0, None).is_err());
        // d > n-1 rejected
        assert!(SubvarietyPair::new(3, 2, md(&[1, 1, 1]), md(&[1]), 0, None).is_err());
        assert!(SubvarietyPair::new(4, 2, md(&[1, 1, 1]), md(&[1]), 0, None).is_ok());
    }

    #[test]
    fn soares_values() {
        // invariant hyperplane: Baum-Bott on P^{n-1}
        for n in 3..=6u32 {
            for k in 1..=5u32 {
                assert_eq!(soares_count(n, k, 1, &[1]), baum_bott(n - 1, k));
            }
        }
        // n=3, quadric surface: 2(k^2+1)
        for k in 1..=6u32 {
            assert_eq!(
                soares_count(3, k, 1, &[2]),
                BigInt::from(2) * (BigInt::from(k).pow(2) + 1)
            );
        }
        assert_eq!(soares_count(5, 1, 1, &[1]), BigInt::from(5));
    }

    #[test]
    fn alpha_linear_configuration_is_one() {
        // W linear of codimension d, V linear of codimension d-1
        for n in 3..=7u32 {
            for d in 2..n as usize {
                let pair = linear_pair(n, d, 2, 1);
                for i in 0..=(n as i64 - d as i64 + 2) {
                    assert_eq!(alpha_ve(i, &pair), BigInt::one(), "n={n} d={d} i={i}");
                }
            }
        }
    }

    #[test]
    fn alpha_conic_center() {
        // W = (1,2) in P^3 (a conic), V the plane containing it. The
        // tautological class restricted to the section P(N_{W/V}) is
        // c_1(O_W(2)), so alpha^(1) = 2 deg(W) = 4. The chern-class
        // recursion yields 3 here; it is kept as a diagnostic only.
        let pair = SubvarietyPair::new(3, 2, md(&[1, 2]), md(&[1]), 0, None).unwrap();
        assert_eq!(alpha_ve(0, &pair), BigInt::from(2));
        assert_eq!(alpha_ve(1, &pair), BigInt::from(4));
        let ich = ich_recursion_table(&pair, 1).unwrap();
        assert_eq!(ich[1], BigInt::from(3));
    }

    #[test]
    fn alpha_agrees_with_zeta_reduction_beyond_d() {
        use crate::chowring::{beta, BlowupContext};
        for (n, w, v) in [
            (3u32, vec![1u32, 2], vec![1u32]),
            (5, vec![2, 2, 3], vec![1, 2]),
            (6, vec![1, 2, 2, 3], vec![2]),
        ] {
            let pair = SubvarietyPair::new(n, 2, md(&w), md(&v), 1, None).unwrap();
            let d = w.len() as i64;
            let m = v.len() as i64;
            let imax = n as i64 - m - 1 + 2;
            let table = alpha_table(&pair, imax);
            let ctx = BlowupContext::new(n, md(&w)).unwrap();
            for i in d..=imax {
                let mut acc = BigInt::zero();
                for r in 1..=d {
                    acc += beta(i, r, &ctx) * &table[(d - r) as usize];
                }
                assert_eq!(table[i as usize], acc, "n={n} w={w:?} v={v:?} i={i}");
            }
        }
    }

    #[test]
    fn alpha_base_cases() {
        // W linear codim 4, V linear codim 2 in P^5: table is 0,-1,-2,-3,...
        let pair = SubvarietyPair::new(
            5,
            2,
            MultiDegree::all_ones(4),
            MultiDegree::all_ones(2),
            1,
            None,
        )
        .unwrap();
        let table = alpha_table(&pair, 4);
        assert_eq!(
            table,
            vec![
                BigInt::zero(),
                BigInt::from(-1),
                BigInt::from(-2),
                BigInt::from(-3),
                BigInt::from(-4),
            ]
        );
    }

    #[test]
    fn linear_configuration_counts() {
        for n in 3..=7u32 {
            for d in 2..n as usize {
                for k in 2..=4u32 {
                    let pair = linear_pair(n, d, k, k - 1);
                    assert_eq!(
                        count_strict_v(&pair),
                        BigInt::from(n + 2 - d as u32),
                        "strict n={n} d={d} k={k}"
                    );
                    assert_eq!(
                        count_ve(&pair),
                        BigInt::from(n + 1 - d as u32),
                        "ve n={n} d={d} k={k}"
                    );
                    assert_eq!(nu_v_w(&pair), BigInt::one());
                }
            }
        }
    }

    #[test]
    fn remark_identity_at_ell_zero() {
        // nu_v_w == soares(V) - N(F,W) for ell = 0, both d-m = 1 and >= 2
        for (n, w, v, k) in [
            (3u32, vec![1u32, 1], vec![1u32], 2u32),
            (3, vec![1, 2], vec![1], 3),
            (4, vec![1, 1, 1], vec![1], 2),
            (4, vec![1, 1, 1], vec![1, 1], 2),
            (5, vec![1, 1, 1, 1], vec![1, 1], 3),
            (5, vec![1, 2, 2], vec![2], 2),
            (6, vec![2, 2, 3], vec![2, 2], 2),
        ] {
            let pair = SubvarietyPair::new(n, k, md(&w), md(&v), 0, None).unwrap();
            let lhs = nu_v_w(&pair);
            let rhs =
                soares_count(n, k, v.len() as u32, &v) - count_on_invariant_center(n, k, &md(&w));
            assert_eq!(lhs, rhs, "n={n} w={w:?} v={v:?} k={k}");
        }
    }

    #[test]
    fn two_linear_planes_k1() {
        // m = d-1, both linear, k=1, ell=0: difference of two Baum-Bott counts
        for n in 3..=6u32 {
            for d in 2..n as usize {
                let pair = SubvarietyPair::new(
                    n,
                    1,
                    MultiDegree::all_ones(d),
                    MultiDegree::all_ones(d - 1),
                    0,
                    None,
                )
                .unwrap();
                assert_eq!(nu_v_w(&pair), BigInt::one());
            }
        }
    }

    #[test]
    fn principal_bound_behaviour() {
        let base = linear_pair(4, 3, 2, 1);
        let soares = soares_count(4, 2, 2, &[1, 1]);
        assert_eq!(principal_bound(&base), &soares + nu_v_w(&base));
        // monotone in the embedded count, one unit per point
        let mut prev = principal_bound(&base);
        for q in 1..=3u64 {
            let pair = SubvarietyPair::new(
                4,
                2,
                MultiDegree::all_ones(3),
                MultiDegree::all_ones(2),
                1,
                Some(q),
            )
            .unwrap();
            let bound = principal_bound(&pair);
            assert_eq!(bound, &prev + 1);
            prev = bound;
        }
        // ell = 0 composition with the invariant-center identity
        let pair = SubvarietyPair::new(4, 3, md(&[1, 2]), md(&[2]), 0, None).unwrap();
        assert_eq!(
            principal_bound(&pair),
            BigInt::from(2) * soares_count(4, 3, 1, &[2])
                - count_on_invariant_center(4, 3, &md(&[1, 2]))
        );
    }

    #[test]
    fn diagnostic_omega_form_matches_difference() {
        for (n, w, v, k, ell) in [
            (3u32, vec![1u32, 1], vec![1u32], 2u32, 1u32),
            (4, vec![1, 2], vec![1], 2, 2),
            (5, vec![1, 1, 2], vec![1, 1], 3, 0),
            (5, vec![2, 2, 2, 2], vec![2, 2], 2, 1),
        ] {
            let pair = SubvarietyPair::new(n, k, md(&w), md(&v), ell, None).unwrap();
            let diag = closed_form_diagnostic(&pair);
            assert!(diag.omega_matches, "n={n} w={w:?} v={v:?}");
        }
    }

    #[test]
    fn diagnostic_printed_literal_disagrees_somewhere() {
        // at ell = 0 the stray factor kills the correction entirely, so the
        // literal display evaluates to N(F,V) instead of N(F,V) - N(F,W)
        let pair = SubvarietyPair::new(3, 2, md(&[1, 1]), md(&[1]), 0, None).unwrap();
        let diag = closed_form_diagnostic(&pair);
        assert!(!diag.literal_matches);
        assert_eq!(diag.literal_form, soares_count(3, 2, 1, &[1]));
    }

    #[test]
    fn report_flags() {
        let pair = linear_pair(4, 2, 2, 1);
        let rep = report(&pair);
        assert!(rep.embedded_assumed_zero);
        assert!(rep.membership_hypothesis_assumed);
        assert_eq!(rep.nu_v_w, &rep.blowup_strict - &rep.blowup_exceptional);
        assert_eq!(rep.principal_bound, &rep.soares + &rep.nu_v_w);
    }
}
