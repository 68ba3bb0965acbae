//! Headline counts for a foliation by curves with complete-intersection
//! singular components.
//!
//! For a degree-`k` foliation on projective `n`-space with a smooth
//! complete-intersection component `W` of codimension `d` in its singular
//! set, everything here reduces to finite sums of products of symmetric
//! functions in the multidegree of `W`, weighted by exact Taylor
//! coefficients of `x^α (1+x)^β` at the order of vanishing `ℓ`:
//!
//! * [`nu`] — the contribution `ν(F,W)` of the component to the deformed
//!   singularity census;
//! * [`count_blowup_total`] / [`count_exceptional`] — singularities of the
//!   strict transform on the whole blowup and on the exceptional divisor;
//! * [`count_on_invariant_center`] — singularities on an invariant center
//!   (`ℓ = 0` specialization);
//! * [`isolated_sum`] — the isolated-singularity census;
//! * [`milnor_contribution`] — `μ(F,W) = N(F,A_W) - ν(F,W)` with the
//!   embedded-point count supplied by the caller.
//!
//! The three blowup counts satisfy `total - exceptional = baum_bott + ν`
//! identically; the three are computed by independent routes so the
//! verification suite can actually check this.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::jsonnum;
use crate::symfun::{binomial, elementary, neg_one_pow, tau, wronski, MultiDegree};

/// One positive-dimensional component of the singular set: its multidegree,
/// the order of vanishing `ℓ` of the strict transform along the exceptional
/// divisor, and optionally the number of embedded closed points (an input —
/// it is not computable from the degree data).
#[derive(Debug, Clone)]
pub struct SingularComponent {
    pub center: MultiDegree,
    pub ell: u32,
    pub embedded_points: Option<u64>,
}

/// Degree-`k` foliation on projective `n`-space together with the
/// complete-intersection components of its singular set. Disjointness of
/// the components is the caller's geometric responsibility; the numeric
/// formulas cannot check it.
#[derive(Debug, Clone)]
pub struct FoliationSpec {
    n: u32,
    k: u32,
    components: Vec<SingularComponent>,
}

impl FoliationSpec {
    pub fn new(n: u32, k: u32, components: Vec<SingularComponent>) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::invalid("n", format!("require n >= 3, got {n}")));
        }
        if k < 1 {
            return Err(Error::invalid("k", "require k >= 1"));
        }
        for (idx, c) in components.iter().enumerate() {
            let d = c.center.len() as u32;
            if d < 2 || d > n - 1 {
                return Err(Error::invalid(
                    format!("components[{idx}].w"),
                    format!("require 2 <= d <= n-1, got d={d} with n={n}"),
                ));
            }
        }
        Ok(Self { n, k, components })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn components(&self) -> &[SingularComponent] {
        &self.components
    }
}

/// Order of vanishing of the strict transform along the exceptional
/// divisor, from the component multiplicities: `min(m1-1, mn)` in the
/// nondicritical case, `m1` in the dicritical case.
pub fn vanishing_order(m1: i64, mn: i64, dicritical: bool) -> i64 {
    assert!(m1 >= 0 && mn >= 0, "vanishing_order: negative multiplicity");
    if dicritical {
        m1
    } else {
        (m1 - 1).min(mn)
    }
}

/// `Σ_{i=0}^{n} k^i`: the isolated-singularity count of a non-degenerate
/// degree-`k` foliation on projective `n`-space.
pub fn baum_bott(n: u32, k: u32) -> BigInt {
    let k = BigInt::from(k);
    let mut acc = BigInt::zero();
    for i in 0..=n {
        acc += k.pow(i);
    }
    acc
}

/// Integer polynomial `x^alpha (1+x)^beta` as (exponent, coefficient)
/// pairs. `alpha = -1` occurs for one family of exceptional-divisor terms;
/// the lone negative-exponent term is dropped, which matches the truncated
/// binomial expansion those formulas are defined by.
fn poly_x_alpha_one_plus_x_beta(alpha: i64, beta: i64) -> Vec<(i64, BigInt)> {
    assert!(alpha >= -1 && beta >= 0);
    (0..=beta)
        .filter_map(|q| {
            let e = alpha + q;
            (e >= 0).then(|| (e, binomial(beta, q)))
        })
        .collect()
}

/// Degree-`m` Taylor coefficient of the polynomial at `x = ell`:
/// `p^{(m)}(ell) / m! = Σ_e c_e C(e, m) ell^{e-m}`.
fn taylor_coefficient(poly: &[(i64, BigInt)], m: i64, ell: u32) -> BigInt {
    let ell = BigInt::from(ell);
    let mut acc = BigInt::zero();
    for (e, c) in poly {
        if *e < m {
            continue;
        }
        acc += c * binomial(*e, m) * ell.pow((*e - m) as u32);
    }
    acc
}

/// Per-multidegree tables of `σ`, `τ`, and `W`, so the sweep evaluators do
/// not recompute them per term.
struct Tables {
    sigma: Vec<BigInt>,
    tau: Vec<BigInt>,
    wron: Vec<BigInt>,
}

impl Tables {
    fn new(n: u32, center: &MultiDegree) -> Self {
        let d = center.len() as i64;
        let dim = n as i64 - d;
        Tables {
            sigma: (0..=d).map(|i| elementary(i, center)).collect(),
            tau: (0..=dim).map(|i| tau(i, n, center)).collect(),
            wron: (0..=dim).map(|delta| wronski(delta, center)).collect(),
        }
    }
}

/// Shared double sum behind `nu` and `count_exceptional`: the two formulas
/// differ only in the polynomial whose Taylor coefficients weight the
/// terms (`x^{n-d-a2} (1+x)^{d-a1}` versus the same with one `x` removed).
fn weighted_component_sum(
    n: u32,
    k: u32,
    center: &MultiDegree,
    ell: u32,
    alpha_shift: i64,
) -> BigInt {
    let d = center.len() as i64;
    let dim = n as i64 - d;
    let t = Tables::new(n, center);
    let k_minus_1 = BigInt::from(k) - BigInt::one();
    let mut acc = BigInt::zero();
    for s in 0..=dim {
        for a1 in 0..=s.min(d) {
            let a2 = s - a1;
            let poly = poly_x_alpha_one_plus_x_beta(dim - a2 + alpha_shift, d - a1);
            let st = &t.sigma[a1 as usize] * &t.tau[a2 as usize];
            if st.is_zero() {
                continue;
            }
            for m in 0..=(dim - s) {
                let delta = dim - s - m;
                acc += neg_one_pow(delta)
                    * taylor_coefficient(&poly, m, ell)
                    * k_minus_1.pow(m as u32)
                    * &st
                    * &t.wron[delta as usize];
            }
        }
    }
    acc
}

/// The contribution `ν(F,W)` of the component to the singularity census:
///
/// `ν = -deg(W) Σ_{|a|<=n-d} Σ_m (-1)^δ (φ_a^(m)(ℓ)/m!) (k-1)^m σ_{a1} τ_{a2} W_δ`
///
/// with `φ_a(x) = x^{n-d-a2} (1+x)^{d-a1}` and `δ = n-d-|a|-m`. Derivatives
/// are exact Taylor coefficients of the expanded integer polynomial.
pub fn nu(n: u32, k: u32, center: &MultiDegree, ell: u32) -> BigInt {
    -center.degree() * weighted_component_sum(n, k, center, ell, 0)
}

/// Singularities of the strict transform on the exceptional divisor:
/// the same weighted sum with `ψ_a(x) = (1+x)^{d-a1} x^{n-d-a2-1}`, scaled
/// by `deg(W)`.
pub fn count_exceptional(n: u32, k: u32, center: &MultiDegree, ell: u32) -> BigInt {
    center.degree() * weighted_component_sum(n, k, center, ell, -1)
}

/// Singularities of the strict transform on the whole blowup, evaluated by
/// the independent triple-sum route with the Porteous coefficients `Γ`:
///
/// `Σ k^i + deg(W) Σ_{|a|} Σ_{j=|a|}^{n} Σ_m (-1)^δ C(n-j,m) Γ_a^j ℓ^{n-j-m} (k-1)^m σ τ W_δ`.
pub fn count_blowup_total(n: u32, k: u32, center: &MultiDegree, ell: u32) -> BigInt {
    let d = center.len() as i64;
    let nn = n as i64;
    let dim = nn - d;
    let t = Tables::new(n, center);
    let k_minus_1 = BigInt::from(k) - BigInt::one();
    let ell_big = BigInt::from(ell);
    let mut acc = BigInt::zero();
    for s in 0..=dim {
        for a1 in 0..=s.min(d) {
            let a2 = s - a1;
            let st = &t.sigma[a1 as usize] * &t.tau[a2 as usize];
            if st.is_zero() {
                continue;
            }
            for j in s..=nn {
                let g = crate::chowring::gamma(j, a1, a2, d);
                if g.is_zero() {
                    continue;
                }
                for m in 0..=(dim - s).min(nn - j) {
                    let delta = dim - s - m;
                    acc += neg_one_pow(delta)
                        * binomial(nn - j, m)
                        * &g
                        * ell_big.pow((nn - j - m) as u32)
                        * k_minus_1.pow(m as u32)
                        * &st
                        * &t.wron[delta as usize];
                }
            }
        }
    }
    baum_bott(n, k) + center.degree() * acc
}

/// Singularities of the foliation on an invariant center (the `ℓ = 0`
/// case): `deg(W) Σ_{i=0}^{n-d} τ_i (k-1)^{n-d-i}`.
pub fn count_on_invariant_center(n: u32, k: u32, center: &MultiDegree) -> BigInt {
    let dim = n as i64 - center.len() as i64;
    let k_minus_1 = BigInt::from(k) - BigInt::one();
    let mut acc = BigInt::zero();
    for i in 0..=dim {
        acc += tau(i, n, center) * k_minus_1.pow((dim - i) as u32);
    }
    center.degree() * acc
}

/// Sum of Milnor numbers over the isolated singularities:
/// `baum_bott(n,k) + Σ_i ν(F,W_i)`.
pub fn isolated_sum(spec: &FoliationSpec) -> BigInt {
    let mut acc = baum_bott(spec.n, spec.k);
    for c in &spec.components {
        acc += nu(spec.n, spec.k, &c.center, c.ell);
    }
    acc
}

/// `μ(F,W) = N(F,A_W) - ν(F,W)`: the Milnor number of the component given
/// its embedded-point count.
pub fn milnor_contribution(nu_val: &BigInt, embedded: &BigInt) -> BigInt {
    embedded - nu_val
}

/// Every count for one component, with a label naming the formula that
/// produced it.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub w: Vec<u32>,
    pub ell: u32,
    #[serde(serialize_with = "jsonnum::ser")]
    pub deg: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub nu: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub blowup_total: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    pub exceptional: BigInt,
    /// Count on the center itself when it is invariant (`ℓ = 0`).
    #[serde(
        serialize_with = "jsonnum::ser_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub invariant_center_count: Option<BigInt>,
    #[serde(
        serialize_with = "jsonnum::ser_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub embedded_points: Option<BigInt>,
    #[serde(serialize_with = "jsonnum::ser")]
    pub milnor: BigInt,
    /// True when no embedded-point count was supplied: `μ = -ν` is then a
    /// lower bound for the component's Milnor number.
    pub milnor_is_lower_bound: bool,
    pub provenance: ComponentProvenance,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentProvenance {
    pub nu: &'static str,
    pub blowup_total: &'static str,
    pub exceptional: &'static str,
    pub milnor: &'static str,
}

const PROVENANCE: ComponentProvenance = ComponentProvenance {
    nu: "component_contribution_closed_form",
    blowup_total: "blowup_chern_integral_closed_form",
    exceptional: "exceptional_divisor_chern_integral",
    milnor: "embedded_count_minus_nu",
};

/// The full set of computed counts for a foliation spec. Every integer in
/// the report is reproducible by rerunning the named formula on the stored
/// inputs.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub n: u32,
    pub k: u32,
    #[serde(serialize_with = "jsonnum::ser")]
    pub baum_bott: BigInt,
    pub components: Vec<ComponentReport>,
    /// `baum_bott + Σ ν`: the isolated-singularity census when the
    /// foliation is special along every component.
    #[serde(serialize_with = "jsonnum::ser")]
    pub isolated_sum: BigInt,
    /// Census with the supplied embedded-point counts subtracted; present
    /// only when every component carries one.
    #[serde(
        serialize_with = "jsonnum::ser_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub isolated_sum_minus_embedded: Option<BigInt>,
    /// The formulas assume the components are pairwise disjoint; this is
    /// not checkable from the degree data.
    pub disjointness_assumed: bool,
}

/// Evaluates every count for the spec.
pub fn report(spec: &FoliationSpec) -> InvariantReport {
    let bb = baum_bott(spec.n, spec.k);
    let mut components = Vec::with_capacity(spec.components.len());
    let mut nu_sum = BigInt::zero();
    let mut embedded_sum = Some(BigInt::zero());
    for c in &spec.components {
        let nu_val = nu(spec.n, spec.k, &c.center, c.ell);
        nu_sum += &nu_val;
        let embedded = c.embedded_points.map(BigInt::from);
        match (&mut embedded_sum, &embedded) {
            (Some(total), Some(e)) => *total += e,
            _ => embedded_sum = None,
        }
        let milnor = milnor_contribution(&nu_val, embedded.as_ref().unwrap_or(&BigInt::zero()));
        components.push(ComponentReport {
            w: c.center.degrees().to_vec(),
            ell: c.ell,
            deg: c.center.degree().clone(),
            blowup_total: count_blowup_total(spec.n, spec.k, &c.center, c.ell),
            exceptional: count_exceptional(spec.n, spec.k, &c.center, c.ell),
            invariant_center_count: (c.ell == 0)
                .then(|| count_on_invariant_center(spec.n, spec.k, &c.center)),
            embedded_points: embedded,
            milnor,
            milnor_is_lower_bound: c.embedded_points.is_none(),
            nu: nu_val,
            provenance: PROVENANCE.clone(),
        });
    }
    let isolated = &bb + &nu_sum;
    InvariantReport {
        n: spec.n,
        k: spec.k,
        baum_bott: bb,
        components,
        isolated_sum_minus_embedded: embedded_sum.map(|e| &isolated - e),
        isolated_sum: isolated,
        disjointness_assumed: true,
    }
}
