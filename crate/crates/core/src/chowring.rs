//! Intersection theory on the blowup of projective space along a smooth
//! complete intersection.
//!
//! Classes on the exceptional divisor `E` are integer polynomials in the
//! pullback hyperplane class `h` and the tautological class
//! `ζ = c_1(O_N(-1))`. The ring has a single relation in degree `d`
//! (the codimension of the center),
//!
//! ```text
//! ζ^d = σ_1 h ζ^{d-1} - σ_2 h^2 ζ^{d-2} + … + (-1)^{d-1} σ_d h^d,
//! ```
//!
//! and `h^p = 0` for `p > n-d` because `h` is pulled back from the center.
//! Reduction modulo the relation uses the closed-form coefficients
//! `β_{m,i}`, and exact integration over `E` reads off a single coefficient
//! against the fundamental pairing `∫_E h^{n-d} ζ^{d-1} = (-1)^{d-1} deg(W)`.
//!
//! Classes on the full blowup are handled as a pair (pullback polynomial in
//! `h`, class pushed forward from `E`); products and integrals of such pairs
//! are what the singularity-count assembly in [`nu_via_classes`] consumes.
//! This module is the independent oracle the closed-form counts are checked
//! against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::symfun::{self, binomial, neg_one_pow, MultiDegree};

/// Ambient dimension plus blowup center; owns all symmetric-function
/// evaluations for one blowup. Immutable after construction.
#[derive(Debug, Clone)]
pub struct BlowupContext {
    n: u32,
    center: MultiDegree,
    beta_sign_flipped: bool,
}

impl BlowupContext {
    /// Requires `n >= 3` and `2 <= d <= n-1` for the center's codimension.
    pub fn new(n: u32, center: MultiDegree) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::invalid("n", format!("require n >= 3, got {n}")));
        }
        let d = center.len() as u32;
        if d < 2 || d > n - 1 {
            return Err(Error::invalid(
                "w",
                format!("require 2 <= d <= n-1, got d={d} with n={n}"),
            ));
        }
        Ok(Self {
            n,
            center,
            beta_sign_flipped: false,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Codimension `d` of the center.
    pub fn codim(&self) -> u32 {
        self.center.len() as u32
    }

    /// `dim W = n - d`; also the largest surviving power of `h`.
    pub fn center_dim(&self) -> u32 {
        self.n - self.codim()
    }

    pub fn center(&self) -> &MultiDegree {
        &self.center
    }

    pub fn deg(&self) -> &BigInt {
        self.center.degree()
    }

    pub fn sigma(&self, i: i64) -> BigInt {
        symfun::elementary(i, &self.center)
    }

    pub fn tau(&self, i: i64) -> BigInt {
        symfun::tau(i, self.n, &self.center)
    }

    pub fn wronski(&self, delta: i64) -> BigInt {
        symfun::wronski(delta, &self.center)
    }

    /// Copy of the context whose `β` coefficients carry the wrong sign.
    /// Exists so the verification suite can confirm its own checks are not
    /// vacuous; never use for actual computation.
    pub fn with_flipped_beta(mut self) -> Self {
        self.beta_sign_flipped = true;
        self
    }
}

/// Coefficient of `ζ^{d-i} h^{m-d+i}` in the reduction of `ζ^m`:
/// `β_{m,i} = Σ_{j=0}^{i-1} (-1)^j σ_j W_{m-d+i-j}` for `m >= d`,
/// `1 <= i <= d`.
pub fn beta(m: i64, i: i64, ctx: &BlowupContext) -> BigInt {
    let d = ctx.codim() as i64;
    assert!(m >= d, "beta: m={m} below codimension {d}");
    assert!((1..=d).contains(&i), "beta: index i={i} outside 1..={d}");
    let mut acc = BigInt::zero();
    for j in 0..i {
        acc += neg_one_pow(j) * ctx.sigma(j) * ctx.wronski(m - d + i - j);
    }
    if ctx.beta_sign_flipped {
        -acc
    } else {
        acc
    }
}

/// Porteous correction coefficient
/// `Γ^j_a = C(d-a1, j-|a|-1) - C(d-a1, j-|a|)` with the vanishing binomial
/// convention.
pub fn gamma(j: i64, a1: i64, a2: i64, d: i64) -> BigInt {
    assert!((0..=d).contains(&a1), "gamma: a1={a1} outside 0..={d}");
    let s = a1 + a2;
    binomial(d - a1, j - s - 1) - binomial(d - a1, j - s)
}

/// Integer-coefficient class `Σ c_{p,q} h^p ζ^q` on the exceptional divisor.
///
/// Addition and multiplication are plain polynomial operations; reduction to
/// the canonical representative is an explicit [`ExceptionalClass::normal_form`]
/// call.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExceptionalClass {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl ExceptionalClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c · h^p ζ^q`.
    pub fn monomial(p: u32, q: u32, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((p, q), c);
        }
        Self { coeffs }
    }

    pub fn h_pow(p: u32) -> Self {
        Self::monomial(p, 0, BigInt::one())
    }

    pub fn zeta_pow(q: u32) -> Self {
        Self::monomial(0, q, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.coeffs.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    fn insert(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&key, c) in &other.coeffs {
            out.insert(key, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&k, c)| (k, -c)).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let coeffs = self.coeffs.iter().map(|(&k, c)| (k, c * s)).collect();
        Self { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(p1, q1), c1) in &self.coeffs {
            for (&(p2, q2), c2) in &other.coeffs {
                out.insert((p1 + p2, q1 + q2), c1 * c2);
            }
        }
        out
    }

    /// Canonical representative: every `ζ^q` with `q >= d` rewritten through
    /// `β`, every `h^p` with `p > n-d` dropped, zero coefficients removed.
    /// Highest ζ-power is rewritten first; each rewrite only produces
    /// ζ-degrees below `d`, so one descending pass terminates.
    pub fn normal_form(&self, ctx: &BlowupContext) -> Self {
        let d = ctx.codim();
        let dim = ctx.center_dim();
        let mut work = self.coeffs.clone();
        let mut out = Self::zero();
        while let Some((&(p, q), _)) = work.iter().max_by_key(|(&(_, q), _)| q) {
            let c = work.remove(&(p, q)).expect("key just observed");
            if q < d {
                if p <= dim && !c.is_zero() {
                    out.insert((p, q), c);
                }
                continue;
            }
            for r in 1..=d {
                let coeff = &c * beta(q as i64, r as i64, ctx);
                if coeff.is_zero() {
                    continue;
                }
                let key = (p + q - d + r, d - r);
                let entry = work.entry(key).or_default();
                *entry += coeff;
                if entry.is_zero() {
                    work.remove(&key);
                }
            }
        }
        out
    }

    /// Alternative reduction used only to cross-check confluence: peels one
    /// application of the degree-`d` relation at a time instead of the
    /// closed-form `β` rewrite.
    pub(crate) fn normal_form_stepwise(&self, ctx: &BlowupContext) -> Self {
        let d = ctx.codim();
        let dim = ctx.center_dim();
        let mut work = self.coeffs.clone();
        let mut out = Self::zero();
        while let Some((&(p, q), _)) = work.iter().max_by_key(|(&(_, q), _)| q) {
            let c = work.remove(&(p, q)).expect("key just observed");
            if q < d {
                if p <= dim && !c.is_zero() {
                    out.insert((p, q), c);
                }
                continue;
            }
            // zeta^q = zeta^{q-d} * (sigma_1 h zeta^{d-1} - ... + (-1)^{d-1} sigma_d h^d)
            for r in 1..=d {
                let coeff = &c * neg_one_pow(r as i64 - 1) * ctx.sigma(r as i64);
                if coeff.is_zero() {
                    continue;
                }
                let key = (p + r, q - r);
                let entry = work.entry(key).or_default();
                *entry += coeff;
                if entry.is_zero() {
                    work.remove(&key);
                }
            }
        }
        out
    }
}

/// `c_i(N)` for `i = 0..=d`, the Chern classes of the normal bundle of the
/// center: `σ_i h^i` in normal form.
pub fn chern_normal(ctx: &BlowupContext) -> Vec<ExceptionalClass> {
    (0..=ctx.codim())
        .map(|i| ExceptionalClass::monomial(i, 0, ctx.sigma(i as i64)).normal_form(ctx))
        .collect()
}

/// `c_i(T_W)` for `i = 0..=n-d`: `τ_i h^i`.
pub fn chern_tangent_center(ctx: &BlowupContext) -> Vec<ExceptionalClass> {
    (0..=ctx.center_dim())
        .map(|i| ExceptionalClass::monomial(i, 0, ctx.tau(i as i64)).normal_form(ctx))
        .collect()
}

/// `c_i(E)` of the exceptional divisor, in normal form:
/// `Σ_{|a|<=i} (-1)^{i-|a|} C(d-a1, i-|a|) σ_{a1} τ_{a2} h^{|a|} ζ^{i-|a|}`.
pub fn chern_exceptional(i: u32, ctx: &BlowupContext) -> ExceptionalClass {
    assert!(i < ctx.n(), "chern_exceptional: i={i} exceeds dim E");
    let d = ctx.codim() as i64;
    let i = i as i64;
    let mut out = ExceptionalClass::zero();
    for s in 0..=i {
        for a1 in 0..=s.min(d) {
            let a2 = s - a1;
            let c = neg_one_pow(i - s) * binomial(d - a1, i - s) * ctx.sigma(a1) * ctx.tau(a2);
            out = out.add(&ExceptionalClass::monomial(s as u32, (i - s) as u32, c));
        }
    }
    out.normal_form(ctx)
}

/// Exact integral over `E`. Brings the class to normal form and pairs the
/// coefficient of `h^{n-d} ζ^{d-1}` with `(-1)^{d-1} deg(W)`; graded pieces
/// of total degree other than `n-1` contribute nothing.
pub fn integrate_e(c: &ExceptionalClass, ctx: &BlowupContext) -> BigInt {
    let nf = c.normal_form(ctx);
    let top = nf.coeff(ctx.center_dim(), ctx.codim() - 1);
    top * neg_one_pow(ctx.codim() as i64 - 1) * ctx.deg()
}

/// Integral over the blowup of `(π*h)^a · E^b` with `a + b = n`.
/// `E^b = ι_*(ζ^{b-1})` for `b >= 1`, so the integral restricts to `E`.
pub fn integrate_blowup(a: u32, b: u32, ctx: &BlowupContext) -> BigInt {
    assert!(
        a + b == ctx.n(),
        "integrate_blowup: a+b must equal n={}, got a={a} b={b}",
        ctx.n()
    );
    if b == 0 {
        return BigInt::one();
    }
    integrate_e(&ExceptionalClass::monomial(a, b - 1, BigInt::one()), ctx)
}

/// Class on the full blowup, stored as `π*f(h) + ι_*(X)` with `f` a
/// polynomial in the hyperplane pullback and `X` a class on `E`. Products
/// use the projection formula and the self-intersection `ι*E = ζ`:
///
/// ```text
/// (π*f + ι_*X)(π*g + ι_*Y) = π*(fg) + ι_*(ρ*g·X + ρ*f·Y + ζ·X·Y).
/// ```
#[derive(Debug, Clone)]
pub struct BlowupClass {
    /// Coefficient of `(π*h)^p` at index `p`; powers above `n` vanish.
    pullback: Vec<BigInt>,
    /// The `X` in `ι_*(X)`.
    exceptional: ExceptionalClass,
}

impl BlowupClass {
    pub fn zero(ctx: &BlowupContext) -> Self {
        Self {
            pullback: vec![BigInt::zero(); ctx.n() as usize + 1],
            exceptional: ExceptionalClass::zero(),
        }
    }

    pub fn one(ctx: &BlowupContext) -> Self {
        let mut out = Self::zero(ctx);
        out.pullback[0] = BigInt::one();
        out
    }

    /// `c · (π*h)^p`.
    pub fn pullback_h(p: u32, c: BigInt, ctx: &BlowupContext) -> Self {
        let mut out = Self::zero(ctx);
        if (p as usize) < out.pullback.len() {
            out.pullback[p as usize] = c;
        }
        out
    }

    /// The exceptional divisor class `E = ι_*(1)`.
    pub fn e_divisor(ctx: &BlowupContext) -> Self {
        Self::from_pushforward(ExceptionalClass::one(), ctx)
    }

    /// `ι_*(x)` for a class `x` on `E`.
    pub fn from_pushforward(x: ExceptionalClass, ctx: &BlowupContext) -> Self {
        let mut out = Self::zero(ctx);
        out.exceptional = x.normal_form(ctx);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut pullback = self.pullback.clone();
        for (dst, src) in pullback.iter_mut().zip(&other.pullback) {
            *dst += src;
        }
        Self {
            pullback,
            exceptional: self.exceptional.add(&other.exceptional),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self {
            pullback: self.pullback.iter().map(|c| c * s).collect(),
            exceptional: self.exceptional.scale(s),
        }
    }

    /// Restriction of the pullback part to `E`: `ρ*f` as a class on `E`.
    fn restricted_pullback(&self) -> ExceptionalClass {
        let mut out = ExceptionalClass::zero();
        for (p, c) in self.pullback.iter().enumerate() {
            out = out.add(&ExceptionalClass::monomial(p as u32, 0, c.clone()));
        }
        out
    }

    pub fn mul(&self, other: &Self, ctx: &BlowupContext) -> Self {
        let n = ctx.n() as usize;
        let mut pullback = vec![BigInt::zero(); n + 1];
        for (p1, c1) in self.pullback.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (p2, c2) in other.pullback.iter().enumerate() {
                if p1 + p2 <= n {
                    pullback[p1 + p2] += c1 * c2;
                }
            }
        }
        let f = self.restricted_pullback();
        let g = other.restricted_pullback();
        let zeta = ExceptionalClass::zeta_pow(1);
        let exceptional = self
            .exceptional
            .mul(&g)
            .add(&other.exceptional.mul(&f))
            .add(&self.exceptional.mul(&other.exceptional).mul(&zeta))
            .normal_form(ctx);
        Self {
            pullback,
            exceptional,
        }
    }

    pub fn pow(&self, e: u32, ctx: &BlowupContext) -> Self {
        let mut out = Self::one(ctx);
        for _ in 0..e {
            out = out.mul(self, ctx);
        }
        out
    }

    /// `∫ π*f + ∫_E X`: coefficient of `(π*h)^n` plus the `E`-integral.
    pub fn integrate(&self, ctx: &BlowupContext) -> BigInt {
        self.pullback[ctx.n() as usize].clone() + integrate_e(&self.exceptional, ctx)
    }
}

/// `c_1` of the dual tangent sheaf of the strict transform:
/// `π*((k-1)h) - ℓE`.
fn dual_tangent_class(k: u32, ell: u32, ctx: &BlowupContext) -> BlowupClass {
    let pullback = BlowupClass::pullback_h(1, BigInt::from(k) - BigInt::one(), ctx);
    let exc = BlowupClass::from_pushforward(ExceptionalClass::constant(-BigInt::from(ell)), ctx);
    pullback.add(&exc)
}

/// `c_j` of the tangent bundle of the blowup as a [`BlowupClass`]:
/// `C(n+1,j) (π*h)^j` plus the Porteous correction pushed forward from `E`.
fn chern_blowup_tangent(j: u32, ctx: &BlowupContext) -> BlowupClass {
    let n = ctx.n() as i64;
    let d = ctx.codim() as i64;
    let j = j as i64;
    let mut out = BlowupClass::pullback_h(j as u32, binomial(n + 1, j), ctx);
    let mut corr = ExceptionalClass::zero();
    for s in 0..=(j - 1) {
        for a1 in 0..=s.min(d) {
            let a2 = s - a1;
            let c = neg_one_pow(j - s - 1) * gamma(j, a1, a2, d) * ctx.sigma(a1) * ctx.tau(a2);
            // E^{j-s} = iota_*(zeta^{j-s-1})
            corr = corr.add(&ExceptionalClass::monomial(s as u32, (j - s - 1) as u32, c));
        }
    }
    out = out.add(&BlowupClass::from_pushforward(corr, ctx));
    out
}

/// Count of singularities of the strict transform on the whole blowup,
/// assembled purely from class arithmetic:
/// `Σ_j ∫ c_j(T) · c_1(L*)^{n-j}`.
pub fn count_total_via_classes(k: u32, ell: u32, ctx: &BlowupContext) -> BigInt {
    let n = ctx.n();
    let l_star = dual_tangent_class(k, ell, ctx);
    let mut powers = Vec::with_capacity(n as usize + 1);
    powers.push(BlowupClass::one(ctx));
    for _ in 1..=n {
        let next = powers.last().expect("non-empty").mul(&l_star, ctx);
        powers.push(next);
    }
    let mut total = BigInt::zero();
    for j in 0..=n {
        let cj = chern_blowup_tangent(j, ctx);
        total += cj.mul(&powers[(n - j) as usize], ctx).integrate(ctx);
    }
    total
}

/// Count of singularities of the strict transform on the exceptional
/// divisor: `Σ_i ∫_E c_i(E) · ((k-1)h - ℓζ)^{n-1-i}`.
pub fn count_exceptional_via_classes(k: u32, ell: u32, ctx: &BlowupContext) -> BigInt {
    let n = ctx.n();
    // restriction of the dual tangent class to E
    let l_star = ExceptionalClass::monomial(1, 0, BigInt::from(k) - BigInt::one())
        .add(&ExceptionalClass::monomial(0, 1, -BigInt::from(ell)));
    let mut powers = Vec::with_capacity(n as usize);
    powers.push(ExceptionalClass::one());
    for _ in 1..n {
        let next = powers
            .last()
            .expect("non-empty")
            .mul(&l_star)
            .normal_form(ctx);
        powers.push(next);
    }
    let mut total = BigInt::zero();
    for i in 0..=(n - 1) {
        let ci = chern_exceptional(i, ctx);
        total += integrate_e(&ci.mul(&powers[(n - 1 - i) as usize]), ctx);
    }
    total
}

/// The component contribution `ν` assembled from class arithmetic alone:
/// total blowup count, minus the exceptional count, minus the count for
/// plain projective space (the `E`-free part of the same integral). This is
/// the oracle the closed-form evaluation is checked against.
pub fn nu_via_classes(k: u32, ell: u32, ctx: &BlowupContext) -> BigInt {
    let n = ctx.n() as i64;
    let k_minus_1 = BigInt::from(k) - BigInt::one();
    let mut plain = BigInt::zero();
    for j in 0..=n {
        plain += binomial(n + 1, j) * k_minus_1.pow((n - j) as u32);
    }
    count_total_via_classes(k, ell, ctx) - count_exceptional_via_classes(k, ell, ctx) - plain
}
