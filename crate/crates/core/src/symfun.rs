//! Symmetric-function vocabulary over arbitrary-precision integers.
//!
//! Everything downstream (Chern classes of complete intersections, blowup
//! integrals, singularity counts) is a polynomial expression in three
//! families evaluated at a multidegree `(k_1, …, k_d)`:
//!
//! * `wronski(δ)` — the complete homogeneous symmetric function `W_δ`,
//! * `elementary(i)` — the elementary symmetric function `σ_i`,
//! * `tau(i)` — the degree-`i` coefficient of `(1+h)^{n+1} / ∏(1+k_j h)`,
//!   i.e. the Chern coefficient of the tangent bundle of the complete
//!   intersection cut out by the multidegree.
//!
//! Out-of-range indices uniformly evaluate to zero, matching the binomial
//! convention `C(p,q) = 0` for `p < q` or `q < 0` that the closed-form
//! counting formulas rely on.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// Multidegree `(k_1, …, k_d)` of a smooth complete intersection: `d`
/// hypersurface degrees, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    degrees: Vec<u32>,
    deg: BigInt,
}

impl MultiDegree {
    /// Builds a multidegree, validating `d ≥ 1` and every `k_j ≥ 1`.
    pub fn new(degrees: Vec<u32>) -> Result<Self, Error> {
        if degrees.is_empty() {
            return Err(Error::invalid("w", "multidegree must have length >= 1"));
        }
        if degrees.contains(&0) {
            return Err(Error::invalid("w", "multidegree entries must be >= 1"));
        }
        let deg = degrees.iter().map(|&k| BigInt::from(k)).product();
        Ok(Self { degrees, deg })
    }

    /// The linear multidegree `(1, …, 1)` of length `d`.
    pub fn all_ones(d: usize) -> Self {
        Self::new(vec![1; d]).expect("d >= 1")
    }

    /// Codimension `d` of the complete intersection.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: d >= 1
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `deg(W) = ∏ k_j`, cached at construction.
    pub fn degree(&self) -> &BigInt {
        &self.deg
    }
}

impl std::fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Binomial coefficient with the vanishing convention: returns 0 when
/// `p < q` or `q < 0`. Negative `p` is a caller bug and panics.
pub fn binomial(p: i64, q: i64) -> BigInt {
    assert!(p >= 0, "binomial: negative upper index {p}");
    if q < 0 || q > p {
        return BigInt::zero();
    }
    let q = q.min(p - q);
    let mut acc = BigInt::one();
    for t in 0..q {
        acc = acc * BigInt::from(p - t) / BigInt::from(t + 1);
    }
    acc
}

/// `(-1)^e` as a `BigInt` sign, defined for any integer exponent.
pub(crate) fn neg_one_pow(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Complete homogeneous symmetric function over a raw degree slice.
/// Entries may be zero here (the Soares count evaluates at `d_i - 1`).
pub(crate) fn wronski_slice(delta: i64, ks: &[u32]) -> BigInt {
    if delta < 0 {
        return BigInt::zero();
    }
    let delta = delta as usize;
    // One variable at a time: W_δ(k_1..k_j) = W_δ(k_1..k_{j-1}) + k_j·W_{δ-1}(k_1..k_j).
    let mut row = vec![BigInt::zero(); delta + 1];
    row[0] = BigInt::one();
    for &k in ks {
        let k = BigInt::from(k);
        for t in 1..=delta {
            let carry = &row[t - 1] * &k;
            row[t] += carry;
        }
    }
    row.pop().expect("row is non-empty")
}

/// Elementary symmetric function over a raw degree slice.
pub(crate) fn elementary_slice(i: i64, ks: &[u32]) -> BigInt {
    if i < 0 || i as usize > ks.len() {
        return BigInt::zero();
    }
    let i = i as usize;
    let mut row = vec![BigInt::zero(); i + 1];
    row[0] = BigInt::one();
    for &k in ks {
        let k = BigInt::from(k);
        for t in (1..=i).rev() {
            let carry = &row[t - 1] * &k;
            row[t] += carry;
        }
    }
    row.pop().expect("row is non-empty")
}

/// Wronski (complete homogeneous) symmetric function `W_δ(k_1, …, k_d)`.
/// Returns 0 for `δ < 0` and 1 for `δ = 0`.
pub fn wronski(delta: i64, md: &MultiDegree) -> BigInt {
    wronski_slice(delta, md.degrees())
}

/// Elementary symmetric function `σ_i(k_1, …, k_d)`.
/// Returns 1 for `i = 0` and 0 for `i < 0` or `i > d`.
pub fn elementary(i: i64, md: &MultiDegree) -> BigInt {
    elementary_slice(i, md.degrees())
}

/// Tangent-bundle Chern coefficient of the complete intersection:
/// `τ_i = Σ_{j=0}^{i} (-1)^j C(n+1, i-j) W_j`, equal to the coefficient of
/// `h^i` in `(1+h)^{n+1} / ∏(1+k_j h)`.
pub fn tau(i: i64, n: u32, md: &MultiDegree) -> BigInt {
    assert!(
        n as usize >= md.len(),
        "tau: ambient dimension {n} below codimension {}",
        md.len()
    );
    if i < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for j in 0..=i {
        acc += neg_one_pow(j) * binomial(n as i64 + 1, i - j) * wronski(j, md);
    }
    acc
}

/// Power-series reference for `tau`: expands `(1+h)^{n+1} / ∏(1+k_j h)`
/// term by term and reads off a coefficient. Kept separate from `tau` so
/// the verification suite has an independent route.
pub(crate) fn tau_series_oracle(i: i64, n: u32, md: &MultiDegree) -> BigInt {
    if i < 0 {
        return BigInt::zero();
    }
    let len = i as usize + 1;
    // numerator (1+h)^{n+1}
    let mut series: Vec<BigInt> = (0..len).map(|e| binomial(n as i64 + 1, e as i64)).collect();
    // divide by each (1 + k_j h): c'_e = c_e - k_j c'_{e-1}
    for &k in md.degrees() {
        let k = BigInt::from(k);
        for e in 1..len {
            let carry = &series[e - 1] * &k;
            series[e] -= carry;
        }
    }
    series.pop().expect("series is non-empty")
}

/// Brute-force Wronski by enumerating exponent tuples; test oracle only.
#[cfg(test)]
pub(crate) fn wronski_enumerate(delta: i64, md: &MultiDegree) -> BigInt {
    fn go(ks: &[u32], delta: i64) -> BigInt {
        match ks {
            [] => {
                if delta == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            [k, rest @ ..] => {
                let mut acc = BigInt::zero();
                for e in 0..=delta {
                    acc += BigInt::from(*k).pow(e as u32) * go(rest, delta - e);
                }
                acc
            }
        }
    }
    if delta < 0 {
        return BigInt::zero();
    }
    go(md.degrees(), delta)
}
