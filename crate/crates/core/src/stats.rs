//! Numeric building blocks shared across the crate: compensated summation,
//! sample moments, the standard normal CDF, and Kolmogorov-Smirnov sweeps.

use crate::scalar::{cast, Scalar};

/// Kahan compensated accumulator. Long oracle sums (up to `10^8` terms)
/// must stay accurate to `1e-10` relative, which a plain fold does not
/// guarantee.
#[derive(Debug, Clone, Copy)]
pub struct KahanSum<F: Scalar> {
    sum: F,
    err: F,
}

impl<F: Scalar> Default for KahanSum<F> {
    fn default() -> Self {
        Self { sum: F::zero(), err: F::zero() }
    }
}

impl<F: Scalar> KahanSum<F> {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: F) {
        let y = v - self.err;
        let t = self.sum + y;
        self.err = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> F {
        self.sum
    }
}

/// Compensated sum of an iterator.
pub fn kahan_sum<F: Scalar, I: IntoIterator<Item = F>>(iter: I) -> F {
    let mut acc = KahanSum::new();
    for v in iter {
        acc.add(v);
    }
    acc.value()
}

/// Two-pass sample mean and unbiased variance, both compensated.
/// Returns `(mean, variance)`; variance is 0 for fewer than two values.
pub fn mean_variance<F: Scalar>(values: &[F]) -> (F, F) {
    let n = values.len();
    if n == 0 {
        return (F::zero(), F::zero());
    }
    let mean = kahan_sum(values.iter().copied()) / cast(n);
    if n < 2 {
        return (mean, F::zero());
    }
    let ss = kahan_sum(values.iter().map(|&v| (v - mean) * (v - mean)));
    (mean, ss / cast(n - 1))
}

/// Central fourth moment, used for the standard error of a variance
/// estimate: `Var(s^2) ~ (m4 - s^4)/reps`.
pub fn central_fourth_moment<F: Scalar>(values: &[F], mean: F) -> F {
    if values.is_empty() {
        return F::zero();
    }
    let s = kahan_sum(values.iter().map(|&v| {
        let d = v - mean;
        d * d * d * d
    }));
    s / cast(values.len())
}

const LOG_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

/// Standard normal CDF, absolute error below `1e-14`.
///
/// Uses the series `Phi(z) = 1/2 + phi(z) (z + z^3/3 + z^5/(3*5) + ...)`
/// in the body and a Mills-ratio expansion in the far tails.
pub fn normal_cdf(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    let a = z.abs();
    if a > 37.0 {
        return if z > 0.0 { 1.0 } else { 0.0 };
    }
    if a > 7.5 {
        // Mills ratio: Q(a) = phi(a)/a * (1 - 1/a^2 + 3/a^4 - 15/a^6 + 105/a^8)
        let inv2 = 1.0 / (a * a);
        let series = 1.0 - inv2 * (1.0 - 3.0 * inv2 * (1.0 - 5.0 * inv2 * (1.0 - 7.0 * inv2)));
        let q = (-0.5 * a * a - LOG_SQRT_2PI).exp() / a * series;
        return if z > 0.0 { 1.0 - q } else { q };
    }
    let q = z * z;
    let mut b = z;
    let mut s = z;
    let mut t = 0.0;
    let mut i = 1.0;
    while s != t {
        t = s;
        i += 2.0;
        b *= q / i;
        s += b;
    }
    0.5 + s * (-0.5 * q - LOG_SQRT_2PI).exp()
}

/// One-sample Kolmogorov-Smirnov statistic against a reference CDF.
///
/// `sorted` must be ascending; the sweep computes
/// `sup_u |F_emp(u) - cdf(u)|` exactly at the jump points.
pub fn ks_one_sample<F: Scalar>(sorted: &[F], cdf: impl Fn(f64) -> f64) -> f64 {
    let n = sorted.len();
    assert!(n > 0, "empty sample");
    let nf = n as f64;
    let mut d = 0.0f64;
    for (i, &v) in sorted.iter().enumerate() {
        let f = cdf(v.to_f64().expect("finite sample value"));
        let hi = (i + 1) as f64 / nf - f;
        let lo = f - i as f64 / nf;
        d = d.max(hi).max(lo);
    }
    d
}

/// Two-sample Kolmogorov-Smirnov statistic (both inputs ascending).
/// Ties are consumed on both sides before the ECDF gap is measured.
pub fn ks_two_sample<F: Scalar>(a: &[F], b: &[F]) -> f64 {
    assert!(!a.is_empty() && !b.is_empty(), "empty sample");
    let (mut i, mut j) = (0usize, 0usize);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let mut d = 0.0f64;
    while i < a.len() || j < b.len() {
        let v = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => {
                if x <= y {
                    x
                } else {
                    y
                }
            }
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => unreachable!(),
        };
        while i < a.len() && a[i] <= v {
            i += 1;
        }
        while j < b.len() && b[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Dvoretzky-Kiefer-Wolfowitz tail bound `2 exp(-2 n d^2)`: a conservative
/// p-value for a one-sample KS statistic `d` at sample size `n`.
pub fn dkw_p_bound(n: usize, d: f64) -> f64 {
    (2.0 * (-2.0 * n as f64 * d * d).exp()).min(1.0)
}

/// Critical KS distance at confidence `alpha` from the DKW inequality:
/// `P(D > eps) <= alpha` for `eps = sqrt(ln(2/alpha) / (2n))`.
pub fn dkw_critical(n: usize, alpha: f64) -> f64 {
    ((2.0 / alpha).ln() / (2.0 * n as f64)).sqrt()
}

/// Sorts a sample ascending, panicking on NaN (samples here never contain
/// NaN; a NaN would poison the KS sweep silently otherwise).
pub fn sort_sample<F: Scalar>(values: &mut [F]) {
    values.sort_by(|a, b| a.partial_cmp(b).expect("NaN in sample"));
}
