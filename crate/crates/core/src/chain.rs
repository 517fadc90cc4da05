//! The reversible Metropolis-Hastings chain on `E = [-1, 1]`.
//!
//! Transition kernel: from `x` the chain stays put with probability
//! `1 - |x|` and otherwise jumps to a fresh draw from the measure
//! `nu(dx) = |x| dx`. The invariant law is uniform on `[-1, 1]` and the
//! chain is reversible. For any odd functional `g` the kernel acts as
//! `(Q g)(x) = (1 - |x|) g(x)`, which makes every conditional expectation
//! used downstream available in closed form.
//!
//! The shipped functional is `f = sign` with `sign(0) = 0`, so the
//! observable sequence is `X_i = sign(xi_i)` and `E(X_k | xi_0 = x) =
//! (1 - |x|)^k sign(x)`.

use crate::error::Error;
use crate::rng::RngStream;
use crate::scalar::{cast, Scalar};

/// Below this `|x|` the geometric closed forms switch to truncated series
/// to avoid 0/0 cancellation near the fixed point at the origin.
pub const EPS_GEO: f64 = 1e-8;

/// A point of the state space `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainState<F: Scalar>(F);

impl<F: Scalar> ChainState<F> {
    /// Validates `|x| <= 1`.
    pub fn new(x: F) -> Result<Self, Error> {
        if x.abs() <= F::one() {
            Ok(Self(x))
        } else {
            Err(Error::InvalidState(format!("state {x} outside [-1, 1]")))
        }
    }

    /// Wraps a value known to lie in `[-1, 1]` (sampler outputs).
    #[inline]
    pub(crate) fn new_unchecked(x: F) -> Self {
        debug_assert!(x.abs() <= F::one());
        Self(x)
    }

    #[inline]
    pub fn value(self) -> F {
        self.0
    }

    #[inline]
    pub fn abs(self) -> F {
        self.0.abs()
    }

    /// `sign(x)` with `sign(0) = 0`; this is the shipped odd functional
    /// evaluated at the state.
    #[inline]
    pub fn sign(self) -> F {
        sign(self.0)
    }
}

/// `sign` with `sign(0) = 0`, preserving oddness exactly.
#[inline]
pub fn sign<F: Scalar>(x: F) -> F {
    if x > F::zero() {
        F::one()
    } else if x < F::zero() {
        -F::one()
    } else {
        F::zero()
    }
}

/// An odd function on `[-1, 1]`: `eval(-x) = -eval(x)`.
pub trait OddFunction<F: Scalar> {
    fn eval(&self, x: F) -> F;
}

/// The shipped functional `f(x) = sign(x)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SignFunction;

impl<F: Scalar> OddFunction<F> for SignFunction {
    #[inline]
    fn eval(&self, x: F) -> F {
        sign(x)
    }
}

impl<F: Scalar, G: Fn(F) -> F> OddFunction<F> for G {
    #[inline]
    fn eval(&self, x: F) -> F {
        self(x)
    }
}

/// Draws from the jump measure `nu(dx) = |x| dx` by inverse CDF:
/// `u < 1/2` maps to `-sqrt(1 - 2u)`, else `sqrt(2u - 1)`.
pub fn sample_nu<F: Scalar>(rng: &mut RngStream) -> ChainState<F> {
    let u = rng.uniform();
    let x = if u < 0.5 { -(1.0 - 2.0 * u).sqrt() } else { (2.0 * u - 1.0).sqrt() };
    ChainState::new_unchecked(cast(x))
}

/// Draws from the invariant measure `pi = Uniform[-1, 1]`.
pub fn sample_pi<F: Scalar>(rng: &mut RngStream) -> ChainState<F> {
    ChainState::new_unchecked(cast(2.0 * rng.uniform() - 1.0))
}

/// One kernel step: stay at `x` with probability `1 - |x|`, otherwise
/// jump to a fresh `nu` draw.
pub fn step<F: Scalar>(x: ChainState<F>, rng: &mut RngStream) -> ChainState<F> {
    let u: F = cast(rng.uniform());
    if u < x.abs() {
        sample_nu(rng)
    } else {
        x
    }
}

/// `E(f(xi_k) | xi_0 = x) = (1 - |x|)^k sign(x)` for the sign functional.
pub fn q_power_f<F: Scalar>(x: ChainState<F>, k: u64) -> F {
    let hold = F::one() - x.abs();
    sign(x.value()) * powu(hold, k)
}

/// Kernel applied to an odd function: `(Q g)(x) = (1 - |x|) g(x)`.
/// The `nu`-average of `g` vanishes because `nu` is symmetric and `g` odd.
pub fn apply_q_odd<F: Scalar>(g: &impl OddFunction<F>, x: ChainState<F>) -> F {
    (F::one() - x.abs()) * g.eval(x.value())
}

/// `E(S_{k+n} - S_k | xi_k = x) = sum_{j=1}^n (1 - |x|)^j sign(x)`.
///
/// Closed form `sign(x) r (1 - r^n)/(1 - r)` with `r = 1 - |x|`, evaluated
/// through `exp_m1`/`ln_1p`; a truncated binomial series takes over for
/// `|x| <= EPS_GEO` where the division by `|x|` loses all precision.
pub fn cond_sum<F: Scalar>(x: ChainState<F>, n: u64) -> F {
    assert!(n >= 1, "cond_sum requires n >= 1");
    sign(x.value()) * geometric_partial_sum(x.abs(), n)
}

/// `sum_{j=1}^n (1 - a)^j` for `a` in `[0, 1]`.
pub(crate) fn geometric_partial_sum<F: Scalar>(a: F, n: u64) -> F {
    debug_assert!(a >= F::zero() && a <= F::one());
    if a <= F::zero() {
        return cast(n);
    }
    if a >= F::one() {
        return F::zero();
    }
    if a > cast(EPS_GEO) {
        // r (1 - r^n) / a with 1 - r^n = -expm1(n ln(1-a)), stable for
        // n a small where the naive power form cancels.
        let nf: F = cast(n);
        let one_minus_rn = -(nf * (-a).ln_1p()).exp_m1();
        (F::one() - a) * one_minus_rn / a
    } else {
        // sum_{k>=0} (-a)^k C(n+1, k+1) - 1, hockey-stick expansion of the
        // binomial double sum; converges at rate n a <= n * EPS_GEO. The
        // running term is the pure binomial piece, the -1 lands once.
        let mut term: F = cast(n + 1); // (-a)^0 C(n+1, 1)
        let mut acc = KahanLocal::new(term - F::one());
        let mut k: u64 = 0;
        while k < n {
            let factor = a * cast::<F, _>(n - k) / cast::<F, _>(k + 2);
            term = -term * factor;
            acc.add(term);
            k += 1;
            if term.abs() <= acc.value().abs() * F::epsilon() {
                break;
            }
        }
        acc.value()
    }
}

/// `r^k` by squaring; `Float::powi` takes `i32`, horizons may exceed it.
pub(crate) fn powu<F: Scalar>(base: F, mut exp: u64) -> F {
    let mut acc = F::one();
    let mut b = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b;
        }
        b = b * b;
        exp >>= 1;
    }
    acc
}

// Minimal local compensated accumulator to keep this module free of the
// stats dependency cycle.
struct KahanLocal<F: Scalar> {
    sum: F,
    err: F,
}

impl<F: Scalar> KahanLocal<F> {
    fn new(first: F) -> Self {
        Self { sum: first, err: F::zero() }
    }
    #[inline]
    fn add(&mut self, v: F) {
        let y = v - self.err;
        let t = self.sum + y;
        self.err = (t - self.sum) - y;
        self.sum = t;
    }
    fn value(&self) -> F {
        self.sum
    }
}
