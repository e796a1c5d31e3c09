//! Matching energy `ME(G)`, the sum of absolute values of the zeros of the
//! matching polynomial.
//!
//! Two independent routes are provided: exact root isolation of the
//! polynomial in `y = x^2`, and the Coulson-type integral
//! `ME = (2/pi) * int_0^inf x^-2 ln(sum_k m_k x^(2k)) dx`.
//!
//! The integral is split at `x = 1`; the tail is mapped by `u = 1/x`, under
//! which `x^-2 dx` becomes `du` and the integrand becomes
//! `-2 nu ln u + ln(sum_k m_k u^(2(nu - k)))` with `nu` the matching number.
//! The logarithmic endpoint term integrates to exactly `2 nu`, leaving a
//! smooth remainder for the adaptive rule.

pub mod quadrature;
pub mod roots;

use std::f64::consts::FRAC_2_PI;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

pub use quadrature::{integrate, Integral, QuadratureSettings};

use crate::error::{Error, Result};
use crate::matching::MatchVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Roots,
    Quadrature,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Roots => "roots",
            Method::Quadrature => "quadrature",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnergyResult {
    pub value: f64,
    pub method: Method,
    pub error_estimate: f64,
    /// For the root method: the nonnegative zeros `mu_i` of the matching
    /// polynomial, one per root of the squared polynomial, ascending.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<f64>>,
}

/// Natural log of a big integer without overflowing `f64`.
pub(crate) fn ln_big(c: &BigUint) -> f64 {
    let bits = c.bits();
    if bits < 1000 {
        c.to_f64().expect("fits").ln()
    } else {
        let shift = bits - 64;
        (c >> shift).to_f64().expect("fits").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// `(k, ln m_k)` for every nonzero count, precomputed for repeated evaluation.
#[derive(Clone, Debug)]
pub(crate) struct LogCounts {
    terms: Vec<(usize, f64)>,
    nu: usize,
}

impl LogCounts {
    pub(crate) fn new(mv: &MatchVector) -> Self {
        let terms: Vec<(usize, f64)> = mv
            .counts()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, ln_big(c)))
            .collect();
        LogCounts {
            nu: mv.matching_number(),
            terms,
        }
    }

    /// `ln sum_k m_k x^(2k)` for `x > 0`. The dominant term is factored out
    /// and the rest summed through `ln_1p`, which keeps full relative
    /// accuracy both for huge coefficients and as `x -> 0`.
    pub(crate) fn ln_even_series(&self, x: f64) -> f64 {
        let lx2 = 2.0 * x.ln();
        logsumexp(self.terms.iter().map(|&(k, lc)| lc + k as f64 * lx2))
    }

    /// `ln sum_k m_k u^(2(nu - k))`, the smooth part of the tail integrand.
    pub(crate) fn ln_reversed_series(&self, u: f64) -> f64 {
        if u == 0.0 {
            return self.terms.last().map_or(0.0, |t| t.1);
        }
        let lu2 = 2.0 * u.ln();
        logsumexp(self.terms.iter().map(|&(k, lc)| lc + (self.nu - k) as f64 * lu2))
    }
}

fn logsumexp<I: Iterator<Item = f64> + Clone>(xs: I) -> f64 {
    let top = xs.clone().fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return top;
    }
    // Exactly one exp(0) term is dropped so ln_1p sees only the remainder.
    let mut skipped = false;
    let rest: f64 = xs
        .filter(|&x| {
            if !skipped && x == top {
                skipped = true;
                false
            } else {
                true
            }
        })
        .map(|x| (x - top).exp())
        .sum();
    top + rest.ln_1p()
}

/// `ln sum_k m_k x^(2k)`, the logarithm inside the Coulson-type integrand.
pub fn log_poly_eval(mv: &MatchVector, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::arg(format!("log_poly_eval needs x > 0, got {x}")));
    }
    Ok(LogCounts::new(mv).ln_even_series(x))
}

/// Integrand of the head piece on `[0, 1]`, continuous at 0 with value `m_1`.
fn head_integrand(lc: &LogCounts, m1: f64, x: f64) -> f64 {
    if x == 0.0 {
        m1
    } else {
        lc.ln_even_series(x) / (x * x)
    }
}

pub fn me_quadrature(mv: &MatchVector, s: &QuadratureSettings) -> Result<EnergyResult> {
    let lc = LogCounts::new(mv);
    let m1 = mv.get(1).to_f64().unwrap_or(f64::INFINITY);
    let head = integrate(|x| head_integrand(&lc, m1, x), 0.0, 1.0, s).map_err(|e| scale_partial(e, 0.0))?;
    let tail = integrate(|u| lc.ln_reversed_series(u), 0.0, 1.0, s)
        .map_err(|e| scale_partial(e, head.value + 2.0 * lc.nu as f64))?;
    let value = FRAC_2_PI * (head.value + tail.value + 2.0 * lc.nu as f64);
    Ok(EnergyResult {
        value: value.max(0.0),
        method: Method::Quadrature,
        error_estimate: FRAC_2_PI * (head.error + tail.error),
        roots: None,
    })
}

fn scale_partial(e: Error, offset: f64) -> Error {
    match e {
        Error::Numeric { reason, partial } => Error::Numeric {
            reason,
            partial: partial.map(|p| FRAC_2_PI * (p + offset)),
        },
        other => other,
    }
}

/// Relative width to which each root of the squared polynomial is refined.
const ROOT_REL_WIDTH: f64 = 1e-15;

pub fn me_roots(mv: &MatchVector) -> Result<EnergyResult> {
    let nu = mv.n() / 2;
    // q(y) = sum_k (-1)^k m_k y^(nu - k), stored by ascending degree.
    let mut coeffs = vec![BigInt::zero(); nu + 1];
    for (k, c) in mv.counts().iter().enumerate() {
        let c = BigInt::from(c.clone());
        coeffs[nu - k] = if k % 2 == 0 { c } else { -c };
    }
    let brackets = roots::nonnegative_real_roots(&coeffs, ROOT_REL_WIDTH)?;
    let mut mus = Vec::with_capacity(nu);
    let mut value = 0.0;
    let mut err = 0.0;
    for b in &brackets {
        let mu = b.mid().sqrt();
        for _ in 0..b.multiplicity {
            mus.push(mu);
        }
        value += 2.0 * b.multiplicity as f64 * mu;
        err += 2.0 * b.multiplicity as f64 * (b.hi.sqrt() - b.lo.sqrt());
    }
    if mus.len() != nu {
        return Err(Error::numeric(
            format!("found {} roots, expected {nu}", mus.len()),
            Some(value),
        ));
    }
    Ok(EnergyResult {
        value,
        method: Method::Roots,
        error_estimate: err + 4.0 * f64::EPSILON * value,
        roots: Some(mus),
    })
}

/// `ME(a) - ME(b)` as a single integral of the log-ratio of the two count
/// series, which avoids cancellation between two nearly equal energies.
pub fn me_difference(a: &MatchVector, b: &MatchVector, s: &QuadratureSettings) -> Result<Integral> {
    if a.n() != b.n() {
        return Err(Error::arg(format!(
            "energy difference needs equal orders, got {} and {}",
            a.n(),
            b.n()
        )));
    }
    let la = LogCounts::new(a);
    let lb = LogCounts::new(b);
    let delta_m1 = a.get(1).to_f64().unwrap_or(f64::NAN) - b.get(1).to_f64().unwrap_or(f64::NAN);
    let head = integrate(
        |x| {
            if x == 0.0 {
                delta_m1
            } else {
                (la.ln_even_series(x) - lb.ln_even_series(x)) / (x * x)
            }
        },
        0.0,
        1.0,
        s,
    )
    .map_err(|e| scale_partial(e, 0.0))?;
    let log_gap = 2.0 * (la.nu as f64 - lb.nu as f64);
    let tail = integrate(|u| la.ln_reversed_series(u) - lb.ln_reversed_series(u), 0.0, 1.0, s)
        .map_err(|e| scale_partial(e, head.value + log_gap))?;
    Ok(Integral {
        value: FRAC_2_PI * (head.value + tail.value + log_gap),
        error: FRAC_2_PI * (head.error + tail.error),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(n: usize, c: &[u64]) -> MatchVector {
        MatchVector::from_u64s(n, c).unwrap()
    }

    fn s() -> QuadratureSettings {
        QuadratureSettings::default()
    }

    #[test]
    fn single_edge_is_two() {
        let e = me_quadrature(&mv(2, &[1, 1]), &s()).unwrap();
        assert!((e.value - 2.0).abs() < 1e-10, "{e:?}");
        let r = me_roots(&mv(2, &[1, 1])).unwrap();
        assert!((r.value - 2.0).abs() < 1e-14);
        assert_eq!(r.roots.unwrap(), vec![1.0]);
    }

    #[test]
    fn path_p4_roots() {
        let r = me_roots(&mv(4, &[1, 3, 1])).unwrap();
        assert!((r.value - 2.0 * 5f64.sqrt()).abs() < 1e-13);
        let q = me_quadrature(&mv(4, &[1, 3, 1]), &s()).unwrap();
        assert!((q.value - 2.0 * 5f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn published_energies() {
        let cases: [(&[u64], usize, f64); 3] = [
            (&[1, 12, 48, 76, 42, 5], 10, 13.8644),
            (&[1, 12, 48, 75, 42, 6], 10, 13.9042),
            (&[1, 13, 59, 114, 89, 21], 11, 14.9384),
        ];
        for (c, n, expected) in cases {
            let q = me_quadrature(&mv(n, c), &s()).unwrap();
            let r = me_roots(&mv(n, c)).unwrap();
            assert!((q.value - expected).abs() < 2e-3, "{c:?}: {}", q.value);
            assert!((q.value - r.value).abs() < 1e-8);
        }
    }

    #[test]
    fn edgeless_graph_has_zero_energy() {
        let e = me_quadrature(&mv(5, &[1]), &s()).unwrap();
        assert_eq!(e.value, 0.0);
        let r = me_roots(&mv(5, &[1])).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.roots.unwrap().len(), 2);
    }

    #[test]
    fn star_has_repeated_zero_roots() {
        // S_7: 6 edges, no two disjoint. ME = 2 sqrt 6.
        let r = me_roots(&mv(7, &[1, 6])).unwrap();
        assert!((r.value - 2.0 * 6f64.sqrt()).abs() < 1e-13);
        assert_eq!(r.roots.as_ref().unwrap().iter().filter(|&&m| m == 0.0).count(), 2);
    }

    #[test]
    fn log_poly_examples() {
        assert!((log_poly_eval(&mv(2, &[1, 1]), 1.0).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!((log_poly_eval(&mv(4, &[1, 6, 3]), 1.0).unwrap() - 10f64.ln()).abs() < 1e-15);
        let g10 = mv(10, &[1, 12, 48, 76, 42, 5]);
        for x in [1e-3, 1e-5, 1e-8] {
            let v = log_poly_eval(&g10, x).unwrap() / (x * x);
            assert!((v - 12.0).abs() < 100.0 * x * x + 1e-6, "{x}: {v}");
        }
        assert!(log_poly_eval(&g10, 0.0).is_err());
        // huge x does not overflow
        let v = log_poly_eval(&g10, 1e200).unwrap();
        assert!((v - (5f64.ln() + 10.0 * 1e200f64.ln())).abs() < 1e-9);
    }

    #[test]
    fn difference_examples() {
        let a = mv(10, &[1, 12, 48, 76, 42, 5]);
        let b = mv(10, &[1, 12, 48, 75, 42, 6]);
        assert_eq!(me_difference(&a, &a, &s()).unwrap().value, 0.0);
        let d = me_difference(&a, &b, &s()).unwrap().value;
        assert!((d + 0.0398).abs() < 1e-3);
        let back = me_difference(&b, &a, &s()).unwrap().value;
        assert!((d + back).abs() < 1e-12);
        let direct = me_quadrature(&a, &s()).unwrap().value - me_quadrature(&b, &s()).unwrap().value;
        assert!((d - direct).abs() < 1e-8);
        assert!(me_difference(&a, &mv(11, &[1]), &s()).is_err());
    }
}
