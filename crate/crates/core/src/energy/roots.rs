//! Exact real-root isolation for integer polynomials: square-free
//! decomposition, Sturm sequences, and bisection at dyadic points.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn is_zero_poly(p: &QPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn degree(p: &QPoly) -> usize {
    p.len() - 1
}

fn derivative(p: &QPoly) -> QPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let len = a.len().max(b.len());
    let z = BigRational::zero();
    trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

/// Quotient and remainder of polynomial long division.
fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    debug_assert!(!is_zero_poly(b));
    let db = degree(b);
    let lead = b[db].clone();
    let mut r = a.clone();
    if degree(a) < db {
        return (vec![BigRational::zero()], trim(r));
    }
    let mut q = vec![BigRational::zero(); degree(a) - db + 1];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = &r[i + j] - &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

fn monic(p: QPoly) -> QPoly {
    let lead = p.last().cloned().unwrap_or_else(BigRational::zero);
    if lead.is_zero() {
        return p;
    }
    p.into_iter().map(|c| c / &lead).collect()
}

fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !is_zero_poly(&y) {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Yun's algorithm: `p = prod f_i^i` with each `f_i` square-free and
/// pairwise coprime. Returns `(f_i, i)` for the nonconstant factors.
fn square_free_factors(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    if degree(p) == 0 {
        return out;
    }
    let dp = derivative(p);
    let a0 = gcd(p, &dp);
    let mut b = divrem(p, &a0).0;
    let c = divrem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while degree(&b) > 0 {
        let a = gcd(&b, &d);
        if degree(&a) > 0 {
            out.push((a.clone(), i));
        }
        let nb = divrem(&b, &a).0;
        let nc = divrem(&d, &a).0;
        d = sub(&nc, &derivative(&nb));
        b = nb;
        i += 1;
    }
    out
}

/// Scales a rational polynomial by a positive constant so every coefficient
/// is an integer. Signs of values are preserved.
fn integer_poly(p: &QPoly) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter().map(|c| (c.numer() * &l) / c.denom()).collect()
}

/// The dyadic rational `num / 2^exp`.
#[derive(Clone, Debug)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn from_int(v: BigInt) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        // (a + b) scaled by 2^exp, then halved by one more power of two.
        let exp = a.exp.max(b.exp);
        let num = (&a.num << (exp - a.exp) as usize) + (&b.num << (exp - b.exp) as usize);
        Dyadic { num, exp: exp + 1 }.reduce()
    }

    fn reduce(mut self) -> Dyadic {
        while self.exp > 0 && self.num.is_even() && !self.num.is_zero() {
            self.num >>= 1;
            self.exp -= 1;
        }
        if self.num.is_zero() {
            self.exp = 0;
        }
        self
    }

    fn to_f64(&self) -> f64 {
        let bits = self.num.bits() as i64;
        let shift = (bits - 60).max(0);
        let head = (&self.num >> shift as usize).to_f64().unwrap_or(f64::NAN);
        head * 2f64.powi((shift - self.exp as i64) as i32)
    }
}

/// Sign of `p(x)` for an integer polynomial at a dyadic point.
fn sign_at(p: &[BigInt], x: &Dyadic) -> Sign {
    let d = p.len() - 1;
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        acc = acc * &x.num + (&p[i] << (x.exp as usize * (d - i)));
    }
    acc.sign()
}

struct Sturm {
    chain: Vec<Vec<BigInt>>,
}

impl Sturm {
    fn new(p: &QPoly) -> Self {
        let mut chain_q = vec![p.clone(), derivative(p)];
        loop {
            let k = chain_q.len();
            if is_zero_poly(&chain_q[k - 1]) {
                chain_q.pop();
                break;
            }
            let (_, r) = divrem(&chain_q[k - 2], &chain_q[k - 1]);
            if is_zero_poly(&r) {
                break;
            }
            chain_q.push(r.into_iter().map(|c| -c).collect());
        }
        Sturm {
            chain: chain_q.iter().map(integer_poly).collect(),
        }
    }

    fn variations<I: Iterator<Item = Sign>>(signs: I) -> usize {
        let mut last = Sign::NoSign;
        let mut v = 0;
        for s in signs {
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn at(&self, x: &Dyadic) -> usize {
        Self::variations(self.chain.iter().map(|p| sign_at(p, x)))
    }

    fn at_neg_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let lead = p.last().expect("nonempty").sign();
            if (p.len() - 1) % 2 == 1 {
                -lead
            } else {
                lead
            }
        }))
    }
}

/// A positive real root bracketed by `lo < root <= hi`.
#[derive(Clone, Debug)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub multiplicity: usize,
}

impl Bracket {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Finds every root of the integer polynomial `coeffs` (ascending degree),
/// requiring all of them to be real and nonnegative. Returns brackets with
/// multiplicities summing to the degree; roots at zero come back as `[0, 0]`.
pub fn nonnegative_real_roots(coeffs: &[BigInt], rel_width: f64) -> Result<Vec<Bracket>> {
    let coeffs: Vec<BigInt> = {
        let mut c = coeffs.to_vec();
        while c.len() > 1 && c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        c
    };
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::arg("zero polynomial has no isolated roots"));
    }
    let zeros = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    let mut out = Vec::new();
    if zeros > 0 {
        out.push(Bracket {
            lo: 0.0,
            hi: 0.0,
            multiplicity: zeros,
        });
    }
    let reduced: QPoly = coeffs[zeros..]
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let reduced_degree = reduced.len() - 1;

    // Cauchy bound on root magnitude.
    let lead = reduced[reduced_degree].abs();
    let max_ratio = reduced[..reduced_degree]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    let bound = (max_ratio.to_integer() + BigInt::from(2)).max(BigInt::from(2));
    let upper = Dyadic::from_int(bound);
    let zero = Dyadic::from_int(BigInt::zero());

    let mut found = 0usize;
    for (factor, mult) in square_free_factors(&reduced) {
        let sturm = Sturm::new(&factor);
        let ip = integer_poly(&factor);
        let deg = factor.len() - 1;
        let v0 = sturm.at(&zero);
        let negatives = sturm.at_neg_infinity() - v0;
        if negatives > 0 {
            return Err(Error::numeric(
                format!("{negatives} negative root(s) in the squared variable"),
                None,
            ));
        }
        let positives = v0 - sturm.at(&upper);
        if positives != deg {
            return Err(Error::numeric(
                format!("{} of {deg} roots are not real", deg - positives),
                None,
            ));
        }
        let mut intervals = Vec::new();
        isolate(
            &sturm,
            zero.clone(),
            v0,
            upper.clone(),
            sturm.at(&upper),
            &ip,
            &mut intervals,
        );
        for (lo, hi) in intervals {
            let (lo, hi) = refine(&ip, lo, hi, rel_width);
            out.push(Bracket {
                lo,
                hi,
                multiplicity: mult,
            });
            found += mult;
        }
    }
    if found != reduced_degree {
        return Err(Error::numeric(
            format!("isolated {found} of {reduced_degree} roots"),
            None,
        ));
    }
    out.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    Ok(out)
}

/// Splits `(lo, hi]` until every piece holds exactly one root. Split points
/// that land exactly on a root are nudged so no endpoint is ever a root.
fn isolate(
    sturm: &Sturm,
    lo: Dyadic,
    v_lo: usize,
    hi: Dyadic,
    v_hi: usize,
    ip: &[BigInt],
    out: &mut Vec<(Dyadic, Dyadic)>,
) {
    let count = v_lo - v_hi;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push((lo, hi));
        return;
    }
    let mut mid = Dyadic::midpoint(&lo, &hi);
    while sign_at(ip, &mid) == Sign::NoSign {
        mid = Dyadic::midpoint(&mid, &hi);
    }
    let v_mid = sturm.at(&mid);
    isolate(sturm, lo, v_lo, mid.clone(), v_mid, ip, out);
    isolate(sturm, mid, v_mid, hi, v_hi, ip, out);
}

fn refine(ip: &[BigInt], mut lo: Dyadic, mut hi: Dyadic, rel_width: f64) -> (f64, f64) {
    let s_lo = sign_at(ip, &lo);
    debug_assert_ne!(s_lo, Sign::NoSign);
    for _ in 0..400 {
        let (flo, fhi) = (lo.to_f64(), hi.to_f64());
        if fhi - flo <= rel_width * fhi {
            break;
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        let s = sign_at(ip, &mid);
        if s == Sign::NoSign {
            let x = mid.to_f64();
            return (x, x);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo.to_f64(), hi.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(c: &[i64]) -> QPoly {
        c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn dyadic_midpoint() {
        let a = Dyadic::from_int(BigInt::from(1));
        let b = Dyadic::from_int(BigInt::from(2));
        let m = Dyadic::midpoint(&a, &b);
        assert_eq!(m.to_f64(), 1.5);
        let m2 = Dyadic::midpoint(&a, &m);
        assert_eq!(m2.to_f64(), 1.25);
    }

    #[test]
    fn square_free_decomposition() {
        // (y-1)^2 (y-2)
        let p = q(&[-2, 5, -4, 1]);
        let f = square_free_factors(&p);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].1, 1);
        assert_eq!(f[1].1, 2);
        assert_eq!(f[1].0, q(&[-1, 1]));
    }

    #[test]
    fn simple_roots() {
        // y^2 - 3y + 1: roots (3 ± sqrt 5)/2
        let r = nonnegative_real_roots(&ints(&[1, -3, 1]), 1e-15).unwrap();
        let s5 = 5f64.sqrt();
        assert!((r[0].mid() - (3.0 - s5) / 2.0).abs() < 1e-14);
        assert!((r[1].mid() - (3.0 + s5) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn exact_dyadic_root_and_zero_roots() {
        // y^2 (y - 1)
        let r = nonnegative_real_roots(&ints(&[0, 0, -1, 1]), 1e-15).unwrap();
        assert_eq!(r[0].multiplicity, 2);
        assert_eq!(r[0].hi, 0.0);
        assert!((r[1].mid() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn repeated_and_clustered_roots() {
        // (y-1)^3 (y - 1.0001) scaled: (y-1)^3 (10000 y - 10001)
        let base = q(&[-1, 1]);
        let mut p = q(&[-10001, 10000]);
        for _ in 0..3 {
            let mut next = vec![BigRational::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                for (j, d) in base.iter().enumerate() {
                    next[i + j] = &next[i + j] + c * d;
                }
            }
            p = next;
        }
        let r = nonnegative_real_roots(&integer_poly(&p), 1e-15).unwrap();
        assert_eq!(r.iter().map(|b| b.multiplicity).sum::<usize>(), 4);
        assert!(r.iter().any(|b| b.multiplicity == 3 && (b.mid() - 1.0).abs() < 1e-14));
        assert!(r
            .iter()
            .any(|b| b.multiplicity == 1 && (b.mid() - 1.0001).abs() < 1e-13));
    }

    #[test]
    fn rejects_negative_and_complex_roots() {
        // y + 1
        assert!(matches!(
            nonnegative_real_roots(&ints(&[1, 1]), 1e-12),
            Err(Error::Numeric { .. })
        ));
        // y^2 + 1
        assert!(matches!(
            nonnegative_real_roots(&ints(&[1, 0, 1]), 1e-12),
            Err(Error::Numeric { .. })
        ));
    }
}
