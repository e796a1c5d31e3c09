//! k-matching counts, matching polynomials, the subdivision recurrence and
//! the componentwise quasi-order on count vectors.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Graph};

/// `m(G,0..=floor(n/2))`, the number of k-edge matchings for each k.
///
/// Always stored with exactly `floor(n/2) + 1` entries; `counts[0] == 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchVector {
    n: usize,
    counts: Vec<BigUint>,
}

impl MatchVector {
    /// Validates and normalizes a count sequence for an `n`-vertex graph.
    /// Zero entries past `floor(n/2)` are dropped; short inputs are padded.
    pub fn new(n: usize, counts: Vec<BigUint>) -> Result<Self> {
        let len = n / 2 + 1;
        match counts.first() {
            Some(c) if c.is_one() => {}
            Some(c) => return Err(Error::arg(format!("m(G,0) must be 1, got {c}"))),
            None => return Err(Error::arg("empty match vector")),
        }
        let mut counts = counts;
        if counts.len() > len {
            if let Some(k) = counts[len..].iter().position(|c| !c.is_zero()) {
                return Err(Error::arg(format!(
                    "nonzero count at k = {} exceeds floor(n/2) = {} for n = {n}",
                    k + len,
                    n / 2
                )));
            }
            counts.truncate(len);
        }
        counts.resize(len, BigUint::zero());
        Ok(MatchVector { n, counts })
    }

    pub fn from_u64s(n: usize, counts: &[u64]) -> Result<Self> {
        MatchVector::new(n, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Parses decimal strings as produced by the JSON form.
    pub fn from_decimal_strings<S: AsRef<str>>(n: usize, counts: &[S]) -> Result<Self> {
        let parsed = counts
            .iter()
            .map(|s| {
                let s = s.as_ref().trim();
                s.parse::<BigUint>()
                    .map_err(|_| Error::arg(format!("not a nonnegative integer: {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MatchVector::new(n, parsed)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// Largest k with a nonzero count (the matching number).
    pub fn matching_number(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for MatchVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_strings().join(","))
    }
}

impl fmt::Debug for MatchVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatchVector(n={}; {})", self.n, self)
    }
}

/// Serialized as a JSON array of decimal strings so no precision is lost.
impl Serialize for MatchVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for c in &self.counts {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Counts matchings with a vertex-elimination recursion.
///
/// With `v` the lowest remaining vertex, `m(S) = m(S - v) + x * sum over
/// neighbours u of m(S - v - u)`. Every residual is an induced subgraph, so
/// the memo key is simply the surviving vertex mask.
pub fn match_vector(g: &Graph) -> MatchVector {
    let mut counter = Counter {
        adj: g.rows(),
        memo: HashMap::new(),
    };
    let counts = counter.count(low_mask(g.n()));
    let mut counts = (*counts).clone();
    counts.resize(g.n() / 2 + 1, BigUint::zero());
    MatchVector { n: g.n(), counts }
}

struct Counter<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, Rc<Vec<BigUint>>>,
}

impl Counter<'_> {
    fn count(&mut self, mask: u64) -> Rc<Vec<BigUint>> {
        // Vertices with no neighbour inside the mask never take part.
        let mut live = mask;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & mask == 0 {
                live &= !bit(v);
            }
        }
        if live == 0 {
            return Rc::new(vec![BigUint::one()]);
        }
        if let Some(hit) = self.memo.get(&live) {
            return Rc::clone(hit);
        }
        let v = live.trailing_zeros() as usize;
        let without = live & !bit(v);
        let mut acc: Vec<BigUint> = (*self.count(without)).clone();
        let mut nbrs = self.adj[v] & live;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let sub = self.count(without & !bit(u));
            if acc.len() < sub.len() + 1 {
                acc.resize(sub.len() + 1, BigUint::zero());
            }
            for (k, c) in sub.iter().enumerate() {
                acc[k + 1] += c;
            }
        }
        let acc = Rc::new(acc);
        self.memo.insert(live, Rc::clone(&acc));
        acc
    }
}

/// `alpha(G,x) = sum_k (-1)^k m(G,k) x^(n-2k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingPolynomial {
    /// Coefficients by ascending degree, `coeffs.len() == n + 1`.
    coeffs: Vec<BigInt>,
}

impl MatchingPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^d`.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs_ascending(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluates at a real point (loses precision for huge coefficients).
    pub fn eval(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || d == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn matching_polynomial(mv: &MatchVector) -> MatchingPolynomial {
    let n = mv.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in mv.counts().iter().enumerate() {
        let c = BigInt::from(c.clone());
        coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    MatchingPolynomial { coeffs }
}

/// One step of the subdivision recurrence:
/// `m(G(e/j+2),k) = m(G(e/j+1),k) + m(G(e/j),k-1)`.
pub fn insert_recurrence(next: &MatchVector, base: &MatchVector) -> Result<MatchVector> {
    if next.n() != base.n() + 1 {
        return Err(Error::arg(format!(
            "recurrence needs orders n+1 and n, got {} and {}",
            next.n(),
            base.n()
        )));
    }
    let n = next.n() + 1;
    let mut counts = vec![BigUint::zero(); n / 2 + 1];
    for (k, c) in next.counts().iter().enumerate() {
        counts[k] += c;
    }
    for (k, c) in base.counts().iter().enumerate() {
        counts[k + 1] += c;
    }
    Ok(MatchVector { n, counts })
}

/// Outcome of comparing two count vectors componentwise. Witness lists hold
/// the indices k where the named side is strictly larger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "order", rename_all = "lowercase")]
pub enum QuasiOrdering {
    Greater { strict: Vec<usize> },
    Less { strict: Vec<usize> },
    Equivalent,
    Incomparable { a_larger: Vec<usize>, b_larger: Vec<usize> },
}

impl QuasiOrdering {
    pub fn name(&self) -> &'static str {
        match self {
            QuasiOrdering::Greater { .. } => "greater",
            QuasiOrdering::Less { .. } => "less",
            QuasiOrdering::Equivalent => "equivalent",
            QuasiOrdering::Incomparable { .. } => "incomparable",
        }
    }

    pub fn is_greater(&self) -> bool {
        matches!(self, QuasiOrdering::Greater { .. })
    }

    pub fn is_less(&self) -> bool {
        matches!(self, QuasiOrdering::Less { .. })
    }

    /// `a >= b` in the quasi-order.
    pub fn is_greater_or_equivalent(&self) -> bool {
        matches!(self, QuasiOrdering::Greater { .. } | QuasiOrdering::Equivalent)
    }
}

pub fn quasi_compare(a: &MatchVector, b: &MatchVector) -> Result<QuasiOrdering> {
    if a.n() != b.n() {
        return Err(Error::arg(format!(
            "cannot compare vectors of orders {} and {}",
            a.n(),
            b.n()
        )));
    }
    let mut a_larger = vec![];
    let mut b_larger = vec![];
    for (k, (x, y)) in a.counts().iter().zip(b.counts()).enumerate() {
        match x.cmp(y) {
            std::cmp::Ordering::Greater => a_larger.push(k),
            std::cmp::Ordering::Less => b_larger.push(k),
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok(match (a_larger.is_empty(), b_larger.is_empty()) {
        (true, true) => QuasiOrdering::Equivalent,
        (false, true) => QuasiOrdering::Greater { strict: a_larger },
        (true, false) => QuasiOrdering::Less { strict: b_larger },
        (false, false) => QuasiOrdering::Incomparable { a_larger, b_larger },
    })
}
