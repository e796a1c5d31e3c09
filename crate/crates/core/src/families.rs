//! Named graph families.
//!
//! Most families are built as adjacency graphs. The two maximal tricyclic
//! families `G1Family` and `G2Family` exist only as count vectors: they are
//! seeded with the counts of a base graph and of its one-vertex subdivision,
//! and continued with the subdivision recurrence.

use std::fmt;

use serde::Serialize;

use crate::energy::{me_quadrature, me_roots, EnergyResult, QuadratureSettings};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{insert_recurrence, match_vector, MatchVector};

/// Which of the two maximal tricyclic classes on ten vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Max10 {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Path(usize),
    Cycle(usize),
    /// `S_n`: one centre joined to `n - 1` leaves.
    Star(usize),
    /// `S_n^+`: the star plus one edge between two leaves (unicyclic).
    StarPlus(usize),
    /// `S_n^*`: one leaf joined to two other leaves (bicyclic).
    StarTwoTriangles(usize),
    /// `S_n^**`: one leaf joined to three other leaves (tricyclic).
    StarThreeTriangles(usize),
    /// `K_4` with `n - 4` pendant vertices on one vertex.
    K4Pendant(usize),
    /// Cycles `C_k` and `C_l` joined by a path on `n - k - l` vertices.
    TwoCyclePath {
        n: usize,
        k: usize,
        l: usize,
    },
    /// Subdivisions of the first maximal tricyclic base graph, `n >= 7`.
    G1Family(usize),
    /// Subdivisions of the second maximal tricyclic base graph, `n >= 11`.
    G2Family(usize),
    /// The two maximal tricyclic classes on ten vertices.
    TricyclicMax10(Max10),
}

impl FamilyId {
    /// Parses the command-line family names.
    pub fn parse(kind: &str, n: usize, k: Option<usize>, l: Option<usize>) -> Result<Self> {
        let id = match kind {
            "path" => FamilyId::Path(n),
            "cycle" => FamilyId::Cycle(n),
            "star" => FamilyId::Star(n),
            "snpp" | "snplus" => FamilyId::StarPlus(n),
            "snstar" => FamilyId::StarTwoTriangles(n),
            "snstarstar" => FamilyId::StarThreeTriangles(n),
            "k4pendant" => FamilyId::K4Pendant(n),
            "pkl" => FamilyId::TwoCyclePath {
                n,
                k: k.ok_or_else(|| Error::arg("family pkl needs --k"))?,
                l: l.ok_or_else(|| Error::arg("family pkl needs --l"))?,
            },
            "g1" => FamilyId::G1Family(n),
            "g2" => FamilyId::G2Family(n),
            "max10a" | "max10b" => {
                if n != 10 {
                    return Err(Error::arg(format!("{kind} is defined only for n = 10")));
                }
                FamilyId::TricyclicMax10(if kind == "max10a" { Max10::First } else { Max10::Second })
            }
            other => return Err(Error::arg(format!("unknown family {other:?}"))),
        };
        if kind != "pkl" && (k.is_some() || l.is_some()) {
            return Err(Error::arg("--k/--l apply only to family pkl"));
        }
        Ok(id)
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilyId::Path(n)
            | FamilyId::Cycle(n)
            | FamilyId::Star(n)
            | FamilyId::StarPlus(n)
            | FamilyId::StarTwoTriangles(n)
            | FamilyId::StarThreeTriangles(n)
            | FamilyId::K4Pendant(n)
            | FamilyId::G1Family(n)
            | FamilyId::G2Family(n) => n,
            FamilyId::TwoCyclePath { n, .. } => n,
            FamilyId::TricyclicMax10(_) => 10,
        }
    }

    /// Whether an adjacency structure is available for this family.
    pub fn has_graph(&self) -> bool {
        !matches!(
            self,
            FamilyId::G1Family(_) | FamilyId::G2Family(_) | FamilyId::TricyclicMax10(_)
        )
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::Path(n) => write!(f, "P_{n}"),
            FamilyId::Cycle(n) => write!(f, "C_{n}"),
            FamilyId::Star(n) => write!(f, "S_{n}"),
            FamilyId::StarPlus(n) => write!(f, "S_{n}^+"),
            FamilyId::StarTwoTriangles(n) => write!(f, "S_{n}^*"),
            FamilyId::StarThreeTriangles(n) => write!(f, "S_{n}^**"),
            FamilyId::K4Pendant(n) => write!(f, "K_4^{}", n.saturating_sub(4)),
            FamilyId::TwoCyclePath { n, k, l } => write!(f, "P_{n}^{{{k},{l}}}"),
            FamilyId::G1Family(n) => write!(f, "G1(e/{})", n as i64 - 7),
            FamilyId::G2Family(n) => write!(f, "G2(e/{})", n as i64 - 11),
            FamilyId::TricyclicMax10(Max10::First) => write!(f, "G^10_(1)"),
            FamilyId::TricyclicMax10(Max10::Second) => write!(f, "G^10_(2)"),
        }
    }
}

fn need(cond: bool, id: &FamilyId, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::arg(format!("{id}: {what}")))
    }
}

fn star_with_chords(n: usize, chords: usize) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    edges.extend((0..chords).map(|i| (1, 2 + i)));
    Graph::from_edges(n, &edges)
}

pub fn family_graph(id: &FamilyId) -> Result<Graph> {
    match *id {
        FamilyId::Path(n) => {
            need(n >= 1, id, "needs n >= 1")?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilyId::Cycle(n) => {
            need(n >= 3, id, "needs n >= 3")?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilyId::Star(n) => {
            need(n >= 1, id, "needs n >= 1")?;
            star_with_chords(n, 0)
        }
        FamilyId::StarPlus(n) => {
            need(n >= 3, id, "needs n >= 3")?;
            star_with_chords(n, 1)
        }
        FamilyId::StarTwoTriangles(n) => {
            need(n >= 4, id, "needs n >= 4")?;
            star_with_chords(n, 2)
        }
        FamilyId::StarThreeTriangles(n) => {
            need(n >= 5, id, "needs n >= 5")?;
            star_with_chords(n, 3)
        }
        FamilyId::K4Pendant(n) => {
            need(n >= 4, id, "needs n >= 4")?;
            let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            edges.extend((4..n).map(|v| (0, v)));
            Graph::from_edges(n, &edges)
        }
        FamilyId::TwoCyclePath { n, k, l } => {
            need(k >= 3 && l >= 3, id, "needs k, l >= 3")?;
            need(n >= k + l, id, "needs n >= k + l")?;
            let p = n - k - l;
            let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let second = k + p;
            edges.extend((0..l).map(|i| (second + i, second + (i + 1) % l)));
            // cycle-1 vertex k-1, then the path k..k+p-1, then cycle-2 vertex k+p
            let mut prev = k - 1;
            for w in k..second {
                edges.push((prev, w));
                prev = w;
            }
            edges.push((prev, second));
            Graph::from_edges(n, &edges)
        }
        FamilyId::G1Family(_) | FamilyId::G2Family(_) | FamilyId::TricyclicMax10(_) => Err(Error::arg(format!(
            "{id} is defined by its counts only; no adjacency available"
        ))),
    }
}

/// Seed counts for the first family at orders 7 and 8.
pub const G1_SEEDS: [&[u64]; 2] = [&[1, 9, 21, 11], &[1, 10, 29, 26, 5]];
/// Seed counts for the second family at orders 11 and 12.
pub const G2_SEEDS: [&[u64]; 2] = [&[1, 13, 59, 112, 84, 20], &[1, 14, 71, 161, 164, 68, 8]];
/// The two maximal tricyclic classes on ten vertices.
pub const MAX10_COUNTS: [&[u64]; 2] = [&[1, 12, 48, 76, 42, 5], &[1, 12, 48, 75, 42, 6]];

/// Runs the subdivision recurrence from two consecutive seeds at orders
/// `start` and `start + 1` up to order `n`.
pub fn recurrence_family(seeds: [&[u64]; 2], start: usize, n: usize) -> Result<MatchVector> {
    if n < start {
        return Err(Error::arg(format!("family starts at n = {start}, got {n}")));
    }
    let mut base = MatchVector::from_u64s(start, seeds[0])?;
    if n == start {
        return Ok(base);
    }
    let mut next = MatchVector::from_u64s(start + 1, seeds[1])?;
    for _ in start + 2..=n {
        let after = insert_recurrence(&next, &base)?;
        base = std::mem::replace(&mut next, after);
    }
    Ok(next)
}

/// Inverts one step of the subdivision recurrence: given the vectors at
/// orders `n + 1` and `n + 2`, returns the vector at order `n`.
pub fn recurrence_step_back(next: &MatchVector, after: &MatchVector) -> Result<MatchVector> {
    if after.n() != next.n() + 1 || next.n() == 0 {
        return Err(Error::arg(format!(
            "backward step needs orders n+1 and n+2, got {} and {}",
            next.n(),
            after.n()
        )));
    }
    let n = next.n() - 1;
    // m(n+2, k+1) = m(n+1, k+1) + m(n, k)
    let counts = (0..=n / 2)
        .map(|k| {
            let (top, lower) = (after.get(k + 1), next.get(k + 1));
            if top < lower {
                Err(Error::arg(format!("backward step gives a negative count at k = {k}")))
            } else {
                Ok(top - lower)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    MatchVector::new(n, counts)
}

pub fn family_mvector(id: &FamilyId) -> Result<MatchVector> {
    match *id {
        FamilyId::G1Family(n) => recurrence_family(G1_SEEDS, 7, n),
        FamilyId::G2Family(n) => recurrence_family(G2_SEEDS, 11, n),
        FamilyId::TricyclicMax10(which) => {
            let idx = match which {
                Max10::First => 0,
                Max10::Second => 1,
            };
            MatchVector::from_u64s(10, MAX10_COUNTS[idx])
        }
        _ => Ok(match_vector(&family_graph(id)?)),
    }
}

/// Largest tolerated gap between the quadrature and root energies.
pub const CROSS_CHECK_TOL: f64 = 1e-6;

/// Quadrature energy of the family's count vector, cross-checked against
/// the root method.
pub fn family_me(id: &FamilyId, s: &QuadratureSettings) -> Result<EnergyResult> {
    let mv = family_mvector(id)?;
    let q = me_quadrature(&mv, s)?;
    let r = me_roots(&mv)?;
    if (q.value - r.value).abs() > CROSS_CHECK_TOL + q.error_estimate {
        return Err(Error::numeric(
            format!("{id}: quadrature {} and roots {} disagree", q.value, r.value),
            Some(q.value),
        ));
    }
    Ok(q)
}
