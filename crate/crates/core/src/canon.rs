//! Exact canonical labelling.
//!
//! Ordered partitions are refined to equitable ones by neighbour counts; the
//! search individualizes each vertex of the first non-singleton cell in turn
//! and keeps the leaf whose relabelled adjacency rows are lexicographically
//! least. Automorphisms discovered when two leaves coincide prune siblings
//! that lie in the same orbit under the pointwise stabilizer of the current
//! prefix.

use std::fmt;

use crate::graph::{bit, Graph};

/// Certificate identifying an isomorphism class: vertex count followed by the
/// canonical adjacency rows (little-endian words).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    fn from_rows(n: usize, rows: &[u64]) -> Self {
        let mut bytes = Vec::with_capacity(1 + 8 * rows.len());
        bytes.push(n as u8);
        for r in rows {
            bytes.extend_from_slice(&r.to_le_bytes());
        }
        CanonicalForm { bytes }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.bytes {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Canonical labelling: `perm[v]` is the canonical label of vertex `v`.
#[derive(Clone, Debug)]
pub struct Labelling {
    pub form: CanonicalForm,
    pub perm: Vec<usize>,
    pub rows: Vec<u64>,
}

impl Labelling {
    pub fn canonical_graph(&self) -> Graph {
        let m = self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph::from_rows_unchecked(self.rows.clone(), m)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labelling(g).form
}

pub fn canonical_labelling(g: &Graph) -> Labelling {
    let n = g.n();
    if n == 0 {
        return Labelling {
            form: CanonicalForm::from_rows(0, &[]),
            perm: vec![],
            rows: vec![],
        };
    }
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut cells = vec![crate::graph::low_mask(n)];
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    let Best { rows, perm, .. } = search.best.expect("search visits at least one leaf");
    Labelling {
        form: CanonicalForm::from_rows(n, &rows),
        perm,
        rows,
    }
}

/// Cap on stored automorphism generators; pruning stays sound with fewer.
const MAX_GENERATORS: usize = 64;

struct Best {
    rows: Vec<u64>,
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Best>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when an automorphism shows that everything below
    /// depth `d` on the current path repeats an explored subtree.
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(target_idx) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let depth = prefix.len();
        let target = cells[target_idx];
        let mut tried: Vec<usize> = Vec::new();
        let mut rest = target;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, prefix, target) {
                continue;
            }
            tried.push(v);

            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an already explored sibling under the
    /// group generated by known automorphisms fixing `prefix` pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], prefix: &[usize], cell: u64) -> bool {
        let stabilizing: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if stabilizing.is_empty() {
            return false;
        }
        // Orbit of v restricted to movement by the stabilizing generators.
        let mut orbit = bit(v);
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                for a in &stabilizing {
                    next |= bit(a[u]);
                }
            }
            frontier = next & !orbit;
            orbit |= next;
        }
        debug_assert_eq!(orbit & !cell, 0);
        tried.iter().any(|&t| orbit & bit(t) != 0)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.g.n();
        let mut perm = vec![0usize; n];
        for (pos, c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = pos;
        }
        let rows = self.g.permuted(&perm).rows().to_vec();
        let Some(best) = &self.best else {
            self.best = Some(Best {
                rows,
                perm,
                path: path.to_vec(),
            });
            return None;
        };
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Less => {
                self.best = Some(Best {
                    rows,
                    perm,
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Equal => {
                // best.perm^{-1} o perm is an automorphism.
                let mut inv = vec![0usize; n];
                for (v, &p) in best.perm.iter().enumerate() {
                    inv[p] = v;
                }
                let auto: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                let common = path.iter().zip(&best.path).take_while(|(a, b)| a == b).count();
                if self.automorphisms.len() < MAX_GENERATORS && auto.iter().enumerate().any(|(i, &a)| i != a) {
                    self.automorphisms.push(auto);
                }
                Some(common)
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

/// Refines an ordered partition until it is equitable. Cells are split by the
/// number of neighbours in each splitter cell, smaller counts first, so the
/// result depends only on the structure and the incoming cell order.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() > 1 {
                    if let Some(parts) = split(g, cell, splitter) {
                        let k = parts.len();
                        cells.splice(i..=i, parts);
                        changed = true;
                        i += k;
                        continue;
                    }
                }
                i += 1;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

fn split(g: &Graph, cell: u64, splitter: u64) -> Option<Vec<u64>> {
    let mut buckets: [u64; 65] = [0; 65];
    let mut rest = cell;
    let mut lo = 64usize;
    let mut hi = 0usize;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let c = (g.neighbors(v) & splitter).count_ones() as usize;
        buckets[c] |= bit(v);
        lo = lo.min(c);
        hi = hi.max(c);
    }
    if lo == hi {
        return None;
    }
    Some(buckets[lo..=hi].iter().copied().filter(|&b| b != 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut edges = vec![];
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    // Brute-force isomorphism test over all n! bijections.
    fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
        if a.n() != b.n() || a.m() != b.m() {
            return false;
        }
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
            let n = perm.len();
            if k == n {
                return a.permuted(perm) == *b;
            }
            for i in k..n {
                perm.swap(k, i);
                if rec(a, b, perm, k + 1) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        rec(a, b, &mut perm, 0)
    }

    #[test]
    fn examples() {
        let c4 = cycle(4);
        let relabelled = c4.permuted(&[2, 0, 3, 1]);
        assert_eq!(canonical_form(&c4), canonical_form(&relabelled));
        assert_ne!(canonical_form(&c4), canonical_form(&path(4)));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&star), canonical_form(&path(4)));
    }

    #[test]
    fn labelling_maps_to_canonical_graph() {
        let mut rng = rand_chacha_like(7);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 9, 0.4);
            let l = canonical_labelling(&g);
            assert_eq!(g.permuted(&l.perm), l.canonical_graph());
        }
    }

    fn rand_chacha_like(seed: u64) -> rand::rngs::StdRng {
        rand::rngs::StdRng::seed_from_u64(seed)
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = rand_chacha_like(42);
        for i in 0..100 {
            let n = 1 + i % 8;
            let g = random_graph(&mut rng, n, 0.5);
            let cf = canonical_form(&g);
            for _ in 0..20 {
                let p = random_perm(&mut rng, n);
                assert_eq!(canonical_form(&g.permuted(&p)), cf);
            }
        }
    }

    #[test]
    fn symmetric_graphs_are_fast_and_invariant() {
        let star: Vec<_> = (1..40).map(|i| (0, i)).collect();
        let s = Graph::from_edges(40, &star).unwrap();
        let mut rng = rand_chacha_like(1);
        let p = random_perm(&mut rng, 40);
        assert_eq!(canonical_form(&s), canonical_form(&s.permuted(&p)));

        let e = Graph::empty(30).unwrap();
        assert_eq!(
            canonical_form(&e),
            canonical_form(&e.permuted(&random_perm(&mut rng, 30)))
        );

        let mut k = vec![];
        for i in 0..12 {
            for j in i + 1..12 {
                k.push((i, j));
            }
        }
        let k12 = Graph::from_edges(12, &k).unwrap();
        assert_eq!(
            canonical_form(&k12),
            canonical_form(&k12.permuted(&random_perm(&mut rng, 12)))
        );

        // Petersen graph: vertex-transitive, refinement does nothing.
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let all: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let pet = Graph::from_edges(10, &all).unwrap();
        for _ in 0..10 {
            let p = random_perm(&mut rng, 10);
            assert_eq!(canonical_form(&pet), canonical_form(&pet.permuted(&p)));
        }
    }

    #[test]
    fn separates_all_non_isomorphic_graphs_up_to_six() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            // One representative per certificate, checked pairwise by brute force.
            let mut reps: std::collections::BTreeMap<CanonicalForm, Graph> = Default::default();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask & (1 << b) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let cf = canonical_form(&g);
                match reps.get(&cf) {
                    Some(r) => {
                        if n <= 5 {
                            assert!(isomorphic_brute(r, &g), "{r:?} vs {g:?}");
                        }
                    }
                    None => {
                        reps.insert(cf, g);
                    }
                }
            }
            let reps: Vec<Graph> = reps.into_values().collect();
            for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    if reps[i].m() == reps[j].m() {
                        assert!(!isomorphic_brute(&reps[i], &reps[j]));
                    }
                }
            }
            let expected = [1, 1, 2, 4, 11, 34, 156][n];
            assert_eq!(reps.len(), expected, "graph count for n = {n}");
        }
    }
}
