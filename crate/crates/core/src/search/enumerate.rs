//! Isomorph-free generation by canonical augmentation.
//!
//! Layers grow one edge at a time. A child `C = P + e` is kept only when
//! `C - e*` is isomorphic to `P`, where `e*` is the last eligible edge of
//! `C` in its canonical labelling. Every class of `C` therefore has exactly
//! one parent class, and duplicates from a single parent are removed by
//! certificate.
//!
//! Connected corpora start from trees (grown leaf by leaf and deduplicated
//! by certificate) and only consider non-bridge edges as `e*`, so every
//! intermediate graph is connected. Unrestricted corpora start from the
//! empty graph and consider every edge.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{CorpusSpec, SearchOptions};
use crate::canon::{canonical_form, canonical_labelling, CanonicalForm};
use crate::error::Result;
use crate::graph::{EdgeRef, Graph};

type Layer = Vec<(CanonicalForm, Graph)>;

/// One representative per isomorphism class, sorted by certificate. The
/// order does not depend on the number of workers.
pub fn enumerate(spec: &CorpusSpec, opts: &SearchOptions) -> Result<Vec<Graph>> {
    spec.validate(opts)?;
    opts.install(|| run(spec))?
}

fn run(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    let n = spec.n;
    let (mut layer, start) = if spec.connected {
        if n == 0 {
            return Ok(if spec.m == 0 { vec![Graph::empty(0)?] } else { vec![] });
        }
        if spec.m + 1 < n {
            return Ok(vec![]);
        }
        (trees(n)?, n - 1)
    } else {
        let g = Graph::empty(n)?;
        (vec![(canonical_form(&g), g)], 0)
    };
    for _ in start..spec.m {
        layer = augment(&layer, spec.connected);
    }
    Ok(layer.into_iter().map(|(_, g)| g).collect())
}

fn canonical_entry(g: &Graph) -> (CanonicalForm, Graph) {
    let lab = canonical_labelling(g);
    let cg = lab.canonical_graph();
    (lab.form, cg)
}

fn trees(n: usize) -> Result<Layer> {
    let mut layer = vec![canonical_entry(&Graph::empty(1)?)];
    for k in 1..n {
        let mut next: Layer = layer
            .par_iter()
            .flat_map_iter(|(_, t)| {
                (0..k).map(move |v| {
                    let mut edges: Vec<(usize, usize)> = t.edges().map(|e| (e.u, e.v)).collect();
                    edges.push((v, k));
                    canonical_entry(&Graph::from_edges(k + 1, &edges).expect("valid tree"))
                })
            })
            .collect();
        next.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        next.dedup_by(|a, b| a.0 == b.0);
        layer = next;
    }
    Ok(layer)
}

/// The canonical deletion edge of a graph already in canonical labelling:
/// its largest eligible edge under `(v, u)` order.
fn last_edge(c: &Graph, connected: bool) -> Option<EdgeRef> {
    c.edges()
        .filter(|&e| !connected || !c.is_bridge(e))
        .max_by_key(|e| (e.v, e.u))
}

fn children(parent_form: &CanonicalForm, parent: &Graph, connected: bool) -> Layer {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for e in parent.non_edges() {
        let child = parent.with_edge(e).expect("non-edge");
        let lab = canonical_labelling(&child);
        if seen.contains(&lab.form) {
            continue;
        }
        let cg = lab.canonical_graph();
        let image = EdgeRef::new(lab.perm[e.u], lab.perm[e.v]).expect("distinct");
        let star = last_edge(&cg, connected).expect("child has an eligible edge");
        let accept = star == image || canonical_form(&cg.delete_edge(star).expect("edge")) == *parent_form;
        if accept {
            seen.insert(lab.form.clone());
            out.push((lab.form, cg));
        }
    }
    out
}

fn augment(layer: &Layer, connected: bool) -> Layer {
    let mut next: Layer = layer
        .par_iter()
        .flat_map_iter(|(f, g)| children(f, g, connected))
        .collect();
    next.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(next.windows(2).all(|w| w[0].0 != w[1].0), "duplicate class");
    next
}
