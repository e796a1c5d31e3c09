//! Matching-equivalence classes of a corpus and their quasi-order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{cache::corpus, CorpusSpec, SearchOptions};
use crate::energy::{me_quadrature, QuadratureSettings};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::matching::{match_vector, quasi_compare, MatchVector};
use crate::{round4, REPORT_SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassEntry {
    /// graph6 of the first member in corpus order.
    pub representative: String,
    pub mvector: MatchVector,
    pub size: usize,
    pub members: Vec<String>,
    pub me: f64,
    pub me_full: f64,
    pub me_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub corpus_size: usize,
    /// Sorted by decreasing energy.
    pub classes: Vec<ClassEntry>,
    pub maximal_class_indices: Vec<usize>,
    pub greatest_class_index: Option<usize>,
    /// Cover relations `(upper, lower)` of the quasi-order between classes.
    pub hasse: Vec<(usize, usize)>,
}

pub fn class_report(spec: &CorpusSpec, opts: &SearchOptions, s: &QuadratureSettings) -> Result<ClassReport> {
    let graphs = corpus(spec, opts)?;
    opts.install(|| class_report_for(spec, &graphs, s))?
}

/// Builds the report for an already enumerated corpus.
pub fn class_report_for(spec: &CorpusSpec, graphs: &[Graph], s: &QuadratureSettings) -> Result<ClassReport> {
    let vectors: Vec<MatchVector> = graphs.par_iter().map(match_vector).collect();
    let mut groups: BTreeMap<&MatchVector, Vec<usize>> = BTreeMap::new();
    for (i, v) in vectors.iter().enumerate() {
        groups.entry(v).or_default().push(i);
    }
    let groups: Vec<(&MatchVector, Vec<usize>)> = groups.into_iter().collect();
    let energies = groups
        .par_iter()
        .map(|(v, _)| me_quadrature(v, s))
        .collect::<Result<Vec<_>>>()?;
    let mut classes: Vec<ClassEntry> = groups
        .iter()
        .zip(energies)
        .map(|((v, idx), e)| ClassEntry {
            representative: to_graph6(&graphs[idx[0]]),
            mvector: (*v).clone(),
            size: idx.len(),
            members: idx.iter().map(|&i| to_graph6(&graphs[i])).collect(),
            me: round4(e.value),
            me_full: e.value,
            me_error: e.error_estimate,
        })
        .collect();
    classes.sort_by(|a, b| b.me_full.total_cmp(&a.me_full).then_with(|| a.mvector.cmp(&b.mvector)));

    let c = classes.len();
    let words = c.div_ceil(64);
    // below[i] holds every class strictly under class i.
    let below: Vec<Vec<u64>> = (0..c)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..c {
                if i != j
                    && quasi_compare(&classes[i].mvector, &classes[j].mvector)
                        .map(|o| o.is_greater())
                        .unwrap_or(false)
                {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let has = |row: &[u64], j: usize| row[j / 64] >> (j % 64) & 1 == 1;
    let maximal: Vec<usize> = (0..c).filter(|&j| !(0..c).any(|i| has(&below[i], j))).collect();
    let greatest = match maximal.as_slice() {
        [g] if (0..c).all(|j| j == *g || has(&below[*g], j)) => Some(*g),
        _ => None,
    };
    let hasse: Vec<(usize, usize)> = (0..c)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut cover = below[i].clone();
            for k in 0..c {
                if has(&below[i], k) {
                    for (w, b) in cover.iter_mut().zip(&below[k]) {
                        *w &= !b;
                    }
                }
            }
            let cover_list: Vec<(usize, usize)> = (0..c).filter(|&j| has(&cover, j)).map(|j| (i, j)).collect();
            cover_list
        })
        .collect();

    Ok(ClassReport {
        schema_version: REPORT_SCHEMA_VERSION,
        n: spec.n,
        m: spec.m,
        connected: spec.connected,
        corpus_size: graphs.len(),
        classes,
        maximal_class_indices: maximal,
        greatest_class_index: greatest,
        hasse,
    })
}
