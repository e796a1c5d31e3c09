//! Fixed inputs shared by the benchmarks.

use matchkit_core::{family_graph, family_mvector, FamilyId, Graph, MatchVector};

/// Adjacency families on `n` vertices with a few extra edges each.
pub fn sample_graphs(n: usize) -> Vec<(String, Graph)> {
    [
        FamilyId::Cycle(n),
        FamilyId::StarThreeTriangles(n),
        FamilyId::K4Pendant(n),
        FamilyId::TwoCyclePath { n, k: 4, l: 4 },
    ]
    .iter()
    .map(|id| (id.to_string(), family_graph(id).expect("valid family")))
    .collect()
}

/// Count vectors of the first maximal tricyclic family.
pub fn sample_vectors(orders: &[usize]) -> Vec<(usize, MatchVector)> {
    orders
        .iter()
        .map(|&n| (n, family_mvector(&FamilyId::G1Family(n)).expect("n >= 7")))
        .collect()
}
