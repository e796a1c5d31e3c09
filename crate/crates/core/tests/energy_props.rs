use matchkit_core::{
    enumerate, family_mvector, match_vector, me_difference, me_quadrature, me_roots, quasi_compare, CorpusSpec,
    FamilyId, Graph, MatchVector, QuadratureSettings, SearchOptions,
};
use nalgebra::DMatrix;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

fn s() -> QuadratureSettings {
    QuadratureSettings::default()
}

fn adjacency_energy(g: &Graph) -> f64 {
    let n = g.n();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for e in g.edges() {
        a[(e.u, e.v)] = 1.0;
        a[(e.v, e.u)] = 1.0;
    }
    a.symmetric_eigen().eigenvalues.iter().map(|l| l.abs()).sum()
}

fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn path_energy_matches_cosine_formula() {
    for n in 1..=12 {
        let mv = family_mvector(&FamilyId::Path(n)).unwrap();
        let want: f64 = (1..=n)
            .map(|k| (2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos()).abs())
            .sum();
        let got = me_roots(&mv).unwrap().value;
        assert!((got - want).abs() < 1e-9, "n = {n}: {got} vs {want}");
    }
}

#[test]
fn forests_match_adjacency_spectrum() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(2..=16);
        let t = random_tree(&mut rng, n);
        // drop a few edges to get forests as well
        let mut g = t.clone();
        for e in t.edges().collect::<Vec<_>>() {
            if rng.gen_bool(0.15) {
                g = g.delete_edge(e).unwrap();
            }
        }
        let mv = match_vector(&g);
        let want = adjacency_energy(&g);
        let r = me_roots(&mv).unwrap().value;
        let q = me_quadrature(&mv, &s()).unwrap().value;
        assert!((r - want).abs() < 1e-8, "{g:?}");
        assert!((q - want).abs() < 1e-7, "{g:?}");
    }
}

#[test]
fn methods_agree_on_tricyclic_corpora() {
    let opts = SearchOptions {
        slow: true,
        ..Default::default()
    };
    for n in 4..=9 {
        let graphs = enumerate(&CorpusSpec::new(n, n + 2, true), &opts).unwrap();
        let vectors: BTreeSet<MatchVector> = graphs.iter().map(match_vector).collect();
        for v in &vectors {
            let r = me_roots(v).unwrap().value;
            let q = me_quadrature(v, &s()).unwrap().value;
            assert!((r - q).abs() <= 1e-6, "{v}: {r} vs {q}");
        }
    }
}

#[test]
fn methods_agree_on_family_vectors() {
    for n in 7..=40 {
        let mut ids = vec![
            FamilyId::G1Family(n),
            FamilyId::Path(n),
            FamilyId::Star(n),
            FamilyId::Cycle(n),
            FamilyId::K4Pendant(n),
        ];
        if n >= 11 {
            ids.push(FamilyId::G2Family(n));
        }
        for id in ids {
            let v = family_mvector(&id).unwrap();
            let r = me_roots(&v).unwrap().value;
            let q = me_quadrature(&v, &s()).unwrap().value;
            assert!((r - q).abs() <= 1e-6, "{id}: {r} vs {q}");
        }
    }
}

#[test]
fn quasi_order_implies_energy_order() {
    for n in 4..=8 {
        let graphs = enumerate(&CorpusSpec::new(n, n + 2, true), &SearchOptions::default()).unwrap();
        let vectors: Vec<MatchVector> = graphs
            .iter()
            .map(match_vector)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let me: Vec<f64> = vectors.iter().map(|v| me_quadrature(v, &s()).unwrap().value).collect();
        for i in 0..vectors.len() {
            for j in 0..vectors.len() {
                let o = quasi_compare(&vectors[i], &vectors[j]).unwrap();
                if o.is_greater() {
                    assert!(me[i] > me[j] + 1e-9, "{} vs {}", vectors[i], vectors[j]);
                }
            }
        }
        // equivalent graphs share one vector, so their energies coincide
        for g in &graphs {
            let v = match_vector(g);
            let i = vectors.binary_search(&v).unwrap();
            assert!((me_quadrature(&v, &s()).unwrap().value - me[i]).abs() < 1e-9);
        }
    }
}

#[test]
fn trailing_zeros_do_not_matter() {
    let base = MatchVector::from_u64s(10, &[1, 12, 48, 76, 42, 5]).unwrap();
    let padded = MatchVector::new(
        10,
        [1u64, 12, 48, 76, 42, 5, 0, 0]
            .iter()
            .map(|&c| BigUint::from(c))
            .collect(),
    )
    .unwrap();
    assert_eq!(base, padded);
    let short = MatchVector::from_u64s(10, &[1, 9, 20]).unwrap();
    assert_eq!(short.counts().len(), 6);
    assert_eq!(
        me_quadrature(&short, &s()).unwrap().value,
        me_quadrature(&MatchVector::from_u64s(10, &[1, 9, 20, 0, 0, 0]).unwrap(), &s())
            .unwrap()
            .value
    );
}

#[test]
fn difference_is_antisymmetric() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    for _ in 0..50 {
        let n = rng.gen_range(4..=12);
        let a = match_vector(&random_tree(&mut rng, n));
        let b = match_vector(&random_tree(&mut rng, n));
        let ab = me_difference(&a, &b, &s()).unwrap();
        let ba = me_difference(&b, &a, &s()).unwrap();
        assert!((ab.value + ba.value).abs() < 1e-9);
        let direct = me_roots(&a).unwrap().value - me_roots(&b).unwrap().value;
        assert!((ab.value - direct).abs() < 1e-8);
    }
}
