use std::collections::{BTreeMap, BTreeSet};

use matchkit_core::search::{cache_file_name, corpus};
use matchkit_core::{canonical_form, enumerate, CanonicalForm, CorpusSpec, Graph, SearchOptions};

/// Certificates of all labelled graphs on `n` vertices, grouped by edge count.
fn labelled_classes(n: usize, connected: bool) -> BTreeMap<usize, BTreeSet<CanonicalForm>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if connected && !g.is_connected() {
            continue;
        }
        out.entry(edges.len()).or_default().insert(canonical_form(&g));
    }
    out
}

#[test]
fn generator_matches_labelled_brute_force() {
    for n in 1..=6 {
        for connected in [false, true] {
            let want = labelled_classes(n, connected);
            for m in 0..=n * (n - 1) / 2 {
                let got = enumerate(&CorpusSpec::new(n, m, connected), &SearchOptions::default()).unwrap();
                let certs: BTreeSet<CanonicalForm> = got.iter().map(canonical_form).collect();
                assert_eq!(certs.len(), got.len(), "duplicate at n={n} m={m}");
                assert!(got.iter().all(|g| g.m() == m && (!connected || g.is_connected())));
                assert_eq!(
                    certs,
                    want.get(&m).cloned().unwrap_or_default(),
                    "n={n} m={m} connected={connected}"
                );
            }
        }
    }
}

#[test]
fn no_duplicates_at_larger_orders() {
    let opts = SearchOptions {
        slow: true,
        ..Default::default()
    };
    for (n, m) in [(8, 10), (9, 11), (7, 12)] {
        let got = enumerate(&CorpusSpec::new(n, m, true), &opts).unwrap();
        let certs: BTreeSet<CanonicalForm> = got.iter().map(canonical_form).collect();
        assert_eq!(certs.len(), got.len());
    }
}

#[test]
fn corpus_files_do_not_depend_on_worker_count() {
    let spec = CorpusSpec::new(8, 10, true);
    let mut files = vec![];
    for jobs in [1, 4] {
        let dir = tempfile::tempdir().unwrap();
        let opts = SearchOptions {
            jobs: Some(jobs),
            cache_dir: Some(dir.path().to_path_buf()),
            ..Default::default()
        };
        corpus(&spec, &opts).unwrap();
        files.push(std::fs::read(dir.path().join(cache_file_name(&spec))).unwrap());
    }
    assert!(!files[0].is_empty());
    assert_eq!(files[0], files[1]);
}

#[test]
fn caps_and_gates() {
    let o = SearchOptions::default();
    assert!(enumerate(&CorpusSpec::new(9, 11, true), &o).is_err());
    let slow = SearchOptions {
        slow: true,
        ..Default::default()
    };
    assert!(enumerate(&CorpusSpec::new(11, 13, true), &slow).is_err());
    assert!(enumerate(&CorpusSpec::new(4, 7, false), &o).is_err());
    let zero = SearchOptions {
        jobs: Some(0),
        ..Default::default()
    };
    assert!(enumerate(&CorpusSpec::new(4, 3, true), &zero).is_err());
}
