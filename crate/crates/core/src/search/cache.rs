//! Corpus files: one graph6 line per class, in enumeration order.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::{enumerate, CorpusSpec, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};

pub const CACHE_ENV: &str = "MATCHKIT_CACHE_DIR";

pub(crate) fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("cache"))
}

/// `g_{n}_{m}.g6`, with `_c` before the extension for connected corpora.
pub fn cache_file_name(spec: &CorpusSpec) -> String {
    let c = if spec.connected { "_c" } else { "" };
    format!("g_{}_{}{c}.g6", spec.n, spec.m)
}

pub fn read_corpus(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path)?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, line)| from_graph6(line).map_err(|e| Error::Io(format!("{}: line {}: {e}", path.display(), i + 1))))
        .collect()
}

/// Writes through a temporary file and a rename so readers never see a
/// partial corpus.
pub fn write_corpus(path: &Path, graphs: &[Graph]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp)?);
        for g in graphs {
            writeln!(f, "{}", to_graph6(g))?;
        }
        f.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// The corpus for `spec`, read from the cache when present and written to
/// it otherwise.
pub fn corpus(spec: &CorpusSpec, opts: &SearchOptions) -> Result<Vec<Graph>> {
    spec.validate(opts)?;
    let Some(dir) = &opts.cache_dir else {
        return enumerate(spec, opts);
    };
    let path = dir.join(cache_file_name(spec));
    if path.exists() {
        let graphs = read_corpus(&path)?;
        if graphs.iter().any(|g| g.n() != spec.n || g.m() != spec.m) {
            return Err(Error::Io(format!(
                "{} does not hold ({}, {}) graphs",
                path.display(),
                spec.n,
                spec.m
            )));
        }
        return Ok(graphs);
    }
    let graphs = enumerate(spec, opts)?;
    write_corpus(&path, &graphs)?;
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_names() {
        assert_eq!(cache_file_name(&CorpusSpec::new(9, 11, true)), "g_9_11_c.g6");
        assert_eq!(cache_file_name(&CorpusSpec::new(5, 4, false)), "g_5_4.g6");
    }

    #[test]
    fn cold_and_warm_cache_agree() {
        let dir = tempfile::tempdir().unwrap();
        let opts = SearchOptions {
            cache_dir: Some(dir.path().to_path_buf()),
            ..Default::default()
        };
        let spec = CorpusSpec::new(6, 8, true);
        let cold = corpus(&spec, &opts).unwrap();
        assert!(dir.path().join("g_6_8_c.g6").exists());
        let warm = corpus(&spec, &opts).unwrap();
        assert_eq!(cold, warm);
    }

    #[test]
    fn rejects_mismatched_file() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("g_4_3_c.g6"), "C~\n").unwrap();
        let opts = SearchOptions {
            cache_dir: Some(dir.path().to_path_buf()),
            ..Default::default()
        };
        assert!(corpus(&CorpusSpec::new(4, 3, true), &opts).is_err());
    }
}
