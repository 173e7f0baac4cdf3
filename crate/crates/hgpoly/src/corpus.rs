//! Test corpora: exhaustive small antichains, seeded random antichains,
//! named families, and loading hypergraph files from a directory.

use std::fs;
use std::path::{Path, PathBuf};

use hgpoly_core::{Hypergraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::io::read_hypergraph;

pub const DEFAULT_SEED: u64 = 0x6867_706f_6c79;

/// Every antichain of nonempty subsets of `{0..n}`, in a fixed order.
pub fn all_antichains(n: usize) -> Vec<Hypergraph> {
    fn go(next: u64, end: u64, chosen: &mut Vec<VertexSet>, n: usize, out: &mut Vec<Hypergraph>) {
        out.push(Hypergraph::with_numbered_vertices(n, chosen.clone()).expect("antichain by construction"));
        for s in next..end {
            let e = VertexSet(s);
            if chosen.iter().any(|&c| c.is_subset(e) || e.is_subset(c)) {
                continue;
            }
            chosen.push(e);
            go(s + 1, end, chosen, n, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    go(1, 1u64 << n, &mut Vec::new(), n, &mut out);
    out
}

/// Every `stride`-th antichain on `n` vertices.
pub fn sampled_antichains(n: usize, stride: usize) -> Vec<Hypergraph> {
    all_antichains(n).into_iter().step_by(stride.max(1)).collect()
}

/// Random antichains with `1 <= n <= max_n` and at most `max_m` edges.
pub fn random_antichains(count: usize, seed: u64, max_n: usize, max_m: usize) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let target = rng.gen_range(0..=max_m);
            let mut edges: Vec<VertexSet> = Vec::new();
            for _ in 0..4 * max_m {
                if edges.len() == target {
                    break;
                }
                let e = VertexSet(rng.gen_range(1..1u64 << n));
                if edges.iter().all(|&c| !c.is_subset(e) && !e.is_subset(c)) {
                    edges.push(e);
                }
            }
            Hypergraph::with_numbered_vertices(n, edges).expect("antichain by construction")
        })
        .collect()
}

fn pairs_graph(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Hypergraph {
    let edges = pairs.into_iter().map(|(a, b)| VertexSet::from_indices([a, b])).collect();
    Hypergraph::with_numbered_vertices(n, edges).expect("simple graph")
}

pub fn complete_graph(n: usize) -> Hypergraph {
    pairs_graph(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Vertex 0 joined to `m` leaves.
pub fn star(m: usize) -> Hypergraph {
    pairs_graph(m + 1, (1..=m).map(|l| (0, l)))
}

pub fn path(n: usize) -> Hypergraph {
    pairs_graph(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Hypergraph {
    pairs_graph(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Edges `{a,b,c}, {d,a}, {d,b}, {d,c}`. The independence complex is a point
/// plus a hollow triangle, so the top Betti column has two nonzero entries.
pub fn split_top_column() -> Hypergraph {
    Hypergraph::validate(&["a", "b", "c", "d"], &[vec!["a", "b", "c"], vec!["d", "a"], vec!["d", "b"], vec!["d", "c"]])
        .expect("valid example")
}

pub fn named_families() -> Vec<Hypergraph> {
    let mut out = Vec::new();
    out.extend((1..=7).map(complete_graph));
    out.extend((1..=8).map(star));
    out.extend((2..=12).map(path));
    out.extend((3..=12).map(cycle));
    out.push(split_top_column());
    out
}

/// The standard corpus: all antichains with `n <= 4`, every 25th on five
/// vertices, 150 seeded random antichains with `n <= 8, m <= 10`, and the
/// named families.
pub fn standard_corpus() -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for n in 0..=4 {
        out.extend(all_antichains(n));
    }
    out.extend(sampled_antichains(5, 25));
    out.extend(random_antichains(150, DEFAULT_SEED, 8, 10));
    out.extend(named_families());
    out
}

/// Loads every non-hidden file in `dir`, sorted by file name. Parse failures
/// are collected and reported together.
pub fn load_corpus(dir: &Path) -> Result<Vec<(PathBuf, Hypergraph)>> {
    let io_err = |source| Error::Io { path: dir.to_path_buf(), source };
    let mut paths = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let entry = entry.map_err(io_err)?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if !hidden && entry.file_type().map_err(io_err)?.is_file() {
            paths.push(entry.path());
        }
    }
    paths.sort();
    let mut loaded = Vec::new();
    let mut failures = Vec::new();
    for path in paths {
        match read_hypergraph(&path) {
            Ok(h) => loaded.push((path, h)),
            Err(e) => failures.push((path, e)),
        }
    }
    if failures.is_empty() {
        Ok(loaded)
    } else {
        Err(Error::Corpus(failures))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_hypergraph;

    #[test]
    fn antichain_counts() {
        // Dedekind numbers minus the antichain {{}}
        let counts: Vec<usize> = (0..=4).map(|n| all_antichains(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19, 167]);
    }

    #[test]
    fn random_corpus_is_seeded() {
        let a = random_antichains(20, 7, 8, 10);
        assert_eq!(a, random_antichains(20, 7, 8, 10));
        assert!(a.iter().all(|h| h.n() >= 1 && h.n() <= 8 && h.m() <= 10));
    }

    #[test]
    fn standard_corpus_size() {
        assert!(standard_corpus().len() >= 200);
    }

    #[test]
    fn load_corpus_examples() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load_corpus(dir.path()).unwrap().is_empty());
        write_hypergraph(&dir.path().join("k3.json"), &complete_graph(3)).unwrap();
        write_hypergraph(&dir.path().join("path3.json"), &path(3)).unwrap();
        fs::write(dir.path().join("star4.txt"), "c a b d e\nc a\nc b\nc d\nc e\n").unwrap();
        let loaded = load_corpus(dir.path()).unwrap();
        let names: Vec<_> = loaded.iter().map(|(p, _)| p.file_name().unwrap().to_str().unwrap()).collect();
        assert_eq!(names, ["k3.json", "path3.json", "star4.txt"]);
        assert_eq!(loaded[2].1.m(), 4);

        fs::write(dir.path().join("broken.json"), "{\"vertices\": [").unwrap();
        match load_corpus(dir.path()) {
            Err(Error::Corpus(f)) => {
                assert_eq!(f.len(), 1);
                assert!(f[0].0.ends_with("broken.json"));
            }
            other => panic!("expected aggregated failure, got {other:?}"),
        }
    }
}
