//! Connected graphs up to isomorphism.
//!
//! Generated corpora grow graphs one vertex at a time: every connected graph
//! on `n` vertices has a vertex whose removal leaves it connected, so joining
//! a new vertex to every non-empty subset of each connected `(n-1)`-vertex
//! representative reaches every class. Canonical forms remove duplicates.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io;
use crate::iso::{canonical_form, CanonicalForm};

/// Largest order for generated corpora (853 graphs on 7 vertices).
pub const MAX_GENERATED_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    Generated { max_n: usize },
    File(PathBuf),
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub source: CorpusSource,
    graphs: Vec<Graph>,
}

impl Corpus {
    /// All connected graphs with `1..=max_n` vertices, ordered by order and
    /// then by canonical form.
    pub fn generated(max_n: usize) -> Result<Corpus> {
        if max_n > MAX_GENERATED_N {
            return Err(Error::CorpusTooLarge {
                max: MAX_GENERATED_N,
            });
        }
        let mut graphs = Vec::new();
        let mut layer = Vec::new();
        for n in 1..=max_n {
            layer = extend_layer(&layer, n);
            graphs.extend(layer.iter().map(CanonicalForm::to_graph));
        }
        Ok(Corpus {
            source: CorpusSource::Generated { max_n },
            graphs,
        })
    }

    /// One graph6 string per line, kept in file order.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Corpus> {
        let text = std::fs::read_to_string(path.as_ref())?;
        Ok(Corpus {
            source: CorpusSource::File(path.as_ref().to_owned()),
            graphs: io::parse_graph6_lines(&text)?,
        })
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

fn extend_layer(prev: &[CanonicalForm], n: usize) -> Vec<CanonicalForm> {
    if n == 1 {
        return vec![canonical_form(&Graph::empty(1).unwrap()).0];
    }
    let mut seen = BTreeSet::new();
    for base in prev {
        let mut adj = base.to_graph().adjacency().to_vec();
        adj.push(0);
        for mask in 1u64..1 << (n - 1) {
            let mut a = adj.clone();
            a[n - 1] = mask;
            for (v, row) in a.iter_mut().enumerate().take(n - 1) {
                if mask >> v & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            let g = Graph::from_adjacency(a).expect("augmented adjacency is valid");
            seen.insert(canonical_form(&g).0);
        }
    }
    seen.into_iter().collect()
}

/// Representatives of the connected graphs on exactly `n` vertices.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_GENERATED_N {
        return Err(Error::CorpusTooLarge {
            max: MAX_GENERATED_N,
        });
    }
    let mut layer = Vec::new();
    for k in 1..=n {
        layer = extend_layer(&layer, k);
    }
    Ok(layer.iter().map(CanonicalForm::to_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    /// Every edge subset on `n` labelled vertices, deduplicated by pairwise isomorphism tests.
    fn brute_force_classes(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut reps: Vec<Graph> = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            if g.is_connected() && !reps.iter().any(|r| are_isomorphic(r, &g).is_some()) {
                reps.push(g);
            }
        }
        reps
    }

    #[test]
    fn counts_match_known_values() {
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(
                enumerate_connected(i + 1).unwrap().len(),
                count,
                "n={}",
                i + 1
            );
        }
        assert_eq!(Corpus::generated(4).unwrap().len(), 1 + 1 + 2 + 6);
        assert_eq!(Corpus::generated(7).unwrap().len(), 996);
    }

    #[test]
    fn agrees_with_edge_subset_oracle() {
        for n in 1..=5 {
            let ours = enumerate_connected(n).unwrap();
            let brute = brute_force_classes(n);
            assert_eq!(ours.len(), brute.len());
            for g in &ours {
                assert!(g.is_connected());
                assert_eq!(
                    brute
                        .iter()
                        .filter(|b| are_isomorphic(b, g).is_some())
                        .count(),
                    1
                );
            }
        }
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let six = enumerate_connected(6).unwrap();
        for (i, a) in six.iter().enumerate() {
            for b in &six[i + 1..] {
                assert!(are_isomorphic(a, b).is_none());
            }
        }
    }

    #[test]
    fn too_large_and_file_mode() {
        assert!(matches!(
            Corpus::generated(8),
            Err(Error::CorpusTooLarge { max: 7 })
        ));
        let dir = std::env::temp_dir().join(format!("corpus-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("small.g6");
        std::fs::write(&path, ">>graph6<<Bg\nBw\n\n").unwrap();
        let c = Corpus::from_file(&path).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.source, CorpusSource::File(path.clone()));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
