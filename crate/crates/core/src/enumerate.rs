//! Isomorph-free enumeration of small graphs by canonical augmentation.
//!
//! Each graph of order `n` is grown from a graph of order `n − 1` by adding a
//! vertex `v` with neighborhood `S`. A child is kept only when `v` lies in the
//! automorphism orbit of its canonical deletion vertex: the minimum-degree vertex
//! that comes last in the child's canonical labeling. Since the parent is unique up
//! to isomorphism, removing duplicate children of one parent by canonical code
//! leaves exactly one representative per class. Bipartite graphs are closed under
//! vertex deletion, so that class prunes during generation; connectivity is not
//! hereditary and is filtered at the final order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, refine, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Graph};

/// Largest order accepted by the enumerator.
pub const ENUMERATION_CEILING: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    All,
    Connected,
    Bipartite,
    ConnectedBipartite,
}

impl GraphClass {
    pub const ALL: [GraphClass; 4] = [
        GraphClass::All,
        GraphClass::Connected,
        GraphClass::Bipartite,
        GraphClass::ConnectedBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::All => "all",
            GraphClass::Connected => "connected",
            GraphClass::Bipartite => "bipartite",
            GraphClass::ConnectedBipartite => "connected_bipartite",
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Connected => g.is_connected(),
            GraphClass::Bipartite => g.is_bipartite().is_some(),
            GraphClass::ConnectedBipartite => g.is_connected() && g.is_bipartite().is_some(),
        }
    }

    pub fn is_bipartite(self) -> bool {
        matches!(self, GraphClass::Bipartite | GraphClass::ConnectedBipartite)
    }

    fn hereditary(self) -> bool {
        self.is_bipartite()
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphClass> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                offset: 0,
                msg: format!("unknown graph class {s:?} (expected all, connected, bipartite, connected_bipartite)"),
            })
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > ENUMERATION_CEILING {
        return Err(Error::OrderTooLarge {
            n,
            max: ENUMERATION_CEILING,
        });
    }
    Ok(())
}

/// Calls `visit` once per isomorphism class of order `n` in `class`, with the
/// graph in canonical form.
pub fn for_each<F>(n: usize, class: GraphClass, mut visit: F) -> Result<()>
where
    F: FnMut(&Graph, &CanonicalCode),
{
    check_order(n)?;
    grow(&Graph::empty(0)?, None, n, class, &mut visit);
    Ok(())
}

/// Parallel fold over the classes of order `n`: subtrees below a mid-level
/// frontier are folded independently and the partial results combined by `reduce`.
pub fn par_fold<T, I, F, R>(n: usize, class: GraphClass, identity: I, fold: F, reduce: R) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph, &CanonicalCode) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_order(n)?;
    let split = n.saturating_sub(3);
    let mut frontier: Vec<(Graph, CanonicalCode)> = Vec::new();
    grow(&Graph::empty(0)?, None, split, class_for_prefix(class), &mut |g, c| {
        frontier.push((*g, c.clone()))
    });
    Ok(frontier
        .par_iter()
        .map(|(g, code)| {
            let mut acc = Some(identity());
            grow(g, Some(code), n, class, &mut |h, c| {
                acc = Some(fold(acc.take().expect("accumulator"), h, c));
            });
            acc.expect("accumulator")
        })
        .reduce(&identity, &reduce))
}

/// Intermediate orders only need the hereditary part of the class.
fn class_for_prefix(class: GraphClass) -> GraphClass {
    if class.is_bipartite() {
        GraphClass::Bipartite
    } else {
        GraphClass::All
    }
}

/// All classes of order `n` in canonical form, sorted by canonical code.
pub fn enumerate_graphs(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    let mut all = par_fold(
        n,
        class,
        Vec::new,
        |mut acc, g, c| {
            acc.push((c.clone(), *g));
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    all.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(all.into_iter().map(|(_, g)| g).collect())
}

/// Visits every descendant of `g` at order `target` (or `g` itself if it already
/// has that order). `code` is `g`'s canonical code when known.
fn grow<F>(g: &Graph, code: Option<&CanonicalCode>, target: usize, class: GraphClass, visit: &mut F)
where
    F: FnMut(&Graph, &CanonicalCode),
{
    if g.order() == target {
        if class.contains(g) {
            match code {
                Some(c) => visit(g, c),
                None => visit(g, &canonical_labeling(g).code),
            }
        }
        return;
    }
    let prefix_class = if g.order() + 1 == target {
        class
    } else {
        class_for_prefix(class)
    };
    for (child, child_code) in children(g, prefix_class.hereditary()) {
        grow(&child, Some(&child_code), target, class, visit);
    }
}

/// Accepted children of `g`, in canonical form, one per isomorphism class.
fn children(g: &Graph, bipartite: bool) -> Vec<(Graph, CanonicalCode)> {
    let m = g.order();
    let v = m;
    let cap = if m == 0 { 0 } else { g.min_degree() + 1 };
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    for size in 0..=cap.min(m) {
        for s in subsets(m, size) {
            // The new vertex must have minimum degree in the child.
            let ok = (0..m).all(|u| {
                let du = g.degree(u) + usize::from(s & bit(u) != 0);
                du >= size
            });
            if !ok {
                continue;
            }
            let child = g.add_vertex(s).expect("order checked by caller");
            if bipartite && child.is_bipartite().is_none() {
                continue;
            }
            let canon = canonical_labeling(&child);
            if !is_canonical_deletion(&child, v, &canon.labeling, &canon.generators) {
                continue;
            }
            if seen.insert(canon.code.clone()) {
                out.push((canon.form(&child), canon.code));
            }
        }
    }
    out
}

/// Whether `v` is in the orbit of the canonical deletion vertex of `g`.
fn is_canonical_deletion(g: &Graph, v: usize, labeling: &[usize], generators: &[Vec<usize>]) -> bool {
    let delta = g.min_degree();
    let w = *labeling
        .iter()
        .rev()
        .find(|&&u| g.degree(u) == delta)
        .expect("nonempty graph");
    if w == v {
        return true;
    }
    // Vertices in different cells of the equitable partition are never similar.
    let cells = refine(g, vec![g.vertex_mask()]);
    if cells.iter().any(|&c| (c & bit(v) != 0) != (c & bit(w) != 0)) {
        return false;
    }
    if generator_orbit(g.order(), generators, v, w) {
        return true;
    }
    crate::canon::same_orbit(g, v, w)
}

fn generator_orbit(n: usize, generators: &[Vec<usize>], a: usize, b: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gen in generators {
        for (x, &y) in gen.iter().enumerate() {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx] = ry;
            }
        }
    }
    find(&mut parent, a) == find(&mut parent, b)
}

/// All `size`-subsets of `0..m` as bit masks, in increasing numeric order.
fn subsets(m: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = low_mask(m);
    let mut cur = if size == 0 { Some(0u64) } else if size > m { None } else { Some(low_mask(size)) };
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 {
            None
        } else {
            // Gosper's hack: next integer with the same popcount.
            let c = s & s.wrapping_neg();
            let r = s.wrapping_add(c);
            let next = (((r ^ s) >> 2) / c) | r;
            (next & !limit == 0 && r != 0).then_some(next)
        };
        Some(s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    /// Classes of all labeled graphs on `n` vertices, deduplicated by canonical code.
    fn labeled_oracle(n: usize, class: GraphClass) -> HashSet<CanonicalCode> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut out = HashSet::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if class.contains(&g) {
                out.insert(canonical_code(&g).unwrap());
            }
        }
        out
    }

    #[test]
    fn counts_match_labeled_oracle() {
        for class in GraphClass::ALL {
            for n in 0..=6 {
                let graphs = enumerate_graphs(n, class).unwrap();
                let codes: HashSet<CanonicalCode> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
                assert_eq!(codes.len(), graphs.len(), "duplicate class, n = {n}, {class}");
                assert_eq!(codes, labeled_oracle(n, class), "n = {n}, {class}");
            }
        }
    }

    #[test]
    fn known_counts() {
        let want: [(GraphClass, [usize; 6]); 4] = [
            (GraphClass::All, [1, 2, 4, 11, 34, 156]),
            (GraphClass::Connected, [1, 1, 2, 6, 21, 112]),
            (GraphClass::Bipartite, [1, 2, 3, 7, 13, 35]),
            (GraphClass::ConnectedBipartite, [1, 1, 1, 3, 5, 17]),
        ];
        for (class, counts) in want {
            for (i, &c) in counts.iter().enumerate() {
                assert_eq!(enumerate_graphs(i + 1, class).unwrap().len(), c, "n = {}, {class}", i + 1);
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let mut seq = Vec::new();
        for_each(6, GraphClass::Connected, |_, c| seq.push(c.clone())).unwrap();
        seq.sort();
        let par: Vec<CanonicalCode> = enumerate_graphs(6, GraphClass::Connected)
            .unwrap()
            .iter()
            .map(|g| canonical_code(g).unwrap())
            .collect();
        assert_eq!(seq, par);
    }

    #[test]
    fn output_is_canonical_and_sorted() {
        let graphs = enumerate_graphs(5, GraphClass::All).unwrap();
        let codes: Vec<CanonicalCode> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        for (g, c) in graphs.iter().zip(&codes) {
            assert_eq!(crate::canon::labeled_code(g), *c);
        }
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn subsets_enumerates_binomials() {
        for m in 0..=8 {
            for k in 0..=m + 1 {
                let all: Vec<u64> = subsets(m, k).collect();
                let want = (0u64..1 << m).filter(|s| s.count_ones() as usize == k).count();
                assert_eq!(all.len(), want, "m = {m}, k = {k}");
                assert!(all.iter().all(|s| s.count_ones() as usize == k && s >> m == 0));
            }
        }
    }

    #[test]
    fn ceiling_and_parsing() {
        assert!(matches!(enumerate_graphs(13, GraphClass::All), Err(Error::OrderTooLarge { .. })));
        assert_eq!("connected_bipartite".parse::<GraphClass>().unwrap(), GraphClass::ConnectedBipartite);
        assert!("trees".parse::<GraphClass>().is_err());
    }
}
