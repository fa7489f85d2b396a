//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine an ordered partition to an equitable
//! one, pick the first non-singleton cell, individualize each of its vertices in
//! turn. Leaves are discrete partitions, i.e. vertex orderings; the canonical
//! ordering is the leaf whose upper-triangle adjacency bit string is
//! lexicographically smallest. Automorphisms discovered at equivalent leaves
//! prune the tree in two ways: siblings in the same orbit of the pointwise
//! stabilizer of the current path are skipped, and a leaf equivalent to the first
//! or best leaf returns the search to the level where the paths diverge.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, MAX_ORDER};

/// Default order ceiling for canonical labeling.
pub const CANON_CEILING: usize = 12;

const CODE_WORDS: usize = (MAX_ORDER * (MAX_ORDER - 1) / 2).div_ceil(64);

/// Isomorphism-invariant identifier: the upper triangle of the canonically
/// relabeled adjacency matrix, read row by row, packed most significant bit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub n: usize,
    pub code: Vec<u64>,
}

/// Full result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    pub code: CanonicalCode,
    /// Automorphisms found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    /// The graph relabeled into canonical form.
    pub fn form(&self, g: &Graph) -> Graph {
        g.relabel(&self.labeling)
    }
}

/// Canonical code with the default ceiling of [`CANON_CEILING`] vertices.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_code_with_ceiling(g, CANON_CEILING)
}

pub fn canonical_code_with_ceiling(g: &Graph, ceiling: usize) -> Result<CanonicalCode> {
    if g.order() > ceiling.min(MAX_ORDER) {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: ceiling.min(MAX_ORDER),
        });
    }
    Ok(canonical_labeling(g).code)
}

/// Canonical labeling of an uncolored graph. Works for any order up to 64.
pub fn canonical_labeling(g: &Graph) -> Canonical {
    let cells = if g.order() == 0 {
        Vec::new()
    } else {
        vec![g.vertex_mask()]
    };
    canonical_labeling_colored(g, cells)
}

/// Canonical labeling respecting an ordered vertex coloring.
///
/// `cells` must partition the vertex set. Two colored graphs whose color classes
/// have the same sizes in the same order receive equal codes iff there is an
/// isomorphism mapping each color class onto the corresponding one.
pub fn canonical_labeling_colored(g: &Graph, cells: Vec<u64>) -> Canonical {
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), g.vertex_mask());
    let n = g.order();
    let mut search = Search {
        g,
        words: code_words(n),
        first: None,
        best: None,
        generators: Vec::new(),
    };
    if n == 0 {
        return Canonical {
            labeling: Vec::new(),
            code: CanonicalCode { n: 0, code: Vec::new() },
            generators: Vec::new(),
        };
    }
    let mut path = Vec::new();
    search.descend(cells, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    Canonical {
        labeling: best.labeling,
        code: CanonicalCode {
            n,
            code: best.code[..search.words].to_vec(),
        },
        generators: search.generators,
    }
}

/// Upper-triangle code of `g` under its own labeling.
pub fn labeled_code(g: &Graph) -> CanonicalCode {
    let order: Vec<usize> = (0..g.order()).collect();
    let words = code_words(g.order());
    CanonicalCode {
        n: g.order(),
        code: leaf_code(g, &order)[..words].to_vec(),
    }
}

fn code_words(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(64)
}

fn leaf_code(g: &Graph, labeling: &[usize]) -> [u64; CODE_WORDS] {
    let mut code = [0u64; CODE_WORDS];
    let mut t = 0usize;
    for i in 0..labeling.len() {
        let row = g.neighbors(labeling[i]);
        for &w in &labeling[i + 1..] {
            if row & bit(w) != 0 {
                code[t / 64] |= 1u64 << (63 - t % 64);
            }
            t += 1;
        }
    }
    code
}

/// Refines an ordered partition to the coarsest equitable refinement.
///
/// Cells are split by the number of neighbors in a splitter cell; the pieces
/// replace the original cell in increasing order of that count. The result depends
/// only on the graph structure and the input cell order, never on vertex labels.
pub fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    let mut counts: Vec<(u32, usize)> = Vec::with_capacity(g.order());
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut next: Vec<u64> = Vec::with_capacity(cells.len() + 4);
            let mut split = false;
            for &cell in &cells {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                counts.clear();
                counts.extend(Bits(cell).map(|v| ((g.neighbors(v) & splitter).count_ones(), v)));
                let c0 = counts[0].0;
                if counts.iter().all(|&(c, _)| c == c0) {
                    next.push(cell);
                    continue;
                }
                split = true;
                counts.sort_unstable();
                let mut cur = counts[0].0;
                let mut mask = 0u64;
                for &(c, v) in counts.iter() {
                    if c != cur {
                        next.push(mask);
                        mask = 0;
                        cur = c;
                    }
                    mask |= bit(v);
                }
                next.push(mask);
            }
            if split {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

struct Leaf {
    code: [u64; CODE_WORDS],
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    words: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller should unwind to the node at `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for x in Bits(cells[target]) {
            if !explored.is_empty() && self.pruned(x, &explored, path) {
                continue;
            }
            explored.push(x);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(x));
            child.push(cells[target] & !bit(x));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(x);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Whether `x` lies in the orbit of an explored sibling under the group
    /// generated by known automorphisms that fix `path` pointwise.
    fn pruned(&self, x: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        let mut any = false;
        for gen in &self.generators {
            if path.iter().any(|&p| gen[p] != p) {
                continue;
            }
            any = true;
            for (v, &w) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        if !any {
            return false;
        }
        let rx = find(&mut parent, x);
        explored.iter().any(|&y| find(&mut parent, y) == rx)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let labeling: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(self.g, &labeling);
        let words = self.words;
        let Some(first) = &self.first else {
            let leaf = Leaf {
                code,
                labeling,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                code,
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if code[..words] == first.code[..words] {
            let gen = automorphism(&first.labeling, &labeling);
            let level = common_prefix(path, &first.path);
            self.generators.push(gen);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match code[..words].cmp(&best.code[..words]) {
            Ordering::Equal => {
                let gen = automorphism(&best.labeling, &labeling);
                let level = common_prefix(path, &best.path);
                self.generators.push(gen);
                Some(level)
            }
            Ordering::Less => {
                self.best = Some(Leaf {
                    code,
                    labeling,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Greater => None,
        }
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Whether `u` and `v` are in the same orbit of the automorphism group of `g`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let rest = g.vertex_mask();
    let cu = canonical_labeling_colored(g, vec![rest & !bit(u), bit(u)]);
    let cv = canonical_labeling_colored(g, vec![rest & !bit(v), bit(v)]);
    cu.code == cv.code
}
