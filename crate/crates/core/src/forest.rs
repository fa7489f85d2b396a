//! Star forests, exact containment, and the edge-count bounds for F-free graphs.
//!
//! A star forest `F = S_{d_1} ∪ … ∪ S_{d_k}` is stored as its sorted leaf counts
//! `d_1 ≥ … ≥ d_k ≥ 1`. `S_d` is `K_{1,d}`: one center and `d` leaves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{bit, Bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarForest {
    degrees: Vec<usize>,
}

impl StarForest {
    /// Sorts `degrees` non-increasingly. Needs at least one star, each with a leaf.
    pub fn new(mut degrees: Vec<usize>) -> Result<StarForest> {
        if degrees.is_empty() {
            return Err(Error::ParamOutOfRange("a star forest needs at least one star".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::ParamOutOfRange("every star needs at least one leaf".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(StarForest { degrees })
    }

    /// `k` copies of `S_d`.
    pub fn uniform(k: usize, d: usize) -> Result<StarForest> {
        StarForest::new(vec![d; k])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of stars.
    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    pub fn sum_d(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Vertex count of `F`.
    pub fn order(&self) -> usize {
        self.sum_d() + self.k()
    }

    /// Smallest star size `d_k`.
    pub fn min_degree(&self) -> usize {
        *self.degrees.last().expect("nonempty")
    }

    pub fn max_degree(&self) -> usize {
        self.degrees[0]
    }

    /// The forest itself as a graph; star `i` has its center before its leaves.
    pub fn to_graph(&self) -> Result<Graph> {
        let mut out = Graph::empty(0)?;
        for &d in &self.degrees {
            let star = Graph::empty(1)?.join(&Graph::empty(d)?)?;
            out = out.union(&star)?;
        }
        Ok(out)
    }

    /// `d1,d2,...,dk` without the `k:` prefix.
    pub fn list_string(&self) -> String {
        self.degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn require_k2(&self) -> Result<()> {
        if self.k() < 2 {
            return Err(Error::ParamOutOfRange(format!(
                "bound needs at least two stars, got k = {}",
                self.k()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for StarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.k(), self.list_string())
    }
}

impl FromStr for StarForest {
    type Err = Error;

    /// Accepts `k:d1,...,dk` or the bare list `d1,...,dk`, in any order.
    fn from_str(s: &str) -> Result<StarForest> {
        let s = s.trim();
        let (k, list, base) = match s.split_once(':') {
            Some((k, rest)) => {
                let k: usize = k.trim().parse().map_err(|_| Error::Parse {
                    offset: 0,
                    msg: format!("bad star count {k:?}"),
                })?;
                (Some(k), rest, s.len() - rest.len())
            }
            None => (None, s, 0),
        };
        let mut degrees = Vec::new();
        let mut offset = base;
        for part in list.split(',') {
            let d = part.trim().parse::<usize>().map_err(|_| Error::Parse {
                offset,
                msg: format!("bad star size {part:?}"),
            })?;
            degrees.push(d);
            offset += part.len() + 1;
        }
        if let Some(k) = k {
            if k != degrees.len() {
                return Err(Error::Parse {
                    offset: 0,
                    msg: format!("prefix says {k} stars but {} sizes follow", degrees.len()),
                });
            }
        }
        StarForest::new(degrees)
    }
}

impl Serialize for StarForest {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StarForest {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether `g` contains `k` vertex-disjoint stars, star `i` with `d_i` leaves.
///
/// Centers are enumerated as one vertex set per distinct star size (so equal
/// sizes are never permuted), then the leaves are assigned by a max-flow:
/// source → center (capacity `d_i`) → non-center neighbor (1) → sink (1).
/// Centers never serve as leaves; an edge between two centers is simply unused.
pub fn contains_star_forest(g: &Graph, f: &StarForest) -> bool {
    let n = g.order();
    if n < f.order() {
        return false;
    }
    let dk = f.min_degree();
    let candidates: Vec<usize> = {
        let mut c: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= dk).collect();
        c.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        c
    };
    if candidates.len() < f.k() {
        return false;
    }
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &d in f.degrees() {
        match groups.last_mut() {
            Some((gd, m)) if *gd == d => *m += 1,
            _ => groups.push((d, 1)),
        }
    }
    let mut roles: Vec<(usize, usize)> = Vec::with_capacity(f.k());
    assign_groups(g, &candidates, &groups, 0, 0, &mut roles)
}

fn assign_groups(
    g: &Graph,
    candidates: &[usize],
    groups: &[(usize, usize)],
    gi: usize,
    used: u64,
    roles: &mut Vec<(usize, usize)>,
) -> bool {
    if gi == groups.len() {
        return leaves_fit(g, used, roles);
    }
    let (d, m) = groups[gi];
    let pool: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| used & bit(v) == 0 && g.degree(v) >= d)
        .collect();
    choose(g, &pool, 0, m, d, candidates, groups, gi, used, roles)
}

#[allow(clippy::too_many_arguments)]
fn choose(
    g: &Graph,
    pool: &[usize],
    from: usize,
    left: usize,
    d: usize,
    candidates: &[usize],
    groups: &[(usize, usize)],
    gi: usize,
    used: u64,
    roles: &mut Vec<(usize, usize)>,
) -> bool {
    if left == 0 {
        return assign_groups(g, candidates, groups, gi + 1, used, roles);
    }
    for i in from..pool.len() {
        if pool.len() - i < left {
            break;
        }
        let v = pool[i];
        roles.push((v, d));
        let found = choose(g, pool, i + 1, left - 1, d, candidates, groups, gi, used | bit(v), roles);
        roles.pop();
        if found {
            return true;
        }
    }
    false
}

/// Leaf assignment for a fixed set of centers and their star sizes.
fn leaves_fit(g: &Graph, centers: u64, roles: &[(usize, usize)]) -> bool {
    let free = g.vertex_mask() & !centers;
    let mut reach = 0u64;
    let mut need = 0usize;
    for &(c, d) in roles {
        let avail = g.neighbors(c) & free;
        if (avail.count_ones() as usize) < d {
            return false;
        }
        reach |= avail;
        need += d;
    }
    if (reach.count_ones() as usize) < need {
        return false;
    }
    // Nodes: 0 source, 1 sink, 2.. centers, then one node per reachable leaf.
    let k = roles.len();
    let leaves: Vec<usize> = Bits(reach).collect();
    let mut index = [usize::MAX; 64];
    for (i, &v) in leaves.iter().enumerate() {
        index[v] = 2 + k + i;
    }
    let mut net = FlowNetwork::new(2 + k + leaves.len());
    for (i, &(c, d)) in roles.iter().enumerate() {
        net.add_arc(0, 2 + i, d as u32);
        for w in Bits(g.neighbors(c) & free) {
            net.add_arc(2 + i, index[w], 1);
        }
    }
    for i in 0..leaves.len() {
        net.add_arc(2 + k + i, 1, 1);
    }
    net.max_flow(0, 1, need as u32) as usize == need
}

/// Exhaustive containment check over ordered center tuples and leaf subsets.
///
/// Exponential; intended as an independent reference for small graphs.
pub fn contains_star_forest_oracle(g: &Graph, f: &StarForest) -> bool {
    fn place(g: &Graph, sizes: &[usize], used: u64) -> bool {
        let Some((&d, rest)) = sizes.split_first() else {
            return true;
        };
        for c in 0..g.order() {
            if used & bit(c) != 0 {
                continue;
            }
            let avail: Vec<usize> = Bits(g.neighbors(c) & !used).collect();
            if avail.len() < d {
                continue;
            }
            if subsets(g, &avail, 0, d, used | bit(c), rest) {
                return true;
            }
        }
        false
    }
    fn subsets(g: &Graph, avail: &[usize], from: usize, left: usize, used: u64, rest: &[usize]) -> bool {
        if left == 0 {
            return place(g, rest, used);
        }
        (from..avail.len()).any(|i| subsets(g, avail, i + 1, left - 1, used | bit(avail[i]), rest))
    }
    place(g, f.degrees(), 0)
}

/// `g` contains no copy of `f` as a (not necessarily induced) subgraph.
pub fn is_f_free(g: &Graph, f: &StarForest) -> bool {
    !contains_star_forest(g, f)
}

/// Edge bound valid for every F-free graph of order `n ≥ Σd_i + k`:
/// `(Σd_i + 2k − 3)·n − (k − 1)(Σd_i + k − 1)`.
///
/// It comes from counting vertices of degree at least `Σd_i + k − 1`: an F-free
/// graph has at most `k − 1` of them.
pub fn coarse_edge_bound(f: &StarForest, n: usize) -> Result<u64> {
    f.require_k2()?;
    if n < f.order() {
        return Err(Error::ParamOutOfRange(format!(
            "needs n >= {} (order of F), got {n}",
            f.order()
        )));
    }
    let (s, k, n) = (f.sum_d() as i128, f.k() as i128, n as i128);
    let v = (s + 2 * k - 3) * n - (k - 1) * (s + k - 1);
    u64::try_from(v).map_err(|_| Error::ParamOutOfRange(format!("bound {v} does not fit in u64")))
}

/// Maximum edge count of an F-free graph of large order when every `d_i ≥ 2`:
/// `max_i (i−1)(n−i+1) + C(i−1, 2) + ⌊(d_i−1)(n−i+1)/2⌋`.
///
/// "Large order" is not quantified; callers decide whether `n` qualifies.
pub fn large_n_edge_bound(f: &StarForest, n: usize) -> Result<u64> {
    f.require_k2()?;
    if f.min_degree() < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "every star needs at least two leaves, got d_k = {}",
            f.min_degree()
        )));
    }
    if n < f.order() {
        return Err(Error::ParamOutOfRange(format!(
            "needs n >= {} (order of F), got {n}",
            f.order()
        )));
    }
    Ok(large_n_edge_terms(f, n).into_iter().max().expect("k >= 2"))
}

/// The individual terms `i = 1..k` of [`large_n_edge_bound`].
pub fn large_n_edge_terms(f: &StarForest, n: usize) -> Vec<u64> {
    let n = n as u64;
    f.degrees()
        .iter()
        .enumerate()
        .map(|(idx, &d)| {
            let i = idx as u64 + 1;
            let rest = n - i + 1;
            let pairs = (i - 1) * i.saturating_sub(2) / 2;
            (i - 1) * rest + pairs + (d as u64 - 1) * rest / 2
        })
        .collect()
}
