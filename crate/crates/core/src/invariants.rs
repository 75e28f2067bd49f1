//! Structural and sign-dependent invariants: components, girth, shortest
//! cycles, balance and bounded-length cycle enumeration.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Sign, SignedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    /// ω(G)
    pub components: usize,
    /// c(G) = |E| − |V| + ω(G)
    pub cyclomatic: usize,
    /// Number of degree-one vertices.
    pub pendant_count: usize,
    pub bipartite: bool,
    /// Length of a shortest cycle; `None` for forests.
    pub girth: Option<usize>,
    /// Every cycle has positive sign.
    pub balanced: bool,
}

/// A simple cycle given as a cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleRecord {
    pub vertices: Vec<usize>,
    pub sign: Sign,
}

impl CycleRecord {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleError {
    TooShort { len: usize },
    VertexOutOfRange { vertex: usize },
    RepeatedVertex { vertex: usize },
    MissingEdge { u: usize, v: usize },
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::TooShort { len } => write!(f, "a cycle needs at least 3 vertices, got {len}"),
            CycleError::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            CycleError::RepeatedVertex { vertex } => write!(f, "vertex {vertex} repeated"),
            CycleError::MissingEdge { u, v } => write!(f, "no edge between {u} and {v}"),
        }
    }
}

impl core::error::Error for CycleError {}

/// Plain neighbour lists without signs.
pub(crate) fn neighbours(g: &SignedGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// Component label of every vertex, labels numbered by smallest vertex.
pub fn component_labels(g: &SignedGraph) -> (usize, Vec<usize>) {
    let adj = neighbours(g);
    let mut label = vec![usize::MAX; g.order()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for root in 0..g.order() {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = count;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

pub fn component_count(g: &SignedGraph) -> usize {
    component_labels(g).0
}

/// Connected with at least one vertex.
pub fn is_connected(g: &SignedGraph) -> bool {
    g.order() > 0 && component_count(g) == 1
}

pub fn cyclomatic_number(g: &SignedGraph) -> usize {
    g.size() + component_count(g) - g.order()
}

pub fn pendant_vertices(g: &SignedGraph) -> Vec<usize> {
    g.degrees()
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 1)
        .map(|(v, _)| v)
        .collect()
}

/// A proper 2-colouring if the underlying graph is bipartite.
pub fn bipartition(g: &SignedGraph) -> Option<Vec<bool>> {
    let adj = neighbours(g);
    let mut colour: Vec<Option<bool>> = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for root in 0..g.order() {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for &w in &adj[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    _ => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
}

pub fn is_bipartite(g: &SignedGraph) -> bool {
    bipartition(g).is_some()
}

/// Vertex potentials θ with every spanning-tree edge satisfying
/// `σ(uv) = θ(u)θ(v)`; roots (smallest vertex of each component) get `+`.
/// The BFS visits neighbours in increasing order.
pub fn tree_potentials(g: &SignedGraph) -> Vec<Sign> {
    let adj = g.adjacency();
    let mut pot: Vec<Option<Sign>> = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for root in 0..g.order() {
        if pot[root].is_some() {
            continue;
        }
        pot[root] = Some(Sign::Positive);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let pu = pot[u].expect("queued vertices have potentials");
            for &(w, s) in &adj[u] {
                if pot[w].is_none() {
                    pot[w] = Some(pu * s);
                    queue.push_back(w);
                }
            }
        }
    }
    pot.into_iter().map(|p| p.unwrap_or(Sign::Positive)).collect()
}

/// Balanced iff every edge agrees with the spanning-tree potentials.
pub fn is_balanced(g: &SignedGraph) -> bool {
    let pot = tree_potentials(g);
    g.edges().iter().all(|e| e.sign == pot[e.u] * pot[e.v])
}

/// Girth by breadth-first search from every vertex.
pub fn girth(g: &SignedGraph) -> Option<usize> {
    girth_from_adj(&neighbours(g))
}

pub(crate) fn girth_from_adj(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// A shortest cycle, or `None` for forests.
///
/// The witness is the lexicographically smallest vertex sequence among the
/// shortest cycles through the smallest vertex lying on any shortest cycle;
/// it starts at that vertex and its second vertex is smaller than its last.
pub fn shortest_cycle(g: &SignedGraph) -> Option<CycleRecord> {
    let adj = neighbours(g);
    let len = girth_from_adj(&adj)?;
    let n = g.order();
    for root in 0..n {
        let dist = bfs_distances(&adj, root);
        let mut path = vec![root];
        let mut used = vec![false; n];
        used[root] = true;
        if let Some(vertices) = first_cycle_through(&adj, &dist, len, &mut path, &mut used) {
            let sign = cycle_sign(g, &vertices).expect("search returns a cycle of g");
            return Some(CycleRecord { vertices, sign });
        }
    }
    None
}

fn bfs_distances(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn first_cycle_through(
    adj: &[Vec<usize>],
    dist: &[usize],
    len: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Vec<usize>> {
    let root = path[0];
    let u = *path.last().expect("path starts at the root");
    if path.len() == len {
        let closes = adj[u].binary_search(&root).is_ok();
        return (closes && path[1] < u).then(|| path.clone());
    }
    let remaining = len - path.len();
    for &w in &adj[u] {
        // vertices smaller than the root would have been found earlier
        if w < root || used[w] || dist[w] > remaining {
            continue;
        }
        used[w] = true;
        path.push(w);
        let found = first_cycle_through(adj, dist, len, path, used);
        path.pop();
        used[w] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Product of edge signs around `cycle` (including the closing edge).
pub fn cycle_sign(g: &SignedGraph, cycle: &[usize]) -> Result<Sign, CycleError> {
    if cycle.len() < 3 {
        return Err(CycleError::TooShort { len: cycle.len() });
    }
    let mut seen = vec![false; g.order()];
    for &v in cycle {
        if v >= g.order() {
            return Err(CycleError::VertexOutOfRange { vertex: v });
        }
        if seen[v] {
            return Err(CycleError::RepeatedVertex { vertex: v });
        }
        seen[v] = true;
    }
    let mut sign = Sign::Positive;
    for (i, &u) in cycle.iter().enumerate() {
        let v = cycle[(i + 1) % cycle.len()];
        sign = sign * g.sign(u, v).ok_or(CycleError::MissingEdge { u, v })?;
    }
    Ok(sign)
}

/// Every simple cycle of length at most `max_len`, once each.
///
/// Each cycle starts at its smallest vertex and is oriented so the second
/// vertex is smaller than the last; output is sorted by that sequence
/// within each starting vertex.
pub fn cycles_up_to(g: &SignedGraph, max_len: usize) -> Vec<CycleRecord> {
    let adj = neighbours(g);
    let mut out = Vec::new();
    if max_len < 3 {
        return out;
    }
    let mut used = vec![false; g.order()];
    for root in 0..g.order() {
        let mut path = vec![root];
        used[root] = true;
        collect_cycles(g, &adj, max_len, &mut path, &mut used, &mut out);
        used[root] = false;
    }
    out
}

fn collect_cycles(
    g: &SignedGraph,
    adj: &[Vec<usize>],
    max_len: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<CycleRecord>,
) {
    let root = path[0];
    let u = *path.last().expect("path starts at the root");
    for &w in &adj[u] {
        if w == root && path.len() >= 3 && path[1] < u {
            let sign = cycle_sign(g, path).expect("enumerated paths close into cycles");
            out.push(CycleRecord {
                vertices: path.clone(),
                sign,
            });
        }
        if w <= root || used[w] || path.len() == max_len {
            continue;
        }
        used[w] = true;
        path.push(w);
        collect_cycles(g, adj, max_len, path, used, out);
        path.pop();
        used[w] = false;
    }
}

pub fn profile(g: &SignedGraph) -> InvariantProfile {
    let components = component_count(g);
    InvariantProfile {
        components,
        cyclomatic: g.size() + components - g.order(),
        pendant_count: pendant_vertices(g).len(),
        bipartite: is_bipartite(g),
        girth: girth(g),
        balanced: is_balanced(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn negate(g: &SignedGraph, which: &[(usize, usize)]) -> SignedGraph {
        let signs: Vec<Sign> = g
            .edges()
            .iter()
            .map(|e| {
                if which.contains(&(e.u, e.v)) {
                    Sign::Negative
                } else {
                    e.sign
                }
            })
            .collect();
        g.with_signs(&signs).unwrap()
    }

    #[test]
    fn profile_of_k4() {
        let k4 = SignedGraph::all_positive(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = profile(&k4);
        assert_eq!(p.girth, Some(3));
        assert_eq!(p.cyclomatic, 3);
        assert!(p.balanced);
        assert!(!p.bipartite);
        assert_eq!(p.components, 1);
    }

    #[test]
    fn profile_of_tree() {
        let t = SignedGraph::all_positive(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let p = profile(&t);
        assert_eq!(p.girth, None);
        assert_eq!(p.cyclomatic, 0);
        assert_eq!(p.pendant_count, 3);
        assert!(p.bipartite);
    }

    #[test]
    fn profile_of_disconnected_graph() {
        let g = SignedGraph::all_positive(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)]).unwrap();
        let p = profile(&g);
        assert_eq!(p.components, 2);
        assert_eq!(p.cyclomatic, 2);
        assert_eq!(p.girth, Some(3));
    }

    #[test]
    fn shortest_cycle_of_c7_and_p6() {
        let c = shortest_cycle(&cycle(7)).unwrap();
        assert_eq!(c.vertices, [0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(c.len(), 7);
        assert!(shortest_cycle(&path(6)).is_none());
    }

    #[test]
    fn shortest_cycle_with_antipodal_chord() {
        let mut pairs: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        pairs.push((0, 4));
        let g = SignedGraph::all_positive(8, pairs).unwrap();
        let c = shortest_cycle(&g).unwrap();
        assert_eq!(c.vertices, [0, 1, 2, 3, 4]);
        // brute force: minimum over all enumerated cycles
        let min = cycles_up_to(&g, 8).iter().map(|c| c.len()).min();
        assert_eq!(min, Some(5));
    }

    #[test]
    fn cycle_sign_examples() {
        let c5 = cycle(5);
        assert_eq!(cycle_sign(&c5, &[0, 1, 2, 3, 4]), Ok(Sign::Positive));
        let one = negate(&c5, &[(1, 2)]);
        assert_eq!(cycle_sign(&one, &[0, 1, 2, 3, 4]), Ok(Sign::Negative));
        let two = negate(&cycle(4), &[(0, 1), (2, 3)]);
        assert_eq!(cycle_sign(&two, &[0, 1, 2, 3]), Ok(Sign::Positive));
    }

    #[test]
    fn cycle_sign_rejects_non_cycles() {
        let c5 = cycle(5);
        assert_eq!(cycle_sign(&c5, &[0, 1]), Err(CycleError::TooShort { len: 2 }));
        assert_eq!(
            cycle_sign(&c5, &[0, 1, 1]),
            Err(CycleError::RepeatedVertex { vertex: 1 })
        );
        assert_eq!(cycle_sign(&c5, &[0, 1, 2]), Err(CycleError::MissingEdge { u: 2, v: 0 }));
        assert_eq!(
            cycle_sign(&c5, &[0, 1, 9]),
            Err(CycleError::VertexOutOfRange { vertex: 9 })
        );
    }

    #[test]
    fn short_cycles_of_c5() {
        assert!(cycles_up_to(&cycle(5), 4).is_empty());
        assert_eq!(cycles_up_to(&cycle(5), 5).len(), 1);
    }

    #[test]
    fn k4_has_seven_cycles() {
        let k4 = SignedGraph::all_positive(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cycles = cycles_up_to(&k4, 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
        assert!(cycles.iter().all(|c| c.vertices[1] < *c.vertices.last().unwrap()));
    }

    #[test]
    fn balance_of_cycles() {
        assert!(is_balanced(&cycle(6)));
        assert!(!is_balanced(&negate(&cycle(6), &[(2, 3)])));
        assert!(is_balanced(&negate(&cycle(6), &[(2, 3), (4, 5)])));
    }
}
