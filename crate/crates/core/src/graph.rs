//! The signed-graph data model: edges, switching, multiples and reduction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::matrix::IntMatrix;

/// Sign carried by an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    /// Product of a sequence of signs; the empty product is positive.
    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Positive, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An edge `u < v` with its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedEdge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl SignedEdge {
    /// The endpoint opposite to `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    SignCount { expected: usize, found: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::SignCount { expected, found } => {
                write!(f, "expected {expected} edge signs, found {found}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// `x` is a multiple of `y`: equal neighbourhoods and `σ(xz) = k·σ(yz)`
/// for every common neighbour `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplePair {
    pub x: usize,
    pub y: usize,
    pub k: Sign,
}

/// A simple graph on vertices `0..order` whose edges carry signs.
///
/// Edges are stored with `u < v` and sorted lexicographically, so two graphs
/// with the same signed edge set compare equal and resigning a graph keeps
/// edge indices stable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    order: usize,
    edges: Vec<SignedEdge>,
}

impl SignedGraph {
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for w in [a, b] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(SignedEdge { u, v, sign });
        }
        list.sort_unstable();
        for pair in list.windows(2) {
            if (pair[0].u, pair[0].v) == (pair[1].u, pair[1].v) {
                return Err(GraphError::DuplicateEdge {
                    u: pair[0].u,
                    v: pair[0].v,
                });
            }
        }
        Ok(SignedGraph { order, edges: list })
    }

    /// Underlying graph with every edge positive.
    pub fn all_positive<I>(order: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(order, pairs.into_iter().map(|(u, v)| (u, v, Sign::Positive)))
    }

    pub fn edgeless(order: usize) -> Self {
        SignedGraph {
            order,
            edges: Vec::new(),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        self.edges.iter().map(|e| e.sign)
    }

    /// Index of edge `uv` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&(a, b))).ok()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.edge_index(u, v).map(|i| self.edges[i].sign)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Same underlying graph, every edge positive.
    pub fn unsigned(&self) -> SignedGraph {
        self.resigned_with(|_| Sign::Positive)
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.order == other.order
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.u == b.u && a.v == b.v)
    }

    /// Same underlying graph with `signs[i]` on edge `i`.
    pub fn with_signs(&self, signs: &[Sign]) -> Result<SignedGraph, GraphError> {
        if signs.len() != self.edges.len() {
            return Err(GraphError::SignCount {
                expected: self.edges.len(),
                found: signs.len(),
            });
        }
        Ok(self.resigned_with(|i| signs[i]))
    }

    fn resigned_with<F: Fn(usize) -> Sign>(&self, sign_of: F) -> SignedGraph {
        SignedGraph {
            order: self.order,
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| SignedEdge { sign: sign_of(i), ..*e })
                .collect(),
        }
    }

    /// Sorted neighbour lists with the sign of each incident edge.
    pub fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.order];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// `(N₊(v), N₋(v))`, both sorted.
    pub fn neighbor_signs(&self, v: usize) -> Result<(Vec<usize>, Vec<usize>), GraphError> {
        self.check_vertex(v)?;
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for e in &self.edges {
            if let Some(w) = e.other(v) {
                match e.sign {
                    Sign::Positive => pos.push(w),
                    Sign::Negative => neg.push(w),
                }
            }
        }
        pos.sort_unstable();
        neg.sort_unstable();
        Ok((pos, neg))
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.order);
        for e in &self.edges {
            m.set_symmetric(e.u, e.v, e.sign.value() as i8);
        }
        m
    }

    /// Negates every edge with exactly one endpoint in `set`.
    pub fn switch(&self, set: &[usize]) -> Result<SignedGraph, GraphError> {
        let mut inside = vec![false; self.order];
        for &v in set {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        Ok(self.resigned_with(|i| {
            let e = &self.edges[i];
            if inside[e.u] != inside[e.v] {
                -e.sign
            } else {
                e.sign
            }
        }))
    }

    /// Induced subgraph on `keep`, re-indexed in increasing vertex order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<SignedGraph, GraphError> {
        let mut index = vec![usize::MAX; self.order];
        for &v in keep {
            self.check_vertex(v)?;
            index[v] = 0;
        }
        let mut next = 0;
        for slot in index.iter_mut() {
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| SignedEdge {
                u: index[e.u],
                v: index[e.v],
                sign: e.sign,
            })
            .collect();
        Ok(SignedGraph { order: next, edges })
    }

    /// `G − S`, re-indexed in increasing vertex order.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<SignedGraph, GraphError> {
        let mut gone = vec![false; self.order];
        for &v in remove {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.order).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Every unordered multiple pair `x < y`, in lexicographic order.
    ///
    /// Isolated vertices are multiples of each other with `k = +`.
    pub fn find_multiples(&self) -> Vec<MultiplePair> {
        let adj = self.adjacency();
        let mut pairs = Vec::new();
        for x in 0..self.order {
            for y in x + 1..self.order {
                if let Some(k) = multiple_ratio(&adj[x], &adj[y]) {
                    pairs.push(MultiplePair { x, y, k });
                }
            }
        }
        pairs
    }

    fn first_multiple(&self) -> Option<MultiplePair> {
        let adj = self.adjacency();
        for x in 0..self.order {
            for y in x + 1..self.order {
                if let Some(k) = multiple_ratio(&adj[x], &adj[y]) {
                    return Some(MultiplePair { x, y, k });
                }
            }
        }
        None
    }

    /// Deletes multiples until none remain: each round removes the higher
    /// vertex of the lexicographically first multiple pair.
    pub fn reduce(&self) -> SignedGraph {
        let mut current = self.clone();
        while let Some(pair) = current.first_multiple() {
            current = current
                .delete_vertices(&[pair.y])
                .expect("multiple pair vertices are in range");
        }
        current
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }
}

fn multiple_ratio(a: &[(usize, Sign)], b: &[(usize, Sign)]) -> Option<Sign> {
    if a.len() != b.len() {
        return None;
    }
    let mut ratio = None;
    for (&(za, sa), &(zb, sb)) in a.iter().zip(b) {
        if za != zb {
            return None;
        }
        let k = sa * sb;
        match ratio {
            None => ratio = Some(k),
            Some(r) if r != k => return None,
            _ => {}
        }
    }
    Some(ratio.unwrap_or(Sign::Positive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::rank;

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::all_positive(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> SignedGraph {
        let pairs = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        SignedGraph::all_positive(a + b, pairs).unwrap()
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(
            SignedGraph::all_positive(3, [(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            SignedGraph::all_positive(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            SignedGraph::all_positive(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn edges_are_canonical() {
        let g = SignedGraph::new(3, [(2, 1, Sign::Negative), (1, 0, Sign::Positive)]).unwrap();
        let pairs: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(pairs, [(0, 1), (1, 2)]);
        assert_eq!(g.sign(2, 1), Some(Sign::Negative));
    }

    #[test]
    fn adjacency_of_single_edge() {
        let g = SignedGraph::all_positive(2, [(0, 1)]).unwrap();
        let m = g.adjacency_matrix();
        assert_eq!(m.get(0, 1), 1);
        assert_eq!(m.get(1, 0), 1);
        assert_eq!(m.get(0, 0), 0);
    }

    #[test]
    fn adjacency_of_edgeless_graph_is_zero() {
        let m = SignedGraph::edgeless(3).adjacency_matrix();
        assert!((0..3).all(|i| (0..3).all(|j| m.get(i, j) == 0)));
    }

    #[test]
    fn adjacency_mirrors_negative_edge() {
        let g = cycle(4).switch(&[]).unwrap();
        let g = g
            .with_signs(&[Sign::Negative, Sign::Positive, Sign::Positive, Sign::Positive])
            .unwrap();
        let m = g.adjacency_matrix();
        let negatives = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| m.get(i, j) == -1)
            .count();
        assert_eq!(negatives, 2);
        assert!(m.is_symmetric());
    }

    #[test]
    fn switching_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.switch(&[]).unwrap(), c4);
        assert_eq!(c4.switch(&[0, 1, 2, 3]).unwrap(), c4);
        let s = c4.switch(&[0]).unwrap();
        let neg: Vec<_> = s
            .edges()
            .iter()
            .filter(|e| e.sign == Sign::Negative)
            .map(|e| (e.u, e.v))
            .collect();
        assert_eq!(neg, [(0, 1), (0, 3)]);
        assert_eq!(Sign::product(s.signs()), Sign::Positive);
        assert!(c4.switch(&[4]).is_err());
    }

    #[test]
    fn multiples_in_complete_bipartite() {
        let pairs = complete_bipartite(2, 3).find_multiples();
        let found: Vec<_> = pairs.iter().map(|p| (p.x, p.y, p.k)).collect();
        assert_eq!(
            found,
            [
                (0, 1, Sign::Positive),
                (2, 3, Sign::Positive),
                (2, 4, Sign::Positive),
                (3, 4, Sign::Positive)
            ]
        );
    }

    #[test]
    fn multiples_with_negative_ratio() {
        let g = complete_bipartite(2, 3).switch(&[4]).unwrap();
        let pairs = g.find_multiples();
        assert!(pairs.contains(&MultiplePair {
            x: 2,
            y: 4,
            k: Sign::Negative
        }));
        assert!(pairs.contains(&MultiplePair {
            x: 3,
            y: 4,
            k: Sign::Negative
        }));
        assert!(pairs.contains(&MultiplePair {
            x: 0,
            y: 1,
            k: Sign::Positive
        }));
    }

    #[test]
    fn cycle_has_no_multiples() {
        let c5 = cycle(5).with_signs(&[Sign::Negative; 5]).unwrap();
        assert!(c5.find_multiples().is_empty());
    }

    #[test]
    fn reduce_complete_bipartite_to_an_edge() {
        let k33 = complete_bipartite(3, 3);
        let reduced = k33.reduce();
        assert_eq!(reduced, SignedGraph::all_positive(2, [(0, 1)]).unwrap());
        assert_eq!(rank(&k33.adjacency_matrix()).rank, 2);
        assert_eq!(rank(&reduced.adjacency_matrix()).rank, 2);
    }

    #[test]
    fn reduce_leaves_c6_alone() {
        assert_eq!(cycle(6).reduce(), cycle(6));
    }

    #[test]
    fn reduce_collapses_isolated_vertices() {
        assert_eq!(SignedGraph::edgeless(3).reduce(), SignedGraph::edgeless(1));
    }

    #[test]
    fn neighbor_sign_examples() {
        let star = SignedGraph::all_positive(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.neighbor_signs(0).unwrap(), (vec![1, 2, 3], vec![]));
        assert_eq!(SignedGraph::edgeless(2).neighbor_signs(1).unwrap(), (vec![], vec![]));
        let c3 = SignedGraph::new(
            3,
            [(0, 1, Sign::Negative), (1, 2, Sign::Positive), (0, 2, Sign::Positive)],
        )
        .unwrap();
        assert_eq!(c3.neighbor_signs(1).unwrap(), (vec![2], vec![0]));
        assert!(c3.neighbor_signs(3).is_err());
    }

    #[test]
    fn delete_vertices_reindexes_in_order() {
        let p4 = SignedGraph::new(
            4,
            [(0, 1, Sign::Positive), (1, 2, Sign::Negative), (2, 3, Sign::Positive)],
        )
        .unwrap();
        let h = p4.delete_vertices(&[0]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.sign(0, 1), Some(Sign::Negative));
        assert_eq!(h.sign(1, 2), Some(Sign::Positive));
    }
}
