//! Canonical labelling of small unsigned graphs (n ≤ 16) and generation of
//! connected graphs up to isomorphism with bounded cyclomatic number.
//!
//! Labelling is individualisation-refinement: colour refinement to an
//! equitable partition, then branching on the first non-singleton cell.
//! Twins in that cell are interchangeable, so only one of each twin class
//! is branched on. The canonical form is the labelling whose upper-triangle
//! bit string is largest.

use std::collections::HashMap;

use sigrank_core::SignedGraph;

pub const MAX_ORDER: usize = 16;

/// Bitset adjacency, one `u16` row per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    rows: Vec<u16>,
}

impl SmallGraph {
    pub fn from_signed(g: &SignedGraph) -> Self {
        assert!(
            g.order() <= MAX_ORDER,
            "canonical forms support at most {MAX_ORDER} vertices"
        );
        let mut rows = vec![0u16; g.order()];
        for e in g.edges() {
            rows[e.u] |= 1 << e.v;
            rows[e.v] |= 1 << e.u;
        }
        SmallGraph { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn to_signed(&self) -> SignedGraph {
        let n = self.order();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SignedGraph::all_positive(n, pairs.filter(|&(u, v)| self.has_edge(u, v)))
            .expect("bitset rows describe a simple graph")
    }

    fn with_vertex(&self, neighbours: u16) -> SmallGraph {
        let n = self.order();
        let mut rows = self.rows.clone();
        for (v, row) in rows.iter_mut().enumerate() {
            if neighbours >> v & 1 == 1 {
                *row |= 1 << n;
            }
        }
        rows.push(neighbours);
        SmallGraph { rows }
    }

    fn relabel(&self, order: &[usize]) -> SmallGraph {
        // order[i] is the old vertex placed at position i
        let n = self.order();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| {
                (0..n)
                    .filter(|&w| self.has_edge(v, w))
                    .fold(0u16, |acc, w| acc | 1 << pos[w])
            })
            .collect();
        SmallGraph { rows }
    }

    fn key_of(&self, order: &[usize]) -> u128 {
        let n = self.order();
        let mut key = 0u128;
        for i in 0..n {
            for j in i + 1..n {
                key = key << 1 | u128::from(self.has_edge(order[i], order[j]));
            }
        }
        key
    }

    fn is_twin(&self, a: usize, b: usize) -> bool {
        let mask = !(1u16 << a | 1u16 << b);
        self.rows[a] & mask == self.rows[b] & mask
    }
}

/// Splits colour classes by the multiset of neighbouring colours until
/// stable. Colours stay in `0..k` and refine the input order.
fn refine(g: &SmallGraph, colors: &mut [u32]) {
    let n = g.order();
    let mut classes = {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = (0..n).filter(|&w| g.has_edge(v, w)).map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        for (v, sig) in sigs.iter().enumerate() {
            colors[v] = distinct.binary_search(&sig).expect("signature is present") as u32;
        }
        if distinct.len() == classes {
            return;
        }
        classes = distinct.len();
    }
}

fn search(g: &SmallGraph, mut colors: Vec<u32>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = g.order();
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&k| k > 1) else {
        let mut order = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let key = g.key_of(&order);
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            *best = Some((key, order));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&w| g.is_twin(v, w)) {
            continue;
        }
        tried.push(v);
        let next = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + u32::from(c as usize == target && u != v))
            .collect();
        search(g, next, best);
    }
}

/// Canonical relabelling and its key; isomorphic graphs get equal keys.
pub fn canonical_form(g: &SmallGraph) -> (u128, SmallGraph) {
    if g.order() == 0 {
        return (0, g.clone());
    }
    let mut best = None;
    search(g, vec![0; g.order()], &mut best);
    let (key, order) = best.expect("search reaches at least one leaf");
    (key, g.relabel(&order))
}

fn cyclomatic(g: &SmallGraph) -> usize {
    // only used on connected graphs
    g.size() + 1 - g.order()
}

/// Connected graphs on `1..=max_n` vertices with cyclomatic number at most
/// `max_c`, one per isomorphism class, in canonical form. `levels[k]`
/// holds the graphs on `k + 1` vertices, sorted by canonical key.
///
/// Deleting a non-cut vertex never raises the cyclomatic number, so every
/// class arises from a smaller one by adding a vertex.
pub fn connected_classes(max_n: usize, max_c: usize) -> Vec<Vec<SmallGraph>> {
    assert!(max_n <= MAX_ORDER, "at most {MAX_ORDER} vertices supported");
    let mut levels: Vec<Vec<SmallGraph>> = Vec::new();
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![SmallGraph { rows: vec![0] }]);
    for n in 2..=max_n {
        let mut found: HashMap<u128, SmallGraph> = HashMap::new();
        for g in &levels[n - 2] {
            let budget = max_c - cyclomatic(g) + 1;
            let prev = n - 1;
            for s in 1u16..(1 << prev) {
                if s.count_ones() as usize > budget {
                    continue;
                }
                let (key, canon) = canonical_form(&g.with_vertex(s));
                found.entry(key).or_insert(canon);
            }
        }
        let mut level: Vec<(u128, SmallGraph)> = found.into_iter().collect();
        level.sort_unstable_by_key(|(k, _)| std::cmp::Reverse(*k));
        levels.push(level.into_iter().map(|(_, g)| g).collect());
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn from_mask(n: usize, mask: u32) -> SmallGraph {
        let mut rows = vec![0u16; n];
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> k & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
                k += 1;
            }
        }
        SmallGraph { rows }
    }

    #[test]
    fn class_counts_of_all_graphs() {
        // graphs on n unlabelled vertices, n = 1..=6
        let expected = [1, 2, 4, 11, 34, 156];
        for n in 1..=6 {
            let pairs = n * (n - 1) / 2;
            let keys: HashSet<u128> = (0..1u32 << pairs).map(|m| canonical_form(&from_mask(n, m)).0).collect();
            assert_eq!(keys.len(), expected[n - 1], "n = {n}");
        }
    }

    #[test]
    fn key_is_invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300usize {
            let n = 2 + trial % 11;
            let mut rows = vec![0u16; n];
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        rows[u] |= 1 << v;
                        rows[v] |= 1 << u;
                    }
                }
            }
            let g = SmallGraph { rows };
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
            assert_eq!(canonical_form(&g).1, canonical_form(&h).1);
        }
    }

    #[test]
    fn canonical_form_is_isomorphic() {
        let g = from_mask(5, 0b10_1101_1001);
        let (_, c) = canonical_form(&g);
        assert_eq!(c.size(), g.size());
        let mut a: Vec<u32> = g.rows.iter().map(|r| r.count_ones()).collect();
        let mut b: Vec<u32> = c.rows.iter().map(|r| r.count_ones()).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn connected_class_counts_by_cyclomatic_number() {
        // rows: n = 1..=10; columns: c = 0..=3
        let expected: [[usize; 4]; 10] = [
            [1, 0, 0, 0],
            [1, 0, 0, 0],
            [1, 1, 0, 0],
            [2, 2, 1, 1],
            [3, 5, 5, 4],
            [6, 13, 19, 22],
            [11, 33, 67, 107],
            [23, 89, 236, 486],
            [47, 240, 797, 2075],
            [106, 657, 2678, 8548],
        ];
        let levels = connected_classes(10, 3);
        for (k, level) in levels.iter().enumerate() {
            let mut counts = [0usize; 4];
            for g in level {
                counts[cyclomatic(g)] += 1;
            }
            assert_eq!(counts, expected[k], "n = {}", k + 1);
        }
    }
}
