//! Generators for the graph families that appear in the extremal
//! characterisations, together with their closed-form ranks.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Sign, SignedGraph};
use crate::invariants::{cycles_up_to, is_balanced};

/// Edge signs for families whose sign pattern is free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Signing {
    AllPositive,
    /// One sign per edge, in the generated graph's sorted edge order.
    Explicit(Vec<Sign>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, all edges positive.
    Path { n: usize },
    /// `C_n`: balanced is all-positive, unbalanced has one negative edge on
    /// the lexicographically last edge.
    Cycle { n: usize, balanced: bool },
    /// All-positive `K_{a,b}`.
    BalancedCompleteBipartite { a: usize, b: usize },
    /// Complete tripartite graph with `σ(uv) = ε(u)ε(v)τ(i,j)` for `u` in
    /// part `i` and `v` in part `j`. `base` is `[τ12, τ13, τ23]`.
    TripartiteRank3 {
        sizes: [usize; 3],
        polarity: Vec<Sign>,
        base: [Sign; 3],
    },
    /// All-positive cycle `0..cycle_len` with `leaves[&i]` pendant vertices
    /// attached at cycle vertex `i`.
    CanonicalUnicyclic {
        cycle_len: usize,
        leaves: BTreeMap<usize, usize>,
    },
    /// θ(p, l, q): three internally disjoint paths of orders p, l, q between
    /// vertices 0 and 1; interiors follow in (p, l, q) order.
    Theta {
        p: usize,
        l: usize,
        q: usize,
        signing: Signing,
    },
    /// The 6-cycle `0..6` with `6, 7, 8` attached at `0, 2, 4` and joined
    /// to the apex `9`.
    T1 { signing: Signing },
    /// Cycle `0..g` (signed as [`FamilySpec::Cycle`]) whose vertex 0 is
    /// joined to the centre `g` of a star with leaves `g+1..=g+k`.
    CycleStar { g: usize, k: usize, balanced: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    TooSmall { family: &'static str, detail: &'static str },
    InvalidTheta { p: usize, l: usize, q: usize },
    PolarityCount { expected: usize, found: usize },
    LeafPosition { position: usize, cycle_len: usize },
    EmptyStar { position: usize },
    SignCount { expected: usize, found: usize },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::TooSmall { family, detail } => write!(f, "{family}: {detail}"),
            FamilyError::InvalidTheta { p, l, q } => write!(
                f,
                "theta({p},{l},{q}) needs every path order >= 2 and at most one equal to 2"
            ),
            FamilyError::PolarityCount { expected, found } => {
                write!(f, "expected {expected} vertex polarities, found {found}")
            }
            FamilyError::LeafPosition { position, cycle_len } => {
                write!(f, "leaf position {position} is not on a cycle of length {cycle_len}")
            }
            FamilyError::EmptyStar { position } => {
                write!(f, "star at cycle position {position} has no leaves")
            }
            FamilyError::SignCount { expected, found } => {
                write!(f, "expected {expected} edge signs, found {found}")
            }
        }
    }
}

impl core::error::Error for FamilyError {}

impl FamilySpec {
    /// T1 with all four 6-cycles negative: ring edges 0-1, 2-3 and 4-5 are
    /// negated.
    pub fn t1_all_six_cycles_negative() -> FamilySpec {
        let base = t1_pairs();
        let mut pairs = base.to_vec();
        pairs.sort_unstable();
        let signs = pairs
            .iter()
            .map(|p| match p {
                (0, 1) | (2, 3) | (4, 5) => Sign::Negative,
                _ => Sign::Positive,
            })
            .collect();
        FamilySpec::T1 {
            signing: Signing::Explicit(signs),
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        match self {
            FamilySpec::Path { n } if *n == 0 => Err(FamilyError::TooSmall {
                family: "path",
                detail: "needs at least one vertex",
            }),
            FamilySpec::Cycle { n, .. } if *n < 3 => Err(FamilyError::TooSmall {
                family: "cycle",
                detail: "needs at least three vertices",
            }),
            FamilySpec::BalancedCompleteBipartite { a, b } if *a == 0 || *b == 0 => Err(FamilyError::TooSmall {
                family: "complete bipartite",
                detail: "both parts must be nonempty",
            }),
            FamilySpec::TripartiteRank3 { sizes, polarity, .. } => {
                if sizes.contains(&0) {
                    return Err(FamilyError::TooSmall {
                        family: "tripartite",
                        detail: "all three parts must be nonempty",
                    });
                }
                let n: usize = sizes.iter().sum();
                if polarity.len() != n {
                    return Err(FamilyError::PolarityCount {
                        expected: n,
                        found: polarity.len(),
                    });
                }
                Ok(())
            }
            FamilySpec::CanonicalUnicyclic { cycle_len, leaves } => {
                if *cycle_len < 3 {
                    return Err(FamilyError::TooSmall {
                        family: "canonical unicyclic",
                        detail: "cycle length must be at least 3",
                    });
                }
                for (&position, &count) in leaves {
                    if position >= *cycle_len {
                        return Err(FamilyError::LeafPosition {
                            position,
                            cycle_len: *cycle_len,
                        });
                    }
                    if count == 0 {
                        return Err(FamilyError::EmptyStar { position });
                    }
                }
                Ok(())
            }
            FamilySpec::Theta { p, l, q, .. } => {
                let orders = [*p, *l, *q];
                let twos = orders.iter().filter(|&&x| x == 2).count();
                if orders.iter().any(|&x| x < 2) || twos > 1 {
                    Err(FamilyError::InvalidTheta { p: *p, l: *l, q: *q })
                } else {
                    Ok(())
                }
            }
            FamilySpec::CycleStar { g, k, .. } => {
                if *g < 3 {
                    Err(FamilyError::TooSmall {
                        family: "cycle-star",
                        detail: "cycle length must be at least 3",
                    })
                } else if *k == 0 {
                    Err(FamilyError::TooSmall {
                        family: "cycle-star",
                        detail: "the star needs at least one leaf",
                    })
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

fn t1_pairs() -> [(usize, usize); 12] {
    [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (0, 5),
        (0, 6),
        (2, 7),
        (4, 8),
        (6, 9),
        (7, 9),
        (8, 9),
    ]
}

fn cycle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

fn signed_cycle(n: usize, balanced: bool) -> SignedGraph {
    let g = SignedGraph::all_positive(n, cycle_pairs(n)).expect("cycle is simple");
    if balanced {
        g
    } else {
        negate_last_cycle_edge(g, n)
    }
}

fn negate_last_cycle_edge(g: SignedGraph, n: usize) -> SignedGraph {
    let last = g.edge_index(n - 2, n - 1).expect("cycle edge exists");
    let signs: Vec<Sign> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| if i == last { Sign::Negative } else { e.sign })
        .collect();
    g.with_signs(&signs).expect("sign count matches")
}

fn apply_signing(g: SignedGraph, signing: &Signing) -> Result<SignedGraph, FamilyError> {
    match signing {
        Signing::AllPositive => Ok(g),
        Signing::Explicit(signs) => g.with_signs(signs).map_err(|_| FamilyError::SignCount {
            expected: g.size(),
            found: signs.len(),
        }),
    }
}

/// Builds the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<SignedGraph, FamilyError> {
    spec.validate()?;
    let graph = match spec {
        FamilySpec::Path { n } => SignedGraph::all_positive(*n, (1..*n).map(|i| (i - 1, i))).expect("path is simple"),
        FamilySpec::Cycle { n, balanced } => signed_cycle(*n, *balanced),
        FamilySpec::BalancedCompleteBipartite { a, b } => {
            let pairs = (0..*a).flat_map(|i| (*a..a + b).map(move |j| (i, j)));
            SignedGraph::all_positive(a + b, pairs).expect("bipartite graph is simple")
        }
        FamilySpec::TripartiteRank3 { sizes, polarity, base } => {
            let n: usize = sizes.iter().sum();
            let mut part = Vec::with_capacity(n);
            for (i, &s) in sizes.iter().enumerate() {
                part.extend(core::iter::repeat_n(i, s));
            }
            let tau = |i: usize, j: usize| match (i.min(j), i.max(j)) {
                (0, 1) => base[0],
                (0, 2) => base[1],
                _ => base[2],
            };
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part[u] != part[v] {
                        edges.push((u, v, polarity[u] * polarity[v] * tau(part[u], part[v])));
                    }
                }
            }
            SignedGraph::new(n, edges).expect("tripartite graph is simple")
        }
        FamilySpec::CanonicalUnicyclic { cycle_len, leaves } => {
            let mut pairs: Vec<(usize, usize)> = cycle_pairs(*cycle_len).collect();
            let mut next = *cycle_len;
            for (&position, &count) in leaves {
                for _ in 0..count {
                    pairs.push((position, next));
                    next += 1;
                }
            }
            SignedGraph::all_positive(next, pairs).expect("unicyclic graph is simple")
        }
        FamilySpec::Theta { p, l, q, signing } => {
            let mut pairs = Vec::new();
            let mut next = 2;
            for order in [*p, *l, *q] {
                let mut prev = 0;
                for _ in 0..order - 2 {
                    pairs.push((prev, next));
                    prev = next;
                    next += 1;
                }
                pairs.push((prev, 1));
            }
            let g = SignedGraph::all_positive(next, pairs).expect("theta graph is simple");
            apply_signing(g, signing)?
        }
        FamilySpec::T1 { signing } => {
            let g = SignedGraph::all_positive(10, t1_pairs()).expect("T1 is simple");
            apply_signing(g, signing)?
        }
        FamilySpec::CycleStar { g, k, balanced } => {
            let mut pairs: Vec<(usize, usize)> = cycle_pairs(*g).collect();
            pairs.push((0, *g));
            for leaf in g + 1..=g + k {
                pairs.push((*g, leaf));
            }
            let graph = SignedGraph::all_positive(g + k + 1, pairs).expect("cycle-star is simple");
            if *balanced {
                graph
            } else {
                negate_last_cycle_edge(graph, *g)
            }
        }
    };
    Ok(graph)
}

/// Rank of a signed path of order `n`.
pub fn path_rank(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n
    } else {
        n - 1
    }
}

/// Rank of a signed cycle of order `n`.
pub fn cycle_rank(n: usize, balanced: bool) -> usize {
    let drop = if balanced { n.is_multiple_of(4) } else { n % 4 == 2 };
    if drop {
        n - 2
    } else {
        n
    }
}

/// The closed-form rank of the family member, when one is known for this
/// parameterisation.
pub fn expected_rank(spec: &FamilySpec) -> Result<Option<usize>, FamilyError> {
    spec.validate()?;
    let rank = match spec {
        FamilySpec::Path { n } => Some(path_rank(*n)),
        FamilySpec::Cycle { n, balanced } => Some(cycle_rank(*n, *balanced)),
        FamilySpec::BalancedCompleteBipartite { .. } => Some(2),
        FamilySpec::TripartiteRank3 { .. } => Some(3),
        FamilySpec::CanonicalUnicyclic { cycle_len, leaves } => {
            if leaves.is_empty() {
                Some(cycle_rank(*cycle_len, true))
            } else {
                // strip each pendant star (centre + one leaf gives 2); what
                // remains is a disjoint union of paths between the centres
                let centres: Vec<usize> = leaves.keys().copied().collect();
                let paths: usize = gaps(&centres, *cycle_len).into_iter().map(path_rank_or_zero).sum();
                Some(2 * centres.len() + paths)
            }
        }
        FamilySpec::Theta { p, l, q, .. } => {
            let g = generate(spec)?;
            let mut orders = [*p, *l, *q];
            orders.sort_unstable();
            if orders.iter().all(|x| x % 2 == 0) {
                Some(g.order())
            } else if orders == [3, 5, 5] {
                all_negative(&g, 6).then_some(6)
            } else if orders == [5, 5, 5] {
                is_balanced(&g).then_some(8)
            } else {
                None
            }
        }
        FamilySpec::T1 { .. } => {
            let g = generate(spec)?;
            all_negative(&g, 6).then_some(6)
        }
        FamilySpec::CycleStar { g, balanced, .. } => Some(2 + cycle_rank(*g, *balanced)),
    };
    Ok(rank)
}

fn path_rank_or_zero(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        path_rank(n)
    }
}

/// Number of cycle vertices strictly between cyclically consecutive
/// `centres` (sorted positions on a cycle of length `len`).
pub(crate) fn gaps(centres: &[usize], len: usize) -> Vec<usize> {
    let k = centres.len();
    if k == 1 {
        return vec![len - 1];
    }
    (0..k)
        .map(|i| {
            let a = centres[i];
            let b = centres[(i + 1) % k];
            (b + len - a) % len - 1
        })
        .collect()
}

fn all_negative(g: &SignedGraph, len: usize) -> bool {
    cycles_up_to(g, len)
        .iter()
        .filter(|c| c.len() == len)
        .all(|c| c.sign == Sign::Negative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{girth, profile};
    use crate::rank::{determinant, rank};
    use num_traits::Zero;

    fn exact_rank(g: &SignedGraph) -> usize {
        rank(&g.adjacency_matrix()).rank
    }

    #[test]
    fn unbalanced_c6() {
        let g = generate(&FamilySpec::Cycle { n: 6, balanced: false }).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(g.signs().filter(|s| *s == Sign::Negative).count(), 1);
        assert_eq!(g.sign(4, 5), Some(Sign::Negative));
        assert_eq!(exact_rank(&g), 4);
    }

    #[test]
    fn complete_bipartite_has_rank_two() {
        let g = generate(&FamilySpec::BalancedCompleteBipartite { a: 2, b: 3 }).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(exact_rank(&g), 2);
    }

    #[test]
    fn theta_444_is_nonsingular_for_every_signing() {
        let base = generate(&FamilySpec::Theta {
            p: 4,
            l: 4,
            q: 4,
            signing: Signing::AllPositive,
        })
        .unwrap();
        assert_eq!((base.order(), base.size()), (8, 9));
        for mask in 0u32..(1 << 9) {
            let signs: Vec<Sign> = (0..9)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    }
                })
                .collect();
            let g = base.with_signs(&signs).unwrap();
            assert!(!determinant(&g.adjacency_matrix()).is_zero());
            assert_eq!(exact_rank(&g), 8);
        }
    }

    #[test]
    fn theta_vertex_and_edge_counts() {
        for (p, l, q) in [(2, 3, 3), (5, 3, 5), (5, 5, 5), (2, 4, 6)] {
            let g = generate(&FamilySpec::Theta {
                p,
                l,
                q,
                signing: Signing::AllPositive,
            })
            .unwrap();
            assert_eq!(g.order(), p + l + q - 4);
            assert_eq!(g.size(), p + l + q - 3);
            let degrees = g.degrees();
            assert_eq!((degrees[0], degrees[1]), (3, 3));
        }
        assert_eq!(
            generate(&FamilySpec::Theta {
                p: 5,
                l: 3,
                q: 5,
                signing: Signing::AllPositive
            })
            .map(|g| profile(&g))
            .map(|p| (p.girth, p.cyclomatic)),
            Ok((Some(6), 2))
        );
    }

    #[test]
    fn theta_rejects_bad_orders() {
        for (p, l, q) in [(2, 2, 5), (1, 3, 3), (2, 2, 2)] {
            let spec = FamilySpec::Theta {
                p,
                l,
                q,
                signing: Signing::AllPositive,
            };
            assert_eq!(generate(&spec), Err(FamilyError::InvalidTheta { p, l, q }));
        }
    }

    #[test]
    fn canonical_unicyclic_with_two_stars() {
        let spec = FamilySpec::CanonicalUnicyclic {
            cycle_len: 6,
            leaves: BTreeMap::from([(0, 1), (2, 1)]),
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(gaps(&[0, 2], 6), [1, 3]);
        assert_eq!(exact_rank(&g), 6);
        assert_eq!(expected_rank(&spec), Ok(Some(6)));
    }

    #[test]
    fn tripartite_triangle() {
        let spec = FamilySpec::TripartiteRank3 {
            sizes: [1, 1, 1],
            polarity: vec![Sign::Positive; 3],
            base: [Sign::Positive; 3],
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g, SignedGraph::all_positive(3, [(0, 1), (0, 2), (1, 2)]).unwrap());
        assert_eq!(exact_rank(&g), 3);
    }

    #[test]
    fn cycle_star() {
        let spec = FamilySpec::CycleStar {
            g: 6,
            k: 2,
            balanced: false,
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(exact_rank(&g), 6);
        assert_eq!(expected_rank(&spec), Ok(Some(6)));
    }

    #[test]
    fn expected_rank_examples() {
        assert_eq!(expected_rank(&FamilySpec::Path { n: 5 }), Ok(Some(4)));
        let theta = FamilySpec::Theta {
            p: 5,
            l: 5,
            q: 5,
            signing: Signing::AllPositive,
        };
        assert_eq!(expected_rank(&theta), Ok(Some(8)));
        assert_eq!(expected_rank(&FamilySpec::t1_all_six_cycles_negative()), Ok(Some(6)));
        assert_eq!(
            expected_rank(&FamilySpec::T1 {
                signing: Signing::AllPositive
            }),
            Ok(None)
        );
    }

    #[test]
    fn t1_shape() {
        let g = generate(&FamilySpec::t1_all_six_cycles_negative()).unwrap();
        assert_eq!((g.order(), g.size()), (10, 12));
        assert_eq!(girth(&g), Some(6));
        let six: Vec<_> = cycles_up_to(&g, 6);
        assert_eq!(six.len(), 4);
        assert!(six.iter().all(|c| c.sign == Sign::Negative));
        assert_eq!(exact_rank(&g), 6);
    }

    #[test]
    fn generate_is_deterministic() {
        let spec = FamilySpec::Theta {
            p: 4,
            l: 6,
            q: 4,
            signing: Signing::AllPositive,
        };
        assert_eq!(generate(&spec), generate(&spec));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(generate(&FamilySpec::Cycle { n: 2, balanced: true }).is_err());
        assert!(generate(&FamilySpec::CycleStar {
            g: 5,
            k: 0,
            balanced: true
        })
        .is_err());
        let bad_leaf = FamilySpec::CanonicalUnicyclic {
            cycle_len: 4,
            leaves: BTreeMap::from([(4, 1)]),
        };
        assert_eq!(
            generate(&bad_leaf),
            Err(FamilyError::LeafPosition {
                position: 4,
                cycle_len: 4
            })
        );
        let short = FamilySpec::T1 {
            signing: Signing::Explicit(vec![Sign::Positive; 3]),
        };
        assert_eq!(generate(&short), Err(FamilyError::SignCount { expected: 12, found: 3 }));
    }
}
