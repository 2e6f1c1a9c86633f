//! Brute-force oracles and reproducible instance generators.
//!
//! The oracles are ground truth for every solver in the crate: exact minimum
//! split deletion and exact minimum vertex cover by subset enumeration, with
//! hard size guards so a test cannot silently run an exponential search on a
//! large input. Random generation is seeded ChaCha8, so identical specs give
//! identical instances on every platform.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::solver::SvdInstance;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("input has {n} vertices; this oracle enumerates subsets and is capped at n <= {max}")]
    TooLarge { n: usize, max: usize },
}

const MAX_SVD_ORACLE: usize = 12;
const MAX_VC_ORACLE: usize = 14;
const MAX_ENUMERATION: usize = 6;

/// Adjacency rows as machine words for mask-based subset loops.
fn row_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).as_mask_u64()).collect()
}

fn mask_is_clique(rows: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask & !rows[v] & !(1u64 << v) != 0 {
            return false;
        }
    }
    true
}

fn mask_is_independent(rows: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask & rows[v] != 0 {
            return false;
        }
    }
    true
}

/// Split test by exhaustive bipartition, independent of the recognition
/// module: some subset of `kept` must be a clique with an independent rest.
fn mask_is_split(rows: &[u64], kept: u64) -> bool {
    let mut sub = kept;
    loop {
        if mask_is_clique(rows, sub) && mask_is_independent(rows, kept & !sub) {
            return true;
        }
        if sub == 0 {
            return false;
        }
        sub = (sub - 1) & kept;
    }
}

/// Next mask of the same popcount (Gosper's hack); masks enumerate subsets of
/// a fixed size in ascending numeric order.
fn next_same_popcount(mask: u64) -> u64 {
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    (((r ^ mask) >> 2) / c) | r
}

fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut cur = Some(first);
    std::iter::from_fn(move || {
        let mask = cur?;
        if mask >= limit {
            cur = None;
            return None;
        }
        cur = if mask == 0 { None } else { Some(next_same_popcount(mask)) };
        Some(mask)
    })
}

/// Exact minimum number of deletions turning `g` into a split graph, plus
/// one optimal deletion set. Capped at n <= 12.
pub fn oracle_min_svd(g: &Graph) -> Result<(usize, VertexSet), OracleError> {
    let n = g.n();
    if n > MAX_SVD_ORACLE {
        return Err(OracleError::TooLarge { n, max: MAX_SVD_ORACLE });
    }
    let rows = row_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for d in 0..=n {
        for del in subsets_of_size(n, d) {
            if mask_is_split(&rows, full & !del) {
                let witness = VertexSet::from_vertices(n, (0..n).filter(|v| del >> v & 1 == 1));
                return Ok((d, witness));
            }
        }
    }
    unreachable!("deleting every vertex leaves the empty graph, which is split")
}

/// Exact minimum vertex cover size of `g`, plus one optimal cover.
/// Capped at n <= 14.
pub fn oracle_min_vc(g: &Graph) -> Result<(usize, VertexSet), OracleError> {
    let n = g.n();
    if n > MAX_VC_ORACLE {
        return Err(OracleError::TooLarge { n, max: MAX_VC_ORACLE });
    }
    let rows = row_masks(g);
    for s in 0..=n {
        for cover in subsets_of_size(n, s) {
            let uncovered = (0..n).any(|v| cover >> v & 1 == 0 && rows[v] & !cover != 0);
            if !uncovered {
                let witness = VertexSet::from_vertices(n, (0..n).filter(|v| cover >> v & 1 == 1));
                return Ok((s, witness));
            }
        }
    }
    unreachable!("the full vertex set covers everything")
}

/// All 2^C(n,2) labeled graphs on `n` vertices in a fixed deterministic
/// order (ascending edge-mask). Capped at n <= 6.
pub fn enumerate_small_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    if n > MAX_ENUMERATION {
        return Err(OracleError::TooLarge { n, max: MAX_ENUMERATION });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pair list is simple by construction")
    }))
}

/// Planted-instance parameters: a split core of `core_size` vertices plus
/// `noise` extra vertices with random adjacency. Deleting the noise restores
/// the core, so the instance is feasible at budget `noise`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlantedSpec {
    pub core_size: usize,
    pub noise: usize,
}

/// Specification of a reproducible random SVD instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomInstanceSpec {
    pub n: usize,
    pub edge_probability: f64,
    pub planted: Option<PlantedSpec>,
    pub seed: u64,
}

impl RandomInstanceSpec {
    /// Plain G(n, p) with budget picked by the caller afterwards.
    pub fn gnp(n: usize, edge_probability: f64, seed: u64) -> Self {
        RandomInstanceSpec {
            n,
            edge_probability,
            planted: None,
            seed,
        }
    }

    /// Planted split core plus noise; `core_size + noise` must equal `n`.
    pub fn planted(n: usize, noise: usize, edge_probability: f64, seed: u64) -> Self {
        assert!(noise <= n, "noise cannot exceed n");
        RandomInstanceSpec {
            n,
            edge_probability,
            planted: Some(PlantedSpec {
                core_size: n - noise,
                noise,
            }),
            seed,
        }
    }
}

/// Builds the instance described by `spec`. Identical specs always produce
/// identical instances (seeded ChaCha8, fixed iteration order).
///
/// G(n, p) mode pairs the graph with budget 0; callers choose their own
/// budget. Planted mode: vertices `0..core_size` form a random split graph
/// (each to the clique or independent side with equal probability, all
/// clique edges present, cross edges with probability p), the last `noise`
/// vertices get random adjacency to everything before them, and the budget
/// is `noise`.
pub fn generate_random_instance(spec: &RandomInstanceSpec) -> SvdInstance {
    assert!(
        (0.0..=1.0).contains(&spec.edge_probability),
        "edge probability must lie in [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    match spec.planted {
        None => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(spec.edge_probability) {
                        edges.push((u, v));
                    }
                }
            }
            SvdInstance {
                graph: Graph::from_edges(n, edges).unwrap(),
                budget: 0,
            }
        }
        Some(PlantedSpec { core_size, noise }) => {
            assert_eq!(core_size + noise, n, "core_size + noise must equal n");
            let clique: Vec<bool> = (0..core_size).map(|_| rng.random_bool(0.5)).collect();
            let mut edges = Vec::new();
            for u in 0..core_size {
                for v in (u + 1)..core_size {
                    let present = if clique[u] && clique[v] {
                        true
                    } else if !clique[u] && !clique[v] {
                        false
                    } else {
                        rng.random_bool(spec.edge_probability)
                    };
                    if present {
                        edges.push((u, v));
                    }
                }
            }
            for u in core_size..n {
                for v in 0..u {
                    if rng.random_bool(spec.edge_probability) {
                        edges.push((v, u));
                    }
                }
            }
            SvdInstance {
                graph: Graph::from_edges(n, edges).unwrap(),
                budget: noise,
            }
        }
    }
}
