//! Generator for the quasipolynomial family of vertex bipartitions.
//!
//! The generator maintains a state (V_C0, V_I0, A): vertices committed to the
//! clique side, vertices committed to the independent side, and the active
//! (undecided) rest. Every visited state outputs the two partitions
//! `(V_C0 ∪ A, V_I0)` and `(V_C0, V_I0 ∪ A)`, and while the depth is below
//! `2*floor(log2 n) + 1` it branches on every active vertex v twice:
//!
//! - v to the clique side: non-neighbours of v can no longer join the clique,
//!   so they commit to the independent side and only `A ∩ N(v)` stays active;
//! - v to the independent side: neighbours of v commit to the clique side and
//!   `A \ N[v]` stays active.
//!
//! The emitted family covers every pair of disjoint sets (X_C, X_I) with
//! G[X_C] a clique and G[X_I] independent: some emitted partition has
//! X_C inside its clique side and X_I inside its independent side. Total
//! emissions stay below `4 * (2n)^(2*floor(log2 n) + 1)`, and memory stays
//! polynomial because partitions are streamed to a visitor, never stored.
//!
//! Emission order is deterministic: active vertices in ascending id, the
//! clique child before the independent child, depth first. Repetitions are
//! possible and are not filtered.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::ops::ControlFlow;

/// A bipartition of the whole vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub clique_side: VertexSet,
    pub independent_side: VertexSet,
}

impl Partition {
    pub fn is_partition_of(&self, g: &Graph) -> bool {
        self.clique_side.ground_size() == g.n()
            && self.independent_side.ground_size() == g.n()
            && self.clique_side.is_disjoint_from(&self.independent_side)
            && self.clique_side.union(&self.independent_side) == VertexSet::full(g.n())
    }
}

/// Generator state: the tri-partition (V_C0, V_I0, A) plus the depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorState {
    pub assigned_clique: VertexSet,
    pub assigned_independent: VertexSet,
    pub active: VertexSet,
    pub depth: u32,
}

impl GeneratorState {
    /// The root state: everything active, depth 0.
    pub fn root(g: &Graph) -> Self {
        GeneratorState {
            assigned_clique: VertexSet::empty(g.n()),
            assigned_independent: VertexSet::empty(g.n()),
            active: VertexSet::full(g.n()),
            depth: 0,
        }
    }

    /// Child state for assigning active vertex `v` to the clique side:
    /// `(V_C0 ∪ {v}, V_I0 ∪ (A \ N[v]), A ∩ N(v))`, depth + 1.
    pub fn child_clique(&self, v: usize, g: &Graph) -> GeneratorState {
        assert!(self.active.contains(v), "vertex {v} is not active");
        let mut clique = self.assigned_clique.clone();
        clique.insert(v);
        let mut independent = self.assigned_independent.clone();
        let mut dropped = self.active.difference(g.neighbors(v));
        dropped.remove(v);
        independent.union_with(&dropped);
        let active = self.active.intersection(g.neighbors(v));
        GeneratorState {
            assigned_clique: clique,
            assigned_independent: independent,
            active,
            depth: self.depth + 1,
        }
    }

    /// Child state for assigning active vertex `v` to the independent side:
    /// `(V_C0 ∪ (A ∩ N(v)), V_I0 ∪ {v}, A \ N[v])`, depth + 1.
    pub fn child_independent(&self, v: usize, g: &Graph) -> GeneratorState {
        assert!(self.active.contains(v), "vertex {v} is not active");
        let mut clique = self.assigned_clique.clone();
        clique.union_with(&self.active.intersection(g.neighbors(v)));
        let mut independent = self.assigned_independent.clone();
        independent.insert(v);
        let mut active = self.active.difference(g.neighbors(v));
        active.remove(v);
        GeneratorState {
            assigned_clique: clique,
            assigned_independent: independent,
            active,
            depth: self.depth + 1,
        }
    }

    /// True iff (V_C0, V_I0, A) is a pairwise-disjoint cover of V(g).
    pub fn is_tripartition_of(&self, g: &Graph) -> bool {
        let n = g.n();
        self.assigned_clique.ground_size() == n
            && self.assigned_independent.ground_size() == n
            && self.active.ground_size() == n
            && self.assigned_clique.is_disjoint_from(&self.assigned_independent)
            && self.assigned_clique.is_disjoint_from(&self.active)
            && self.assigned_independent.is_disjoint_from(&self.active)
            && self
                .assigned_clique
                .union(&self.assigned_independent)
                .union(&self.active)
                == VertexSet::full(n)
    }
}

/// Recursion depth cap `2*floor(log2 n) + 1` (1 for n <= 1).
pub fn depth_bound(n: usize) -> u32 {
    if n <= 1 {
        1
    } else {
        2 * n.ilog2() + 1
    }
}

/// Upper bound on the number of emitted partitions,
/// `4 * (2n)^(2*floor(log2 n) + 1)`.
pub fn family_size_bound(n: usize) -> u128 {
    if n == 0 {
        return 2;
    }
    4u128 * (2 * n as u128).pow(depth_bound(n))
}

/// Instrumentation collected by a generator run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenStats {
    /// Partitions handed to the visitor (counting repetitions).
    pub emitted: u64,
    /// Deepest state visited.
    pub max_depth: u32,
}

/// Streams the partition family of `g` into `visit`, depth first. The
/// visitor receives the clique side and independent side of each emitted
/// partition (borrowed; clone to keep) and may stop the stream early by
/// returning `ControlFlow::Break`.
///
/// Returns the break value, if any, plus the run's instrumentation.
pub fn for_each_partition<R>(
    g: &Graph,
    mut visit: impl FnMut(&VertexSet, &VertexSet) -> ControlFlow<R>,
) -> (Option<R>, GenStats) {
    let mut stats = GenStats::default();
    let out = walk(g, &GeneratorState::root(g), depth_bound(g.n()), &mut stats, &mut visit);
    (out.break_value(), stats)
}

/// As [`for_each_partition`] but starting from an arbitrary state, so the
/// top-level subtrees can be traversed by independent workers.
pub fn for_each_partition_from<R>(
    g: &Graph,
    state: &GeneratorState,
    visit: &mut impl FnMut(&VertexSet, &VertexSet) -> ControlFlow<R>,
) -> (Option<R>, GenStats) {
    let mut stats = GenStats::default();
    let out = walk(g, state, depth_bound(g.n()), &mut stats, visit);
    (out.break_value(), stats)
}

/// The 2|A| children of the root state, in emission order.
pub fn root_children(g: &Graph) -> Vec<GeneratorState> {
    let root = GeneratorState::root(g);
    let mut out = Vec::with_capacity(2 * g.n());
    for v in root.active.iter() {
        out.push(root.child_clique(v, g));
        out.push(root.child_independent(v, g));
    }
    out
}

fn walk<R>(
    g: &Graph,
    state: &GeneratorState,
    bound: u32,
    stats: &mut GenStats,
    visit: &mut impl FnMut(&VertexSet, &VertexSet) -> ControlFlow<R>,
) -> ControlFlow<R> {
    stats.max_depth = stats.max_depth.max(state.depth);

    let all_clique = state.assigned_clique.union(&state.active);
    stats.emitted += 1;
    visit(&all_clique, &state.assigned_independent)?;
    let all_independent = state.assigned_independent.union(&state.active);
    stats.emitted += 1;
    visit(&state.assigned_clique, &all_independent)?;

    if state.depth < bound {
        for v in state.active.iter() {
            walk(g, &state.child_clique(v, g), bound, stats, visit)?;
            walk(g, &state.child_independent(v, g), bound, stats, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// Exhaustively checks the coverage guarantee on a small graph: every pair of
/// disjoint sets (X_C, X_I) with G[X_C] a clique and G[X_I] independent must
/// be covered by some partition in `family` (X_C inside the clique side and
/// X_I inside the independent side).
pub fn verify_coverage<'a>(g: &Graph, family: impl IntoIterator<Item = &'a Partition>) -> bool {
    let n = g.n();
    assert!(n <= 10, "coverage verification is exhaustive; needs n <= 10");
    // Distinct partitions as clique-side masks (the independent side is the
    // complement, so one mask per partition suffices).
    let mut seen = vec![false; 1usize << n];
    for p in family {
        debug_assert!(p.is_partition_of(g));
        seen[p.clique_side.as_mask_u64() as usize] = true;
    }
    let family_masks: Vec<u64> = (0..1u64 << n).filter(|&m| seen[m as usize]).collect();

    let row_masks: Vec<u64> = (0..n).map(|v| g.neighbors(v).as_mask_u64()).collect();
    let is_clique = |mask: u64| -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if mask & !row_masks[v] & !(1 << v) != 0 {
                return false;
            }
        }
        true
    };
    let is_independent = |mask: u64| -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if mask & row_masks[v] != 0 {
                return false;
            }
        }
        true
    };

    let cliques: Vec<u64> = (0..1u64 << n).filter(|&m| is_clique(m)).collect();
    let independents: Vec<u64> = (0..1u64 << n).filter(|&m| is_independent(m)).collect();

    for &xc in &cliques {
        for &xi in &independents {
            if xc & xi != 0 {
                continue;
            }
            let covered = family_masks
                .iter()
                .any(|&p| xc & !p == 0 && xi & p == 0);
            if !covered {
                return false;
            }
        }
    }
    true
}

/// Collects the emitted family of a small graph as owned partitions.
/// Intended for tests and inspection; the solver pipeline streams instead.
pub fn collect_family(g: &Graph) -> (Vec<Partition>, GenStats) {
    let mut family = Vec::new();
    let (_, stats) = for_each_partition::<()>(g, |c, i| {
        family.push(Partition {
            clique_side: c.clone(),
            independent_side: i.clone(),
        });
        ControlFlow::Continue(())
    });
    (family, stats)
}
