//! Preprocessing of SVD instances via hitting-set reductions.
//!
//! Deleting at most k vertices leaves a split graph iff the deletion set hits
//! every forbidden induced subgraph (the class is hereditary, so a forbidden
//! configuration surviving the deletion is already present in the input).
//! That makes an SVD instance a hitting-set instance whose sets have at most
//! five elements, and the classic sunflower machinery applies:
//!
//! - more than k pairwise disjoint constraints: infeasible;
//! - a core S shared by more than k constraints with pairwise disjoint
//!   remainders: every solution hits S. A singleton core forces its vertex
//!   into the deletion set; a larger core replaces its petals, shrinking the
//!   constraint system.
//!
//! Vertices are removed from the graph only where removal is provably safe:
//! forced vertices and vertices isolated after the forced deletions (an
//! isolated vertex always fits the independent side). Vertices in no
//! remaining constraint are kept but reported as undeletable.
//!
//! At a fixed point the constraint system has at most `120 * k^5` sets
//! (greedy petal extraction gives the same `s! * k^s` recursion as the
//! sunflower lemma), so at most `600 * k^5` constraint vertices remain.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::solver::SvdInstance;
use crate::split::enumerate_forbidden_subgraphs;
use itertools::Itertools;
use std::collections::BTreeSet;

type Constraint = Vec<u32>;

/// How the kernel resolved the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelVerdict {
    /// Not resolved; solve the reduced instance and add `forced_deletions`.
    Reduced,
    /// Feasible; `forced_deletions` alone is a solution.
    Yes,
    /// Infeasible within the budget.
    No,
}

/// Counters for the JSON report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KernelStats {
    /// Forbidden subgraphs enumerated in the input.
    pub constraints_found: usize,
    /// Constraints remaining at the fixed point.
    pub constraints_remaining: usize,
    /// Distinct vertices in remaining constraints.
    pub constraint_vertices: usize,
    /// Total reduction-rule applications.
    pub rules_fired: u64,
    /// Vertices forced into the deletion set.
    pub forced: usize,
    /// Sunflower core replacements (cores of size >= 2).
    pub replacements: u64,
}

/// Result of [`svd_kernelize`].
#[derive(Clone, Debug)]
pub struct KernelResult {
    pub verdict: KernelVerdict,
    /// Equivalent smaller instance (meaningful for `Reduced`; for `Yes` it
    /// holds the residual split graph, for `No` it is empty).
    pub reduced: SvdInstance,
    /// Vertices of the original graph every solution must delete.
    pub forced_deletions: VertexSet,
    /// `map[new] = old`: reduced-instance ids back to original ids.
    pub map: Vec<usize>,
    /// Reduced-instance ids outside every remaining constraint; kept for
    /// split-ness but never worth deleting.
    pub undeletable: VertexSet,
    pub stats: KernelStats,
}

impl KernelResult {
    /// Lifts a deletion set over the reduced instance back to original ids,
    /// including the forced deletions.
    pub fn lift(&self, reduced_deletions: &VertexSet) -> VertexSet {
        let mut out = self.forced_deletions.clone();
        for v in reduced_deletions.iter() {
            out.insert(self.map[v]);
        }
        out
    }
}

/// Shrinks an SVD instance without changing its answer or increasing the
/// budget. See the module docs for the rules.
pub fn svd_kernelize(inst: &SvdInstance) -> KernelResult {
    let g = &inst.graph;
    let n = g.n();
    let mut budget = inst.budget;
    let mut stats = KernelStats::default();

    let mut family: BTreeSet<Constraint> = enumerate_forbidden_subgraphs(g)
        .map(|w| {
            let mut c: Constraint = w.vertices.iter().map(|&v| v as u32).collect();
            c.sort_unstable();
            c
        })
        .collect();
    stats.constraints_found = family.len();

    let mut forced = VertexSet::empty(n);

    'fixpoint: while !family.is_empty() {
        // Empty-core sunflower: more than `budget` pairwise disjoint
        // constraints need more than `budget` distinct deletions.
        if greedy_petals(&family, &[]) > budget {
            stats.rules_fired += 1;
            return no_result(forced, stats);
        }

        for size in 1..=4usize {
            let mut cores: BTreeSet<Constraint> = BTreeSet::new();
            for c in &family {
                if c.len() > size {
                    for sub in c.iter().copied().combinations(size) {
                        cores.insert(sub);
                    }
                }
            }
            for core in cores {
                if greedy_petals(&family, &core) <= budget {
                    continue;
                }
                stats.rules_fired += 1;
                if size == 1 {
                    // The core vertex is in every solution.
                    if budget == 0 {
                        return no_result(forced, stats);
                    }
                    budget -= 1;
                    stats.forced += 1;
                    let v = core[0];
                    forced.insert(v as usize);
                    family.retain(|c| !c.contains(&v));
                } else {
                    // Every solution hits the core; all constraints that
                    // contain it are dominated by it.
                    stats.replacements += 1;
                    family.retain(|c| !is_superset(c, &core));
                    family.insert(core);
                }
                continue 'fixpoint;
            }
        }
        break;
    }

    stats.constraints_remaining = family.len();
    let in_constraints: BTreeSet<u32> = family.iter().flatten().copied().collect();
    stats.constraint_vertices = in_constraints.len();

    // Physical shrink: drop forced vertices, then vertices isolated in the
    // remainder (they always fit the independent side of any certificate).
    let mut kept = forced.complement();
    let (after_forced, after_map) = g.induced_subgraph(&kept);
    for (new, &old) in after_map.iter().enumerate() {
        if after_forced.degree(new) == 0 && !in_constraints.contains(&(old as u32)) {
            kept.remove(old);
        }
    }
    let (reduced_graph, map) = g.induced_subgraph(&kept);

    let mut undeletable = VertexSet::full(reduced_graph.n());
    for (new, &old) in map.iter().enumerate() {
        if in_constraints.contains(&(old as u32)) {
            undeletable.remove(new);
        }
    }

    let verdict = if family.is_empty() {
        KernelVerdict::Yes
    } else {
        KernelVerdict::Reduced
    };
    KernelResult {
        verdict,
        reduced: SvdInstance {
            graph: reduced_graph,
            budget,
        },
        forced_deletions: forced,
        map,
        undeletable,
        stats,
    }
}

fn no_result(forced: VertexSet, stats: KernelStats) -> KernelResult {
    KernelResult {
        verdict: KernelVerdict::No,
        reduced: SvdInstance {
            graph: Graph::edgeless(0),
            budget: 0,
        },
        forced_deletions: forced,
        map: Vec::new(),
        undeletable: VertexSet::empty(0),
        stats: KernelStats {
            constraints_remaining: 0,
            constraint_vertices: 0,
            ..stats
        },
    }
}

fn is_superset(c: &Constraint, core: &[u32]) -> bool {
    core.iter().all(|v| c.binary_search(v).is_ok())
}

/// Number of petals a greedy pass extracts for `core`: constraints containing
/// the core whose remainders are pairwise disjoint, scanned in the family's
/// canonical order.
fn greedy_petals(family: &BTreeSet<Constraint>, core: &[u32]) -> usize {
    let mut used: BTreeSet<u32> = BTreeSet::new();
    let mut petals = 0;
    for c in family {
        if !is_superset(c, core) {
            continue;
        }
        let remainder: Vec<u32> = c.iter().copied().filter(|v| !core.contains(v)).collect();
        if remainder.iter().all(|v| !used.contains(v)) {
            used.extend(remainder);
            petals += 1;
        }
    }
    petals
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::split::recognize_split;
    use crate::testkit::{enumerate_small_graphs, generate_random_instance, oracle_min_svd, RandomInstanceSpec};

    fn kernelize(g: &Graph, k: usize) -> KernelResult {
        svd_kernelize(&SvdInstance {
            graph: g.clone(),
            budget: k,
        })
    }

    #[test]
    fn split_graph_is_immediately_yes() {
        for g in [Graph::complete(5), Graph::edgeless(5), Graph::path(4)] {
            for k in 0..3 {
                let r = kernelize(&g, k);
                assert_eq!(r.verdict, KernelVerdict::Yes);
                assert!(r.forced_deletions.is_empty());
            }
        }
    }

    #[test]
    fn disjoint_c4_packing_is_infeasible() {
        for k in 0..3usize {
            // k+1 vertex-disjoint 4-cycles with budget k.
            let copies = k + 1;
            let mut g = Graph::edgeless(0);
            for _ in 0..copies {
                g = g.disjoint_union(&Graph::cycle(4));
            }
            let r = kernelize(&g, k);
            assert_eq!(r.verdict, KernelVerdict::No, "k={k}");
        }
    }

    #[test]
    fn c5_with_budget_one_reduces() {
        let r = kernelize(&Graph::cycle(5), 1);
        assert_ne!(r.verdict, KernelVerdict::No);
        // The oracle confirms the instance is feasible: any single deletion
        // leaves P4.
        assert_eq!(oracle_min_svd(&Graph::cycle(5)).unwrap().0, 1);
        if r.verdict == KernelVerdict::Reduced {
            assert_eq!(r.reduced.budget, 1);
            assert!(oracle_min_svd(&r.reduced.graph).unwrap().0 <= 1);
        }
    }

    #[test]
    fn forcing_fires_on_a_shared_vertex() {
        // Three C4s hub-a_i-b_i-c_i-hub sharing only the hub, with the b_i
        // made a clique so that the graph minus the hub is split. The hub
        // sits in three disjoint-remainder petals, so budget 1 forces it.
        let mut edges = Vec::new();
        let copies = 3;
        for i in 0..copies {
            let a = 1 + 3 * i;
            let b = 2 + 3 * i;
            let c = 3 + 3 * i;
            edges.extend([(0, a), (a, b), (b, c), (c, 0)]);
            for j in 0..i {
                edges.push((b, 2 + 3 * j));
            }
        }
        let g = Graph::from_edges(1 + 3 * copies, edges).unwrap();
        assert_eq!(oracle_min_svd(&g).unwrap().0, 1);
        let r = kernelize(&g, 1);
        assert_eq!(r.verdict, KernelVerdict::Yes);
        assert_eq!(r.forced_deletions.to_vec(), vec![0]);
        assert!(r.stats.forced == 1);
    }

    #[test]
    fn kernel_never_increases_budget() {
        for seed in 0..30 {
            let inst = generate_random_instance(&RandomInstanceSpec::gnp(9, 0.4, seed));
            let inst = SvdInstance {
                graph: inst.graph,
                budget: (seed % 4) as usize,
            };
            let r = svd_kernelize(&inst);
            if r.verdict != KernelVerdict::No {
                assert!(r.reduced.budget <= inst.budget);
                assert_eq!(
                    r.reduced.budget,
                    inst.budget - r.forced_deletions.len(),
                    "budget drops exactly by the forced deletions"
                );
            }
        }
    }

    /// Kernel equivalence against the oracle on every graph with n <= 5 and
    /// a random batch at n in 7..=8, budgets 0..=3.
    #[test]
    fn kernel_preserves_the_answer() {
        let check = |g: &Graph, k: usize| {
            let truth = oracle_min_svd(g).unwrap().0 <= k;
            let r = kernelize(g, k);
            match r.verdict {
                KernelVerdict::No => assert!(!truth, "kernel said NO on a feasible instance {g:?} k={k}"),
                KernelVerdict::Yes => {
                    assert!(truth, "kernel said YES on an infeasible instance {g:?} k={k}");
                    assert!(r.forced_deletions.len() <= k);
                    let (rest, _) = g.induced_subgraph(&r.forced_deletions.complement());
                    assert!(recognize_split(&rest).is_split());
                }
                KernelVerdict::Reduced => {
                    let sub = oracle_min_svd(&r.reduced.graph).unwrap().0 <= r.reduced.budget;
                    assert_eq!(sub, truth, "kernel changed the answer on {g:?} k={k}");
                    // Any reduced solution lifts to a valid original one.
                    if sub {
                        let (_, witness) = oracle_min_svd(&r.reduced.graph).unwrap();
                        let lifted = r.lift(&witness);
                        assert!(lifted.len() <= k);
                        let (rest, _) = g.induced_subgraph(&lifted.complement());
                        assert!(recognize_split(&rest).is_split());
                    }
                }
            }
        };
        for n in 0..=5 {
            for g in enumerate_small_graphs(n).unwrap() {
                for k in 0..=3usize.min(n) {
                    check(&g, k);
                }
            }
        }
        for seed in 0..60 {
            let n = 7 + (seed as usize % 2);
            let inst = generate_random_instance(&RandomInstanceSpec::gnp(n, 0.45, 1000 + seed));
            for k in 0..=3 {
                check(&inst.graph, k);
            }
        }
    }

    #[test]
    fn remaining_constraint_vertices_respect_the_sunflower_bound() {
        // c * k^5 with c = 600 (5! sets of <= 5 vertices each).
        for seed in 0..20u64 {
            for k in 1..=3usize {
                let inst = generate_random_instance(&RandomInstanceSpec::planted(
                    12,
                    k.min(12),
                    0.5,
                    7000 + seed,
                ));
                let r = svd_kernelize(&SvdInstance {
                    graph: inst.graph,
                    budget: k,
                });
                if r.verdict == KernelVerdict::Reduced {
                    assert!(
                        r.stats.constraint_vertices <= 600 * k.pow(5),
                        "constraint vertices {} exceed 600*k^5 for k={k}",
                        r.stats.constraint_vertices
                    );
                }
            }
        }
    }

    /// Restricting deletions to vertices the kernel left deletable loses no
    /// feasible instance: the reduced constraint system never mentions an
    /// undeletable vertex, so a solution avoiding them exists iff any does.
    #[test]
    fn undeletable_marks_preserve_feasibility() {
        use itertools::Itertools;
        for seed in 0..40u64 {
            let n = 8 + (seed % 2) as usize;
            let inst = generate_random_instance(&RandomInstanceSpec::gnp(n, 0.4, 300 + seed));
            let k = (seed % 3) as usize;
            let r = svd_kernelize(&SvdInstance {
                graph: inst.graph.clone(),
                budget: k,
            });
            if r.verdict != KernelVerdict::Reduced {
                continue;
            }
            let rg = &r.reduced.graph;
            let truth = oracle_min_svd(rg).unwrap().0 <= r.reduced.budget;
            let deletable: Vec<usize> = r.undeletable.complement().to_vec();
            let restricted = (0..=r.reduced.budget.min(deletable.len())).any(|d| {
                deletable.iter().combinations(d).any(|del| {
                    let mut kept = VertexSet::full(rg.n());
                    for &&v in &del {
                        kept.remove(v);
                    }
                    let (rest, _) = rg.induced_subgraph(&kept);
                    recognize_split(&rest).is_split()
                })
            });
            assert_eq!(restricted, truth, "seed={seed} k={k}");
        }
    }
}
