//! End-to-end Split Vertex Deletion solving.
//!
//! The main pipeline kernelizes (optional), streams candidate bipartitions
//! from the generator and, for each partition (V_C, V_I), solves a Vertex
//! Cover instance on `complement(G[V_C]) ⊎ G[V_I]`: a cover deletes one
//! endpoint of every non-edge inside the clique side and of every edge
//! inside the independent side, which is exactly what turns the remainder
//! into a split graph certified by that partition. The first feasible
//! partition wins; infeasibility means exhausting the stream.
//!
//! A baseline engine branches on the at most five vertices of a forbidden
//! induced subgraph (the 5^k algorithm), and a brute-force oracle engine is
//! wired in for cross-checking on small inputs.
//!
//! The per-partition loop is embarrassingly parallel: with the `parallel`
//! feature the top-level generator subtrees run on a rayon pool and the
//! first success cancels the rest. The yes/no verdict never depends on
//! scheduling; the witness may.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::kernel::{svd_kernelize, KernelStats, KernelVerdict};
use crate::partition::{for_each_partition, GenStats, Partition};
use crate::split::{recognize_split, SplitCertificate, SplitRecognition};
use crate::testkit::{oracle_min_svd, OracleError};
use crate::vc::{vc_solve, VcInstance};
use std::ops::ControlFlow;
use std::time::Instant;

/// A Split Vertex Deletion instance: graph plus deletion budget.
#[derive(Clone, Debug)]
pub struct SvdInstance {
    pub graph: Graph,
    pub budget: usize,
}

/// A deletion set within budget plus a split certificate of what remains.
/// Certificate sides use original vertex ids and together cover exactly the
/// surviving vertices.
#[derive(Clone, Debug)]
pub struct DeletionSolution {
    pub deleted: VertexSet,
    pub certificate: SplitCertificate,
}

impl DeletionSolution {
    /// Full revalidation against the original graph; nothing is trusted.
    pub fn is_valid_for(&self, g: &Graph, budget: usize) -> bool {
        let n = g.n();
        self.deleted.ground_size() == n
            && self.deleted.len() <= budget
            && self.certificate.clique_side.ground_size() == n
            && self.certificate.independent_side.ground_size() == n
            && self
                .certificate
                .clique_side
                .is_disjoint_from(&self.certificate.independent_side)
            && self
                .certificate
                .clique_side
                .union(&self.certificate.independent_side)
                == self.deleted.complement()
            && g.is_clique(&self.certificate.clique_side)
            && g.is_independent(&self.certificate.independent_side)
    }
}

/// Which solver answers the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Partition-family search over the Vertex Cover black box.
    Partition,
    /// 5-way branching on forbidden induced subgraphs.
    Baseline,
    /// Brute-force subset enumeration (small inputs only).
    Oracle,
}

/// Worker configuration for the per-partition loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    /// Fan out over this many rayon workers. Falls back to sequential when
    /// the crate is built without the `parallel` feature.
    Threads(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub kernelize: bool,
    pub parallelism: Parallelism,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            kernelize: true,
            parallelism: Parallelism::Sequential,
        }
    }
}

/// Counters and timings for one solve run.
#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    /// Partitions handed to the Vertex Cover stage (repetitions included).
    pub partitions_tried: u64,
    /// Vertex Cover solver invocations.
    pub vc_calls: u64,
    /// Kernel reduction rules fired.
    pub kernel_rules_fired: u64,
    /// Branching nodes of the baseline engine.
    pub branch_nodes: u64,
    /// Deepest generator state visited.
    pub max_generator_depth: u32,
    pub kernelize_ms: u64,
    pub search_ms: u64,
    pub elapsed_ms: u64,
    /// Full kernel counters when kernelization ran.
    pub kernel: Option<KernelStats>,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solution: Option<DeletionSolution>,
    pub stats: SolveStats,
}

/// Builds the per-partition Vertex Cover instance
/// `complement(G[V_C]) ⊎ G[V_I]` with budget `k`, plus the map from
/// instance ids back to ids of `g`.
pub fn build_vc_instance(g: &Graph, p: &Partition, k: usize) -> (VcInstance, Vec<usize>) {
    build_vc_from_sides(g, &p.clique_side, &p.independent_side, k)
}

fn build_vc_from_sides(
    g: &Graph,
    clique_side: &VertexSet,
    independent_side: &VertexSet,
    k: usize,
) -> (VcInstance, Vec<usize>) {
    let (on_clique, mut map) = g.induced_subgraph(clique_side);
    let (on_independent, map_i) = g.induced_subgraph(independent_side);
    let gprime = on_clique.complement().disjoint_union(&on_independent);
    map.extend(map_i);
    (
        VcInstance {
            graph: gprime,
            budget: k,
        },
        map,
    )
}

/// The reverse reduction: a Vertex Cover instance `(g, k)` is equivalent to
/// the SVD instance on `g` plus a disjoint clique on `k + 2` vertices with
/// the same budget.
pub fn vc_to_svd_reduction(g: &Graph, k: usize) -> SvdInstance {
    SvdInstance {
        graph: g.disjoint_union(&Graph::complete(k + 2)),
        budget: k,
    }
}

/// Solves the instance with the partition-family pipeline.
pub fn svd_solve(inst: &SvdInstance, opts: &SolveOptions) -> SolveOutcome {
    let started = Instant::now();
    let g = &inst.graph;
    let n = g.n();
    let k = inst.budget;
    let mut stats = SolveStats::default();

    // Degenerate budget: deleting everything leaves the empty graph.
    if k >= n {
        let solution = assemble_solution(g, VertexSet::full(n));
        stats.elapsed_ms = started.elapsed().as_millis() as u64;
        return SolveOutcome {
            solution: Some(solution),
            stats,
        };
    }

    // Stage 1: kernelization.
    let (reduced, lift): (SvdInstance, Box<dyn Fn(&VertexSet) -> VertexSet>) = if opts.kernelize {
        let t0 = Instant::now();
        let kr = svd_kernelize(inst);
        stats.kernelize_ms = t0.elapsed().as_millis() as u64;
        stats.kernel_rules_fired = kr.stats.rules_fired;
        stats.kernel = Some(kr.stats);
        match kr.verdict {
            KernelVerdict::No => {
                stats.elapsed_ms = started.elapsed().as_millis() as u64;
                return SolveOutcome {
                    solution: None,
                    stats,
                };
            }
            KernelVerdict::Yes => {
                let solution = assemble_solution(g, kr.forced_deletions);
                stats.elapsed_ms = started.elapsed().as_millis() as u64;
                return SolveOutcome {
                    solution: Some(solution),
                    stats,
                };
            }
            KernelVerdict::Reduced => {
                let reduced = kr.reduced.clone();
                (reduced, Box::new(move |d| kr.lift(d)))
            }
        }
    } else {
        (inst.clone(), Box::new(|d: &VertexSet| d.clone()))
    };

    // Stage 2: partition stream over the reduced instance.
    let t0 = Instant::now();
    let rg = &reduced.graph;
    let kb = reduced.budget;
    let found = if kb >= rg.n() {
        Some(VertexSet::full(rg.n()))
    } else {
        match opts.parallelism {
            Parallelism::Sequential => search_sequential(rg, kb, &mut stats),
            Parallelism::Threads(workers) => search_parallel(rg, kb, workers, &mut stats),
        }
    };
    stats.search_ms = t0.elapsed().as_millis() as u64;

    let solution = found.map(|reduced_deletions| assemble_solution(g, lift(&reduced_deletions)));
    stats.elapsed_ms = started.elapsed().as_millis() as u64;
    SolveOutcome { solution, stats }
}

fn search_sequential(rg: &Graph, kb: usize, stats: &mut SolveStats) -> Option<VertexSet> {
    let mut tried = 0u64;
    let mut calls = 0u64;
    let (found, gen_stats): (Option<VertexSet>, GenStats) = {
        let (res, gs) = for_each_partition(rg, |clique_side, independent_side| {
            tried += 1;
            calls += 1;
            match try_partition(rg, clique_side, independent_side, kb) {
                Some(del) => ControlFlow::Break(del),
                None => ControlFlow::Continue(()),
            }
        });
        (res, gs)
    };
    stats.partitions_tried += tried;
    stats.vc_calls += calls;
    stats.max_generator_depth = stats.max_generator_depth.max(gen_stats.max_depth);
    found
}

#[cfg(feature = "parallel")]
fn search_parallel(
    rg: &Graph,
    kb: usize,
    workers: usize,
    stats: &mut SolveStats,
) -> Option<VertexSet> {
    use crate::partition::{for_each_partition_from, root_children, GeneratorState};
    use rayon::prelude::*;
    use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};

    // The root's own two emissions, then its subtrees in parallel.
    let root = GeneratorState::root(rg);
    for (cs, is_) in [
        (root.assigned_clique.union(&root.active), root.assigned_independent.clone()),
        (root.assigned_clique.clone(), root.assigned_independent.union(&root.active)),
    ] {
        stats.partitions_tried += 1;
        stats.vc_calls += 1;
        if let Some(del) = try_partition(rg, &cs, &is_, kb) {
            return Some(del);
        }
    }

    let children = root_children(rg);
    let found = AtomicBool::new(false);
    let tried = AtomicU64::new(0);
    let calls = AtomicU64::new(0);
    let depth = AtomicU32::new(1);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("rayon pool");
    let hit = pool.install(|| {
        children.par_iter().find_map_any(|child| {
            if found.load(Ordering::Relaxed) {
                return None;
            }
            let mut local_tried = 0u64;
            let mut local_calls = 0u64;
            let (res, gs) = for_each_partition_from::<Option<VertexSet>>(
                rg,
                child,
                &mut |clique_side, independent_side| {
                    if found.load(Ordering::Relaxed) {
                        return ControlFlow::Break(None);
                    }
                    local_tried += 1;
                    local_calls += 1;
                    match try_partition(rg, clique_side, independent_side, kb) {
                        Some(del) => {
                            found.store(true, Ordering::Relaxed);
                            ControlFlow::Break(Some(del))
                        }
                        None => ControlFlow::Continue(()),
                    }
                },
            );
            tried.fetch_add(local_tried, Ordering::Relaxed);
            calls.fetch_add(local_calls, Ordering::Relaxed);
            depth.fetch_max(gs.max_depth, Ordering::Relaxed);
            res.flatten()
        })
    });
    stats.partitions_tried += tried.load(Ordering::Relaxed);
    stats.vc_calls += calls.load(Ordering::Relaxed);
    stats.max_generator_depth = stats.max_generator_depth.max(depth.load(Ordering::Relaxed));
    hit
}

#[cfg(not(feature = "parallel"))]
fn search_parallel(
    rg: &Graph,
    kb: usize,
    _workers: usize,
    stats: &mut SolveStats,
) -> Option<VertexSet> {
    search_sequential(rg, kb, stats)
}

/// One partition attempt: build G' and ask the VC black box; a cover maps
/// back to a deletion set over `rg`.
fn try_partition(
    rg: &Graph,
    clique_side: &VertexSet,
    independent_side: &VertexSet,
    kb: usize,
) -> Option<VertexSet> {
    let (vc_inst, map) = build_vc_from_sides(rg, clique_side, independent_side, kb);
    let sol = vc_solve(&vc_inst)?;
    Some(VertexSet::from_vertices(
        rg.n(),
        sol.cover.iter().map(|v| map[v]),
    ))
}

/// Recomputes the certificate for `g` minus `deleted` and packages the
/// solution. Panics if the remainder is not split (pipeline soundness bug).
fn assemble_solution(g: &Graph, deleted: VertexSet) -> DeletionSolution {
    let kept = deleted.complement();
    let (rest, rest_map) = g.induced_subgraph(&kept);
    let cert = match recognize_split(&rest) {
        SplitRecognition::Split(c) => c,
        SplitRecognition::NotSplit(_) => {
            panic!("internal error: lifted deletion set does not leave a split graph")
        }
    };
    let n = g.n();
    let certificate = SplitCertificate {
        clique_side: VertexSet::from_vertices(n, cert.clique_side.iter().map(|v| rest_map[v])),
        independent_side: VertexSet::from_vertices(
            n,
            cert.independent_side.iter().map(|v| rest_map[v]),
        ),
    };
    DeletionSolution {
        deleted,
        certificate,
    }
}

/// The 5^k baseline: recurse on deleting each vertex of some forbidden
/// induced subgraph until the remainder is split or the budget runs out.
pub fn svd_solve_baseline(inst: &SvdInstance) -> SolveOutcome {
    let started = Instant::now();
    let mut stats = SolveStats::default();
    let g = &inst.graph;
    let map: Vec<usize> = g.vertices().collect();
    let deletions = baseline_rec(g, inst.budget, &map, &mut stats.branch_nodes);
    let solution = deletions.map(|del| {
        assemble_solution(g, VertexSet::from_vertices(g.n(), del))
    });
    stats.elapsed_ms = started.elapsed().as_millis() as u64;
    stats.search_ms = stats.elapsed_ms;
    SolveOutcome { solution, stats }
}

fn baseline_rec(
    g: &Graph,
    k: usize,
    map: &[usize],
    nodes: &mut u64,
) -> Option<Vec<usize>> {
    *nodes += 1;
    let witness = match recognize_split(g) {
        SplitRecognition::Split(_) => return Some(Vec::new()),
        SplitRecognition::NotSplit(w) => w,
    };
    if k == 0 {
        return None;
    }
    for &v in &witness.vertices {
        let mut kept = VertexSet::full(g.n());
        kept.remove(v);
        let (sub, submap) = g.induced_subgraph(&kept);
        let child_map: Vec<usize> = submap.iter().map(|&i| map[i]).collect();
        if let Some(mut del) = baseline_rec(&sub, k - 1, &child_map, nodes) {
            del.push(map[v]);
            return Some(del);
        }
    }
    None
}

/// Engine dispatch used by the CLI and the agreement tests. The oracle
/// engine enumerates subsets and errors out on large inputs.
pub fn solve_with_engine(
    inst: &SvdInstance,
    engine: Engine,
    opts: &SolveOptions,
) -> Result<SolveOutcome, OracleError> {
    match engine {
        Engine::Partition => Ok(svd_solve(inst, opts)),
        Engine::Baseline => Ok(svd_solve_baseline(inst)),
        Engine::Oracle => {
            let started = Instant::now();
            let (opt, witness) = oracle_min_svd(&inst.graph)?;
            let mut stats = SolveStats::default();
            let solution = (opt <= inst.budget).then(|| assemble_solution(&inst.graph, witness));
            stats.elapsed_ms = started.elapsed().as_millis() as u64;
            Ok(SolveOutcome { solution, stats })
        }
    }
}
