//! Vertex Cover black box: decide whether a graph has a cover of at most `k`
//! vertices and return one.
//!
//! Branch and reduce. Reduction rules: drop isolated vertices, take the
//! neighbour of a degree-1 vertex, take any vertex of degree above the
//! remaining budget, fold degree-2 vertices with a non-adjacent neighbour
//! pair (take both neighbours when they are adjacent). Once the maximum
//! degree is at most 2 the residue is a union of paths and cycles and gets
//! solved directly. Otherwise branch on a maximum-degree vertex v (smallest
//! id among ties): either v joins the cover, or all of N(v) does. With the
//! degree >= 3 guarantee this runs in O(1.4656^k poly(n)).
//!
//! The solver is a pure function of its input; instances can be solved
//! concurrently.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A Vertex Cover instance: graph plus budget.
#[derive(Clone, Debug)]
pub struct VcInstance {
    pub graph: Graph,
    pub budget: usize,
}

/// A cover of size at most the instance budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcSolution {
    pub cover: VertexSet,
}

impl VcSolution {
    /// Revalidates the solution against the instance from scratch.
    pub fn is_valid_for(&self, inst: &VcInstance) -> bool {
        self.cover.ground_size() == inst.graph.n()
            && self.cover.len() <= inst.budget
            && inst
                .graph
                .edges()
                .all(|(u, v)| self.cover.contains(u) || self.cover.contains(v))
    }
}

/// Outcome of [`vc_kernelize`].
#[derive(Clone, Debug)]
pub enum VcKernelOutcome {
    /// Equivalent reduced instance; `forced` (original ids) must be in every
    /// solution within budget, and `map[new] = old` lifts reduced ids back.
    Reduced {
        reduced: VcInstance,
        forced: VertexSet,
        map: Vec<usize>,
    },
    /// No cover within budget exists.
    Infeasible,
}

/// Mutable working copy used by the solver and the kernel.
#[derive(Clone)]
struct Working {
    rows: Vec<VertexSet>,
    alive: VertexSet,
}

impl Working {
    fn new(g: &Graph) -> Self {
        Working {
            rows: (0..g.n()).map(|v| g.neighbors(v).clone()).collect(),
            alive: VertexSet::full(g.n()),
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    fn remove_vertex(&mut self, v: usize) {
        for u in self.rows[v].to_vec() {
            self.rows[u].remove(v);
        }
        self.rows[v].clear();
        self.alive.remove(v);
    }

    fn edge_count(&self) -> usize {
        self.alive.iter().map(|v| self.rows[v].len()).sum::<usize>() / 2
    }

    fn max_degree_vertex(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for v in self.alive.iter() {
            let d = self.degree(v);
            if best.map_or(true, |(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        best
    }
}

/// A degree-2 fold record: `center` absorbed its non-adjacent neighbours
/// `left` and `right`; undone in reverse order when lifting a cover.
#[derive(Clone, Copy, Debug)]
struct Fold {
    center: usize,
    left: usize,
    right: usize,
}

/// Decides whether `inst.graph` has a vertex cover of size at most
/// `inst.budget` and returns one if so.
pub fn vc_solve(inst: &VcInstance) -> Option<VcSolution> {
    let mut work = Working::new(&inst.graph);
    let mut cover: Vec<usize> = Vec::new();
    let mut folds: Vec<Fold> = Vec::new();
    let found = branch(&mut work, inst.budget, &mut cover, &mut folds)?;
    // found = (chosen vertices incl. fold centers, folds applied on its path)
    let (mut chosen, folds_applied) = found;
    for fold in folds_applied.iter().rev() {
        if chosen.contains(fold.center) {
            chosen.remove(fold.center);
            chosen.insert(fold.left);
            chosen.insert(fold.right);
        } else {
            chosen.insert(fold.center);
        }
    }
    let solution = VcSolution { cover: chosen };
    debug_assert!(solution.is_valid_for(inst));
    Some(solution)
}

/// Returns (cover-in-working-ids, folds) or None. `cover` and `folds`
/// accumulate along the current path; the function restores nothing (callers
/// clone the working state before branching).
fn branch(
    work: &mut Working,
    mut budget: usize,
    cover: &mut Vec<usize>,
    folds: &mut Vec<Fold>,
) -> Option<(VertexSet, Vec<Fold>)> {
    // Reduce to a fixed point.
    loop {
        let mut changed = false;
        for v in work.alive.to_vec() {
            if !work.alive.contains(v) {
                continue;
            }
            let d = work.degree(v);
            if d == 0 {
                work.remove_vertex(v);
                changed = true;
            } else if d == 1 {
                let u = work.rows[v].first().unwrap();
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                cover.push(u);
                work.remove_vertex(u);
                work.remove_vertex(v);
                changed = true;
            } else if d > budget {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                cover.push(v);
                work.remove_vertex(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    if work.alive.is_empty() {
        return Some((
            VertexSet::from_vertices(work.rows.len(), cover.iter().copied()),
            folds.clone(),
        ));
    }

    // Every alive vertex now has degree in 2..=budget.
    let (_, top_deg) = work.max_degree_vertex().expect("alive set is non-empty");
    if work.edge_count() > budget * top_deg {
        return None;
    }

    if top_deg <= 2 {
        return solve_paths_and_cycles(work, budget, cover, folds);
    }

    // Fold a degree-2 vertex if present (its neighbours have degree >= 2, so
    // the clique case takes both, otherwise contract).
    if let Some(v) = work.alive.iter().find(|&v| work.degree(v) == 2) {
        let ns = work.rows[v].to_vec();
        let (a, b) = (ns[0], ns[1]);
        if work.rows[a].contains(b) {
            if budget < 2 {
                return None;
            }
            budget -= 2;
            cover.push(a);
            cover.push(b);
            work.remove_vertex(a);
            work.remove_vertex(b);
            work.remove_vertex(v);
        } else {
            // Contract {v, a, b} into v with the merged outside neighbourhood.
            if budget == 0 {
                return None;
            }
            budget -= 1;
            let mut merged = work.rows[a].union(&work.rows[b]);
            merged.remove(v);
            work.remove_vertex(a);
            work.remove_vertex(b);
            merged.intersect_with(&work.alive);
            merged.remove(v);
            for u in merged.iter() {
                work.rows[u].insert(v);
            }
            work.rows[v] = merged;
            folds.push(Fold {
                center: v,
                left: a,
                right: b,
            });
        }
        return branch(work, budget, cover, folds);
    }

    // Branch on the smallest maximum-degree vertex: take it, or take its
    // whole neighbourhood.
    let v = work
        .alive
        .iter()
        .find(|&u| work.degree(u) == top_deg)
        .unwrap();

    {
        let mut w2 = work.clone();
        let mut c2 = cover.clone();
        let mut f2 = folds.clone();
        c2.push(v);
        w2.remove_vertex(v);
        if budget >= 1 {
            if let Some(found) = branch(&mut w2, budget - 1, &mut c2, &mut f2) {
                return Some(found);
            }
        }
    }

    let ns = work.rows[v].to_vec();
    if ns.len() > budget {
        return None;
    }
    let mut w2 = work.clone();
    let mut c2 = cover.clone();
    let mut f2 = folds.clone();
    for &u in &ns {
        c2.push(u);
        w2.remove_vertex(u);
    }
    w2.remove_vertex(v);
    branch(&mut w2, budget - ns.len(), &mut c2, &mut f2)
}

/// Exact cover for a residue of maximum degree <= 2 (disjoint paths and
/// cycles): floor(p/2) for a p-vertex path, ceil(c/2) for a c-cycle.
fn solve_paths_and_cycles(
    work: &Working,
    mut budget: usize,
    cover: &mut Vec<usize>,
    folds: &mut Vec<Fold>,
) -> Option<(VertexSet, Vec<Fold>)> {
    let mut visited = VertexSet::empty(work.rows.len());
    let mut chosen: Vec<usize> = cover.clone();

    for start in work.alive.iter() {
        if visited.contains(start) {
            continue;
        }
        // Prefer a path endpoint as the walk origin; `start` is the smallest
        // unvisited vertex, so cycles are walked from their smallest vertex.
        let mut origin = start;
        if work.degree(start) == 2 {
            let mut probe = start;
            let mut prev = usize::MAX;
            loop {
                let next = work.rows[probe].iter().find(|&u| u != prev);
                match next {
                    Some(u) if u != start && work.degree(probe) <= 2 => {
                        if work.degree(u) == 1 {
                            origin = u;
                            break;
                        }
                        prev = probe;
                        probe = u;
                    }
                    _ => break, // closed a cycle back to start
                }
            }
        } else if work.degree(start) == 0 {
            visited.insert(start);
            continue;
        }

        // Walk the component from `origin`, taking every second vertex; on a
        // cycle the final edge back to the origin forces taking the last
        // vertex when the length is odd, matching ceil(c/2).
        let mut comp = vec![origin];
        visited.insert(origin);
        let mut prev = usize::MAX;
        let mut cur = origin;
        loop {
            let next = work.rows[cur].iter().find(|&u| u != prev && !visited.contains(u));
            match next {
                Some(u) => {
                    comp.push(u);
                    visited.insert(u);
                    prev = cur;
                    cur = u;
                }
                None => break,
            }
        }
        let is_cycle = work.rows[cur].contains(origin) && comp.len() >= 3;
        let need = if is_cycle {
            comp.len().div_ceil(2)
        } else {
            comp.len() / 2
        };
        if need > budget {
            return None;
        }
        budget -= need;
        // Odd walk positions cover every path edge; an odd cycle additionally
        // needs its last vertex for the closing edge.
        for (i, &u) in comp.iter().enumerate() {
            if i % 2 == 1 {
                chosen.push(u);
            }
        }
        if is_cycle && comp.len() % 2 == 1 {
            chosen.push(*comp.last().unwrap());
        }
    }
    Some((
        VertexSet::from_vertices(work.rows.len(), chosen.iter().copied()),
        folds.clone(),
    ))
}

/// Applies the degree-0, degree-1 and high-degree rules to a fixed point and
/// compacts the residue. Returns the reduced instance with forced cover
/// vertices (original ids), or reports infeasibility when the rules prove no
/// cover within budget exists.
pub fn vc_kernelize(inst: &VcInstance) -> VcKernelOutcome {
    let mut work = Working::new(&inst.graph);
    let mut budget = inst.budget;
    let mut forced: Vec<usize> = Vec::new();

    loop {
        let mut changed = false;
        for v in work.alive.to_vec() {
            if !work.alive.contains(v) {
                continue;
            }
            let d = work.degree(v);
            if d == 0 {
                work.remove_vertex(v);
                changed = true;
            } else if d == 1 {
                let u = work.rows[v].first().unwrap();
                if budget == 0 {
                    return VcKernelOutcome::Infeasible;
                }
                budget -= 1;
                forced.push(u);
                work.remove_vertex(u);
                work.remove_vertex(v);
                changed = true;
            } else if d > budget {
                if budget == 0 {
                    return VcKernelOutcome::Infeasible;
                }
                budget -= 1;
                forced.push(v);
                work.remove_vertex(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // After reduction every alive vertex has 2 <= degree <= budget; more
    // edges than budget * max-degree cannot all be covered.
    if let Some((_, top_deg)) = work.max_degree_vertex() {
        if work.edge_count() > budget * top_deg {
            return VcKernelOutcome::Infeasible;
        }
    }

    let keep = work.alive.clone();
    let map: Vec<usize> = keep.iter().collect();
    let mut inv = vec![usize::MAX; inst.graph.n()];
    for (new, &old) in map.iter().enumerate() {
        inv[old] = new;
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (new_u, &old_u) in map.iter().enumerate() {
        for old_v in work.rows[old_u].iter().filter(|&old_v| old_v > old_u) {
            edges.push((new_u, inv[old_v]));
        }
    }
    let reduced_graph = Graph::from_edges(map.len(), edges).expect("working rows stay simple");
    VcKernelOutcome::Reduced {
        reduced: VcInstance {
            graph: reduced_graph,
            budget,
        },
        forced: VertexSet::from_vertices(inst.graph.n(), forced),
        map,
    }
}
