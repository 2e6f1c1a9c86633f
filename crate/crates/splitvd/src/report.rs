//! Machine-readable run reports.
//!
//! Vertex ids in reports are 1-based to match the edge-list file format.

use crate::solver::{DeletionSolution, SolveStats};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub feasible: bool,
    pub k_used: usize,
    pub deleted: Vec<usize>,
    pub clique_side: Vec<usize>,
    pub independent_side: Vec<usize>,
    pub stats: StatsReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsReport {
    pub partitions_tried: u64,
    pub vc_calls: u64,
    pub kernel_rules_fired: u64,
    pub elapsed_ms: u64,
    pub max_generator_depth: u32,
    pub branch_nodes: u64,
    pub kernelize_ms: u64,
    pub search_ms: u64,
}

impl RunReport {
    pub fn new(k_used: usize, solution: Option<&DeletionSolution>, stats: &SolveStats) -> Self {
        let one_based = |s: &crate::bitset::VertexSet| s.iter().map(|v| v + 1).collect();
        RunReport {
            feasible: solution.is_some(),
            k_used,
            deleted: solution.map(|s| one_based(&s.deleted)).unwrap_or_default(),
            clique_side: solution
                .map(|s| one_based(&s.certificate.clique_side))
                .unwrap_or_default(),
            independent_side: solution
                .map(|s| one_based(&s.certificate.independent_side))
                .unwrap_or_default(),
            stats: StatsReport {
                partitions_tried: stats.partitions_tried,
                vc_calls: stats.vc_calls,
                kernel_rules_fired: stats.kernel_rules_fired,
                elapsed_ms: stats.elapsed_ms,
                max_generator_depth: stats.max_generator_depth,
                branch_nodes: stats.branch_nodes,
                kernelize_ms: stats.kernelize_ms,
                search_ms: stats.search_ms,
            },
        }
    }

    /// Human-readable rendering for `--format plain`.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        if self.feasible {
            out.push_str(&format!(
                "feasible at k = {}\ndeleted: {}\nclique side: {}\nindependent side: {}\n",
                self.k_used,
                join(&self.deleted),
                join(&self.clique_side),
                join(&self.independent_side),
            ));
        } else {
            out.push_str(&format!("infeasible at k = {}\n", self.k_used));
        }
        out.push_str(&format!(
            "stats: partitions_tried={} vc_calls={} kernel_rules_fired={} elapsed_ms={}\n",
            self.stats.partitions_tried,
            self.stats.vc_calls,
            self.stats.kernel_rules_fired,
            self.stats.elapsed_ms,
        ));
        out
    }
}

fn join(v: &[usize]) -> String {
    if v.is_empty() {
        "-".to_string()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }
}
