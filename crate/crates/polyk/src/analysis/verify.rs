//! Polyhedrality and certificate verification.
//!
//! A graph is polyhedral iff it is simple, has at least 4 vertices, is planar
//! and is 3-connected. A colored graph is a valid certificate when the graph
//! is polyhedral and its red vertices are pairwise at distance greater
//! than k.

use serde::{Deserialize, Serialize};

use crate::colored::ColoredGraph;
use crate::constructions::formula::minimum_order;
use crate::graph::Graph;

use super::connectivity::is_k_connected;
use super::distance::bfs_distances;
use super::planarity::planar_embedding;

/// A red pair violating the distance requirement.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CloseRedPair {
    pub u: usize,
    pub v: usize,
    pub distance: usize,
}

/// Structured pass/fail evidence for polyhedrality and independence claims.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub order: usize,
    pub simple: bool,
    pub planar: bool,
    pub three_connected: bool,
    pub polyhedral: bool,
    pub certificate_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence_radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub close_red_pair: Option<CloseRedPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub planarity_note: Option<String>,
}

/// Checks simplicity, order, planarity and 3-connectivity.
pub fn is_polyhedral(g: &Graph) -> VerificationReport {
    let order = g.p();
    let simple = true; // enforced by Graph construction
    let planar = planar_embedding(g).is_some();
    let planarity_note =
        (!planar).then(|| "no embedding exists; the graph contains a forbidden minor".to_string());
    let (three_connected, cut_witness) = match is_k_connected(g, 3) {
        Ok(res) => (res.holds, res.cut),
        Err(_) => (false, None), // fewer than four vertices
    };
    let polyhedral = simple && order >= 4 && planar && three_connected;
    VerificationReport {
        order,
        simple,
        planar,
        three_connected,
        polyhedral,
        certificate_valid: false,
        independence_radius: None,
        certificate_size: None,
        expected_order: None,
        cut_witness,
        close_red_pair: None,
        planarity_note,
    }
}

/// Verifies a colored graph: polyhedrality plus the pairwise red distance
/// requirement `d(u, v) > k`. On failure the report carries witnesses.
pub fn verify_certificate(c: &ColoredGraph) -> VerificationReport {
    let mut report = is_polyhedral(c.graph());
    let k = c.k();
    report.independence_radius = Some(k);
    report.certificate_size = Some(c.red_count());
    report.expected_order = minimum_order(k, c.red_count().max(1)).ok();

    let mut close_pair = None;
    let red = c.red();
    'outer: for (i, &u) in red.iter().enumerate() {
        let dist = bfs_distances(c.graph(), u);
        for &v in &red[i + 1..] {
            if dist[v] <= k {
                close_pair = Some(CloseRedPair { u, v, distance: dist[v] });
                break 'outer;
            }
        }
    }
    report.close_red_pair = close_pair;
    report.certificate_valid = report.polyhedral && report.close_red_pair.is_none();
    report
}

/// Runs verification and, on success, stamps the instance as certified.
pub fn certify(c: &mut ColoredGraph) -> VerificationReport {
    let report = verify_certificate(c);
    if report.certificate_valid {
        c.mark_certified();
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_is_polyhedral() {
        let report = is_polyhedral(&Graph::complete(4));
        assert!(report.polyhedral);
        assert!(report.planar && report.three_connected && report.simple);
    }

    #[test]
    fn k33_fails_planarity() {
        let edges: Vec<(usize, usize)> =
            (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        let report = is_polyhedral(&Graph::new(6, &edges).unwrap());
        assert!(!report.polyhedral);
        assert!(!report.planar);
        assert!(report.three_connected);
        assert!(report.planarity_note.is_some());
    }

    #[test]
    fn six_cycle_fails_connectivity() {
        let report = is_polyhedral(&Graph::cycle(6));
        assert!(!report.polyhedral);
        assert!(report.planar);
        assert!(!report.three_connected);
        assert_eq!(report.cut_witness.as_ref().map(Vec::len), Some(2));
    }

    #[test]
    fn cube_bipartition_class_is_a_valid_certificate() {
        let cube = crate::graph::tests::cube_graph();
        let c = ColoredGraph::new(cube, vec![0, 2, 5, 7], 1).unwrap();
        let report = verify_certificate(&c);
        assert!(report.certificate_valid);
        assert_eq!(report.certificate_size, Some(4));
        assert_eq!(report.expected_order, Some(8));
        assert_eq!(report.order, 8);
    }

    #[test]
    fn adjacent_reds_fail_with_witness() {
        let cube = crate::graph::tests::cube_graph();
        let c = ColoredGraph::new(cube, vec![0, 1], 1).unwrap();
        let report = verify_certificate(&c);
        assert!(!report.certificate_valid);
        assert_eq!(report.close_red_pair, Some(CloseRedPair { u: 0, v: 1, distance: 1 }));
    }

    #[test]
    fn certify_stamps_valid_instances() {
        let cube = crate::graph::tests::cube_graph();
        let mut c = ColoredGraph::new(cube, vec![0, 2, 5, 7], 1).unwrap();
        assert!(!c.certified());
        certify(&mut c);
        assert!(c.certified());
    }

    #[test]
    fn report_serializes_with_stable_names() {
        let report = is_polyhedral(&Graph::complete(4));
        let json = serde_json::to_string(&report).unwrap();
        for key in ["order", "simple", "planar", "three_connected", "polyhedral"] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
    }
}
