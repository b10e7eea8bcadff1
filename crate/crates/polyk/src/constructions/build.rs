//! Deterministic construction of minimum-order certified instances.
//!
//! Recipe by case:
//! - a = 1: the tetrahedron, whatever k is.
//! - k = 1: a catalogue graph for a <= 5, then chained quad-pair expansions
//!   (each adds two reds); the parity of `a` picks the chain base. With
//!   `all_red_deg3` the bases are restricted to those whose reds all have
//!   degree 3.
//! - k even: the K4 necklace (reds already pairwise > 2 apart, degree 3),
//!   then k/2 - 1 collar rounds over all reds; each round adds 2 to every
//!   red-red distance.
//! - k odd >= 3: the degree-3 instance for k = 1, then (k-1)/2 collar
//!   rounds.

use crate::analysis::verify::certify;
use crate::colored::ColoredGraph;
use crate::error::{Error, Result};

use super::base::{base_graph, k4_necklace, BaseGraph};
use super::expand::{expand_quad_pair, find_quad_pair};
use super::formula::minimum_order;

/// A certified minimum-order instance together with its build trace.
#[derive(Clone, Debug)]
pub struct ExtremalInstance {
    pub k: usize,
    pub a: usize,
    pub all_red_deg3: bool,
    pub expected_order: usize,
    pub graph: ColoredGraph,
    /// Applied construction steps, in order.
    pub provenance: Vec<String>,
}

/// Builds a polyhedral graph of order `minimum_order(k, a)` whose red set of
/// size `a` is pairwise at distance > k. The result is verified before it is
/// returned. With `all_red_deg3`, every red vertex has degree exactly 3.
pub fn build_extremal(k: usize, a: usize, all_red_deg3: bool) -> Result<ExtremalInstance> {
    let expected_order = minimum_order(k, a)?;
    let mut provenance = Vec::new();

    let mut colored = if a == 1 {
        provenance.push("base:tetrahedron".to_string());
        with_radius(base_graph(BaseGraph::Tetrahedron), k)?
    } else if k == 1 {
        radius_one_instance(a, all_red_deg3, &mut provenance)?
    } else if k % 2 == 0 {
        let mut c = k4_necklace(a)?;
        provenance.push(format!("base:k4_necklace({a})"));
        c = with_radius(c, k)?;
        collar_rounds(c, k / 2 - 1, &mut provenance)?
    } else {
        let deg3 = radius_one_instance(a, true, &mut provenance)?;
        let c = with_radius(deg3, k)?;
        collar_rounds(c, (k - 1) / 2, &mut provenance)?
    };

    if colored.graph().p() != expected_order {
        return Err(Error::ConstructionCheck(format!(
            "built order {} but the formula gives {expected_order} for k = {k}, a = {a}",
            colored.graph().p()
        )));
    }
    if colored.red_count() != a {
        return Err(Error::ConstructionCheck(format!(
            "built {} reds, wanted {a}",
            colored.red_count()
        )));
    }
    if all_red_deg3 {
        for &r in colored.red() {
            if colored.graph().degree(r) != 3 {
                return Err(Error::ConstructionCheck(format!(
                    "red vertex {r} has degree {}, wanted 3",
                    colored.graph().degree(r)
                )));
            }
        }
    }
    let report = certify(&mut colored);
    if !report.certificate_valid {
        return Err(Error::ConstructionCheck(format!(
            "verification failed for k = {k}, a = {a}: {report:?}"
        )));
    }
    Ok(ExtremalInstance { k, a, all_red_deg3, expected_order, graph: colored, provenance })
}

/// The k = 1 instances: catalogue bases plus quad-pair chains.
fn radius_one_instance(
    a: usize,
    all_red_deg3: bool,
    provenance: &mut Vec<String>,
) -> Result<ColoredGraph> {
    debug_assert!(a >= 2);
    let (base, base_a) = match (a, a % 2, all_red_deg3) {
        (2, _, _) => (BaseGraph::SquarePyramid, 2),
        (3, _, _) => (BaseGraph::G3, 3),
        (4, _, _) => (BaseGraph::Cube, 4),
        (5, _, false) => (BaseGraph::Pdw10, 5),
        (_, 0, _) => (BaseGraph::Cube, 4),
        (_, 1, true) => (BaseGraph::G3, 3),
        (_, 1, false) => (BaseGraph::Pdw10, 5),
        _ => unreachable!(),
    };
    provenance.push(format!("base:{base}"));
    let mut c = base_graph(base);
    for _ in 0..(a - base_a) / 2 {
        let site = find_quad_pair(&c)?.ok_or_else(|| {
            Error::ConstructionCheck("no quad-pair site available for expansion".into())
        })?;
        provenance.push(format!("quad_pair@{}-{}", site.b2, site.r2));
        c = expand_quad_pair(&c, &site)?;
    }
    Ok(c)
}

/// Applies `rounds` collar rounds: one collar insertion per red vertex per
/// round, in ascending red order.
fn collar_rounds(
    mut c: ColoredGraph,
    rounds: usize,
    provenance: &mut Vec<String>,
) -> Result<ColoredGraph> {
    for _ in 0..rounds {
        for r in c.red().to_vec() {
            provenance.push(format!("collar@{r}"));
            c = super::expand::collar_vertex(&c, r)?;
        }
    }
    Ok(c)
}

/// Re-tags a colored graph with a different independence radius.
fn with_radius(c: ColoredGraph, k: usize) -> Result<ColoredGraph> {
    if c.k() == k {
        return Ok(c);
    }
    let red = c.red().to_vec();
    ColoredGraph::with_embedding(c.embedding()?, red, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_orders_match_the_formula() {
        let cases = [(1, 6, 11), (2, 3, 12), (4, 3, 21), (3, 3, 16), (5, 2, 17)];
        for (k, a, want) in cases {
            let inst = build_extremal(k, a, false).unwrap();
            assert_eq!(inst.graph.graph().p(), want, "k={k}, a={a}");
            assert!(inst.graph.certified());
        }
    }

    #[test]
    fn tetrahedron_covers_every_radius_at_size_one() {
        for k in [1, 2, 5, 6] {
            let inst = build_extremal(k, 1, false).unwrap();
            assert_eq!(inst.graph.graph().p(), 4);
        }
    }

    #[test]
    fn degree_three_flag_holds_across_parities() {
        for (k, a) in [(1, 2), (1, 5), (1, 6), (1, 7), (3, 4), (2, 4)] {
            let inst = build_extremal(k, a, true).unwrap();
            for &r in inst.graph.red() {
                assert_eq!(inst.graph.graph().degree(r), 3, "k={k}, a={a}, red {r}");
            }
        }
    }

    #[test]
    fn provenance_records_the_chain() {
        let inst = build_extremal(1, 8, false).unwrap();
        assert_eq!(inst.provenance.iter().filter(|s| s.starts_with("quad_pair@")).count(), 2);
        assert_eq!(inst.provenance[0], "base:cube");
    }

    #[test]
    fn builder_is_deterministic() {
        let a = build_extremal(3, 4, false).unwrap();
        let b = build_extremal(3, 4, false).unwrap();
        assert_eq!(a.graph.graph().edges(), b.graph.graph().edges());
        assert_eq!(a.provenance, b.provenance);
    }

    #[test]
    fn invalid_parameters_error() {
        assert!(build_extremal(0, 1, false).is_err());
        assert!(build_extremal(1, 0, false).is_err());
    }
}
