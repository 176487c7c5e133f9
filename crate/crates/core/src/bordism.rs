//! Which collections of ADE singularities can appear together at a single
//! parameter over a given base diagram.

use std::collections::BTreeSet;

use serde_json::json;

use crate::diagrams::{AdeType, Diagram, ExtendedDiagram};
use crate::roots::{psi_star, Parameter};

/// A base type together with the multiset of singularity types to realize.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub base: AdeType,
    /// Sorted.
    pub parts: Vec<AdeType>,
}

impl Configuration {
    pub fn new(base: AdeType, mut parts: Vec<AdeType>) -> Self {
        parts.sort();
        Configuration { base, parts }
    }

    /// Whether the parts fit into the base by rank at all.
    pub fn fits(&self) -> bool {
        self.parts.iter().map(|p| p.rank()).sum::<usize>() <= self.base.rank()
    }
}

fn subset_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Sorted component types of the full subgraph on `subset`.
pub fn subgraph_types(d: &Diagram, subset: &[usize]) -> Vec<AdeType> {
    let mut types: Vec<AdeType> = d.full_subgraph(subset).iter().map(|c| c.diagram.adtype()).collect();
    types.sort();
    types
}

/// The lexicographically least vertex set `J` (0-based, sorted) whose full
/// subgraph has exactly the requested component types.
pub fn realizable(cfg: &Configuration) -> Option<Vec<usize>> {
    if !cfg.fits() {
        return None;
    }
    let d = Diagram::build(cfg.base);
    let n = d.rank();
    (0u32..1 << n)
        .map(|mask| subset_of(mask, n))
        .filter(|j| j.len() == cfg.parts.iter().map(|p| p.rank()).sum::<usize>())
        .filter(|j| subgraph_types(&d, j) == cfg.parts)
        .min()
}

/// `psi*(tau)` with `tau_j = 0` for `j` in `J` and `1` otherwise.
pub fn witness_parameter(ed: &ExtendedDiagram, j: &[usize]) -> Parameter {
    let tau: Vec<i64> = (0..ed.rank()).map(|i| i64::from(!j.contains(&i))).collect();
    psi_star(ed, &Parameter::from_ints(&tau)).expect("tau has length n")
}

/// Every component-type multiset of a full subgraph of `base`.
pub fn enumerate_configurations(base: AdeType) -> BTreeSet<Vec<AdeType>> {
    let d = Diagram::build(base);
    let n = d.rank();
    (0u32..1 << n).map(|mask| subgraph_types(&d, &subset_of(mask, n))).collect()
}

/// CLI payload for a realizability query.
pub fn realizability_json(cfg: &Configuration) -> serde_json::Value {
    match realizable(cfg) {
        Some(j) => {
            let ed = ExtendedDiagram::of_type(cfg.base);
            json!({
                "realizable": true,
                "witness_J": j.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "lambda": witness_parameter(&ed, &j).to_strings(),
            })
        }
        None => json!({ "realizable": false }),
    }
}

pub fn configurations_json(base: AdeType) -> serde_json::Value {
    let configs: Vec<Vec<String>> = enumerate_configurations(base)
        .into_iter()
        .map(|parts| parts.iter().map(ToString::to_string).collect())
        .collect();
    json!({ "base": base.to_string(), "configurations": configs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_singularities;

    fn t(s: &str) -> AdeType {
        s.parse().unwrap()
    }

    fn parts(s: &[&str]) -> Vec<AdeType> {
        s.iter().map(|x| t(x)).collect()
    }

    #[test]
    fn realizable_examples() {
        let d4 = Configuration::new(t("D4"), parts(&["A1", "A1", "A1"]));
        assert_eq!(realizable(&d4), Some(vec![0, 2, 3]));
        let a2 = Configuration::new(t("A2"), parts(&["A1", "A1"]));
        assert_eq!(realizable(&a2), None);
        let whole = Configuration::new(t("A2"), parts(&["A2"]));
        assert_eq!(realizable(&whole), Some(vec![0, 1]));
        let e8 = Configuration::new(t("E8"), parts(&["D4"]));
        let j = realizable(&e8).unwrap();
        let d = Diagram::build(t("E8"));
        let centre = j.iter().find(|&&c| j.iter().filter(|&&o| d.are_adjacent(c, o)).count() == 3);
        assert!(centre.is_some());
        assert!(realizable(&Configuration::new(t("A3"), parts(&["A4"]))).is_none());
    }

    #[test]
    fn witness_examples() {
        let a3 = ExtendedDiagram::of_type(t("A3"));
        assert_eq!(witness_parameter(&a3, &[0, 2]), Parameter::from_ints(&[-1, 0, 1, 0]));
        assert_eq!(witness_parameter(&a3, &[]), Parameter::from_ints(&[-3, 1, 1, 1]));
        assert_eq!(witness_parameter(&a3, &[0, 1, 2]), Parameter::zero(4));
        let c = classify_singularities(&a3, &witness_parameter(&a3, &[])).unwrap();
        assert!(c.singular_points.is_empty());
    }

    #[test]
    fn enumeration_examples() {
        let a2 = enumerate_configurations(t("A2"));
        let expected: BTreeSet<Vec<AdeType>> = [vec![], parts(&["A1"]), parts(&["A2"])].into_iter().collect();
        assert_eq!(a2, expected);
        assert!(enumerate_configurations(t("A3")).contains(&parts(&["A1", "A1"])));
        assert!(enumerate_configurations(t("D4")).contains(&parts(&["A1", "A1", "A1"])));
    }

    #[test]
    fn json_payloads() {
        let v = realizability_json(&Configuration::new(t("D4"), parts(&["A1", "A1", "A1"])));
        assert_eq!(v["realizable"], true);
        assert_eq!(v["witness_J"], json!([1, 3, 4]));
        assert_eq!(v["lambda"], json!(["-2", "0", "1", "0", "0"]));
        let v = realizability_json(&Configuration::new(t("A2"), parts(&["A1", "A1"])));
        assert_eq!(v, json!({ "realizable": false }));
    }
}
