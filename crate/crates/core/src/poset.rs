//! Dominance posets of nilpotent orbit labels, with optional limit-map
//! annotations and Graphviz DOT export.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use core::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::limits::l_map;
use crate::partition::{enumerate_partitions, ClassicalType, Family, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetError {
    /// Limit-map annotation applies to type A posets only.
    WrongType,
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::WrongType => write!(f, "annotation requires a type A poset"),
        }
    }
}

impl core::error::Error for PosetError {}

/// Admissible orbit labels of one classical type under dominance.
///
/// Nodes are sorted in descending lexicographic order; edges are the
/// covering relations of dominance, stored as `(lower, upper)` index pairs
/// and sorted. Built once, then immutable apart from annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoset {
    ty: ClassicalType,
    nodes: Vec<Partition>,
    edges: Vec<(usize, usize)>,
    annotations: Option<Vec<Partition>>,
}

impl OrbitPoset {
    /// Enumerates the admissible partitions of the type's ambient size and
    /// keeps the transitive reduction of the dominance relation.
    pub fn build(ty: ClassicalType) -> Self {
        let total = ty.ambient_size();
        let mut nodes: Vec<Partition> = if total == 0 {
            Vec::new()
        } else {
            enumerate_partitions(total)
                .into_iter()
                .filter(|p| p.is_admissible(ty))
                .collect()
        };
        nodes.sort_unstable_by(|a, b| b.cmp(a));

        let len = nodes.len();
        // strict dominance, computed once
        let mut above = alloc::vec![false; len * len];
        for i in 0..len {
            for j in 0..len {
                if i != j && nodes[j].dominates(&nodes[i]).unwrap_or(false) && nodes[i] != nodes[j]
                {
                    above[i * len + j] = true;
                }
            }
        }
        let mut edges = Vec::new();
        for i in 0..len {
            for j in 0..len {
                if !above[i * len + j] {
                    continue;
                }
                let shortcut =
                    (0..len).any(|k| above[i * len + k] && above[k * len + j]);
                if !shortcut {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        Self {
            ty,
            nodes,
            edges,
            annotations: None,
        }
    }

    /// Annotates every node with its image under the hyperbolic limit map.
    pub fn annotate_l(&mut self) -> Result<(), PosetError> {
        if self.ty.family != Family::A {
            return Err(PosetError::WrongType);
        }
        self.annotations = Some(self.nodes.iter().map(l_map).collect());
        Ok(())
    }

    pub fn ty(&self) -> ClassicalType {
        self.ty
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    /// Covering pairs `(lower, upper)` as indices into [`Self::nodes`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn annotation(&self, node: usize) -> Option<&Partition> {
        self.annotations.as_ref().map(|a| &a[node])
    }

    pub fn is_annotated(&self) -> bool {
        self.annotations.is_some()
    }

    /// Graphviz DOT text. Deterministic for a fixed poset; covering edges
    /// point from the smaller orbit to the larger with upward layout.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph orbit_poset {\n");
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let label = match self.annotation(i) {
                Some(image) => format!("{node}\\nL={image}"),
                None => format!("{node}"),
            };
            out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
        }
        for &(lower, upper) in &self.edges {
            out.push_str(&format!("  n{lower} -> n{upper};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for OrbitPoset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Node<'a> {
            partition: &'a Partition,
            #[serde(skip_serializing_if = "Option::is_none")]
            l_image: Option<&'a Partition>,
        }
        let nodes: Vec<Node<'_>> = (0..self.nodes.len())
            .map(|i| Node {
                partition: &self.nodes[i],
                l_image: self.annotation(i),
            })
            .collect();
        let mut s = serializer.serialize_struct("OrbitPoset", 4)?;
        s.serialize_field("family", &self.ty.family)?;
        s.serialize_field("rank", &self.ty.rank)?;
        s.serialize_field("nodes", &nodes)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn type_a(n: usize) -> ClassicalType {
        ClassicalType::new(Family::A, n)
    }

    #[test]
    fn partitions_of_four_form_a_chain() {
        let poset = OrbitPoset::build(type_a(4));
        assert_eq!(poset.nodes().len(), 5);
        assert_eq!(poset.edges().len(), 4);
        for &(lower, upper) in poset.edges() {
            assert_eq!(lower, upper + 1);
        }
    }

    #[test]
    fn two_nodes_one_edge() {
        let poset = OrbitPoset::build(type_a(2));
        assert_eq!(poset.nodes(), &[p(&[2]), p(&[1, 1])]);
        assert_eq!(poset.edges(), &[(1, 0)]);
    }

    #[test]
    fn contains_the_length_five_chain() {
        let poset = OrbitPoset::build(type_a(5));
        assert_eq!(poset.nodes().len(), 7);
        let idx = |q: &Partition| poset.nodes().iter().position(|n| n == q).unwrap();
        let chain = [
            p(&[2, 1, 1, 1]),
            p(&[2, 2, 1]),
            p(&[3, 1, 1]),
            p(&[5]),
        ];
        for w in chain.windows(2) {
            assert_eq!(w[1].dominates(&w[0]), Ok(true));
        }
        // (3,1,1) -> (5) is not a covering edge: (4,1) and (3,2) sit between
        assert!(!poset.edges().contains(&(idx(&chain[2]), idx(&chain[3]))));
        assert!(poset.edges().contains(&(idx(&chain[0]), idx(&chain[1]))));
    }

    #[test]
    fn annotation_reproduces_limit_values() {
        let mut poset = OrbitPoset::build(type_a(5));
        poset.annotate_l().unwrap();
        let expect = |q: &[usize], image: &[usize]| {
            let i = poset.nodes().iter().position(|n| n == &p(q)).unwrap();
            assert_eq!(poset.annotation(i), Some(&p(image)));
        };
        expect(&[2, 1, 1, 1], &[3, 1, 1]);
        expect(&[2, 2, 1], &[3, 2]);
        expect(&[3, 1, 1], &[3, 1, 1]);
        expect(&[5], &[5]);

        let mut small = OrbitPoset::build(type_a(2));
        small.annotate_l().unwrap();
        assert_eq!(small.annotation(0), Some(&p(&[2])));
        assert_eq!(small.annotation(1), Some(&p(&[1, 1])));
    }

    #[test]
    fn annotation_fixes_uniform_parity_nodes() {
        for n in 1..=9 {
            let mut poset = OrbitPoset::build(type_a(n));
            poset.annotate_l().unwrap();
            for (i, node) in poset.nodes().iter().enumerate() {
                if node.has_uniform_parity() {
                    assert_eq!(poset.annotation(i), Some(node));
                } else {
                    assert_eq!(poset.annotation(i).unwrap().part(0) % 2, 1);
                }
            }
        }
    }

    #[test]
    fn annotation_rejects_other_families() {
        let mut poset = OrbitPoset::build(ClassicalType::new(Family::B, 2));
        assert_eq!(poset.annotate_l(), Err(PosetError::WrongType));
    }

    #[test]
    fn admissible_node_sets() {
        let b2 = OrbitPoset::build(ClassicalType::new(Family::B, 2));
        assert_eq!(
            b2.nodes(),
            &[p(&[5]), p(&[3, 1, 1]), p(&[2, 2, 1]), p(&[1, 1, 1, 1, 1])]
        );
    }

    #[test]
    fn dot_export_is_deterministic_and_complete() {
        let empty = OrbitPoset::build(type_a(0));
        assert_eq!(empty.export_dot(), "digraph orbit_poset {\n  rankdir=BT;\n  node [shape=box];\n}\n");

        let poset = OrbitPoset::build(type_a(4));
        let dot = poset.export_dot();
        assert_eq!(dot, poset.export_dot());
        assert_eq!(dot.matches("label=").count(), 5);
        assert_eq!(dot.matches(" -> ").count(), 4);

        let five = OrbitPoset::build(type_a(5));
        assert_eq!(five.export_dot().matches("label=").count(), 7);
    }

    #[test]
    fn annotated_dot_mentions_images() {
        let mut poset = OrbitPoset::build(type_a(5));
        poset.annotate_l().unwrap();
        let dot = poset.export_dot();
        assert!(dot.contains("(2,2,1)\\nL=(3,2)"));
    }

    #[test]
    fn transitive_reduction_property_small() {
        for n in 1..=7 {
            let poset = OrbitPoset::build(type_a(n));
            let len = poset.nodes().len();
            let strictly_above = |i: usize, j: usize| {
                i != j && poset.nodes()[j].dominates(&poset.nodes()[i]).unwrap()
            };
            // every comparable pair is connected through covering edges
            let mut reach = vec![false; len * len];
            for &(a, b) in poset.edges() {
                reach[a * len + b] = true;
            }
            for _ in 0..len {
                for i in 0..len {
                    for j in 0..len {
                        if !reach[i * len + j] {
                            reach[i * len + j] = (0..len)
                                .any(|k| reach[i * len + k] && reach[k * len + j]);
                        }
                    }
                }
            }
            for i in 0..len {
                for j in 0..len {
                    assert_eq!(reach[i * len + j], strictly_above(i, j), "n={n} i={i} j={j}");
                }
            }
            // no edge is implied by the others
            for &(a, b) in poset.edges() {
                let through = (0..len).any(|k| {
                    k != a && k != b && strictly_above(a, k) && strictly_above(k, b)
                });
                assert!(!through, "edge ({a},{b}) is a shortcut for n={n}");
            }
        }
    }

    #[test]
    fn json_export_shape() {
        extern crate std;
        let mut poset = OrbitPoset::build(type_a(2));
        poset.annotate_l().unwrap();
        let json = serde_json::to_string(&poset).unwrap();
        assert_eq!(
            json,
            r#"{"family":"A","rank":2,"nodes":[{"partition":[2],"l_image":[2]},{"partition":[1,1],"l_image":[1,1]}],"edges":[[1,0]]}"#
        );
    }
}
