//! Comparing two rotation systems of the same labeled graph.

use std::fmt;

use thiserror::Error;

use crate::embedmap::{cyclic_eq, EmbeddedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompareError {
    #[error("the two embeddings are not over the same labeled graph")]
    UnderlyingMismatch,
    #[error("vertex {vertex} has degree {degree}; its type needs degree at least 3")]
    LowDegree { vertex: usize, degree: usize },
}

/// How a candidate's rotation at a vertex relates to the reference's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexType {
    /// Same cyclic order (+1).
    Same,
    /// Reversed cyclic order (−1).
    Reversed,
    /// Neither (2).
    Other,
}

impl VertexType {
    pub fn code(self) -> i8 {
        match self {
            VertexType::Same => 1,
            VertexType::Reversed => -1,
            VertexType::Other => 2,
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            VertexType::Same => f.write_str("+1"),
            VertexType::Reversed => f.write_str("-1"),
            VertexType::Other => f.write_str("2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    Mirror,
    Distinct,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "equal",
            Relation::Mirror => "mirror",
            Relation::Distinct => "distinct",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeAssignment {
    pub types: Vec<VertexType>,
    pub relation: Relation,
}

impl TypeAssignment {
    pub fn type_of(&self, v: usize) -> VertexType {
        self.types[v]
    }

    /// Edges `(u, v)`, `u < v`, whose endpoints have types +1 and −1.
    pub fn mixed_edges(&self, graph: &EmbeddedGraph) -> Vec<(usize, usize)> {
        graph
            .edges()
            .into_iter()
            .filter(|&(u, v)| {
                matches!(
                    (self.types[u], self.types[v]),
                    (VertexType::Same, VertexType::Reversed) | (VertexType::Reversed, VertexType::Same)
                )
            })
            .collect()
    }
}

fn check_underlying(reference: &EmbeddedGraph, candidate: &EmbeddedGraph) -> Result<(), CompareError> {
    if reference.has_same_underlying(candidate) {
        Ok(())
    } else {
        Err(CompareError::UnderlyingMismatch)
    }
}

fn type_at(reference: &EmbeddedGraph, candidate: &EmbeddedGraph, v: usize) -> VertexType {
    let ours = candidate.rotation(v);
    let theirs = reference.rotation(v);
    if cyclic_eq(ours, theirs) {
        VertexType::Same
    } else {
        let reversed: Vec<usize> = theirs.iter().rev().copied().collect();
        if cyclic_eq(ours, &reversed) {
            VertexType::Reversed
        } else {
            VertexType::Other
        }
    }
}

pub fn vertex_type(reference: &EmbeddedGraph, candidate: &EmbeddedGraph, v: usize) -> Result<VertexType, CompareError> {
    check_underlying(reference, candidate)?;
    let degree = reference.degree(v);
    if degree < 3 {
        return Err(CompareError::LowDegree { vertex: v, degree });
    }
    Ok(type_at(reference, candidate, v))
}

pub fn classify_types(reference: &EmbeddedGraph, candidate: &EmbeddedGraph) -> Result<TypeAssignment, CompareError> {
    check_underlying(reference, candidate)?;
    if let Some(vertex) = (0..reference.vertex_count()).find(|&v| reference.degree(v) < 3) {
        return Err(CompareError::LowDegree {
            vertex,
            degree: reference.degree(vertex),
        });
    }
    let types: Vec<VertexType> = (0..reference.vertex_count())
        .map(|v| type_at(reference, candidate, v))
        .collect();
    let relation = if types.iter().all(|&t| t == VertexType::Same) {
        Relation::Equal
    } else if types.iter().all(|&t| t == VertexType::Reversed) {
        Relation::Mirror
    } else {
        Relation::Distinct
    };
    let assignment = TypeAssignment { types, relation };
    if relation == Relation::Distinct {
        // A connected graph typed only ±1 with both signs present has an edge joining them.
        assert!(
            assignment.types.contains(&VertexType::Other) || !assignment.mixed_edges(reference).is_empty(),
            "distinct embeddings without a type-2 vertex or a mixed edge"
        );
    }
    Ok(assignment)
}

/// Equal or mirror-equal as rotation systems.
pub fn equivalent(a: &EmbeddedGraph, b: &EmbeddedGraph) -> Result<bool, CompareError> {
    check_underlying(a, b)?;
    Ok(a.same_rotations(b) || a.same_rotations(&b.mirror()))
}
