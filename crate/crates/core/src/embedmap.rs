//! Combinatorial maps given by rotation systems.
//!
//! Every undirected edge `{u, v}` is stored as two darts `(u, v)` and
//! `(v, u)`. Each vertex carries a cyclic, clockwise order of its
//! neighbors. The successor of a dart around its tail is [`EmbeddedGraph::next_dart`];
//! faces are the orbits of `d -> next(d⁻¹)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// A directed edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

impl Dart {
    /// Panics on `tail == head`; the maps in this crate never contain loops.
    pub fn new(tail: usize, head: usize) -> Dart {
        assert_ne!(tail, head, "a dart cannot be a loop");
        Dart { tail, head }
    }

    pub fn inverse(self) -> Dart {
        Dart {
            tail: self.head,
            head: self.tail,
        }
    }

    /// The undirected edge, smaller endpoint first.
    pub fn edge(self) -> (usize, usize) {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("graph needs at least one edge (got {n} vertices)")]
    TooSmall { n: usize },
    #[error("expected {expected} rotations, got {found}")]
    WrongRotationCount { expected: usize, found: usize },
    #[error("vertex {vertex} lists neighbor {neighbor}, which is not a vertex id below {n}")]
    BadVertexId { vertex: usize, neighbor: usize, n: usize },
    #[error("vertex {vertex} lists itself as a neighbor")]
    LoopEdge { vertex: usize },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists {neighbor}, but {neighbor} does not list {vertex}")]
    AsymmetricAdjacency { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} is not reachable from vertex 0")]
    Disconnected { vertex: usize },
}

impl EmbeddingError {
    /// The vertex whose rotation triggered the error, if any.
    pub fn vertex(&self) -> Option<usize> {
        match *self {
            EmbeddingError::TooSmall { .. } | EmbeddingError::WrongRotationCount { .. } => None,
            EmbeddingError::BadVertexId { vertex, .. }
            | EmbeddingError::LoopEdge { vertex }
            | EmbeddingError::DuplicateNeighbor { vertex, .. }
            | EmbeddingError::AsymmetricAdjacency { vertex, .. }
            | EmbeddingError::Disconnected { vertex } => Some(vertex),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DartError {
    #[error("dart {0} is not in the graph")]
    UnknownDart(Dart),
    #[error("darts {0} and {1} have different tails")]
    DifferentTails(Dart, Dart),
    #[error("dart {0} given twice")]
    SameDart(Dart),
}

/// A connected simple graph together with a rotation system.
///
/// Darts are numbered `offsets[v] + i` for the `i`-th entry of the rotation at `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedGraph {
    rotations: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    inverse: Vec<usize>,
}

/// Collects every problem with a candidate rotation system instead of stopping at the first.
pub fn validate_rotations(n: usize, rotations: &[Vec<usize>]) -> Vec<EmbeddingError> {
    let mut errors = Vec::new();
    if n < 2 {
        errors.push(EmbeddingError::TooSmall { n });
        return errors;
    }
    if rotations.len() != n {
        errors.push(EmbeddingError::WrongRotationCount {
            expected: n,
            found: rotations.len(),
        });
        return errors;
    }

    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (v, rotation) in rotations.iter().enumerate() {
        for &u in rotation {
            if u >= n {
                errors.push(EmbeddingError::BadVertexId {
                    vertex: v,
                    neighbor: u,
                    n,
                });
            } else if u == v {
                errors.push(EmbeddingError::LoopEdge { vertex: v });
            } else if !adjacency[v].insert(u) {
                errors.push(EmbeddingError::DuplicateNeighbor { vertex: v, neighbor: u });
            }
        }
    }
    for v in 0..n {
        for &u in &adjacency[v] {
            if !adjacency[u].contains(&v) {
                errors.push(EmbeddingError::AsymmetricAdjacency { vertex: v, neighbor: u });
            }
        }
    }

    // Connectivity over the symmetric closure so asymmetry is not double-reported.
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        let forward = adjacency[v].iter().copied();
        let backward = (0..n).filter(|&u| adjacency[u].contains(&v));
        for u in forward.chain(backward) {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    if let Some(vertex) = seen.iter().position(|&s| !s) {
        errors.push(EmbeddingError::Disconnected { vertex });
    }
    errors
}

impl EmbeddedGraph {
    /// Validates and builds an embedding; the first problem found is reported.
    pub fn new(n: usize, rotations: Vec<Vec<usize>>) -> Result<EmbeddedGraph, EmbeddingError> {
        if let Some(err) = validate_rotations(n, &rotations).into_iter().next() {
            return Err(err);
        }
        Ok(EmbeddedGraph::from_valid(rotations))
    }

    /// Caller guarantees the rotations describe a connected simple graph.
    pub(crate) fn from_valid(rotations: Vec<Vec<usize>>) -> EmbeddedGraph {
        let mut offsets = Vec::with_capacity(rotations.len() + 1);
        let mut total = 0;
        for rotation in &rotations {
            offsets.push(total);
            total += rotation.len();
        }
        offsets.push(total);

        let mut inverse = vec![0; total];
        for (v, rotation) in rotations.iter().enumerate() {
            for (i, &u) in rotation.iter().enumerate() {
                let back = rotations[u]
                    .iter()
                    .position(|&w| w == v)
                    .expect("adjacency is symmetric");
                inverse[offsets[v] + i] = offsets[u] + back;
            }
        }
        EmbeddedGraph {
            rotations,
            offsets,
            inverse,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_count() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.inverse.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// Clockwise neighbor order at `v`, starting wherever the input started.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn contains_dart(&self, d: Dart) -> bool {
        self.dart_index(d).is_some()
    }

    pub(crate) fn dart_index(&self, d: Dart) -> Option<usize> {
        let rotation = self.rotations.get(d.tail)?;
        rotation
            .iter()
            .position(|&u| u == d.head)
            .map(|i| self.offsets[d.tail] + i)
    }

    pub(crate) fn dart_at(&self, index: usize) -> Dart {
        let tail = self.offsets.partition_point(|&o| o <= index) - 1;
        Dart {
            tail,
            head: self.rotations[tail][index - self.offsets[tail]],
        }
    }

    fn next_index(&self, index: usize) -> usize {
        let tail = self.offsets.partition_point(|&o| o <= index) - 1;
        let start = self.offsets[tail];
        let degree = self.offsets[tail + 1] - start;
        start + (index - start + 1) % degree
    }

    /// The dart following `d` clockwise around `d.tail`.
    pub fn next_dart(&self, d: Dart) -> Result<Dart, DartError> {
        let index = self.dart_index(d).ok_or(DartError::UnknownDart(d))?;
        Ok(self.dart_at(self.next_index(index)))
    }

    /// The dart preceding `d` clockwise around `d.tail`.
    pub fn prev_dart(&self, d: Dart) -> Result<Dart, DartError> {
        let index = self.dart_index(d).ok_or(DartError::UnknownDart(d))?;
        let start = self.offsets[d.tail];
        let degree = self.degree(d.tail);
        Ok(self.dart_at(start + (index - start + degree - 1) % degree))
    }

    /// All darts ordered by `(tail, head)`.
    pub fn darts(&self) -> Vec<Dart> {
        let mut darts: Vec<Dart> = (0..self.dart_count()).map(|i| self.dart_at(i)).collect();
        darts.sort();
        darts
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .rotations
            .iter()
            .enumerate()
            .flat_map(|(v, rotation)| rotation.iter().filter(move |&&u| v < u).map(move |&u| (v, u)))
            .collect();
        edges.sort();
        edges
    }

    /// Face walks, each starting at its smallest dart, listed by that dart.
    pub fn faces(&self) -> Vec<FaceWalk> {
        let mut order: Vec<usize> = (0..self.dart_count()).collect();
        order.sort_by_key(|&i| self.dart_at(i));

        let mut visited = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in order {
            if visited[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut current = start;
            while !visited[current] {
                visited[current] = true;
                darts.push(self.dart_at(current));
                current = self.next_index(self.inverse[current]);
            }
            debug_assert_eq!(current, start);
            faces.push(FaceWalk { darts });
        }
        faces
    }

    /// Number of faces without materializing the walks.
    pub fn face_count(&self) -> usize {
        let mut visited = vec![false; self.dart_count()];
        let mut count = 0;
        for start in 0..self.dart_count() {
            if visited[start] {
                continue;
            }
            count += 1;
            let mut current = start;
            while !visited[current] {
                visited[current] = true;
                current = self.next_index(self.inverse[current]);
            }
        }
        count
    }

    /// Euler genus of the orientable surface this rotation system embeds into.
    pub fn genus(&self) -> usize {
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.face_count() as i64;
        let defect = 2 - (v - e + f);
        assert!(
            defect >= 0 && defect % 2 == 0,
            "Euler defect {defect} is odd or negative (v={v}, e={e}, f={f})"
        );
        (defect / 2) as usize
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> EmbeddedGraph {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        EmbeddedGraph::from_valid(rotations)
    }

    /// `{a, b}` is an angle when the two darts are consecutive around their tail
    /// in either direction.
    pub fn is_angle(&self, a: Dart, b: Dart) -> Result<bool, DartError> {
        if a.tail != b.tail {
            return Err(DartError::DifferentTails(a, b));
        }
        if a == b {
            return Err(DartError::SameDart(a));
        }
        let next_a = self.next_dart(a)?;
        let next_b = self.next_dart(b)?;
        Ok(next_a == b || next_b == a)
    }

    /// The same rotation system with each rotation started at its smallest neighbor.
    pub fn normalized(&self) -> EmbeddedGraph {
        EmbeddedGraph::from_valid(self.rotations.iter().map(|r| normalize_cycle(r)).collect())
    }

    /// Equality of rotation systems as cyclic sequences.
    pub fn same_rotations(&self, other: &EmbeddedGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self
                .rotations
                .iter()
                .zip(&other.rotations)
                .all(|(a, b)| cyclic_eq(a, b))
    }

    pub fn underlying(&self) -> Graph {
        Graph::from_adjacency_unchecked(
            self.rotations
                .iter()
                .map(|r| {
                    let mut sorted = r.clone();
                    sorted.sort_unstable();
                    sorted
                })
                .collect(),
        )
    }

    pub fn has_same_underlying(&self, other: &EmbeddedGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self
                .rotations
                .iter()
                .zip(&other.rotations)
                .all(|(a, b)| a.len() == b.len() && a.iter().all(|u| b.contains(u)))
    }
}

/// Rotates a cyclic sequence to start at its minimum.
pub fn normalize_cycle(cycle: &[usize]) -> Vec<usize> {
    match cycle.iter().enumerate().min_by_key(|&(_, &u)| u) {
        Some((start, _)) => cycle[start..].iter().chain(&cycle[..start]).copied().collect(),
        None => Vec::new(),
    }
}

/// Equality as cyclic sequences of distinct elements.
pub fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && normalize_cycle(a) == normalize_cycle(b)
}

/// A facial walk, starting at its smallest dart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceWalk {
    darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn first(&self) -> Dart {
        self.darts[0]
    }

    /// The vertex sequence visited (the tails of the darts).
    pub fn vertex_cycle(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.tail).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.darts.iter().map(|d| d.tail).collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.darts.iter().map(|d| d.edge()).collect()
    }

    pub fn contains(&self, d: Dart) -> bool {
        self.darts.contains(&d)
    }

    /// Whether `pattern` occurs as consecutive darts, reading the walk cyclically.
    pub fn contains_run(&self, pattern: &[Dart]) -> bool {
        let n = self.darts.len();
        if pattern.is_empty() {
            return true;
        }
        if pattern.len() > n {
            return false;
        }
        (0..n).any(|start| {
            pattern
                .iter()
                .enumerate()
                .all(|(k, d)| self.darts[(start + k) % n] == *d)
        })
    }

    /// The walk traversed backwards, as it appears in the mirror image.
    pub fn reversed(&self) -> FaceWalk {
        let mut darts: Vec<Dart> = self.darts.iter().rev().map(|d| d.inverse()).collect();
        let start = darts
            .iter()
            .enumerate()
            .min_by_key(|&(_, d)| *d)
            .map(|(i, _)| i)
            .unwrap_or(0);
        darts.rotate_left(start);
        FaceWalk { darts }
    }
}

impl fmt::Display for FaceWalk {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let vertices: Vec<String> = self.vertex_cycle().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vertices.join(" "))
    }
}
