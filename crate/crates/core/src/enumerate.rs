//! Exhaustive enumeration of rotation systems, genus censuses, and the
//! uniqueness / corollary verifiers built on top of them.
//!
//! A rotation system is addressed by a mixed-radix index: vertex `v`
//! contributes a digit in `0..(deg(v) - 1)!`, the last vertex varying
//! fastest. Digit `k` selects the `k`-th lexicographic permutation of the
//! neighbors after the smallest one, which stays fixed in front.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::embedmap::{normalize_cycle, EmbeddedGraph};
use crate::graph::Graph;
use crate::polyhedral::{check_faces, dual_is_simple};

pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("{systems} rotation systems exceed the budget of {budget}")]
    TooLarge { systems: u128, budget: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 3-connected")]
    Not3Connected,
    #[error("graph is 3-connected")]
    Is3Connected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not cubic")]
    NotCubic,
}

/// Next permutation in lexicographic order; false once the last one is passed.
fn next_permutation(items: &mut [usize]) -> bool {
    let Some(pivot) = (1..items.len()).rev().find(|&i| items[i - 1] < items[i]) else {
        return false;
    };
    let pivot = pivot - 1;
    let swap = (pivot + 1..items.len())
        .rev()
        .find(|&i| items[i] > items[pivot])
        .expect("a larger element exists right of the pivot");
    items.swap(pivot, swap);
    items[pivot + 1..].reverse();
    true
}

fn cyclic_orders(neighbors: &[usize]) -> Vec<Vec<usize>> {
    let Some((&first, rest)) = neighbors.split_first() else {
        return vec![Vec::new()];
    };
    let mut rest = rest.to_vec();
    rest.sort_unstable();
    let mut orders = Vec::new();
    loop {
        let mut order = Vec::with_capacity(neighbors.len());
        order.push(first);
        order.extend_from_slice(&rest);
        orders.push(order);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    orders
}

/// Number of rotation systems, `Π (deg(v) − 1)!`, saturating at `u128::MAX`.
pub fn rotation_system_count(graph: &Graph) -> u128 {
    let mut total: u128 = 1;
    for v in 0..graph.vertex_count() {
        for k in 2..graph.degree(v) {
            total = total.saturating_mul(k as u128);
        }
    }
    total
}

/// All rotation systems of one connected simple graph.
#[derive(Debug, Clone)]
pub struct RotationSpace {
    graph: Graph,
    orders: Vec<Vec<Vec<usize>>>,
    total: usize,
}

impl RotationSpace {
    pub fn new(graph: &Graph, budget: usize) -> Result<RotationSpace, EnumerateError> {
        if graph.edge_count() == 0 {
            return Err(EnumerateError::NoEdges);
        }
        if !graph.is_connected() {
            return Err(EnumerateError::Disconnected);
        }
        let systems = rotation_system_count(graph);
        if systems > budget as u128 {
            return Err(EnumerateError::TooLarge { systems, budget });
        }
        let orders = (0..graph.vertex_count())
            .map(|v| cyclic_orders(graph.neighbors(v)))
            .collect();
        Ok(RotationSpace {
            graph: graph.clone(),
            orders,
            total: systems as usize,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    fn digits(&self, mut index: usize) -> Vec<usize> {
        assert!(index < self.total, "index {index} out of range");
        let mut digits = vec![0; self.orders.len()];
        for (v, orders) in self.orders.iter().enumerate().rev() {
            digits[v] = index % orders.len();
            index /= orders.len();
        }
        digits
    }

    pub fn system_at(&self, index: usize) -> EmbeddedGraph {
        let rotations = self
            .digits(index)
            .into_iter()
            .zip(&self.orders)
            .map(|(digit, orders)| orders[digit].clone())
            .collect();
        EmbeddedGraph::from_valid(rotations)
    }

    pub fn iter(&self) -> impl Iterator<Item = EmbeddedGraph> + '_ {
        (0..self.total).map(|i| self.system_at(i))
    }

    /// Smallest index whose system satisfies `predicate`.
    pub fn find_first<P>(&self, predicate: P) -> Option<(usize, EmbeddedGraph)>
    where
        P: Fn(&EmbeddedGraph) -> bool + Sync,
    {
        (0..self.total)
            .into_par_iter()
            .map(|i| (i, self.system_at(i)))
            .find_first(|(_, g)| predicate(g))
    }

    /// Face count of the system at `index` without building an [`EmbeddedGraph`].
    fn face_count_at(&self, index: usize, scratch: &mut FaceScratch) -> usize {
        let digits = self.digits(index);
        scratch.prepare(&self.graph);
        for (v, &digit) in digits.iter().enumerate() {
            let order = &self.orders[v][digit];
            let base = scratch.offsets[v];
            let neighbors = self.graph.neighbors(v);
            for (k, &u) in order.iter().enumerate() {
                let next = order[(k + 1) % order.len()];
                let slot = neighbors.binary_search(&u).unwrap();
                let next_slot = neighbors.binary_search(&next).unwrap();
                scratch.successor[base + slot] = base + next_slot;
            }
        }
        scratch.visited.iter_mut().for_each(|v| *v = false);
        let mut faces = 0;
        for start in 0..scratch.successor.len() {
            if scratch.visited[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !scratch.visited[d] {
                scratch.visited[d] = true;
                d = scratch.successor[scratch.inverse[d]];
            }
        }
        faces
    }
}

/// Reusable buffers for [`RotationSpace::face_count_at`]. Darts are
/// numbered by their slot in the sorted adjacency list.
#[derive(Default)]
struct FaceScratch {
    offsets: Vec<usize>,
    inverse: Vec<usize>,
    successor: Vec<usize>,
    visited: Vec<bool>,
}

impl FaceScratch {
    fn prepare(&mut self, graph: &Graph) {
        if !self.offsets.is_empty() {
            return;
        }
        let n = graph.vertex_count();
        let mut total = 0;
        for v in 0..n {
            self.offsets.push(total);
            total += graph.degree(v);
        }
        self.inverse = vec![0; total];
        for v in 0..n {
            for (slot, &u) in graph.neighbors(v).iter().enumerate() {
                let back = graph.neighbors(u).binary_search(&v).unwrap();
                self.inverse[self.offsets[v] + slot] = self.offsets[u] + back;
            }
        }
        self.successor = vec![0; total];
        self.visited = vec![false; total];
    }
}

fn serialize_normalized(rotations: impl Iterator<Item = Vec<usize>>) -> Vec<u8> {
    let mut bytes = Vec::new();
    for rotation in rotations {
        bytes.extend_from_slice(&(rotation.len() as u32).to_be_bytes());
        for u in rotation {
            bytes.extend_from_slice(&(u as u32).to_be_bytes());
        }
    }
    bytes
}

fn forward_key(g: &EmbeddedGraph) -> Vec<u8> {
    serialize_normalized(g.rotations().iter().map(|r| normalize_cycle(r)))
}

fn mirror_key(g: &EmbeddedGraph) -> Vec<u8> {
    serialize_normalized(g.rotations().iter().map(|r| {
        let reversed: Vec<usize> = r.iter().rev().copied().collect();
        normalize_cycle(&reversed)
    }))
}

/// Key shared by an embedding and its mirror image and by nothing else
/// over the same labeled graph.
pub fn canonical_key(g: &EmbeddedGraph) -> Vec<u8> {
    forward_key(g).min(mirror_key(g))
}

/// Whether `g` is the designated member of its mirror class.
pub fn is_class_leader(g: &EmbeddedGraph) -> bool {
    forward_key(g) <= mirror_key(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub label: String,
    pub total: usize,
    pub raw_by_genus: BTreeMap<usize, usize>,
    pub classes_by_genus: BTreeMap<usize, usize>,
    pub polyhedral_raw_by_genus: BTreeMap<usize, usize>,
    pub polyhedral_classes: usize,
    /// Class leaders of the polyhedral classes, by enumeration index.
    pub polyhedral_representatives: Vec<Representative>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub index: usize,
    pub genus: usize,
    pub embedding: EmbeddedGraph,
}

#[derive(Default)]
struct CensusTally {
    raw: BTreeMap<usize, usize>,
    classes: BTreeMap<usize, usize>,
    polyhedral_raw: BTreeMap<usize, usize>,
    representatives: Vec<Representative>,
}

impl CensusTally {
    fn merge(mut self, other: CensusTally) -> CensusTally {
        for (target, source) in [
            (&mut self.raw, other.raw),
            (&mut self.classes, other.classes),
            (&mut self.polyhedral_raw, other.polyhedral_raw),
        ] {
            for (genus, count) in source {
                *target.entry(genus).or_default() += count;
            }
        }
        self.representatives.extend(other.representatives);
        self
    }
}

pub fn genus_census(graph: &Graph, label: &str, budget: usize) -> Result<CensusReport, EnumerateError> {
    let space = RotationSpace::new(graph, budget)?;
    let tally = (0..space.len())
        .into_par_iter()
        .fold(CensusTally::default, |mut tally, index| {
            let g = space.system_at(index);
            let faces = g.faces();
            let genus = (2 + g.edge_count() - g.vertex_count() - faces.len()) / 2;
            let leader = is_class_leader(&g);
            *tally.raw.entry(genus).or_default() += 1;
            if leader {
                *tally.classes.entry(genus).or_default() += 1;
            }
            if check_faces(&faces).polyhedral() {
                *tally.polyhedral_raw.entry(genus).or_default() += 1;
                if leader {
                    tally.representatives.push(Representative {
                        index,
                        genus,
                        embedding: g,
                    });
                }
            }
            tally
        })
        .reduce(CensusTally::default, CensusTally::merge);

    let mut representatives = tally.representatives;
    representatives.sort_by_key(|r| r.index);
    Ok(CensusReport {
        label: label.to_string(),
        total: space.len(),
        raw_by_genus: tally.raw,
        classes_by_genus: tally.classes,
        polyhedral_raw_by_genus: tally.polyhedral_raw,
        polyhedral_classes: representatives.len(),
        polyhedral_representatives: representatives,
    })
}

pub fn is_three_connected(graph: &Graph) -> bool {
    graph.is_k_connected(3)
}

/// The first genus-0 rotation system in enumeration order.
///
/// Graphs with more than `3n − 6` edges are rejected without searching.
pub fn find_planar_embedding(graph: &Graph, budget: usize) -> Result<Option<EmbeddedGraph>, EnumerateError> {
    let space = RotationSpace::new(graph, budget)?;
    let (n, m) = (graph.vertex_count(), graph.edge_count());
    if n >= 3 && m > 3 * n - 6 {
        return Ok(None);
    }
    Ok(search_plane(&space))
}

/// Exhaustive genus-0 search with no edge-count shortcut.
pub fn search_plane(space: &RotationSpace) -> Option<EmbeddedGraph> {
    let target_faces = 2 + space.graph.edge_count() - space.graph.vertex_count();
    (0..space.len())
        .into_par_iter()
        .map_init(FaceScratch::default, |scratch, i| (i, space.face_count_at(i, scratch)))
        .find_first(|&(_, faces)| faces == target_faces)
        .map(|(i, _)| space.system_at(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// Exactly one polyhedral mirror class, and it is plane.
    WhitneyUnique,
    /// Every embedding of a cubic planar graph with a simple dual is plane.
    CubicSimpleDualPlaneOnly,
    /// No polyhedral embedding of a planar graph has positive genus.
    NoPolyhedralHigherGenus,
    /// A graph with a 1- or 2-cut has no polyhedral embedding.
    NoPolyhedralLowConnectivity,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            Claim::WhitneyUnique => "whitney-unique",
            Claim::CubicSimpleDualPlaneOnly => "cubic-simple-dual-plane-only",
            Claim::NoPolyhedralHigherGenus => "no-polyhedral-higher-genus",
            Claim::NoPolyhedralLowConnectivity => "no-polyhedral-low-connectivity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Enumeration index, or `None` for the plane embedding found by search.
    pub index: Option<usize>,
    pub genus: usize,
    pub reason: String,
    pub embedding: EmbeddedGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub claim: Claim,
    pub systems: usize,
    /// Genus of each polyhedral mirror class, in order of first appearance;
    /// only tracked by the Whitney check.
    pub polyhedral_class_genera: Option<Vec<usize>>,
    pub counterexample: Option<Counterexample>,
}

impl VerificationResult {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn first_counterexample<P>(space: &RotationSpace, claim: Claim, reason: &str, bad: P) -> VerificationResult
where
    P: Fn(&EmbeddedGraph) -> bool + Sync,
{
    let counterexample = space.find_first(bad).map(|(index, embedding)| Counterexample {
        index: Some(index),
        genus: embedding.genus(),
        reason: reason.to_string(),
        embedding,
    });
    VerificationResult {
        claim,
        systems: space.len(),
        polyhedral_class_genera: None,
        counterexample,
    }
}

fn require_planar(graph: &Graph, budget: usize) -> Result<EmbeddedGraph, EnumerateError> {
    find_planar_embedding(graph, budget)?.ok_or(EnumerateError::NotPlanar)
}

pub fn verify_whitney(graph: &Graph, budget: usize) -> Result<VerificationResult, EnumerateError> {
    let space = RotationSpace::new(graph, budget)?;
    if !is_three_connected(graph) {
        return Err(EnumerateError::Not3Connected);
    }
    let plane = require_planar(graph, budget)?;

    let polyhedral: Vec<(usize, EmbeddedGraph)> = (0..space.len())
        .into_par_iter()
        .map(|i| (i, space.system_at(i)))
        .filter(|(_, g)| check_faces(&g.faces()).polyhedral())
        .collect();

    let mut keys: Vec<Vec<u8>> = Vec::new();
    let mut genera = Vec::new();
    for (_, g) in &polyhedral {
        let key = canonical_key(g);
        if !keys.contains(&key) {
            keys.push(key);
            genera.push(g.genus());
        }
    }

    let counterexample = match polyhedral.first() {
        None => Some(Counterexample {
            index: None,
            genus: 0,
            reason: "plane embedding is not polyhedral".to_string(),
            embedding: plane,
        }),
        Some((_, first)) => {
            let first_key = canonical_key(first);
            polyhedral.iter().find_map(|(index, g)| {
                let genus = g.genus();
                let reason = if genus > 0 {
                    "polyhedral embedding of positive genus"
                } else if canonical_key(g) != first_key {
                    "second polyhedral mirror class"
                } else {
                    return None;
                };
                Some(Counterexample {
                    index: Some(*index),
                    genus,
                    reason: reason.to_string(),
                    embedding: g.clone(),
                })
            })
        }
    };
    Ok(VerificationResult {
        claim: Claim::WhitneyUnique,
        systems: space.len(),
        polyhedral_class_genera: Some(genera),
        counterexample,
    })
}

pub fn verify_cubic_corollary(graph: &Graph, budget: usize) -> Result<VerificationResult, EnumerateError> {
    if !graph.is_regular(3) {
        return Err(EnumerateError::NotCubic);
    }
    let space = RotationSpace::new(graph, budget)?;
    if !is_three_connected(graph) {
        return Err(EnumerateError::Not3Connected);
    }
    require_planar(graph, budget)?;
    Ok(first_counterexample(
        &space,
        Claim::CubicSimpleDualPlaneOnly,
        "simple dual at positive genus",
        |g| dual_is_simple(g) && g.genus() > 0,
    ))
}

/// Works for any planar graph, 3-connected or not.
pub fn verify_polyhedral_plane_only(graph: &Graph, budget: usize) -> Result<VerificationResult, EnumerateError> {
    let space = RotationSpace::new(graph, budget)?;
    require_planar(graph, budget)?;
    Ok(first_counterexample(
        &space,
        Claim::NoPolyhedralHigherGenus,
        "polyhedral embedding of positive genus",
        |g| {
            let faces = g.faces();
            faces.len() + g.vertex_count() < g.edge_count() + 2 && check_faces(&faces).polyhedral()
        },
    ))
}

pub fn verify_low_connectivity(graph: &Graph, budget: usize) -> Result<VerificationResult, EnumerateError> {
    let space = RotationSpace::new(graph, budget)?;
    if is_three_connected(graph) {
        return Err(EnumerateError::Is3Connected);
    }
    Ok(first_counterexample(
        &space,
        Claim::NoPolyhedralLowConnectivity,
        "polyhedral embedding of a graph with a 1- or 2-cut",
        |g| check_faces(&g.faces()).polyhedral(),
    ))
}
