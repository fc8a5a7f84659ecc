//! Small named graphs used as test subjects, with one plane embedding each
//! where the graph is planar.

use crate::embedmap::EmbeddedGraph;
use crate::graph::Graph;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("catalog graphs are simple")
}

fn embedded(rotations: &[&[usize]]) -> EmbeddedGraph {
    let rotations: Vec<Vec<usize>> = rotations.iter().map(|r| r.to_vec()).collect();
    EmbeddedGraph::new(rotations.len(), rotations).expect("catalog embeddings are valid")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    graph(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    graph(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    graph(a + b, &edges)
}

/// Wheel with hub 0 and rim `1..=spokes`.
pub fn wheel(spokes: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=spokes).map(|v| (0, v)).collect();
    edges.extend((1..=spokes).map(|v| (v, v % spokes + 1)));
    graph(spokes + 1, &edges)
}

pub fn k4() -> Graph {
    complete(4)
}

pub fn cube() -> Graph {
    let edges: Vec<(usize, usize)> = (0..8usize)
        .flat_map(|a| (a + 1..8).map(move |b| (a, b)))
        .filter(|&(a, b)| (a ^ b).count_ones() == 1)
        .collect();
    graph(8, &edges)
}

/// Triangles 0-1-2 and 3-4-5 joined by the rungs 0-3, 1-4, 2-5.
pub fn prism() -> Graph {
    graph(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
}

/// Opposite vertex pairs are `{0,3}`, `{1,4}`, `{2,5}`.
pub fn octahedron() -> Graph {
    let edges: Vec<(usize, usize)> = (0..6usize)
        .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
        .filter(|&(a, b)| a % 3 != b % 3)
        .collect();
    graph(6, &edges)
}

pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    graph(10, &edges)
}

pub fn k4_minus_edge() -> Graph {
    graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    graph(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
}

/// K4 with the edge `{2,3}` subdivided by vertex 4.
pub fn k4_subdivided() -> Graph {
    graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
}

/// The plane K4 fixture: four triangular faces.
pub fn k4_plane() -> EmbeddedGraph {
    embedded(&[&[1, 3, 2], &[2, 3, 0], &[0, 3, 1], &[0, 1, 2]])
}

/// `k4_plane` with the rotation at vertex 3 reversed; a torus embedding
/// with one 3-face and one 9-face.
pub fn k4_flipped() -> EmbeddedGraph {
    embedded(&[&[1, 3, 2], &[2, 3, 0], &[0, 3, 1], &[0, 2, 1]])
}

pub fn cube_plane() -> EmbeddedGraph {
    embedded(&[
        &[1, 2, 4],
        &[0, 5, 3],
        &[0, 3, 6],
        &[1, 7, 2],
        &[0, 6, 5],
        &[1, 4, 7],
        &[2, 7, 4],
        &[3, 5, 6],
    ])
}

pub fn prism_plane() -> EmbeddedGraph {
    embedded(&[&[1, 2, 3], &[0, 4, 2], &[0, 1, 5], &[0, 5, 4], &[1, 3, 5], &[2, 4, 3]])
}

pub fn octahedron_plane() -> EmbeddedGraph {
    embedded(&[
        &[1, 2, 4, 5],
        &[0, 5, 3, 2],
        &[0, 1, 3, 4],
        &[1, 5, 4, 2],
        &[0, 2, 3, 5],
        &[0, 4, 3, 1],
    ])
}

pub fn c4_plane() -> EmbeddedGraph {
    embedded(&[&[1, 3], &[0, 2], &[1, 3], &[0, 2]])
}
