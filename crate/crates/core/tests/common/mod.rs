//! Brute-force reference computations that share no code with the library
//! beyond the `Graph` adjacency lists they read.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use embedkit::Graph;

pub type Rotations = Vec<Vec<usize>>;

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn rotate_to_min(cycle: &[usize]) -> Vec<usize> {
    let mut best = cycle.to_vec();
    for k in 0..cycle.len() {
        let mut candidate = cycle.to_vec();
        candidate.rotate_left(k);
        if candidate[0] < best[0] {
            best = candidate;
        }
    }
    best
}

/// Every rotation system, each cyclic order appearing once (deduplicated
/// from all linear orders).
pub fn all_rotation_systems(graph: &Graph) -> Vec<Rotations> {
    let per_vertex: Vec<Vec<Vec<usize>>> = (0..graph.vertex_count())
        .map(|v| {
            let distinct: BTreeSet<Vec<usize>> = permutations(graph.neighbors(v))
                .iter()
                .map(|p| rotate_to_min(p))
                .collect();
            distinct.into_iter().collect()
        })
        .collect();
    let mut systems: Vec<Rotations> = vec![Vec::new()];
    for choices in &per_vertex {
        systems = systems
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    systems
}

pub fn faces(rotations: &Rotations) -> Vec<Vec<(usize, usize)>> {
    let mut next: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for (v, r) in rotations.iter().enumerate() {
        for (i, &u) in r.iter().enumerate() {
            next.insert((v, u), (v, r[(i + 1) % r.len()]));
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut darts: Vec<(usize, usize)> = next.keys().copied().collect();
    darts.sort();
    for d in darts {
        if seen.contains(&d) {
            continue;
        }
        let mut walk = Vec::new();
        let mut x = d;
        while seen.insert(x) {
            walk.push(x);
            x = next[&(x.1, x.0)];
        }
        out.push(walk);
    }
    out
}

pub fn genus(rotations: &Rotations) -> usize {
    let v = rotations.len() as i64;
    let e = rotations.iter().map(Vec::len).sum::<usize>() as i64 / 2;
    let f = faces(rotations).len() as i64;
    let defect = 2 - v + e - f;
    assert!(defect >= 0 && defect % 2 == 0);
    (defect / 2) as usize
}

pub fn polyhedral(rotations: &Rotations) -> bool {
    let faces = faces(rotations);
    let vertex_sets: Vec<HashSet<usize>> = faces.iter().map(|f| f.iter().map(|d| d.0).collect()).collect();
    let edge_sets: Vec<HashSet<(usize, usize)>> = faces
        .iter()
        .map(|f| f.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect())
        .collect();
    for (f, vs) in faces.iter().zip(&vertex_sets) {
        if f.len() < 3 || vs.len() != f.len() {
            return false;
        }
    }
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            let common: Vec<usize> = vertex_sets[i].intersection(&vertex_sets[j]).copied().collect();
            let shared: Vec<(usize, usize)> = edge_sets[i].intersection(&edge_sets[j]).copied().collect();
            let ok = match common.len() {
                0 | 1 => true,
                2 => shared.len() == 1 && common.contains(&shared[0].0) && common.contains(&shared[0].1),
                _ => false,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Dual simplicity computed from raw face membership.
pub fn dual_simple(rotations: &Rotations) -> bool {
    let faces = faces(rotations);
    let mut face_of = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &d in f {
            face_of.insert(d, i);
        }
    }
    let mut pairs = HashSet::new();
    for (v, r) in rotations.iter().enumerate() {
        for &u in r.iter().filter(|&&u| v < u) {
            let (a, b) = (face_of[&(v, u)], face_of[&(u, v)]);
            if a == b || !pairs.insert((a.min(b), a.max(b))) {
                return false;
            }
        }
    }
    true
}

pub fn class_key(rotations: &Rotations) -> Rotations {
    let forward: Rotations = rotations.iter().map(|r| rotate_to_min(r)).collect();
    let backward: Rotations = rotations
        .iter()
        .map(|r| rotate_to_min(&r.iter().rev().copied().collect::<Vec<_>>()))
        .collect();
    forward.min(backward)
}

pub struct OracleCensus {
    pub total: usize,
    pub raw: BTreeMap<usize, usize>,
    pub classes: BTreeMap<usize, usize>,
    pub polyhedral_classes: BTreeMap<usize, usize>,
}

pub fn census(graph: &Graph) -> OracleCensus {
    let systems = all_rotation_systems(graph);
    let mut raw = BTreeMap::new();
    let mut classes: BTreeMap<usize, BTreeSet<Rotations>> = BTreeMap::new();
    let mut poly: BTreeMap<usize, BTreeSet<Rotations>> = BTreeMap::new();
    for r in &systems {
        let g = genus(r);
        *raw.entry(g).or_insert(0) += 1;
        classes.entry(g).or_default().insert(class_key(r));
        if polyhedral(r) {
            poly.entry(g).or_default().insert(class_key(r));
        }
    }
    OracleCensus {
        total: systems.len(),
        raw,
        classes: classes.into_iter().map(|(g, s)| (g, s.len())).collect(),
        polyhedral_classes: poly.into_iter().map(|(g, s)| (g, s.len())).collect(),
    }
}
