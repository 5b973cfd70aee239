//! Exhaustive enumeration of the graph-complex generators at desk scale.
//!
//! Trivalence bounds everything: `2e >= 3v` together with `v - e = chi`
//! forces `e <= -3 chi`, so each complex is finite and the enumeration below
//! is complete, not truncated, whenever `max_edges` reaches that bound.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::graph::{CanonicalGraph, GraphKind, OrientedGraph};

/// All connected multigraphs with every vertex at least trivalent,
/// `v - e = chi` and `e <= max_edges`, up to isomorphism. Zero-orientation
/// classes (loops, orientation-reversing automorphisms) are included and
/// flagged.
pub fn enumerate_ordinary(chi: i64, max_edges: usize) -> Vec<CanonicalGraph> {
    let mut out: BTreeSet<CanonicalGraph> = BTreeSet::new();
    for (v, e) in shapes(chi, max_edges) {
        for counts in multiplicity_assignments(v, e) {
            if let Some(g) = build_ordinary(v, &counts) {
                out.insert(g.canonicalize().0);
            }
        }
    }
    out.into_iter().collect()
}

/// All connected ribbon graphs with every vertex at least trivalent, the
/// given genus and puncture (face) count, and `e <= max_edges`, up to ribbon
/// isomorphism.
pub fn enumerate_ribbon(genus: usize, punctures: usize, max_edges: usize) -> Vec<CanonicalGraph> {
    let chi = 2 - 2 * (genus as i64) - punctures as i64;
    let mut out: BTreeSet<CanonicalGraph> = BTreeSet::new();
    for (v, e) in shapes(chi, max_edges) {
        for counts in multiplicity_assignments(v, e) {
            let base = match build_ordinary(v, &counts) {
                Some(g) => g,
                None => continue,
            };
            let lists: Vec<&[usize]> = (0..v).map(|i| base.local_order(i)).collect();
            // All cyclic orders per vertex: fix the first half-edge, permute
            // the rest. Canonicalization absorbs the remaining symmetry.
            let per_vertex: Vec<Vec<Vec<usize>>> = lists
                .iter()
                .map(|list| {
                    list[1..]
                        .iter()
                        .copied()
                        .permutations(list.len() - 1)
                        .map(|rest| {
                            let mut order = vec![list[0]];
                            order.extend(rest);
                            order
                        })
                        .collect()
                })
                .collect();
            for choice in per_vertex.iter().multi_cartesian_product() {
                let vertices: Vec<Vec<usize>> = choice.iter().map(|c| (*c).clone()).collect();
                let g = OrientedGraph::new(GraphKind::Ribbon, vertices, &base.edges())
                    .expect("reordering local lists preserves validity");
                let f = g.faces().expect("ribbon graph");
                if f == punctures && (v as i64) - (e as i64) + (f as i64) == 2 - 2 * genus as i64 {
                    out.insert(g.canonicalize().0);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Feasible `(v, e)` pairs for the given Euler characteristic.
fn shapes(chi: i64, max_edges: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if chi >= 0 {
        return out;
    }
    let bound = (-3 * chi) as usize;
    for e in 1..=max_edges.min(bound) {
        let v = e as i64 + chi;
        if v >= 1 && 2 * e >= 3 * (v as usize) {
            out.push((v as usize, e));
        }
    }
    out
}

/// Slots `(i, j)` with `i <= j` in lexicographic order; a multigraph is a
/// multiplicity per slot.
fn slots(v: usize) -> Vec<(usize, usize)> {
    (0..v)
        .flat_map(|i| (i..v).map(move |j| (i, j)))
        .collect()
}

fn multiplicity_assignments(v: usize, e: usize) -> Vec<Vec<usize>> {
    let n_slots = slots(v).len();
    let mut out = Vec::new();
    let mut current = vec![0usize; n_slots];
    fn rec(pos: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == current.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        for c in 0..=remaining {
            current[pos] = c;
            rec(pos + 1, remaining - c, current, out);
        }
        current[pos] = 0;
    }
    rec(0, e, &mut current, &mut out);
    out
}

/// Builds the half-edge graph for a multiplicity assignment, or `None` when
/// a vertex is sub-trivalent or the graph is disconnected. Arrows run from
/// the lower-labelled endpoint.
fn build_ordinary(v: usize, counts: &[usize]) -> Option<OrientedGraph> {
    let slots = slots(v);
    let mut degree = vec![0usize; v];
    for (s, &c) in counts.iter().enumerate() {
        let (i, j) = slots[s];
        if i == j {
            degree[i] += 2 * c;
        } else {
            degree[i] += c;
            degree[j] += c;
        }
    }
    if degree.iter().any(|&d| d < 3) {
        return None;
    }
    // connectivity over non-loop adjacency
    let mut seen = vec![false; v];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(a) = stack.pop() {
        for (s, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (i, j) = slots[s];
            if i == j {
                continue;
            }
            let other = if i == a {
                j
            } else if j == a {
                i
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return None;
    }

    let mut vertices: Vec<Vec<usize>> = vec![Vec::new(); v];
    let mut edges = Vec::new();
    let mut next = 0usize;
    for (s, &c) in counts.iter().enumerate() {
        let (i, j) = slots[s];
        for _ in 0..c {
            let (t, h) = (next, next + 1);
            next += 2;
            vertices[i].push(t);
            vertices[j].push(h);
            edges.push((t, h));
        }
    }
    Some(OrientedGraph::new(GraphKind::Ordinary, vertices, &edges).expect("validated above"))
}
