use std::collections::VecDeque;

use serde::Serialize;

use super::chordal::is_chordal;
use super::iso::is_vertex_transitive;
use super::spectrum::{spectrum, SpectrumMode};
use super::Graph;
use crate::caps::Caps;
use crate::error::{Error, Result};

pub fn is_complete(g: &Graph) -> bool {
    let t = g.vertex_count();
    (0..t).all(|v| g.degree(v) + 1 == t)
}

/// Breadth-first distances from `source`; `None` for unreachable vertices.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0);
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() == 0 || distances_from(g, 0).iter().all(Option::is_some)
}

/// Largest distance between two vertices; `None` when the graph is
/// disconnected (infinite diameter).
pub fn diameter(g: &Graph) -> Option<usize> {
    let t = g.vertex_count();
    if is_complete(g) {
        return Some(usize::from(t > 1));
    }
    let mut best = 0;
    for s in 0..t {
        for d in distances_from(g, s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

pub fn is_tree(g: &Graph) -> bool {
    let t = g.vertex_count();
    t > 0 && g.edge_count() == t - 1 && is_connected(g)
}

pub fn is_regular(g: &Graph) -> bool {
    let t = g.vertex_count();
    t == 0 || (1..t).all(|v| g.degree(v) == g.degree(0))
}

/// Degrees in non-increasing order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    let t = g.vertex_count();
    (0..t).filter(|&v| g.degree(v) + 1 == t).collect()
}

/// Every analyzer output, as exported alongside the graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphProperties {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub complete: bool,
    pub connected: bool,
    /// `null` for a disconnected graph.
    pub diameter: Option<usize>,
    pub chordal: bool,
    pub tree: bool,
    pub regular: bool,
    pub universal_vertices: Vec<usize>,
    pub degree_sequence: Vec<usize>,
    pub lambda_max: f64,
    pub spectrum_mode: SpectrumMode,
    /// `null` when the graph is over the automorphism cap.
    pub vertex_transitive: Option<bool>,
}

impl GraphProperties {
    pub fn compute(g: &Graph, caps: &Caps) -> Result<Self> {
        let spec = spectrum(g, caps)?;
        let vertex_transitive = match is_vertex_transitive(g, caps) {
            Ok(b) => Some(b),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(GraphProperties {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            complete: is_complete(g),
            connected: is_connected(g),
            diameter: diameter(g),
            chordal: is_chordal(g).chordal,
            tree: is_tree(g),
            regular: is_regular(g),
            universal_vertices: universal_vertices(g),
            degree_sequence: degree_sequence(g),
            lambda_max: spec.lambda_max,
            spectrum_mode: spec.mode,
            vertex_transitive,
        })
    }
}
