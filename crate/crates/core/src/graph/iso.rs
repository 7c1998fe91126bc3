//! Graph isomorphism by invariants, color refinement, and backtracking.

use std::collections::BTreeMap;

use super::analysis::{degree_sequence, is_complete, is_regular};
use super::spectrum::spectrum;
use super::Graph;
use crate::caps::Caps;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum IsoOutcome {
    /// `mapping[v]` is the image in the second graph of vertex `v`.
    Isomorphic(Vec<usize>),
    /// The first invariant that separates the graphs.
    Distinguished(String),
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

/// Stable colors of both graphs, refined jointly so that equal colors mean
/// the same thing on both sides.
fn refine(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| (0..g.vertex_count()).map(|v| g.degree(v)).collect())
        .collect();
    let mut classes = usize::MAX;
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let signatures: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                (0..g.vertex_count())
                    .map(|v| {
                        let mut around: Vec<usize> = g.neighbors(v).map(|w| c[w]).collect();
                        around.sort_unstable();
                        (c[v], around)
                    })
                    .collect()
            })
            .collect();
        for sig in signatures.iter().flatten() {
            palette.entry(sig.clone()).or_insert(0);
        }
        for (i, v) in palette.values_mut().enumerate() {
            *v = i;
        }
        colors = signatures
            .iter()
            .map(|sigs| sigs.iter().map(|s| palette[s]).collect())
            .collect();
        if palette.len() == classes {
            return colors;
        }
        classes = palette.len();
    }
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [usize],
    c2: &'a [usize],
    order: Vec<usize>,
    mapping: Vec<usize>,
    used: Vec<bool>,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(format!(
                "isomorphism search exceeded {} nodes",
                self.budget
            )));
        }
        let v = self.order[depth];
        if self.mapping[v] != usize::MAX {
            return self.run(depth + 1);
        }
        for w in 0..self.g2.vertex_count() {
            if self.used[w] || self.c2[w] != self.c1[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g1.has_edge(u, v) == self.g2.has_edge(self.mapping[u], w));
            if !consistent {
                continue;
            }
            self.mapping[v] = w;
            self.used[w] = true;
            if self.run(depth + 1)? {
                return Ok(true);
            }
            self.mapping[v] = usize::MAX;
            self.used[w] = false;
        }
        Ok(false)
    }
}

/// Backtracking over color-respecting bijections, optionally with one
/// vertex pinned. Vertices in small color classes are placed first.
fn find_mapping(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    pin: Option<(usize, usize)>,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    let n = g1.vertex_count();
    let sizes = histogram(c1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (sizes[&c1[v]], c1[v], v));
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if let Some((a, b)) = pin {
        if c1[a] != c2[b] {
            return Ok(None);
        }
        order.retain(|&v| v != a);
        order.insert(0, a);
        mapping[a] = b;
        used[b] = true;
    }
    let mut search = Search {
        g1,
        g2,
        c1,
        c2,
        order,
        mapping,
        used,
        budget,
        nodes: 0,
    };
    Ok(if search.run(0)? { Some(search.mapping) } else { None })
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph, caps: &Caps) -> Result<IsoOutcome> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() {
        return Ok(IsoOutcome::Distinguished(format!(
            "vertex counts {n} and {}",
            g2.vertex_count()
        )));
    }
    if g1.edge_count() != g2.edge_count() {
        return Ok(IsoOutcome::Distinguished(format!(
            "edge counts {} and {}",
            g1.edge_count(),
            g2.edge_count()
        )));
    }
    if is_complete(g1) && is_complete(g2) {
        return Ok(IsoOutcome::Isomorphic((0..n).collect()));
    }
    if degree_sequence(g1) != degree_sequence(g2) {
        return Ok(IsoOutcome::Distinguished("degree sequences".into()));
    }
    if n <= caps.max_spectrum {
        let (s1, s2) = (spectrum(g1, caps)?, spectrum(g2, caps)?);
        let differ = s1
            .eigenvalues
            .iter()
            .zip(&s2.eigenvalues)
            .any(|(a, b)| (a - b).abs() > caps.tol.max(1e-7));
        if differ {
            return Ok(IsoOutcome::Distinguished("adjacency spectra".into()));
        }
    }
    let colors = refine(&[g1, g2]);
    if histogram(&colors[0]) != histogram(&colors[1]) {
        return Ok(IsoOutcome::Distinguished("color refinement".into()));
    }
    match find_mapping(g1, g2, &colors[0], &colors[1], None, caps.iso_budget)? {
        Some(m) => Ok(IsoOutcome::Isomorphic(m)),
        None => Ok(IsoOutcome::Distinguished("exhaustive search".into())),
    }
}

/// Whether the automorphism group moves vertex 0 to every vertex.
pub fn is_vertex_transitive(g: &Graph, caps: &Caps) -> Result<bool> {
    if is_complete(g) {
        return Ok(true);
    }
    let n = g.vertex_count();
    if n > caps.max_automorphism {
        return Err(Error::cap("automorphism search vertices", n as u64, caps.max_automorphism as u64));
    }
    if !is_regular(g) {
        return Ok(false);
    }
    let colors = refine(&[g]).remove(0);
    for v in 1..n {
        if find_mapping(g, g, &colors, &colors, Some((0, v)), caps.iso_budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_mapping(g1: &Graph, g2: &Graph, m: &[usize]) {
        for (a, b) in g1.edges() {
            assert!(g2.has_edge(m[a], m[b]));
        }
        assert_eq!(g1.edge_count(), g2.edge_count());
    }

    #[test]
    fn complete_graphs() {
        let caps = Caps::default();
        assert!(are_isomorphic(&Graph::complete(3), &Graph::complete(3), &caps).unwrap().is_isomorphic());
        assert!(!are_isomorphic(&Graph::complete(2), &Graph::complete(3), &caps).unwrap().is_isomorphic());
    }

    #[test]
    fn relabelled_graphs() {
        let caps = Caps::default();
        let g1 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]);
        let perm = [3, 5, 0, 1, 2, 4];
        let g2 = Graph::from_edges(6, g1.edges().into_iter().map(|(a, b)| (perm[a], perm[b])));
        match are_isomorphic(&g1, &g2, &caps).unwrap() {
            IsoOutcome::Isomorphic(m) => check_mapping(&g1, &g2, &m),
            other => panic!("expected isomorphic, got {other:?}"),
        }
    }

    #[test]
    fn cospectral_but_different() {
        // K_{1,4} and C_4 + K_1 share a spectrum but not degrees.
        let caps = Caps::default();
        let star = Graph::star(4);
        let c4k1 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!are_isomorphic(&star, &c4k1, &caps).unwrap().is_isomorphic());
        // Two regular graphs on 6 vertices: C_6 and two triangles.
        let c6 = Graph::cycle(6);
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!are_isomorphic(&c6, &tt, &caps).unwrap().is_isomorphic());
    }

    #[test]
    fn transitivity() {
        let caps = Caps::default();
        assert!(is_vertex_transitive(&Graph::complete(5), &caps).unwrap());
        assert!(is_vertex_transitive(&Graph::complete(2), &caps).unwrap());
        assert!(is_vertex_transitive(&Graph::cycle(7), &caps).unwrap());
        assert!(!is_vertex_transitive(&Graph::star(3), &caps).unwrap());
        assert!(!is_vertex_transitive(&Graph::path(4), &caps).unwrap());
        // C_3 + C_4 is 2-regular but not transitive.
        let mixed = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]);
        assert!(!is_vertex_transitive(&mixed, &caps).unwrap());
    }

    #[test]
    fn automorphism_cap() {
        let caps = Caps {
            max_automorphism: 4,
            ..Caps::default()
        };
        assert!(matches!(
            is_vertex_transitive(&Graph::path(5), &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
