//! Simple graphs, the Hom graph builder, and graph analyzers.

pub mod analysis;
pub mod chordal;
pub mod export;
pub mod iso;
pub mod spectrum;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::hom::{hom_oracle, hom_structure, present_quotient, present_submodule, HomStructure};
use crate::lattice::SubmoduleLattice;
use crate::presentation::{ModulePresentation, ResidueMatrix};

/// Undirected graph without loops or multiple edges on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.adj[i].insert_range(..);
            g.adj[i].set(i, false);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Vertex 0 is the center.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loop at vertex {i}");
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub(crate) fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertex_count() {
            out.extend(self.adj[i].ones().filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }
}

/// Counts from the adjacency computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Distinct (submodule, quotient) presentation pairs whose Hom was solved.
    pub hom_pairs: usize,
    /// Of those, how many were also run through the brute-force oracle.
    pub oracle_checked: usize,
}

/// Γ_Hom(M): one vertex per proper submodule, vertex `i` being lattice node
/// `i`. Vertex 0 is the zero submodule.
#[derive(Debug, Clone)]
pub struct HomGraph {
    lattice: SubmoduleLattice,
    graph: Graph,
    stats: BuildStats,
}

type PresentationKey = (Vec<u64>, Vec<ResidueMatrix>);

struct Interner {
    ids: HashMap<PresentationKey, usize>,
    modules: Vec<ModulePresentation>,
}

impl Interner {
    fn intern(&mut self, m: ModulePresentation) -> usize {
        let key = (m.orders().to_vec(), m.actions().to_vec());
        let next = self.modules.len();
        let id = *self.ids.entry(key).or_insert(next);
        if id == next {
            self.modules.push(m);
        }
        id
    }
}

struct HomMemo<'a> {
    caps: &'a Caps,
    interner: Interner,
    nonzero: HashMap<(usize, usize), bool>,
    stats: BuildStats,
}

impl HomMemo<'_> {
    fn nonzero(&mut self, sub: usize, quot: usize) -> Result<bool> {
        if let Some(&known) = self.nonzero.get(&(sub, quot)) {
            return Ok(known);
        }
        let a = &self.interner.modules[sub];
        let b = &self.interner.modules[quot];
        let h = hom_structure(a, b)?;
        self.stats.hom_pairs += 1;
        if a.size() <= self.caps.max_oracle_order as u64 {
            let oracle_caps = Caps {
                max_oracle_candidates: self.caps.max_oracle_candidates.min(self.caps.max_cross_check),
                ..*self.caps
            };
            match hom_oracle(a, b, &oracle_caps) {
                Ok(o) => {
                    self.stats.oracle_checked += 1;
                    check_agreement(a, b, &h, &o)?;
                }
                Err(Error::CapExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        let nz = !h.is_zero();
        self.nonzero.insert((sub, quot), nz);
        Ok(nz)
    }
}

fn check_agreement(
    a: &ModulePresentation,
    b: &ModulePresentation,
    solver: &HomStructure,
    oracle: &HomStructure,
) -> Result<()> {
    if solver == oracle {
        return Ok(());
    }
    Err(Error::Internal(format!(
        "Hom solver gives {solver} but oracle gives {oracle} for orders {:?} -> {:?}",
        a.orders(),
        b.orders()
    )))
}

impl HomGraph {
    pub fn build(module: &ModulePresentation, caps: &Caps) -> Result<Self> {
        let lattice = SubmoduleLattice::enumerate(module, caps)?;
        HomGraph::from_lattice(lattice, caps)
    }

    pub fn from_lattice(lattice: SubmoduleLattice, caps: &Caps) -> Result<Self> {
        let t = lattice.proper_count();
        let m = lattice.module();
        let mut memo = HomMemo {
            caps,
            interner: Interner {
                ids: HashMap::new(),
                modules: Vec::new(),
            },
            nonzero: HashMap::new(),
            stats: BuildStats::default(),
        };
        let mut subs = Vec::with_capacity(t);
        let mut quots = Vec::with_capacity(t);
        for v in 0..t {
            subs.push(memo.interner.intern(present_submodule(m, lattice.node(v))?));
            quots.push(memo.interner.intern(present_quotient(m, lattice.node(v))?));
        }
        let mut graph = Graph::empty(t);
        for u in 0..t {
            for v in (u + 1)..t {
                if memo.nonzero(subs[u], quots[v])? || memo.nonzero(subs[v], quots[u])? {
                    graph.add_edge(u, v);
                }
            }
        }
        Ok(HomGraph {
            lattice,
            graph,
            stats: memo.stats,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        &self.lattice
    }

    pub fn module(&self) -> &ModulePresentation {
        self.lattice.module()
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn label(&self, v: usize) -> String {
        self.lattice.node(v).label(self.module())
    }

    /// |N| for the submodule at vertex `v`.
    pub fn order(&self, v: usize) -> usize {
        self.lattice.node(v).order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_shapes() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::path(4).edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::cycle(4).edge_count(), 4);
        assert_eq!(Graph::star(3).degree(0), 3);
        assert_eq!(Graph::complete(1).edge_count(), 0);
    }

    #[test]
    #[should_panic(expected = "loop")]
    fn loops_rejected() {
        Graph::from_edges(2, [(1, 1)]);
    }

    #[test]
    fn example_graphs() {
        let caps = Caps::default();
        for p in [2, 3, 5] {
            let g = HomGraph::build(&ModulePresentation::zmod(p, 2, &[2]).unwrap(), &caps).unwrap();
            assert_eq!(g.graph(), &Graph::complete(2));
        }
        let z8 = HomGraph::build(&ModulePresentation::zmod(2, 3, &[3]).unwrap(), &caps).unwrap();
        assert_eq!(z8.graph(), &Graph::complete(3));
        let labels: Vec<String> = (0..3).map(|v| z8.label(v)).collect();
        assert_eq!(labels, vec!["0", "<(4)>", "<(2)>"]);

        let s1 = ModulePresentation::product_semisimple(2, 1, 0).unwrap();
        let g = HomGraph::build(&s1, &caps).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.graph().edge_count(), 0);
    }

    #[test]
    fn cross_check_runs() {
        let m = ModulePresentation::zmod(2, 2, &[2, 1]).unwrap();
        let g = HomGraph::build(&m, &Caps::default()).unwrap();
        assert!(g.stats().hom_pairs > 0);
        assert_eq!(g.stats().oracle_checked, g.stats().hom_pairs);
    }
}
