//! Submodule lattices: enumeration, inclusion order, and the lattice-level
//! queries (maximal submodules, uniseriality, chain length, socle node).

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::presentation::{Element, ModulePresentation};

/// A submodule, stored as its canonical sorted element list and a
/// membership bitset over element indices of the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    elements: Vec<u32>,
    members: FixedBitSet,
    generators: Vec<u32>,
}

impl Submodule {
    fn from_members(members: FixedBitSet) -> Self {
        Submodule {
            elements: members.ones().map(|i| i as u32).collect(),
            members,
            generators: Vec::new(),
        }
    }

    /// |N|.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub(crate) fn indices(&self) -> &[u32] {
        &self.elements
    }

    pub(crate) fn contains_index(&self, idx: u32) -> bool {
        self.members.contains(idx as usize)
    }

    pub fn contains(&self, module: &ModulePresentation, x: &Element) -> bool {
        self.contains_index(module.index_of(x))
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Elements in lexicographic order.
    pub fn elements(&self, module: &ModulePresentation) -> Vec<Element> {
        self.elements.iter().map(|&i| module.element_at(i)).collect()
    }

    /// The greedy generating tuple as ring-module generators.
    pub fn generators(&self, module: &ModulePresentation) -> Vec<Element> {
        self.generators.iter().map(|&i| module.element_at(i)).collect()
    }

    /// `0` for the zero submodule, otherwise `<g1,g2,...>`.
    pub fn label(&self, module: &ModulePresentation) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|&g| module.element_at(g).to_string())
            .collect();
        format!("<{}>", gens.join(","))
    }
}

/// Growing closure of a set of elements under addition and the action
/// matrices.
pub(crate) struct Closure<'a> {
    module: &'a ModulePresentation,
    members: FixedBitSet,
    elements: Vec<u32>,
}

impl<'a> Closure<'a> {
    pub(crate) fn zero(module: &'a ModulePresentation) -> Self {
        let mut members = FixedBitSet::with_capacity(module.size() as usize);
        members.insert(0);
        Closure {
            module,
            members,
            elements: vec![0],
        }
    }

    pub(crate) fn contains(&self, idx: u32) -> bool {
        self.members.contains(idx as usize)
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    /// Replace the current submodule S by the submodule generated by S and g.
    pub(crate) fn absorb(&mut self, g: u32) {
        let m = self.module;
        let mut pending = vec![g];
        while let Some(h) = pending.pop() {
            if self.contains(h) {
                continue;
            }
            // S + Zh is the union of the cosets S + c·h up to the first c
            // with c·h ∈ S.
            let base = self.elements.clone();
            let mut shift = h;
            while !self.contains(shift) {
                for &s in &base {
                    let v = m.add(s, shift);
                    self.members.insert(v as usize);
                    self.elements.push(v);
                }
                shift = m.add(shift, h);
            }
            for r in 0..m.actions().len() {
                pending.push(m.act(r, h));
            }
        }
    }

    /// Additive-only closure: S + Zg, no actions applied.
    pub(crate) fn absorb_additive(&mut self, g: u32) {
        let m = self.module;
        let base = self.elements.clone();
        let mut shift = g;
        while !self.contains(shift) {
            for &s in &base {
                let v = m.add(s, shift);
                self.members.insert(v as usize);
                self.elements.push(v);
            }
            shift = m.add(shift, g);
        }
    }

    fn into_members(self) -> FixedBitSet {
        self.members
    }
}

/// Greedy generating tuple: candidates by decreasing additive order (ties by
/// index), keeping those that enlarge the span. With `ring_span` the span is
/// the submodule generated; otherwise the additive subgroup.
pub(crate) fn greedy_generators(
    module: &ModulePresentation,
    elements: &[u32],
    ring_span: bool,
) -> Vec<u32> {
    let mut candidates: Vec<(u64, u32)> = elements
        .iter()
        .map(|&e| (module.additive_order(e), e))
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut span = Closure::zero(module);
    let mut gens = Vec::new();
    for (_, e) in candidates {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(e) {
            if ring_span {
                span.absorb(e);
            } else {
                span.absorb_additive(e);
            }
            gens.push(e);
        }
    }
    gens
}

#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    module: ModulePresentation,
    nodes: Vec<Submodule>,
    /// `leq[i]` holds every j with node i ⊆ node j.
    leq: Vec<FixedBitSet>,
}

impl SubmoduleLattice {
    /// Enumerate every submodule: seed with the cyclic submodules R·x, then
    /// close under sums. After processing the cyclic seeds C_1..C_k in turn,
    /// the node set holds every sum of a subset of them, and every submodule
    /// is the sum of the cyclic submodules of its elements.
    pub fn enumerate(module: &ModulePresentation, caps: &Caps) -> Result<Self> {
        module.ensure_within(caps)?;
        let size = module.size() as u32;

        let mut seen_cyclic: HashSet<FixedBitSet> = HashSet::new();
        let mut seeds: Vec<u32> = Vec::new();
        for x in 1..size {
            let mut c = Closure::zero(module);
            c.absorb(x);
            if seen_cyclic.insert(c.into_members()) {
                seeds.push(x);
            }
        }

        let zero = Closure::zero(module).into_members();
        let mut seen: HashSet<FixedBitSet> = HashSet::from([zero.clone()]);
        let mut found: Vec<FixedBitSet> = vec![zero];
        for &x in &seeds {
            let snapshot = found.len();
            for i in 0..snapshot {
                if found[i].contains(x as usize) {
                    continue;
                }
                let mut c = Closure {
                    module,
                    elements: found[i].ones().map(|v| v as u32).collect(),
                    members: found[i].clone(),
                };
                c.absorb(x);
                let members = c.into_members();
                if seen.insert(members.clone()) {
                    found.push(members);
                    if found.len() > caps.max_lattice {
                        return Err(Error::cap("lattice size", found.len() as u64, caps.max_lattice as u64));
                    }
                }
            }
        }

        let mut nodes: Vec<Submodule> = found.into_iter().map(Submodule::from_members).collect();
        nodes.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        for node in nodes.iter_mut() {
            node.generators = greedy_generators(module, &node.elements, true);
        }
        Ok(Self::from_nodes(module.clone(), nodes))
    }

    fn from_nodes(module: ModulePresentation, nodes: Vec<Submodule>) -> Self {
        let n = nodes.len();
        let mut leq = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in i..n {
                if nodes[j].order().is_multiple_of(nodes[i].order()) && nodes[i].is_subset(&nodes[j]) {
                    leq[i].insert(j);
                }
            }
        }
        SubmoduleLattice { module, nodes, leq }
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn nodes(&self) -> &[Submodule] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Submodule {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of the zero submodule.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of M itself.
    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Indices of the proper submodules, in canonical order. Vertex `v` of
    /// the graph is node `proper_indices()[v]`, which is node `v`.
    pub fn proper_indices(&self) -> std::ops::Range<usize> {
        0..self.top()
    }

    /// t: the number of proper submodules.
    pub fn proper_count(&self) -> usize {
        self.top()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i].contains(j)
    }

    pub fn find(&self, members: &[u32]) -> Option<usize> {
        self.nodes.iter().position(|n| n.elements == members)
    }

    /// Proper nodes with nothing strictly between them and M.
    pub fn maximal_submodules(&self) -> Vec<usize> {
        self.proper_indices()
            .filter(|&i| !self.proper_indices().any(|j| j != i && self.leq(i, j)))
            .collect()
    }

    /// Nonzero nodes with nothing strictly between them and 0.
    pub fn minimal_nonzero(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| !(1..self.len()).any(|j| j != i && self.leq(j, i)))
            .collect()
    }

    pub fn is_uniserial(&self) -> bool {
        (0..self.len()).all(|i| (i..self.len()).all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    /// Length of the longest chain 0 = N_0 ⊂ ... ⊂ N_r = M.
    pub fn longest_chain(&self) -> usize {
        // Nodes are sorted by order, so every predecessor of j precedes it.
        let mut best = vec![0usize; self.len()];
        for j in 1..self.len() {
            best[j] = (0..j)
                .filter(|&i| self.leq(i, j))
                .map(|i| best[i] + 1)
                .max()
                .unwrap_or(0);
        }
        best[self.top()]
    }

    /// The socle as a lattice node, with a check of whether it lies in every
    /// maximal submodule.
    pub fn socle_node(&self) -> Result<SocleNode> {
        let socle = self.module.socle_indices()?;
        let index = self
            .find(&socle)
            .ok_or_else(|| Error::Internal("socle is not a lattice node".into()))?;
        let is_whole_module = index == self.top();
        let outside: Vec<usize> = if is_whole_module {
            Vec::new()
        } else {
            self.maximal_submodules()
                .into_iter()
                .filter(|&m| !self.leq(index, m))
                .collect()
        };
        Ok(SocleNode {
            index,
            is_whole_module,
            maximals_not_containing: outside,
        })
    }

    /// The join of a set of nodes.
    pub fn join(&self, nodes: &[usize]) -> usize {
        let mut c = Closure::zero(&self.module);
        for &i in nodes {
            for &g in &self.nodes[i].generators {
                c.absorb(g);
            }
        }
        let mut elements = c.elements;
        elements.sort_unstable();
        self.find(&elements).expect("a join of nodes is a node")
    }

    /// Closure check for a node: contains 0, closed under addition, negation
    /// and every action.
    pub fn check_node(&self, i: usize) -> bool {
        let m = &self.module;
        let n = &self.nodes[i];
        n.contains_index(0)
            && n.elements.iter().all(|&a| {
                n.contains_index(m.neg(a))
                    && (0..m.actions().len()).all(|r| n.contains_index(m.act(r, a)))
                    && n.elements.iter().all(|&b| n.contains_index(m.add(a, b)))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleNode {
    pub index: usize,
    /// The socle is M itself; it is then not a vertex of the graph.
    pub is_whole_module: bool,
    /// Maximal submodules that do not contain the socle.
    pub maximals_not_containing: Vec<usize>,
}

impl fmt::Display for SubmoduleLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(f, "{i}: {} (order {})", n.label(&self.module), n.order())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::KxyPreset;

    fn lattice(m: &ModulePresentation) -> SubmoduleLattice {
        SubmoduleLattice::enumerate(m, &Caps::default()).unwrap()
    }

    fn el(v: &[u64]) -> Element {
        Element(v.to_vec())
    }

    #[test]
    fn counts_on_small_modules() {
        let z4z2 = ModulePresentation::zmod(2, 2, &[2, 1]).unwrap();
        assert_eq!(lattice(&z4z2).len(), 8);
        assert_eq!(lattice(&z4z2).proper_count(), 7);
        let f22 = ModulePresentation::vector_space(2, 2).unwrap();
        assert_eq!(lattice(&f22).len(), 5);
        for p in [2, 3, 5] {
            let l = lattice(&ModulePresentation::zmod(p, 2, &[2]).unwrap());
            assert_eq!(l.len(), 3);
            let expected: Vec<Element> = (0..p).map(|c| el(&[c * p])).collect();
            assert_eq!(l.node(1).elements(l.module()), expected);
        }
    }

    #[test]
    fn bottom_and_top() {
        let l = lattice(&ModulePresentation::zmod(2, 3, &[3, 1]).unwrap());
        assert!(l.node(l.bottom()).is_zero());
        assert_eq!(l.node(l.top()).order(), 16);
        for i in 0..l.len() {
            assert!(l.leq(l.bottom(), i));
            assert!(l.leq(i, l.top()));
            assert!(l.check_node(i));
        }
    }

    #[test]
    fn maximal_submodules() {
        let z8 = lattice(&ModulePresentation::zmod(2, 3, &[3]).unwrap());
        let max = z8.maximal_submodules();
        assert_eq!(max.len(), 1);
        assert_eq!(z8.node(max[0]).generators(z8.module()), vec![el(&[2])]);

        let f22 = lattice(&ModulePresentation::vector_space(2, 2).unwrap());
        assert_eq!(f22.maximal_submodules().len(), 3);

        let rx = lattice(&ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap());
        let max = rx.maximal_submodules();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0], rx.socle_node().unwrap().index);
    }

    #[test]
    fn uniseriality() {
        for n in 1..=4 {
            assert!(lattice(&ModulePresentation::zmod(3, 4, &[n]).unwrap()).is_uniserial());
        }
        assert!(!lattice(&ModulePresentation::vector_space(2, 2).unwrap()).is_uniserial());
        assert!(!lattice(&ModulePresentation::zmod(2, 2, &[2, 1]).unwrap()).is_uniserial());
        assert!(lattice(&ModulePresentation::kxy_preset(2, KxyPreset::QuotY).unwrap()).is_uniserial());
    }

    #[test]
    fn chain_lengths_match_composition_length() {
        let cases = [
            (ModulePresentation::zmod(2, 3, &[3]).unwrap(), 3),
            (ModulePresentation::vector_space(2, 2).unwrap(), 2),
            (ModulePresentation::product_semisimple(2, 2, 2).unwrap(), 4),
            (ModulePresentation::kxy_preset(3, KxyPreset::Regular).unwrap(), 3),
        ];
        for (m, expected) in cases {
            let l = lattice(&m);
            assert_eq!(l.longest_chain(), expected);
            assert_eq!(m.composition_length(), expected);
        }
    }

    #[test]
    fn socle_nodes() {
        let z4 = lattice(&ModulePresentation::zmod(2, 2, &[2]).unwrap());
        let s = z4.socle_node().unwrap();
        assert_eq!(z4.node(s.index).generators(z4.module()), vec![el(&[2])]);
        assert!(s.maximals_not_containing.is_empty());

        let z4z2 = lattice(&ModulePresentation::zmod(2, 2, &[2, 1]).unwrap());
        let s = z4z2.socle_node().unwrap();
        assert_eq!(
            z4z2.node(s.index).elements(z4z2.module()),
            vec![el(&[0, 0]), el(&[0, 1]), el(&[2, 0]), el(&[2, 1])]
        );
        // <(1,0)> ≅ Z/4 is maximal and misses (0,1).
        assert_eq!(s.maximals_not_containing.len(), 2);

        let f22 = lattice(&ModulePresentation::vector_space(2, 2).unwrap());
        let s = f22.socle_node().unwrap();
        assert!(s.is_whole_module);
        assert_eq!(s.index, f22.top());

        let prod = lattice(&ModulePresentation::product_semisimple(2, 1, 1).unwrap());
        assert!(matches!(prod.socle_node(), Err(Error::LocalityRequired(_))));
    }

    #[test]
    fn socle_is_join_of_simples() {
        let l = lattice(&ModulePresentation::zmod(2, 3, &[3, 2, 1]).unwrap());
        let simples = l.minimal_nonzero();
        assert_eq!(l.join(&simples), l.socle_node().unwrap().index);
    }

    #[test]
    fn cap_errors() {
        let big = ModulePresentation::vector_space(2, 6).unwrap();
        let caps = Caps {
            max_lattice: 100,
            ..Caps::default()
        };
        assert!(matches!(
            SubmoduleLattice::enumerate(&big, &caps),
            Err(Error::CapExceeded { what: "lattice size", .. })
        ));
        let caps = Caps {
            max_module_order: 32,
            ..Caps::default()
        };
        assert!(matches!(
            SubmoduleLattice::enumerate(&big, &caps),
            Err(Error::CapExceeded { what: "module order", value: 64, .. })
        ));
    }

    #[test]
    fn labels_use_generators() {
        let l = lattice(&ModulePresentation::zmod(2, 2, &[2, 1]).unwrap());
        assert_eq!(l.node(0).label(l.module()), "0");
        // Greedy takes elements of largest order first: (1,0), then (1,1).
        assert_eq!(l.node(l.top()).label(l.module()), "<(1,0),(1,1)>");
    }
}
