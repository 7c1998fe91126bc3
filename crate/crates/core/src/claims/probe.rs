//! Whether the socle can be recognized from the graph alone.

use serde::Serialize;

use crate::error::Result;
use crate::graph::HomGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleProbe {
    pub socle_vertex: usize,
    /// The socle is adjacent to every maximal submodule other than itself.
    pub adjacent_to_all_maximals: bool,
    /// Nonzero vertices adjacent to every maximal submodule other than
    /// themselves.
    pub candidates: Vec<usize>,
    /// `candidates` is exactly the socle.
    pub socle_unique: bool,
    /// Vertex 0 has strictly larger degree than every other vertex.
    pub zero_unique_max_degree: bool,
}

/// `Ok(None)` when the probe does not apply: length below 2 or socle equal
/// to M. Non-local rings give `LocalityRequired`.
pub fn step4_socle_probe(g: &HomGraph) -> Result<Option<SocleProbe>> {
    let lattice = g.lattice();
    if g.module().composition_length() < 2 {
        return Ok(None);
    }
    let socle = lattice.socle_node()?;
    if socle.is_whole_module {
        return Ok(None);
    }
    let graph = g.graph();
    let maximals = lattice.maximal_submodules();
    let sees_all_maximals =
        |v: usize| maximals.iter().all(|&m| m == v || graph.has_edge(v, m));
    let candidates: Vec<usize> = (1..g.vertex_count()).filter(|&v| sees_all_maximals(v)).collect();
    let d0 = graph.degree(0);
    Ok(Some(SocleProbe {
        socle_vertex: socle.index,
        adjacent_to_all_maximals: sees_all_maximals(socle.index),
        socle_unique: candidates == [socle.index],
        zero_unique_max_degree: (1..g.vertex_count()).all(|v| graph.degree(v) < d0),
        candidates,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::error::Error;
    use crate::presentation::ModulePresentation;

    fn probe(m: ModulePresentation) -> Result<Option<SocleProbe>> {
        step4_socle_probe(&HomGraph::build(&m, &Caps::default()).unwrap())
    }

    #[test]
    fn z4() {
        let r = probe(ModulePresentation::zmod(2, 2, &[2]).unwrap()).unwrap().unwrap();
        assert!(r.adjacent_to_all_maximals);
        assert!(r.socle_unique);
        assert!(!r.zero_unique_max_degree);
    }

    #[test]
    fn z4_z2_and_z8() {
        let r = probe(ModulePresentation::zmod(2, 2, &[2, 1]).unwrap()).unwrap().unwrap();
        assert!(r.adjacent_to_all_maximals);
        let r = probe(ModulePresentation::zmod(2, 3, &[3]).unwrap()).unwrap().unwrap();
        assert!(!r.zero_unique_max_degree);
    }

    #[test]
    fn not_applicable() {
        assert_eq!(probe(ModulePresentation::vector_space(2, 2).unwrap()).unwrap(), None);
        assert_eq!(probe(ModulePresentation::zmod(2, 2, &[1]).unwrap()).unwrap(), None);
        assert!(matches!(
            probe(ModulePresentation::product_semisimple(2, 1, 1).unwrap()),
            Err(Error::LocalityRequired(_))
        ));
    }
}
