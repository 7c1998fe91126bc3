//! Chordality by lexicographic breadth-first search.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordalReport {
    pub chordal: bool,
    /// Reverse LexBFS order; a perfect elimination ordering when `chordal`.
    pub elimination_order: Vec<usize>,
    /// An induced cycle of length at least 4, in cyclic order, when not
    /// chordal.
    pub hole: Option<Vec<usize>>,
}

/// LexBFS visiting order, by partition refinement. Ties go to the smallest
/// vertex, so the order is deterministic.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut classes: VecDeque<Vec<usize>> = VecDeque::new();
    if n > 0 {
        classes.push_back((0..n).collect());
    }
    let mut order = Vec::with_capacity(n);
    while let Some(mut first) = classes.pop_front() {
        let v = first.remove(0);
        if !first.is_empty() {
            classes.push_front(first);
        }
        order.push(v);
        let nbrs = g.neighbor_set(v);
        let mut refined = VecDeque::with_capacity(classes.len() + 1);
        for class in classes {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                class.into_iter().partition(|&u| nbrs.contains(u));
            if !inside.is_empty() {
                refined.push_back(inside);
            }
            if !outside.is_empty() {
                refined.push_back(outside);
            }
        }
        classes = refined;
    }
    order
}

pub fn is_chordal(g: &Graph) -> ChordalReport {
    let order = lex_bfs(g);
    let n = order.len();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // In visiting order, every vertex's earlier neighbors minus the latest
    // of them must be adjacent to that latest one.
    let mut chordal = true;
    'check: for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&u| position[u] < position[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| position[u]) {
            for &u in &earlier {
                if u != parent && !g.has_edge(u, parent) {
                    chordal = false;
                    break 'check;
                }
            }
        }
    }
    let elimination_order = order.into_iter().rev().collect();
    let hole = if chordal { None } else { find_hole(g) };
    ChordalReport {
        chordal,
        elimination_order,
        hole,
    }
}

/// Search for an induced cycle of length ≥ 4: for a vertex v and two
/// non-adjacent neighbors u, w, a shortest u–w path avoiding the rest of
/// N[v] closes an induced cycle through v. Every hole arises this way.
fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (a, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[a + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut blocked = g.neighbor_set(v).clone();
                blocked.insert(v);
                blocked.set(u, false);
                blocked.set(w, false);
                if let Some(path) = shortest_path(g, u, w, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &FixedBitSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if parent[y] == usize::MAX && !blocked.contains(y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
