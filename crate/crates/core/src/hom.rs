//! Hom groups between finite modules.
//!
//! [`hom_structure`] solves the R-linearity congruences by Smith normal form.
//! [`hom_oracle`] enumerates maps on a generating tuple and never touches the
//! SNF code, so the two can be checked against each other.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::{greedy_generators, Submodule, SubmoduleLattice};
use crate::presentation::{gcd, log_p, ModulePresentation, ResidueMatrix};
use crate::snf::{smith_normal_form, IntMatrix};

/// Invariant factors of a Hom group, ascending along the divisibility chain.
/// Empty means the zero group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HomStructure {
    pub invariant_factors: Vec<u64>,
}

impl HomStructure {
    fn from_factors(mut factors: Vec<u64>) -> Self {
        factors.retain(|&f| f > 1);
        factors.sort_unstable();
        HomStructure {
            invariant_factors: factors,
        }
    }

    pub fn zero() -> Self {
        HomStructure {
            invariant_factors: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// |Hom|, or `None` if it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        self.invariant_factors
            .iter()
            .try_fold(1u128, |acc, &f| acc.checked_mul(f as u128))
    }
}

impl fmt::Display for HomStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

fn coords_column(m: &ModulePresentation, gens: &[u32]) -> IntMatrix {
    let cols: Vec<Vec<u64>> = gens.iter().map(|&g| m.decode(g)).collect();
    (0..m.rank())
        .map(|i| cols.iter().map(|c| c[i] as i128).collect())
        .collect()
}

fn reduce_vector(m: &ModulePresentation, v: &[i128]) -> Vec<u64> {
    v.iter()
        .zip(m.orders())
        .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
        .collect()
}

fn induced_actions(
    parent: &ModulePresentation,
    reps: &[u32],
    moduli: &[u64],
    coords_of: impl Fn(u32) -> Result<Vec<u64>>,
) -> Result<Vec<ResidueMatrix>> {
    let n = reps.len();
    let mut out = Vec::with_capacity(parent.actions().len());
    for r in 0..parent.actions().len() {
        let mut matrix = vec![vec![0u64; n]; n];
        for (col, &rep) in reps.iter().enumerate() {
            let image = coords_of(parent.act(r, rep))?;
            for row in 0..n {
                matrix[row][col] = image[row] % moduli[row];
            }
        }
        out.push(matrix);
    }
    Ok(out)
}

/// N as a module in its own right, with cyclic generators found by Smith
/// normal form of the relation lattice of an additive generating tuple.
pub fn present_submodule(m: &ModulePresentation, n: &Submodule) -> Result<ModulePresentation> {
    if n.is_zero() {
        return Ok(ModulePresentation::zero(*m.ring()));
    }
    let gens = greedy_generators(m, n.indices(), false);
    let r = m.rank();
    let k = gens.len();

    // Kernel of Z^k -> M: c with G c ∈ D Z^r. Read it off the columns of
    // the right transform of [G | D] beyond its rank (which is r).
    let g = coords_column(m, &gens);
    let stacked: IntMatrix = (0..r)
        .map(|i| {
            let mut row = g[i].clone();
            row.extend((0..r).map(|j| if i == j { m.orders()[i] as i128 } else { 0 }));
            row
        })
        .collect();
    let snf = smith_normal_form(&stacked)?;
    if snf.rank() != r {
        return Err(internal("relation matrix of a submodule lost rank"));
    }
    let relations: IntMatrix = (0..k)
        .map(|i| snf.right[i][r..r + k].to_vec())
        .collect();

    let rel_snf = smith_normal_form(&relations)?;
    let mut orders = Vec::new();
    let mut reps = Vec::new();
    for (i, &s) in rel_snf.diagonal.iter().enumerate() {
        if s == 0 {
            return Err(internal("submodule presentation has an infinite factor"));
        }
        if s == 1 {
            continue;
        }
        let combo: Vec<i128> = (0..r)
            .map(|row| (0..k).map(|c| g[row][c] * rel_snf.left_inverse[c][i]).sum())
            .collect();
        orders.push(s as u64);
        reps.push(m.encode(&reduce_vector(m, &combo)));
    }
    let size: u64 = orders.iter().product();
    if size != n.order() as u64 {
        return Err(internal(format!(
            "submodule presentation has {size} elements, submodule has {}",
            n.order()
        )));
    }

    let mut coords: HashMap<u32, Vec<u64>> = HashMap::with_capacity(n.order());
    let mut tuple = vec![0u64; orders.len()];
    loop {
        let mut v = 0u32;
        for (c, &rep) in tuple.iter().zip(&reps) {
            v = m.add(v, m.scale(rep, *c));
        }
        if coords.insert(v, tuple.clone()).is_some() {
            return Err(internal("submodule generators are not independent"));
        }
        if !advance(&mut tuple, &orders) {
            break;
        }
    }
    let actions = induced_actions(m, &reps, &orders, |x| {
        coords
            .get(&x)
            .cloned()
            .ok_or_else(|| internal("submodule is not closed under the ring action"))
    })?;
    ModulePresentation::new(*m.ring(), orders, actions)
        .map_err(|e| internal(format!("induced submodule presentation invalid: {e}")))
}

/// M/N with the coordinate map from M.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    pub module: ModulePresentation,
    left: IntMatrix,
    kept: Vec<usize>,
}

impl QuotientPresentation {
    /// Coordinates in M/N of an element of M.
    pub fn project(&self, x: &[u64]) -> Vec<u64> {
        self.kept
            .iter()
            .zip(self.module.orders())
            .map(|(&i, &s)| {
                let y: i128 = self.left[i].iter().zip(x).map(|(&l, &c)| l * c as i128).sum();
                y.rem_euclid(s as i128) as u64
            })
            .collect()
    }
}

pub fn present_quotient(m: &ModulePresentation, n: &Submodule) -> Result<ModulePresentation> {
    Ok(quotient_with_map(m, n)?.module)
}

/// M/N = Z^r / (D Z^r + G Z^k); the left transform of the Smith form of
/// [D | G] gives both the cyclic decomposition and the projection.
pub fn quotient_with_map(m: &ModulePresentation, n: &Submodule) -> Result<QuotientPresentation> {
    let r = m.rank();
    let gens = greedy_generators(m, n.indices(), false);
    let g = coords_column(m, &gens);
    let stacked: IntMatrix = (0..r)
        .map(|i| {
            let mut row: Vec<i128> = (0..r)
                .map(|j| if i == j { m.orders()[i] as i128 } else { 0 })
                .collect();
            row.extend(g[i].iter().copied());
            row
        })
        .collect();
    let snf = smith_normal_form(&stacked)?;
    let mut kept = Vec::new();
    let mut orders = Vec::new();
    let mut reps = Vec::new();
    for (i, &s) in snf.diagonal.iter().enumerate() {
        if s == 0 {
            return Err(internal("quotient presentation has an infinite factor"));
        }
        if s > 1 {
            kept.push(i);
            orders.push(s as u64);
            let rep: Vec<i128> = (0..r).map(|row| snf.left_inverse[row][i]).collect();
            reps.push(m.encode(&reduce_vector(m, &rep)));
        }
    }
    let size: u64 = orders.iter().product();
    if size * n.order() as u64 != m.size() {
        return Err(internal(format!(
            "quotient presentation has {size} elements, expected {}",
            m.size() / n.order() as u64
        )));
    }
    let left = snf.left;
    let project = |x: u32| -> Vec<u64> {
        let v = m.decode(x);
        kept.iter()
            .zip(&orders)
            .map(|(&i, &s)| {
                let y: i128 = left[i].iter().zip(&v).map(|(&l, &c)| l * c as i128).sum();
                y.rem_euclid(s as i128) as u64
            })
            .collect()
    };
    let actions = induced_actions(m, &reps, &orders, |x| Ok(project(x)))?;
    let module = ModulePresentation::new(*m.ring(), orders, actions)
        .map_err(|e| internal(format!("induced quotient presentation invalid: {e}")))?;
    Ok(QuotientPresentation { module, left, kept })
}

/// Increment a mixed-radix counter; false once it wraps to zero.
fn advance(tuple: &mut [u64], radix: &[u64]) -> bool {
    for i in (0..tuple.len()).rev() {
        tuple[i] += 1;
        if tuple[i] < radix[i] {
            return true;
        }
        tuple[i] = 0;
    }
    false
}

/// Hom_R(a, b), solved structurally.
///
/// An additive map ⊕Z/d_i → ⊕Z/e_j is a matrix h with
/// h_ji ∈ (e_j / gcd(d_i, e_j))·Z/e_j, so h_ji = (e_j/g_ji)·t_ji with t_ji
/// free in Z/g_ji. Commuting with each action pair (P, Q) is the congruence
/// system h P ≡ Q h, linear in t. The solution group is K / diag(g) where K
/// is the integer kernel lattice of that system.
pub fn hom_structure(a: &ModulePresentation, b: &ModulePresentation) -> Result<HomStructure> {
    a.ring().ensure_same(b.ring())?;
    if a.is_zero() || b.is_zero() {
        return Ok(HomStructure::zero());
    }
    let (da, eb) = (a.orders(), b.orders());
    let (na, nb) = (da.len(), eb.len());

    let mut param = vec![vec![None; na]; nb];
    let mut moduli: Vec<i128> = Vec::new();
    let mut scale: Vec<i128> = Vec::new();
    for j in 0..nb {
        for i in 0..na {
            let g = gcd(da[i], eb[j]);
            if g > 1 {
                param[j][i] = Some(moduli.len());
                moduli.push(g as i128);
                scale.push((eb[j] / g) as i128);
            }
        }
    }
    let t = moduli.len();
    if t == 0 {
        return Ok(HomStructure::zero());
    }

    let mut rows: Vec<(Vec<i128>, i128)> = Vec::new();
    for (p_act, q_act) in a.actions().iter().zip(b.actions()) {
        for i in 0..na {
            for j in 0..nb {
                let e = eb[j] as i128;
                let mut row = vec![0i128; t];
                // (h P)_{ji} = Σ_k h_jk P_ki
                for k in 0..na {
                    if let Some(idx) = param[j][k] {
                        row[idx] += p_act[k][i] as i128 * scale[idx];
                    }
                }
                // (Q h)_{ji} = Σ_l Q_jl h_li
                for l in 0..nb {
                    if let Some(idx) = param[l][i] {
                        row[idx] -= q_act[j][l] as i128 * scale[idx];
                    }
                }
                for v in row.iter_mut() {
                    *v = v.rem_euclid(e);
                }
                if row.iter().any(|&v| v != 0) {
                    rows.push((row, e));
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(HomStructure::from_factors(
            moduli.iter().map(|&g| g as u64).collect(),
        ));
    }

    // K = {t : C t ∈ E Z^w}: project the integer kernel of [C | E] onto
    // its first t coordinates. [C | E] has full row rank w.
    let w = rows.len();
    let system: IntMatrix = rows
        .iter()
        .enumerate()
        .map(|(r, (row, e))| {
            let mut full = row.clone();
            full.extend((0..w).map(|c| if c == r { *e } else { 0 }));
            full
        })
        .collect();
    let snf = smith_normal_form(&system)?;
    if snf.rank() != w {
        return Err(internal("Hom congruence system lost rank"));
    }
    let kernel: IntMatrix = (0..t).map(|i| snf.right[i][w..w + t].to_vec()).collect();

    // K / diag(g): write diag(g) in a basis of K. With L K R = S,
    // K^{-1} diag(g) = R S^{-1} L diag(g), and R does not change the Smith
    // form.
    let ksnf = smith_normal_form(&kernel)?;
    let mut coords = vec![vec![0i128; t]; t];
    for i in 0..t {
        let s = ksnf.diagonal[i];
        if s == 0 {
            return Err(internal("Hom kernel lattice is degenerate"));
        }
        for j in 0..t {
            let v = ksnf.left[i][j]
                .checked_mul(moduli[j])
                .ok_or(Error::Overflow("Hom quotient"))?;
            if v % s != 0 {
                return Err(internal("diag(g) is not contained in the Hom kernel lattice"));
            }
            coords[i][j] = v / s;
        }
    }
    let quotient = smith_normal_form(&coords)?;
    let factors = quotient
        .diagonal
        .iter()
        .map(|&d| u64::try_from(d).map_err(|_| internal("Hom factor out of range")))
        .collect::<Result<Vec<u64>>>()?;
    Ok(HomStructure::from_factors(factors))
}

/// Hom_R(a, b) by enumeration: try every image tuple for a generating tuple
/// of `a`, keep those that extend to a well-defined R-linear map, and read
/// the invariant factors off the counts of maps killed by p^e.
pub fn hom_oracle(a: &ModulePresentation, b: &ModulePresentation, caps: &Caps) -> Result<HomStructure> {
    a.ring().ensure_same(b.ring())?;
    if a.size() > caps.max_oracle_order as u64 {
        return Err(Error::cap("oracle module order", a.size(), caps.max_oracle_order as u64));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(HomStructure::zero());
    }
    let p = a.ring().p();
    let all: Vec<u32> = (0..a.size() as u32).collect();
    let gens = greedy_generators(a, &all, true);

    // Additive generators of a: every word in the actions applied to each
    // ring generator. f(w·x_i) = w·f(x_i).
    struct WordGen {
        gen: usize,
        vector: u32,
        word: Vec<usize>,
    }
    let mut word_gens: Vec<WordGen> = Vec::new();
    for (gi, &x) in gens.iter().enumerate() {
        let mut seen = vec![x];
        let mut queue = vec![(x, Vec::new())];
        while let Some((v, word)) = queue.pop() {
            for r in 0..a.actions().len() {
                let next = a.act(r, v);
                if next != 0 && !seen.contains(&next) {
                    seen.push(next);
                    let mut w2: Vec<usize> = word.clone();
                    w2.push(r);
                    queue.push((next, w2));
                }
            }
            word_gens.push(WordGen {
                gen: gi,
                vector: v,
                word,
            });
        }
    }

    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| {
            let order = a.additive_order(x);
            (0..b.size() as u32)
                .filter(|&y| order.is_multiple_of(b.additive_order(y)))
                .collect()
        })
        .collect();
    let total = candidates
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .unwrap_or(u64::MAX);
    if total > caps.max_oracle_candidates {
        return Err(Error::cap("oracle candidates", total, caps.max_oracle_candidates));
    }

    let size_a = a.size() as usize;
    let add_table: Vec<Vec<u32>> = (0..size_a as u32)
        .map(|x| word_gens.iter().map(|w| a.add(x, w.vector)).collect())
        .collect();
    let act_table: Vec<Vec<u32>> = (0..size_a as u32)
        .map(|x| (0..a.actions().len()).map(|r| a.act(r, x)).collect())
        .collect();

    let max_exp = b.orders().iter().map(|&e| log_p(e, p)).max().unwrap_or(0) as usize;
    let mut histogram = vec![0u64; max_exp + 1];
    let mut choice = vec![0usize; gens.len()];
    let radix: Vec<u64> = candidates.iter().map(|c| c.len() as u64).collect();
    let mut f = vec![u32::MAX; size_a];
    let mut stack = Vec::with_capacity(size_a);
    loop {
        let images: Vec<u32> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        let values: Vec<u32> = word_gens
            .iter()
            .map(|w| w.word.iter().fold(images[w.gen], |y, &r| b.act(r, y)))
            .collect();

        f.iter_mut().for_each(|v| *v = u32::MAX);
        f[0] = 0;
        stack.clear();
        stack.push(0u32);
        let mut ok = true;
        'bfs: while let Some(x) = stack.pop() {
            let fx = f[x as usize];
            for (k, &next) in add_table[x as usize].iter().enumerate() {
                let val = b.add(fx, values[k]);
                let slot = &mut f[next as usize];
                if *slot == u32::MAX {
                    *slot = val;
                    stack.push(next);
                } else if *slot != val {
                    ok = false;
                    break 'bfs;
                }
            }
        }
        if ok {
            ok = (0..size_a).all(|x| {
                f[x] != u32::MAX
                    && act_table[x]
                        .iter()
                        .enumerate()
                        .all(|(r, &ax)| f[ax as usize] == b.act(r, f[x]))
            });
        }
        if ok {
            let exp = images
                .iter()
                .map(|&y| log_p(b.additive_order(y), p))
                .max()
                .unwrap_or(0) as usize;
            histogram[exp] += 1;
        }

        let mut tuple: Vec<u64> = choice.iter().map(|&c| c as u64).collect();
        if !advance(&mut tuple, &radix) {
            break;
        }
        for (c, t) in choice.iter_mut().zip(tuple) {
            *c = t as usize;
        }
    }

    // |Hom[p^e]| = number of maps killed by p^e; the count of cyclic
    // factors of order ≥ p^e is log_p(|Hom[p^e]| / |Hom[p^(e-1)]|).
    let mut at_least = Vec::new();
    let mut cumulative = histogram[0];
    if cumulative != 1 {
        return Err(internal("oracle found no unique zero map"));
    }
    for &count in &histogram[1..] {
        let next = cumulative + count;
        if !next.is_multiple_of(cumulative) || !crate::presentation::is_power_of(next / cumulative, p) {
            return Err(internal("oracle map counts do not form a p-group"));
        }
        at_least.push(log_p(next / cumulative, p) as usize);
        cumulative = next;
    }
    let mut factors = Vec::new();
    for e in 0..at_least.len() {
        let exactly = at_least[e] - at_least.get(e + 1).copied().unwrap_or(0);
        factors.extend(std::iter::repeat_n(p.pow(e as u32 + 1), exactly));
    }
    Ok(HomStructure::from_factors(factors))
}

/// Vertices `i`, `j` (lattice node indices of proper submodules) are
/// adjacent when Hom(N_i, M/N_j) or Hom(N_j, M/N_i) is nonzero.
pub fn adjacent(lattice: &SubmoduleLattice, i: usize, j: usize) -> Result<bool> {
    let m = lattice.module();
    let forward = hom_structure(
        &present_submodule(m, lattice.node(i))?,
        &present_quotient(m, lattice.node(j))?,
    )?;
    if !forward.is_zero() {
        return Ok(true);
    }
    let backward = hom_structure(
        &present_submodule(m, lattice.node(j))?,
        &present_quotient(m, lattice.node(i))?,
    )?;
    Ok(!backward.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::KxyPreset;

    fn lattice(m: &ModulePresentation) -> SubmoduleLattice {
        SubmoduleLattice::enumerate(m, &Caps::default()).unwrap()
    }

    fn node_with(l: &SubmoduleLattice, elems: &[&[u64]]) -> usize {
        let m = l.module();
        let mut idx: Vec<u32> = elems.iter().map(|e| m.encode(e)).collect();
        idx.sort_unstable();
        l.find(&idx).expect("node exists")
    }

    #[test]
    fn cyclic_submodule_of_z4_z2() {
        let m = ModulePresentation::zmod(2, 2, &[2, 1]).unwrap();
        let l = lattice(&m);
        let n = node_with(&l, &[&[0, 0], &[2, 1]]);
        assert_eq!(present_submodule(&m, l.node(n)).unwrap().orders(), &[2]);
        let q = present_quotient(&m, l.node(n)).unwrap();
        assert_eq!(q.orders(), &[4]);
    }

    #[test]
    fn socle_of_quotient_by_x() {
        let m = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        let l = lattice(&m);
        let s = present_submodule(&m, l.node(l.socle_node().unwrap().index)).unwrap();
        assert_eq!(s.orders(), &[2]);
        assert!(s.actions().iter().all(|a| a == &vec![vec![0]]));
    }

    #[test]
    fn zero_submodule_and_trivial_quotient() {
        let m = ModulePresentation::zmod(2, 3, &[3, 1]).unwrap();
        let l = lattice(&m);
        assert!(present_submodule(&m, l.node(0)).unwrap().is_zero());
        let q = present_quotient(&m, l.node(0)).unwrap();
        let mut orders = q.orders().to_vec();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 8]);
        assert!(present_quotient(&m, l.node(l.top())).unwrap().is_zero());
    }

    #[test]
    fn quotient_of_z8_by_4() {
        let m = ModulePresentation::zmod(2, 3, &[3]).unwrap();
        let l = lattice(&m);
        let n = node_with(&l, &[&[0], &[4]]);
        assert_eq!(present_quotient(&m, l.node(n)).unwrap().orders(), &[4]);
    }

    #[test]
    fn projection_kills_the_submodule_and_is_onto() {
        let m = ModulePresentation::kxy_preset(3, KxyPreset::Regular).unwrap();
        let l = lattice(&m);
        for i in 0..l.len() {
            let q = quotient_with_map(&m, l.node(i)).unwrap();
            let zero = vec![0u64; q.module.rank()];
            for x in l.node(i).elements(&m) {
                assert_eq!(q.project(&x.0), zero);
            }
            let mut images: Vec<Vec<u64>> = m.elements().map(|x| q.project(&x.0)).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len() as u64, q.module.size());
        }
    }

    #[test]
    fn hom_examples() {
        let z2 = ModulePresentation::zmod(2, 2, &[1]).unwrap();
        let z4 = ModulePresentation::zmod(2, 2, &[2]).unwrap();
        assert_eq!(hom_structure(&z2, &z4).unwrap().invariant_factors, vec![2]);
        assert_eq!(hom_structure(&z4, &z2).unwrap().invariant_factors, vec![2]);
        assert!(hom_structure(&ModulePresentation::zero(*z4.ring()), &z4).unwrap().is_zero());

        let rx = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        let ry = ModulePresentation::kxy_preset(2, KxyPreset::QuotY).unwrap();
        assert_eq!(hom_structure(&rx, &ry).unwrap().invariant_factors, vec![2]);

        let s1 = ModulePresentation::product_semisimple(2, 1, 0).unwrap();
        let s2 = ModulePresentation::product_semisimple(2, 0, 1).unwrap();
        assert!(hom_structure(&s1, &s2).unwrap().is_zero());
        assert_eq!(hom_structure(&s1, &s1).unwrap().invariant_factors, vec![2]);
    }

    #[test]
    fn oracle_examples() {
        let caps = Caps::default();
        let z2 = ModulePresentation::zmod(2, 2, &[1]).unwrap();
        let z4 = ModulePresentation::zmod(2, 2, &[2]).unwrap();
        let h = hom_oracle(&z2, &z2, &caps).unwrap();
        assert_eq!(h.invariant_factors, vec![2]);
        assert_eq!(h.order(), Some(2));
        assert_eq!(hom_oracle(&z4, &z2, &caps).unwrap().invariant_factors, vec![2]);
        assert_eq!(hom_oracle(&z4, &z4, &caps).unwrap().invariant_factors, vec![4]);

        let s1 = ModulePresentation::product_semisimple(2, 1, 0).unwrap();
        let s2 = ModulePresentation::product_semisimple(2, 0, 1).unwrap();
        assert!(hom_oracle(&s1, &s2, &caps).unwrap().is_zero());

        let rx = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        let ry = ModulePresentation::kxy_preset(2, KxyPreset::QuotY).unwrap();
        assert_eq!(hom_oracle(&rx, &ry, &caps).unwrap().invariant_factors, vec![2]);
    }

    #[test]
    fn ring_mismatch() {
        let a = ModulePresentation::zmod(2, 2, &[1]).unwrap();
        let b = ModulePresentation::zmod(2, 3, &[1]).unwrap();
        assert!(matches!(hom_structure(&a, &b), Err(Error::RingMismatch(..))));
        assert!(matches!(hom_oracle(&a, &b, &Caps::default()), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn oracle_cap() {
        let big = ModulePresentation::vector_space(2, 7).unwrap();
        assert!(matches!(
            hom_oracle(&big, &big, &Caps::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn adjacency_examples() {
        for p in [2, 3] {
            let m = ModulePresentation::zmod(p, 2, &[2]).unwrap();
            let l = lattice(&m);
            assert!(adjacent(&l, 0, 1).unwrap());
        }
        let f22 = ModulePresentation::vector_space(2, 2).unwrap();
        let l = lattice(&f22);
        assert!(adjacent(&l, 1, 2).unwrap());
        assert!(adjacent(&l, 2, 1).unwrap());

        let prod = ModulePresentation::product_semisimple(2, 1, 1).unwrap();
        let l = lattice(&prod);
        assert_eq!(l.proper_count(), 3);
        assert!(adjacent(&l, 1, 2).unwrap());
    }

    #[test]
    fn hom_of_sums_multiplies() {
        let caps = Caps::default();
        let rx = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        let k = ModulePresentation::kxy_preset(2, KxyPreset::Residue).unwrap();
        let sum = ModulePresentation::kxy(
            2,
            vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]],
            vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]],
        )
        .unwrap();
        for target in [&rx, &k, &sum] {
            let whole = hom_structure(&sum, target).unwrap().order().unwrap();
            let parts = hom_structure(&rx, target).unwrap().order().unwrap()
                * hom_structure(&k, target).unwrap().order().unwrap();
            assert_eq!(whole, parts);
            assert_eq!(hom_oracle(&sum, target, &caps).unwrap().order(), Some(whole));
        }
    }
}
