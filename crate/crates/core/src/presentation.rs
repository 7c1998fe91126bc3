//! Finite modules presented as ⊕ Z/d_j with ring-generator action matrices.
//!
//! Elements are canonical residue tuples. Internally every element is also
//! addressed by a mixed-radix index in `0..|M|`, with coordinate 0 most
//! significant, so that sorting indices sorts tuples lexicographically.

use std::fmt;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::fp;
use crate::ring::{RingKind, RingSpec};

/// Row-major matrix of residues. Entry `(i, j)` is read modulo `d_i`;
/// column `j` is the image of the `j`-th cyclic generator.
pub type ResidueMatrix = Vec<Vec<u64>>;

/// Hard ceiling on |M| independent of configured caps: indices are `u32`.
const INDEX_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<u64>);

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModulePresentation {
    ring: RingSpec,
    orders: Vec<u64>,
    actions: Vec<ResidueMatrix>,
    strides: Vec<u64>,
    size: u64,
}

/// Named modules over F_p[x,y]/(x,y)².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KxyPreset {
    /// The regular module R, basis (1, x, y).
    Regular,
    /// R/(x), basis (1, y).
    QuotX,
    /// R/(y), basis (1, x).
    QuotY,
    /// R/(x+y), basis (1, x) with y acting as -x.
    QuotXPlusY,
    /// The residue field k.
    Residue,
    /// k ⊕ k.
    ResidueSquared,
}

impl KxyPreset {
    pub const ALL: [KxyPreset; 6] = [
        KxyPreset::Residue,
        KxyPreset::QuotX,
        KxyPreset::QuotY,
        KxyPreset::QuotXPlusY,
        KxyPreset::ResidueSquared,
        KxyPreset::Regular,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            KxyPreset::Regular => "R",
            KxyPreset::QuotX => "R/(x)",
            KxyPreset::QuotY => "R/(y)",
            KxyPreset::QuotXPlusY => "R/(x+y)",
            KxyPreset::Residue => "k",
            KxyPreset::ResidueSquared => "k2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "R" | "regular" => KxyPreset::Regular,
            "R/(x)" | "quot_x" => KxyPreset::QuotX,
            "R/(y)" | "quot_y" => KxyPreset::QuotY,
            "R/(x+y)" | "quot_xy" => KxyPreset::QuotXPlusY,
            "k" => KxyPreset::Residue,
            "k2" => KxyPreset::ResidueSquared,
            _ => return None,
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            KxyPreset::Regular => 3,
            KxyPreset::QuotX | KxyPreset::QuotY | KxyPreset::QuotXPlusY => 2,
            KxyPreset::ResidueSquared => 2,
            KxyPreset::Residue => 1,
        }
    }

    /// The (X, Y) action matrices over F_p.
    pub fn matrices(&self, p: u64) -> (ResidueMatrix, ResidueMatrix) {
        let z2 = vec![vec![0, 0], vec![0, 0]];
        let shift2 = vec![vec![0, 0], vec![1, 0]];
        match self {
            KxyPreset::Regular => (
                vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]],
                vec![vec![0, 0, 0], vec![0, 0, 0], vec![1, 0, 0]],
            ),
            KxyPreset::QuotX => (z2, shift2),
            KxyPreset::QuotY => (shift2, z2),
            KxyPreset::QuotXPlusY => (shift2, vec![vec![0, 0], vec![p - 1, 0]]),
            KxyPreset::Residue => (vec![vec![0]], vec![vec![0]]),
            KxyPreset::ResidueSquared => (z2.clone(), z2),
        }
    }
}

impl ModulePresentation {
    /// Build and validate a presentation. `|M|` is not checked against the
    /// configured caps here; see [`ModulePresentation::ensure_within`].
    pub fn new(ring: RingSpec, orders: Vec<u64>, actions: Vec<ResidueMatrix>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPresentation(msg));
        let p = ring.p();
        let mut size: u64 = 1;
        for &d in &orders {
            if d < p || !is_power_of(d, p) {
                return bad(format!("cyclic order {d} is not a positive power of {p}"));
            }
            if d > ring.characteristic() {
                return bad(format!("cyclic order {d} exceeds the characteristic of {ring}"));
            }
            size = size.saturating_mul(d);
        }
        if size > INDEX_LIMIT {
            return bad(format!("|M| = {size} exceeds the hard limit {INDEX_LIMIT}"));
        }
        if actions.len() != ring.action_count() {
            return bad(format!(
                "{ring} needs {} action matrices, got {}",
                ring.action_count(),
                actions.len()
            ));
        }
        let n = orders.len();
        for (r, a) in actions.iter().enumerate() {
            if a.len() != n || a.iter().any(|row| row.len() != n) {
                return bad(format!("action matrix {r} is not {n}x{n}"));
            }
            for i in 0..n {
                for j in 0..n {
                    if a[i][j] >= orders[i] {
                        return bad(format!(
                            "action {r} entry ({i},{j}) = {} is not reduced mod {}",
                            a[i][j], orders[i]
                        ));
                    }
                    if !(orders[j] as u128 * a[i][j] as u128).is_multiple_of(orders[i] as u128) {
                        return bad(format!(
                            "action {r} entry ({i},{j}) does not respect the cyclic orders"
                        ));
                    }
                }
            }
        }
        let mut strides = vec![1u64; n];
        for j in (0..n.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * orders[j + 1];
        }
        let module = ModulePresentation {
            ring,
            orders,
            actions,
            strides,
            size,
        };
        module.check_axioms()?;
        Ok(module)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.rank();
        let basis: Vec<Vec<u64>> = (0..n)
            .map(|j| (0..n).map(|i| u64::from(i == j)).collect())
            .collect();
        let zero = vec![0u64; n];
        let compose = |a: usize, b: usize, v: &[u64]| self.act_coords(a, &self.act_coords(b, v));
        for v in &basis {
            for a in 0..self.actions.len() {
                for b in (a + 1)..self.actions.len() {
                    if compose(a, b, v) != compose(b, a, v) {
                        return Err(Error::InvalidPresentation(format!(
                            "action matrices {a} and {b} do not commute"
                        )));
                    }
                }
            }
            match self.ring.kind() {
                RingKind::LocalSquareZero => {
                    for (a, b) in [(0, 0), (1, 1), (0, 1)] {
                        if compose(a, b, v) != zero {
                            return Err(Error::InvalidPresentation(format!(
                                "relation {}{} = 0 fails",
                                self.ring.generator_names()[a],
                                self.ring.generator_names()[b]
                            )));
                        }
                    }
                }
                RingKind::ProductField => {
                    for a in 0..2 {
                        if compose(a, a, v) != self.act_coords(a, v) {
                            return Err(Error::InvalidPresentation(format!(
                                "selector e{} is not idempotent",
                                a + 1
                            )));
                        }
                    }
                    if compose(0, 1, v) != zero {
                        return Err(Error::InvalidPresentation("e1 e2 != 0".into()));
                    }
                    let sum = self.add_coords(&self.act_coords(0, v), &self.act_coords(1, v));
                    if &sum != v {
                        return Err(Error::InvalidPresentation("e1 + e2 != 1".into()));
                    }
                }
                RingKind::Zmod | RingKind::PrimeField => {}
            }
        }
        Ok(())
    }

    /// The zero module over `ring`.
    pub fn zero(ring: RingSpec) -> Self {
        let actions = vec![Vec::new(); ring.action_count()];
        ModulePresentation::new(ring, Vec::new(), actions).expect("zero module is valid")
    }

    /// ⊕ Z/p^{e_i} over Z/p^k.
    pub fn zmod(p: u64, k: u32, exponents: &[u32]) -> Result<Self> {
        let ring = RingSpec::zmod(p, k)?;
        for &e in exponents {
            if e == 0 || e > k {
                return Err(Error::InvalidPresentation(format!(
                    "exponent {e} outside 1..={k}"
                )));
            }
        }
        ModulePresentation::new(ring, exponents.iter().map(|&e| p.pow(e)).collect(), vec![])
    }

    /// F_p^dim.
    pub fn vector_space(p: u64, dim: usize) -> Result<Self> {
        ModulePresentation::new(RingSpec::prime_field(p)?, vec![p; dim], vec![])
    }

    /// S₁^{m1} ⊕ S₂^{m2} over F_p × F_p.
    pub fn product_semisimple(p: u64, m1: usize, m2: usize) -> Result<Self> {
        let n = m1 + m2;
        let e1 = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j && i < m1)).collect())
            .collect();
        let e2 = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j && i >= m1)).collect())
            .collect();
        ModulePresentation::new(RingSpec::product_field(p)?, vec![p; n], vec![e1, e2])
    }

    /// A module over F_p[x,y]/(x,y)² given by its X and Y matrices.
    pub fn kxy(p: u64, x: ResidueMatrix, y: ResidueMatrix) -> Result<Self> {
        let n = x.len();
        ModulePresentation::new(RingSpec::local_square_zero(p)?, vec![p; n], vec![x, y])
    }

    pub fn kxy_preset(p: u64, preset: KxyPreset) -> Result<Self> {
        let (x, y) = preset.matrices(p);
        ModulePresentation::kxy(p, x, y)
    }

    pub fn ensure_within(&self, caps: &Caps) -> Result<()> {
        if self.size > caps.max_module_order as u64 {
            return Err(Error::cap("module order", self.size, caps.max_module_order as u64));
        }
        Ok(())
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn actions(&self) -> &[ResidueMatrix] {
        &self.actions
    }

    /// |M|.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidPresentation(format!(
                "element has {} coordinates, module has {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(Element(
            coords.iter().zip(&self.orders).map(|(c, d)| c % d).collect(),
        ))
    }

    /// Apply ring generator `r` to `x`: the scalar p for Z/p^k, otherwise
    /// action matrix `r`.
    pub fn module_action(&self, r: usize, x: &Element) -> Result<Element> {
        let count = self.ring.generator_names().len();
        if r >= count {
            return Err(Error::InvalidGenerator { index: r, count });
        }
        let x = self.element(&x.0)?;
        Ok(Element(self.generator_coords(r, &x.0)))
    }

    fn generator_coords(&self, r: usize, v: &[u64]) -> Vec<u64> {
        match self.ring.kind() {
            RingKind::Zmod => self.scale_coords(v, self.ring.p()),
            _ => self.act_coords(r, v),
        }
    }

    pub(crate) fn act_coords(&self, r: usize, v: &[u64]) -> Vec<u64> {
        let a = &self.actions[r];
        (0..self.rank())
            .map(|i| {
                let acc: u128 = a[i]
                    .iter()
                    .zip(v)
                    .map(|(&m, &x)| m as u128 * x as u128)
                    .sum();
                (acc % self.orders[i] as u128) as u64
            })
            .collect()
    }

    pub(crate) fn add_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), d)| (x + y) % d)
            .collect()
    }

    pub(crate) fn scale_coords(&self, v: &[u64], c: u64) -> Vec<u64> {
        v.iter()
            .zip(&self.orders)
            .map(|(x, d)| ((*x as u128 * c as u128) % *d as u128) as u64)
            .collect()
    }

    pub(crate) fn encode(&self, coords: &[u64]) -> u32 {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(c, s)| c * s)
            .sum::<u64>() as u32
    }

    pub(crate) fn decode(&self, idx: u32) -> Vec<u64> {
        let mut rest = idx as u64;
        self.strides
            .iter()
            .zip(&self.orders)
            .map(|(s, d)| {
                let c = rest / s;
                rest %= s;
                debug_assert!(c < *d);
                c
            })
            .collect()
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        let mut out = 0u64;
        let (mut ra, mut rb) = (a as u64, b as u64);
        for (s, d) in self.strides.iter().zip(&self.orders) {
            let (ca, cb) = (ra / s, rb / s);
            ra %= s;
            rb %= s;
            out += ((ca + cb) % d) * s;
        }
        out as u32
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        let mut out = 0u64;
        let mut ra = a as u64;
        for (s, d) in self.strides.iter().zip(&self.orders) {
            let c = ra / s;
            ra %= s;
            out += ((d - c) % d) * s;
        }
        out as u32
    }

    pub(crate) fn act(&self, r: usize, a: u32) -> u32 {
        self.encode(&self.act_coords(r, &self.decode(a)))
    }

    pub(crate) fn scale(&self, a: u32, c: u64) -> u32 {
        self.encode(&self.scale_coords(&self.decode(a), c))
    }

    /// Additive order of the element with index `a`.
    pub(crate) fn additive_order(&self, a: u32) -> u64 {
        self.decode(a)
            .iter()
            .zip(&self.orders)
            .map(|(&c, &d)| d / gcd(c, d))
            .max()
            .unwrap_or(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size as u32).map(|i| Element(self.decode(i)))
    }

    pub(crate) fn index_of(&self, x: &Element) -> u32 {
        self.encode(&x.0)
    }

    pub(crate) fn element_at(&self, idx: u32) -> Element {
        Element(self.decode(idx))
    }

    /// Every cyclic factor of order p and every action zero on it.
    pub fn is_semisimple(&self) -> bool {
        let p = self.ring.p();
        match self.ring.kind() {
            RingKind::Zmod => self.orders.iter().all(|&d| d == p),
            RingKind::PrimeField | RingKind::ProductField => true,
            RingKind::LocalSquareZero => self
                .actions
                .iter()
                .all(|a| a.iter().flatten().all(|&v| v == 0)),
        }
    }

    /// Multiplicities of the simple modules in a semisimple module: one entry
    /// for local rings, `[m1, m2]` for F_p × F_p. `None` if not semisimple.
    pub fn simple_multiplicities(&self) -> Option<Vec<usize>> {
        if !self.is_semisimple() {
            return None;
        }
        let p = self.ring.p();
        Some(match self.ring.kind() {
            RingKind::ProductField => self.actions.iter().map(|e| fp::rank(e, p)).collect(),
            _ => vec![self.rank()],
        })
    }

    /// Elements killed by every generator of the maximal ideal.
    pub fn socle(&self) -> Result<Vec<Element>> {
        Ok(self
            .socle_indices()?
            .into_iter()
            .map(|i| self.element_at(i))
            .collect())
    }

    pub(crate) fn socle_indices(&self) -> Result<Vec<u32>> {
        let radical = self.ring.radical_generators()?;
        let zero = vec![0u64; self.rank()];
        Ok((0..self.size as u32)
            .filter(|&i| {
                let v = self.decode(i);
                radical.iter().all(|&r| self.generator_coords(r, &v) == zero)
            })
            .collect())
    }

    /// For each ring-generator monomial, whether it annihilates M.
    pub fn annihilator_profile(&self) -> AnnihilatorProfile {
        let names = self.ring.generator_names();
        let max_degree = match self.ring.kind() {
            RingKind::Zmod => self.ring.k(),
            RingKind::LocalSquareZero => 2,
            RingKind::ProductField => 1,
            RingKind::PrimeField => 0,
        };
        let n = self.rank();
        let zero = vec![0u64; n];
        let mut entries = Vec::new();
        for (g, name) in names.iter().enumerate() {
            for degree in 1..=max_degree {
                let kills = (0..n).all(|j| {
                    let mut v: Vec<u64> = (0..n).map(|i| u64::from(i == j)).collect();
                    for _ in 0..degree {
                        v = self.generator_coords(g, &v);
                    }
                    v == zero
                });
                entries.push(AnnihilatorEntry {
                    generator: name,
                    degree,
                    kills,
                });
            }
        }
        AnnihilatorProfile(entries)
    }

    /// Σ_j log_p d_j. Every composition factor has order p in the supported
    /// ring family.
    pub fn composition_length(&self) -> usize {
        let p = self.ring.p();
        self.orders.iter().map(|&d| log_p(d, p) as usize).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnihilatorEntry {
    pub generator: &'static str,
    pub degree: u32,
    pub kills: bool,
}

/// Canonically ordered by generator index, then degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnihilatorProfile(pub Vec<AnnihilatorEntry>);

impl fmt::Display for AnnihilatorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let mono = if e.degree == 1 {
                e.generator.to_string()
            } else {
                format!("{}^{}", e.generator, e.degree)
            };
            write!(f, "{mono}:{}", if e.kills { "kills" } else { "live" })?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn is_power_of(mut d: u64, p: u64) -> bool {
    while d > 1 && d.is_multiple_of(p) {
        d /= p;
    }
    d == 1
}

pub(crate) fn log_p(mut d: u64, p: u64) -> u32 {
    let mut e = 0;
    while d > 1 {
        d /= p;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[u64]) -> Element {
        Element(v.to_vec())
    }

    #[test]
    fn scalar_action_on_z4() {
        let m = ModulePresentation::zmod(2, 2, &[2]).unwrap();
        assert_eq!(m.module_action(0, &el(&[1])).unwrap(), el(&[2]));
    }

    #[test]
    fn y_action_on_quotient_by_x() {
        let m = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        assert_eq!(m.module_action(1, &el(&[1, 0])).unwrap(), el(&[0, 1]));
        assert_eq!(m.module_action(0, &el(&[1, 0])).unwrap(), el(&[0, 0]));
    }

    #[test]
    fn idempotent_selector() {
        let m = ModulePresentation::product_semisimple(3, 1, 1).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(m.module_action(0, &el(&[a, b])).unwrap(), el(&[a, 0]));
            }
        }
    }

    #[test]
    fn bad_generator_index() {
        let m = ModulePresentation::vector_space(2, 2).unwrap();
        assert!(matches!(
            m.module_action(0, &el(&[1, 0])),
            Err(Error::InvalidGenerator { index: 0, count: 0 })
        ));
    }

    #[test]
    fn rejects_broken_relations() {
        // X = Y = shift on 2 coordinates is fine; X with X² ≠ 0 is not.
        let x = vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]];
        let y = vec![vec![0; 3]; 3];
        assert!(matches!(
            ModulePresentation::kxy(2, x, y),
            Err(Error::InvalidPresentation(_))
        ));
        let e1 = vec![vec![1, 0], vec![0, 0]];
        assert!(ModulePresentation::new(
            RingSpec::product_field(2).unwrap(),
            vec![2, 2],
            vec![e1.clone(), e1]
        )
        .is_err());
    }

    #[test]
    fn rejects_noncommuting_actions() {
        // Two square-zero matrices with XY = 0 but YX ≠ 0.
        let x = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]];
        let y = vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 1, 0]];
        assert!(ModulePresentation::kxy(2, x, y).is_err());
    }

    #[test]
    fn rejects_orders_outside_the_ring() {
        let ring = RingSpec::local_square_zero(2).unwrap();
        assert!(ModulePresentation::new(ring, vec![4], vec![vec![vec![0]], vec![vec![0]]]).is_err());
        assert!(ModulePresentation::zmod(2, 2, &[3]).is_err());
        assert!(ModulePresentation::new(RingSpec::zmod(3, 2).unwrap(), vec![6], vec![]).is_err());
    }

    #[test]
    fn index_encoding_is_lexicographic() {
        let m = ModulePresentation::zmod(2, 2, &[2, 1]).unwrap();
        let tuples: Vec<Element> = m.elements().collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
        for i in 0..m.size() as u32 {
            assert_eq!(m.encode(&m.decode(i)), i);
            assert_eq!(m.add(i, m.neg(i)), 0);
        }
    }

    #[test]
    fn socle_examples() {
        let z4 = ModulePresentation::zmod(2, 2, &[2]).unwrap();
        assert_eq!(z4.socle().unwrap(), vec![el(&[0]), el(&[2])]);

        let f22 = ModulePresentation::vector_space(2, 2).unwrap();
        assert_eq!(f22.socle().unwrap().len(), 4);

        let rx = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        assert_eq!(rx.socle().unwrap(), vec![el(&[0, 0]), el(&[0, 1])]);

        let prod = ModulePresentation::product_semisimple(2, 1, 1).unwrap();
        assert!(matches!(prod.socle(), Err(Error::LocalityRequired(_))));
    }

    #[test]
    fn annihilator_profiles() {
        let kills = |m: &ModulePresentation| -> Vec<(String, bool)> {
            m.annihilator_profile()
                .0
                .iter()
                .map(|e| (format!("{}{}", e.generator, e.degree), e.kills))
                .collect()
        };
        let rx = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        let ry = ModulePresentation::kxy_preset(2, KxyPreset::QuotY).unwrap();
        let rx_profile = kills(&rx);
        assert!(rx_profile.contains(&("x1".into(), true)));
        assert!(rx_profile.contains(&("y1".into(), false)));
        let ry_profile = kills(&ry);
        assert!(ry_profile.contains(&("y1".into(), true)));
        assert!(ry_profile.contains(&("x1".into(), false)));
        assert_ne!(rx.annihilator_profile(), ry.annihilator_profile());

        let z4 = ModulePresentation::zmod(2, 2, &[2]).unwrap();
        assert_eq!(kills(&z4), vec![("p1".into(), false), ("p2".into(), true)]);
    }

    #[test]
    fn composition_lengths() {
        assert_eq!(ModulePresentation::zmod(3, 2, &[2]).unwrap().composition_length(), 2);
        assert_eq!(ModulePresentation::zmod(2, 3, &[3, 1]).unwrap().composition_length(), 4);
        assert_eq!(
            ModulePresentation::product_semisimple(2, 2, 1)
                .unwrap()
                .composition_length(),
            3
        );
    }

    #[test]
    fn semisimple_multiplicities() {
        let m = ModulePresentation::product_semisimple(2, 2, 1).unwrap();
        assert_eq!(m.simple_multiplicities(), Some(vec![2, 1]));
        let z4 = ModulePresentation::zmod(2, 2, &[2]).unwrap();
        assert_eq!(z4.simple_multiplicities(), None);
        let k2 = ModulePresentation::kxy_preset(2, KxyPreset::ResidueSquared).unwrap();
        assert_eq!(k2.simple_multiplicities(), Some(vec![2]));
    }
}
