//! The four supported finite commutative rings.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    /// Z/p^k.
    Zmod,
    /// F_p.
    PrimeField,
    /// F_p × F_p.
    ProductField,
    /// F_p[x,y]/(x,y)².
    LocalSquareZero,
}

/// A ring from the supported family, identified by kind and parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    kind: RingKind,
    p: u64,
    k: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest prime accepted. Residue products must stay far inside `i128`.
const MAX_PRIME: u64 = 1 << 16;

impl RingSpec {
    pub fn new(kind: RingKind, p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidRing(format!("p = {p} exceeds {MAX_PRIME}")));
        }
        if k == 0 {
            return Err(Error::InvalidRing("k must be at least 1".into()));
        }
        if kind != RingKind::Zmod && k != 1 {
            return Err(Error::InvalidRing(format!(
                "exponent k = {k} only applies to Z/p^k"
            )));
        }
        if kind == RingKind::Zmod && p.checked_pow(k).is_none_or(|q| q > u32::MAX as u64) {
            return Err(Error::InvalidRing(format!("{p}^{k} is too large")));
        }
        Ok(RingSpec { kind, p, k })
    }

    pub fn zmod(p: u64, k: u32) -> Result<Self> {
        Self::new(RingKind::Zmod, p, k)
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        Self::new(RingKind::PrimeField, p, 1)
    }

    pub fn product_field(p: u64) -> Result<Self> {
        Self::new(RingKind::ProductField, p, 1)
    }

    pub fn local_square_zero(p: u64) -> Result<Self> {
        Self::new(RingKind::LocalSquareZero, p, 1)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The exponent k of Z/p^k; 1 for the other kinds.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Additive exponent of the ring: p^k for Z/p^k, p otherwise.
    pub fn characteristic(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn is_local(&self) -> bool {
        self.kind != RingKind::ProductField
    }

    /// Number of action matrices a module presentation carries.
    pub fn action_count(&self) -> usize {
        match self.kind {
            RingKind::Zmod | RingKind::PrimeField => 0,
            RingKind::ProductField | RingKind::LocalSquareZero => 2,
        }
    }

    /// Names of the ring generators. For Z/p^k the single generator is the
    /// scalar p; for the other kinds generator `i` is action matrix `i`.
    pub fn generator_names(&self) -> &'static [&'static str] {
        match self.kind {
            RingKind::Zmod => &["p"],
            RingKind::PrimeField => &[],
            RingKind::ProductField => &["e1", "e2"],
            RingKind::LocalSquareZero => &["x", "y"],
        }
    }

    /// Generators of the maximal ideal, as indices into `generator_names`.
    pub fn radical_generators(&self) -> Result<&'static [usize]> {
        match self.kind {
            RingKind::Zmod => Ok(&[0]),
            RingKind::PrimeField => Ok(&[]),
            RingKind::LocalSquareZero => Ok(&[0, 1]),
            RingKind::ProductField => Err(Error::LocalityRequired(self.to_string())),
        }
    }

    /// Whether two rings admit Hom between their modules.
    pub(crate) fn ensure_same(&self, other: &RingSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Zmod => write!(f, "Z/{}^{}", self.p, self.k),
            RingKind::PrimeField => write!(f, "F_{}", self.p),
            RingKind::ProductField => write!(f, "F_{0} x F_{0}", self.p),
            RingKind::LocalSquareZero => write!(f, "F_{}[x,y]/(x,y)^2", self.p),
        }
    }
}
