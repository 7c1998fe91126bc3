//! Deciding whether two presentations describe isomorphic modules, with a
//! certificate either way.

use crate::error::{Error, Result};
use crate::fp;
use crate::presentation::{log_p, ModulePresentation, ResidueMatrix};
use crate::ring::RingKind;

/// Solution spaces larger than this are not enumerated.
const MAX_INTERTWINERS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleIso {
    Isomorphic(String),
    NotIsomorphic(String),
}

impl ModuleIso {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, ModuleIso::Isomorphic(_))
    }

    pub fn certificate(&self) -> &str {
        match self {
            ModuleIso::Isomorphic(s) | ModuleIso::NotIsomorphic(s) => s,
        }
    }
}

fn sorted_orders(m: &ModulePresentation) -> Vec<u64> {
    let mut o = m.orders().to_vec();
    o.sort_unstable();
    o
}

fn format_matrix(m: &ResidueMatrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn module_isomorphic(a: &ModulePresentation, b: &ModulePresentation) -> Result<ModuleIso> {
    a.ring().ensure_same(b.ring())?;
    let p = a.ring().p();
    match a.ring().kind() {
        RingKind::Zmod => {
            let (oa, ob) = (sorted_orders(a), sorted_orders(b));
            Ok(if oa == ob {
                ModuleIso::Isomorphic(format!("cyclic orders {oa:?}"))
            } else {
                ModuleIso::NotIsomorphic(format!("cyclic orders {oa:?} vs {ob:?}"))
            })
        }
        RingKind::PrimeField => Ok(if a.rank() == b.rank() {
            ModuleIso::Isomorphic(format!("dimension {}", a.rank()))
        } else {
            ModuleIso::NotIsomorphic(format!("dimensions {} vs {}", a.rank(), b.rank()))
        }),
        RingKind::ProductField => {
            let (ma, mb) = (a.simple_multiplicities(), b.simple_multiplicities());
            Ok(if ma == mb {
                ModuleIso::Isomorphic(format!("simple multiplicities {:?}", ma.unwrap_or_default()))
            } else {
                ModuleIso::NotIsomorphic(format!(
                    "simple multiplicities {:?} vs {:?}",
                    ma.unwrap_or_default(),
                    mb.unwrap_or_default()
                ))
            })
        }
        RingKind::LocalSquareZero => local_square_zero_iso(a, b, p),
    }
}

fn local_square_zero_iso(a: &ModulePresentation, b: &ModulePresentation, p: u64) -> Result<ModuleIso> {
    let n = a.rank();
    if n != b.rank() {
        return Ok(ModuleIso::NotIsomorphic(format!("dimensions {n} vs {}", b.rank())));
    }
    let (pa, pb) = (a.annihilator_profile(), b.annihilator_profile());
    if pa != pb {
        return Ok(ModuleIso::NotIsomorphic(format!("annihilator profiles {pa} vs {pb}")));
    }
    let socle_dim = |m: &ModulePresentation| -> Result<u32> { Ok(log_p(m.socle_indices()?.len() as u64, p)) };
    let (sa, sb) = (socle_dim(a)?, socle_dim(b)?);
    if sa != sb {
        return Ok(ModuleIso::NotIsomorphic(format!("socle dimensions {sa} vs {sb}")));
    }
    for (r, name) in ["x", "y"].iter().enumerate() {
        let (ra, rb) = (fp::rank(&a.actions()[r], p), fp::rank(&b.actions()[r], p));
        if ra != rb {
            return Ok(ModuleIso::NotIsomorphic(format!("rank of {name} action {ra} vs {rb}")));
        }
    }
    // T with T·X_a = X_b·T and T·Y_a = Y_b·T; unknown T[i][j] is variable i·n + j.
    let mut rows = Vec::with_capacity(2 * n * n);
    for (xa, xb) in a.actions().iter().zip(b.actions()) {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![0u64; n * n];
                for k in 0..n {
                    row[i * n + k] = (row[i * n + k] + xa[k][j]) % p;
                    row[k * n + j] = (row[k * n + j] + p - xb[i][k] % p) % p;
                }
                rows.push(row);
            }
        }
    }
    let basis = fp::null_space(&rows, n * n, p);
    let count = (p as u128).checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
    if count > MAX_INTERTWINERS as u128 {
        return Err(Error::cap("module isomorphism search", count, MAX_INTERTWINERS as u128));
    }
    let mut coeffs = vec![0u64; basis.len()];
    loop {
        let mut t = vec![vec![0u64; n]; n];
        for (c, v) in coeffs.iter().zip(&basis) {
            for (idx, &x) in v.iter().enumerate() {
                t[idx / n][idx % n] = (t[idx / n][idx % n] + c * x) % p;
            }
        }
        if fp::is_invertible(&t, p) {
            return Ok(ModuleIso::Isomorphic(format!("change of basis {}", format_matrix(&t))));
        }
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return Ok(ModuleIso::NotIsomorphic(format!(
                    "none of the {count} module maps is invertible"
                )));
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::KxyPreset;

    #[test]
    fn zmod_orders() {
        let z4 = ModulePresentation::zmod(2, 2, &[2]).unwrap();
        let z22 = ModulePresentation::zmod(2, 2, &[1, 1]).unwrap();
        let r = module_isomorphic(&z4, &z22).unwrap();
        assert!(!r.is_isomorphic());
        assert!(module_isomorphic(&z4, &z4).unwrap().is_isomorphic());
    }

    #[test]
    fn quotients_by_x_and_y() {
        let rx = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        let ry = ModulePresentation::kxy_preset(2, KxyPreset::QuotY).unwrap();
        let r = module_isomorphic(&rx, &ry).unwrap();
        assert!(!r.is_isomorphic());
        assert!(r.certificate().starts_with("annihilator profiles"));
    }

    #[test]
    fn permuted_basis() {
        // R/(x) with basis (y·1, 1) instead of (1, y·1).
        let rx = ModulePresentation::kxy_preset(2, KxyPreset::QuotX).unwrap();
        let swapped = ModulePresentation::kxy(2, vec![vec![0, 0], vec![0, 0]], vec![vec![0, 1], vec![0, 0]]).unwrap();
        let r = module_isomorphic(&rx, &swapped).unwrap();
        assert!(r.is_isomorphic(), "{r:?}");
    }

    #[test]
    fn exhausted_search_separates_same_invariants() {
        // Over F_3, R/(x+y) and R/(x+2y) share dimension, profile and ranks.
        let a = ModulePresentation::kxy(3, vec![vec![0, 0], vec![1, 0]], vec![vec![0, 0], vec![2, 0]]).unwrap();
        let b = ModulePresentation::kxy(3, vec![vec![0, 0], vec![1, 0]], vec![vec![0, 0], vec![1, 0]]).unwrap();
        let r = module_isomorphic(&a, &b).unwrap();
        assert!(!r.is_isomorphic());
        assert!(r.certificate().contains("module maps"));
    }

    #[test]
    fn product_and_field() {
        let s1 = ModulePresentation::product_semisimple(2, 1, 0).unwrap();
        let s2 = ModulePresentation::product_semisimple(2, 0, 1).unwrap();
        assert!(!module_isomorphic(&s1, &s2).unwrap().is_isomorphic());
        let f2 = ModulePresentation::vector_space(2, 2).unwrap();
        let f3 = ModulePresentation::vector_space(2, 3).unwrap();
        assert!(!module_isomorphic(&f2, &f3).unwrap().is_isomorphic());
    }
}
