//! Dense linear algebra over a prime field F_p.

/// Row-reduce `rows` in place over F_p and return the rank.
pub fn row_reduce(rows: &mut [Vec<u64>], p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inverse(rows[rank][col] % p, p);
        for v in rows[rank].iter_mut() {
            *v = *v % p * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank {
                let factor = rows[r][col] % p;
                if factor != 0 {
                    for c in 0..ncols {
                        let sub = factor * rows[rank][c] % p;
                        rows[r][c] = (rows[r][c] % p + p - sub) % p;
                    }
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(matrix: &[Vec<u64>], p: u64) -> usize {
    let mut rows = matrix.to_vec();
    row_reduce(&mut rows, p)
}

pub fn is_invertible(matrix: &[Vec<u64>], p: u64) -> bool {
    matrix.len() == matrix.first().map_or(0, |r| r.len()) && rank(matrix, p) == matrix.len()
}

/// Basis of the right null space {v : A v = 0}.
pub fn null_space(matrix: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows = matrix.to_vec();
    let rank = row_reduce(&mut rows, p);
    let mut pivot_cols = Vec::with_capacity(rank);
    for row in rows.iter().take(rank) {
        pivot_cols.push(row.iter().position(|&v| v != 0).expect("pivot row is nonzero"));
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (p - rows[r][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

/// Multiplicative inverse of a nonzero residue modulo a prime.
pub fn inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} is not invertible mod {p}");
    old_s.rem_euclid(p as i128) as u64
}

pub fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let inner = b.len();
    let mut out = vec![vec![0u64; m]; n];
    for i in 0..n {
        for k in 0..inner {
            let aik = a[i][k] % p;
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = (out[i][j] + aik * b[k][j]) % p;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_inverse() {
        assert_eq!(rank(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank(&[vec![1, 2], vec![2, 1]], 3), 1);
        assert_eq!(rank(&[vec![1, 2], vec![2, 1]], 5), 2);
        for a in 1..7 {
            assert_eq!(a * inverse(a, 7) % 7, 1);
        }
    }

    #[test]
    fn null_space_is_annihilated() {
        let a = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let ns = null_space(&a, 3, 2);
        assert_eq!(ns, vec![vec![1, 1, 1]]);
        let ns3 = null_space(&a, 3, 3);
        assert_eq!(ns3.len(), 1);
        let v = &ns3[0];
        for row in &a {
            let dot: u64 = row.iter().zip(v).map(|(x, y)| x * y).sum();
            assert_eq!(dot % 3, 0);
        }
    }
}
