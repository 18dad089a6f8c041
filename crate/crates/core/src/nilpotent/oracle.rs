//! Integer matrix realization of the Jacobson–Morozov triple attached to a
//! partition, in the defining representation.
//!
//! Each part `m` becomes a block with basis `w_0, ..., w_{m-1}`:
//! `h w_k = (m-1-2k) w_k`, `e w_{k+1} = w_k`, `f w_k = (k+1)(m-1-k) w_{k+1}`.
//! For orthogonal and symplectic types the triple preserves the form
//! `<w_k, w_{m-1-k}> = (-1)^k` on self-dual blocks, and the analogous
//! off-diagonal form on pairs of blocks of equal size.

use crate::error::{Error, Result};
use crate::root_datum::Family;

use super::{defining_dimension, self_dual_part, validate_partition, Partition};

pub type IntMatrix = Vec<Vec<i64>>;

/// Largest rank the oracle accepts.
pub const MAX_ORACLE_RANK: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixTriple {
    pub e: IntMatrix,
    pub h: IntMatrix,
    pub f: IntMatrix,
    /// Gram matrix of the invariant form; `None` for type A.
    pub form: Option<IntMatrix>,
}

fn zeros(n: usize) -> IntMatrix {
    vec![vec![0; n]; n]
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b[0].len();
    let mut c = vec![vec![0; m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                c[i][j] += aik * bk[j];
            }
        }
    }
    c
}

pub fn bracket(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let ab = matmul(a, b);
    let ba = matmul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn scale(a: &IntMatrix, c: i64) -> IntMatrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

fn transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

impl MatrixTriple {
    /// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn satisfies_sl2_relations(&self) -> bool {
        bracket(&self.h, &self.e) == scale(&self.e, 2)
            && bracket(&self.h, &self.f) == scale(&self.f, -2)
            && bracket(&self.e, &self.f) == self.h
    }

    pub fn h_is_diagonal(&self) -> bool {
        self.h
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| i == j || x == 0))
    }

    pub fn h_diagonal(&self) -> Vec<i64> {
        (0..self.h.len()).map(|i| self.h[i][i]).collect()
    }

    /// `X^T J + J X = 0` for each member, and `J` is a nondegenerate form of
    /// the right symmetry. Vacuously true for type A.
    pub fn preserves_form(&self, family: Family) -> bool {
        let Some(j) = &self.form else {
            return family == Family::A;
        };
        let sign = if family == Family::C { -1 } else { 1 };
        if transpose(j) != scale(j, sign) {
            return false;
        }
        // signed permutation matrix, hence invertible
        let n = j.len();
        let rows_ok = j.iter().all(|r| r.iter().filter(|&&x| x != 0).count() == 1);
        let cols_ok = (0..n).all(|c| j.iter().filter(|r| r[c] != 0).count() == 1);
        if !(rows_ok && cols_ok && j.iter().flatten().all(|x| x.abs() <= 1)) {
            return false;
        }
        [&self.e, &self.h, &self.f].iter().all(|x| {
            let lhs = matmul(&transpose(x), j);
            let rhs = matmul(j, x);
            lhs.iter().zip(&rhs).all(|(a, b)| a.iter().zip(b).all(|(p, q)| p + q == 0))
        })
    }
}

pub fn oracle_matrix_triple(family: Family, rank: usize, p: &Partition) -> Result<MatrixTriple> {
    validate_partition(family, rank, p)?;
    if rank > MAX_ORACLE_RANK {
        return Err(Error::DeskScale {
            rank,
            max: MAX_ORACLE_RANK,
        });
    }
    let n = defining_dimension(family, rank)?;
    let mut e = zeros(n);
    let mut h = zeros(n);
    let mut f = zeros(n);
    let mut offsets = Vec::new();
    let mut at = 0;
    for &m in p.parts() {
        offsets.push(at);
        for k in 0..m {
            h[at + k][at + k] = m as i64 - 1 - 2 * k as i64;
            if k + 1 < m {
                e[at + k][at + k + 1] = 1;
                f[at + k + 1][at + k] = ((k + 1) * (m - 1 - k)) as i64;
            }
        }
        at += m;
    }

    let form = if family == Family::A {
        None
    } else {
        let eps = if family == Family::C { -1 } else { 1 };
        let sign = |k: usize| if k % 2 == 0 { 1 } else { -1 };
        let mut j = zeros(n);
        let parts = p.parts();
        let mut b = 0;
        while b < parts.len() {
            let m = parts[b];
            let o = offsets[b];
            if self_dual_part(family, m) {
                for k in 0..m {
                    j[o + k][o + m - 1 - k] = sign(k);
                }
                b += 1;
            } else {
                let o2 = offsets[b + 1];
                for k in 0..m {
                    j[o + k][o2 + m - 1 - k] = sign(k);
                    j[o2 + m - 1 - k][o + k] = eps * sign(k);
                }
                b += 2;
            }
        }
        Some(j)
    };

    Ok(MatrixTriple { e, h, f, form })
}
