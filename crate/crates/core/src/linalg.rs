//! Small dense exact linear algebra over ℚ. Matrices are row-major
//! `Vec<Vec<Rational>>`; sizes are at most the rank of a simple Lie algebra.

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

pub type RMatrix = Vec<Vec<Rational>>;

pub fn from_ints(rows: &[Vec<i64>]) -> RMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| int(x as i128)).collect())
        .collect()
}

pub fn identity(n: usize) -> RMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect())
        .collect()
}

pub fn transpose(m: &RMatrix) -> RMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mul(a: &RMatrix, b: &RMatrix) -> RMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "matrix shape mismatch");
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, brow)| acc + x * brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn vec_mul(v: &[Rational], m: &RMatrix) -> Vec<Rational> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(Rational::zero(), |acc, (x, row)| acc + x * row[j])
        })
        .collect()
}

pub fn scale(m: &RMatrix, k: &Rational) -> RMatrix {
    m.iter().map(|r| r.iter().map(|x| x * k).collect()).collect()
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut RMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let v = m[r][j];
                    m[i][j] -= f * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RMatrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

pub fn inverse(m: &RMatrix) -> Option<RMatrix> {
    let n = m.len();
    let mut aug: RMatrix = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().copied().chain(id).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn determinant(m: &RMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c];
        det *= pivot;
        for i in c + 1..n {
            let f = a[i][c] / pivot;
            if !f.is_zero() {
                for j in c..n {
                    let v = a[c][j];
                    a[i][j] -= f * v;
                }
            }
        }
    }
    det
}

/// Solves `x · basis = target` for `x` when the rows of `basis` are linearly
/// independent. Returns `None` when `target` is outside the row span.
pub fn solve_in_row_span(basis: &RMatrix, target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    if k == 0 {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    // Columns of the augmented system [basisᵀ | target].
    let n = target.len();
    let mut sys: RMatrix = (0..n)
        .map(|j| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[j]).collect();
            row.push(target[j]);
            row
        })
        .collect();
    let pivots = rref(&mut sys);
    if pivots.contains(&k) {
        return None;
    }
    debug_assert_eq!(pivots.len(), k, "basis rows must be independent");
    let mut x = vec![Rational::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = sys[row][k];
    }
    Some(x)
}
