//! Hermite and Smith normal forms of small integer matrices.

pub type IMatrix = Vec<Vec<i128>>;

/// Row-style Hermite normal form of the row lattice of `m`.
///
/// The result has no zero rows, is in echelon form with positive pivots,
/// and every entry above a pivot lies in `[0, pivot)`. Its rows span the
/// same ℤ-module as the rows of `m`.
pub fn hermite_normal_form(m: &IMatrix) -> IMatrix {
    let mut a: IMatrix = m.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut k = 0;
    for c in 0..cols {
        if k == rows {
            break;
        }
        loop {
            // Smallest non-zero entry in column c at or below row k.
            let Some(p) = (k..rows)
                .filter(|&i| a[i][c] != 0)
                .min_by_key(|&i| a[i][c].abs())
            else {
                break;
            };
            a.swap(k, p);
            let mut done = true;
            for i in k + 1..rows {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[k][c]);
                    sub_row(&mut a, i, k, q);
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[k][c] == 0 {
            continue;
        }
        if a[k][c] < 0 {
            a[k].iter_mut().for_each(|x| *x = -*x);
        }
        let pivot = a[k][c];
        for i in 0..k {
            let q = a[i][c].div_euclid(pivot);
            if q != 0 {
                sub_row(&mut a, i, k, q);
            }
        }
        k += 1;
    }
    a.truncate(k);
    a
}

fn sub_row(a: &mut IMatrix, target: usize, source: usize, q: i128) {
    let src = a[source].clone();
    for (x, s) in a[target].iter_mut().zip(src) {
        *x -= q * s;
    }
}

/// Smith decomposition `U · M · V = S` with `U`, `V` unimodular and `S`
/// diagonal with `s₁ | s₂ | …`, all diagonal entries non-negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IMatrix,
    pub v: IMatrix,
    pub v_inv: IMatrix,
    pub s: IMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<i128> {
        let k = self.s.len().min(self.s.first().map_or(0, Vec::len));
        (0..k).map(|i| self.s[i][i]).collect()
    }
}

fn identity(n: usize) -> IMatrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

pub fn smith_normal_form(m: &IMatrix) -> SmithDecomposition {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut s = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut v_inv = identity(cols);

    // Column operations are mirrored on V (columns) and on V⁻¹ (inverse row op).
    let swap_cols = |s: &mut IMatrix, v: &mut IMatrix, vi: &mut IMatrix, a: usize, b: usize| {
        for row in s.iter_mut().chain(v.iter_mut()) {
            row.swap(a, b);
        }
        vi.swap(a, b);
    };
    // col_b -= q * col_a
    let sub_col = |s: &mut IMatrix, v: &mut IMatrix, vi: &mut IMatrix, b: usize, a: usize, q: i128| {
        for row in s.iter_mut().chain(v.iter_mut()) {
            row[b] -= q * row[a];
        }
        let rb = vi[b].clone();
        for (x, y) in vi[a].iter_mut().zip(rb) {
            *x += q * y;
        }
    };

    for t in 0..rows.min(cols) {
        // Pick the smallest non-zero entry of the trailing block as pivot.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if s[i][j] != 0 && best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, v, v_inv, s);
            };
            s.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut s, &mut v, &mut v_inv, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if s[i][t] != 0 {
                    let q = s[i][t].div_euclid(s[t][t]);
                    sub_row(&mut s, i, t, q);
                    sub_row(&mut u, i, t, q);
                    clean &= s[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if s[t][j] != 0 {
                    let q = s[t][j].div_euclid(s[t][t]);
                    sub_col(&mut s, &mut v, &mut v_inv, j, t, q);
                    clean &= s[t][j] == 0;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row.
            let p = s[t][t];
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| s[i][j] % p != 0));
            match offender {
                Some(i) => {
                    sub_row(&mut s, t, i, -1);
                    sub_row(&mut u, t, i, -1);
                }
                None => break,
            }
        }
        if s[t][t] < 0 {
            s[t].iter_mut().for_each(|x| *x = -*x);
            u[t].iter_mut().for_each(|x| *x = -*x);
        }
    }
    finish(u, v, v_inv, s)
}

fn finish(mut u: IMatrix, v: IMatrix, v_inv: IMatrix, mut s: IMatrix) -> SmithDecomposition {
    for t in 0..s.len().min(s.first().map_or(0, Vec::len)) {
        if s[t][t] < 0 {
            s[t].iter_mut().for_each(|x| *x = -*x);
            u[t].iter_mut().for_each(|x| *x = -*x);
        }
    }
    SmithDecomposition { u, v, v_inv, s }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mul(a: &IMatrix, b: &IMatrix) -> IMatrix {
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
            .collect()
    }

    fn det(m: &IMatrix) -> i128 {
        let q: Vec<Vec<crate::rational::Rational>> =
            m.iter().map(|r| r.iter().map(|&x| crate::rational::int(x)).collect()).collect();
        crate::linalg::determinant(&q).to_integer()
    }

    #[test]
    fn hnf_small() {
        assert_eq!(hermite_normal_form(&vec![vec![4], vec![6]]), vec![vec![2]]);
        assert_eq!(hermite_normal_form(&vec![]), IMatrix::new());
        assert_eq!(hermite_normal_form(&vec![vec![0, 0]]), IMatrix::new());
        let h = hermite_normal_form(&vec![vec![4, -2], vec![-2, 4]]);
        assert_eq!(h, vec![vec![2, 2], vec![0, 6]]);
    }

    #[test]
    fn snf_a2() {
        let m = vec![vec![4, -2], vec![-2, 4]];
        let d = smith_normal_form(&m);
        assert_eq!(d.diagonal(), vec![2, 6]);
        assert_eq!(mul(&mul(&d.u, &m), &d.v), d.s);
        assert_eq!(mul(&d.v, &d.v_inv), identity(2));
    }

    #[test]
    fn snf_rectangular_and_zero() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let d = smith_normal_form(&m);
        assert_eq!(d.diagonal(), vec![2, 6, 12]);
        let z = smith_normal_form(&vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(z.diagonal(), vec![0, 0]);
    }

    proptest! {
        #[test]
        fn snf_is_a_valid_decomposition(entries in proptest::collection::vec(-6i128..=6, 9)) {
            let m: IMatrix = entries.chunks(3).map(|c| c.to_vec()).collect();
            let d = smith_normal_form(&m);
            prop_assert_eq!(mul(&mul(&d.u, &m), &d.v), d.s.clone());
            prop_assert_eq!(mul(&d.v, &d.v_inv), identity(3));
            prop_assert_eq!(det(&d.u).abs(), 1);
            let diag = d.diagonal();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j { prop_assert_eq!(d.s[i][j], 0); }
                }
                prop_assert!(diag[i] >= 0);
            }
            for w in diag.windows(2) {
                if w[0] != 0 { prop_assert_eq!(w[1] % w[0], 0); } else { prop_assert_eq!(w[1], 0); }
            }
            prop_assert_eq!(diag.iter().product::<i128>(), det(&m).abs());
        }

        #[test]
        fn hnf_shape(entries in proptest::collection::vec(-9i128..=9, 6)) {
            let m: IMatrix = entries.chunks(3).map(|c| c.to_vec()).collect();
            let h = hermite_normal_form(&m);
            let mut last_pivot: Option<usize> = None;
            for (k, row) in h.iter().enumerate() {
                let p = row.iter().position(|&x| x != 0).unwrap();
                prop_assert!(last_pivot.is_none_or(|lp| p > lp));
                prop_assert!(row[p] > 0);
                for above in &h[..k] {
                    prop_assert!(above[p] >= 0 && above[p] < row[p]);
                }
                last_pivot = Some(p);
            }
        }
    }
}
