//! Root-system data for the finite-type simple Lie algebras, the invariant
//! form normalised so that short roots have length 2, and the lattice of
//! simple-current weights.
//!
//! Weights are written in the fundamental-weight basis. With
//! `D = diag(d₁,…,dₙ)` and Cartan matrix `A` (Bourbaki numbering,
//! `aᵢⱼ = 2⟨αᵢ,αⱼ⟩/⟨αᵢ,αᵢ⟩`), the Gram matrix of the fundamental weights is
//! `G = D (DA)⁻¹ D`, the simple root `αⱼ` has ω-coordinates given by column
//! `j` of `A`, and `⟨ωᵢ, αⱼ⟩ = dⱼ δᵢⱼ`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RMatrix};
use crate::rational::{frac, int, is_multiple_of, serde_rational_matrix, ExponentModL, Rational};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn is_simply_laced(self) -> bool {
        matches!(self, Series::A | Series::D | Series::E)
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            "F" | "f" => Ok(Series::F),
            "G" | "g" => Ok(Series::G),
            other => Err(Error::InvalidSeriesRank {
                series: other.to_string(),
                rank: 0,
            }),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Cartan matrix and symmetrizers for a Dynkin type.
fn dynkin_data(series: Series, n: usize) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    let invalid = || Error::InvalidSeriesRank {
        series: series.to_string(),
        rank: n,
    };
    let valid = match series {
        Series::A => n >= 1,
        Series::B | Series::C => n >= 2,
        Series::D => n >= 4,
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    };
    if !valid {
        return Err(invalid());
    }

    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    let mut d = vec![1i64; n];
    match series {
        Series::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
            d[..n - 1].iter_mut().for_each(|x| *x = 2);
        }
        Series::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
            d[n - 1] = 2;
        }
        Series::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Series::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            d = vec![2, 2, 1, 1];
        }
        Series::G => {
            link(0, 1, -3, -1);
            d = vec![1, 3];
        }
    }
    Ok((a, d))
}

fn rank_of_root_of_unity(ell: i64) -> i64 {
    2 * ell / (3 + if ell % 2 == 0 { 1 } else { -1 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanDatum {
    pub series: Series,
    pub rank: usize,
    pub ell: i64,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub r: i64,
    pub r_i: Vec<i64>,
    #[serde(with = "serde_rational_matrix")]
    pub gram: RMatrix,
    pub rho: Weight,
    /// Whether `r > max gcd(dᵢ, r)` holds, i.e. the quantum group is defined.
    pub quantum_group_defined: bool,
}

impl CartanDatum {
    /// Builds the datum and enforces `ℓ ≥ 3` and `r > max gcd(dᵢ, r)`.
    pub fn new(series: Series, rank: usize, ell: i64) -> Result<Self> {
        let datum = Self::lattice_only(series, rank, ell)?;
        if !datum.quantum_group_defined {
            let g = datum.symmetrizers.iter().map(|d| d.gcd(&datum.r)).max().unwrap_or(1);
            return Err(Error::HypothesisViolated(format!(
                "r = {} must exceed max gcd(d_i, r) = {g}",
                datum.r
            )));
        }
        Ok(datum)
    }

    /// Builds the datum requiring only `ℓ ≥ 3`.
    ///
    /// Pure lattice computations (pairings, twists, monodromies) make sense
    /// for every `ℓ`; [`CartanDatum::quantum_group_defined`] records whether
    /// the stronger condition holds.
    pub fn lattice_only(series: Series, rank: usize, ell: i64) -> Result<Self> {
        let (cartan, symmetrizers) = dynkin_data(series, rank)?;
        if ell < 3 {
            return Err(Error::HypothesisViolated(format!("ell = {ell} < 3")));
        }
        let r = rank_of_root_of_unity(ell);
        let quantum_group_defined = symmetrizers.iter().all(|d| d.gcd(&r) < r);
        let r_i = symmetrizers.iter().map(|d| r / d.gcd(&r)).collect();

        let n = rank;
        let dmat: RMatrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { int(symmetrizers[i] as i128) } else { int(0) }).collect())
            .collect();
        let b = linalg::mul(&dmat, &linalg::from_ints(&cartan));
        let b_inv = linalg::inverse(&b).expect("symmetrized Cartan matrix is invertible");
        let gram = linalg::mul(&linalg::mul(&dmat, &b_inv), &dmat);

        Ok(Self {
            series,
            rank,
            ell,
            cartan,
            symmetrizers,
            r,
            r_i,
            gram,
            rho: Weight::from_ints(&vec![1; n]),
            quantum_group_defined,
        })
    }

    pub fn ell_rational(&self) -> Rational {
        int(self.ell as i128)
    }

    /// `ℓ/2`, possibly a half-integer.
    pub fn half_ell(&self) -> Rational {
        frac(self.ell as i128, 2)
    }

    /// The invariant form `⟨λ, μ⟩ = λᵀ G μ`.
    pub fn pairing(&self, lambda: &Weight, mu: &Weight) -> Result<Rational> {
        lambda.expect_dim(self.rank)?;
        mu.expect_dim(self.rank)?;
        Ok(self.form(lambda, mu))
    }

    /// Unchecked pairing; panics on a dimension mismatch.
    pub(crate) fn form(&self, lambda: &Weight, mu: &Weight) -> Rational {
        assert_eq!(lambda.dim(), self.rank);
        assert_eq!(mu.dim(), self.rank);
        let mut acc = Rational::zero();
        for (i, li) in lambda.coords().iter().enumerate() {
            if li.is_zero() {
                continue;
            }
            for (j, mj) in mu.coords().iter().enumerate() {
                if !mj.is_zero() {
                    acc += li * self.gram[i][j] * mj;
                }
            }
        }
        acc
    }

    /// Reduces a rational exponent modulo `ℓ`.
    pub fn exponent(&self, value: Rational) -> ExponentModL {
        ExponentModL::new(value, self.ell)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(i, self.rank)
    }

    /// The simple root `αⱼ`: column `j` of the Cartan matrix.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight::from_ints(&self.cartan.iter().map(|row| row[j] as i128).collect::<Vec<_>>())
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank).map(|j| self.simple_root(j)).collect()
    }

    pub fn cartan_determinant(&self) -> i128 {
        let det = linalg::determinant(&linalg::from_ints(&self.cartan));
        debug_assert!(det.is_integer());
        det.to_integer()
    }

    /// Coordinates of `λ` in the simple-root basis.
    pub fn root_coordinates(&self, lambda: &Weight) -> Vec<Rational> {
        let roots: RMatrix = self.simple_roots().iter().map(|w| w.coords().to_vec()).collect();
        linalg::solve_in_row_span(&roots, lambda.coords()).expect("simple roots span 𝔥*")
    }

    /// `λ ∈ Q`, the root lattice.
    pub fn in_root_lattice(&self, lambda: &Weight) -> bool {
        self.root_coordinates(lambda).iter().all(|c| c.is_integer())
    }

    /// `λ ∈ P`, the weight lattice.
    pub fn in_weight_lattice(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().all(|c| c.is_integer())
    }

    /// Membership in 𝓛 = {λ : λ(Hᵢ) ∈ (ℓ/2dᵢ)ℤ}. Since `λ(Hᵢ) = cᵢ/dᵢ`,
    /// this is `cᵢ ∈ (ℓ/2)ℤ` for every coordinate.
    pub fn in_simple_current_lattice(&self, lambda: &Weight) -> bool {
        let h = self.half_ell();
        lambda.dim() == self.rank && lambda.coords().iter().all(|c| is_multiple_of(c, &h))
    }

    /// `r ∤ 2dᵢ` for every `i`; the hypothesis under which simple currents
    /// have no self-extensions.
    pub fn no_current_extensions(&self) -> bool {
        self.symmetrizers.iter().all(|d| (2 * d) % self.r != 0)
    }
}
