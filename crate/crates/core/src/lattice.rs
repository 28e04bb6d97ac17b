//! Finitely generated subgroups of 𝔥* with exact canonical bases, scaled
//! duals, and quotient censuses.

use serde::Serialize;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::linalg::{self, RMatrix};
use crate::normal_form::{hermite_normal_form, smith_normal_form, IMatrix};
use crate::rational::{int, is_multiple_of, lcm_of_denominators};
use crate::weight::Weight;

/// `span_ℤ(generators)`, stored with its Hermite basis `H / denominator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalLattice {
    ambient: usize,
    generators: Vec<Weight>,
    #[serde(skip)]
    hnf: IMatrix,
    denominator: i128,
}

impl RationalLattice {
    pub fn new(ambient: usize, generators: Vec<Weight>) -> Result<Self> {
        for g in &generators {
            g.expect_dim(ambient)?;
        }
        let denominator = lcm_of_denominators(generators.iter().flat_map(|g| g.coords()));
        let scaled: IMatrix = generators
            .iter()
            .map(|g| {
                g.coords()
                    .iter()
                    .map(|c| (c * int(denominator)).to_integer())
                    .collect()
            })
            .collect();
        let hnf = hermite_normal_form(&scaled);
        Ok(Self {
            ambient,
            generators,
            hnf,
            denominator,
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            generators: Vec::new(),
            hnf: Vec::new(),
            denominator: 1,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient
    }

    /// True when the generator list is itself a ℤ-basis.
    pub fn generators_independent(&self) -> bool {
        self.generators.len() == self.rank()
    }

    /// The Hermite basis rows as weights.
    pub fn basis(&self) -> Vec<Weight> {
        let d = int(self.denominator);
        self.hnf
            .iter()
            .map(|row| Weight::new(row.iter().map(|&x| int(x) / d).collect()))
            .collect()
    }

    pub fn hnf(&self) -> (&IMatrix, i128) {
        (&self.hnf, self.denominator)
    }

    pub fn basis_matrix(&self) -> RMatrix {
        self.basis().iter().map(|w| w.coords().to_vec()).collect()
    }

    /// Integer coordinates of `λ` with respect to [`RationalLattice::basis`].
    pub fn coordinates(&self, lambda: &Weight) -> Option<Vec<i128>> {
        if lambda.dim() != self.ambient {
            return None;
        }
        let d = int(self.denominator);
        let mut v = Vec::with_capacity(self.ambient);
        for c in lambda.coords() {
            let x = c * d;
            if !x.is_integer() {
                return None;
            }
            v.push(x.to_integer());
        }
        let mut coeffs = Vec::with_capacity(self.rank());
        for row in &self.hnf {
            let p = row.iter().position(|&x| x != 0).expect("HNF rows are non-zero");
            // Columns left of this pivot must already be cleared.
            if v[..p].iter().any(|&x| x != 0) {
                return None;
            }
            if v[p] % row[p] != 0 {
                return None;
            }
            let q = v[p] / row[p];
            for (x, r) in v.iter_mut().zip(row) {
                *x -= q * r;
            }
            coeffs.push(q);
        }
        v.iter().all(|&x| x == 0).then_some(coeffs)
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        self.coordinates(lambda).is_some()
    }

    pub fn contains_lattice(&self, other: &RationalLattice) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }
}

/// Outcome of adjoining a weight to a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjoined {
    pub lattice: RationalLattice,
    pub already_contained: bool,
    pub double_contained: bool,
}

/// `L + ℤμ`, together with the flags `μ ∈ L` and `2μ ∈ L`.
pub fn adjoin(lattice: &RationalLattice, mu: &Weight) -> Result<Adjoined> {
    mu.expect_dim(lattice.ambient)?;
    let mut gens = lattice.generators.clone();
    gens.push(mu.clone());
    Ok(Adjoined {
        lattice: RationalLattice::new(lattice.ambient, gens)?,
        already_contained: lattice.contains(mu),
        double_contained: lattice.contains(&mu.scale(2)),
    })
}

/// `{γ : 2⟨γ, λ⟩ ∈ ℓℤ for all λ ∈ L}`.
///
/// It splits as `lattice_part ⊕ L^⊥`, where `lattice_part` lies in the
/// rational span of `L` and `L^⊥` is a real subspace of dimension
/// `complement_dimension`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGroup {
    pub complement_dimension: usize,
    pub lattice_part: RationalLattice,
    #[serde(skip)]
    defining: Vec<Weight>,
}

impl DualGroup {
    pub fn is_lattice(&self) -> bool {
        self.complement_dimension == 0
    }

    pub fn contains(&self, datum: &CartanDatum, gamma: &Weight) -> bool {
        in_scaled_dual(datum, &self.defining, gamma)
    }
}

/// True iff `2⟨γ, g⟩ ∈ ℓℤ` for every generator `g`.
pub fn in_scaled_dual(datum: &CartanDatum, generators: &[Weight], gamma: &Weight) -> bool {
    let ell = datum.ell_rational();
    generators
        .iter()
        .all(|g| is_multiple_of(&(int(2) * datum.form(gamma, g)), &ell))
}

pub fn scaled_dual(datum: &CartanDatum, lattice: &RationalLattice) -> Result<DualGroup> {
    if lattice.ambient != datum.rank {
        return Err(Error::DimensionMismatch {
            expected: datum.rank,
            found: lattice.ambient,
        });
    }
    let n = datum.rank;
    let k = lattice.rank();
    if k == 0 {
        return Ok(DualGroup {
            complement_dimension: n,
            lattice_part: RationalLattice::zero(n),
            defining: Vec::new(),
        });
    }
    // lattice_part = (ℓ/2) (B G Bᵀ)⁻¹ B for the basis matrix B.
    let b = lattice.basis_matrix();
    let gram_l = linalg::mul(&linalg::mul(&b, &datum.gram), &linalg::transpose(&b));
    let inv = linalg::inverse(&gram_l).expect("restriction of a definite form is invertible");
    let dual_basis = linalg::mul(&linalg::scale(&inv, &datum.half_ell()), &b);
    let lattice_part = RationalLattice::new(n, dual_basis.into_iter().map(Weight::new).collect())?;
    Ok(DualGroup {
        complement_dimension: n - k,
        lattice_part,
        defining: lattice.generators.clone(),
    })
}

/// Structure of `D / (D ∩ L)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub finite: bool,
    pub free_rank: usize,
    pub complement_dimension: usize,
    /// Non-trivial invariant factors `s₁ | s₂ | …` of the discrete part.
    pub invariant_factors: Vec<i128>,
    /// Coset representatives, present iff `finite`.
    pub reps: Option<Vec<Weight>>,
    /// `∏ invariant_factors`, present iff `finite`.
    pub order: Option<i128>,
}

/// The quotient of the scaled dual by `L`, via the Smith form of the
/// change-of-basis matrix. Requires every generator of `L` to lie in `D`.
pub fn quotient_census(datum: &CartanDatum, dual: &DualGroup, lattice: &RationalLattice) -> Result<Census> {
    for g in lattice.generators() {
        if !dual.contains(datum, g) {
            return Err(Error::NotSubgroup(g.to_string()));
        }
    }
    let part = &dual.lattice_part;
    let k = part.rank();
    let free_rank = k - lattice.rank().min(k);
    let finite = dual.complement_dimension == 0 && free_rank == 0;

    if k == 0 {
        return Ok(Census {
            finite,
            free_rank: 0,
            complement_dimension: dual.complement_dimension,
            invariant_factors: Vec::new(),
            reps: finite.then(|| vec![Weight::zero(datum.rank)]),
            order: finite.then_some(1),
        });
    }

    // Rows of L's basis in coordinates of the dual basis: X · D = L.
    let d_basis = part.basis();
    let x: IMatrix = lattice
        .basis()
        .iter()
        .map(|w| {
            part.coordinates(w)
                .ok_or_else(|| Error::NotSubgroup(w.to_string()))
        })
        .collect::<Result<_>>()?;
    let (diag, v_inv) = if x.is_empty() {
        (Vec::new(), IMatrix::new())
    } else {
        let snf = smith_normal_form(&x);
        (snf.diagonal(), snf.v_inv)
    };
    let invariant_factors: Vec<i128> = diag.iter().copied().filter(|&s| s > 1).collect();
    let order: i128 = diag.iter().product();

    let reps = finite.then(|| {
        enumerate_box(&diag)
            .into_iter()
            .map(|y| {
                // x = y · V⁻¹, weight = x · D
                let xs: Vec<i64> = (0..k)
                    .map(|j| (0..k).map(|i| y[i] * v_inv[i][j]).sum::<i128>() as i64)
                    .collect();
                Weight::combination(&xs, &d_basis, datum.rank)
            })
            .collect()
    });

    Ok(Census {
        finite,
        free_rank,
        complement_dimension: dual.complement_dimension,
        invariant_factors,
        reps,
        order: finite.then_some(order),
    })
}

/// All `y` with `0 ≤ yᵢ < boundᵢ`, lexicographically.
fn enumerate_box(bounds: &[i128]) -> Vec<Vec<i128>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..b).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}
