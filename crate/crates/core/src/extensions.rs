//! The triplet algebra `𝒜_{rQ}` and the Heisenberg-augmented algebra
//! `𝔅^a_L = ⊕_{λ∈L} ℂ_λ ⊠ F_{aλ}`.
//!
//! A Fock weight `aγ̃` is stored as `γ̃`; only `a²` ever enters a pairing, so
//! with `a² = −1/r` every number stays rational.

use std::fmt;

use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::cartan::{CartanDatum, Series};
use crate::error::{Error, Result};
use crate::lattice::RationalLattice;
use crate::localmod::{local_report, LocalReport, RibbonVerdict};
use crate::rational::{frac, int, is_multiple_of, serde_rational, ExponentModL, Rational};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripletReport {
    pub series: Series,
    pub rank: usize,
    pub r: i64,
    pub commutative: bool,
    pub report: LocalReport,
    pub expected_order: i128,
    pub order: Option<i128>,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// `𝒜_{rQ}` at `ℓ = 2r` for simply-laced `𝔤`, checked against the count
/// `det(A)·rⁿ`.
pub fn triplet_report(series: Series, rank: usize, r: i64) -> Result<TripletReport> {
    if !series.is_simply_laced() {
        return Err(Error::NonADESeries(series.to_string()));
    }
    let datum = CartanDatum::new(series, rank, 2 * r)?;
    let gens = datum.simple_roots().iter().map(|a| a.scale(r as i128)).collect();
    let expected_order = datum.cartan_determinant() * (r as i128).pow(rank as u32);
    let spec = AlgebraSpec::new(datum, gens, None)?;
    let commutative = spec.check_commutative().commutative;
    let report = local_report(&spec)?;
    let order = report.census.order;
    Ok(TripletReport {
        series,
        rank,
        r,
        commutative,
        expected_order,
        order,
        matches: order == Some(expected_order),
        report,
    })
}

/// A weight of `ℂ_qg ⊠ F_{a·fock_tilde}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExtWeight {
    pub qg: Weight,
    pub fock_tilde: Weight,
}

impl ExtWeight {
    pub fn new(qg: Weight, fock_tilde: Weight) -> Self {
        Self { qg, fock_tilde }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(Weight::zero(dim), Weight::zero(dim))
    }

    /// The summand `ℂ_λ ⊠ F_{aλ}` of the algebra.
    pub fn diagonal(lambda: Weight) -> Self {
        Self::new(lambda.clone(), lambda)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.qg + &other.qg, &self.fock_tilde + &other.fock_tilde)
    }
}

impl fmt::Debug for ExtWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.qg, self.fock_tilde)
    }
}

impl fmt::Display for ExtWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BqSpec {
    pub datum: CartanDatum,
    pub lattice: RationalLattice,
    #[serde(with = "serde_rational")]
    pub a_squared: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransparencyVerdict {
    pub transparent: bool,
    /// First probe with non-trivial monodromy, if any.
    pub failing_probe: Option<ExtWeight>,
    pub probes_checked: usize,
}

impl BqSpec {
    /// Requires `ℓ` even and generators in 𝓛. `a_squared` defaults to `−1/r`.
    pub fn new(datum: CartanDatum, generators: Vec<Weight>, a_squared: Option<Rational>) -> Result<Self> {
        if datum.ell % 2 != 0 {
            return Err(Error::OddEll(datum.ell));
        }
        for g in &generators {
            g.expect_dim(datum.rank)?;
            if !datum.in_simple_current_lattice(g) {
                return Err(Error::NotInSimpleCurrentLattice(g.to_string()));
            }
        }
        let a_squared = a_squared.unwrap_or_else(|| frac(-1, datum.r as i128));
        let lattice = RationalLattice::new(datum.rank, generators)?;
        Ok(Self {
            datum,
            lattice,
            a_squared,
        })
    }

    /// `L = rP` at `ℓ = 2r` with `a² = −1/r`.
    pub fn standard(series: Series, rank: usize, r: i64) -> Result<Self> {
        let datum = CartanDatum::new(series, rank, 2 * r)?;
        let gens = (0..rank).map(|i| datum.fundamental_weight(i).scale(r as i128)).collect();
        Self::new(datum, gens, None)
    }

    fn modulus(&self) -> i64 {
        2 * self.datum.r
    }

    /// The Heisenberg factor `2r a²` multiplying `⟨γ̃, γ̃'⟩` in monodromies.
    fn coupling(&self) -> Rational {
        int(2 * self.datum.r as i128) * self.a_squared
    }

    /// `(1+ra²)⟨λ,λ'⟩ ∈ rℤ` and `(1+ra²)⟨λ,λ⟩ ∈ 2rℤ` on generators.
    pub fn check_commutative(&self) -> bool {
        let r = int(self.datum.r as i128);
        let pre = int(1) + r * self.a_squared;
        let gens = self.lattice.generators();
        gens.iter().enumerate().all(|(i, x)| {
            is_multiple_of(&(pre * self.datum.form(x, x)), &(int(2) * r))
                && gens[i + 1..]
                    .iter()
                    .all(|y| is_multiple_of(&(pre * self.datum.form(x, y)), &r))
        })
    }

    /// `2⟨qg,qg'⟩ + 2r a²⟨γ̃,γ̃'⟩` modulo `2r`.
    pub fn monodromy(&self, w: &ExtWeight, other: &ExtWeight) -> ExponentModL {
        let d = &self.datum;
        let v = int(2) * d.form(&w.qg, &other.qg) + self.coupling() * d.form(&w.fock_tilde, &other.fock_tilde);
        ExponentModL::new(v, self.modulus())
    }

    /// `⟨qg, qg + 2(1−r)ρ⟩ + r a²⟨γ̃,γ̃⟩` modulo `2r`.
    pub fn twist(&self, w: &ExtWeight) -> ExponentModL {
        let d = &self.datum;
        let shift = d.rho.scale(2 * (1 - d.r as i128));
        let v = d.form(&w.qg, &(&w.qg + &shift))
            + int(d.r as i128) * self.a_squared * d.form(&w.fock_tilde, &w.fock_tilde);
        ExponentModL::new(v, self.modulus())
    }

    /// Trivial monodromy with every summand `(g, g)` of a generator.
    ///
    /// For `L = rP` in simply-laced type and `a² = −1/r` this is
    /// `qg − fock_tilde ∈ Q`.
    pub fn is_local(&self, w: &ExtWeight) -> bool {
        self.lattice
            .generators()
            .iter()
            .all(|g| self.monodromy(w, &ExtWeight::diagonal(g.clone())).is_zero())
    }

    fn require_local(&self, w: &ExtWeight) -> Result<()> {
        if self.is_local(w) {
            Ok(())
        } else {
            Err(Error::NotLocal(w.to_string()))
        }
    }

    /// `qg' − qg = γ̃' − γ̃ ∈ L`: both differ by one algebra summand.
    pub fn equivalent(&self, w: &ExtWeight, other: &ExtWeight) -> Result<bool> {
        self.require_local(w)?;
        self.require_local(other)?;
        let shift = &other.qg - &w.qg;
        Ok(shift == &other.fock_tilde - &w.fock_tilde && self.lattice.contains(&shift))
    }

    /// Local probes `(ωᵢ+κ, ωᵢ+κ)` and `(κ, κ)` for a fixed list of `κ`.
    pub fn probes(&self, count: usize) -> Vec<ExtWeight> {
        let n = self.datum.rank;
        let kappas: Vec<Weight> = (0..count.max(1))
            .map(|j| {
                let coords = (0..n)
                    .map(|i| frac(((i + j) % 3) as i128 + 1, j as i128 + 2))
                    .collect();
                Weight::new(coords)
            })
            .collect();
        let mut out = Vec::new();
        for k in &kappas {
            out.push(ExtWeight::diagonal(k.clone()));
            for i in 0..n {
                out.push(ExtWeight::diagonal(&self.datum.fundamental_weight(i) + k));
            }
        }
        out
    }

    /// Screens `w` against the probes, then decides exactly by comparing
    /// with the unit orbit.
    pub fn transparency(&self, w: &ExtWeight, probe_count: usize) -> Result<TransparencyVerdict> {
        self.require_local(w)?;
        let probes = self.probes(probe_count);
        for (i, p) in probes.iter().enumerate() {
            debug_assert!(self.is_local(p));
            if !self.monodromy(w, p).is_zero() {
                return Ok(TransparencyVerdict {
                    transparent: false,
                    failing_probe: Some(p.clone()),
                    probes_checked: i + 1,
                });
            }
        }
        Ok(TransparencyVerdict {
            transparent: self.equivalent(w, &ExtWeight::zero(self.datum.rank))?,
            failing_probe: None,
            probes_checked: probes.len(),
        })
    }

    pub fn transparent(&self, w: &ExtWeight, probe_count: usize) -> Result<bool> {
        Ok(self.transparency(w, probe_count)?.transparent)
    }

    /// Ribbon if `r` is odd or `ρ ∈ Q`.
    pub fn ribbon(&self) -> RibbonVerdict {
        if self.datum.r % 2 == 1 || self.datum.in_root_lattice(&self.datum.rho) {
            RibbonVerdict::Ribbon
        } else {
            RibbonVerdict::Inconclusive
        }
    }
}

pub fn bq_check_commutative(spec: &BqSpec) -> bool {
    spec.check_commutative()
}

pub fn bq_is_local(spec: &BqSpec, w: &ExtWeight) -> bool {
    spec.is_local(w)
}

pub fn bq_equivalent(spec: &BqSpec, w: &ExtWeight, other: &ExtWeight) -> Result<bool> {
    spec.equivalent(w, other)
}

/// `2⟨qg,qg'⟩ − 2⟨γ̃,γ̃'⟩` modulo `2r`, the monodromy at `a² = −1/r`.
pub fn bq_monodromy_exponent(datum: &CartanDatum, w: &ExtWeight, other: &ExtWeight) -> ExponentModL {
    let v = int(2) * (datum.form(&w.qg, &other.qg) - datum.form(&w.fock_tilde, &other.fock_tilde));
    ExponentModL::new(v, 2 * datum.r)
}

/// `⟨qg, qg + 2(1−r)ρ⟩ − ⟨γ̃,γ̃⟩` modulo `2r`, the twist at `a² = −1/r`.
pub fn bq_twist_exponent(datum: &CartanDatum, w: &ExtWeight) -> Result<ExponentModL> {
    if datum.ell % 2 != 0 {
        return Err(Error::OddEll(datum.ell));
    }
    let shift = datum.rho.scale(2 * (1 - datum.r as i128));
    let v = datum.form(&w.qg, &(&w.qg + &shift)) - datum.form(&w.fock_tilde, &w.fock_tilde);
    Ok(ExponentModL::new(v, 2 * datum.r))
}

pub fn bq_transparent(spec: &BqSpec, w: &ExtWeight, probe_count: usize) -> Result<bool> {
    spec.transparent(w, probe_count)
}
