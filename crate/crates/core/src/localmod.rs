//! Local modules over a (super)commutative lattice algebra: locality,
//! the census of simples, twists, monodromies, ribbon and Müger verdicts.

use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::lattice::{in_scaled_dual, quotient_census, scaled_dual, Census};
use crate::rational::{format_rational, int, is_multiple_of, ExponentModL};
use crate::weight::Weight;

/// `2⟨λ, g⟩ ∈ ℓℤ` for every generator `g` of `L^μ`.
pub fn is_local(spec: &AlgebraSpec, lambda: &Weight) -> Result<bool> {
    spec.require_valid()?;
    lambda.expect_dim(spec.datum.rank)?;
    Ok(in_scaled_dual(&spec.datum, spec.extended_lattice().generators(), lambda))
}

/// Simple local modules, indexed by `(ℓ/2)(L^μ)* / L^μ`.
pub fn simple_census(spec: &AlgebraSpec) -> Result<Census> {
    let lat = spec.extended_lattice();
    quotient_census(&spec.datum, &scaled_dual(&spec.datum, lat)?, lat)
}

/// `⟨λ, λ + 2(1−r)ρ⟩` modulo `ℓ`.
pub fn twist_exponent(datum: &CartanDatum, lambda: &Weight) -> ExponentModL {
    let shift = datum.rho.scale(2 * (1 - datum.r as i128));
    datum.exponent(datum.form(lambda, &(lambda + &shift)))
}

/// `2⟨λ, λ'⟩` modulo `ℓ`.
pub fn monodromy_exponent(datum: &CartanDatum, lambda: &Weight, other: &Weight) -> ExponentModL {
    datum.exponent(int(2) * datum.form(lambda, other))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RibbonVerdict {
    Ribbon,
    /// The sufficient condition fails; no claim either way.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RibbonReport {
    pub verdict: RibbonVerdict,
    /// Generators for which the sufficient condition fails.
    pub witnesses: Vec<String>,
}

/// Ribbon if `2(1−r)⟨γ,ρ⟩ ∈ ℓℤ` for all generators of `L` and, for a
/// superalgebra, `2(1−r)⟨μ,ρ⟩ ∈ (ℓ/2)ℤ`.
pub fn check_ribbon(spec: &AlgebraSpec) -> Result<RibbonReport> {
    spec.require_valid()?;
    let d = &spec.datum;
    let c = int(2 * (1 - d.r as i128));
    let mut witnesses = Vec::new();
    for (i, g) in spec.lattice.generators().iter().enumerate() {
        let v = c * d.form(g, &d.rho);
        if !is_multiple_of(&v, &d.ell_rational()) {
            witnesses.push(format!("2(1-r)<g_{i},rho> = {} not in ell Z", format_rational(&v)));
        }
    }
    if let Some(mu) = &spec.mu {
        let v = c * d.form(mu, &d.rho);
        if !is_multiple_of(&v, &d.half_ell()) {
            witnesses.push(format!("2(1-r)<mu,rho> = {} not in (ell/2) Z", format_rational(&v)));
        }
    }
    Ok(RibbonReport {
        verdict: if witnesses.is_empty() {
            RibbonVerdict::Ribbon
        } else {
            RibbonVerdict::Inconclusive
        },
        witnesses,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MugerReport {
    pub transparent_reps: Vec<Weight>,
    pub trivial: bool,
    /// `r ∤ 2dᵢ` for all `i`. When false, `trivial` only says that no
    /// non-unit simple is transparent.
    pub hypothesis_ok: bool,
}

/// Census reps `λ` with `⟨λ, γ⟩ ∈ (ℓ/2)ℤ` for every census rep `γ`.
pub fn muger_center(spec: &AlgebraSpec) -> Result<MugerReport> {
    let census = simple_census(spec)?;
    muger_from_census(&spec.datum, &census)
}

fn muger_from_census(datum: &CartanDatum, census: &Census) -> Result<MugerReport> {
    let reps = census.reps.as_ref().ok_or(Error::InfiniteCensus)?;
    let h = datum.half_ell();
    let transparent_reps: Vec<Weight> = reps
        .iter()
        .filter(|l| reps.iter().all(|g| is_multiple_of(&datum.form(l, g), &h)))
        .cloned()
        .collect();
    let trivial = transparent_reps.len() == 1 && transparent_reps[0].is_zero();
    Ok(MugerReport {
        transparent_reps,
        trivial,
        hypothesis_ok: datum.no_current_extensions(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistEntry {
    pub rep: Weight,
    pub twist: ExponentModL,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalReport {
    pub census: Census,
    /// One entry per census rep, in census order; empty when infinite.
    pub twists: Vec<TwistEntry>,
    pub ribbon: RibbonReport,
    /// Absent when the census is infinite.
    pub muger: Option<MugerReport>,
}

/// Census, twists, ribbon verdict and Müger scan, for a valid spec.
pub fn local_report(spec: &AlgebraSpec) -> Result<LocalReport> {
    spec.require_valid()?;
    let census = simple_census(spec)?;
    let twists = census
        .reps
        .iter()
        .flatten()
        .map(|rep| TwistEntry {
            rep: rep.clone(),
            twist: twist_exponent(&spec.datum, rep),
        })
        .collect();
    let muger = if census.finite {
        Some(muger_from_census(&spec.datum, &census)?)
    } else {
        None
    };
    Ok(LocalReport {
        ribbon: check_ribbon(spec)?,
        twists,
        muger,
        census,
    })
}
