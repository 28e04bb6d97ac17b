//! Commutative algebra and superalgebra structures on lattice sums of
//! simple currents.
//!
//! A structure on `⊕_{λ∈L} ℂ_λ` is a table of scalars `t_{λ,μ} = q^{e(λ,μ)}`.
//! Everything here works with the exponents `e`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::lattice::{adjoin, RationalLattice};
use crate::linalg::{self, RMatrix};
use crate::oracle::CoefficientBox;
use crate::rational::{int, is_multiple_of, serde_rational, ExponentModL, Rational};
use crate::weight::Weight;

/// An algebra `𝒜_L`, or the superalgebra `𝒜_{L^μ}` when `mu` is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub datum: CartanDatum,
    pub lattice: RationalLattice,
    pub mu: Option<Weight>,
    extended: RationalLattice,
    basis: Vec<Weight>,
    odd_index: Option<usize>,
}

impl AlgebraSpec {
    /// Validates that every generator (and `mu`) lies in 𝓛 and, for a
    /// superalgebra, that `mu ∉ L` and `2mu ∈ L`.
    pub fn new(datum: CartanDatum, generators: Vec<Weight>, mu: Option<Weight>) -> Result<Self> {
        let n = datum.rank;
        for g in generators.iter().chain(mu.iter()) {
            g.expect_dim(n)?;
            if !datum.in_simple_current_lattice(g) {
                return Err(Error::NotInSimpleCurrentLattice(g.to_string()));
            }
        }
        let lattice = RationalLattice::new(n, generators)?;
        let (extended, basis, odd_index) = match &mu {
            None => {
                let basis = if lattice.generators_independent() {
                    lattice.generators().to_vec()
                } else {
                    lattice.basis()
                };
                (lattice.clone(), basis, None)
            }
            Some(m) => {
                let adj = adjoin(&lattice, m)?;
                if adj.already_contained || !adj.double_contained {
                    return Err(Error::MuNotHalfOdd(format!(
                        "mu = {m}: mu in L is {}, 2mu in L is {}",
                        adj.already_contained, adj.double_contained
                    )));
                }
                let basis = parity_adapted_basis(&lattice, &adj.lattice);
                let odd = basis.len() - 1;
                (adj.lattice, basis, Some(odd))
            }
        };
        Ok(Self {
            datum,
            lattice,
            mu,
            extended,
            basis,
            odd_index,
        })
    }

    /// `L^μ`, equal to `L` when there is no odd generator.
    pub fn extended_lattice(&self) -> &RationalLattice {
        &self.extended
    }

    /// The ordered basis in which structure constants are written. When an
    /// odd generator is present the last basis vector is odd and the rest
    /// lie in `L`.
    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn odd_index(&self) -> Option<usize> {
        self.odd_index
    }

    /// Coordinates of `λ` in [`AlgebraSpec::basis`].
    pub fn coordinates(&self, lambda: &Weight) -> Result<Vec<i64>> {
        lambda.expect_dim(self.datum.rank)?;
        let m: RMatrix = self.basis.iter().map(|b| b.coords().to_vec()).collect();
        let x = linalg::solve_in_row_span(&m, lambda.coords())
            .filter(|x| x.iter().all(Rational::is_integer))
            .ok_or_else(|| Error::NotInLattice(lambda.to_string()))?;
        Ok(x.iter().map(|c| c.to_integer() as i64).collect())
    }

    pub fn weight_of(&self, coeffs: &[i64]) -> Weight {
        Weight::combination(coeffs, &self.basis, self.datum.rank)
    }

    /// Parity of a coefficient vector: odd iff the odd coordinate is odd.
    pub fn is_odd(&self, coeffs: &[i64]) -> bool {
        self.odd_index.is_some_and(|k| coeffs[k].rem_euclid(2) == 1)
    }

    /// `Σₖ ⟨λ^{>k}, μᵏ⟩` for `λ = Σ nᵢbᵢ`, `μ = Σ mᵢbᵢ`, where
    /// `λ^{>k} = Σ_{i>k} nᵢbᵢ` and `μᵏ = mₖbₖ`.
    pub fn structure_constant_exponent(&self, lambda: &Weight, mu: &Weight) -> Result<ExponentModL> {
        let n = self.coordinates(lambda)?;
        let m = self.coordinates(mu)?;
        Ok(self.structure_constant_from_coeffs(&n, &m))
    }

    pub fn structure_constant_from_coeffs(&self, n: &[i64], m: &[i64]) -> ExponentModL {
        let mut acc = Rational::from_integer(0);
        for k in 0..self.basis.len() {
            if m[k] == 0 {
                continue;
            }
            for i in k + 1..self.basis.len() {
                if n[i] != 0 {
                    acc += int((n[i] * m[k]) as i128) * self.datum.form(&self.basis[i], &self.basis[k]);
                }
            }
        }
        self.datum.exponent(acc)
    }

    /// Even lattice test on the user's generators of `L`: `⟨γᵢ,γᵢ⟩ ∈ ℓℤ`
    /// and `2⟨γᵢ,γⱼ⟩ ∈ ℓℤ`.
    pub fn check_commutative(&self) -> CommutativityVerdict {
        let gens = self.lattice.generators();
        let ell = self.datum.ell_rational();
        for i in 0..gens.len() {
            for j in i..gens.len() {
                let p = self.datum.form(&gens[i], &gens[j]);
                let (value, condition) = if i == j {
                    (p, "<g_i,g_i> in ell Z")
                } else {
                    (int(2) * p, "2<g_i,g_j> in ell Z")
                };
                if !is_multiple_of(&value, &ell) {
                    return CommutativityVerdict {
                        commutative: false,
                        witness: Some(Witness {
                            i,
                            j,
                            value,
                            condition: condition.to_string(),
                        }),
                    };
                }
            }
        }
        CommutativityVerdict {
            commutative: true,
            witness: None,
        }
    }

    /// The superalgebra conditions: `L` even, `2⟨μ,μ⟩ ∈ ℓℤ ∖ 2ℓℤ`, and
    /// `2⟨μ,γᵢ⟩ ∈ ℓℤ` for all generators.
    pub fn check_supercommutative(&self) -> Result<SuperVerdict> {
        let mu = self
            .mu
            .as_ref()
            .ok_or_else(|| Error::MuNotHalfOdd("no odd generator given".into()))?;
        let ell = self.datum.ell_rational();
        let even = self.check_commutative();
        let mut reasons = Vec::new();
        if let Some(w) = &even.witness {
            reasons.push(format!(
                "L is not even: generators {} and {} give {} outside ell Z",
                w.i,
                w.j,
                crate::rational::format_rational(&w.value)
            ));
        }
        let mm = int(2) * self.datum.form(mu, mu);
        if !is_multiple_of(&mm, &ell) || is_multiple_of(&mm, &(int(2) * ell)) {
            reasons.push(format!(
                "2<mu,mu> = {} is not in ell Z minus 2 ell Z",
                crate::rational::format_rational(&mm)
            ));
        }
        for (i, g) in self.lattice.generators().iter().enumerate() {
            let v = int(2) * self.datum.form(mu, g);
            if !is_multiple_of(&v, &ell) {
                reasons.push(format!(
                    "2<mu,g_{i}> = {} is not in ell Z",
                    crate::rational::format_rational(&v)
                ));
            }
        }
        Ok(SuperVerdict {
            supercommutative: reasons.is_empty(),
            even_part: even,
            reasons,
        })
    }

    /// The (super)commutativity verdict matching the spec's shape.
    pub fn is_valid(&self) -> bool {
        match self.mu {
            None => self.check_commutative().commutative,
            Some(_) => self.check_supercommutative().is_ok_and(|v| v.supercommutative),
        }
    }

    /// `AlgebraInvalid` unless the spec passes its check.
    pub fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            let what = if self.mu.is_some() { "supercommutative" } else { "commutative" };
            Err(Error::AlgebraInvalid(format!("spec is not {what}")))
        }
    }
}

/// The rows of `L^μ`'s Hermite basis, reorganised so that all but the last
/// lie in `L` and the last is odd. Such a basis exists since `L^μ / L` has
/// order two.
fn parity_adapted_basis(lattice: &RationalLattice, extended: &RationalLattice) -> Vec<Weight> {
    let rows = extended.basis();
    let odd: Vec<bool> = rows.iter().map(|b| !lattice.contains(b)).collect();
    let first = odd.iter().position(|&o| o).expect("mu is not in L, so some basis row is odd");
    let mut out = Vec::with_capacity(rows.len());
    for (i, b) in rows.iter().enumerate() {
        if i == first {
            continue;
        }
        if odd[i] {
            out.push(b - &rows[first]);
        } else {
            out.push(b.clone());
        }
    }
    out.push(rows[first].clone());
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    #[serde(with = "serde_rational")]
    pub value: Rational,
    pub condition: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutativityVerdict {
    pub commutative: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperVerdict {
    pub supercommutative: bool,
    pub even_part: CommutativityVerdict,
    pub reasons: Vec<String>,
}

/// Exponents `e(λ, μ)` for coefficient vectors in `[-b, b]^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    pub bound: i64,
    basis: Vec<Weight>,
    odd_index: Option<usize>,
    modulus: i64,
    entries: BTreeMap<(Vec<i64>, Vec<i64>), ExponentModL>,
}

impl CocycleTable {
    fn empty(spec: &AlgebraSpec, bound: i64) -> Self {
        Self {
            bound,
            basis: spec.basis.clone(),
            odd_index: spec.odd_index,
            modulus: spec.datum.ell,
            entries: BTreeMap::new(),
        }
    }

    /// The table of [`AlgebraSpec::structure_constant_exponent`] on the box.
    pub fn normal_form(spec: &AlgebraSpec, bound: i64) -> Self {
        let mut t = Self::empty(spec, bound);
        let bx = CoefficientBox::new(bound, spec.basis.len());
        for a in bx.iter() {
            for c in bx.iter() {
                let e = spec.structure_constant_from_coeffs(&a, &c);
                t.entries.insert((a.clone(), c), e);
            }
        }
        t
    }

    /// The table with every exponent zero.
    pub fn zeros(spec: &AlgebraSpec, bound: i64) -> Self {
        let mut t = Self::empty(spec, bound);
        let bx = CoefficientBox::new(bound, spec.basis.len());
        for a in bx.iter() {
            for c in bx.iter() {
                t.entries.insert((a.clone(), c), ExponentModL::zero(spec.datum.ell));
            }
        }
        t
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn get(&self, a: &[i64], c: &[i64]) -> Option<&ExponentModL> {
        self.entries.get(&(a.to_vec(), c.to_vec()))
    }

    pub fn set(&mut self, a: &[i64], c: &[i64], e: ExponentModL) {
        self.entries.insert((a.to_vec(), c.to_vec()), e);
    }

    pub fn remove(&mut self, a: &[i64], c: &[i64]) -> Option<ExponentModL> {
        self.entries.remove(&(a.to_vec(), c.to_vec()))
    }

    /// Adds `delta` to the exponent at `(a, c)`.
    pub fn shift(&mut self, a: &[i64], c: &[i64], delta: Rational) {
        let m = self.modulus;
        let e = self.entries.entry((a.to_vec(), c.to_vec())).or_insert_with(|| ExponentModL::zero(m));
        *e = &*e + &ExponentModL::new(delta, m);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Vec<i64>, Vec<i64>), &ExponentModL)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplies by the coboundary of `psi`: `e + ψ(a+c) − ψ(a) − ψ(c)`.
    /// `psi` must be zero at the origin and defined on the doubled box.
    pub fn perturbed_by(&self, psi: &BTreeMap<Vec<i64>, ExponentModL>) -> Result<Self> {
        let look = |c: &[i64]| {
            psi.get(c)
                .cloned()
                .ok_or_else(|| Error::IncompleteTable(format!("psi at {c:?}")))
        };
        let mut out = self.clone();
        for ((a, c), e) in out.entries.iter_mut() {
            let s = add(a, c);
            *e = &(&(&*e + &look(&s)?) - &look(a)?) - &look(c)?;
        }
        Ok(out)
    }

    fn in_box(&self, c: &[i64]) -> bool {
        c.iter().all(|x| x.abs() <= self.bound)
    }

    fn need(&self, a: &[i64], c: &[i64]) -> Result<&ExponentModL> {
        self.get(a, c)
            .ok_or_else(|| Error::IncompleteTable(format!("e({a:?}, {c:?})")))
    }

    fn weight_of(&self, coeffs: &[i64], dim: usize) -> Weight {
        Weight::combination(coeffs, &self.basis, dim)
    }

    fn is_odd(&self, coeffs: &[i64]) -> bool {
        self.odd_index.is_some_and(|k| coeffs[k].rem_euclid(2) == 1)
    }
}

fn add(a: &[i64], c: &[i64]) -> Vec<i64> {
    a.iter().zip(c).map(|(x, y)| x + y).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Unit,
    Associativity,
    Commutativity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// The coefficient vectors involved: one for the unit law, two for
    /// commutativity, three for associativity.
    pub weights: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocycleVerdict {
    /// Unit and associativity hold.
    pub valid: bool,
    /// The braided commutativity relation holds.
    pub commutative: bool,
    /// First unit or associativity failure, else first commutativity failure.
    pub first_violation: Option<Violation>,
}

/// Checks unit, associativity and (super)commutativity on every in-box
/// configuration whose entries the table is required to contain.
pub fn cocycle_check(table: &CocycleTable, datum: &CartanDatum) -> Result<CocycleVerdict> {
    let m = table.dimension();
    let bx = CoefficientBox::new(table.bound, m);
    let zero = vec![0; m];
    let mut structural: Option<Violation> = None;
    let mut commut: Option<Violation> = None;

    for a in bx.iter() {
        if structural.is_none()
            && (!table.need(&a, &zero)?.is_zero() || !table.need(&zero, &a)?.is_zero())
        {
            structural = Some(Violation {
                kind: ViolationKind::Unit,
                weights: vec![a.clone()],
            });
        }
    }

    for a in bx.iter() {
        let wa = table.weight_of(&a, datum.rank);
        for c in bx.iter() {
            if commut.is_none() {
                let mut rhs = table.need(&c, &a)? + &datum.exponent(datum.form(&wa, &table.weight_of(&c, datum.rank)));
                if table.is_odd(&a) && table.is_odd(&c) {
                    rhs = rhs + ExponentModL::minus_one(table.modulus);
                }
                if *table.need(&a, &c)? != rhs {
                    commut = Some(Violation {
                        kind: ViolationKind::Commutativity,
                        weights: vec![a.clone(), c.clone()],
                    });
                }
            }
            if structural.is_some() {
                continue;
            }
            let ac = add(&a, &c);
            if !table.in_box(&ac) {
                continue;
            }
            for d in bx.iter() {
                let cd = add(&c, &d);
                if !table.in_box(&cd) {
                    continue;
                }
                let lhs = table.need(&ac, &d)? + table.need(&a, &c)?;
                let rhs = table.need(&a, &cd)? + table.need(&c, &d)?;
                if lhs != rhs {
                    structural = Some(Violation {
                        kind: ViolationKind::Associativity,
                        weights: vec![a.clone(), c.clone(), d],
                    });
                    break;
                }
            }
        }
    }
    Ok(CocycleVerdict {
        valid: structural.is_none(),
        commutative: commut.is_none(),
        first_violation: structural.or(commut),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeResult {
    pub phi: BTreeMap<Vec<i64>, ExponentModL>,
    pub normalized: CocycleTable,
}

/// Finds the gauge `φ` with `φ_0 = 0` and `φ_{γᵢ} = 0` that brings a valid
/// table to normal form on the box.
///
/// Along each axis `φ_{nγ} = φ_{(n−1)γ} + φ_γ − e((n−1)γ, γ)`, run upward
/// for `n > 1` and downward (the same relation at `n + 1`) for `n < 0`. A
/// vector with several non-zero coefficients is split off at its last one.
/// The normalized table `e + φ(a+c) − φ(a) − φ(c)` covers the pairs whose
/// sum stays in the box.
pub fn gauge_normalize(table: &CocycleTable, spec: &AlgebraSpec) -> Result<GaugeResult> {
    let verdict = cocycle_check(table, &spec.datum)?;
    if !verdict.valid {
        return Err(Error::CocycleInvalid(format!("{:?}", verdict.first_violation)));
    }
    let m = table.dimension();
    let b = table.bound;
    let ell = table.modulus;
    let zero = ExponentModL::zero(ell);
    let unit = |k: usize, n: i64| {
        let mut v = vec![0; m];
        v[k] = n;
        v
    };

    // Axis values: axis[k][n + b] = φ(n γ_k).
    let mut axis: Vec<Vec<ExponentModL>> = vec![vec![zero.clone(); (2 * b + 1) as usize]; m];
    for (k, row) in axis.iter_mut().enumerate() {
        let at = |n: i64| (n + b) as usize;
        if b >= 1 {
            row[at(1)] = zero.clone();
        }
        for n in 2..=b {
            let t = table.need(&unit(k, n - 1), &unit(k, 1))?.clone();
            row[at(n)] = &(&row[at(n - 1)] + &row[at(1)]) - &t;
        }
        for n in (-b..=-1).rev() {
            let t = table.need(&unit(k, n), &unit(k, 1))?.clone();
            row[at(n)] = &(&row[at(n + 1)] - &row[at(1)]) + &t;
        }
    }

    let mut phi: BTreeMap<Vec<i64>, ExponentModL> = BTreeMap::new();
    // Fill by support size so that `head` is always known.
    let mut order: Vec<Vec<i64>> = CoefficientBox::new(b, m).iter().collect();
    order.sort_by_key(|c| c.iter().filter(|&&x| x != 0).count());
    for c in order {
        let value = match c.iter().rposition(|&x| x != 0) {
            None => zero.clone(),
            Some(k) => {
                let mut head = c.clone();
                head[k] = 0;
                let tail = unit(k, c[k]);
                let ax = &axis[k][(c[k] + b) as usize];
                if head.iter().all(|&x| x == 0) {
                    ax.clone()
                } else {
                    let t = table.need(&head, &tail)?;
                    &(&phi[&head] + ax) - t
                }
            }
        };
        phi.insert(c, value);
    }

    let mut normalized = table.clone();
    normalized.entries.clear();
    for ((a, c), e) in table.entries() {
        let s = add(a, c);
        if let Some(ps) = phi.get(&s) {
            let v = &(&(e + ps) - &phi[a]) - &phi[c];
            normalized.entries.insert((a.clone(), c.clone()), v);
        }
    }
    Ok(GaugeResult { phi, normalized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Series;
    use crate::rational::frac;

    fn w(c: &[i128]) -> Weight {
        Weight::from_ints(c)
    }

    fn spec(series: Series, rank: usize, ell: i64, gens: Vec<Weight>, mu: Option<Weight>) -> Result<AlgebraSpec> {
        AlgebraSpec::new(CartanDatum::new(series, rank, ell).unwrap(), gens, mu)
    }

    fn a2_3q() -> AlgebraSpec {
        let d = CartanDatum::new(Series::A, 2, 6).unwrap();
        let gens = vec![d.simple_root(0).scale(3), d.simple_root(1).scale(3)];
        AlgebraSpec::new(d, gens, None).unwrap()
    }

    #[test]
    fn commutative_examples() {
        // α = 2ω for A1.
        let s = spec(Series::A, 1, 4, vec![w(&[4])], None).unwrap();
        assert!(s.check_commutative().commutative);
        let s = spec(Series::A, 1, 4, vec![w(&[2])], None).unwrap();
        let v = s.check_commutative();
        assert!(!v.commutative);
        let wit = v.witness.unwrap();
        assert_eq!((wit.i, wit.j, wit.value), (0, 0, int(2)));
        let s = spec(Series::A, 2, 5, vec![], None).unwrap();
        assert!(s.check_commutative().commutative);
    }

    #[test]
    fn generators_outside_current_lattice() {
        let e = spec(Series::A, 1, 4, vec![w(&[1])], None).unwrap_err();
        assert!(matches!(e, Error::NotInSimpleCurrentLattice(_)));
        let e = spec(Series::A, 1, 3, vec![Weight::new(vec![frac(3, 2)])], None);
        assert!(e.is_ok());
    }

    #[test]
    fn supercommutative_examples() {
        let s = spec(Series::A, 1, 4, vec![w(&[4])], Some(w(&[2]))).unwrap();
        let v = s.check_supercommutative().unwrap();
        assert!(v.supercommutative, "{:?}", v.reasons);
        assert_eq!(s.extended_lattice().basis(), vec![w(&[2])]);

        let s = spec(Series::A, 1, 6, vec![w(&[6])], Some(w(&[3]))).unwrap();
        let v = s.check_supercommutative().unwrap();
        assert!(!v.supercommutative);
        assert_eq!(v.reasons.len(), 1);

        let e = spec(Series::A, 1, 4, vec![w(&[4])], Some(w(&[4]))).unwrap_err();
        assert!(matches!(e, Error::MuNotHalfOdd(_)));
        let e = spec(Series::A, 1, 4, vec![w(&[8])], Some(w(&[2]))).unwrap_err();
        assert!(matches!(e, Error::MuNotHalfOdd(_)));
    }

    #[test]
    fn parity_adapted_basis_has_single_odd_vector() {
        // L = 4P in A2 at ℓ = 4 has index 4 in 2P, so pick μ = 2ω₁ + 2ω₂.
        let d = CartanDatum::new(Series::A, 2, 8).unwrap();
        let s = AlgebraSpec::new(d, vec![w(&[8, 0]), w(&[0, 8])], Some(w(&[4, 4]))).unwrap();
        let basis = s.basis();
        assert_eq!(basis.len(), 2);
        assert!(s.lattice.contains(&basis[0]));
        assert!(!s.lattice.contains(&basis[1]));
        assert!(s.extended_lattice().contains(&w(&[4, 4])));
    }

    #[test]
    fn structure_constants() {
        let s = spec(Series::A, 1, 4, vec![w(&[4])], None).unwrap();
        assert!(s.structure_constant_exponent(&w(&[8]), &w(&[-12])).unwrap().is_zero());

        let s = a2_3q();
        let (g1, g2) = (s.basis()[0].clone(), s.basis()[1].clone());
        let e = s.structure_constant_exponent(&g2, &g1).unwrap();
        assert_eq!(*e.value(), int(3));
        assert_eq!(e.scalar(), "q^{3}");
        assert!(s.structure_constant_exponent(&g1, &g2).unwrap().is_zero());
        let err = s.structure_constant_exponent(&g1.scale_by(&frac(1, 3)), &g2).unwrap_err();
        assert!(matches!(err, Error::NotInLattice(_)));
    }

    #[test]
    fn dependent_generators_use_the_hermite_basis() {
        let s = spec(Series::A, 1, 4, vec![w(&[8]), w(&[12])], None).unwrap();
        assert_eq!(s.basis(), &[w(&[4])]);
        assert!(s.check_commutative().commutative);
    }

    #[test]
    fn cocycle_examples() {
        let s = a2_3q();
        let t = CocycleTable::normal_form(&s, 2);
        let v = cocycle_check(&t, &s.datum).unwrap();
        assert!(v.valid && v.commutative);

        let mut bad = t.clone();
        bad.shift(&[1, 0], &[0, 1], int(1));
        let v = cocycle_check(&bad, &s.datum).unwrap();
        assert!(!v.valid);
        assert_eq!(v.first_violation.unwrap().kind, ViolationKind::Associativity);

        let s = spec(Series::A, 1, 4, vec![w(&[2])], None).unwrap();
        let z = CocycleTable::zeros(&s, 1);
        let v = cocycle_check(&z, &s.datum).unwrap();
        assert!(v.valid && !v.commutative);
        assert_eq!(v.first_violation.unwrap().kind, ViolationKind::Commutativity);
    }

    #[test]
    fn unit_violation_and_missing_entries() {
        let s = a2_3q();
        let mut t = CocycleTable::normal_form(&s, 1);
        t.shift(&[0, 0], &[1, 1], int(2));
        let v = cocycle_check(&t, &s.datum).unwrap();
        assert_eq!(v.first_violation.unwrap().kind, ViolationKind::Unit);
        let mut t = CocycleTable::normal_form(&s, 1);
        t.remove(&[1, 0], &[0, 1]);
        assert!(matches!(cocycle_check(&t, &s.datum), Err(Error::IncompleteTable(_))));
    }

    #[test]
    fn superalgebra_table_satisfies_the_sign_law() {
        let s = spec(Series::A, 1, 4, vec![w(&[4])], Some(w(&[2]))).unwrap();
        let t = CocycleTable::normal_form(&s, 2);
        let v = cocycle_check(&t, &s.datum).unwrap();
        assert!(v.valid && v.commutative, "{:?}", v.first_violation);
    }

    #[test]
    fn gauge_of_normal_form_is_trivial() {
        let s = a2_3q();
        let t = CocycleTable::normal_form(&s, 2);
        let g = gauge_normalize(&t, &s).unwrap();
        assert!(g.phi.values().all(ExponentModL::is_zero));
        for ((a, c), e) in g.normalized.entries() {
            assert_eq!(e, t.get(a, c).unwrap());
        }
    }

    #[test]
    fn gauge_removes_a_linear_coboundary() {
        let s = a2_3q();
        let t = CocycleTable::normal_form(&s, 2);
        let mut psi = BTreeMap::new();
        for c in CoefficientBox::new(4, 2).iter() {
            let v = int(c[0] as i128);
            psi.insert(c, ExponentModL::new(v, 6));
        }
        let p = t.perturbed_by(&psi).unwrap();
        for ((a, c), e) in p.entries() {
            assert_eq!(e, t.get(a, c).unwrap());
        }
    }

    #[test]
    fn gauge_recovers_normal_form_after_quadratic_coboundary() {
        let s = a2_3q();
        let t = CocycleTable::normal_form(&s, 2);
        let mut psi = BTreeMap::new();
        for c in CoefficientBox::new(4, 2).iter() {
            let v = int((c[0] * c[0] + 2 * c[0] * c[1] + 5 * c[1]) as i128);
            psi.insert(c, ExponentModL::new(v, 6));
        }
        let p = t.perturbed_by(&psi).unwrap();
        assert_ne!(p, t);
        let g = gauge_normalize(&p, &s).unwrap();
        assert!(!g.normalized.is_empty());
        for ((a, c), e) in g.normalized.entries() {
            assert_eq!(e, t.get(a, c).unwrap(), "at {a:?}, {c:?}");
        }
    }

    #[test]
    fn gauge_rejects_invalid_tables() {
        let s = a2_3q();
        let mut t = CocycleTable::normal_form(&s, 1);
        t.shift(&[1, 0], &[0, 1], int(1));
        assert!(matches!(gauge_normalize(&t, &s), Err(Error::CocycleInvalid(_))));
    }
}
