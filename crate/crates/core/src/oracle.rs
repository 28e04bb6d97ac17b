//! Deliberately naive brute-force checkers.
//!
//! Nothing here goes through the closed-form generator tests, the Hermite
//! basis, or the Smith form. They enumerate and compare.

use std::collections::{HashSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::extensions::{BqSpec, ExtWeight};
use crate::linalg;
use crate::rational::{int, lcm_of_denominators, reduce_mod, Rational};
use crate::weight::Weight;

/// All coefficient vectors in `[-bound, bound]^dimension`, lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientBox {
    pub bound: i64,
    pub dimension: usize,
}

impl CoefficientBox {
    pub fn new(bound: i64, dimension: usize) -> Self {
        assert!(bound >= 0, "box bound must be non-negative");
        Self { bound, dimension }
    }

    pub fn len(&self) -> usize {
        ((2 * self.bound + 1) as usize).pow(self.dimension as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> BoxIter {
        BoxIter {
            bound: self.bound,
            next: Some(vec![-self.bound; self.dimension]),
        }
    }
}

pub struct BoxIter {
    bound: i64,
    next: Option<Vec<i64>>,
}

impl Iterator for BoxIter {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.bound {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = -self.bound;
        }
        Some(current)
    }
}

fn gram_form(spec_gram: &[Vec<Rational>], x: &Weight, y: &Weight) -> Rational {
    let mut acc = Rational::zero();
    for (i, xi) in x.coords().iter().enumerate() {
        for (j, yj) in y.coords().iter().enumerate() {
            acc += xi * spec_gram[i][j] * yj;
        }
    }
    acc
}

fn divides(x: &Rational, step: &Rational) -> bool {
    (x / step).is_integer()
}

/// The full-lattice conditions `⟨λ,λ⟩ ∈ ℓℤ` and `2⟨λ,μ⟩ ∈ ℓℤ` for every
/// pair of combinations of the user's generators of `L` in the box.
pub fn brute_commutativity(spec: &AlgebraSpec, bound: i64) -> bool {
    let gens = spec.lattice.generators();
    let n = spec.datum.rank;
    let ell = int(spec.datum.ell as i128);
    let weights: Vec<Weight> = CoefficientBox::new(bound, gens.len())
        .iter()
        .map(|c| Weight::combination(&c, gens, n))
        .collect();
    let g = &spec.datum.gram;
    weights.iter().all(|x| {
        divides(&gram_form(g, x, x), &ell)
            && weights.iter().all(|y| divides(&(int(2) * gram_form(g, x, y)), &ell))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BruteCocycleReport {
    pub unit: bool,
    pub associative: bool,
    pub commutative: bool,
}

impl BruteCocycleReport {
    pub fn holds(&self) -> bool {
        self.unit && self.associative && self.commutative
    }
}

/// Rebuilds the normal-form exponents from the double sum and checks the
/// three defining congruences on every in-box triple, sums unrestricted.
pub fn brute_cocycle(spec: &AlgebraSpec, bound: i64) -> BruteCocycleReport {
    let basis = spec.basis();
    let m = basis.len();
    let g = &spec.datum.gram;
    let ell = int(spec.datum.ell as i128);
    let half = ell / int(2);
    let pair: Vec<Vec<Rational>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| gram_form(g, x, y)).collect())
        .collect();
    let odd = spec.odd_index();
    let e = |a: &[i64], c: &[i64]| -> Rational {
        let mut s = Rational::zero();
        for k in 0..m {
            for i in k + 1..m {
                s += int((a[i] * c[k]) as i128) * pair[i][k];
            }
        }
        s
    };
    let form = |a: &[i64], c: &[i64]| -> Rational {
        let mut s = Rational::zero();
        for i in 0..m {
            for k in 0..m {
                s += int((a[i] * c[k]) as i128) * pair[i][k];
            }
        }
        s
    };
    let is_odd = |a: &[i64]| odd.is_some_and(|k| a[k].rem_euclid(2) == 1);
    let cong = |x: Rational, y: Rational| divides(&(x - y), &ell);
    let sum = |a: &[i64], c: &[i64]| -> Vec<i64> { a.iter().zip(c).map(|(x, y)| x + y).collect() };

    let bx = CoefficientBox::new(bound, m);
    let zero = vec![0; m];
    let mut report = BruteCocycleReport {
        unit: true,
        associative: true,
        commutative: true,
    };
    for a in bx.iter() {
        report.unit &= cong(e(&a, &zero), Rational::zero()) && cong(e(&zero, &a), Rational::zero());
        for c in bx.iter() {
            let mut rhs = e(&c, &a) + form(&a, &c);
            if is_odd(&a) && is_odd(&c) {
                rhs += half;
            }
            report.commutative &= cong(e(&a, &c), rhs);
            for d in bx.iter() {
                let l = e(&sum(&a, &c), &d) + e(&a, &c);
                let r = e(&a, &sum(&c, &d)) + e(&c, &d);
                report.associative &= cong(l, r);
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "count")]
pub enum BruteCount {
    Exact(i128),
    /// The enumeration hit the point cap; at least this many cosets exist.
    LowerBound(i128),
}

impl BruteCount {
    pub fn value(&self) -> i128 {
        match *self {
            BruteCount::Exact(v) | BruteCount::LowerBound(v) => v,
        }
    }
}

/// Counts the cosets of `L^μ` in its scaled dual by enumeration.
///
/// With `B'` a full-rank set of generators of `L^μ`, `kℤⁿ ⊆ L^μ` for
/// `k` the common denominator of `B'⁻¹`, and the dual lies in `(1/N)ℤⁿ`
/// for `N` the common denominator of `(ℓ/2)(G B'ᵀ)⁻¹`. So every coset has a
/// representative on the grid `(1/N)ℤⁿ ∩ [0,k)ⁿ`. Grid points are tested
/// for duality directly; each new one opens a coset, whose points are the
/// translates by the closure of `L^μ` mod `kℤⁿ`.
///
/// At most `point_cap` grid points are visited.
pub fn brute_census_order(spec: &AlgebraSpec, point_cap: usize) -> Result<BruteCount> {
    let n = spec.datum.rank;
    let lat = spec.extended_lattice();
    let gens = lat.generators().to_vec();

    // Greedy full-rank subset.
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for g in &gens {
        let mut trial = chosen.clone();
        trial.push(g.coords().to_vec());
        if linalg::rank(&trial) > chosen.len() {
            chosen = trial;
        }
    }
    if chosen.len() < n {
        return Err(Error::InfiniteCensus);
    }
    if n == 0 {
        return Ok(BruteCount::Exact(1));
    }
    let inv = linalg::inverse(&chosen).expect("chosen rows are independent");
    let k = lcm_of_denominators(inv.iter().flatten());
    let gbt = linalg::mul(&spec.datum.gram, &linalg::transpose(&chosen));
    let half_ell = int(spec.datum.ell as i128) / int(2);
    let dual = linalg::scale(&linalg::inverse(&gbt).expect("definite form"), &half_ell);
    let big_n = lcm_of_denominators(dual.iter().flatten());

    let kk = int(k);
    let reduce = |w: &Weight| Weight::new(w.coords().iter().map(|c| reduce_mod(c, &kk)).collect());

    // Closure of L^μ modulo kℤⁿ by breadth-first search over generator steps.
    let mut closure: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    let origin = Weight::zero(n);
    closure.insert(origin.clone());
    queue.push_back(origin);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            for step in [g.clone(), -g] {
                let y = reduce(&(&x + &step));
                if closure.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }

    let ell = int(spec.datum.ell as i128);
    let in_dual = |y: &Weight| {
        gens.iter()
            .all(|g| divides(&(int(2) * gram_form(&spec.datum.gram, y, g)), &ell))
    };

    let side = (k * big_n) as i64;
    let mut covered: HashSet<Weight> = HashSet::new();
    let mut count: i128 = 0;
    let mut visited = 0usize;
    let mut complete = true;
    let mut idx = vec![0i64; n];
    'grid: loop {
        if visited >= point_cap {
            complete = false;
            break;
        }
        visited += 1;
        let y = Weight::new(idx.iter().map(|&i| Rational::new(i as i128, big_n)).collect());
        if !covered.contains(&y) && in_dual(&y) {
            count += 1;
            for c in &closure {
                covered.insert(reduce(&(&y + c)));
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                break 'grid;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < side {
                break;
            }
            idx[i] = 0;
        }
    }
    Ok(if complete {
        BruteCount::Exact(count)
    } else {
        BruteCount::LowerBound(count)
    })
}

/// Tests trivial monodromy of `w` against every local probe
/// `(x/denominator, x/denominator − β)` with `x ∈ [-bound, bound]ⁿ` and
/// `β` a root-lattice vector with coefficients in `[-bound, bound]`.
///
/// Locality of the probes is by construction when `L = rP` and `a² = −1/r`.
pub fn brute_bq_transparent(spec: &BqSpec, w: &ExtWeight, bound: i64, denominator: i128) -> bool {
    let n = spec.datum.rank;
    let roots = spec.datum.simple_roots();
    let two_r = int(2 * spec.datum.r as i128);
    let g = &spec.datum.gram;
    let coupling = int(2 * spec.datum.r as i128) * spec.a_squared;
    let bx = CoefficientBox::new(bound, n);
    let betas: Vec<Weight> = bx.iter().map(|c| Weight::combination(&c, &roots, n)).collect();
    bx.iter().all(|x| {
        let qg = Weight::new(x.iter().map(|&c| Rational::new(c as i128, denominator)).collect());
        betas.iter().all(|beta| {
            let ft = &qg - beta;
            let m = int(2) * gram_form(g, &w.qg, &qg) + coupling * gram_form(g, &w.fock_tilde, &ft);
            divides(&m, &two_r)
        })
    })
}
