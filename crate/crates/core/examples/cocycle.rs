//! Cocycle tables: the normal form, a gauge perturbation, and its undoing.

use std::collections::BTreeMap;

use uproll::algebra::{cocycle_check, gauge_normalize, AlgebraSpec, CocycleTable};
use uproll::oracle::CoefficientBox;
use uproll::rational::frac;
use uproll::{CartanDatum, ExponentModL, Series, Weight};

fn main() -> uproll::Result<()> {
    let d = CartanDatum::new(Series::A, 2, 4)?;
    let spec = AlgebraSpec::new(d.clone(), vec![Weight::from_ints(&[4, -2]), Weight::from_ints(&[-2, 4])], None)?;
    let bound = 2;
    let table = CocycleTable::normal_form(&spec, bound);
    println!("normal form, {} entries: {:?}", table.len(), cocycle_check(&table, &d)?);

    // Perturb by psi(a) = (a_1 + 2 a_2) / 3 on the doubled box.
    let mut psi = BTreeMap::new();
    for a in CoefficientBox::new(2 * bound, 2).iter() {
        psi.insert(a.clone(), ExponentModL::new(frac((a[0] + 2 * a[1]) as i128, 3), d.ell));
    }
    let perturbed = table.perturbed_by(&psi)?;
    println!("perturbed: {:?}", cocycle_check(&perturbed, &d)?.valid);

    let g = gauge_normalize(&perturbed, &spec)?;
    let back = g.normalized.entries().all(|((a, c), e)| table.get(a, c) == Some(e));
    println!("gauge recovered the normal form on {} entries: {back}", g.normalized.len());

    let mut broken = table.clone();
    broken.shift(&[1, 0], &[0, 1], frac(1, 2));
    let v = cocycle_check(&broken, &d)?;
    println!("one shifted entry: valid = {}, first violation {:?}", v.valid, v.first_violation);
    Ok(())
}
