//! Commutativity and supercommutativity tests for lattice algebras.

use uproll::algebra::AlgebraSpec;
use uproll::{CartanDatum, Series, Weight};

fn show(name: &str, spec: &AlgebraSpec) -> uproll::Result<()> {
    if spec.mu.is_none() {
        let v = spec.check_commutative();
        println!("{name}: commutative = {}", v.commutative);
        if let Some(w) = &v.witness {
            println!("  witness ({}, {}): {}", w.i, w.j, w.condition);
        }
        return Ok(());
    }
    let v = spec.check_supercommutative()?;
    println!("{name}: even part commutative = {}, supercommutative = {}", v.even_part.commutative, v.supercommutative);
    if let Some(w) = &v.even_part.witness {
        println!("  witness ({}, {}): {}", w.i, w.j, w.condition);
    }
    for r in &v.reasons {
        println!("  {r}");
    }
    Ok(())
}

fn main() -> uproll::Result<()> {
    let a1 = |ell| CartanDatum::new(Series::A, 1, ell);
    let w = |n: i128| Weight::from_ints(&[n]);

    show("A1, L = <4w>, ell = 4", &AlgebraSpec::new(a1(4)?, vec![w(4)], None)?)?;
    show("A1, L = <2w>, ell = 4", &AlgebraSpec::new(a1(4)?, vec![w(2)], None)?)?;
    show("A1, L = <4w>, mu = 2w, ell = 4", &AlgebraSpec::new(a1(4)?, vec![w(4)], Some(w(2)))?)?;
    show("A1, L = <6w>, mu = 3w, ell = 6", &AlgebraSpec::new(a1(6)?, vec![w(6)], Some(w(3)))?)?;

    let spec = AlgebraSpec::new(a1(4)?, vec![w(4)], None)?;
    let e = spec.structure_constant_exponent(&w(4), &w(8))?;
    println!("e(4w, 8w) = {e}");
    Ok(())
}
