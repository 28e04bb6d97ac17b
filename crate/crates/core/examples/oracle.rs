//! Brute-force cross-checks of the closed-form tests.

use uproll::algebra::AlgebraSpec;
use uproll::localmod::simple_census;
use uproll::oracle::{brute_census_order, brute_cocycle, brute_commutativity};
use uproll::{CartanDatum, Series, Weight};

fn main() -> uproll::Result<()> {
    let d = CartanDatum::new(Series::A, 2, 6)?;
    let spec = AlgebraSpec::new(d, vec![Weight::from_ints(&[6, -3]), Weight::from_ints(&[0, 3])], None)?;
    println!("closed form commutative: {}", spec.check_commutative().commutative);
    println!("brute commutative (box 3): {}", brute_commutativity(&spec, 3));
    println!("brute cocycle (box 2): {:?}", brute_cocycle(&spec, 2));
    if spec.is_valid() {
        println!("census order: Smith {:?}, brute {:?}", simple_census(&spec)?.order, brute_census_order(&spec, 1_000_000)?);
    }
    Ok(())
}
