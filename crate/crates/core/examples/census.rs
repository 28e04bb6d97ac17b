//! Scaled duals and the quotient census via the Smith form.

use uproll::lattice::{quotient_census, scaled_dual};
use uproll::{CartanDatum, RationalLattice, Series, Weight};

fn main() -> uproll::Result<()> {
    let d = CartanDatum::new(Series::A, 2, 4)?;
    let l = RationalLattice::new(2, vec![Weight::from_ints(&[4, -2]), Weight::from_ints(&[-2, 4])])?;
    let dual = scaled_dual(&d, &l)?;
    let c = quotient_census(&d, &dual, &l)?;
    println!("A2, L = 2Q at ell = 4");
    println!("  invariant factors {:?}, order {:?}", c.invariant_factors, c.order);
    for rep in c.reps.iter().flatten() {
        println!("  {rep}");
    }

    // A rank-one L leaves a free direction in its dual.
    let thin = RationalLattice::new(2, vec![Weight::from_ints(&[4, -2])])?;
    let c = quotient_census(&d, &scaled_dual(&d, &thin)?, &thin)?;
    println!(
        "rank-one L: finite = {}, complement dimension = {}, free rank = {}",
        c.finite, c.complement_dimension, c.free_rank
    );
    Ok(())
}
