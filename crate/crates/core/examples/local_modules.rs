//! Simple local modules, their twists, the ribbon test and the Müger centre.

use uproll::algebra::AlgebraSpec;
use uproll::localmod::{is_local, local_report};
use uproll::{CartanDatum, Series, Weight};

fn main() -> uproll::Result<()> {
    let d = CartanDatum::new(Series::A, 1, 6)?;
    let spec = AlgebraSpec::new(d, vec![Weight::from_ints(&[6])], None)?;
    println!("3w local: {}, 1w local: {}", is_local(&spec, &Weight::from_ints(&[3]))?, is_local(&spec, &Weight::from_ints(&[1]))?);

    let rep = local_report(&spec)?;
    println!("order {:?}", rep.census.order);
    for t in &rep.twists {
        println!("  {}  theta exponent {}", t.rep, t.twist);
    }
    println!("ribbon: {:?} {:?}", rep.ribbon.verdict, rep.ribbon.witnesses);
    if let Some(m) = &rep.muger {
        println!("transparent: {:?}, trivial = {}, hypothesis ok = {}", m.transparent_reps, m.trivial, m.hypothesis_ok);
    }
    Ok(())
}
