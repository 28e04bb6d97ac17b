//! The extension with a Heisenberg factor: locality, equivalence, transparency.

use uproll::extensions::{BqSpec, ExtWeight};
use uproll::{Series, Weight};

fn main() -> uproll::Result<()> {
    let spec = BqSpec::standard(Series::A, 1, 2)?;
    println!("A1, r = 2, a^2 = {}: commutative = {}, ribbon {:?}", spec.a_squared, spec.check_commutative(), spec.ribbon());

    let w = |q: i128, f: i128| ExtWeight::new(Weight::from_ints(&[q]), Weight::from_ints(&[f]));
    for x in [w(0, 0), w(1, 1), w(1, 0), w(2, 2), w(4, 4)] {
        let local = spec.is_local(&x);
        print!("  {x}: local = {local}");
        if local {
            let t = spec.transparency(&x, 8)?;
            print!(", twist {}, transparent = {}", spec.twist(&x), t.transparent);
        }
        println!();
    }
    println!("(2,2) ~ (6,6): {}", spec.equivalent(&w(2, 2), &w(6, 6))?);
    Ok(())
}
