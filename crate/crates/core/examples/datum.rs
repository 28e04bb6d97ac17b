//! Cartan data, the bilinear form, and the simple current lattice.

use uproll::rational::format_rational;
use uproll::{CartanDatum, Series, Weight};

fn main() -> uproll::Result<()> {
    for (series, rank, ell) in [(Series::A, 2, 4), (Series::B, 2, 8), (Series::G, 2, 9)] {
        let d = CartanDatum::new(series, rank, ell)?;
        println!("{series}{rank} at ell = {ell}: r = {}, d = {:?}, det A = {}", d.r, d.symmetrizers, d.cartan_determinant());
        for (i, row) in d.gram.iter().enumerate() {
            let row: Vec<String> = row.iter().map(format_rational).collect();
            println!("  <w_{i}, -> = [{}]", row.join(", "));
        }
        let w = d.fundamental_weight(0).scale(ell as i128 / 2);
        println!("  (ell/2) w_1 in simple current lattice: {}", d.in_simple_current_lattice(&w));
    }

    // B2 at ell = 4 has r = 2 = gcd(2, 2): no quantum group, but the lattice side is fine.
    match CartanDatum::new(Series::B, 2, 4) {
        Err(e) => println!("B2 at ell = 4: {e}"),
        Ok(_) => unreachable!(),
    }
    let d = CartanDatum::lattice_only(Series::B, 2, 4)?;
    let x = Weight::from_ints(&[2, 0]);
    println!("lattice only: <x, x> = {}", format_rational(&d.pairing(&x, &x)?));
    Ok(())
}
