//! Root-lattice extensions at ell = 2r, checked against det(A) r^n.

use uproll::extensions::triplet_report;
use uproll::Series;

fn main() -> uproll::Result<()> {
    for (series, rank, r) in [(Series::A, 1, 2), (Series::A, 1, 3), (Series::A, 2, 2), (Series::A, 3, 2), (Series::D, 4, 2)] {
        let t = triplet_report(series, rank, r)?;
        println!(
            "{series}{rank}, r = {r}: commutative = {}, order {:?}, expected {}, match = {}",
            t.commutative, t.order, t.expected_order, t.matches
        );
    }
    match triplet_report(Series::B, 2, 2) {
        Err(e) => println!("B2: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
