//! Base change S/IS and the residually McCoy property: the McCoy check
//! applied to every residue algebra R/I -> S/IS of a family of ideals.
//!
//! Weak content is equivalent to being residually McCoy for the prime (or
//! radical) ideals, which is visible here on the cusp algebra: McCoy fails
//! in the fiber over (x) because y^2 becomes 0 there.
//!
//! ```bash
//! cargo run -p contentlab --example residue_algebras
//! ```

use contentlab::properties::{is_mccoy, is_residually_mccoy};
use contentlab::{enumerate_ideals, FiniteRing, FreeAlgebra, IdealFilter};

fn main() -> contentlab::Result<()> {
    let z2 = FiniteRing::zmod(2)?;
    let (r, x) = FiniteRing::truncated(&z2, 4)?;
    let s = FreeAlgebra::quadratic(&r, &x.pow(3))?;
    println!("S = {}", s);

    // Walk the residue algebras ideal by ideal.
    for ideal in enumerate_ideals(&r, IdealFilter::All)? {
        let (fiber, _) = s.base_change(&ideal)?;
        let verdict = is_mccoy(&fiber)?;
        println!(
            "  I = {ideal:<6} fiber {} over {:<18} McCoy: {verdict}",
            fiber.descriptor(),
            fiber.base().descriptor(),
        );
    }

    for family in [IdealFilter::All, IdealFilter::Radical, IdealFilter::Prime] {
        println!(
            "residually McCoy ({family:?}): {}",
            is_residually_mccoy(&s, family)?
        );
    }

    Ok(())
}
