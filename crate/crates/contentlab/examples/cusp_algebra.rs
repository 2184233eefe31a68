//! The flagship instance: the cusp algebra S = R[y]/(y^2 - x^3) over the
//! truncated base R = F2[x]/(x^N).
//!
//! Its content function squares the unit ideal to (1) while the content of
//! y^2 is the proper ideal (x^3), so S is not a weak content algebra.  Over
//! the untruncated base k[x] the algebra is a domain and therefore McCoy;
//! truncation creates zero-divisors with unit content (y kills x^(N-3)·y),
//! so the finite analog loses the McCoy property, and the exhaustive scan
//! below exhibits the witness.
//!
//! ```bash
//! cargo run -p contentlab --example cusp_algebra
//! ```

use contentlab::harness::verify_cusp;

fn main() -> contentlab::Result<()> {
    for depth in [4usize, 5] {
        let report = verify_cusp(depth)?;
        print!("{report}");
        if let Some(w) = &report.weak_content.witness {
            println!("  weak-content failure pair: {w}");
        }
        if let Some(w) = &report.mccoy.witness {
            println!("  McCoy failure pair:        {w}");
        }
        println!();
    }

    // Depths below 4 are refused: x^3 would be truncated away and the
    // content identities would degenerate.
    match verify_cusp(3) {
        Err(e) => println!("depth 3 is refused: {e}"),
        Ok(_) => unreachable!(),
    }

    Ok(())
}
