//! Enumerating the ideal lattice and computing with ideals: sums, products,
//! intersections, colons, annihilators, radicals, and primality.
//!
//! ```bash
//! cargo run -p contentlab --example ideal_lattice
//! ```

use contentlab::{enumerate_ideals, spectrum, FiniteRing, Ideal, IdealFilter};

fn main() -> contentlab::Result<()> {
    let z12 = FiniteRing::zmod(12)?;
    let all = enumerate_ideals(&z12, IdealFilter::All)?;
    println!("{} has {} ideals (one per divisor of 12):", z12, all.len());
    for i in &all {
        println!(
            "  {i:<6} size {:>2}  radical {}  prime={} maximal={}",
            i.size(),
            i.radical(),
            i.is_prime(),
            i.is_maximal()
        );
    }

    let i4 = Ideal::generated(&z12, &[z12.elem(4)])?;
    let i6 = Ideal::generated(&z12, &[z12.elem(6)])?;
    println!("(4) + (6) = {}", i4.sum(&i6)?);
    println!("(4) * (6) = {}", i4.product(&i6)?);
    println!("(4) n (6) = {}", i4.intersection(&i6)?);
    println!("((4) : (6)) = {}", i4.colon(&i6)?);
    println!("ann((6)) = {}", i6.annihilator());

    // The spectrum of a truncated polynomial ring is a single point.
    let z2 = FiniteRing::zmod(2)?;
    let (r, x) = FiniteRing::truncated(&z2, 4)?;
    println!("\nideals of {r}:");
    for i in enumerate_ideals(&r, IdealFilter::All)? {
        println!("  {i}");
    }
    println!("spectrum of {r}: {:?}", spectrum(&r)?.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("radical((x^3)) = {}", Ideal::generated(&r, &[x.pow(3)])?.radical());

    Ok(())
}
