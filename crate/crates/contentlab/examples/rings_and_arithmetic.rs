//! Building finite commutative rings and doing arithmetic in them.
//!
//! ```bash
//! cargo run -p contentlab --example rings_and_arithmetic
//! ```

use contentlab::{are_isomorphic, FiniteRing, Ideal};

fn main() -> contentlab::Result<()> {
    // Z/n is the basic building block.
    let z6 = FiniteRing::zmod(6)?;
    let two = z6.elem(2);
    let three = z6.elem(3);
    println!("in {}: 2 * 3 = {}", z6, &two * &three);
    println!("in {}: 2 + 5 = {}", z6, &two + &z6.elem(5));

    // Products are componentwise; Z/2 x Z/3 is Z/6 in disguise.
    let z2 = FiniteRing::zmod(2)?;
    let z3 = FiniteRing::zmod(3)?;
    let p = FiniteRing::product(&z2, &z3)?;
    println!(
        "{} is isomorphic to Z/6: {}",
        p,
        are_isomorphic(&p, &z6)
    );

    // Truncated polynomial rings R[x]/(x^d) come with their generator.
    let (r, x) = FiniteRing::truncated(&z2, 4)?;
    println!(
        "{} has {} elements; x^3 = {}, x^4 = {}",
        r,
        r.size(),
        x.pow(3),
        x.pow(4)
    );

    // Quotients return the projection map alongside the ring.
    let ideal = Ideal::generated(&r, &[x.pow(2)])?;
    let (q, proj) = r.quotient(&ideal)?;
    println!(
        "{} / {} = {} with {} elements; x maps to {}",
        r,
        ideal,
        q,
        q.size(),
        proj.apply(&x)?
    );

    // Element classification: units, zero-divisors, nilpotents, idempotents.
    let z12 = FiniteRing::zmod(12)?;
    let classes = z12.classify();
    let names = |v: &[contentlab::RingElement]| {
        v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
    };
    println!("classification of {z12}:");
    println!("  units:         {}", names(&classes.units));
    println!("  zero-divisors: {}", names(&classes.zero_divisors));
    println!("  nilpotents:    {}", names(&classes.nilpotents));
    println!("  idempotents:   {}", names(&classes.idempotents));

    Ok(())
}
