//! Running the individual property checkers and reading their witnesses.
//!
//! ```bash
//! cargo run -p contentlab --example property_checkers
//! ```

use contentlab::properties::{
    dedekind_mertens_number, has_fidel_a, has_property_a, is_content_algebra, is_mccoy,
    is_residually_mccoy, is_semicontent, is_weak_content_primes, is_weak_content_radical,
};
use contentlab::{FiniteRing, FreeAlgebra, IdealFilter};

fn main() -> contentlab::Result<()> {
    let z4 = FiniteRing::zmod(4)?;
    let s = FreeAlgebra::truncated(&z4, 2)?;
    println!("checking {} (x^2 = 0 there):", s);
    println!("  mccoy                {}", is_mccoy(&s)?);
    println!("  weak content (rad)   {}", is_weak_content_radical(&s)?);
    println!("  weak content (prime) {}", is_weak_content_primes(&s)?);
    println!("  content algebra      {}", is_content_algebra(&s, 8)?);
    println!("  semicontent          {}", is_semicontent(&s)?);
    println!(
        "  residually McCoy     {}",
        is_residually_mccoy(&s, IdealFilter::All)?
    );

    // The identity algebra has every property.
    let id = FreeAlgebra::identity_algebra(&z4)?;
    println!("\nchecking {} (the base over itself):", id);
    println!("  mccoy                {}", is_mccoy(&id)?);
    println!("  semicontent          {}", is_semicontent(&id)?);

    // Dedekind-Mertens exponents for specific pairs.
    let f = s.scalar(&z4.elem(2))?;
    let g = s.gen().unwrap();
    println!(
        "\nleast n with c(f)^(n+1)c(g) = c(f)^n c(fg), f = {f}, g = {g}: {:?}",
        dedekind_mertens_number(&f, &g, 8)?
    );
    let q = FreeAlgebra::quadratic(&FiniteRing::zmod(2)?, &FiniteRing::zmod(2)?.zero())?;
    let y = q.gen().unwrap();
    println!(
        "for f = g = y in {} the chain stabilizes without equality: {:?}",
        q,
        dedekind_mertens_number(&y, &y, 8)?
    );

    // Ring-level facts: every finite commutative ring passes both.
    for n in [4u64, 6, 12] {
        let r = FiniteRing::zmod(n)?;
        println!(
            "\n{r}: property (A) = {}, fidel (A) = {}",
            has_property_a(&r)?.holds,
            has_fidel_a(&r)?.holds
        );
    }

    Ok(())
}
