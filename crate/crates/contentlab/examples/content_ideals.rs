//! Content ideals of free-algebra elements, computed two ways: directly from
//! the coordinates, and literally from the definition (the intersection of
//! all ideals I with f in I·S).
//!
//! ```bash
//! cargo run -p contentlab --example content_ideals
//! ```

use contentlab::{FiniteRing, FreeAlgebra};

fn main() -> contentlab::Result<()> {
    // The running counterexample algebra: R = F2[x]/(x^4), S = R[y]/(y^2 - x^3).
    let z2 = FiniteRing::zmod(2)?;
    let (r, x) = FiniteRing::truncated(&z2, 4)?;
    let s = FreeAlgebra::quadratic(&r, &x.pow(3))?;
    let y = s.gen().expect("rank 2");

    println!("S = {}", s);
    for f in [&y, &(&y * &y), &(&s.one() + &y), &s.zero()] {
        let direct = f.content();
        let oracle = f.content_oracle()?;
        println!(
            "  content({f}) = {direct}   (defining intersection: {oracle}, equal: {})",
            direct == oracle
        );
    }

    // The product of unit ideals is the unit ideal, but content(y)^2 and
    // content(y^2) are very different ideals: the content function does not
    // respect multiplication here, which is what the property checkers probe.
    let cy = y.content();
    let cyy = (&y * &y).content();
    println!("content(y)^2 = {}", cy.product(&cy)?);
    println!("content(y*y) = {cyy}, with radical {}", cyy.radical());

    // Content is a coordinate ideal, so it scales linearly.
    let z4 = FiniteRing::zmod(4)?;
    let t = FreeAlgebra::truncated(&z4, 2)?;
    let f = t.element(&[z4.elem(2), z4.elem(2)])?;
    println!("\nin {}: content(2+2x) = {}", t, f.content());

    Ok(())
}
