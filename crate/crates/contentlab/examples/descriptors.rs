//! The descriptor grammar: parsing rings, algebras, and element expressions
//! from text, with positioned errors, and printing them back.
//!
//! ```bash
//! cargo run -p contentlab --example descriptors
//! ```

use contentlab::cli::{
    parse_algebra_descriptor, parse_algebra_element, parse_ring_descriptor,
};
use contentlab::Caps;

fn main() -> contentlab::Result<()> {
    let caps = Caps::default();

    for text in [
        "Z/12",
        "trunc(Z/2,4)",
        "prod(Z/2, Z/3)",
        "quot(Z/12; 4,6)",
        "quot(trunc(Z/2,4); x^2)",
        "trunc(quot(Z/4; 2),3)",
    ] {
        let r = parse_ring_descriptor(text, caps)?;
        println!("{text:<28} -> {} with {} elements", r.descriptor(), r.size());
    }

    // Algebras are parsed relative to a base ring.
    let base = parse_ring_descriptor("trunc(Z/2,4)", caps)?;
    for text in ["id", "trunc(3)", "quad(x^3)", "group(Z/3)"] {
        let a = parse_algebra_descriptor(text, &base)?;
        println!(
            "{text:<28} -> {} of rank {} ({} elements)",
            a.descriptor(),
            a.rank(),
            a.size()
        );
    }

    // Element expressions are integer polynomials in x (base generator) and
    // y (algebra generator).
    let s = parse_algebra_descriptor("quad(x^3)", &base)?;
    for text in ["y*y", "1+x*y", "(1+x)^2", "x^3+y"] {
        let e = parse_algebra_element(text, &s)?;
        println!("{text:<12} = {e:<12} with content {}", e.content());
    }

    // Errors carry the byte position and what was expected.
    for bad in ["trunc(Z/0,2)", "frac(Z/2)", "quot(Z/4: 2)"] {
        match parse_ring_descriptor(bad, caps) {
            Err(e) => println!("{bad:<16} -> {e}"),
            Ok(_) => unreachable!(),
        }
    }

    Ok(())
}
