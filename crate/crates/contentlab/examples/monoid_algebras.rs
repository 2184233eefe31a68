//! Group and monoid algebras from explicit operation tables, including the
//! whitespace-separated table file format (first line: size and identity
//! index; then the operation table row by row).
//!
//! ```bash
//! cargo run -p contentlab --example monoid_algebras
//! ```

use std::path::Path;

use contentlab::properties::is_mccoy;
use contentlab::{FiniteRing, FreeAlgebra, MonoidTable};

fn main() -> contentlab::Result<()> {
    let z2 = FiniteRing::zmod(2)?;

    // F2[Z/2]: t^2 = 1, and (1+t)^2 = 0, so 1+t is a zero-divisor with unit
    // content and the algebra is not McCoy.
    let s = FreeAlgebra::cyclic_group_algebra(&z2, 2)?;
    let t = s.gen().unwrap();
    println!("in {}: t^2 = {}", s, &t * &t);
    let one_plus_t = &s.one() + &t;
    println!("(1+t)^2 = {}", &one_plus_t * &one_plus_t);
    println!("mccoy: {}", is_mccoy(&s)?);

    // The Klein four-group from a table file.
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let klein = MonoidTable::from_file(&dir.join("klein4.txt"))?;
    let v4 = FreeAlgebra::monoid_algebra(&z2, &klein, Some("klein4.txt".into()))?;
    println!("\n{} has rank {}", v4, v4.rank());
    println!("mccoy: {}", is_mccoy(&v4)?);

    // A two-element monoid that is not a group: the second element is
    // idempotent, and the algebra splits accordingly.
    let idem = MonoidTable::from_file(&dir.join("idem2.txt"))?;
    let m = FreeAlgebra::monoid_algebra(&z2, &idem, Some("idem2.txt".into()))?;
    let a = m.gen().unwrap();
    println!("\nin {}: a^2 = {} (a is idempotent)", m, &a * &a);
    println!("mccoy: {}", is_mccoy(&m)?);

    // Non-commutative tables are rejected at construction.
    let left_zero = MonoidTable::new(3, vec![0, 1, 2, 1, 1, 1, 2, 2, 2], 0)?;
    match FreeAlgebra::monoid_algebra(&z2, &left_zero, None) {
        Err(e) => println!("\nnon-commutative table rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    Ok(())
}
