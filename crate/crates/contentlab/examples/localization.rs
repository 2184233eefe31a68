//! Localizing rings and algebras at saturated multiplicative sets, and the
//! two McCoy localization lemmas checked on a small corpus.
//!
//! A saturated multiplicative set is the complement of a union of primes;
//! in a finite ring every localization arises this way, and inverting W is
//! the same as quotienting by the elements some member of W kills.
//!
//! ```bash
//! cargo run -p contentlab --example localization
//! ```

use contentlab::harness::{generate_corpus, verify_localization_lemmas, CorpusParams};
use contentlab::{spectrum, FiniteRing, FreeAlgebra, SaturatedMultSet};

fn main() -> contentlab::Result<()> {
    let z6 = FiniteRing::zmod(6)?;
    for p in spectrum(&z6)? {
        let t = SaturatedMultSet::new(z6.clone(), vec![p.clone()])?;
        let (local, _) = z6.localize(&t)?;
        println!("{} localized at the prime {} has size {}", z6, p, local.size());
    }

    // Localizing at all primes inverts only units, so nothing changes.
    let t = SaturatedMultSet::units_only(&z6)?;
    let (same, _) = z6.localize(&t)?;
    println!(
        "{} localized at the units is isomorphic to itself: {}",
        z6,
        contentlab::are_isomorphic(&z6, &same)
    );

    // Algebras localize through their base.
    let s = FreeAlgebra::truncated(&z6, 2)?;
    let p2 = spectrum(&z6)?.into_iter().find(|p| p.to_string() == "(2)").unwrap();
    let t = SaturatedMultSet::new(z6.clone(), vec![p2])?;
    let (local, map) = s.localize(&t)?;
    println!(
        "{} localized at (2) is {} (generator image: {})",
        s,
        local,
        map.apply(&s.gen().unwrap())?
    );

    // The localization lemmas on a small corpus: the McCoy verdict is fixed
    // under unit localization, and local McCoy at every maximal ideal forces
    // global McCoy.
    let params = CorpusParams {
        moduli: vec![2, 4, 6],
        depths: vec![2],
        group_orders: vec![2],
        composite_bases: false,
        ..CorpusParams::default()
    };
    let corpus = generate_corpus(&params);
    let summary = verify_localization_lemmas(&corpus);
    println!("\nlocalization lemmas: {summary}");
    for v in &summary.violations {
        println!("  {}: {}", v.instance, v.clause);
    }

    Ok(())
}
