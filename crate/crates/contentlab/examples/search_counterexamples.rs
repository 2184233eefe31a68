//! Predicate search over corpus reports, including the two predicates that
//! encode questions open in general.  Over finite bases both are impossible
//! (the finite equivalences collapse the hierarchy), so matches are flagged
//! CRITICAL: they would indicate a checker bug, not a discovery.
//!
//! ```bash
//! cargo run -p contentlab --example search_counterexamples
//! ```

use contentlab::cli::parse_predicate;
use contentlab::harness::{corpus_reports, generate_corpus, search_reports, CorpusParams};

fn main() -> contentlab::Result<()> {
    let params = CorpusParams {
        moduli: vec![2, 3, 4, 5, 6],
        depths: vec![2],
        group_orders: vec![2],
        ..CorpusParams::default()
    };
    let corpus = generate_corpus(&params);
    let reports = corpus_reports(&corpus);
    println!("{} instances in the corpus\n", reports.len());

    for text in [
        "!mccoy",
        "mccoy & !weak_content",
        "!weak_content & residually_mccoy_prime",
        "semicontent & !content_algebra",
        "weak_content & !semicontent",
        "mccoy & !content_algebra",
    ] {
        let pred = parse_predicate(text)?;
        let tag = if pred.is_open_question() { " [open question]" } else { "" };
        match search_reports(&reports, &pred) {
            Some(hit) if hit.critical => {
                println!("{text}{tag}: CRITICAL match at {}", hit.instance)
            }
            Some(hit) => println!("{text}{tag}: found {}", hit.instance),
            None => println!("{text}{tag}: absent"),
        }
    }

    Ok(())
}
