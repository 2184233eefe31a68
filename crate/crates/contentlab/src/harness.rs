//! Corpus generation, per-instance property reports, theorem-suite
//! verification, the cusp-algebra demonstration, and counterexample search.
//!
//! The corpus is a deterministic composition grid over the requested moduli,
//! truncation depths, quadratic parameters, group orders, and monoid table
//! files.  Instance reports are independent, so they are computed in
//! parallel; every scan order inside a report is canonical, so reports are
//! reproducible run to run (timing fields aside).

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{FreeAlgebra, MonoidTable};
use crate::error::{Error, Result};
use crate::finring::{Caps, FiniteRing};
use crate::ideals::{self, Ideal, IdealFilter, SaturatedMultSet};
use crate::properties::{self, Verdict};

/// Generation parameters for the instance grid.  `seed` is recorded in
/// reports for provenance; the grid itself is fully deterministic.
#[derive(Clone, Debug)]
pub struct CorpusParams {
    pub moduli: Vec<u64>,
    /// Truncation depths for the truncated algebras over each base.
    pub depths: Vec<usize>,
    /// Build quad(a) for every base element a.
    pub quad_all: bool,
    /// Orders k of the group algebras R[Z/k] over each base.
    pub group_orders: Vec<usize>,
    /// Monoid table files, one algebra per base each.
    pub monoid_files: Vec<PathBuf>,
    /// Also use trunc(Z/2,4) and prod(Z/2,Z/3) as base rings.
    pub composite_bases: bool,
    pub caps: Caps,
    pub n_max: u32,
    pub seed: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            moduli: vec![2, 3, 4, 5, 6, 8, 9, 12],
            depths: vec![2, 3],
            quad_all: true,
            group_orders: vec![2, 3],
            monoid_files: Vec::new(),
            composite_bases: true,
            caps: Caps::default(),
            n_max: 8,
            seed: 0,
        }
    }
}

/// One corpus entry: a free algebra together with its base ring.
#[derive(Clone)]
pub struct Instance {
    pub algebra: FreeAlgebra,
}

impl Instance {
    pub fn base(&self) -> &FiniteRing {
        self.algebra.base()
    }

    pub fn label(&self) -> String {
        self.algebra.instance_label()
    }
}

pub struct Corpus {
    pub instances: Vec<Instance>,
    /// Notices for instances skipped because a cap was exceeded.
    pub skipped: Vec<String>,
    pub params: CorpusParams,
}

/// Build the deterministic instance grid.  Cap violations skip the instance
/// with a notice; they never abort the corpus.
pub fn generate_corpus(params: &CorpusParams) -> Corpus {
    let mut instances = Vec::new();
    let mut skipped = Vec::new();
    let caps = params.caps;

    let mut bases: Vec<FiniteRing> = Vec::new();
    for &n in &params.moduli {
        match FiniteRing::zmod_with(n, caps) {
            Ok(r) => bases.push(r),
            Err(e) => skipped.push(format!("base Z/{n}: {e}")),
        }
    }
    if params.composite_bases {
        match FiniteRing::zmod_with(2, caps)
            .and_then(|z2| FiniteRing::truncated(&z2, 4).map(|(r, _)| r))
        {
            Ok(r) => bases.push(r),
            Err(e) => skipped.push(format!("base trunc(Z/2,4): {e}")),
        }
        match FiniteRing::zmod_with(2, caps).and_then(|z2| {
            FiniteRing::zmod_with(3, caps).and_then(|z3| FiniteRing::product(&z2, &z3))
        }) {
            Ok(r) => bases.push(r),
            Err(e) => skipped.push(format!("base prod(Z/2,Z/3): {e}")),
        }
    }

    fn push(
        instances: &mut Vec<Instance>,
        skipped: &mut Vec<String>,
        alg: Result<FreeAlgebra>,
        what: String,
    ) {
        match alg {
            Ok(algebra) => instances.push(Instance { algebra }),
            Err(e) => skipped.push(format!("{what}: {e}")),
        }
    }

    for base in &bases {
        let b = base.descriptor().to_string();
        push(
            &mut instances,
            &mut skipped,
            FreeAlgebra::identity_algebra(base),
            format!("id over {b}"),
        );
        for &d in &params.depths {
            push(
                &mut instances,
                &mut skipped,
                FreeAlgebra::truncated(base, d),
                format!("trunc({d}) over {b}"),
            );
        }
        if params.quad_all {
            for a in 0..base.size() as u32 {
                push(
                    &mut instances,
                    &mut skipped,
                    FreeAlgebra::quadratic(base, &base.elem(a)),
                    format!("quad over {b}"),
                );
            }
        }
        for &k in &params.group_orders {
            push(
                &mut instances,
                &mut skipped,
                FreeAlgebra::cyclic_group_algebra(base, k),
                format!("group(Z/{k}) over {b}"),
            );
        }
        for file in &params.monoid_files {
            let what = format!("monoid({}) over {b}", file.display());
            let alg = MonoidTable::from_file(file).and_then(|m| {
                FreeAlgebra::monoid_algebra(base, &m, Some(file.display().to_string()))
            });
            push(&mut instances, &mut skipped, alg, what);
        }
    }

    Corpus {
        instances,
        skipped,
        params: params.clone(),
    }
}

/// A property check outcome: the verdict, or the error that kept the checker
/// from completing (caps, undecided Dedekind-Mertens searches).
pub type CheckResult = std::result::Result<Verdict, String>;

pub const REPORT_FIELDS: [&str; 11] = [
    "ohm_rush_consistency",
    "mccoy",
    "weak_content_radical",
    "weak_content_primes",
    "content_algebra",
    "semicontent",
    "residually_mccoy_all",
    "residually_mccoy_radical",
    "residually_mccoy_prime",
    "property_a",
    "fidel_a",
];

/// The full decided-property vector of one instance, with timings and the
/// list of violated theorem-mandated equivalences (empty when consistent;
/// never silently repaired).
#[derive(Clone)]
pub struct PropertyReport {
    pub base_descriptor: String,
    pub algebra_descriptor: String,
    pub algebra_size: usize,
    pub spectrum_size: usize,
    pub ohm_rush_consistency: CheckResult,
    pub mccoy: CheckResult,
    pub weak_content_radical: CheckResult,
    pub weak_content_primes: CheckResult,
    pub content_algebra: CheckResult,
    pub semicontent: CheckResult,
    pub residually_mccoy_all: CheckResult,
    pub residually_mccoy_radical: CheckResult,
    pub residually_mccoy_prime: CheckResult,
    pub property_a: CheckResult,
    pub fidel_a: CheckResult,
    pub timings_ms: Vec<(&'static str, u128)>,
    pub inconsistencies: Vec<String>,
}

impl PropertyReport {
    pub fn label(&self) -> String {
        format!("{} over {}", self.algebra_descriptor, self.base_descriptor)
    }

    pub fn field(&self, name: &str) -> Option<&CheckResult> {
        Some(match name {
            "ohm_rush_consistency" => &self.ohm_rush_consistency,
            "mccoy" => &self.mccoy,
            "weak_content_radical" => &self.weak_content_radical,
            "weak_content_primes" => &self.weak_content_primes,
            "content_algebra" => &self.content_algebra,
            "semicontent" => &self.semicontent,
            "residually_mccoy_all" => &self.residually_mccoy_all,
            "residually_mccoy_radical" => &self.residually_mccoy_radical,
            "residually_mccoy_prime" => &self.residually_mccoy_prime,
            "property_a" => &self.property_a,
            "fidel_a" => &self.fidel_a,
            _ => return None,
        })
    }

    /// The truth value of a field, when its checker completed.
    pub fn holds(&self, name: &str) -> Option<bool> {
        self.field(name)?.as_ref().ok().map(|v| v.holds)
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let mut verdicts = serde_json::Map::new();
        let mut witnesses = serde_json::Map::new();
        let mut checked = serde_json::Map::new();
        let mut errors = serde_json::Map::new();
        for name in REPORT_FIELDS {
            match self.field(name).unwrap() {
                Ok(v) => {
                    verdicts.insert(name.into(), json!(v.holds));
                    checked.insert(name.into(), json!(v.checked_count));
                    if let Some(w) = &v.witness {
                        witnesses.insert(name.into(), json!(w.to_string()));
                    }
                }
                Err(e) => {
                    verdicts.insert(name.into(), Value::Null);
                    errors.insert(name.into(), json!(e));
                }
            }
        }
        let timings: serde_json::Map<String, Value> = self
            .timings_ms
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({
            "schema_version": 1,
            "descriptor": {
                "base": self.base_descriptor,
                "algebra": self.algebra_descriptor,
                "size": self.algebra_size,
            },
            "verdicts": verdicts,
            "witnesses": witnesses,
            "checked": checked,
            "errors": errors,
            "ring_facts": {
                "spectrum_size": self.spectrum_size,
            },
            "timings_ms": timings,
            "consistent": self.is_consistent(),
            "inconsistencies": self.inconsistencies,
        })
    }
}

impl std::fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "instance: {}   |S|={}  spectrum size {}",
            self.label(),
            self.algebra_size,
            self.spectrum_size
        )?;
        for name in REPORT_FIELDS {
            match self.field(name).unwrap() {
                Ok(v) => writeln!(f, "  {name:<26} {v}")?,
                Err(e) => writeln!(f, "  {name:<26} error: {e}")?,
            }
        }
        if self.is_consistent() {
            writeln!(f, "  consistent: yes")
        } else {
            writeln!(f, "  consistent: NO")?;
            for v in &self.inconsistencies {
                writeln!(f, "    violated: {v}")?;
            }
            Ok(())
        }
    }
}

fn run_check(
    name: &'static str,
    timings: &mut Vec<(&'static str, u128)>,
    f: impl FnOnce() -> Result<Verdict>,
) -> CheckResult {
    let start = Instant::now();
    let out = f().map_err(|e| e.to_string());
    timings.push((name, start.elapsed().as_millis()));
    out
}

/// Run every checker on the instance and flag violated equivalences.
pub fn full_report(instance: &Instance, n_max: u32) -> PropertyReport {
    let s = &instance.algebra;
    let ring = s.base();
    let mut timings = Vec::new();
    let spectrum_size = ideals::spectrum(ring).map(|p| p.len()).unwrap_or(0);
    let ohm_rush_consistency = run_check("ohm_rush_consistency", &mut timings, || {
        properties::ohm_rush_consistency(s, 1024, 1000)
    });
    let mccoy = run_check("mccoy", &mut timings, || properties::is_mccoy(s));
    let weak_content_radical = run_check("weak_content_radical", &mut timings, || {
        properties::is_weak_content_radical(s)
    });
    let weak_content_primes = run_check("weak_content_primes", &mut timings, || {
        properties::is_weak_content_primes(s)
    });
    let content_algebra = run_check("content_algebra", &mut timings, || {
        properties::is_content_algebra(s, n_max)
    });
    let semicontent = run_check("semicontent", &mut timings, || properties::is_semicontent(s));
    let residually_mccoy_all = run_check("residually_mccoy_all", &mut timings, || {
        properties::is_residually_mccoy(s, IdealFilter::All)
    });
    let residually_mccoy_radical = run_check("residually_mccoy_radical", &mut timings, || {
        properties::is_residually_mccoy(s, IdealFilter::Radical)
    });
    let residually_mccoy_prime = run_check("residually_mccoy_prime", &mut timings, || {
        properties::is_residually_mccoy(s, IdealFilter::Prime)
    });
    let property_a = run_check("property_a", &mut timings, || {
        properties::has_property_a(ring)
    });
    let fidel_a = run_check("fidel_a", &mut timings, || properties::has_fidel_a(ring));

    let mut report = PropertyReport {
        base_descriptor: ring.descriptor().to_string(),
        algebra_descriptor: s.descriptor().to_string(),
        algebra_size: s.size(),
        spectrum_size,
        ohm_rush_consistency,
        mccoy,
        weak_content_radical,
        weak_content_primes,
        content_algebra,
        semicontent,
        residually_mccoy_all,
        residually_mccoy_radical,
        residually_mccoy_prime,
        property_a,
        fidel_a,
        timings_ms: timings,
        inconsistencies: Vec::new(),
    };
    report.inconsistencies = consistency_violations(&report);
    report
}

/// The equivalences and implications every report must satisfy.  A failure
/// here is always an implementation bug, never a mathematical discovery.
pub fn consistency_violations(r: &PropertyReport) -> Vec<String> {
    let mut out = Vec::new();
    let mut eq = |a: &str, b: &str, why: &str| {
        if let (Some(x), Some(y)) = (r.holds(a), r.holds(b)) {
            if x != y {
                out.push(format!("{a} = {x} but {b} = {y} ({why})"));
            }
        }
    };
    eq(
        "weak_content_radical",
        "weak_content_primes",
        "the two weak content characterizations are equivalent",
    );
    eq(
        "weak_content_radical",
        "residually_mccoy_prime",
        "weak content iff residually McCoy for primes",
    );
    eq(
        "weak_content_radical",
        "residually_mccoy_radical",
        "weak content iff residually McCoy for radical ideals",
    );
    eq(
        "weak_content_radical",
        "semicontent",
        "weak content iff semicontent over a Noetherian (finite) base",
    );
    eq(
        "weak_content_radical",
        "residually_mccoy_all",
        "weak content iff residually McCoy over a Noetherian (finite) base",
    );
    let mut imp = |a: &str, b: &str, why: &str| {
        if let (Some(true), Some(false)) = (r.holds(a), r.holds(b)) {
            out.push(format!("{a} holds but {b} fails ({why})"));
        }
    };
    imp("content_algebra", "semicontent", "content implies semicontent");
    imp("semicontent", "weak_content_radical", "semicontent implies weak content");
    imp(
        "residually_mccoy_all",
        "weak_content_radical",
        "residually McCoy implies weak content",
    );
    imp("residually_mccoy_all", "mccoy", "the zero ideal is in the all-ideals family");
    imp(
        "semicontent",
        "residually_mccoy_all",
        "semicontent implies residually McCoy over a locally fidel (A) base",
    );
    for (name, why) in [
        ("property_a", "finite rings have property (A)"),
        ("fidel_a", "finite rings are fidel (A)"),
    ] {
        if r.holds(name) == Some(false) {
            out.push(format!("{name} = false ({why})"));
        }
    }
    out
}

/// Reports for every corpus instance, computed in parallel, corpus order.
pub fn corpus_reports(corpus: &Corpus) -> Vec<PropertyReport> {
    corpus
        .instances
        .par_iter()
        .map(|inst| full_report(inst, corpus.params.n_max))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub instance: String,
    pub clause: String,
}

#[derive(Clone, Debug)]
pub struct TheoremSummary {
    pub instance_count: usize,
    pub violations: Vec<Violation>,
}

impl TheoremSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for TheoremSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} violations / {} instances",
            self.violations.len(),
            self.instance_count
        )
    }
}

/// Collect every violated theorem clause across precomputed reports.
pub fn theorem_summary(reports: &[PropertyReport]) -> TheoremSummary {
    let mut violations = Vec::new();
    for r in reports {
        for clause in &r.inconsistencies {
            violations.push(Violation {
                instance: r.label(),
                clause: clause.clone(),
            });
        }
    }
    TheoremSummary {
        instance_count: reports.len(),
        violations,
    }
}

/// Generate reports for the corpus and check every theorem clause.
pub fn verify_theorem_suite(corpus: &Corpus) -> TheoremSummary {
    theorem_summary(&corpus_reports(corpus))
}

#[derive(Clone, Debug)]
pub struct LocalizationSummary {
    pub instance_count: usize,
    pub violations: Vec<Violation>,
}

impl LocalizationSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for LocalizationSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} violations / {} instances",
            self.violations.len(),
            self.instance_count
        )
    }
}

/// Check the two localization lemmas on every instance: (a) localizing at
/// the units (the only regular elements of a finite ring) preserves the
/// McCoy verdict; (b) if every localization at a maximal ideal is McCoy then
/// so is the algebra itself.
pub fn verify_localization_lemmas(corpus: &Corpus) -> LocalizationSummary {
    let violations: Vec<Violation> = corpus
        .instances
        .par_iter()
        .flat_map(|inst| {
            let mut out = Vec::new();
            if let Err(e) = localization_lemma_check(inst, &mut out) {
                out.push(Violation {
                    instance: inst.label(),
                    clause: format!("check aborted: {e}"),
                });
            }
            out
        })
        .collect();
    LocalizationSummary {
        instance_count: corpus.instances.len(),
        violations,
    }
}

fn localization_lemma_check(inst: &Instance, out: &mut Vec<Violation>) -> Result<()> {
    let s = &inst.algebra;
    let ring = s.base();
    let global = properties::is_mccoy(s)?.holds;

    // (a) W = units: an isomorphism, so the verdict must match exactly
    let units = SaturatedMultSet::units_only(ring)?;
    let (at_units, _) = s.localize(&units)?;
    if properties::is_mccoy(&at_units)?.holds != global {
        out.push(Violation {
            instance: inst.label(),
            clause: "McCoy verdict changed under localization at the units".into(),
        });
    }

    // (b) globalization: all maximal localizations McCoy forces global McCoy
    let maximals = ideals::maximal_ideals(ring)?;
    let mut all_local = true;
    for m in maximals {
        let t = SaturatedMultSet::new(ring.clone(), vec![m])?;
        let (local, _) = s.localize(&t)?;
        if !properties::is_mccoy(&local)?.holds {
            all_local = false;
            break;
        }
    }
    if all_local && !global {
        out.push(Violation {
            instance: inst.label(),
            clause: "McCoy at every maximal localization but not globally".into(),
        });
    }
    Ok(())
}

/// The cusp-algebra report: over `R = F2[x]/(x^depth)`, the rank-2 algebra
/// `R[y]/(y^2 - x^3)`.
#[derive(Clone)]
pub struct CuspReport {
    pub depth: usize,
    /// (description, passed) for each pinned content-ideal assertion.
    pub assertions: Vec<(String, bool)>,
    pub weak_content: Verdict,
    pub mccoy: Verdict,
    pub algebra: FreeAlgebra,
}

impl CuspReport {
    /// All pinned assertions hold (the McCoy verdict is reported, not
    /// asserted).
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|(_, ok)| *ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": 1,
            "depth": self.depth,
            "assertions": self.assertions.iter()
                .map(|(d, ok)| json!({"assertion": d, "passed": ok}))
                .collect::<Vec<_>>(),
            "weak_content": self.weak_content.holds,
            "weak_content_witness": self.weak_content.witness.as_ref().map(|w| w.to_string()),
            "mccoy": self.mccoy.holds,
            "mccoy_witness": self.mccoy.witness.as_ref().map(|w| w.to_string()),
            "passed": self.passed(),
        })
    }
}

impl std::fmt::Display for CuspReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "cusp algebra quad(x^3) over trunc(Z/2,{})",
            self.depth
        )?;
        for (desc, ok) in &self.assertions {
            writeln!(f, "  {} {desc}", if *ok { "pass" } else { "FAIL" })?;
        }
        writeln!(f, "  weak_content = {}", self.weak_content)?;
        writeln!(f, "  mccoy = {}", self.mccoy)
    }
}

/// Build the cusp algebra at the given truncation depth and check the
/// pinned content-ideal facts: c(y)^2 = (1), c(y^2) = (x^3),
/// radical((x^3)) = (x) proper, and the weak-content failure.  The McCoy
/// verdict comes from the exhaustive scan and is reported as found.
/// Depths below 4 are refused because x^3 would vanish and degenerate the
/// content claims.
pub fn verify_cusp(depth: usize) -> Result<CuspReport> {
    verify_cusp_with(depth, Caps::default())
}

pub fn verify_cusp_with(depth: usize, caps: Caps) -> Result<CuspReport> {
    if depth < 4 {
        return Err(Error::DegenerateDepth(depth));
    }
    let z2 = FiniteRing::zmod_with(2, caps)?;
    let (r, x) = FiniteRing::truncated(&z2, depth)?;
    let s = FreeAlgebra::quadratic(&r, &x.pow(3))?;
    let y = s.gen().expect("rank-2 algebra has a generator");

    let mut assertions = Vec::new();
    let cy = y.content();
    let cy_sq = cy.product(&cy)?;
    assertions.push(("content(y)^2 = (1)".to_string(), cy_sq.is_unit_ideal()));

    let y_sq = y.checked_mul(&y)?;
    let expected = Ideal::generated(&r, &[x.pow(3)])?;
    assertions.push((
        "content(y*y) = (x^3)".to_string(),
        y_sq.content() == expected,
    ));

    let rad = expected.radical();
    let expected_rad = Ideal::generated(&r, std::slice::from_ref(&x))?;
    assertions.push((
        "radical((x^3)) = (x), a proper ideal".to_string(),
        rad == expected_rad && !rad.is_unit_ideal(),
    ));

    let weak_content = properties::is_weak_content_radical(&s)?;
    assertions.push(("weak_content = false".to_string(), !weak_content.holds));

    let mccoy = properties::is_mccoy(&s)?;

    Ok(CuspReport {
        depth,
        assertions,
        weak_content,
        mccoy,
        algebra: s,
    })
}

/// A boolean combination of report fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    Field(ReportField),
    Const(bool),
    Not(Box<Predicate>),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportField {
    OhmRushConsistency,
    Mccoy,
    WeakContentRadical,
    WeakContentPrimes,
    ContentAlgebra,
    Semicontent,
    ResiduallyMccoyAll,
    ResiduallyMccoyRadical,
    ResiduallyMccoyPrime,
    PropertyA,
    FidelA,
}

impl ReportField {
    pub fn name(&self) -> &'static str {
        match self {
            ReportField::OhmRushConsistency => "ohm_rush_consistency",
            ReportField::Mccoy => "mccoy",
            ReportField::WeakContentRadical => "weak_content_radical",
            ReportField::WeakContentPrimes => "weak_content_primes",
            ReportField::ContentAlgebra => "content_algebra",
            ReportField::Semicontent => "semicontent",
            ReportField::ResiduallyMccoyAll => "residually_mccoy_all",
            ReportField::ResiduallyMccoyRadical => "residually_mccoy_radical",
            ReportField::ResiduallyMccoyPrime => "residually_mccoy_prime",
            ReportField::PropertyA => "property_a",
            ReportField::FidelA => "fidel_a",
        }
    }

    /// `weak_content` is accepted as shorthand for the radical form.
    pub fn parse(name: &str) -> Option<ReportField> {
        Some(match name {
            "ohm_rush_consistency" | "ohm_rush" => ReportField::OhmRushConsistency,
            "mccoy" => ReportField::Mccoy,
            "weak_content" | "weak_content_radical" => ReportField::WeakContentRadical,
            "weak_content_primes" => ReportField::WeakContentPrimes,
            "content_algebra" => ReportField::ContentAlgebra,
            "semicontent" => ReportField::Semicontent,
            "residually_mccoy" | "residually_mccoy_all" => ReportField::ResiduallyMccoyAll,
            "residually_mccoy_radical" => ReportField::ResiduallyMccoyRadical,
            "residually_mccoy_prime" => ReportField::ResiduallyMccoyPrime,
            "property_a" => ReportField::PropertyA,
            "fidel_a" => ReportField::FidelA,
            _ => return None,
        })
    }
}

impl Predicate {
    /// None when a field the predicate needs did not complete.
    pub fn eval(&self, r: &PropertyReport) -> Option<bool> {
        match self {
            Predicate::Field(f) => r.holds(f.name()),
            Predicate::Const(b) => Some(*b),
            Predicate::Not(p) => p.eval(r).map(|b| !b),
            Predicate::And(a, b) => Some(a.eval(r)? && b.eval(r)?),
            Predicate::Or(a, b) => Some(a.eval(r)? || b.eval(r)?),
        }
    }

    /// Whether this is one of the two predicates whose matches would claim
    /// an answer to a question that is open in general: a semicontent
    /// algebra that is not a content algebra, or a weak content algebra
    /// that is not semicontent.  Over the finite bases here both are
    /// impossible, so a match always indicates an implementation bug.
    pub fn is_open_question(&self) -> bool {
        fn unordered_and(p: &Predicate) -> Option<(&Predicate, &Predicate)> {
            match p {
                Predicate::And(a, b) => Some((a, b)),
                _ => None,
            }
        }
        let Some((a, b)) = unordered_and(self) else {
            return false;
        };
        let matches_pair = |x: &Predicate, y: &Predicate, pos: ReportField, neg: ReportField| {
            *x == Predicate::Field(pos)
                && *y == Predicate::Not(Box::new(Predicate::Field(neg)))
        };
        for (x, y) in [(a, b), (b, a)] {
            if matches_pair(x, y, ReportField::Semicontent, ReportField::ContentAlgebra)
                || matches_pair(
                    x,
                    y,
                    ReportField::WeakContentRadical,
                    ReportField::Semicontent,
                )
            {
                return true;
            }
        }
        false
    }
}

impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Predicate::Field(x) => f.write_str(x.name()),
            Predicate::Const(b) => write!(f, "{b}"),
            Predicate::Not(p) => write!(f, "!{p}"),
            Predicate::And(a, b) => write!(f, "({a} & {b})"),
            Predicate::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub index: usize,
    pub instance: String,
    /// Set when the predicate encodes an open question, in which case a
    /// match indicates an implementation bug on this corpus.
    pub critical: bool,
}

/// First report (in corpus order) satisfying the predicate.  Reports with
/// errored fields needed by the predicate never match.
pub fn search_reports(reports: &[PropertyReport], pred: &Predicate) -> Option<SearchHit> {
    let critical = pred.is_open_question();
    reports.iter().enumerate().find_map(|(index, r)| {
        if pred.eval(r) == Some(true) {
            Some(SearchHit {
                index,
                instance: r.label(),
                critical,
            })
        } else {
            None
        }
    })
}

/// Generate reports for the corpus and search them.
pub fn search_corpus(corpus: &Corpus, pred: &Predicate) -> (Option<SearchHit>, Vec<PropertyReport>) {
    let reports = corpus_reports(corpus);
    (search_reports(&reports, pred), reports)
}

/// Strip run-dependent timing data, leaving the deterministic report body.
pub fn json_without_timings(v: &Value) -> Value {
    let mut v = v.clone();
    if let Some(obj) = v.as_object_mut() {
        obj.remove("timings_ms");
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::Witness;

    fn small_params() -> CorpusParams {
        CorpusParams {
            moduli: vec![2, 3, 4],
            depths: vec![2],
            group_orders: vec![2],
            composite_bases: false,
            ..CorpusParams::default()
        }
    }

    #[test]
    fn corpus_contents_follow_the_grid() {
        let p = CorpusParams {
            moduli: vec![2, 4],
            depths: vec![2],
            quad_all: true,
            group_orders: vec![],
            composite_bases: false,
            ..CorpusParams::default()
        };
        let c = generate_corpus(&p);
        assert!(c.skipped.is_empty());
        // per base: id, trunc(2), quads
        let quads_over_z4 = c
            .instances
            .iter()
            .filter(|i| i.base().descriptor() == "Z/4" && i.algebra.descriptor().starts_with("quad"))
            .count();
        assert_eq!(quads_over_z4, 4);
        assert_eq!(c.instances.len(), (1 + 1 + 2) + (1 + 1 + 4));
    }

    #[test]
    fn corpus_is_nonempty_for_a_single_modulus() {
        let p = CorpusParams {
            moduli: vec![2],
            depths: vec![],
            quad_all: false,
            group_orders: vec![],
            composite_bases: false,
            ..CorpusParams::default()
        };
        let c = generate_corpus(&p);
        assert_eq!(c.instances.len(), 1);
        assert_eq!(c.instances[0].algebra.descriptor(), "id");
    }

    #[test]
    fn default_corpus_contains_the_cusp_analog() {
        let c = generate_corpus(&CorpusParams::default());
        assert!(c
            .instances
            .iter()
            .any(|i| i.base().descriptor() == "trunc(Z/2,4)"
                && i.algebra.descriptor() == "quad(x^3)"));
        assert!(c.skipped.is_empty(), "default corpus skips nothing: {:?}", c.skipped);
    }

    #[test]
    fn caps_skip_instances_with_notice() {
        let p = CorpusParams {
            moduli: vec![12],
            depths: vec![4],
            quad_all: false,
            group_orders: vec![],
            composite_bases: false,
            caps: Caps {
                max_alg: 1000,
                ..Caps::default()
            },
            ..CorpusParams::default()
        };
        let c = generate_corpus(&p);
        assert_eq!(c.instances.len(), 1); // the identity algebra survives
        assert_eq!(c.skipped.len(), 1); // trunc(4): 12^4 > 1000
        assert!(c.skipped[0].contains("trunc(4)"));
    }

    #[test]
    fn identity_report_is_all_true() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let inst = Instance {
            algebra: FreeAlgebra::identity_algebra(&z4).unwrap(),
        };
        let r = full_report(&inst, 8);
        for name in REPORT_FIELDS {
            assert_eq!(r.holds(name), Some(true), "{name}");
        }
        assert!(r.is_consistent());
    }

    #[test]
    fn trunc_z4_report_is_all_false_but_consistent() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let inst = Instance {
            algebra: FreeAlgebra::truncated(&z4, 2).unwrap(),
        };
        let r = full_report(&inst, 8);
        for name in [
            "mccoy",
            "weak_content_radical",
            "weak_content_primes",
            "content_algebra",
            "semicontent",
            "residually_mccoy_all",
            "residually_mccoy_radical",
            "residually_mccoy_prime",
        ] {
            assert_eq!(r.holds(name), Some(false), "{name}");
        }
        assert_eq!(r.holds("ohm_rush_consistency"), Some(true));
        assert!(r.is_consistent());
    }

    #[test]
    fn cusp_report_matches_the_residue_equivalence() {
        let report = verify_cusp(4).unwrap();
        assert!(report.passed());
        // weak content fails, hence so does residual McCoy at the prime;
        // the equivalence is checked in the full report
        let inst = Instance {
            algebra: report.algebra.clone(),
        };
        let r = full_report(&inst, 8);
        assert_eq!(r.holds("weak_content_radical"), Some(false));
        assert_eq!(r.holds("residually_mccoy_prime"), Some(false));
        assert_eq!(r.holds("mccoy"), Some(false));
        assert!(r.is_consistent());
    }

    #[test]
    fn cusp_weak_content_witness_is_y_y() {
        for depth in [4usize, 5] {
            let report = verify_cusp(depth).unwrap();
            let Some(Witness::RadicalMismatch { f, g }) = &report.weak_content.witness else {
                panic!("expected a radical mismatch");
            };
            assert_eq!((f.to_string(), g.to_string()), ("y".into(), "y".into()));
        }
    }

    #[test]
    fn cusp_refuses_degenerate_depths() {
        assert!(matches!(verify_cusp(3), Err(Error::DegenerateDepth(3))));
    }

    #[test]
    fn cusp_passes_at_every_admissible_depth_under_the_cap() {
        // 4^6 = 4096 sits exactly at the default algebra cap
        for depth in 4..=6 {
            assert!(verify_cusp(depth).unwrap().passed(), "depth {depth}");
        }
        assert!(matches!(verify_cusp(7), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn corpus_descriptors_reconstruct_instances() {
        let p = CorpusParams {
            moduli: vec![4, 6],
            depths: vec![2],
            group_orders: vec![2],
            composite_bases: true,
            ..CorpusParams::default()
        };
        let corpus = generate_corpus(&p);
        for inst in &corpus.instances {
            let base = crate::cli::parse_ring_descriptor(inst.base().descriptor(), p.caps)
                .unwrap_or_else(|e| panic!("{}: {e}", inst.label()));
            let algebra = crate::cli::parse_algebra_descriptor(inst.algebra.descriptor(), &base)
                .unwrap_or_else(|e| panic!("{}: {e}", inst.label()));
            assert_eq!(algebra.descriptor(), inst.algebra.descriptor());
            assert_eq!(algebra.size(), inst.algebra.size());
            assert_eq!(algebra.rank(), inst.algebra.rank());
            for i in 0..algebra.size().min(64) {
                for j in 0..algebra.size().min(64) {
                    let a = algebra
                        .element_by_code(i)
                        .checked_mul(&algebra.element_by_code(j))
                        .unwrap();
                    let b = inst
                        .algebra
                        .element_by_code(i)
                        .checked_mul(&inst.algebra.element_by_code(j))
                        .unwrap();
                    assert_eq!(a.code(), b.code(), "{}", inst.label());
                }
            }
        }
    }

    #[test]
    fn ohm_rush_failures_are_absent() {
        // freeness forces content to equal the defining intersection
        let corpus = generate_corpus(&small_params());
        let reports = corpus_reports(&corpus);
        let pred = Predicate::Not(Box::new(Predicate::Field(
            ReportField::OhmRushConsistency,
        )));
        assert!(search_reports(&reports, &pred).is_none());
    }

    #[test]
    fn theorem_suite_small_corpus_is_clean() {
        let corpus = generate_corpus(&small_params());
        let summary = verify_theorem_suite(&corpus);
        assert!(summary.passed(), "violations: {:?}", summary.violations);
        assert_eq!(summary.instance_count, corpus.instances.len());
    }

    #[test]
    fn theorem_suite_empty_corpus_is_vacuous() {
        let p = CorpusParams {
            moduli: vec![],
            composite_bases: false,
            ..CorpusParams::default()
        };
        let summary = verify_theorem_suite(&generate_corpus(&p));
        assert!(summary.passed());
        assert_eq!(summary.instance_count, 0);
    }

    #[test]
    fn localization_lemmas_small_corpus() {
        let corpus = generate_corpus(&small_params());
        let summary = verify_localization_lemmas(&corpus);
        assert!(summary.passed(), "violations: {:?}", summary.violations);
    }

    #[test]
    fn localization_lemma_globalization_cases() {
        use crate::ideals::maximal_ideals;
        use crate::properties::is_mccoy;
        let z6 = FiniteRing::zmod(6).unwrap();

        // both maximal localizations of trunc(2) over Z/6 lose McCoy, so the
        // globalization implication is vacuous there
        let s = FreeAlgebra::truncated(&z6, 2).unwrap();
        for m in maximal_ideals(&z6).unwrap() {
            let t = SaturatedMultSet::new(z6.clone(), vec![m]).unwrap();
            let (local, _) = s.localize(&t).unwrap();
            assert!(!is_mccoy(&local).unwrap().holds);
        }
        assert!(!is_mccoy(&s).unwrap().holds);

        // the identity algebra is McCoy locally and globally
        let id = FreeAlgebra::identity_algebra(&z6).unwrap();
        for m in maximal_ideals(&z6).unwrap() {
            let t = SaturatedMultSet::new(z6.clone(), vec![m]).unwrap();
            let (local, _) = id.localize(&t).unwrap();
            assert!(is_mccoy(&local).unwrap().holds);
        }
        assert!(is_mccoy(&id).unwrap().holds);
    }

    #[test]
    fn mccoy_equals_residual_mccoy_at_zero_ideal() {
        let corpus = generate_corpus(&small_params());
        for inst in &corpus.instances {
            let s = &inst.algebra;
            let direct = crate::properties::is_mccoy(s).unwrap().holds;
            let zero = Ideal::zero(s.base());
            let (fiber, _) = s.base_change(&zero).unwrap();
            let through_zero = crate::properties::is_mccoy(&fiber).unwrap().holds;
            assert_eq!(direct, through_zero, "{}", inst.label());
        }
    }

    #[test]
    fn reports_are_deterministic_modulo_timings() {
        let corpus = generate_corpus(&small_params());
        let a = corpus_reports(&corpus);
        let b = corpus_reports(&corpus);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(
                json_without_timings(&x.to_json()),
                json_without_timings(&y.to_json())
            );
        }
    }

    #[test]
    fn predicate_eval_and_search() {
        let corpus = generate_corpus(&small_params());
        let reports = corpus_reports(&corpus);

        let mccoy = Predicate::Field(ReportField::Mccoy);
        let hit = search_reports(&reports, &mccoy).unwrap();
        assert_eq!(hit.instance, reports[hit.index].label());
        assert!(!hit.critical);

        let not_mccoy = Predicate::Not(Box::new(mccoy.clone()));
        assert!(search_reports(&reports, &not_mccoy).is_some());

        let absurd = Predicate::And(
            Box::new(mccoy),
            Box::new(Predicate::Const(false)),
        );
        assert!(search_reports(&reports, &absurd).is_none());
    }

    #[test]
    fn open_question_predicates_are_recognized() {
        let semi_not_content = Predicate::And(
            Box::new(Predicate::Field(ReportField::Semicontent)),
            Box::new(Predicate::Not(Box::new(Predicate::Field(
                ReportField::ContentAlgebra,
            )))),
        );
        assert!(semi_not_content.is_open_question());
        let flipped = Predicate::And(
            Box::new(Predicate::Not(Box::new(Predicate::Field(
                ReportField::ContentAlgebra,
            )))),
            Box::new(Predicate::Field(ReportField::Semicontent)),
        );
        assert!(flipped.is_open_question());
        let wc_not_semi = Predicate::And(
            Box::new(Predicate::Field(ReportField::WeakContentRadical)),
            Box::new(Predicate::Not(Box::new(Predicate::Field(
                ReportField::Semicontent,
            )))),
        );
        assert!(wc_not_semi.is_open_question());
        assert!(!Predicate::Field(ReportField::Mccoy).is_open_question());
    }

    #[test]
    fn open_question_predicates_find_nothing_on_a_small_corpus() {
        let corpus = generate_corpus(&small_params());
        let reports = corpus_reports(&corpus);
        let semi_not_content = Predicate::And(
            Box::new(Predicate::Field(ReportField::Semicontent)),
            Box::new(Predicate::Not(Box::new(Predicate::Field(
                ReportField::ContentAlgebra,
            )))),
        );
        assert!(search_reports(&reports, &semi_not_content).is_none());
        let wc_not_semi = Predicate::And(
            Box::new(Predicate::Field(ReportField::WeakContentRadical)),
            Box::new(Predicate::Not(Box::new(Predicate::Field(
                ReportField::Semicontent,
            )))),
        );
        assert!(search_reports(&reports, &wc_not_semi).is_none());
    }
}
