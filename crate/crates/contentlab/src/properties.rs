//! Decision procedures for the algebra properties under study.
//!
//! Every checker decides its property by exhaustive finite enumeration and
//! returns a [`Verdict`]: the truth value, the enumeration size, and on
//! failure a structured [`Witness`] that re-validates against the raw
//! definition (asserted whenever a failing verdict is built).
//!
//! Properties whose definitions depend only on the content ideals of the
//! elements involved (weak content in radical form, the Dedekind-Mertens
//! condition, the semicontent condition) are decided per distinct content
//! triple (c(f), c(g), c(fg)); the reported witness is still the first
//! failing pair of the canonical scan, because a pair fails exactly when its
//! triple does and triples are recorded at first occurrence.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, FreeAlgebra};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::finring::{FiniteRing, LatticeCache};
use crate::ideals::{
    self, colon_bits, enumerate_ideals, product_bits, radical_bits, spectrum, Ideal, IdealFilter,
    SaturatedMultSet,
};

/// Outcome of one property check.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Size of the enumeration the decision covered (pairs, triples of the
    /// quantifier domain, etc.).
    pub checked_count: u64,
}

impl Verdict {
    pub(crate) fn pass(checked_count: u64) -> Verdict {
        Verdict {
            holds: true,
            witness: None,
            checked_count,
        }
    }

    pub(crate) fn fail(witness: Witness, checked_count: u64) -> Verdict {
        assert!(
            witness.revalidate(),
            "witness failed re-validation: {witness}"
        );
        Verdict {
            holds: false,
            witness: Some(witness),
            checked_count,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (&self.holds, &self.witness) {
            (true, _) => write!(f, "true"),
            (false, Some(w)) => write!(f, "false; witness {w}"),
            (false, None) => write!(f, "false"),
        }
    }
}

/// A structured counterexample, carrying enough of the objects involved to
/// re-validate against the definition it violates.
#[derive(Clone, Debug)]
pub enum Witness {
    /// fg = 0 with g nonzero while content(f) has zero annihilator.
    ZeroDivisorPair {
        f: AlgebraElement,
        g: AlgebraElement,
    },
    /// radical(c(f)c(g)) differs from radical(c(fg)).
    RadicalMismatch {
        f: AlgebraElement,
        g: AlgebraElement,
    },
    /// A nonzero zero-divisor pair in the fiber over a prime.
    NonPrimeFiber {
        prime: Ideal,
        f: AlgebraElement,
        g: AlgebraElement,
    },
    /// No n whatsoever satisfies c(f)^{n+1}c(g) = c(f)^n c(fg).
    DedekindMertensFailure {
        f: AlgebraElement,
        g: AlgebraElement,
    },
    /// c(f) meets W yet the localized contents of fg and g differ.
    LocalizedContentMismatch {
        primes: Vec<Ideal>,
        f: AlgebraElement,
        g: AlgebraElement,
    },
    /// The McCoy property fails after base change along the ideal.
    ResidualFailure {
        ideal: Ideal,
        f: AlgebraElement,
        g: AlgebraElement,
    },
    /// An ideal of zero-divisors whose annihilator is zero.
    IdealOfZeroDivisors { ideal: Ideal },
    /// A quotient in which property (A) fails at the inner ideal.
    QuotientPropertyA { ideal: Ideal, inner: Ideal },
    /// Direct content disagrees with the defining intersection.
    ContentOracleMismatch {
        f: AlgebraElement,
        direct: Ideal,
        oracle: Ideal,
    },
}

impl Witness {
    /// Re-check the violated definition from scratch.
    pub fn revalidate(&self) -> bool {
        match self {
            Witness::ZeroDivisorPair { f, g } => {
                f.algebra().same_algebra(g.algebra())
                    && f.checked_mul(g).map(|p| p.is_zero()).unwrap_or(false)
                    && !g.is_zero()
                    && f.content().annihilator().is_zero()
            }
            Witness::RadicalMismatch { f, g } => {
                if !f.algebra().same_algebra(g.algebra()) {
                    return false;
                }
                let fg = f.checked_mul(g).unwrap();
                let lhs = f.content().product(&g.content()).unwrap().radical();
                lhs != fg.content().radical()
            }
            Witness::NonPrimeFiber { prime, f, g } => {
                prime.is_prime()
                    && f.algebra().same_algebra(g.algebra())
                    && !f.is_zero()
                    && !g.is_zero()
                    && f.checked_mul(g).map(|p| p.is_zero()).unwrap_or(false)
            }
            Witness::DedekindMertensFailure { f, g } => {
                matches!(dm_outcome(f, g, u32::MAX), Ok(DmOutcome::DefinitelyAbsent))
            }
            Witness::LocalizedContentMismatch { primes, f, g } => {
                let s = f.algebra();
                let base = s.base();
                let t = match SaturatedMultSet::new(base.clone(), primes.clone()) {
                    Ok(t) => t,
                    Err(_) => return false,
                };
                if !t.member_bits().intersects(f.content().member_bits()) {
                    return false;
                }
                let (_, map) = base.localize(&t).unwrap();
                let fg = f.checked_mul(g).unwrap();
                let img_fg = map.image_ideal(&fg.content()).unwrap();
                let img_g = map.image_ideal(&g.content()).unwrap();
                img_fg != img_g
            }
            Witness::ResidualFailure { ideal, f, g } => {
                let fiber = f.algebra();
                fiber.base().size() * ideal.size() == ideal.ring().size()
                    && Witness::ZeroDivisorPair {
                        f: f.clone(),
                        g: g.clone(),
                    }
                    .revalidate()
            }
            Witness::IdealOfZeroDivisors { ideal } => {
                let ring = ideal.ring();
                ideal
                    .member_bits()
                    .is_subset(&ring.class_bits().zero_divisors)
                    && ideal.annihilator().is_zero()
            }
            Witness::QuotientPropertyA { ideal, inner } => {
                let (q, _) = match ideal.ring().quotient(ideal) {
                    Ok(v) => v,
                    Err(_) => return false,
                };
                inner.ring().size() == q.size()
                    && Witness::IdealOfZeroDivisors {
                        ideal: inner.clone(),
                    }
                    .revalidate()
            }
            Witness::ContentOracleMismatch { f, direct, oracle } => {
                f.content() == *direct
                    && f.content_oracle().map(|o| o == *oracle).unwrap_or(false)
                    && direct != oracle
            }
        }
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::ZeroDivisorPair { f, g } => write!(fmt, "f={f}, g={g}"),
            Witness::RadicalMismatch { f, g } => write!(fmt, "f={f}, g={g}"),
            Witness::NonPrimeFiber { prime, f, g } => {
                write!(fmt, "p={prime}, f={f}, g={g}")
            }
            Witness::DedekindMertensFailure { f, g } => write!(fmt, "f={f}, g={g}"),
            Witness::LocalizedContentMismatch { primes, f, g } => {
                let ps: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                write!(fmt, "T={{{}}}, f={f}, g={g}", ps.join(", "))
            }
            Witness::ResidualFailure { ideal, f, g } => {
                write!(fmt, "I={ideal}: f={f}, g={g}")
            }
            Witness::IdealOfZeroDivisors { ideal } => write!(fmt, "J={ideal}"),
            Witness::QuotientPropertyA { ideal, inner } => {
                write!(fmt, "I={ideal}, J={inner}")
            }
            Witness::ContentOracleMismatch { f, direct, oracle } => {
                write!(fmt, "f={f}, content={direct}, oracle={oracle}")
            }
        }
    }
}

fn check_cap(s: &FreeAlgebra) -> Result<()> {
    let cap = s.base().caps().max_alg;
    if s.size() > cap {
        return Err(Error::SizeCap {
            what: "property scan over the algebra",
            requested: s.size() as u128,
            cap,
        });
    }
    Ok(())
}

/// Ideal arithmetic on lattice positions, with memoized products and
/// radicals.
struct IdealArith {
    ring: FiniteRing,
    cache: Arc<LatticeCache>,
    prod_memo: HashMap<(u32, u32), u32>,
    rad_memo: HashMap<u32, u32>,
}

impl IdealArith {
    fn new(ring: &FiniteRing) -> Result<IdealArith> {
        Ok(IdealArith {
            ring: ring.clone(),
            cache: ideals::lattice(ring)?,
            prod_memo: HashMap::new(),
            rad_memo: HashMap::new(),
        })
    }

    fn unit_id(&self) -> u32 {
        (self.cache.ideals.len() - 1) as u32
    }

    fn prod(&mut self, a: u32, b: u32) -> u32 {
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(&r) = self.prod_memo.get(&key) {
            return r;
        }
        let bits = product_bits(
            &self.ring,
            &self.cache.ideals[key.0 as usize],
            &self.cache.ideals[key.1 as usize],
        );
        let r = self.cache.pos[&bits];
        self.prod_memo.insert(key, r);
        r
    }

    fn rad(&mut self, a: u32) -> u32 {
        if let Some(&r) = self.rad_memo.get(&a) {
            return r;
        }
        let bits = radical_bits(&self.ring, &self.cache.ideals[a as usize]);
        let r = self.cache.pos[&bits];
        self.rad_memo.insert(a, r);
        r
    }
}

/// Result of the bounded Dedekind-Mertens search for one pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DmOutcome {
    /// The least witness exponent.
    Found(u32),
    /// The power chain of c(f) stabilized without the equation ever holding,
    /// so no exponent at all can work.
    DefinitelyAbsent,
    /// n_max was reached before the chain stabilized.
    Undecided,
}

fn dm_outcome_ids(arith: &mut IdealArith, cf: u32, cg: u32, cfg: u32, n_max: u32) -> DmOutcome {
    let mut pow = arith.unit_id(); // c(f)^0
    let mut n = 0u32;
    loop {
        let pow_next = arith.prod(pow, cf);
        let lhs = arith.prod(pow_next, cg);
        let rhs = arith.prod(pow, cfg);
        if lhs == rhs {
            return DmOutcome::Found(n);
        }
        if pow_next == pow {
            // both sides are frozen from here on
            return DmOutcome::DefinitelyAbsent;
        }
        if n == n_max {
            return DmOutcome::Undecided;
        }
        pow = pow_next;
        n += 1;
    }
}

/// Bounded Dedekind-Mertens search for one pair, with chain-stabilization
/// detection so that absence is definite whenever the chain freezes within
/// the bound.
pub fn dm_outcome(f: &AlgebraElement, g: &AlgebraElement, n_max: u32) -> Result<DmOutcome> {
    if !f.algebra().same_algebra(g.algebra()) {
        return Err(Error::DomainMismatch("elements of different algebras"));
    }
    let ring = f.algebra().base();
    let mut arith = IdealArith::new(ring)?;
    let fg = f.checked_mul(g)?;
    let cf = arith.cache.pos[f.content().member_bits()];
    let cg = arith.cache.pos[g.content().member_bits()];
    let cfg = arith.cache.pos[fg.content().member_bits()];
    Ok(dm_outcome_ids(&mut arith, cf, cg, cfg, n_max))
}

/// Least n ≤ n_max with c(f)^{n+1} c(g) = c(f)^n c(fg), or None.
pub fn dedekind_mertens_number(
    f: &AlgebraElement,
    g: &AlgebraElement,
    n_max: u32,
) -> Result<Option<u32>> {
    Ok(match dm_outcome(f, g, n_max)? {
        DmOutcome::Found(n) => Some(n),
        _ => None,
    })
}

/// Core McCoy scan: the first pair (f, g) with fg = 0, g nonzero, and
/// ann(content(f)) = 0, if any, plus the logical pair count.
fn mccoy_scan(s: &FreeAlgebra) -> Result<(Option<(usize, usize)>, u64)> {
    check_cap(s)?;
    let ring = s.base();
    let cache = ideals::lattice(ring)?;
    let ids = s.content_ids()?;
    let n = s.size();
    let rank = s.rank();
    let flat = s.coords_table();
    let zero_code = s.zero().code();
    let mut zero_bits = Bits::new(ring.size());
    zero_bits.set(ring.zero_idx() as usize);
    let mut ann_nonzero: HashMap<u32, bool> = HashMap::new();
    let mut prod = vec![0u32; rank];
    let zidx = ring.zero_idx();
    for f in 0..n {
        let fc = &flat[f * rank..(f + 1) * rank];
        for g in 0..n {
            if g == zero_code {
                continue;
            }
            let gc = &flat[g * rank..(g + 1) * rank];
            s.mul_into(fc, gc, &mut prod);
            if prod.iter().all(|&c| c == zidx) {
                // f kills g; either its content has a nonzero annihilator or
                // we have found the witness
                let ok = *ann_nonzero.entry(ids[f]).or_insert_with(|| {
                    colon_bits(ring, &zero_bits, &cache.ideals[ids[f] as usize]).count_ones() > 1
                });
                if !ok {
                    return Ok((Some((f, g)), (n * n) as u64));
                }
                break;
            }
        }
    }
    Ok((None, (n * n) as u64))
}

/// McCoy: every f that kills a nonzero g has c(f) annihilated by a nonzero
/// base element.
pub fn is_mccoy(s: &FreeAlgebra) -> Result<Verdict> {
    let (hit, count) = mccoy_scan(s)?;
    Ok(match hit {
        None => Verdict::pass(count),
        Some((f, g)) => Verdict::fail(
            Witness::ZeroDivisorPair {
                f: s.element_by_code(f),
                g: s.element_by_code(g),
            },
            count,
        ),
    })
}

/// Weak content, radical form: radical(c(fg)) = radical(c(f)c(g)) for all
/// pairs.
pub fn is_weak_content_radical(s: &FreeAlgebra) -> Result<Verdict> {
    check_cap(s)?;
    let triples = s.content_triples()?;
    let mut arith = IdealArith::new(s.base())?;
    let count = (s.size() * s.size()) as u64;
    for t in triples.iter() {
        let lhs = arith.prod(t.cf, t.cg);
        if arith.rad(lhs) != arith.rad(t.cfg) {
            return Ok(Verdict::fail(
                Witness::RadicalMismatch {
                    f: s.element_by_code(t.f_code as usize),
                    g: s.element_by_code(t.g_code as usize),
                },
                count,
            ));
        }
    }
    Ok(Verdict::pass(count))
}

/// Weak content, prime form: for every prime p of the base, the fiber
/// S/pS over the field R/p has no nonzero zero-divisor pair (pS = S cannot
/// occur for a free algebra of positive rank over a nontrivial ring).
pub fn is_weak_content_primes(s: &FreeAlgebra) -> Result<Verdict> {
    check_cap(s)?;
    let primes = spectrum(s.base())?;
    let mut count = 0u64;
    for p in primes {
        let (fiber, _) = s.base_change(&p)?;
        let n = fiber.size();
        let rank = fiber.rank();
        let flat = fiber.coords_table();
        let zero_code = fiber.zero().code();
        let zidx = fiber.base().zero_idx();
        let mut prod = vec![0u32; rank];
        count += ((n - 1) * (n - 1)) as u64;
        for f in 0..n {
            if f == zero_code {
                continue;
            }
            let fc = &flat[f * rank..(f + 1) * rank];
            for g in 0..n {
                if g == zero_code {
                    continue;
                }
                let gc = &flat[g * rank..(g + 1) * rank];
                fiber.mul_into(fc, gc, &mut prod);
                if prod.iter().all(|&c| c == zidx) {
                    return Ok(Verdict::fail(
                        Witness::NonPrimeFiber {
                            prime: p.clone(),
                            f: fiber.element_by_code(f),
                            g: fiber.element_by_code(g),
                        },
                        count,
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass(count))
}

/// Content algebra: faithfully flat and the Dedekind-Mertens equation has a
/// witness exponent for every pair.  Pairs where the bounded search hit
/// n_max before the chain stabilized are reported as a distinct error, never
/// folded into the verdict.
pub fn is_content_algebra(s: &FreeAlgebra, n_max: u32) -> Result<Verdict> {
    check_cap(s)?;
    // free of positive rank, so the faithful-flatness clause holds by flag
    assert!(s.faithfully_flat());
    let triples = s.content_triples()?;
    let mut arith = IdealArith::new(s.base())?;
    let count = (s.size() * s.size()) as u64;
    let mut undecided = 0u64;
    for t in triples.iter() {
        match dm_outcome_ids(&mut arith, t.cf, t.cg, t.cfg, n_max) {
            DmOutcome::Found(_) => {}
            DmOutcome::DefinitelyAbsent => {
                return Ok(Verdict::fail(
                    Witness::DedekindMertensFailure {
                        f: s.element_by_code(t.f_code as usize),
                        g: s.element_by_code(t.g_code as usize),
                    },
                    count,
                ));
            }
            DmOutcome::Undecided => undecided += 1,
        }
    }
    if undecided > 0 {
        return Err(Error::DmUndecided {
            pairs: undecided,
            n_max,
        });
    }
    Ok(Verdict::pass(count))
}

/// Semicontent: faithfully flat, and for every saturated multiplicative set
/// W and every pair with c(f) ∩ W nonempty, the localized contents of fg
/// and g agree.  The scan order is T-major (subset mask over the canonical
/// prime list), then the canonical pair order.
pub fn is_semicontent(s: &FreeAlgebra) -> Result<Verdict> {
    check_cap(s)?;
    // free of positive rank, so the faithful-flatness clause holds by flag
    assert!(s.faithfully_flat());
    let ring = s.base();
    let cache = ideals::lattice(ring)?;
    let triples = s.content_triples()?;
    let sets = SaturatedMultSet::all_saturated(ring)?;
    let count = sets.len() as u64 * (s.size() * s.size()) as u64;
    for t_set in &sets {
        let (loc, map) = ring.localize(t_set)?;
        let mut img_memo: HashMap<u32, Bits> = HashMap::new();
        let img = |id: u32, memo: &mut HashMap<u32, Bits>| -> Bits {
            memo.entry(id)
                .or_insert_with(|| {
                    let mut b = Bits::new(loc.size());
                    for m in cache.ideals[id as usize].iter_ones() {
                        b.set(map.apply_idx(m as u32) as usize);
                    }
                    b
                })
                .clone()
        };
        let w = t_set.member_bits();
        for t in triples.iter() {
            if !cache.ideals[t.cf as usize].intersects(w) {
                continue;
            }
            if img(t.cfg, &mut img_memo) != img(t.cg, &mut img_memo) {
                return Ok(Verdict::fail(
                    Witness::LocalizedContentMismatch {
                        primes: t_set.primes().to_vec(),
                        f: s.element_by_code(t.f_code as usize),
                        g: s.element_by_code(t.g_code as usize),
                    },
                    count,
                ));
            }
        }
    }
    Ok(Verdict::pass(count))
}

/// Residually McCoy for the given family of ideals: R/I -> S/IS is McCoy
/// for every I in the family, iterated in canonical lattice order.
pub fn is_residually_mccoy(s: &FreeAlgebra, family: IdealFilter) -> Result<Verdict> {
    check_cap(s)?;
    let fam = enumerate_ideals(s.base(), family)?;
    let mut count = 0u64;
    for ideal in fam {
        let (fiber, _) = s.base_change(&ideal)?;
        let (hit, c) = mccoy_scan(&fiber)?;
        count += c;
        if let Some((f, g)) = hit {
            return Ok(Verdict::fail(
                Witness::ResidualFailure {
                    ideal,
                    f: fiber.element_by_code(f),
                    g: fiber.element_by_code(g),
                },
                count,
            ));
        }
    }
    Ok(Verdict::pass(count))
}

/// Property (A): every ideal consisting of zero-divisors has a nonzero
/// annihilator.  (Every ideal of a finite ring is finitely generated.)
pub fn has_property_a(ring: &FiniteRing) -> Result<Verdict> {
    let cache = ideals::lattice(ring)?;
    let zd = &ring.class_bits().zero_divisors;
    let mut zero_bits = Bits::new(ring.size());
    zero_bits.set(ring.zero_idx() as usize);
    let count = cache.ideals.len() as u64;
    for b in &cache.ideals {
        if b.is_subset(zd) && colon_bits(ring, &zero_bits, b).count_ones() <= 1 {
            return Ok(Verdict::fail(
                Witness::IdealOfZeroDivisors {
                    ideal: Ideal::from_member_bits(ring.clone(), b.clone()),
                },
                count,
            ));
        }
    }
    Ok(Verdict::pass(count))
}

/// Fidel (A): every quotient of the ring has property (A).
pub fn has_fidel_a(ring: &FiniteRing) -> Result<Verdict> {
    let all = enumerate_ideals(ring, IdealFilter::All)?;
    let mut count = 0u64;
    for ideal in all {
        let (q, _) = ring.quotient(&ideal)?;
        let inner = has_property_a(&q)?;
        count += inner.checked_count;
        if !inner.holds {
            let Some(Witness::IdealOfZeroDivisors { ideal: bad }) = inner.witness else {
                unreachable!("property (A) failures carry an ideal witness");
            };
            return Ok(Verdict::fail(
                Witness::QuotientPropertyA { ideal, inner: bad },
                count,
            ));
        }
    }
    Ok(Verdict::pass(count))
}

/// content(f) = content_oracle(f), swept over every element when the algebra
/// has at most `full_limit` elements and over the first `sample` canonical
/// elements otherwise.
pub fn ohm_rush_consistency(s: &FreeAlgebra, full_limit: usize, sample: usize) -> Result<Verdict> {
    check_cap(s)?;
    let n = s.size();
    let codes = if n <= full_limit { n } else { sample.min(n) };
    for code in 0..codes {
        let f = s.element_by_code(code);
        let direct = f.content();
        let oracle = f.content_oracle()?;
        if direct != oracle {
            return Ok(Verdict::fail(
                Witness::ContentOracleMismatch {
                    f,
                    direct,
                    oracle,
                },
                codes as u64,
            ));
        }
    }
    Ok(Verdict::pass(codes as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FreeAlgebra;
    use crate::finring::FiniteRing;

    fn zmod(n: u64) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    fn cusp(n: usize) -> FreeAlgebra {
        let z2 = zmod(2);
        let (r, x) = FiniteRing::truncated(&z2, n).unwrap();
        FreeAlgebra::quadratic(&r, &x.pow(3)).unwrap()
    }

    // ------------------------------------------------------------------
    // Naive reference checkers, straight from the definitions, used as
    // oracles for the optimized implementations.
    // ------------------------------------------------------------------

    fn naive_mccoy(s: &FreeAlgebra) -> (bool, Option<(usize, usize)>) {
        let n = s.size();
        for f in 0..n {
            let fe = s.element_by_code(f);
            for g in 0..n {
                let ge = s.element_by_code(g);
                if ge.is_zero() {
                    continue;
                }
                if fe.checked_mul(&ge).unwrap().is_zero() {
                    if fe.content().annihilator().is_zero() {
                        return (false, Some((f, g)));
                    }
                    break;
                }
            }
        }
        (true, None)
    }

    fn naive_weak_radical(s: &FreeAlgebra) -> (bool, Option<(usize, usize)>) {
        let n = s.size();
        for f in 0..n {
            let fe = s.element_by_code(f);
            for g in 0..n {
                let ge = s.element_by_code(g);
                let fg = fe.checked_mul(&ge).unwrap();
                let lhs = fe.content().product(&ge.content()).unwrap().radical();
                if lhs != fg.content().radical() {
                    return (false, Some((f, g)));
                }
            }
        }
        (true, None)
    }

    fn naive_semicontent(s: &FreeAlgebra) -> (bool, Option<(usize, usize, usize)>) {
        let ring = s.base();
        let sets = SaturatedMultSet::all_saturated(ring).unwrap();
        let n = s.size();
        for (mask, t) in sets.iter().enumerate() {
            let (_, map) = ring.localize(t).unwrap();
            for f in 0..n {
                let fe = s.element_by_code(f);
                let meets = fe
                    .content()
                    .members()
                    .iter()
                    .any(|m| t.contains(m));
                if !meets {
                    continue;
                }
                for g in 0..n {
                    let ge = s.element_by_code(g);
                    let fg = fe.checked_mul(&ge).unwrap();
                    let a = map.image_ideal(&fg.content()).unwrap();
                    let b = map.image_ideal(&ge.content()).unwrap();
                    if a != b {
                        return (false, Some((mask, f, g)));
                    }
                }
            }
        }
        (true, None)
    }

    fn naive_dm_number(
        f: &AlgebraElement,
        g: &AlgebraElement,
        n_max: u32,
    ) -> Option<u32> {
        let fg = f.checked_mul(g).unwrap();
        let cf = f.content();
        let cg = g.content();
        let cfg = fg.content();
        let mut pow = Ideal::unit(f.algebra().base());
        for n in 0..=n_max {
            let pow_next = pow.product(&cf).unwrap();
            if pow_next.product(&cg).unwrap() == pow.product(&cfg).unwrap() {
                return Some(n);
            }
            pow = pow_next;
        }
        None
    }

    fn small_instances() -> Vec<FreeAlgebra> {
        let mut out = Vec::new();
        for n in [2u64, 3, 4, 6] {
            let r = zmod(n);
            out.push(FreeAlgebra::identity_algebra(&r).unwrap());
            out.push(FreeAlgebra::truncated(&r, 2).unwrap());
            out.push(FreeAlgebra::cyclic_group_algebra(&r, 2).unwrap());
            for a in 0..r.size().min(4) as u32 {
                out.push(FreeAlgebra::quadratic(&r, &r.elem(a)).unwrap());
            }
        }
        out.push(cusp(4));
        out
    }

    #[test]
    fn optimized_checkers_match_naive_definitions() {
        for s in small_instances() {
            let (want, want_w) = naive_mccoy(&s);
            let got = is_mccoy(&s).unwrap();
            assert_eq!(got.holds, want, "mccoy mismatch on {s}");
            if let (Some(Witness::ZeroDivisorPair { f, g }), Some((wf, wg))) =
                (&got.witness, want_w)
            {
                assert_eq!((f.code(), g.code()), (wf, wg), "mccoy witness on {s}");
            }

            let (want, want_w) = naive_weak_radical(&s);
            let got = is_weak_content_radical(&s).unwrap();
            assert_eq!(got.holds, want, "weak radical mismatch on {s}");
            if let (Some(Witness::RadicalMismatch { f, g }), Some((wf, wg))) =
                (&got.witness, want_w)
            {
                assert_eq!((f.code(), g.code()), (wf, wg), "weak radical witness on {s}");
            }

            let (want, want_w) = naive_semicontent(&s);
            let got = is_semicontent(&s).unwrap();
            assert_eq!(got.holds, want, "semicontent mismatch on {s}");
            if let (Some(Witness::LocalizedContentMismatch { f, g, .. }), Some((_, wf, wg))) =
                (&got.witness, want_w)
            {
                assert_eq!((f.code(), g.code()), (wf, wg), "semicontent witness on {s}");
            }
        }
    }

    #[test]
    fn dm_number_matches_naive_search() {
        for s in small_instances() {
            if s.size() > 64 {
                continue;
            }
            for f in s.elements() {
                for g in s.elements() {
                    let fast = dedekind_mertens_number(&f, &g, 6).unwrap();
                    let slow = naive_dm_number(&f, &g, 6);
                    assert_eq!(fast, slow, "dm({f}, {g}) in {s}");
                }
            }
        }
    }

    #[test]
    fn identity_algebras_have_every_property() {
        for n in [2u64, 4, 6, 9] {
            let s = FreeAlgebra::identity_algebra(&zmod(n)).unwrap();
            assert!(is_mccoy(&s).unwrap().holds);
            assert!(is_weak_content_radical(&s).unwrap().holds);
            assert!(is_weak_content_primes(&s).unwrap().holds);
            assert!(is_content_algebra(&s, 8).unwrap().holds);
            assert!(is_semicontent(&s).unwrap().holds);
            assert!(is_residually_mccoy(&s, IdealFilter::All).unwrap().holds);
        }
    }

    #[test]
    fn truncated_z4_mccoy_witness_is_x_x() {
        let s = FreeAlgebra::truncated(&zmod(4), 2).unwrap();
        let v = is_mccoy(&s).unwrap();
        assert!(!v.holds);
        let Some(Witness::ZeroDivisorPair { f, g }) = v.witness else {
            panic!("expected a zero-divisor pair");
        };
        assert_eq!(f.to_string(), "x");
        assert_eq!(g.to_string(), "x");
    }

    #[test]
    fn cusp_analog_is_not_mccoy_at_finite_depth() {
        // y kills x^(N-3)·y because y^2 = x^3, so x^(N-3)·y^2 = x^N = 0,
        // while c(y) is the unit ideal.  Truncation therefore destroys the
        // McCoy property the untruncated domain enjoys vacuously.
        for (n, killer) in [(4usize, "x*y"), (5, "x^2*y")] {
            let s = cusp(n);
            let v = is_mccoy(&s).unwrap();
            assert!(!v.holds);
            let Some(Witness::ZeroDivisorPair { f, g }) = v.witness else {
                panic!("expected a zero-divisor pair");
            };
            assert_eq!(f.to_string(), "y");
            assert_eq!(g.to_string(), killer);
        }
    }

    #[test]
    fn cusp_analog_weak_content_fails_at_y_y() {
        let s = cusp(4);
        let v = is_weak_content_radical(&s).unwrap();
        assert!(!v.holds);
        let Some(Witness::RadicalMismatch { f, g }) = v.witness else {
            panic!("expected a radical mismatch");
        };
        assert_eq!((f.to_string(), g.to_string()), ("y".into(), "y".into()));
        assert!(!is_weak_content_primes(&s).unwrap().holds);
        assert!(!is_content_algebra(&s, 8).unwrap().holds);
        assert!(!is_semicontent(&s).unwrap().holds);
    }

    #[test]
    fn weak_content_forms_agree() {
        for s in small_instances() {
            let a = is_weak_content_radical(&s).unwrap().holds;
            let b = is_weak_content_primes(&s).unwrap().holds;
            assert_eq!(a, b, "the two weak content characterizations on {s}");
        }
    }

    #[test]
    fn trunc_f2_depth2_weak_content_fails_at_zero_prime() {
        let s = FreeAlgebra::truncated(&zmod(2), 2).unwrap();
        let v = is_weak_content_primes(&s).unwrap();
        assert!(!v.holds);
        let Some(Witness::NonPrimeFiber { prime, f, g }) = v.witness else {
            panic!("expected a fiber witness");
        };
        assert!(prime.is_zero());
        assert_eq!((f.to_string(), g.to_string()), ("x".into(), "x".into()));
    }

    #[test]
    fn dm_examples() {
        let z5 = zmod(5);
        let s = FreeAlgebra::identity_algebra(&z5).unwrap();
        let f = s.element_by_code(2);
        let g = s.element_by_code(3);
        assert_eq!(dedekind_mertens_number(&f, &g, 8).unwrap(), Some(0));

        let z2 = zmod(2);
        let q = FreeAlgebra::quadratic(&z2, &z2.zero()).unwrap();
        let y = q.gen().unwrap();
        assert_eq!(dedekind_mertens_number(&y, &y, 8).unwrap(), None);
        assert_eq!(dm_outcome(&y, &y, 8).unwrap(), DmOutcome::DefinitelyAbsent);

        let z4 = zmod(4);
        let t = FreeAlgebra::truncated(&z4, 2).unwrap();
        let f = t.scalar(&z4.elem(2)).unwrap();
        let g = t.gen().unwrap();
        assert_eq!(dedekind_mertens_number(&f, &g, 8).unwrap(), Some(0));
    }

    #[test]
    fn content_algebra_examples() {
        let z4 = zmod(4);
        assert!(is_content_algebra(&FreeAlgebra::identity_algebra(&z4).unwrap(), 8)
            .unwrap()
            .holds);
        let z2 = zmod(2);
        let q = FreeAlgebra::quadratic(&z2, &z2.zero()).unwrap();
        let v = is_content_algebra(&q, 8).unwrap();
        assert!(!v.holds);
        let Some(Witness::DedekindMertensFailure { f, g }) = v.witness else {
            panic!("expected a Dedekind-Mertens failure");
        };
        assert_eq!((f.to_string(), g.to_string()), ("y".into(), "y".into()));
    }

    #[test]
    fn semicontent_trunc_f2_witness() {
        let s = FreeAlgebra::truncated(&zmod(2), 2).unwrap();
        let v = is_semicontent(&s).unwrap();
        assert!(!v.holds);
        let Some(Witness::LocalizedContentMismatch { primes, f, g }) = v.witness else {
            panic!("expected a localized content mismatch");
        };
        // first failing T in mask order is {(0)}, with the pair (x, x)
        assert_eq!(primes.len(), 1);
        assert!(primes[0].is_zero());
        assert_eq!((f.to_string(), g.to_string()), ("x".into(), "x".into()));
    }

    #[test]
    fn residually_mccoy_cusp_fails_at_the_prime() {
        let s = cusp(4);
        let v = is_residually_mccoy(&s, IdealFilter::Prime).unwrap();
        assert!(!v.holds);
        let Some(Witness::ResidualFailure { ideal, f, g }) = v.witness else {
            panic!("expected a residual failure");
        };
        assert_eq!(ideal.to_string(), "(x)");
        // the fiber is F2[y]/(y^2), where y kills itself with unit content
        assert_eq!((f.to_string(), g.to_string()), ("y".into(), "y".into()));
    }

    #[test]
    fn residually_mccoy_all_contains_the_zero_ideal_case() {
        for s in small_instances() {
            let at_zero = is_mccoy(&s).unwrap().holds;
            let all = is_residually_mccoy(&s, IdealFilter::All).unwrap().holds;
            // all-family failure may come from a different ideal, but
            // all-family success forces McCoy at the zero ideal
            if all {
                assert!(at_zero, "rmc(all) true but mccoy false on {s}");
            }
        }
    }

    #[test]
    fn group_algebra_f2_z2_is_not_mccoy() {
        let s = FreeAlgebra::cyclic_group_algebra(&zmod(2), 2).unwrap();
        let v = is_mccoy(&s).unwrap();
        assert!(!v.holds);
        let Some(Witness::ZeroDivisorPair { f, g }) = v.witness else {
            panic!("expected a zero-divisor pair");
        };
        assert_eq!(f.to_string(), "1+t");
        assert_eq!(g.to_string(), "1+t");
    }

    #[test]
    fn property_a_and_fidel_a_examples() {
        for n in [4u64, 6, 9, 12] {
            let r = zmod(n);
            assert!(has_property_a(&r).unwrap().holds);
            assert!(has_fidel_a(&r).unwrap().holds);
        }
        let z4 = zmod(4);
        // detail check on Z/4: the ideals of zero-divisors are (0) and (2),
        // and ann((2)) = (2) is nonzero
        let i2 = Ideal::generated(&z4, &[z4.elem(2)]).unwrap();
        assert_eq!(i2.annihilator(), i2);
    }

    #[test]
    fn ohm_rush_consistency_sweeps() {
        for s in small_instances() {
            let v = ohm_rush_consistency(&s, 1024, 1000).unwrap();
            assert!(v.holds, "oracle mismatch on {s}");
        }
    }

    #[test]
    fn every_failing_witness_revalidates() {
        for s in small_instances() {
            for v in [
                is_mccoy(&s).unwrap(),
                is_weak_content_radical(&s).unwrap(),
                is_weak_content_primes(&s).unwrap(),
                is_content_algebra(&s, 8).unwrap(),
                is_semicontent(&s).unwrap(),
                is_residually_mccoy(&s, IdealFilter::All).unwrap(),
                is_residually_mccoy(&s, IdealFilter::Radical).unwrap(),
                is_residually_mccoy(&s, IdealFilter::Prime).unwrap(),
            ] {
                if let Some(w) = v.witness {
                    assert!(w.revalidate(), "witness {w} on {s}");
                }
            }
        }
    }
}
