//! Ideal arithmetic and the ideal lattice of a finite ring.
//!
//! Ideals are stored as membership bitsets; a canonical generating set
//! (greedy, in ascending element order) is kept alongside for printing.
//! The full lattice is enumerated as the join closure of the principal
//! ideals and cached per ring, so repeated property checks share it.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::finring::{FiniteRing, LatticeCache, RingElement, RingMap};

/// An ideal of a [`FiniteRing`]: contains 0, closed under addition and under
/// multiplication by every ring element.
#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    members: Bits,
    gens: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Colon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealFilter {
    All,
    Radical,
    Prime,
}

/// Pointwise sum `{ a + b }` of two additively closed subsets.  For ideals
/// this is exactly the ideal sum.
pub(crate) fn sumset(ring: &FiniteRing, a: &Bits, b: &Bits) -> Bits {
    let mut out = Bits::new(ring.size());
    let bs: Vec<u32> = b.iter_ones().map(|i| i as u32).collect();
    for i in a.iter_ones() {
        for &j in &bs {
            out.set(ring.add_idx(i as u32, j) as usize);
        }
    }
    out
}

/// Membership bitset of the ideal generated by `gens`: the pointwise sum of
/// their principal ideals.
pub(crate) fn span_bits(ring: &FiniteRing, gens: &[u32]) -> Bits {
    let principal = ring.principal_bits();
    let mut acc = Bits::new(ring.size());
    acc.set(ring.zero_idx() as usize);
    for &g in gens {
        acc = sumset(ring, &acc, &principal[g as usize]);
    }
    acc
}

/// Greedy canonical generators: scan members in ascending index order,
/// keeping each element not already spanned.
fn canonical_gens(ring: &FiniteRing, members: &Bits) -> Vec<u32> {
    let principal = ring.principal_bits();
    let mut gens = Vec::new();
    let mut span = Bits::new(ring.size());
    span.set(ring.zero_idx() as usize);
    for i in members.iter_ones() {
        if span.get(i) {
            continue;
        }
        gens.push(i as u32);
        span = sumset(ring, &span, &principal[i]);
        if &span == members {
            break;
        }
    }
    gens
}

impl Ideal {
    /// The least ideal containing the given generators.
    pub fn generated(ring: &FiniteRing, gens: &[RingElement]) -> Result<Ideal> {
        let mut idx = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same_ring(ring) {
                return Err(Error::DomainMismatch("generator from a different ring"));
            }
            idx.push(g.index());
        }
        Ok(Ideal::generated_idx(ring, &idx))
    }

    pub(crate) fn generated_idx(ring: &FiniteRing, gens: &[u32]) -> Ideal {
        let members = span_bits(ring, gens);
        Ideal::from_member_bits(ring.clone(), members)
    }

    /// Wrap a membership bitset that is already known to be an ideal.
    pub(crate) fn from_member_bits(ring: FiniteRing, members: Bits) -> Ideal {
        let gens = canonical_gens(&ring, &members);
        debug_assert_eq!(span_bits(&ring, &gens), members, "set is not an ideal");
        Ideal {
            ring,
            members,
            gens,
        }
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal::generated_idx(ring, &[])
    }

    pub fn unit(ring: &FiniteRing) -> Ideal {
        Ideal::generated_idx(ring, &[ring.one_idx()])
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.members.is_full()
    }

    pub fn contains(&self, e: &RingElement) -> bool {
        e.ring().same_ring(&self.ring) && self.members.get(e.index() as usize)
    }

    pub(crate) fn contains_idx(&self, i: u32) -> bool {
        self.members.get(i as usize)
    }

    pub fn members(&self) -> Vec<RingElement> {
        self.members
            .iter_ones()
            .map(|i| self.ring.elem(i as u32))
            .collect()
    }

    pub(crate) fn member_indices(&self) -> Vec<u32> {
        self.members.iter_ones().map(|i| i as u32).collect()
    }

    pub fn generators(&self) -> Vec<RingElement> {
        self.gens.iter().map(|&g| self.ring.elem(g)).collect()
    }

    pub(crate) fn generator_indices(&self) -> &[u32] {
        &self.gens
    }

    pub(crate) fn member_bits(&self) -> &Bits {
        &self.members
    }

    fn check_same(&self, other: &Ideal) -> Result<()> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::DomainMismatch("ideals over different rings"));
        }
        Ok(())
    }

    pub fn combine(&self, other: &Ideal, op: IdealOp) -> Result<Ideal> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersection => self.intersection(other),
            IdealOp::Colon => self.colon(other),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let members = sumset(&self.ring, &self.members, &other.members);
        Ok(Ideal::from_member_bits(self.ring.clone(), members))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let members = product_bits(&self.ring, &self.members, &other.members);
        Ok(Ideal::from_member_bits(self.ring.clone(), members))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Ideal::from_member_bits(self.ring.clone(), members))
    }

    /// `(I : J) = { r : rJ ⊆ I }`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let members = colon_bits(&self.ring, &self.members, &other.members);
        Ok(Ideal::from_member_bits(self.ring.clone(), members))
    }

    /// `{ r : rI = 0 }`, i.e. `((0) : I)`.
    pub fn annihilator(&self) -> Ideal {
        let mut zero = Bits::new(self.ring.size());
        zero.set(self.ring.zero_idx() as usize);
        let members = colon_bits(&self.ring, &zero, &self.members);
        Ideal::from_member_bits(self.ring.clone(), members)
    }

    /// `{ r : r^k ∈ I for some k ≥ 1 }`, by power-cycle detection.
    pub fn radical(&self) -> Ideal {
        let members = radical_bits(&self.ring, &self.members);
        Ideal::from_member_bits(self.ring.clone(), members)
    }

    /// Prime: proper, and a,b outside the ideal have their product outside.
    pub fn is_prime(&self) -> bool {
        is_prime_bits(&self.ring, &self.members)
    }

    pub fn is_radical(&self) -> bool {
        radical_bits(&self.ring, &self.members) == self.members
    }

    /// Maximal: proper, and adjoining any outside element yields the whole
    /// ring.  Computed independently of primality.
    pub fn is_maximal(&self) -> bool {
        if self.members.is_full() {
            return false;
        }
        let principal = self.ring.principal_bits();
        for (a, p) in principal.iter().enumerate() {
            if self.members.get(a) {
                continue;
            }
            if !sumset(&self.ring, &self.members, p).is_full() {
                return false;
            }
        }
        true
    }
}

pub(crate) fn product_bits(ring: &FiniteRing, a: &Bits, b: &Bits) -> Bits {
    // product = sum over canonical generators g of a of the sets g·b
    let gens = canonical_gens(ring, a);
    let mut acc = Bits::new(ring.size());
    acc.set(ring.zero_idx() as usize);
    for g in gens {
        let mut gb = Bits::new(ring.size());
        for j in b.iter_ones() {
            gb.set(ring.mul_idx(g, j as u32) as usize);
        }
        acc = sumset(ring, &acc, &gb);
    }
    acc
}

pub(crate) fn colon_bits(ring: &FiniteRing, i: &Bits, j: &Bits) -> Bits {
    let js: Vec<u32> = j.iter_ones().map(|x| x as u32).collect();
    let mut out = Bits::new(ring.size());
    'outer: for r in 0..ring.size() as u32 {
        for &x in &js {
            if !i.get(ring.mul_idx(r, x) as usize) {
                continue 'outer;
            }
        }
        out.set(r as usize);
    }
    out
}

pub(crate) fn radical_bits(ring: &FiniteRing, i: &Bits) -> Bits {
    let n = ring.size();
    let mut out = Bits::new(n);
    for r in 0..n as u32 {
        let mut p = r;
        let mut steps = 0usize;
        loop {
            if i.get(p as usize) {
                out.set(r as usize);
                break;
            }
            steps += 1;
            if steps > n {
                break;
            }
            p = ring.mul_idx(p, r);
        }
    }
    out
}

pub(crate) fn is_prime_bits(ring: &FiniteRing, i: &Bits) -> bool {
    if i.is_full() {
        return false;
    }
    let outside: Vec<u32> = (0..ring.size() as u32)
        .filter(|&x| !i.get(x as usize))
        .collect();
    for &a in &outside {
        for &b in &outside {
            if i.get(ring.mul_idx(a, b) as usize) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn lattice(ring: &FiniteRing) -> Result<Arc<LatticeCache>> {
    ring.0
        .lattice
        .get_or_init(|| {
            let cap = ring.caps().max_ideals;
            let principal = ring.principal_bits().clone();
            let mut seen: HashMap<Bits, u32> = HashMap::new();
            let mut list: Vec<Bits> = Vec::new();
            let zero_ideal = {
                let mut b = Bits::new(ring.size());
                b.set(ring.zero_idx() as usize);
                b
            };
            let mut queue = vec![zero_ideal];
            while let Some(b) = queue.pop() {
                if seen.contains_key(&b) {
                    continue;
                }
                if list.len() >= cap {
                    return Err(Error::IdealCap { cap });
                }
                seen.insert(b.clone(), 0);
                list.push(b.clone());
                for p in &principal {
                    let joined = sumset(ring, &b, p);
                    if !seen.contains_key(&joined) {
                        queue.push(joined);
                    }
                }
            }
            list.sort_by_key(|b| b.canon_key());
            let pos: HashMap<Bits, u32> = list
                .iter()
                .enumerate()
                .map(|(i, b)| (b.clone(), i as u32))
                .collect();
            let primes: Vec<u32> = list
                .iter()
                .enumerate()
                .filter(|(_, b)| is_prime_bits(ring, b))
                .map(|(i, _)| i as u32)
                .collect();
            let maximals: Vec<u32> = list
                .iter()
                .enumerate()
                .filter(|(_, b)| {
                    Ideal::from_member_bits(ring.clone(), (*b).clone()).is_maximal()
                })
                .map(|(i, _)| i as u32)
                .collect();
            Ok(Arc::new(LatticeCache {
                ideals: list,
                pos,
                primes,
                maximals,
            }))
        })
        .clone()
}

/// Complete, duplicate-free list of the ideals of `ring`, zero ideal first
/// and unit ideal last, optionally filtered to the radical or prime ones.
pub fn enumerate_ideals(ring: &FiniteRing, filter: IdealFilter) -> Result<Vec<Ideal>> {
    let cache = lattice(ring)?;
    let ids: Vec<u32> = match filter {
        IdealFilter::All => (0..cache.ideals.len() as u32).collect(),
        IdealFilter::Prime => cache.primes.clone(),
        IdealFilter::Radical => (0..cache.ideals.len() as u32)
            .filter(|&i| radical_bits(ring, &cache.ideals[i as usize]) == cache.ideals[i as usize])
            .collect(),
    };
    Ok(ids
        .into_iter()
        .map(|i| Ideal::from_member_bits(ring.clone(), cache.ideals[i as usize].clone()))
        .collect())
}

/// The prime spectrum, as the prime-filtered ideal list.
pub fn spectrum(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    enumerate_ideals(ring, IdealFilter::Prime)
}

/// The maximal ideals, computed independently of primality.
pub fn maximal_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    let cache = lattice(ring)?;
    Ok(cache
        .maximals
        .iter()
        .map(|&i| Ideal::from_member_bits(ring.clone(), cache.ideals[i as usize].clone()))
        .collect())
}

impl RingMap {
    /// Ideal generated by the images of the generators.
    pub fn image_ideal(&self, i: &Ideal) -> Result<Ideal> {
        if !i.ring().same_ring(self.source()) {
            return Err(Error::DomainMismatch("ideal not in the map source"));
        }
        let gens: Vec<u32> = i.generator_indices().iter().map(|&g| self.apply_idx(g)).collect();
        Ok(Ideal::generated_idx(self.target(), &gens))
    }

    /// `{ r : m(r) ∈ J }`.
    pub fn preimage_ideal(&self, j: &Ideal) -> Result<Ideal> {
        if !j.ring().same_ring(self.target()) {
            return Err(Error::DomainMismatch("ideal not in the map target"));
        }
        let mut members = Bits::new(self.source().size());
        for r in 0..self.source().size() as u32 {
            if j.contains_idx(self.apply_idx(r)) {
                members.set(r as usize);
            }
        }
        Ok(Ideal::from_member_bits(self.source().clone(), members))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "({})", self.ring.name(self.ring.zero_idx()));
        }
        let names: Vec<&str> = self.gens.iter().map(|&g| self.ring.name(g)).collect();
        write!(f, "({})", names.join(", "))
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} of {}", self, self.ring.descriptor())
    }
}

/// A saturated multiplicative set `W = R \ ∪T` for a set `T` of primes.
/// Every localization of a finite ring arises from one of these.
#[derive(Clone)]
pub struct SaturatedMultSet {
    ring: FiniteRing,
    primes: Vec<Ideal>,
    members: Bits,
}

impl SaturatedMultSet {
    pub fn new(ring: FiniteRing, primes: Vec<Ideal>) -> Result<SaturatedMultSet> {
        let mut union = Bits::new(ring.size());
        for p in &primes {
            if !p.ring().same_ring(&ring) {
                return Err(Error::DomainMismatch("prime from a different ring"));
            }
            if !p.is_prime() {
                return Err(Error::InvalidMultSet(p.to_string()));
            }
            union.union_with(p.member_bits());
        }
        let members = union.complement();
        Ok(SaturatedMultSet {
            ring,
            primes,
            members,
        })
    }

    /// The set designating localization at the units only: T = all primes.
    pub fn units_only(ring: &FiniteRing) -> Result<SaturatedMultSet> {
        let primes = spectrum(ring)?;
        SaturatedMultSet::new(ring.clone(), primes)
    }

    /// All saturated multiplicative sets of the ring, enumerated by subset
    /// mask over the canonical prime list (empty set first).
    pub fn all_saturated(ring: &FiniteRing) -> Result<Vec<SaturatedMultSet>> {
        let primes = spectrum(ring)?;
        let p = primes.len();
        assert!(p < 31, "too many primes to enumerate saturated sets");
        let mut out = Vec::with_capacity(1 << p);
        for mask in 0u32..(1 << p) {
            let chosen: Vec<Ideal> = (0..p)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| primes[i].clone())
                .collect();
            out.push(SaturatedMultSet::new(ring.clone(), chosen)?);
        }
        Ok(out)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn contains(&self, e: &RingElement) -> bool {
        e.ring().same_ring(&self.ring) && self.members.get(e.index() as usize)
    }

    pub(crate) fn member_indices(&self) -> Vec<u32> {
        self.members.iter_ones().map(|i| i as u32).collect()
    }

    pub(crate) fn member_bits(&self) -> &Bits {
        &self.members
    }
}

impl std::fmt::Display for SaturatedMultSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}
