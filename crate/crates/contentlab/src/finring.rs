//! Finite commutative rings with explicit operation tables.
//!
//! A [`FiniteRing`] stores its full addition and multiplication tables, so
//! every ring-theoretic question about it is decidable by enumeration.  Rings
//! are built compositionally: `Z/n`, binary products, truncated polynomial
//! rings `R[x]/(x^d)`, and quotients by ideals.  Localization at a saturated
//! multiplicative set is realized as a quotient, which is exact for finite
//! rings because every regular element of a finite ring is a unit.
//!
//! All values are immutable after construction and cheap to clone (shared
//! behind an `Arc`), so they can be used freely across threads.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ideals::{Ideal, SaturatedMultSet};

pub const DEFAULT_MAX_RING: usize = 4096;
pub const DEFAULT_MAX_ALG: usize = 4096;
pub const DEFAULT_MAX_IDEALS: usize = 20_000;

/// Size caps for constructed objects.  Exceeding a cap is an explicit error,
/// never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements in a constructed ring.
    pub max_ring: usize,
    /// Maximum number of elements of a free algebra (base size ^ rank).
    pub max_alg: usize,
    /// Maximum number of ideals enumerated per ring.
    pub max_ideals: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_ring: DEFAULT_MAX_RING,
            max_alg: DEFAULT_MAX_ALG,
            max_ideals: DEFAULT_MAX_IDEALS,
        }
    }
}

/// How the ring was built; drives grammar-expression rendering of elements.
pub(crate) enum RingStructure {
    Zmod,
    Product,
    Trunc { base: FiniteRing, depth: usize },
    Quotient { source: FiniteRing, class_rep: Vec<u32> },
}

pub(crate) struct LatticeCache {
    /// All ideals as membership bitsets, sorted with the zero ideal first and
    /// the unit ideal last.
    pub ideals: Vec<Bits>,
    pub pos: HashMap<Bits, u32>,
    /// Indices into `ideals` of the prime ideals.
    pub primes: Vec<u32>,
    /// Indices into `ideals` of the maximal ideals (computed independently).
    pub maximals: Vec<u32>,
}

pub(crate) struct ClassBits {
    pub units: Bits,
    pub zero_divisors: Bits,
    pub nilpotents: Bits,
    pub idempotents: Bits,
}

pub(crate) struct RingData {
    pub size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    pub zero: u32,
    pub one: u32,
    pub descriptor: String,
    pub names: Vec<String>,
    /// Distinguished truncation generator, when the construction has one.
    pub gen_index: Option<u32>,
    pub caps: Caps,
    pub(crate) structure: RingStructure,
    pub(crate) principal: OnceLock<Vec<Bits>>,
    pub(crate) lattice: OnceLock<Result<Arc<LatticeCache>>>,
    pub(crate) classes: OnceLock<ClassBits>,
}

/// A finite commutative ring with unit, given by explicit operation tables.
#[derive(Clone)]
pub struct FiniteRing(pub(crate) Arc<RingData>);

/// An element of a [`FiniteRing`], identified by its index.
#[derive(Clone)]
pub struct RingElement {
    ring: FiniteRing,
    index: u32,
}

/// A unital ring homomorphism between two finite rings, as an image table.
#[derive(Clone)]
pub struct RingMap {
    source: FiniteRing,
    target: FiniteRing,
    image: Vec<u32>,
}

/// The element classification of a finite ring.  In a finite ring the
/// regular elements are exactly the units, which is asserted on construction.
pub struct ElementClasses {
    pub units: Vec<RingElement>,
    pub zero_divisors: Vec<RingElement>,
    pub nilpotents: Vec<RingElement>,
    pub idempotents: Vec<RingElement>,
    pub regular: Vec<RingElement>,
}

impl FiniteRing {
    #[allow(clippy::too_many_arguments)]
    fn from_parts(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: u32,
        one: u32,
        descriptor: String,
        names: Vec<String>,
        gen_index: Option<u32>,
        caps: Caps,
        structure: RingStructure,
    ) -> FiniteRing {
        assert!(size >= 1);
        assert!(size == 1 || zero != one, "zero = one in a ring of size > 1");
        let mut neg = vec![u32::MAX; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b] == zero {
                    neg[a] = b as u32;
                    break;
                }
            }
        }
        assert!(neg.iter().all(|&n| n != u32::MAX), "addition lacks inverses");
        let ring = FiniteRing(Arc::new(RingData {
            size,
            add,
            mul,
            neg,
            zero,
            one,
            descriptor,
            names,
            gen_index,
            caps,
            structure,
            principal: OnceLock::new(),
            lattice: OnceLock::new(),
            classes: OnceLock::new(),
        }));
        // full axiom scan on small rings; larger rings are validated by the
        // test suite's explicit verify_axioms calls
        if size <= 64 {
            if let Err(msg) = ring.verify_axioms() {
                panic!("constructed ring violates ring axioms: {msg}");
            }
        }
        ring
    }

    /// Z/n with elements 0..n-1 in canonical order.
    pub fn zmod(n: u64) -> Result<FiniteRing> {
        FiniteRing::zmod_with(n, Caps::default())
    }

    pub fn zmod_with(n: u64, caps: Caps) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        if n as u128 > caps.max_ring as u128 {
            return Err(Error::SizeCap {
                what: "ring Z/n",
                requested: n as u128,
                cap: caps.max_ring,
            });
        }
        let size = n as usize;
        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        for a in 0..size {
            for b in 0..size {
                add[a * size + b] = ((a + b) % size) as u32;
                mul[a * size + b] = ((a * b) % size) as u32;
            }
        }
        let one = if size == 1 { 0 } else { 1 };
        let names = (0..size).map(|i| i.to_string()).collect();
        Ok(FiniteRing::from_parts(
            size,
            add,
            mul,
            0,
            one,
            format!("Z/{n}"),
            names,
            None,
            caps,
            RingStructure::Zmod,
        ))
    }

    /// Componentwise product ring on pairs, first factor major in the index.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
        let caps = a.0.caps;
        let requested = a.size() as u128 * b.size() as u128;
        if requested > caps.max_ring as u128 {
            return Err(Error::SizeCap {
                what: "product ring",
                requested,
                cap: caps.max_ring,
            });
        }
        let (sa, sb) = (a.size(), b.size());
        let size = sa * sb;
        let pack = |x: u32, y: u32| x * sb as u32 + y;
        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        for i in 0..size {
            let (x1, y1) = ((i / sb) as u32, (i % sb) as u32);
            for j in 0..size {
                let (x2, y2) = ((j / sb) as u32, (j % sb) as u32);
                add[i * size + j] = pack(a.add_idx(x1, x2), b.add_idx(y1, y2));
                mul[i * size + j] = pack(a.mul_idx(x1, x2), b.mul_idx(y1, y2));
            }
        }
        let zero = pack(a.0.zero, b.0.zero);
        let one = pack(a.0.one, b.0.one);
        let names = (0..size)
            .map(|i| format!("({},{})", a.name((i / sb) as u32), b.name((i % sb) as u32)))
            .collect();
        let descriptor = format!("prod({},{})", a.descriptor(), b.descriptor());
        Ok(FiniteRing::from_parts(
            size,
            add,
            mul,
            zero,
            one,
            descriptor,
            names,
            None,
            caps,
            RingStructure::Product,
        ))
    }

    /// The truncated polynomial ring `base[x]/(x^depth)` together with the
    /// image of x.  Element index encoding is little-endian positional:
    /// index = sum coeff_i * size^i.
    pub fn truncated(base: &FiniteRing, depth: usize) -> Result<(FiniteRing, RingElement)> {
        if depth == 0 {
            return Err(Error::Usage("truncation depth must be at least 1".into()));
        }
        let caps = base.0.caps;
        let requested = (base.size() as u128).checked_pow(depth as u32);
        match requested {
            Some(r) if r <= caps.max_ring as u128 => {}
            _ => {
                return Err(Error::SizeCap {
                    what: "truncated polynomial ring",
                    requested: requested.unwrap_or(u128::MAX),
                    cap: caps.max_ring,
                })
            }
        }
        let bs = base.size();
        let size = bs.pow(depth as u32);
        let decode = |mut i: usize| {
            let mut c = vec![0u32; depth];
            for ck in c.iter_mut() {
                *ck = (i % bs) as u32;
                i /= bs;
            }
            c
        };
        let encode = |c: &[u32]| {
            let mut i = 0usize;
            for &ck in c.iter().rev() {
                i = i * bs + ck as usize;
            }
            i as u32
        };
        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        let mut scratch = vec![base.0.zero; depth];
        for i in 0..size {
            let ci = decode(i);
            for j in 0..size {
                let cj = decode(j);
                let csum: Vec<u32> = ci
                    .iter()
                    .zip(&cj)
                    .map(|(&x, &y)| base.add_idx(x, y))
                    .collect();
                add[i * size + j] = encode(&csum);
                scratch.fill(base.0.zero);
                for (p, &x) in ci.iter().enumerate() {
                    if x == base.0.zero {
                        continue;
                    }
                    for (q, &y) in cj.iter().enumerate() {
                        if p + q >= depth || y == base.0.zero {
                            continue;
                        }
                        let t = base.mul_idx(x, y);
                        scratch[p + q] = base.add_idx(scratch[p + q], t);
                    }
                }
                mul[i * size + j] = encode(&scratch);
            }
        }
        let mut one_c = vec![base.0.zero; depth];
        one_c[0] = base.0.one;
        let one = encode(&one_c);
        let gen = if depth >= 2 {
            let mut xc = vec![base.0.zero; depth];
            xc[1] = base.0.one;
            encode(&xc)
        } else {
            // x is truncated away entirely
            encode(&vec![base.0.zero; depth])
        };
        let names = (0..size)
            .map(|i| trunc_name(base, &decode(i)))
            .collect::<Vec<_>>();
        let descriptor = format!("trunc({},{})", base.descriptor(), depth);
        let ring = FiniteRing::from_parts(
            size,
            add,
            mul,
            encode(&vec![base.0.zero; depth]),
            one,
            descriptor,
            names,
            Some(gen),
            caps,
            RingStructure::Trunc {
                base: base.clone(),
                depth,
            },
        );
        let x = ring.elem(gen);
        Ok((ring, x))
    }

    /// Quotient by an ideal: the ring of additive cosets, with the projection
    /// map.  Cosets are indexed by ascending minimal representative.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(FiniteRing, RingMap)> {
        if !self.same_ring(ideal.ring()) {
            return Err(Error::DomainMismatch("ideal belongs to a different ring"));
        }
        let n = self.size();
        let members: Vec<u32> = ideal.member_indices();
        let mut class_of = vec![u32::MAX; n];
        let mut class_rep: Vec<u32> = Vec::new();
        for i in 0..n as u32 {
            if class_of[i as usize] != u32::MAX {
                continue;
            }
            let c = class_rep.len() as u32;
            class_rep.push(i);
            for &m in &members {
                class_of[self.add_idx(i, m) as usize] = c;
            }
        }
        let q = class_rep.len();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = class_of[self.add_idx(class_rep[a], class_rep[b]) as usize];
                mul[a * q + b] = class_of[self.mul_idx(class_rep[a], class_rep[b]) as usize];
            }
        }
        let names = class_rep.iter().map(|&r| self.name(r).to_string()).collect();
        let gens_text = if ideal.generators().is_empty() {
            "0".to_string()
        } else {
            ideal
                .generator_indices()
                .iter()
                .map(|&g| self.grammar_expr(g).unwrap_or_else(|| self.name(g).to_string()))
                .collect::<Vec<_>>()
                .join(",")
        };
        let descriptor = format!("quot({}; {})", self.descriptor(), gens_text);
        let ring = FiniteRing::from_parts(
            q,
            add,
            mul,
            class_of[self.0.zero as usize],
            class_of[self.0.one as usize],
            descriptor,
            names,
            self.0.gen_index.map(|g| class_of[g as usize]),
            self.0.caps,
            RingStructure::Quotient {
                source: self.clone(),
                class_rep,
            },
        );
        let map = RingMap::new_unchecked(self.clone(), ring.clone(), class_of);
        Ok((ring, map))
    }

    /// Localization at the saturated multiplicative set `W` designated by `t`,
    /// computed as the quotient by `I_W = { r : wr = 0 for some w in W }`.
    /// For a finite ring this is isomorphic to the ring of fractions, because
    /// the images of `W` become regular and regular elements of a finite ring
    /// are units (asserted).
    pub fn localize(&self, t: &SaturatedMultSet) -> Result<(FiniteRing, RingMap)> {
        if !self.same_ring(t.ring()) {
            return Err(Error::DomainMismatch(
                "multiplicative set belongs to a different ring",
            ));
        }
        let n = self.size();
        let mut killed = Bits::new(n);
        for r in 0..n as u32 {
            for w in t.member_indices() {
                if self.mul_idx(w, r) == self.0.zero {
                    killed.set(r as usize);
                    break;
                }
            }
        }
        let ideal = Ideal::from_member_bits(self.clone(), killed);
        let (q, map) = self.quotient(&ideal)?;
        // images of W must be units in the result
        let units = &q.class_bits().units;
        for w in t.member_indices() {
            assert!(
                units.get(map.apply_idx(w) as usize),
                "localization failed to invert a member of W"
            );
        }
        Ok((q, map))
    }

    /// Partition the elements into units, zero-divisors, nilpotents,
    /// idempotents, and regular elements.  In a finite commutative ring the
    /// regular elements coincide with the units, which is asserted here.
    pub fn classify(&self) -> ElementClasses {
        let c = self.class_bits();
        let to_vec = |b: &Bits| b.iter_ones().map(|i| self.elem(i as u32)).collect::<Vec<_>>();
        let regular = c.zero_divisors.complement();
        assert_eq!(
            regular.iter_ones().collect::<Vec<_>>(),
            c.units.iter_ones().collect::<Vec<_>>(),
            "regular elements of a finite ring must be exactly the units"
        );
        ElementClasses {
            units: to_vec(&c.units),
            zero_divisors: to_vec(&c.zero_divisors),
            nilpotents: to_vec(&c.nilpotents),
            idempotents: to_vec(&c.idempotents),
            regular: to_vec(&regular),
        }
    }

    pub(crate) fn class_bits(&self) -> &ClassBits {
        self.0.classes.get_or_init(|| {
            let n = self.size();
            let zero = self.0.zero;
            let mut units = Bits::new(n);
            let mut zero_divisors = Bits::new(n);
            let mut nilpotents = Bits::new(n);
            let mut idempotents = Bits::new(n);
            for a in 0..n as u32 {
                let mut is_unit = false;
                let mut is_zd = false;
                for b in 0..n as u32 {
                    let p = self.mul_idx(a, b);
                    if p == self.0.one {
                        is_unit = true;
                    }
                    if p == zero && b != zero {
                        is_zd = true;
                    }
                }
                if is_unit {
                    units.set(a as usize);
                }
                if is_zd {
                    zero_divisors.set(a as usize);
                }
                if self.mul_idx(a, a) == a {
                    idempotents.set(a as usize);
                }
                // power cycle detection for nilpotency
                let mut p = a;
                let mut steps = 0;
                loop {
                    if p == zero {
                        nilpotents.set(a as usize);
                        break;
                    }
                    steps += 1;
                    if steps > n {
                        break;
                    }
                    p = self.mul_idx(p, a);
                }
            }
            ClassBits {
                units,
                zero_divisors,
                nilpotents,
                idempotents,
            }
        })
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn caps(&self) -> Caps {
        self.0.caps
    }

    pub fn descriptor(&self) -> &str {
        &self.0.descriptor
    }

    pub fn zero(&self) -> RingElement {
        self.elem(self.0.zero)
    }

    pub fn one(&self) -> RingElement {
        self.elem(self.0.one)
    }

    /// The distinguished truncation generator x, if this construction has one.
    pub fn gen(&self) -> Option<RingElement> {
        self.0.gen_index.map(|g| self.elem(g))
    }

    pub fn elem(&self, index: u32) -> RingElement {
        assert!((index as usize) < self.size(), "element index out of range");
        RingElement {
            ring: self.clone(),
            index,
        }
    }

    /// The element n·1.
    pub fn int_elem(&self, n: i64) -> RingElement {
        let ch = self.characteristic() as i64;
        let k = n.rem_euclid(ch) as u64;
        let mut acc = self.0.zero;
        for _ in 0..k {
            acc = self.add_idx(acc, self.0.one);
        }
        self.elem(acc)
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size() as u32).map(move |i| self.elem(i))
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.0.one;
        let mut k = 1;
        while acc != self.0.zero {
            acc = self.add_idx(acc, self.0.one);
            k += 1;
        }
        k
    }

    pub fn name(&self, index: u32) -> &str {
        &self.0.names[index as usize]
    }

    /// Whether two handles denote the very same constructed ring.
    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    #[inline]
    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        self.0.add[a as usize * self.0.size + b as usize]
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        self.0.mul[a as usize * self.0.size + b as usize]
    }

    #[inline]
    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    pub(crate) fn zero_idx(&self) -> u32 {
        self.0.zero
    }

    pub(crate) fn one_idx(&self) -> u32 {
        self.0.one
    }

    /// Exhaustive check of the commutative-ring axioms (O(size^3)).
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let n = self.size() as u32;
        let zero = self.0.zero;
        let one = self.0.one;
        for a in 0..n {
            if self.add_idx(a, zero) != a {
                return Err(format!("{} + 0 != {}", self.name(a), self.name(a)));
            }
            if self.mul_idx(a, one) != a {
                return Err(format!("{} * 1 != {}", self.name(a), self.name(a)));
            }
            if self.add_idx(a, self.neg_idx(a)) != zero {
                return Err(format!("{} has no additive inverse", self.name(a)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add_idx(a, b) != self.add_idx(b, a) {
                    return Err("addition is not commutative".into());
                }
                if self.mul_idx(a, b) != self.mul_idx(b, a) {
                    return Err("multiplication is not commutative".into());
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add_idx(self.add_idx(a, b), c) != self.add_idx(a, self.add_idx(b, c)) {
                        return Err("addition is not associative".into());
                    }
                    if self.mul_idx(self.mul_idx(a, b), c) != self.mul_idx(a, self.mul_idx(b, c)) {
                        return Err("multiplication is not associative".into());
                    }
                    if self.mul_idx(a, self.add_idx(b, c))
                        != self.add_idx(self.mul_idx(a, b), self.mul_idx(a, c))
                    {
                        return Err("multiplication does not distribute over addition".into());
                    }
                }
            }
        }
        Ok(())
    }

    /// Render an element as an expression in the descriptor grammar
    /// (an integer polynomial in the generator x), when one exists.
    pub(crate) fn grammar_expr(&self, index: u32) -> Option<String> {
        if let Some(k) = self.int_value(index) {
            return Some(k.to_string());
        }
        match &self.0.structure {
            RingStructure::Trunc { base, depth } => {
                let bs = base.size();
                let mut i = index as usize;
                let mut terms = Vec::new();
                for p in 0..*depth {
                    let c = (i % bs) as u32;
                    i /= bs;
                    if c == base.0.zero {
                        continue;
                    }
                    let k = base.int_value(c)?;
                    terms.push(match (p, k) {
                        (0, _) => k.to_string(),
                        (1, 1) => "x".to_string(),
                        (1, _) => format!("{k}*x"),
                        (_, 1) => format!("x^{p}"),
                        (_, _) => format!("{k}*x^{p}"),
                    });
                }
                Some(terms.join("+"))
            }
            RingStructure::Quotient { source, class_rep } => {
                source.grammar_expr(class_rep[index as usize])
            }
            _ => None,
        }
    }

    /// The least k >= 0 with k·1 = element, if the element lies in the prime
    /// subring.
    pub(crate) fn int_value(&self, index: u32) -> Option<u64> {
        let mut acc = self.0.zero;
        let mut k = 0u64;
        loop {
            if acc == index {
                return Some(k);
            }
            acc = self.add_idx(acc, self.0.one);
            k += 1;
            if acc == self.0.zero {
                return None;
            }
        }
    }

    pub(crate) fn principal_bits(&self) -> &Vec<Bits> {
        self.0.principal.get_or_init(|| {
            let n = self.size();
            (0..n as u32)
                .map(|g| {
                    let mut b = Bits::new(n);
                    for r in 0..n as u32 {
                        b.set(self.mul_idx(r, g) as usize);
                    }
                    b
                })
                .collect()
        })
    }
}

fn trunc_name(base: &FiniteRing, coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (p, &c) in coeffs.iter().enumerate() {
        if c == base.0.zero {
            continue;
        }
        let cname = base.name(c);
        let wrapped = if cname.contains('+') || cname.contains(',') {
            format!("({cname})")
        } else {
            cname.to_string()
        };
        terms.push(match (p, c == base.0.one) {
            (0, _) => wrapped,
            (1, true) => "x".to_string(),
            (1, false) => format!("{wrapped}*x"),
            (_, true) => format!("x^{p}"),
            (_, false) => format!("{wrapped}*x^{p}"),
        });
    }
    if terms.is_empty() {
        base.name(base.0.zero).to_string()
    } else {
        terms.join("+")
    }
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.descriptor(), self.size())
    }
}

impl std::fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.descriptor())
    }
}

impl RingElement {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn is_zero(&self) -> bool {
        self.index == self.ring.0.zero
    }

    pub fn is_one(&self) -> bool {
        self.index == self.ring.0.one
    }

    pub fn is_unit(&self) -> bool {
        self.ring.class_bits().units.get(self.index as usize)
    }

    pub fn pow(&self, k: u32) -> RingElement {
        let mut acc = self.ring.0.one;
        for _ in 0..k {
            acc = self.ring.mul_idx(acc, self.index);
        }
        self.ring.elem(acc)
    }

    fn check_same(&self, other: &RingElement) {
        assert!(
            self.ring.same_ring(&other.ring),
            "ring elements from different rings"
        );
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.index == other.index
    }
}

impl Eq for RingElement {}

impl std::fmt::Debug for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} in {}", self.ring.name(self.index), self.ring.descriptor())
    }
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.ring.name(self.index))
    }
}

macro_rules! elem_binop {
    ($trait:ident, $method:ident, $table:ident) => {
        impl std::ops::$trait for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.check_same(rhs);
                self.ring.elem(self.ring.$table(self.index, rhs.index))
            }
        }
        impl std::ops::$trait for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

elem_binop!(Add, add, add_idx);
elem_binop!(Mul, mul, mul_idx);

impl std::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.ring.elem(self.ring.neg_idx(self.index))
    }
}

impl std::ops::Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl std::ops::Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl std::ops::Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        &self - &rhs
    }
}

impl RingMap {
    /// Build a map and verify it is a unital ring homomorphism.
    pub fn new(source: FiniteRing, target: FiniteRing, image: Vec<u32>) -> Result<RingMap> {
        if image.len() != source.size() {
            return Err(Error::DomainMismatch("image table has wrong length"));
        }
        let m = RingMap::new_unchecked(source, target, image);
        if m.image[m.source.0.zero as usize] != m.target.0.zero
            || m.image[m.source.0.one as usize] != m.target.0.one
        {
            return Err(Error::DomainMismatch("map does not preserve 0 and 1"));
        }
        let n = m.source.size() as u32;
        for a in 0..n {
            for b in 0..n {
                if m.apply_idx(m.source.add_idx(a, b))
                    != m.target.add_idx(m.apply_idx(a), m.apply_idx(b))
                    || m.apply_idx(m.source.mul_idx(a, b))
                        != m.target.mul_idx(m.apply_idx(a), m.apply_idx(b))
                {
                    return Err(Error::DomainMismatch("map is not a ring homomorphism"));
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: FiniteRing, target: FiniteRing, image: Vec<u32>) -> RingMap {
        RingMap {
            source,
            target,
            image,
        }
    }

    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn target(&self) -> &FiniteRing {
        &self.target
    }

    pub fn apply(&self, e: &RingElement) -> Result<RingElement> {
        if !e.ring().same_ring(&self.source) {
            return Err(Error::DomainMismatch("element not in the map source"));
        }
        Ok(self.target.elem(self.apply_idx(e.index())))
    }

    #[inline]
    pub(crate) fn apply_idx(&self, i: u32) -> u32 {
        self.image[i as usize]
    }
}

/// Search for a ring isomorphism between the two operation tables.
pub fn are_isomorphic(a: &FiniteRing, b: &FiniteRing) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let n = a.size();
    let fp = |r: &FiniteRing, e: u32| -> (u32, bool, bool, bool) {
        // additive order
        let mut acc = e;
        let mut ord = 1;
        while acc != r.0.zero {
            acc = r.add_idx(acc, e);
            ord += 1;
        }
        let c = r.class_bits();
        (
            ord,
            c.units.get(e as usize),
            c.idempotents.get(e as usize),
            c.nilpotents.get(e as usize),
        )
    };
    let fpa: Vec<_> = (0..n as u32).map(|e| fp(a, e)).collect();
    let fpb: Vec<_> = (0..n as u32).map(|e| fp(b, e)).collect();
    {
        let mut sa = fpa.clone();
        let mut sb = fpb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }

    fn assign(
        a: &FiniteRing,
        b: &FiniteRing,
        map: &mut [u32],
        rmap: &mut [u32],
        s: u32,
        t: u32,
    ) -> bool {
        // worklist closure under + and * with everything already mapped
        let mut work = vec![(s, t)];
        while let Some((s, t)) = work.pop() {
            let (ms, mt) = (map[s as usize], rmap[t as usize]);
            if ms != u32::MAX || mt != u32::MAX {
                if ms != t || mt != s {
                    return false;
                }
                continue;
            }
            map[s as usize] = t;
            rmap[t as usize] = s;
            for s2 in 0..map.len() as u32 {
                let t2 = map[s2 as usize];
                if t2 == u32::MAX {
                    continue;
                }
                work.push((a.add_idx(s, s2), b.add_idx(t, t2)));
                work.push((a.mul_idx(s, s2), b.mul_idx(t, t2)));
            }
        }
        true
    }

    fn dfs(a: &FiniteRing, b: &FiniteRing, fpa: &[(u32, bool, bool, bool)], fpb: &[(u32, bool, bool, bool)], map: Vec<u32>, rmap: Vec<u32>) -> bool {
        let next = match map.iter().position(|&m| m == u32::MAX) {
            None => return true,
            Some(i) => i as u32,
        };
        for t in 0..map.len() as u32 {
            if rmap[t as usize] != u32::MAX || fpa[next as usize] != fpb[t as usize] {
                continue;
            }
            let mut m2 = map.clone();
            let mut r2 = rmap.clone();
            if assign(a, b, &mut m2, &mut r2, next, t) && dfs(a, b, fpa, fpb, m2, r2) {
                return true;
            }
        }
        false
    }

    let mut map = vec![u32::MAX; n];
    let mut rmap = vec![u32::MAX; n];
    if !assign(a, b, &mut map, &mut rmap, a.0.zero, b.0.zero) {
        return false;
    }
    if !assign(a, b, &mut map, &mut rmap, a.0.one, b.0.one) {
        return false;
    }
    dfs(a, b, &fpa, &fpb, map, rmap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::Ideal;

    #[test]
    fn zmod_basics() {
        let r1 = FiniteRing::zmod(1).unwrap();
        assert_eq!(r1.size(), 1);
        assert_eq!(r1.zero(), r1.one());

        let r4 = FiniteRing::zmod(4).unwrap();
        assert_eq!(r4.size(), 4);
        assert_eq!(&r4.elem(2) * &r4.elem(2), r4.zero());

        let r6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(&r6.elem(2) * &r6.elem(3), r6.zero());
        assert!(r6.elem(5).is_unit());

        assert!(matches!(FiniteRing::zmod(0), Err(Error::InvalidModulus)));
    }

    #[test]
    fn zmod_respects_ring_cap() {
        let caps = Caps {
            max_ring: 10,
            ..Caps::default()
        };
        assert!(matches!(
            FiniteRing::zmod_with(11, caps),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn product_is_crt() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let p = FiniteRing::product(&z2, &z3).unwrap();
        assert_eq!(p.size(), 6);
        let z6 = FiniteRing::zmod(6).unwrap();
        assert!(are_isomorphic(&p, &z6));
    }

    #[test]
    fn product_with_zero_ring_is_identity() {
        let z1 = FiniteRing::zmod(1).unwrap();
        let z5 = FiniteRing::zmod(5).unwrap();
        let p = FiniteRing::product(&z1, &z5).unwrap();
        assert!(are_isomorphic(&p, &z5));
    }

    #[test]
    fn product_z2_z2_idempotents() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let p = FiniteRing::product(&z2, &z2).unwrap();
        let classes = p.classify();
        assert_eq!(classes.idempotents.len(), 4);
    }

    #[test]
    fn truncated_depth_one_collapses_x() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let (r, x) = FiniteRing::truncated(&z2, 1).unwrap();
        assert!(are_isomorphic(&r, &z2));
        assert!(x.is_zero());
    }

    #[test]
    fn truncated_f2_depth_four() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let (r, x) = FiniteRing::truncated(&z2, 4).unwrap();
        assert_eq!(r.size(), 16);
        assert!(!x.pow(3).is_zero());
        assert!(x.pow(4).is_zero());
        assert_eq!(r.name(x.pow(3).index()), "x^3");
    }

    #[test]
    fn truncated_z4_depth_two() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let (r, x) = FiniteRing::truncated(&z4, 2).unwrap();
        assert_eq!(r.size(), 16);
        let two_x = &r.int_elem(2) * &x;
        assert!((&two_x * &two_x).is_zero());
    }

    #[test]
    fn quotient_examples() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let i2 = Ideal::generated(&z4, &[z4.elem(2)]).unwrap();
        let (q, proj) = z4.quotient(&i2).unwrap();
        assert!(are_isomorphic(&q, &FiniteRing::zmod(2).unwrap()));
        assert_eq!(proj.apply(&z4.elem(2)).unwrap(), q.zero());

        let zero = Ideal::generated(&z4, &[]).unwrap();
        let (q0, _) = z4.quotient(&zero).unwrap();
        assert!(are_isomorphic(&q0, &z4));

        let z6 = FiniteRing::zmod(6).unwrap();
        let i3 = Ideal::generated(&z6, &[z6.elem(3)]).unwrap();
        let (q3, _) = z6.quotient(&i3).unwrap();
        assert!(are_isomorphic(&q3, &FiniteRing::zmod(3).unwrap()));
    }

    #[test]
    fn quotient_rejects_foreign_ideal() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let z6 = FiniteRing::zmod(6).unwrap();
        let i = Ideal::generated(&z6, &[z6.elem(2)]).unwrap();
        assert!(matches!(z4.quotient(&i), Err(Error::DomainMismatch(_))));
    }

    fn indices(v: &[RingElement]) -> Vec<u32> {
        v.iter().map(|e| e.index()).collect()
    }

    #[test]
    fn classification_tables() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let c = z4.classify();
        assert_eq!(indices(&c.units), vec![1, 3]);
        assert_eq!(indices(&c.zero_divisors), vec![0, 2]);
        assert_eq!(indices(&c.nilpotents), vec![0, 2]);
        assert_eq!(indices(&c.idempotents), vec![0, 1]);

        let z6 = FiniteRing::zmod(6).unwrap();
        let c = z6.classify();
        assert_eq!(indices(&c.units), vec![1, 5]);
        assert_eq!(indices(&c.zero_divisors), vec![0, 2, 3, 4]);
        assert_eq!(indices(&c.nilpotents), vec![0]);
        assert_eq!(indices(&c.idempotents), vec![0, 1, 3, 4]);

        let z5 = FiniteRing::zmod(5).unwrap();
        let c = z5.classify();
        assert_eq!(indices(&c.zero_divisors), vec![0]);
    }

    #[test]
    fn localize_z6_at_prime_two() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let p2 = Ideal::generated(&z6, &[z6.elem(2)]).unwrap();
        let t = SaturatedMultSet::new(z6.clone(), vec![p2]).unwrap();
        let (l, _) = z6.localize(&t).unwrap();
        assert_eq!(l.size(), 2);
        assert!(are_isomorphic(&l, &FiniteRing::zmod(2).unwrap()));
    }

    #[test]
    fn localize_at_all_primes_is_identity() {
        for n in [4u64, 6, 12] {
            let r = FiniteRing::zmod(n).unwrap();
            let t = SaturatedMultSet::units_only(&r).unwrap();
            let (l, _) = r.localize(&t).unwrap();
            assert!(are_isomorphic(&l, &r));
        }
    }

    #[test]
    fn localize_local_ring_at_its_maximal_ideal() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let p = Ideal::generated(&z4, &[z4.elem(2)]).unwrap();
        let t = SaturatedMultSet::new(z4.clone(), vec![p]).unwrap();
        let (l, _) = z4.localize(&t).unwrap();
        assert!(are_isomorphic(&l, &z4));
    }

    #[test]
    fn localize_at_empty_t_inverts_everything() {
        // With T empty, W is all of R (including 0), so the result collapses.
        let z6 = FiniteRing::zmod(6).unwrap();
        let t = SaturatedMultSet::new(z6.clone(), vec![]).unwrap();
        let (l, _) = z6.localize(&t).unwrap();
        assert_eq!(l.size(), 1);
    }

    #[test]
    fn axioms_hold_for_composed_rings() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let p = FiniteRing::product(&z4, &z3).unwrap();
        let (t, _) = FiniteRing::truncated(&p, 2).unwrap();
        assert_eq!(t.verify_axioms(), Ok(()));
    }

    #[test]
    fn unit_iff_regular_iff_mul_bijective() {
        for n in [4u64, 6, 8, 9, 12] {
            let r = FiniteRing::zmod(n).unwrap();
            let c = r.class_bits();
            for a in 0..r.size() as u32 {
                let mut seen = vec![false; r.size()];
                let mut bij = true;
                for b in 0..r.size() as u32 {
                    let p = r.mul_idx(a, b) as usize;
                    if seen[p] {
                        bij = false;
                        break;
                    }
                    seen[p] = true;
                }
                let regular = !c.zero_divisors.get(a as usize);
                let unit = c.units.get(a as usize);
                assert_eq!(bij, regular);
                assert_eq!(regular, unit);
            }
        }
    }

    #[test]
    fn int_elem_and_characteristic() {
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(z6.characteristic(), 6);
        assert_eq!(z6.int_elem(8), z6.elem(2));
        assert_eq!(z6.int_elem(-1), z6.elem(5));
    }
}
