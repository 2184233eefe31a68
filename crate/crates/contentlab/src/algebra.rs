//! Free algebras over a finite base ring, given by structure constants.
//!
//! A [`FreeAlgebra`] is a free module of finite rank over its base ring with
//! a commutative associative multiplication determined by the products of
//! basis elements.  Freeness makes the content of an element the ideal
//! generated by its coordinates, makes `f ∈ IS` a coordinatewise membership
//! test, and makes every algebra here faithfully flat of positive rank; that
//! last fact is recorded as a flag rather than re-verified per call.
//!
//! [`AlgebraElement::content_oracle`] computes the content literally from its
//! definition (intersect every ideal `I` with `f ∈ IS`), independently of the
//! coordinate route, so the two can be checked against each other.

use std::fs;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::finring::{FiniteRing, RingElement, RingMap};
use crate::ideals::{self, Ideal, SaturatedMultSet};

/// A finite commutative monoid as an explicit operation table.
#[derive(Clone, PartialEq, Eq)]
pub struct MonoidTable {
    size: usize,
    op: Vec<u32>,
    identity: u32,
}

impl MonoidTable {
    pub fn new(size: usize, op: Vec<u32>, identity: u32) -> Result<MonoidTable> {
        if size == 0 {
            return Err(Error::InvalidMonoid("monoid must be nonempty".into()));
        }
        if op.len() != size * size {
            return Err(Error::InvalidMonoid("operation table has wrong size".into()));
        }
        if identity as usize >= size || op.iter().any(|&v| v as usize >= size) {
            return Err(Error::InvalidMonoid("table entry out of range".into()));
        }
        let m = MonoidTable { size, op, identity };
        for a in 0..size as u32 {
            if m.op(m.identity, a) != a || m.op(a, m.identity) != a {
                return Err(Error::InvalidMonoid(format!(
                    "identity law fails at element {a}"
                )));
            }
            for b in 0..size as u32 {
                for c in 0..size as u32 {
                    if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)) {
                        return Err(Error::InvalidMonoid(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    /// The cyclic group Z/k as a monoid table.
    pub fn cyclic_group(k: usize) -> MonoidTable {
        assert!(k >= 1);
        let mut op = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                op[a * k + b] = ((a + b) % k) as u32;
            }
        }
        MonoidTable {
            size: k,
            op,
            identity: 0,
        }
    }

    /// Parse the table file format: first line `size identity`, then the
    /// operation table row by row, whitespace-separated.
    pub fn parse(text: &str) -> Result<MonoidTable> {
        let mut nums = text.split_whitespace().map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::InvalidMonoid(format!("not a number: {t}")))
        });
        let mut next = |what: &str| {
            nums.next()
                .ok_or_else(|| Error::InvalidMonoid(format!("missing {what}")))?
        };
        let size = next("size")? as usize;
        let identity = next("identity index")?;
        let mut op = Vec::with_capacity(size * size);
        for _ in 0..size * size {
            op.push(next("table entry")?);
        }
        MonoidTable::new(size, op, identity)
    }

    pub fn from_file(path: &Path) -> Result<MonoidTable> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        MonoidTable::parse(&text)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size as u32)
            .all(|a| (0..self.size as u32).all(|b| self.op(a, b) == self.op(b, a)))
    }

    #[inline]
    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.op[a as usize * self.size + b as usize]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }
}

impl std::fmt::Debug for MonoidTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MonoidTable(size {})", self.size)
    }
}

#[derive(Clone)]
pub(crate) enum AlgebraKind {
    Identity,
    Truncated(usize),
    Quadratic(u32),
    Group(usize),
    Monoid {
        table: Arc<MonoidTable>,
        source: Option<String>,
    },
}

pub(crate) struct AlgebraData {
    base: FiniteRing,
    rank: usize,
    /// sc[(i*rank + j)*rank + k] = coefficient of e_k in e_i · e_j.
    sc: Vec<u32>,
    unit: Vec<u32>,
    size: usize,
    kind: AlgebraKind,
    descriptor: String,
    basis_names: Vec<String>,
    faithfully_flat: bool,
    /// code -> position of content(f) in the base ring's ideal lattice.
    content_ids: OnceLock<Result<Arc<Vec<u32>>>>,
    /// Distinct (c(f), c(g), c(fg)) triples over all pairs, with the first
    /// pair realizing each triple.
    triples: OnceLock<Result<Arc<Vec<TripleRep>>>>,
}

/// One distinct content triple with its first realizing pair, in
/// first-occurrence order under the canonical (f, g) pair scan.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TripleRep {
    pub cf: u32,
    pub cg: u32,
    pub cfg: u32,
    pub f_code: u32,
    pub g_code: u32,
}

/// A free algebra of finite rank over a [`FiniteRing`].
#[derive(Clone)]
pub struct FreeAlgebra(pub(crate) Arc<AlgebraData>);

/// An element of a [`FreeAlgebra`]: a coordinate vector in the distinguished
/// basis.
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: FreeAlgebra,
    coords: Vec<u32>,
}

/// The coordinatewise map between two free algebras induced by a base-ring
/// homomorphism (quotient or localization projection).
#[derive(Clone)]
pub struct AlgebraMap {
    source: FreeAlgebra,
    target: FreeAlgebra,
    base_map: RingMap,
}

impl FreeAlgebra {
    fn build(
        base: &FiniteRing,
        rank: usize,
        sc: Vec<u32>,
        unit: Vec<u32>,
        kind: AlgebraKind,
        descriptor: String,
        basis_names: Vec<String>,
    ) -> Result<FreeAlgebra> {
        assert!(rank >= 1);
        let caps = base.caps();
        let size = match (base.size() as u128).checked_pow(rank as u32) {
            Some(s) if s <= caps.max_alg as u128 => s as usize,
            s => {
                return Err(Error::SizeCap {
                    what: "free algebra",
                    requested: s.unwrap_or(u128::MAX),
                    cap: caps.max_alg,
                })
            }
        };
        let alg = FreeAlgebra(Arc::new(AlgebraData {
            base: base.clone(),
            rank,
            sc,
            unit,
            size,
            kind,
            descriptor,
            basis_names,
            faithfully_flat: true,
            content_ids: OnceLock::new(),
            triples: OnceLock::new(),
        }));
        alg.verify_structure()
            .unwrap_or_else(|msg| panic!("constructed algebra is invalid: {msg}"));
        Ok(alg)
    }

    /// Exhaustive commutativity/associativity/unit checks on the structure
    /// constants.
    pub fn verify_structure(&self) -> std::result::Result<(), String> {
        let r = self.rank();
        let base = self.base();
        for i in 0..r {
            for j in 0..r {
                if self.sc_slice(i, j) != self.sc_slice(j, i) {
                    return Err(format!("e{i}·e{j} != e{j}·e{i}"));
                }
            }
        }
        // unit · e_i = e_i
        let mut scratch = vec![base.zero_idx(); r];
        for i in 0..r {
            let mut ei = vec![base.zero_idx(); r];
            ei[i] = base.one_idx();
            self.mul_into(&self.0.unit, &ei, &mut scratch);
            if scratch != ei {
                return Err(format!("unit law fails at basis element {i}"));
            }
        }
        let mut left = vec![base.zero_idx(); r];
        let mut right = vec![base.zero_idx(); r];
        let mut tmp = vec![base.zero_idx(); r];
        for i in 0..r {
            let mut ei = vec![base.zero_idx(); r];
            ei[i] = base.one_idx();
            for j in 0..r {
                let mut ej = vec![base.zero_idx(); r];
                ej[j] = base.one_idx();
                for k in 0..r {
                    let mut ek = vec![base.zero_idx(); r];
                    ek[k] = base.one_idx();
                    self.mul_into(&ei, &ej, &mut tmp);
                    let t2 = tmp.clone();
                    self.mul_into(&t2, &ek, &mut left);
                    self.mul_into(&ej, &ek, &mut tmp);
                    let t2 = tmp.clone();
                    self.mul_into(&ei, &t2, &mut right);
                    if left != right {
                        return Err(format!("associativity fails at (e{i},e{j},e{k})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// The base ring seen as an algebra over itself (rank 1).
    pub fn identity_algebra(base: &FiniteRing) -> Result<FreeAlgebra> {
        FreeAlgebra::build(
            base,
            1,
            vec![base.one_idx()],
            vec![base.one_idx()],
            AlgebraKind::Identity,
            "id".into(),
            vec!["1".into()],
        )
    }

    /// `base[v]/(v^d)` with basis 1, v, ..., v^{d-1}.  The generator is
    /// written `x` unless the base already has one, in which case `y`.
    pub fn truncated(base: &FiniteRing, d: usize) -> Result<FreeAlgebra> {
        if d == 0 {
            return Err(Error::Usage("algebra truncation depth must be at least 1".into()));
        }
        let rank = d;
        let mut sc = vec![base.zero_idx(); rank * rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                if i + j < rank {
                    sc[(i * rank + j) * rank + (i + j)] = base.one_idx();
                }
            }
        }
        let mut unit = vec![base.zero_idx(); rank];
        unit[0] = base.one_idx();
        let g = if base.gen().is_some() { "y" } else { "x" };
        let basis_names = (0..rank)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => g.to_string(),
                _ => format!("{g}^{i}"),
            })
            .collect();
        FreeAlgebra::build(
            base,
            rank,
            sc,
            unit,
            AlgebraKind::Truncated(d),
            format!("trunc({d})"),
            basis_names,
        )
    }

    /// `base[y]/(y^2 - a)` with basis {1, y}.
    pub fn quadratic(base: &FiniteRing, a: &RingElement) -> Result<FreeAlgebra> {
        if !a.ring().same_ring(base) {
            return Err(Error::DomainMismatch("parameter from a different ring"));
        }
        let rank = 2;
        let z = base.zero_idx();
        let o = base.one_idx();
        #[rustfmt::skip]
        let sc = vec![
            // e0*e0 = 1,  e0*e1 = y
            o, z,   z, o,
            // e1*e0 = y,  e1*e1 = a·1
            z, o,   a.index(), z,
        ];
        let descriptor = format!(
            "quad({})",
            base.grammar_expr(a.index())
                .unwrap_or_else(|| base.name(a.index()).to_string())
        );
        FreeAlgebra::build(
            base,
            rank,
            sc,
            vec![o, z],
            AlgebraKind::Quadratic(a.index()),
            descriptor,
            vec!["1".into(), "y".into()],
        )
    }

    /// The group algebra `base[Z/k]`, basis 1, t, ..., t^{k-1}.
    pub fn cyclic_group_algebra(base: &FiniteRing, k: usize) -> Result<FreeAlgebra> {
        if k == 0 {
            return Err(Error::InvalidMonoid("group order must be at least 1".into()));
        }
        let table = MonoidTable::cyclic_group(k);
        let rank = k;
        let mut sc = vec![base.zero_idx(); rank * rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                sc[(i * rank + j) * rank + table.op(i as u32, j as u32) as usize] = base.one_idx();
            }
        }
        let mut unit = vec![base.zero_idx(); rank];
        unit[0] = base.one_idx();
        let basis_names = (0..k)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        FreeAlgebra::build(
            base,
            rank,
            sc,
            unit,
            AlgebraKind::Group(k),
            format!("group(Z/{k})"),
            basis_names,
        )
    }

    /// The monoid algebra `base[M]`: e_u · e_v = e_{uv}.
    pub fn monoid_algebra(
        base: &FiniteRing,
        m: &MonoidTable,
        source: Option<String>,
    ) -> Result<FreeAlgebra> {
        if !m.is_commutative() {
            return Err(Error::InvalidMonoid("monoid is not commutative".into()));
        }
        let rank = m.size();
        let mut sc = vec![base.zero_idx(); rank * rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                sc[(i * rank + j) * rank + m.op(i as u32, j as u32) as usize] = base.one_idx();
            }
        }
        let mut unit = vec![base.zero_idx(); rank];
        unit[m.identity() as usize] = base.one_idx();
        let descriptor = match &source {
            Some(p) => format!("monoid({p})"),
            None => format!("monoid[{rank}]"),
        };
        let basis_names = (0..rank)
            .map(|i| {
                if i as u32 == m.identity() {
                    "1".to_string()
                } else {
                    format!("m{i}")
                }
            })
            .collect();
        FreeAlgebra::build(
            base,
            rank,
            sc,
            unit,
            AlgebraKind::Monoid {
                table: Arc::new(m.clone()),
                source,
            },
            descriptor,
            basis_names,
        )
    }

    pub fn base(&self) -> &FiniteRing {
        &self.0.base
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// Number of elements of the algebra (base size ^ rank).
    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn descriptor(&self) -> &str {
        &self.0.descriptor
    }

    /// "alg over base" label used in reports.
    pub fn instance_label(&self) -> String {
        format!("{} over {}", self.descriptor(), self.base().descriptor())
    }

    pub fn faithfully_flat(&self) -> bool {
        self.0.faithfully_flat
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.0.basis_names[i]
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: vec![self.base().zero_idx(); self.rank()],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: self.0.unit.clone(),
        }
    }

    /// The distinguished generator e_1, for algebras of rank at least 2.
    pub fn gen(&self) -> Option<AlgebraElement> {
        if self.rank() < 2 {
            return None;
        }
        let mut coords = vec![self.base().zero_idx(); self.rank()];
        coords[1] = self.base().one_idx();
        Some(AlgebraElement {
            algebra: self.clone(),
            coords,
        })
    }

    pub fn element(&self, coords: &[RingElement]) -> Result<AlgebraElement> {
        if coords.len() != self.rank() {
            return Err(Error::DomainMismatch("coordinate vector has wrong length"));
        }
        let mut idx = Vec::with_capacity(coords.len());
        for c in coords {
            if !c.ring().same_ring(self.base()) {
                return Err(Error::DomainMismatch("coordinate from a different ring"));
            }
            idx.push(c.index());
        }
        Ok(AlgebraElement {
            algebra: self.clone(),
            coords: idx,
        })
    }

    /// Embed a base-ring element as a constant.
    pub fn scalar(&self, c: &RingElement) -> Result<AlgebraElement> {
        if !c.ring().same_ring(self.base()) {
            return Err(Error::DomainMismatch("scalar from a different ring"));
        }
        let mut coords = vec![self.base().zero_idx(); self.rank()];
        for (o, u) in coords.iter_mut().zip(&self.0.unit) {
            *o = self.base().mul_idx(c.index(), *u);
        }
        Ok(AlgebraElement {
            algebra: self.clone(),
            coords,
        })
    }

    pub(crate) fn element_from_indices(&self, coords: Vec<u32>) -> AlgebraElement {
        debug_assert_eq!(coords.len(), self.rank());
        AlgebraElement {
            algebra: self.clone(),
            coords,
        }
    }

    /// Canonical element order: codes 0..size in mixed radix over the base.
    pub fn element_by_code(&self, code: usize) -> AlgebraElement {
        assert!(code < self.size());
        self.element_from_indices(self.decode(code))
    }

    pub fn elements(&self) -> impl Iterator<Item = AlgebraElement> + '_ {
        (0..self.size()).map(move |c| self.element_by_code(c))
    }

    pub(crate) fn decode(&self, mut code: usize) -> Vec<u32> {
        let bs = self.base().size();
        let mut coords = vec![0u32; self.rank()];
        for c in coords.iter_mut() {
            *c = (code % bs) as u32;
            code /= bs;
        }
        coords
    }

    pub(crate) fn encode(&self, coords: &[u32]) -> usize {
        let bs = self.base().size();
        let mut code = 0usize;
        for &c in coords.iter().rev() {
            code = code * bs + c as usize;
        }
        code
    }

    #[inline]
    pub(crate) fn sc_slice(&self, i: usize, j: usize) -> &[u32] {
        let r = self.0.rank;
        &self.0.sc[(i * r + j) * r..(i * r + j) * r + r]
    }

    /// Bilinear multiplication through the structure constants.
    pub(crate) fn mul_into(&self, a: &[u32], b: &[u32], out: &mut [u32]) {
        let base = self.base();
        let z = base.zero_idx();
        out.fill(z);
        for (i, &ai) in a.iter().enumerate() {
            if ai == z {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == z {
                    continue;
                }
                let c = base.mul_idx(ai, bj);
                if c == z {
                    continue;
                }
                for (k, &s) in self.sc_slice(i, j).iter().enumerate() {
                    if s != z {
                        out[k] = base.add_idx(out[k], base.mul_idx(c, s));
                    }
                }
            }
        }
    }

    /// The same algebra presentation over `base/I`, with the projection map.
    pub fn base_change(&self, ideal: &Ideal) -> Result<(FreeAlgebra, AlgebraMap)> {
        if !ideal.ring().same_ring(self.base()) {
            return Err(Error::DomainMismatch("ideal over a different base ring"));
        }
        let (q, proj) = self.base().quotient(ideal)?;
        self.transport(q, proj)
    }

    /// The same algebra presentation over the localization `W^{-1}(base)`,
    /// with the projection map.  Valid because localization of a finite ring
    /// is a quotient and the algebra is free.
    pub fn localize(&self, t: &SaturatedMultSet) -> Result<(FreeAlgebra, AlgebraMap)> {
        if !t.ring().same_ring(self.base()) {
            return Err(Error::DomainMismatch(
                "multiplicative set over a different base ring",
            ));
        }
        let (l, proj) = self.base().localize(t)?;
        self.transport(l, proj)
    }

    fn transport(&self, new_base: FiniteRing, proj: RingMap) -> Result<(FreeAlgebra, AlgebraMap)> {
        let sc: Vec<u32> = self.0.sc.iter().map(|&c| proj.apply_idx(c)).collect();
        let unit: Vec<u32> = self.0.unit.iter().map(|&c| proj.apply_idx(c)).collect();
        let (kind, descriptor, basis_names) = match &self.0.kind {
            AlgebraKind::Identity => (AlgebraKind::Identity, "id".to_string(), vec!["1".into()]),
            AlgebraKind::Truncated(d) => {
                let g = if new_base.gen().is_some() { "y" } else { "x" };
                let names = (0..*d)
                    .map(|i| match i {
                        0 => "1".to_string(),
                        1 => g.to_string(),
                        _ => format!("{g}^{i}"),
                    })
                    .collect();
                (AlgebraKind::Truncated(*d), format!("trunc({d})"), names)
            }
            AlgebraKind::Quadratic(a) => {
                let a2 = proj.apply_idx(*a);
                let desc = format!(
                    "quad({})",
                    new_base
                        .grammar_expr(a2)
                        .unwrap_or_else(|| new_base.name(a2).to_string())
                );
                (
                    AlgebraKind::Quadratic(a2),
                    desc,
                    vec!["1".into(), "y".into()],
                )
            }
            AlgebraKind::Group(k) => (
                AlgebraKind::Group(*k),
                format!("group(Z/{k})"),
                self.0.basis_names.clone(),
            ),
            AlgebraKind::Monoid { table, source } => (
                AlgebraKind::Monoid {
                    table: table.clone(),
                    source: source.clone(),
                },
                self.0.descriptor.clone(),
                self.0.basis_names.clone(),
            ),
        };
        let target = FreeAlgebra::build(
            &new_base,
            self.rank(),
            sc,
            unit,
            kind,
            descriptor,
            basis_names,
        )?;
        let map = AlgebraMap {
            source: self.clone(),
            target: target.clone(),
            base_map: proj,
        };
        Ok((target.clone(), map))
    }

    /// Same constructed algebra (pointer identity).
    pub fn same_algebra(&self, other: &FreeAlgebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Flat decode of every element code (size × rank), in code order.
    pub(crate) fn coords_table(&self) -> Vec<u32> {
        let rank = self.rank();
        let mut flat = vec![0u32; self.size() * rank];
        for code in 0..self.size() {
            flat[code * rank..(code + 1) * rank].copy_from_slice(&self.decode(code));
        }
        flat
    }

    /// All distinct content triples (c(f), c(g), c(fg)) over the full pair
    /// scan, each with its first realizing pair.  Properties whose
    /// definitions only mention content ideals are decided per triple.
    pub(crate) fn content_triples(&self) -> Result<Arc<Vec<TripleRep>>> {
        self.0
            .triples
            .get_or_init(|| {
                let ids = self.content_ids()?;
                let cache = ideals::lattice(self.base())?;
                let k = cache.ideals.len();
                let n = self.size();
                let rank = self.rank();
                let flat = self.coords_table();
                let mut out: Vec<TripleRep> = Vec::new();
                let mut prod = vec![0u32; rank];
                let dense_ok = k <= 256;
                let mut dense = if dense_ok { vec![false; k * k * k] } else { Vec::new() };
                let mut sparse = std::collections::HashSet::new();
                for f in 0..n {
                    let fc = &flat[f * rank..(f + 1) * rank];
                    for g in 0..n {
                        let gc = &flat[g * rank..(g + 1) * rank];
                        self.mul_into(fc, gc, &mut prod);
                        let fg = self.encode(&prod);
                        let (cf, cg, cfg) = (ids[f], ids[g], ids[fg]);
                        let fresh = if dense_ok {
                            let slot = (cf as usize * k + cg as usize) * k + cfg as usize;
                            !std::mem::replace(&mut dense[slot], true)
                        } else {
                            sparse.insert((cf, cg, cfg))
                        };
                        if fresh {
                            out.push(TripleRep {
                                cf,
                                cg,
                                cfg,
                                f_code: f as u32,
                                g_code: g as u32,
                            });
                        }
                    }
                }
                Ok(Arc::new(out))
            })
            .clone()
    }

    /// code -> lattice position of the content ideal, computed once.
    pub(crate) fn content_ids(&self) -> Result<Arc<Vec<u32>>> {
        self.0
            .content_ids
            .get_or_init(|| {
                let ring = self.base();
                let cache = ideals::lattice(ring)?;
                let principal = ring.principal_bits();
                let mut out = Vec::with_capacity(self.size());
                for code in 0..self.size() {
                    let coords = self.decode(code);
                    let mut acc = Bits::new(ring.size());
                    acc.set(ring.zero_idx() as usize);
                    for &c in &coords {
                        if c != ring.zero_idx() {
                            acc = ideals::sumset(ring, &acc, &principal[c as usize]);
                        }
                    }
                    let id = *cache
                        .pos
                        .get(&acc)
                        .expect("content ideal must appear in the lattice");
                    out.push(id);
                }
                Ok(Arc::new(out))
            })
            .clone()
    }
}

impl std::fmt::Debug for FreeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FreeAlgebra({})", self.instance_label())
    }
}

impl std::fmt::Display for FreeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.instance_label())
    }
}

impl AlgebraElement {
    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn coords(&self) -> Vec<RingElement> {
        self.coords
            .iter()
            .map(|&c| self.algebra.base().elem(c))
            .collect()
    }

    pub(crate) fn coord_indices(&self) -> &[u32] {
        &self.coords
    }

    pub fn code(&self) -> usize {
        self.algebra.encode(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        let z = self.algebra.base().zero_idx();
        self.coords.iter().all(|&c| c == z)
    }

    fn check_same(&self, other: &AlgebraElement) -> Result<()> {
        if !self.algebra.same_algebra(&other.algebra) {
            return Err(Error::DomainMismatch("elements of different algebras"));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let base = self.algebra.base();
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| base.add_idx(a, b))
            .collect();
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords,
        })
    }

    pub fn checked_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let mut out = vec![self.algebra.base().zero_idx(); self.algebra.rank()];
        self.algebra.mul_into(&self.coords, &other.coords, &mut out);
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords: out,
        })
    }

    pub fn negated(&self) -> AlgebraElement {
        let base = self.algebra.base();
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|&c| base.neg_idx(c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> AlgebraElement {
        let mut acc = self.algebra.one();
        for _ in 0..k {
            acc = acc.checked_mul(self).unwrap();
        }
        acc
    }

    /// Content ideal: for a free algebra, the ideal generated by the
    /// coordinates.  content(0) = (0).
    pub fn content(&self) -> Ideal {
        Ideal::generated_idx(self.algebra.base(), &self.coords)
    }

    /// The content computed literally from its definition: the intersection
    /// of all ideals `I` of the base with `f ∈ IS` (coordinatewise membership
    /// since the algebra is free).  The minimum is attained, which is
    /// asserted: `f ∈ content_oracle(f)·S`.
    pub fn content_oracle(&self) -> Result<Ideal> {
        let ring = self.algebra.base();
        let cache = ideals::lattice(ring)?;
        let mut acc = Bits::full(ring.size());
        for b in &cache.ideals {
            if self.coords.iter().all(|&c| b.get(c as usize)) {
                acc.intersect_with(b);
            }
        }
        let oracle = Ideal::from_member_bits(ring.clone(), acc);
        assert!(
            self.coords.iter().all(|&c| oracle.contains_idx(c)),
            "minimum content ideal must again contain the element"
        );
        Ok(oracle)
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_algebra(&other.algebra) && self.coords == other.coords
    }
}

impl Eq for AlgebraElement {}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("algebra mismatch")
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("algebra mismatch")
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.negated()
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl std::fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let base = self.algebra.base();
        let mut terms = Vec::new();
        for (i, &c) in self.coords.iter().enumerate() {
            if c == base.zero_idx() {
                continue;
            }
            let cname = base.name(c);
            let wrapped = if cname.contains('+') || cname.contains(',') {
                format!("({cname})")
            } else {
                cname.to_string()
            };
            let bname = self.algebra.basis_name(i);
            terms.push(if bname == "1" {
                wrapped
            } else if c == base.one_idx() {
                bname.to_string()
            } else {
                format!("{wrapped}*{bname}")
            });
        }
        if terms.is_empty() {
            f.write_str(base.name(base.zero_idx()))
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

impl std::fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} in {}", self, self.algebra.instance_label())
    }
}

impl AlgebraMap {
    pub fn source(&self) -> &FreeAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FreeAlgebra {
        &self.target
    }

    pub fn base_map(&self) -> &RingMap {
        &self.base_map
    }

    pub fn apply(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        if !e.algebra().same_algebra(&self.source) {
            return Err(Error::DomainMismatch("element not in the map source"));
        }
        let coords = e
            .coord_indices()
            .iter()
            .map(|&c| self.base_map.apply_idx(c))
            .collect();
        Ok(self.target.element_from_indices(coords))
    }
}
