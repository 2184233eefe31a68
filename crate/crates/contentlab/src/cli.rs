//! Command-line front end and the descriptor grammar.
//!
//! Ring descriptors:    `Z/<n>` | `trunc(<ring>,<d>)` | `prod(<ring>,<ring>)`
//!                      | `quot(<ring>; <elem>,...)`
//! Algebra descriptors: `id` | `trunc(<d>)` | `quad(<elem>)` | `group(Z/<n>)`
//!                      | `monoid(<path>)`
//! Element expressions are integer polynomials in `x` (the base-ring
//! generator) and `y` (the algebra generator; `t` is accepted as an alias,
//! matching how group-algebra elements print).
//!
//! Parsing is recursive descent; errors carry the byte position and the
//! expected token.  Exit statuses: 0 on success or a completed check, 1 on a
//! suite violation, 2 on usage or parse errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{AlgebraElement, FreeAlgebra, MonoidTable};
use crate::error::{Error, Result};
use crate::finring::{Caps, FiniteRing, RingElement, DEFAULT_MAX_ALG, DEFAULT_MAX_RING};
use crate::harness::{
    self, generate_corpus, CorpusParams, Predicate, ReportField,
};
use crate::ideals::{Ideal, IdealFilter};
use crate::properties;

// ---------------------------------------------------------------------
// Scanner
// ---------------------------------------------------------------------

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn error(&self, expected: impl Into<String>) -> Error {
        Error::parse(self.pos, expected, self.found())
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("'{c}'")))
        }
    }

    fn try_eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// Consume the keyword if the upcoming identifier equals it exactly.
    fn try_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        if let Some(after) = rest.strip_prefix(kw) {
            let boundary = !after.starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_');
            if boundary {
                self.pos += kw.len();
                return true;
            }
        }
        false
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let end = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if end == 0 {
            return None;
        }
        let word = rest[..end].to_string();
        self.pos += end;
        Some(word)
    }

    /// An unsigned integer literal; returns the value and its start position.
    fn number(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error("a number"));
        }
        let value: u64 = rest[..end]
            .parse()
            .map_err(|_| Error::parse(start, "a number", &rest[..end]))?;
        self.pos += end;
        Ok((value, start))
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

// ---------------------------------------------------------------------
// Ring and algebra descriptors
// ---------------------------------------------------------------------

fn ring(s: &mut Scanner, caps: Caps) -> Result<FiniteRing> {
    s.skip_ws();
    if s.try_keyword("Z") {
        s.eat('/')?;
        let (n, npos) = s.number()?;
        return match FiniteRing::zmod_with(n, caps) {
            Err(Error::InvalidModulus) => Err(Error::parse(
                npos,
                "a modulus of at least 1",
                n.to_string(),
            )),
            other => other,
        };
    }
    if s.try_keyword("trunc") {
        s.eat('(')?;
        let base = ring(s, caps)?;
        s.eat(',')?;
        let (d, dpos) = s.number()?;
        if d == 0 {
            return Err(Error::parse(dpos, "a depth of at least 1", "0"));
        }
        s.eat(')')?;
        return Ok(FiniteRing::truncated(&base, d as usize)?.0);
    }
    if s.try_keyword("prod") {
        s.eat('(')?;
        let a = ring(s, caps)?;
        s.eat(',')?;
        let b = ring(s, caps)?;
        s.eat(')')?;
        return FiniteRing::product(&a, &b);
    }
    if s.try_keyword("quot") {
        s.eat('(')?;
        let base = ring(s, caps)?;
        s.eat(';')?;
        let mut gens = vec![ring_element(s, &base)?];
        while s.try_eat(',') {
            gens.push(ring_element(s, &base)?);
        }
        s.eat(')')?;
        let ideal = Ideal::generated(&base, &gens)?;
        return Ok(base.quotient(&ideal)?.0);
    }
    Err(s.error("a ring constructor (Z/<n>, trunc, prod, quot)"))
}

fn algebra(s: &mut Scanner, base: &FiniteRing) -> Result<FreeAlgebra> {
    s.skip_ws();
    if s.try_keyword("id") {
        return FreeAlgebra::identity_algebra(base);
    }
    if s.try_keyword("trunc") {
        s.eat('(')?;
        let (d, dpos) = s.number()?;
        if d == 0 {
            return Err(Error::parse(dpos, "a depth of at least 1", "0"));
        }
        s.eat(')')?;
        return FreeAlgebra::truncated(base, d as usize);
    }
    if s.try_keyword("quad") {
        s.eat('(')?;
        let a = ring_element(s, base)?;
        s.eat(')')?;
        return FreeAlgebra::quadratic(base, &a);
    }
    if s.try_keyword("group") {
        s.eat('(')?;
        s.skip_ws();
        if !s.try_keyword("Z") {
            return Err(s.error("Z/<n>"));
        }
        s.eat('/')?;
        let (k, kpos) = s.number()?;
        if k == 0 {
            return Err(Error::parse(kpos, "a group order of at least 1", "0"));
        }
        s.eat(')')?;
        return FreeAlgebra::cyclic_group_algebra(base, k as usize);
    }
    if s.try_keyword("monoid") {
        s.eat('(')?;
        s.skip_ws();
        let start = s.pos;
        let end = s.src[start..]
            .find(')')
            .ok_or_else(|| Error::parse(s.src.len(), "')'", "end of input"))?;
        let path = s.src[start..start + end].trim().to_string();
        if path.is_empty() {
            return Err(Error::parse(start, "a table file path", "')'"));
        }
        s.pos = start + end;
        s.eat(')')?;
        let table = MonoidTable::from_file(&PathBuf::from(&path))?;
        return FreeAlgebra::monoid_algebra(base, &table, Some(path));
    }
    Err(s.error("an algebra constructor (id, trunc, quad, group, monoid)"))
}

// ---------------------------------------------------------------------
// Element expressions
// ---------------------------------------------------------------------

trait ExprEnv {
    type Value: Clone;
    fn int(&self, k: u64) -> Self::Value;
    fn var(&self, name: char, pos: usize) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn one(&self) -> Self::Value;
}

struct RingEnv<'a>(&'a FiniteRing);

impl ExprEnv for RingEnv<'_> {
    type Value = RingElement;
    fn int(&self, k: u64) -> RingElement {
        self.0.int_elem((k % self.0.characteristic() as u64) as i64)
    }
    fn var(&self, name: char, pos: usize) -> Result<RingElement> {
        if name == 'x' {
            self.0
                .gen()
                .ok_or_else(|| Error::parse(pos, "an expression without x (this ring has no generator)", "'x'"))
        } else {
            Err(Error::parse(
                pos,
                "x or an integer",
                format!("'{name}'"),
            ))
        }
    }
    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a + b
    }
    fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a - b
    }
    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a * b
    }
    fn neg(&self, a: &RingElement) -> RingElement {
        -a
    }
    fn one(&self) -> RingElement {
        self.0.one()
    }
}

struct AlgebraEnv<'a>(&'a FreeAlgebra);

impl ExprEnv for AlgebraEnv<'_> {
    type Value = AlgebraElement;
    fn int(&self, k: u64) -> AlgebraElement {
        let base = self.0.base();
        let c = base.int_elem((k % base.characteristic() as u64) as i64);
        self.0.scalar(&c).expect("scalar from the base ring")
    }
    fn var(&self, name: char, pos: usize) -> Result<AlgebraElement> {
        match name {
            'x' => {
                let base = self.0.base();
                let x = base.gen().ok_or_else(|| {
                    Error::parse(pos, "an expression without x (the base ring has no generator)", "'x'")
                })?;
                Ok(self.0.scalar(&x).expect("scalar from the base ring"))
            }
            'y' | 't' => self.0.gen().ok_or_else(|| {
                Error::parse(
                    pos,
                    "an expression without y (the algebra has rank 1)",
                    format!("'{name}'"),
                )
            }),
            _ => Err(Error::parse(
                pos,
                "x, y, t, or an integer",
                format!("'{name}'"),
            )),
        }
    }
    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a + b
    }
    fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a - b
    }
    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a * b
    }
    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        -a
    }
    fn one(&self) -> AlgebraElement {
        self.0.one()
    }
}

fn expr<E: ExprEnv>(s: &mut Scanner, env: &E) -> Result<E::Value> {
    let mut acc = term(s, env)?;
    loop {
        if s.try_eat('+') {
            let rhs = term(s, env)?;
            acc = env.add(&acc, &rhs);
        } else if s.try_eat('-') {
            let rhs = term(s, env)?;
            acc = env.sub(&acc, &rhs);
        } else {
            return Ok(acc);
        }
    }
}

fn term<E: ExprEnv>(s: &mut Scanner, env: &E) -> Result<E::Value> {
    let mut acc = factor(s, env)?;
    while s.try_eat('*') {
        let rhs = factor(s, env)?;
        acc = env.mul(&acc, &rhs);
    }
    Ok(acc)
}

fn factor<E: ExprEnv>(s: &mut Scanner, env: &E) -> Result<E::Value> {
    s.skip_ws();
    if s.try_eat('-') {
        let v = factor(s, env)?;
        return Ok(env.neg(&v));
    }
    let base = atom(s, env)?;
    if s.try_eat('^') {
        let (k, _) = s.number()?;
        let mut acc = env.one();
        for _ in 0..k {
            acc = env.mul(&acc, &base);
        }
        return Ok(acc);
    }
    Ok(base)
}

fn atom<E: ExprEnv>(s: &mut Scanner, env: &E) -> Result<E::Value> {
    s.skip_ws();
    match s.peek() {
        Some('(') => {
            s.eat('(')?;
            let v = expr(s, env)?;
            s.eat(')')?;
            Ok(v)
        }
        Some(c) if c.is_ascii_digit() => {
            let (k, _) = s.number()?;
            Ok(env.int(k))
        }
        Some(c) if c.is_ascii_alphabetic() => {
            let pos = s.pos;
            s.pos += c.len_utf8();
            env.var(c, pos)
        }
        _ => Err(s.error("a number, a variable, or '('")),
    }
}

fn ring_element(s: &mut Scanner, r: &FiniteRing) -> Result<RingElement> {
    expr(s, &RingEnv(r))
}

// ---------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------

fn predicate(s: &mut Scanner) -> Result<Predicate> {
    let mut acc = pred_and(s)?;
    while s.try_eat('|') {
        s.try_eat('|');
        let rhs = pred_and(s)?;
        acc = Predicate::Or(Box::new(acc), Box::new(rhs));
    }
    Ok(acc)
}

fn pred_and(s: &mut Scanner) -> Result<Predicate> {
    let mut acc = pred_unary(s)?;
    while s.try_eat('&') {
        s.try_eat('&');
        let rhs = pred_unary(s)?;
        acc = Predicate::And(Box::new(acc), Box::new(rhs));
    }
    Ok(acc)
}

fn pred_unary(s: &mut Scanner) -> Result<Predicate> {
    s.skip_ws();
    if s.try_eat('!') {
        return Ok(Predicate::Not(Box::new(pred_unary(s)?)));
    }
    if s.try_eat('(') {
        let p = predicate(s)?;
        s.eat(')')?;
        return Ok(p);
    }
    let pos = s.pos;
    let Some(word) = s.ident() else {
        return Err(s.error("a property name, '!', or '('"));
    };
    match word.as_str() {
        "true" => Ok(Predicate::Const(true)),
        "false" => Ok(Predicate::Const(false)),
        w => ReportField::parse(w).map(Predicate::Field).ok_or_else(|| {
            Error::parse(pos, "a property name (e.g. mccoy, weak_content, semicontent)", w)
        }),
    }
}

// ---------------------------------------------------------------------
// Public parse entry points
// ---------------------------------------------------------------------

pub fn parse_ring_descriptor(text: &str, caps: Caps) -> Result<FiniteRing> {
    let mut s = Scanner::new(text);
    let r = ring(&mut s, caps)?;
    s.expect_end()?;
    Ok(r)
}

pub fn parse_algebra_descriptor(text: &str, base: &FiniteRing) -> Result<FreeAlgebra> {
    let mut s = Scanner::new(text);
    let a = algebra(&mut s, base)?;
    s.expect_end()?;
    Ok(a)
}

pub fn parse_ring_element(text: &str, ring: &FiniteRing) -> Result<RingElement> {
    let mut s = Scanner::new(text);
    let e = ring_element(&mut s, ring)?;
    s.expect_end()?;
    Ok(e)
}

pub fn parse_algebra_element(text: &str, alg: &FreeAlgebra) -> Result<AlgebraElement> {
    let mut s = Scanner::new(text);
    let e = expr(&mut s, &AlgebraEnv(alg))?;
    s.expect_end()?;
    Ok(e)
}

pub fn parse_predicate(text: &str) -> Result<Predicate> {
    let mut s = Scanner::new(text);
    let p = predicate(&mut s)?;
    s.expect_end()?;
    Ok(p)
}

// ---------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "contentlab",
    version,
    about = "Content ideals and McCoy-type properties of finite commutative ring extensions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Clone)]
pub struct CapsOpts {
    /// Largest allowed ring (element count)
    #[arg(long, default_value_t = DEFAULT_MAX_RING)]
    pub max_ring: usize,
    /// Largest allowed algebra (element count)
    #[arg(long, default_value_t = DEFAULT_MAX_ALG)]
    pub max_alg: usize,
}

impl CapsOpts {
    fn caps(&self) -> Caps {
        Caps {
            max_ring: self.max_ring,
            max_alg: self.max_alg,
            ..Caps::default()
        }
    }
}

#[derive(Args, Clone)]
pub struct CommonOpts {
    /// Exponent bound for the Dedekind-Mertens search
    #[arg(long, default_value_t = 8)]
    pub nmax: u32,
    /// Emit machine-readable JSON instead of the human table
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Clone)]
pub struct CorpusOpts {
    /// Moduli n of the base rings Z/n
    #[arg(long, value_delimiter = ',', default_values_t = vec![2u64, 3, 4, 5, 6, 8, 9, 12])]
    pub moduli: Vec<u64>,
    /// Truncation depths of the truncated algebras
    #[arg(long, value_delimiter = ',', default_values_t = vec![2usize, 3])]
    pub depths: Vec<usize>,
    /// Orders of the cyclic group algebras
    #[arg(long, value_delimiter = ',', default_values_t = vec![2usize, 3])]
    pub groups: Vec<usize>,
    /// Leave out the composite bases trunc(Z/2,4) and prod(Z/2,Z/3)
    #[arg(long)]
    pub no_composite_bases: bool,
    /// Recorded in reports; the grid itself is deterministic
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl CorpusOpts {
    fn params(&self, caps: Caps, n_max: u32) -> CorpusParams {
        CorpusParams {
            moduli: self.moduli.clone(),
            depths: self.depths.clone(),
            quad_all: true,
            group_orders: self.groups.clone(),
            monoid_files: Vec::new(),
            composite_bases: !self.no_composite_bases,
            caps,
            n_max,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand, Clone)]
pub enum Cmd {
    /// Full property report for one algebra instance
    Analyze {
        /// Base ring descriptor, e.g. "trunc(Z/2,4)"
        #[arg(long)]
        base: String,
        /// Algebra descriptor over the base, e.g. "quad(x^3)"
        #[arg(long)]
        alg: String,
        #[command(flatten)]
        caps: CapsOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Content ideal of an algebra element
    Content {
        #[arg(long)]
        base: String,
        #[arg(long)]
        alg: String,
        /// Element expression, e.g. "y*y" or "2+2*x"
        #[arg(long)]
        elem: String,
        #[command(flatten)]
        caps: CapsOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide one property and print the verdict with its witness
    Check {
        /// One of: mccoy, weak-content-radical, weak-content-primes,
        /// content-algebra, semicontent, residually-mccoy, property-a,
        /// fidel-a, ohm-rush
        property: String,
        /// Base ring descriptor
        #[arg(long)]
        base: String,
        /// Algebra descriptor; required for algebra-level properties
        #[arg(long)]
        alg: Option<String>,
        /// Ideal family for residually-mccoy: all, radical, or prime
        #[arg(long, default_value = "all")]
        family: String,
        #[command(flatten)]
        caps: CapsOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify the theorem suite and localization lemmas on a corpus
    #[command(name = "verify-theorems")]
    VerifyTheorems {
        #[command(flatten)]
        corpus: CorpusOpts,
        #[command(flatten)]
        caps: CapsOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Check the cusp algebra quad(x^3) over trunc(Z/2,N): content identities
    /// and the weak-content failure, with the McCoy scan verdict
    #[command(name = "verify-example1")]
    VerifyExample1 {
        /// Truncation depth N (at least 4, so x^3 survives)
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[command(flatten)]
        caps: CapsOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Search corpus reports for the first instance matching a predicate
    Search {
        /// Boolean combination of property names, e.g. "mccoy & !weak_content"
        #[arg(long)]
        pred: String,
        #[command(flatten)]
        corpus: CorpusOpts,
        #[command(flatten)]
        caps: CapsOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
}

/// Exit-status contract: parse/usage errors are 2, completed runs that found
/// suite violations are 1, everything else is 0.
pub fn exit_code(outcome: &Result<bool>) -> i32 {
    match outcome {
        Err(_) => 2,
        Ok(true) => 1,
        Ok(false) => 0,
    }
}

/// Run a command; Ok(true) means the run completed but found violations.
pub fn run(cmd: &Cmd) -> Result<bool> {
    match cmd {
        Cmd::Analyze {
            base,
            alg,
            caps,
            common,
        } => {
            let ring = parse_ring_descriptor(base, caps.caps())?;
            let algebra = parse_algebra_descriptor(alg, &ring)?;
            let report = harness::full_report(
                &harness::Instance { algebra },
                common.nmax,
            );
            if common.json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            Ok(!report.is_consistent())
        }
        Cmd::Content {
            base,
            alg,
            elem,
            caps,
            common,
        } => {
            let ring = parse_ring_descriptor(base, caps.caps())?;
            let algebra = parse_algebra_descriptor(alg, &ring)?;
            let e = parse_algebra_element(elem, &algebra)?;
            let content = e.content();
            if common.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "schema_version": 1,
                        "element": e.to_string(),
                        "content": content.to_string(),
                    })
                );
            } else {
                println!("{content}");
            }
            Ok(false)
        }
        Cmd::Check {
            property,
            base,
            alg,
            family,
            caps,
            common,
        } => {
            let ring = parse_ring_descriptor(base, caps.caps())?;
            let need_algebra = || -> Result<FreeAlgebra> {
                let Some(alg) = alg else {
                    return Err(Error::Usage(format!(
                        "property '{property}' needs --alg"
                    )));
                };
                parse_algebra_descriptor(alg, &ring)
            };
            let fam = match family.as_str() {
                "all" => IdealFilter::All,
                "radical" => IdealFilter::Radical,
                "prime" => IdealFilter::Prime,
                other => {
                    return Err(Error::Usage(format!(
                        "unknown family '{other}' (use all, radical, or prime)"
                    )))
                }
            };
            let verdict = match property.as_str() {
                "mccoy" => properties::is_mccoy(&need_algebra()?)?,
                "weak-content-radical" => {
                    properties::is_weak_content_radical(&need_algebra()?)?
                }
                "weak-content-primes" => {
                    properties::is_weak_content_primes(&need_algebra()?)?
                }
                "content-algebra" => {
                    properties::is_content_algebra(&need_algebra()?, common.nmax)?
                }
                "semicontent" => properties::is_semicontent(&need_algebra()?)?,
                "residually-mccoy" => {
                    properties::is_residually_mccoy(&need_algebra()?, fam)?
                }
                "ohm-rush" => properties::ohm_rush_consistency(&need_algebra()?, 1024, 1000)?,
                "property-a" => properties::has_property_a(&ring)?,
                "fidel-a" => properties::has_fidel_a(&ring)?,
                other => {
                    return Err(Error::Usage(format!("unknown property '{other}'")))
                }
            };
            if common.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "schema_version": 1,
                        "property": property,
                        "holds": verdict.holds,
                        "witness": verdict.witness.as_ref().map(|w| w.to_string()),
                        "checked": verdict.checked_count,
                    })
                );
            } else {
                println!("{verdict}");
            }
            Ok(false)
        }
        Cmd::VerifyTheorems {
            corpus,
            caps,
            common,
        } => {
            let params = corpus.params(caps.caps(), common.nmax);
            let corpus = generate_corpus(&params);
            for note in &corpus.skipped {
                eprintln!("skipped {note}");
            }
            let reports = harness::corpus_reports(&corpus);
            let theorems = harness::theorem_summary(&reports);
            let localization = harness::verify_localization_lemmas(&corpus);
            if common.json {
                for r in &reports {
                    println!("{}", r.to_json());
                }
                println!(
                    "{}",
                    serde_json::json!({
                        "schema_version": 1,
                        "type": "summary",
                        "instances": theorems.instance_count,
                        "theorem_violations": theorems.violations.len(),
                        "localization_violations": localization.violations.len(),
                        "skipped": corpus.skipped,
                        "seed": params.seed,
                    })
                );
            } else {
                println!("theorem suite: {theorems}");
                for v in &theorems.violations {
                    println!("  {}: {}", v.instance, v.clause);
                }
                println!("localization lemmas: {localization}");
                for v in &localization.violations {
                    println!("  {}: {}", v.instance, v.clause);
                }
            }
            Ok(!theorems.passed() || !localization.passed())
        }
        Cmd::VerifyExample1 { n, caps, common } => {
            let report = harness::verify_cusp_with(*n, caps.caps())?;
            if common.json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            Ok(!report.passed())
        }
        Cmd::Search {
            pred,
            corpus,
            caps,
            common,
        } => {
            let predicate = parse_predicate(pred)?;
            let params = corpus.params(caps.caps(), common.nmax);
            let corpus = generate_corpus(&params);
            for note in &corpus.skipped {
                eprintln!("skipped {note}");
            }
            let (hit, _reports) = harness::search_corpus(&corpus, &predicate);
            match &hit {
                Some(h) => {
                    if h.critical {
                        eprintln!(
                            "CRITICAL: predicate {predicate} matched; on a finite corpus this indicates an implementation bug"
                        );
                    }
                    if common.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "schema_version": 1,
                                "predicate": predicate.to_string(),
                                "found": h.instance,
                                "index": h.index,
                                "critical": h.critical,
                            })
                        );
                    } else {
                        println!("found: {}", h.instance);
                    }
                    Ok(h.critical)
                }
                None => {
                    if common.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "schema_version": 1,
                                "predicate": predicate.to_string(),
                                "found": Value::Null,
                            })
                        );
                    } else {
                        println!("absent");
                    }
                    Ok(false)
                }
            }
        }
    }
}

use serde_json::Value;

/// Entry point for the binary: parse arguments, run, map to the exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let outcome = run(&cli.cmd);
    if let Err(e) = &outcome {
        eprintln!("error: {e}");
    }
    exit_code(&outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn rings_identical(a: &FiniteRing, b: &FiniteRing) -> bool {
        if a.size() != b.size() || a.descriptor() != b.descriptor() {
            return false;
        }
        let n = a.size() as u32;
        for i in 0..n {
            for j in 0..n {
                if a.add_idx(i, j) != b.add_idx(i, j) || a.mul_idx(i, j) != b.mul_idx(i, j) {
                    return false;
                }
            }
        }
        a.zero().index() == b.zero().index() && a.one().index() == b.one().index()
    }

    #[test]
    fn parse_ring_examples() {
        let r = parse_ring_descriptor("trunc(Z/2,4)", caps()).unwrap();
        assert_eq!(r.size(), 16);
        let r = parse_ring_descriptor("prod(Z/2, Z/3)", caps()).unwrap();
        assert_eq!(r.size(), 6);
        let r = parse_ring_descriptor("quot(Z/4; 2)", caps()).unwrap();
        assert_eq!(r.size(), 2);
        let r = parse_ring_descriptor("quot(trunc(Z/2,4); x^2)", caps()).unwrap();
        assert_eq!(r.size(), 4);
    }

    #[test]
    fn invalid_modulus_reports_its_position() {
        let err = parse_ring_descriptor("trunc(Z/0,2)", caps()).unwrap_err();
        let Error::Parse { pos, expected, .. } = err else {
            panic!("expected a positioned parse error, got {err}");
        };
        assert_eq!(pos, 8);
        assert!(expected.contains("modulus"));
    }

    #[test]
    fn unknown_constructor_is_rejected() {
        let err = parse_ring_descriptor("ring(4)", caps()).unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 0, .. }));
        assert!(parse_ring_descriptor("Z/4 junk", caps()).is_err());
    }

    #[test]
    fn parse_algebra_examples() {
        let base = parse_ring_descriptor("trunc(Z/2,4)", caps()).unwrap();
        let alg = parse_algebra_descriptor("quad(x^3)", &base).unwrap();
        assert_eq!(alg.descriptor(), "quad(x^3)");
        assert_eq!(alg.size(), 256);
        let alg = parse_algebra_descriptor("trunc(2)", &base).unwrap();
        assert_eq!(alg.rank(), 2);
        let alg = parse_algebra_descriptor("group(Z/3)", &base).unwrap();
        assert_eq!(alg.rank(), 3);
        let alg = parse_algebra_descriptor("id", &base).unwrap();
        assert_eq!(alg.rank(), 1);
    }

    #[test]
    fn parse_element_expressions() {
        let base = parse_ring_descriptor("trunc(Z/2,4)", caps()).unwrap();
        let alg = parse_algebra_descriptor("quad(x^3)", &base).unwrap();
        let yy = parse_algebra_element("y*y", &alg).unwrap();
        assert_eq!(yy.content().to_string(), "(x^3)");
        let e = parse_algebra_element("1+x*y", &alg).unwrap();
        assert_eq!(e.to_string(), "1+x*y");
        let z4 = parse_ring_descriptor("Z/4", caps()).unwrap();
        let e = parse_ring_element("-1", &z4).unwrap();
        assert_eq!(e.index(), 3);
        let e = parse_ring_element("2+2", &z4).unwrap();
        assert!(e.is_zero());
        assert!(parse_ring_element("x", &z4).is_err());
        let t = parse_algebra_descriptor("group(Z/2)", &z4).unwrap();
        let e = parse_algebra_element("1+t", &t).unwrap();
        assert_eq!(e.to_string(), "1+t");
    }

    #[test]
    fn parse_monoid_descriptor_round_trips() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/klein4.txt");
        let text = format!("monoid({})", dir.display());
        let z2 = parse_ring_descriptor("Z/2", caps()).unwrap();
        let a = parse_algebra_descriptor(&text, &z2).unwrap();
        assert_eq!(a.rank(), 4);
        let again = parse_algebra_descriptor(a.descriptor(), &z2).unwrap();
        assert_eq!(again.descriptor(), a.descriptor());
        assert_eq!(again.rank(), a.rank());
    }

    #[test]
    fn ring_level_check_needs_no_algebra() {
        let cmd = Cmd::Check {
            property: "property-a".into(),
            base: "Z/12".into(),
            alg: None,
            family: "all".into(),
            caps: CapsOpts {
                max_ring: DEFAULT_MAX_RING,
                max_alg: DEFAULT_MAX_ALG,
            },
            common: CommonOpts {
                nmax: 8,
                json: true,
            },
        };
        assert!(!run(&cmd).unwrap());
        // algebra-level properties still demand --alg
        let cmd = Cmd::Check {
            property: "mccoy".into(),
            base: "Z/12".into(),
            alg: None,
            family: "all".into(),
            caps: CapsOpts {
                max_ring: DEFAULT_MAX_RING,
                max_alg: DEFAULT_MAX_ALG,
            },
            common: CommonOpts {
                nmax: 8,
                json: false,
            },
        };
        assert!(matches!(run(&cmd), Err(Error::Usage(_))));
    }

    #[test]
    fn parse_rejects_rank_one_generator_use() {
        let z4 = parse_ring_descriptor("Z/4", caps()).unwrap();
        let id = parse_algebra_descriptor("id", &z4).unwrap();
        assert!(parse_algebra_element("y", &id).is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        for text in [
            "Z/1",
            "Z/4",
            "Z/12",
            "trunc(Z/2,4)",
            "trunc(Z/4,2)",
            "prod(Z/2,Z/3)",
            "prod(Z/4,prod(Z/2,Z/3))",
            "quot(Z/4; 2)",
            "quot(Z/12; 4,6)",
            "quot(trunc(Z/2,4); x^2)",
            "quot(trunc(Z/4,2); 2,x)",
            "trunc(quot(Z/4; 2),3)",
        ] {
            let r = parse_ring_descriptor(text, caps()).unwrap();
            let reparsed = parse_ring_descriptor(r.descriptor(), caps()).unwrap();
            assert!(
                rings_identical(&r, &reparsed),
                "round trip failed for {text} (printed {})",
                r.descriptor()
            );
        }
    }

    #[test]
    fn predicate_parsing() {
        let p = parse_predicate("mccoy & !weak_content").unwrap();
        assert!(matches!(p, Predicate::And(_, _)));
        assert!(!p.is_open_question());
        let p = parse_predicate("semicontent && !content_algebra").unwrap();
        assert!(p.is_open_question());
        let p = parse_predicate("(mccoy | semicontent) & true").unwrap();
        assert!(matches!(p, Predicate::And(_, _)));
        assert!(parse_predicate("bogus_field").is_err());
        assert!(parse_predicate("mccoy &").is_err());
    }

    #[test]
    fn exit_code_contract() {
        assert_eq!(exit_code(&Ok(false)), 0);
        assert_eq!(exit_code(&Ok(true)), 1);
        assert_eq!(exit_code(&Err(Error::Usage("bad".into()))), 2);
    }

    #[test]
    fn check_command_reports_witness() {
        let cmd = Cmd::Check {
            property: "mccoy".into(),
            base: "Z/4".into(),
            alg: Some("trunc(2)".into()),
            family: "all".into(),
            caps: CapsOpts {
                max_ring: DEFAULT_MAX_RING,
                max_alg: DEFAULT_MAX_ALG,
            },
            common: CommonOpts {
                nmax: 8,
                json: false,
            },
        };
        // completes without violation status regardless of the verdict
        assert!(!run(&cmd).unwrap());
    }

    #[test]
    fn verify_example1_command_refuses_small_depths() {
        let cmd = Cmd::VerifyExample1 {
            n: 3,
            caps: CapsOpts {
                max_ring: DEFAULT_MAX_RING,
                max_alg: DEFAULT_MAX_ALG,
            },
            common: CommonOpts {
                nmax: 8,
                json: false,
            },
        };
        let out = run(&cmd);
        assert!(matches!(out, Err(Error::DegenerateDepth(3))));
        assert_eq!(exit_code(&out), 2);
    }
}
