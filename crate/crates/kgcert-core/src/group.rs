//! Computable group backends with canonical normal forms.
//!
//! A [`GroupCtx`] names one concrete group; a [`GroupElem`] is a canonical form
//! inside it. Equality of elements is representation equality of canonical
//! forms — there is no generic word-problem machinery, every backend has a
//! directly computable normal form.
//!
//! Backends: free groups on a named alphabet, free abelian groups ℤ^d, finite
//! cyclic groups ℤ/n, the affine maps t ↦ a·t + b of a line over an exact field,
//! free products of free abelian groups, the wreath product ℤ ≀ ℤ, and direct
//! products of any of these.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{FieldSpec, Scalar};
use crate::word::{Alphabet, Generator, Letter, Word};
use crate::{Error, Result};

/// The concrete group a computation runs in. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupCtx(Arc<CtxKind>);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CtxKind {
    /// Free group on a named alphabet; elements are reduced words.
    FreeGroup(Alphabet),
    /// ℤ^d with componentwise addition; elements are integer vectors.
    FreeAbelian(usize),
    /// ℤ/n, n ≥ 1; elements are residues of the distinguished generator's power.
    FiniteCyclic(u64),
    /// Maps t ↦ a·t + b with a ≠ 0 over an exact field; composition applies the
    /// right factor first: (a₁,b₁)·(a₂,b₂) = (a₁a₂, a₁b₂ + b₁).
    Affine(FieldSpec),
    /// Free product of free abelian groups of the given ranks; elements are
    /// alternating syllable sequences (factor, nonzero vector).
    FreeProduct(Vec<usize>),
    /// ℤ ≀ ℤ: pairs (finitely supported ℤ→ℤ function, shift).
    WreathZZ,
    /// Direct product; elements are tuples.
    DirectProduct(Vec<GroupCtx>),
}

/// Canonical element of some [`GroupCtx`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElem {
    Word(Word),
    Vector(Vec<i64>),
    Residue(u64),
    Affine { a: Scalar, b: Scalar },
    /// Alternating (factor index, nonzero exponent vector) syllables.
    Syllables(Vec<(usize, Vec<i64>)>),
    Wreath { support: BTreeMap<i64, i64>, shift: i64 },
    Tuple(Vec<GroupElem>),
}

impl GroupCtx {
    pub fn free_group(alphabet: Alphabet) -> Self {
        GroupCtx(Arc::new(CtxKind::FreeGroup(alphabet)))
    }

    pub fn free_abelian(rank: usize) -> Self {
        GroupCtx(Arc::new(CtxKind::FreeAbelian(rank)))
    }

    pub fn finite_cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameters("cyclic order must be >= 1".to_owned()));
        }
        Ok(GroupCtx(Arc::new(CtxKind::FiniteCyclic(n))))
    }

    pub fn affine(spec: FieldSpec) -> Self {
        GroupCtx(Arc::new(CtxKind::Affine(spec)))
    }

    pub fn free_product(ranks: Vec<usize>) -> Result<Self> {
        if ranks.is_empty() || ranks.contains(&0) {
            return Err(Error::BadParameters("free product needs positive ranks".to_owned()));
        }
        Ok(GroupCtx(Arc::new(CtxKind::FreeProduct(ranks))))
    }

    pub fn wreath() -> Self {
        GroupCtx(Arc::new(CtxKind::WreathZZ))
    }

    pub fn direct_product(factors: Vec<GroupCtx>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::BadParameters("product needs at least one factor".to_owned()));
        }
        Ok(GroupCtx(Arc::new(CtxKind::DirectProduct(factors))))
    }

    pub fn kind(&self) -> &CtxKind {
        &self.0
    }

    /// Number of elements for finite backends, `None` for infinite ones.
    pub fn size(&self) -> Option<u64> {
        match self.kind() {
            CtxKind::FiniteCyclic(n) => Some(*n),
            CtxKind::DirectProduct(fs) => {
                fs.iter().map(GroupCtx::size).try_fold(1u64, |acc, s| s.map(|s| acc * s))
            }
            CtxKind::FreeAbelian(_)
            | CtxKind::FreeGroup(_)
            | CtxKind::Affine(_)
            | CtxKind::FreeProduct(_)
            | CtxKind::WreathZZ => None,
        }
    }

    /// All elements of a finite backend, in canonical order.
    pub fn enumerate(&self) -> Result<Vec<GroupElem>> {
        match self.kind() {
            CtxKind::FiniteCyclic(n) => Ok((0..*n).map(GroupElem::Residue).collect()),
            CtxKind::DirectProduct(fs) => {
                let mut out = vec![Vec::new()];
                for f in fs {
                    let elems = f.enumerate()?;
                    let mut next = Vec::with_capacity(out.len() * elems.len());
                    for prefix in &out {
                        for e in &elems {
                            let mut t = prefix.clone();
                            t.push(e.clone());
                            next.push(t);
                        }
                    }
                    out = next;
                }
                Ok(out.into_iter().map(GroupElem::Tuple).collect())
            }
            _ => Err(Error::BadParameters("group is not finite".to_owned())),
        }
    }

    pub fn identity(&self) -> GroupElem {
        match self.kind() {
            CtxKind::FreeGroup(a) => GroupElem::Word(Word::identity(a)),
            CtxKind::FreeAbelian(d) => GroupElem::Vector(vec![0; *d]),
            CtxKind::FiniteCyclic(_) => GroupElem::Residue(0),
            CtxKind::Affine(spec) => {
                GroupElem::Affine { a: Scalar::one(spec), b: Scalar::zero(spec) }
            }
            CtxKind::FreeProduct(_) => GroupElem::Syllables(Vec::new()),
            CtxKind::WreathZZ => GroupElem::Wreath { support: BTreeMap::new(), shift: 0 },
            CtxKind::DirectProduct(fs) => {
                GroupElem::Tuple(fs.iter().map(GroupCtx::identity).collect())
            }
        }
    }

    pub fn is_identity(&self, e: &GroupElem) -> bool {
        *e == self.identity()
    }

    /// Structural check that `e` belongs to this context, with canonicalization
    /// of representations that admit redundancy.
    pub fn canonicalize(&self, e: GroupElem) -> Result<GroupElem> {
        match (self.kind(), e) {
            (CtxKind::FreeGroup(a), GroupElem::Word(w)) => {
                if w.alphabet() == a {
                    Ok(GroupElem::Word(w))
                } else {
                    Err(Error::ContextMismatch)
                }
            }
            (CtxKind::FreeAbelian(d), GroupElem::Vector(v)) => {
                if v.len() == *d {
                    Ok(GroupElem::Vector(v))
                } else {
                    Err(Error::ContextMismatch)
                }
            }
            (CtxKind::FiniteCyclic(n), GroupElem::Residue(r)) => Ok(GroupElem::Residue(r % n)),
            (CtxKind::Affine(spec), GroupElem::Affine { a, b }) => {
                if a.spec() != spec || b.spec() != spec {
                    return Err(Error::ContextMismatch);
                }
                if a.is_zero() {
                    return Err(Error::NonUnit);
                }
                Ok(GroupElem::Affine { a, b })
            }
            (CtxKind::FreeProduct(ranks), GroupElem::Syllables(sylls)) => {
                for (f, v) in &sylls {
                    if *f >= ranks.len() || v.len() != ranks[*f] {
                        return Err(Error::ContextMismatch);
                    }
                }
                Ok(GroupElem::Syllables(merge_syllables(Vec::new(), sylls)))
            }
            (CtxKind::WreathZZ, GroupElem::Wreath { mut support, shift }) => {
                support.retain(|_, v| *v != 0);
                Ok(GroupElem::Wreath { support, shift })
            }
            (CtxKind::DirectProduct(fs), GroupElem::Tuple(parts)) => {
                if parts.len() != fs.len() {
                    return Err(Error::ContextMismatch);
                }
                let parts = fs
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.canonicalize(p))
                    .collect::<Result<Vec<_>>>()?;
                Ok(GroupElem::Tuple(parts))
            }
            _ => Err(Error::ContextMismatch),
        }
    }

    pub fn multiply(&self, x: &GroupElem, y: &GroupElem) -> Result<GroupElem> {
        match (self.kind(), x, y) {
            (CtxKind::FreeGroup(_), GroupElem::Word(a), GroupElem::Word(b)) => {
                Ok(GroupElem::Word(a.multiply(b)?))
            }
            (CtxKind::FreeAbelian(d), GroupElem::Vector(a), GroupElem::Vector(b)) => {
                if a.len() != *d || b.len() != *d {
                    return Err(Error::ContextMismatch);
                }
                Ok(GroupElem::Vector(a.iter().zip(b).map(|(p, q)| p + q).collect()))
            }
            (CtxKind::FiniteCyclic(n), GroupElem::Residue(a), GroupElem::Residue(b)) => {
                Ok(GroupElem::Residue((a + b) % n))
            }
            (
                CtxKind::Affine(_),
                GroupElem::Affine { a: a1, b: b1 },
                GroupElem::Affine { a: a2, b: b2 },
            ) => {
                // (x·y)(t) = x(y(t)): apply the right factor first.
                let a = a1.mul(a2)?;
                let b = a1.mul(b2)?.add(b1)?;
                Ok(GroupElem::Affine { a, b })
            }
            (CtxKind::FreeProduct(_), GroupElem::Syllables(a), GroupElem::Syllables(b)) => {
                Ok(GroupElem::Syllables(merge_syllables(a.clone(), b.clone())))
            }
            (
                CtxKind::WreathZZ,
                GroupElem::Wreath { support: f1, shift: s1 },
                GroupElem::Wreath { support: f2, shift: s2 },
            ) => {
                // (f₁, s₁)·(f₂, s₂) = (f₁ + f₂(· + s₁), s₁ + s₂): conjugating a
                // lamp at position i by the shift h moves it so that h⁻¹·δᵢ·h
                // sits at i + 1.
                let mut support = f1.clone();
                for (i, v) in f2 {
                    let slot = support.entry(i - s1).or_insert(0);
                    *slot += v;
                    if *slot == 0 {
                        support.remove(&(i - s1));
                    }
                }
                Ok(GroupElem::Wreath { support, shift: s1 + s2 })
            }
            (CtxKind::DirectProduct(fs), GroupElem::Tuple(a), GroupElem::Tuple(b)) => {
                if a.len() != fs.len() || b.len() != fs.len() {
                    return Err(Error::ContextMismatch);
                }
                let parts = fs
                    .iter()
                    .zip(a.iter().zip(b))
                    .map(|(f, (p, q))| f.multiply(p, q))
                    .collect::<Result<Vec<_>>>()?;
                Ok(GroupElem::Tuple(parts))
            }
            _ => Err(Error::ContextMismatch),
        }
    }

    pub fn invert(&self, x: &GroupElem) -> Result<GroupElem> {
        match (self.kind(), x) {
            (CtxKind::FreeGroup(_), GroupElem::Word(w)) => Ok(GroupElem::Word(w.invert())),
            (CtxKind::FreeAbelian(_), GroupElem::Vector(v)) => {
                Ok(GroupElem::Vector(v.iter().map(|c| -c).collect()))
            }
            (CtxKind::FiniteCyclic(n), GroupElem::Residue(r)) => {
                Ok(GroupElem::Residue(if *r == 0 { 0 } else { n - r }))
            }
            (CtxKind::Affine(_), GroupElem::Affine { a, b }) => {
                let ai = a.inv()?;
                let bi = ai.mul(b)?.neg();
                Ok(GroupElem::Affine { a: ai, b: bi })
            }
            (CtxKind::FreeProduct(_), GroupElem::Syllables(s)) => {
                let inv: Vec<(usize, Vec<i64>)> = s
                    .iter()
                    .rev()
                    .map(|(f, v)| (*f, v.iter().map(|c| -c).collect()))
                    .collect();
                Ok(GroupElem::Syllables(inv))
            }
            (CtxKind::WreathZZ, GroupElem::Wreath { support, shift }) => {
                let inv: BTreeMap<i64, i64> =
                    support.iter().map(|(i, v)| (i + shift, -v)).collect();
                Ok(GroupElem::Wreath { support: inv, shift: -shift })
            }
            (CtxKind::DirectProduct(fs), GroupElem::Tuple(parts)) => {
                if parts.len() != fs.len() {
                    return Err(Error::ContextMismatch);
                }
                let inv = fs
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.invert(p))
                    .collect::<Result<Vec<_>>>()?;
                Ok(GroupElem::Tuple(inv))
            }
            _ => Err(Error::ContextMismatch),
        }
    }

    pub fn pow(&self, x: &GroupElem, k: i64) -> Result<GroupElem> {
        let base = if k < 0 { self.invert(x)? } else { x.clone() };
        let mut acc = self.identity();
        let mut e = k.unsigned_abs();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = self.multiply(&sq, &sq)?;
            }
        }
        Ok(acc)
    }

    /// b⁻¹ · a · b.
    pub fn conjugate(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
        let bi = self.invert(b)?;
        self.multiply(&self.multiply(&bi, a)?, b)
    }

    /// a⁻¹ b⁻¹ a b.
    pub fn commutator(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
        let ai = self.invert(a)?;
        let bi = self.invert(b)?;
        self.multiply(&self.multiply(&self.multiply(&ai, &bi)?, a)?, b)
    }

    pub fn commutes(&self, a: &GroupElem, b: &GroupElem) -> Result<bool> {
        Ok(self.multiply(a, b)? == self.multiply(b, a)?)
    }

    /// Least k in 1..=cap with x^k = 1, or `None` past the cap.
    pub fn elem_order(&self, x: &GroupElem, cap: u64) -> Result<Option<u64>> {
        let mut acc = x.clone();
        for k in 1..=cap {
            if self.is_identity(&acc) {
                return Ok(Some(k));
            }
            if k < cap {
                acc = self.multiply(&acc, x)?;
            }
        }
        Ok(None)
    }

    /// Image of the word under the homomorphism sending each generator to its
    /// assigned element. Only generators actually occurring need assignments.
    pub fn eval_word(
        &self,
        w: &Word,
        assignment: &BTreeMap<Generator, GroupElem>,
    ) -> Result<GroupElem> {
        let mut acc = self.identity();
        let mut cache: BTreeMap<Generator, GroupElem> = BTreeMap::new();
        for l in w.letters() {
            let image = match assignment.get(&l.gen) {
                Some(e) => e,
                None => {
                    return Err(Error::MissingAssignment(
                        w.alphabet().name(l.gen).to_owned(),
                    ));
                }
            };
            let factor = if l.sign > 0 {
                image.clone()
            } else if let Some(inv) = cache.get(&l.gen) {
                inv.clone()
            } else {
                let inv = self.invert(image)?;
                cache.insert(l.gen, inv.clone());
                inv
            };
            acc = self.multiply(&acc, &factor)?;
        }
        Ok(acc)
    }

    /// Field spec of the affine backend (None otherwise).
    pub fn field(&self) -> Option<&FieldSpec> {
        match self.kind() {
            CtxKind::Affine(spec) => Some(spec),
            _ => None,
        }
    }
}

fn merge_syllables(
    mut acc: Vec<(usize, Vec<i64>)>,
    rest: Vec<(usize, Vec<i64>)>,
) -> Vec<(usize, Vec<i64>)> {
    for (f, v) in rest {
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        match acc.last_mut() {
            Some((lf, lv)) if *lf == f => {
                for (a, b) in lv.iter_mut().zip(&v) {
                    *a += b;
                }
                if lv.iter().all(|&c| c == 0) {
                    acc.pop();
                }
            }
            _ => acc.push((f, v)),
        }
    }
    acc
}

/// The standard wreath-product test pair: g = (δ₀, 0) and h = (0, 1).
/// g commutes with h⁻¹gh = (δ₁, 0) while h⁻¹gh ≠ g.
pub fn wreath_generators() -> (GroupElem, GroupElem) {
    let mut delta0 = BTreeMap::new();
    delta0.insert(0, 1);
    (
        GroupElem::Wreath { support: delta0, shift: 0 },
        GroupElem::Wreath { support: BTreeMap::new(), shift: 1 },
    )
}

/// Least N ≥ 1 such that substituting the second abelian generator by the
/// N-th power of the first maps the given elements injectively into a rank-2
/// free group. Inputs live in the free product ℤ * ℤ², generators x; y, y′;
/// the substitution is x ↦ x, y ↦ y, y′ ↦ y^N. Duplicate inputs are deduped
/// (they denote the same source element, which no substitution separates).
pub fn power_substitution_n(ctx: &GroupCtx, elems: &[GroupElem]) -> Result<u64> {
    match ctx.kind() {
        CtxKind::FreeProduct(ranks) if ranks.as_slice() == [1, 2] => {}
        _ => {
            return Err(Error::BadParameters(
                "power substitution needs the free product of Z and Z^2".to_owned(),
            ));
        }
    }
    let distinct: BTreeSet<GroupElem> = elems
        .iter()
        .map(|e| ctx.canonicalize(e.clone()))
        .collect::<Result<_>>()?;
    let target = Alphabet::new(["x", "y"]).expect("fixed names");
    let x = Generator(0);
    let y = Generator(1);
    for n in 1u64.. {
        let mut images = BTreeSet::new();
        let mut injective = true;
        for e in &distinct {
            let GroupElem::Syllables(sylls) = e else { return Err(Error::ContextMismatch) };
            let mut letters: Vec<Letter> = Vec::new();
            for (f, v) in sylls {
                let (gen, exp) = match *f {
                    0 => (x, v[0]),
                    _ => (y, v[0] + (n as i64) * v[1]),
                };
                let sign = if exp >= 0 { 1 } else { -1 };
                for _ in 0..exp.unsigned_abs() {
                    letters.push(Letter { gen, sign });
                }
            }
            if !images.insert(Word::from_letters(&target, letters)) {
                injective = false;
                break;
            }
        }
        if injective {
            return Ok(n);
        }
    }
    unreachable!("substitution becomes injective for large N")
}

// ---------------------------------------------------------------------------
// text formats

impl GroupCtx {
    /// Parses group text: `free(x,y)`, `Z^3`, `Z/4`, `affine(Q)`,
    /// `affine(Q[t]/(t^2-t-1))`, `fp(Z^1,Z^2)`, `wreath`, `prod(g1, g2, ...)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let syntax = |msg: String| Error::Syntax { pos: 0, msg };
        if t == "wreath" {
            return Ok(Self::wreath());
        }
        if let Some(body) = t.strip_prefix("free(").and_then(|s| s.strip_suffix(')')) {
            let names: Vec<&str> = body.split(',').map(str::trim).collect();
            return Ok(Self::free_group(Alphabet::new(names)?));
        }
        if let Some(exp) = t.strip_prefix("Z^") {
            let d: usize = exp
                .trim()
                .parse()
                .map_err(|_| syntax(format!("bad rank `{exp}`")))?;
            if d == 0 {
                return Err(Error::BadParameters("rank must be >= 1".to_owned()));
            }
            return Ok(Self::free_abelian(d));
        }
        if let Some(n) = t.strip_prefix("Z/") {
            let n: u64 = n
                .trim()
                .parse()
                .map_err(|_| syntax(format!("bad modulus `{n}`")))?;
            return Self::finite_cyclic(n);
        }
        if let Some(body) = t.strip_prefix("affine(").and_then(|s| s.strip_suffix(')')) {
            return Ok(Self::affine(FieldSpec::parse(body)?));
        }
        if let Some(body) = t.strip_prefix("fp(").and_then(|s| s.strip_suffix(')')) {
            let mut ranks = Vec::new();
            for part in split_top_level(body, ',') {
                let part = part.trim();
                let d = part
                    .strip_prefix("Z^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| syntax(format!("bad free-product factor `{part}`")))?;
                ranks.push(d);
            }
            return Self::free_product(ranks);
        }
        if let Some(body) = t.strip_prefix("prod(").and_then(|s| s.strip_suffix(')')) {
            let factors = split_top_level(body, ',')
                .into_iter()
                .map(|p| Self::parse(&p))
                .collect::<Result<Vec<_>>>()?;
            return Self::direct_product(factors);
        }
        Err(syntax(format!("unrecognized group `{t}`")))
    }

    /// Canonical element text for this backend; inverse of [`GroupCtx::parse_elem`].
    pub fn elem_text(&self, e: &GroupElem) -> String {
        match (self.kind(), e) {
            (CtxKind::FreeGroup(_), GroupElem::Word(w)) => w.to_string(),
            (CtxKind::FreeAbelian(_), GroupElem::Vector(v)) => {
                let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("[{}]", inner.join(", "))
            }
            (CtxKind::FiniteCyclic(_), GroupElem::Residue(r)) => format!("g^{r}"),
            (CtxKind::Affine(_), GroupElem::Affine { a, b }) => format!("({a}, {b})"),
            (CtxKind::FreeProduct(_), GroupElem::Syllables(s)) => {
                if s.is_empty() {
                    return "1".to_owned();
                }
                let parts: Vec<String> = s
                    .iter()
                    .map(|(f, v)| {
                        let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
                        format!("{f}:[{}]", inner.join(", "))
                    })
                    .collect();
                parts.join("*")
            }
            (CtxKind::WreathZZ, GroupElem::Wreath { support, shift }) => {
                let inner: Vec<String> =
                    support.iter().map(|(i, v)| format!("{i}:{v}")).collect();
                format!("({{{}}}, {shift})", inner.join(", "))
            }
            (CtxKind::DirectProduct(fs), GroupElem::Tuple(parts)) => {
                let inner: Vec<String> = fs
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.elem_text(p))
                    .collect();
                format!("({})", inner.join("; "))
            }
            _ => "<malformed>".to_owned(),
        }
    }

    /// Parses element text in this backend's format (see [`GroupCtx::elem_text`]).
    pub fn parse_elem(&self, text: &str) -> Result<GroupElem> {
        let t = text.trim();
        let syntax = |msg: String| Error::Syntax { pos: 0, msg };
        let elem = match self.kind() {
            CtxKind::FreeGroup(a) => GroupElem::Word(Word::parse(a, t)?),
            CtxKind::FreeAbelian(_) => {
                let body = t
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| syntax("expected `[a1, a2, ...]`".to_owned()))?;
                GroupElem::Vector(parse_int_list(body)?)
            }
            CtxKind::FiniteCyclic(_) => {
                if t == "1" {
                    GroupElem::Residue(0)
                } else if t == "g" {
                    GroupElem::Residue(1)
                } else {
                    let exp = t
                        .strip_prefix("g^")
                        .ok_or_else(|| syntax(format!("expected `g^k`, got `{t}`")))?;
                    let k: i64 = exp
                        .trim()
                        .parse()
                        .map_err(|_| syntax(format!("bad exponent `{exp}`")))?;
                    let n = match self.kind() {
                        CtxKind::FiniteCyclic(n) => *n as i64,
                        _ => unreachable!(),
                    };
                    GroupElem::Residue(k.rem_euclid(n) as u64)
                }
            }
            CtxKind::Affine(spec) => {
                let body = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| syntax("expected `(a, b)`".to_owned()))?;
                let parts = split_top_level(body, ',');
                if parts.len() != 2 {
                    return Err(syntax("expected exactly two components".to_owned()));
                }
                GroupElem::Affine {
                    a: Scalar::parse(spec, &parts[0])?,
                    b: Scalar::parse(spec, &parts[1])?,
                }
            }
            CtxKind::FreeProduct(_) => {
                if t == "1" {
                    GroupElem::Syllables(Vec::new())
                } else {
                    let mut sylls = Vec::new();
                    for part in split_top_level(t, '*') {
                        let part = part.trim();
                        let (f, v) = part
                            .split_once(':')
                            .ok_or_else(|| syntax(format!("expected `factor:[...]`, got `{part}`")))?;
                        let f: usize = f
                            .trim()
                            .parse()
                            .map_err(|_| syntax(format!("bad factor index `{f}`")))?;
                        let body = v
                            .trim()
                            .strip_prefix('[')
                            .and_then(|s| s.strip_suffix(']'))
                            .ok_or_else(|| syntax("expected `[a1, ...]`".to_owned()))?;
                        sylls.push((f, parse_int_list(body)?));
                    }
                    GroupElem::Syllables(sylls)
                }
            }
            CtxKind::WreathZZ => {
                let body = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| syntax("expected `({i:v, ...}, s)`".to_owned()))?;
                // Commas inside the braces sit at depth > 0, so the top-level
                // split yields exactly the map and the shift.
                let parts = split_top_level(body, ',');
                if parts.len() != 2 {
                    return Err(syntax("expected `({i:v, ...}, s)`".to_owned()));
                }
                let (map_part, shift_part) = (&parts[0], &parts[1]);
                let map_body = map_part
                    .trim()
                    .strip_prefix('{')
                    .and_then(|s| s.strip_suffix('}'))
                    .ok_or_else(|| syntax("expected `{i:v, ...}`".to_owned()))?;
                let mut support = BTreeMap::new();
                for entry in map_body.split(',') {
                    let entry = entry.trim();
                    if entry.is_empty() {
                        continue;
                    }
                    let (i, v) = entry
                        .split_once(':')
                        .ok_or_else(|| syntax(format!("expected `i:v`, got `{entry}`")))?;
                    let i: i64 = i
                        .trim()
                        .parse()
                        .map_err(|_| syntax(format!("bad position `{i}`")))?;
                    let v: i64 = v
                        .trim()
                        .parse()
                        .map_err(|_| syntax(format!("bad value `{v}`")))?;
                    if v != 0 {
                        support.insert(i, v);
                    }
                }
                let shift: i64 = shift_part
                    .trim()
                    .parse()
                    .map_err(|_| syntax(format!("bad shift `{shift_part}`")))?;
                GroupElem::Wreath { support, shift }
            }
            CtxKind::DirectProduct(fs) => {
                let body = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| syntax("expected `(e1; e2; ...)`".to_owned()))?;
                let parts = split_top_level(body, ';');
                if parts.len() != fs.len() {
                    return Err(syntax(format!(
                        "expected {} components, got {}",
                        fs.len(),
                        parts.len()
                    )));
                }
                let parts = fs
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.parse_elem(&p))
                    .collect::<Result<Vec<_>>>()?;
                GroupElem::Tuple(parts)
            }
        };
        self.canonicalize(elem)
    }
}

impl fmt::Display for GroupCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            CtxKind::FreeGroup(a) => {
                let names: Vec<&str> = a.generators().map(|g| a.name(g)).collect();
                write!(f, "free({})", names.join(","))
            }
            CtxKind::FreeAbelian(d) => write!(f, "Z^{d}"),
            CtxKind::FiniteCyclic(n) => write!(f, "Z/{n}"),
            CtxKind::Affine(spec) => write!(f, "affine({spec})"),
            CtxKind::FreeProduct(ranks) => {
                let parts: Vec<String> = ranks.iter().map(|d| format!("Z^{d}")).collect();
                write!(f, "fp({})", parts.join(","))
            }
            CtxKind::WreathZZ => write!(f, "wreath"),
            CtxKind::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "prod({})", parts.join(", "))
            }
        }
    }
}

/// Splits on `sep` at nesting depth zero with respect to (), [], {}.
fn split_top_level(text: &str, sep: char) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '[' | '{' => {
                depth += 1;
                cur.push(c);
            }
            ')' | ']' | '}' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            c if c == sep && depth == 0 => {
                parts.push(core::mem::take(&mut cur));
            }
            c => cur.push(c),
        }
    }
    parts.push(cur);
    parts
}

fn parse_int_list(body: &str) -> Result<Vec<i64>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|p| {
            p.trim().parse::<i64>().map_err(|_| Error::Syntax {
                pos: 0,
                msg: format!("bad integer `{p}`"),
            })
        })
        .collect()
}
