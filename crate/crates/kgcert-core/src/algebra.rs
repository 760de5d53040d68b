//! Group-algebra elements: finite k-linear combinations of group elements,
//! their ring arithmetic, binomial normalization, and brute-force unit
//! enumeration for finite group algebras.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{CtxKind, GroupCtx, GroupElem};
use crate::matrix::{solve_linear, ExactMatrix};
use crate::scalar::{FieldKind, FieldSpec, Scalar};
use crate::word::Word;
use crate::{Error, Result};

/// An element of the group algebra k[G]: a finite support map from canonical
/// group elements to nonzero scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElem {
    ctx: GroupCtx,
    spec: FieldSpec,
    terms: BTreeMap<GroupElem, Scalar>,
}

impl AlgebraElem {
    pub fn zero(ctx: &GroupCtx, spec: &FieldSpec) -> Self {
        AlgebraElem { ctx: ctx.clone(), spec: spec.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &GroupCtx, spec: &FieldSpec) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ctx.identity(), Scalar::one(spec));
        AlgebraElem { ctx: ctx.clone(), spec: spec.clone(), terms }
    }

    /// c·g as an algebra element (zero if c = 0).
    pub fn monomial(ctx: &GroupCtx, spec: &FieldSpec, c: Scalar, g: GroupElem) -> Result<Self> {
        Self::from_terms(ctx, spec, vec![(c, g)])
    }

    /// 1·g as an algebra element.
    pub fn from_group(ctx: &GroupCtx, spec: &FieldSpec, g: GroupElem) -> Result<Self> {
        Self::monomial(ctx, spec, Scalar::one(spec), g)
    }

    /// Builds from (coefficient, element) pairs, canonicalizing elements,
    /// merging duplicate support points, and dropping zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Scalar, GroupElem)>>(
        ctx: &GroupCtx,
        spec: &FieldSpec,
        pairs: I,
    ) -> Result<Self> {
        let mut terms: BTreeMap<GroupElem, Scalar> = BTreeMap::new();
        for (c, g) in pairs {
            if c.spec() != spec {
                return Err(Error::FieldMismatch);
            }
            let g = ctx.canonicalize(g)?;
            let entry = terms.remove(&g);
            let sum = match entry {
                Some(prev) => prev.add(&c)?,
                None => c,
            };
            if !sum.is_zero() {
                terms.insert(g, sum);
            }
        }
        Ok(AlgebraElem { ctx: ctx.clone(), spec: spec.clone(), terms })
    }

    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Support points with their coefficients, in canonical element order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElem, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElem> {
        self.terms.keys()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, g: &GroupElem) -> Option<&Scalar> {
        self.terms.get(g)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(g, c)| c.is_one() && self.ctx.is_identity(g))
    }

    /// True when the support has at most one point (0 or c·g).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    fn check(&self, other: &AlgebraElem) -> Result<()> {
        if self.ctx != other.ctx || self.spec != other.spec {
            Err(Error::ContextMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &AlgebraElem) -> Result<AlgebraElem> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (g, c) in &other.terms {
            let sum = match terms.remove(g) {
                Some(prev) => prev.add(c)?,
                None => c.clone(),
            };
            if !sum.is_zero() {
                terms.insert(g.clone(), sum);
            }
        }
        Ok(AlgebraElem { ctx: self.ctx.clone(), spec: self.spec.clone(), terms })
    }

    pub fn neg(&self) -> AlgebraElem {
        let terms = self.terms.iter().map(|(g, c)| (g.clone(), c.neg())).collect();
        AlgebraElem { ctx: self.ctx.clone(), spec: self.spec.clone(), terms }
    }

    pub fn sub(&self, other: &AlgebraElem) -> Result<AlgebraElem> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<AlgebraElem> {
        if c.spec() != &self.spec {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Ok(Self::zero(&self.ctx, &self.spec));
        }
        let terms = self
            .terms
            .iter()
            .map(|(g, v)| Ok((g.clone(), v.mul(c)?)))
            .collect::<Result<_>>()?;
        Ok(AlgebraElem { ctx: self.ctx.clone(), spec: self.spec.clone(), terms })
    }

    /// Convolution product: Σ aᵤ·b_v on the group product u·v.
    pub fn mul(&self, other: &AlgebraElem) -> Result<AlgebraElem> {
        self.check(other)?;
        let mut terms: BTreeMap<GroupElem, Scalar> = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let g = self.ctx.multiply(u, v)?;
                let c = cu.mul(cv)?;
                let sum = match terms.remove(&g) {
                    Some(prev) => prev.add(&c)?,
                    None => c,
                };
                if !sum.is_zero() {
                    terms.insert(g, sum);
                }
            }
        }
        Ok(AlgebraElem { ctx: self.ctx.clone(), spec: self.spec.clone(), terms })
    }

    /// u·self·v for group elements u, v (sandwich application).
    pub fn sandwich(&self, u: &GroupElem, v: &GroupElem) -> Result<AlgebraElem> {
        let left = Self::from_group(&self.ctx, &self.spec, u.clone())?;
        let right = Self::from_group(&self.ctx, &self.spec, v.clone())?;
        left.mul(self)?.mul(&right)
    }
}

/// A binomial c₁g₁ + c₂g₂ rewritten as unit·(g − c).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedBinomial {
    /// The group element of the normalized form g − c.
    pub g: GroupElem,
    /// The scalar of the normalized form g − c (never zero).
    pub c: Scalar,
    /// Unit coefficient: the original equals (unit_coeff·unit_elem)·(g − c).
    pub unit_coeff: Scalar,
    /// Unit group element of the monomial unit.
    pub unit_elem: GroupElem,
}

/// Rewrites a two-term element c₁g₁ + c₂g₂ (support in canonical order) as
/// (c₂g₁)·(g − c) with g = g₁⁻¹g₂ ≠ 1 and c = −c₁/c₂ ≠ 0.
pub fn binomial_normalize(b: &AlgebraElem) -> Result<NormalizedBinomial> {
    if b.support_size() != 2 {
        return Err(Error::NotBinomial);
    }
    let mut it = b.terms();
    let (g1, c1) = it.next().expect("two terms");
    let (g2, c2) = it.next().expect("two terms");
    let ctx = b.ctx();
    let g = ctx.multiply(&ctx.invert(g1)?, g2)?;
    let c = c1.div(c2)?.neg();
    Ok(NormalizedBinomial {
        g,
        c,
        unit_coeff: c2.clone(),
        unit_elem: g1.clone(),
    })
}

/// Result of exhaustively enumerating the units of a finite group algebra.
#[derive(Clone, Debug)]
pub struct UnitsReport {
    /// (unit, two-sided inverse) pairs in coefficient-lexicographic order.
    pub units: Vec<(AlgebraElem, AlgebraElem)>,
    /// True iff some unit has support of size > 1.
    pub has_non_monomial: bool,
}

/// Checks every element of k[G] (finite field k, finite group G) for two-sided
/// invertibility. The candidate count |k|^|G| must not exceed `cap`.
pub fn enumerate_units(ctx: &GroupCtx, spec: &FieldSpec, cap: u128) -> Result<UnitsReport> {
    let group_size = ctx
        .size()
        .ok_or_else(|| Error::BadParameters("unit enumeration needs a finite group".to_owned()))?;
    let field_elems = spec.enumerate()?;
    let field_size = field_elems.len() as u128;
    let needed = field_size
        .checked_pow(u32::try_from(group_size).map_err(|_| Error::CapExceeded {
            needed: u128::MAX,
            cap,
        })?)
        .ok_or(Error::CapExceeded { needed: u128::MAX, cap })?;
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }

    let basis = ctx.enumerate()?;
    let n = basis.len();
    let index: BTreeMap<GroupElem, usize> =
        basis.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    let id_index = index[&ctx.identity()];

    // Precompute the group's multiplication table once.
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = index[&ctx.multiply(&basis[i], &basis[j])?];
        }
    }

    let one = AlgebraElem::one(ctx, spec);
    let mut units = Vec::new();
    let mut has_non_monomial = false;

    // Odometer over coefficient vectors, last coordinate fastest.
    let mut counters = vec![0usize; n];
    loop {
        let coords: Vec<&Scalar> = counters.iter().map(|&i| &field_elems[i]).collect();
        if coords.iter().any(|c| !c.is_zero()) {
            // Left-multiplication matrix of the candidate in the group basis.
            let mut m = ExactMatrix::new(spec, n, n);
            for (i, ci) in coords.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                for (j, &row) in table[i].iter().enumerate() {
                    let prev = m.get(row, j).cloned().unwrap_or_else(|| Scalar::zero(spec));
                    m.set(row, j, prev.add(ci)?)?;
                }
            }
            let mut e_id = vec![Scalar::zero(spec); n];
            e_id[id_index] = Scalar::one(spec);
            if let Some(x) = solve_linear(&m, &e_id)? {
                let a = AlgebraElem::from_terms(
                    ctx,
                    spec,
                    coords
                        .iter()
                        .enumerate()
                        .map(|(i, c)| ((*c).clone(), basis[i].clone())),
                )?;
                let b = AlgebraElem::from_terms(
                    ctx,
                    spec,
                    x.into_iter().enumerate().map(|(j, c)| (c, basis[j].clone())),
                )?;
                if a.mul(&b)? == one && b.mul(&a)? == one {
                    if a.support_size() > 1 {
                        has_non_monomial = true;
                    }
                    units.push((a, b));
                }
            }
        }
        // Advance the odometer.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(UnitsReport { units, has_non_monomial });
            }
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < field_elems.len() {
                break;
            }
            counters[pos] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// text format

impl fmt::Display for AlgebraElem {
    /// For free-group contexts this is the `+`/`-` separated term grammar and
    /// round-trips through [`AlgebraElem::parse`]. Other backends render each
    /// term as `(coefficient) element` joined by ` + `, for reports only.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let wordy = matches!(self.ctx.kind(), CtxKind::FreeGroup(_));
        let mut first = true;
        for (g, c) in &self.terms {
            if !wordy {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({c}) {}", self.ctx.elem_text(g))?;
                first = false;
                continue;
            }
            let ct = c.to_string();
            let (neg, mag) = match ct.strip_prefix('-') {
                Some(rest) if c.is_constant() => (true, rest.to_owned()),
                _ => (false, ct),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let elem = self.ctx.elem_text(g);
            let is_ident = self.ctx.is_identity(g);
            let coef_text = if c.is_constant() {
                mag
            } else {
                format!("({mag})")
            };
            if is_ident {
                write!(f, "{coef_text}")?;
            } else if coef_text == "1" {
                write!(f, "{elem}")?;
            } else {
                write!(f, "{coef_text}*{elem}")?;
            }
        }
        Ok(())
    }
}

impl AlgebraElem {
    /// Parses `+`/`-` separated terms of the form `coefficient*word`, `word`,
    /// or `coefficient` over a free-group context. Coefficients are rational
    /// literals, the bare number-field variable (when it does not collide with
    /// a generator name), or any parenthesized scalar, e.g.
    /// `3/2*x*y - 1 + t*y^-1` and `(2*t+1)*x`.
    pub fn parse(ctx: &GroupCtx, spec: &FieldSpec, text: &str) -> Result<Self> {
        let CtxKind::FreeGroup(alphabet) = ctx.kind() else {
            return Err(Error::BadParameters(
                "element text parsing is defined over free-group contexts".to_owned(),
            ));
        };
        let mut terms: Vec<(Scalar, GroupElem)> = Vec::new();
        for (negated, frag) in split_signed_terms(text)? {
            let frag = frag.trim();
            if frag.is_empty() {
                return Err(Error::Syntax { pos: 0, msg: "empty term".to_owned() });
            }
            let (coef, word_text) = split_coefficient(frag, spec, alphabet)?;
            let coef = if negated { coef.neg() } else { coef };
            let w = if word_text.is_empty() {
                Word::identity(alphabet)
            } else {
                Word::parse(alphabet, &word_text)?
            };
            terms.push((coef, GroupElem::Word(w)));
        }
        Self::from_terms(ctx, spec, terms)
    }
}

/// Splits element text into (is_negated, term) fragments on top-level +/-.
/// Signs directly after `^`, `*`, `/`, `(`, `[`, `,`, or `:` belong to the
/// term (exponents, fraction parts), not to the term list.
fn split_signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let mut cur_neg = false;
    let mut prev_sig: Option<char> = None;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth = depth.saturating_sub(1),
            _ => {}
        }
        let splits = (ch == '+' || ch == '-')
            && depth == 0
            && !matches!(prev_sig, Some('^' | '*' | '/' | '(' | '[' | ',' | ':'));
        if splits {
            if prev_sig.is_none() {
                // Leading sign of the first term.
                if ch == '-' {
                    cur_neg = true;
                }
                if !cur.trim().is_empty() {
                    return Err(Error::Syntax { pos: i, msg: "misplaced sign".to_owned() });
                }
            } else {
                if cur.trim().is_empty() {
                    return Err(Error::Syntax { pos: i, msg: "misplaced sign".to_owned() });
                }
                out.push((cur_neg, core::mem::take(&mut cur)));
                cur_neg = ch == '-';
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev_sig = Some(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Syntax { pos: text.len(), msg: "empty term".to_owned() });
    }
    out.push((cur_neg, cur));
    Ok(out)
}

/// Splits one term into (coefficient, word text). Empty word text means the
/// identity.
fn split_coefficient(
    frag: &str,
    spec: &FieldSpec,
    alphabet: &crate::word::Alphabet,
) -> Result<(Scalar, String)> {
    // Parenthesized coefficient: `(scalar)` or `(scalar)*word`.
    if let Some(rest) = frag.strip_prefix('(') {
        if let Some(close) = matching_paren(rest) {
            let inside = &rest[..close];
            let tail = rest[close + 1..].trim();
            // Only treat as a coefficient if the parentheses close a scalar;
            // otherwise it is word grouping like `(x*y)`.
            if let Ok(c) = Scalar::parse(spec, inside) {
                let word_text = tail.strip_prefix('*').unwrap_or(tail).trim().to_owned();
                return Ok((c, word_text));
            }
        }
    }
    let parts = top_level_star_split(frag);
    let head = parts[0].trim();
    let head_is_generator = alphabet.lookup(head).is_some();
    let head_scalar = if head_is_generator { None } else { try_scalar_head(head, spec) };
    if let Some(c) = head_scalar {
        let word_text = parts[1..].join("*").trim().to_owned();
        return Ok((c, word_text));
    }
    Ok((Scalar::one(spec), frag.to_owned()))
}

/// Attempts to read a term head as a scalar: rational literals over any field,
/// or the bare number-field variable (optionally with an exponent).
fn try_scalar_head(head: &str, spec: &FieldSpec) -> Option<Scalar> {
    let mut plain = head.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '-');
    if let FieldKind::NumberField { var, .. } = spec.kind() {
        let varlike = head == var
            || head
                .strip_prefix(var.as_str())
                .and_then(|rest| rest.strip_prefix('^'))
                .is_some_and(|e| e.chars().all(|c| c.is_ascii_digit()));
        plain = plain || varlike;
    }
    if !plain {
        return None;
    }
    Scalar::parse(spec, head).ok()
}

fn matching_paren(after_open: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in after_open.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn top_level_star_split(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' | '[' | '{' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' | '}' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            '*' if depth == 0 => parts.push(core::mem::take(&mut cur)),
            ch => cur.push(ch),
        }
    }
    parts.push(cur);
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn free_xy() -> (GroupCtx, FieldSpec) {
        let ab = Alphabet::new(["x", "y"]).unwrap();
        (GroupCtx::free_group(ab), FieldSpec::rationals())
    }

    fn parse(ctx: &GroupCtx, spec: &FieldSpec, s: &str) -> AlgebraElem {
        AlgebraElem::parse(ctx, spec, s).unwrap()
    }

    #[test]
    fn telescoping_product_collapses() {
        let ab = Alphabet::new(["g"]).unwrap();
        let ctx = GroupCtx::free_group(ab);
        let spec = FieldSpec::rationals();
        let a = parse(&ctx, &spec, "1 - g");
        let b = parse(&ctx, &spec, "1 + g + g^2 + g^3");
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, parse(&ctx, &spec, "1 - g^4"));
        assert_eq!(prod.support_size(), 2);
    }

    #[test]
    fn commutator_with_polynomial_part_cancels() {
        let (ctx, spec) = free_xy();
        let r = parse(&ctx, &spec, "1 + x + x^2 + y");
        let x = parse(&ctx, &spec, "x");
        let lhs = x.mul(&r).unwrap().sub(&r.mul(&x).unwrap()).unwrap();
        assert_eq!(lhs, parse(&ctx, &spec, "x*y - y*x"));
    }

    #[test]
    fn multiplying_by_zero_gives_zero() {
        let (ctx, spec) = free_xy();
        let a = parse(&ctx, &spec, "3*x - y");
        let z = AlgebraElem::zero(&ctx, &spec);
        assert!(a.mul(&z).unwrap().is_zero());
        assert!(z.mul(&a).unwrap().is_zero());
        assert!(a.scale(&Scalar::zero(&spec)).unwrap().is_zero());
    }

    #[test]
    fn duplicate_support_points_merge() {
        let (ctx, spec) = free_xy();
        let half = Scalar::parse(&spec, "1/2").unwrap();
        let g = ctx.parse_elem("x").unwrap();
        let a = AlgebraElem::from_terms(
            &ctx,
            &spec,
            vec![(half.clone(), g.clone()), (half, g)],
        )
        .unwrap();
        assert_eq!(a, parse(&ctx, &spec, "x"));
    }

    #[test]
    fn normalize_already_normalized_binomial() {
        let (ctx, spec) = free_xy();
        let b = parse(&ctx, &spec, "x - 5");
        let norm = binomial_normalize(&b).unwrap();
        assert_eq!(norm.g, ctx.parse_elem("x").unwrap());
        assert_eq!(norm.c, Scalar::from_i64(&spec, 5));
        assert!(norm.unit_coeff.is_one());
        assert!(ctx.is_identity(&norm.unit_elem));
    }

    #[test]
    fn normalize_reports_unit_that_multiplies_back() {
        let (ctx, spec) = free_xy();
        let b = parse(&ctx, &spec, "2*x + 3");
        let norm = binomial_normalize(&b).unwrap();
        assert_eq!(norm.g, ctx.parse_elem("x").unwrap());
        assert_eq!(norm.c, Scalar::parse(&spec, "-3/2").unwrap());
        // (unit)·(g − c) reconstructs the input.
        let g_minus_c = AlgebraElem::from_group(&ctx, &spec, norm.g.clone())
            .unwrap()
            .sub(
                &AlgebraElem::monomial(&ctx, &spec, norm.c.clone(), ctx.identity()).unwrap(),
            )
            .unwrap();
        let unit =
            AlgebraElem::monomial(&ctx, &spec, norm.unit_coeff.clone(), norm.unit_elem.clone())
                .unwrap();
        assert_eq!(unit.mul(&g_minus_c).unwrap(), b);
    }

    #[test]
    fn normalize_rejects_non_binomials() {
        let (ctx, spec) = free_xy();
        for text in ["x", "x + y - 1", "0"] {
            let e = parse(&ctx, &spec, text);
            assert!(matches!(binomial_normalize(&e), Err(Error::NotBinomial)), "case {text}");
        }
        // Coefficients on the same support point collapse to one term.
        let collapsed = parse(&ctx, &spec, "2*x + 3*x");
        assert_eq!(collapsed.support_size(), 1);
        assert!(binomial_normalize(&collapsed).is_err());
    }

    #[test]
    fn units_of_tiny_group_algebras() {
        let gf2 = FieldSpec::prime(2).unwrap();
        let gf3 = FieldSpec::prime(3).unwrap();
        let z2 = GroupCtx::finite_cyclic(2).unwrap();
        let z3 = GroupCtx::finite_cyclic(3).unwrap();
        let z4 = GroupCtx::finite_cyclic(4).unwrap();

        let r = enumerate_units(&z2, &gf2, 1 << 20).unwrap();
        assert_eq!(r.units.len(), 2);
        assert!(!r.has_non_monomial);

        let r = enumerate_units(&z2, &gf3, 1 << 20).unwrap();
        assert_eq!(r.units.len(), 4);
        assert!(!r.has_non_monomial);

        let r = enumerate_units(&z3, &gf2, 1 << 20).unwrap();
        assert_eq!(r.units.len(), 3);
        assert!(!r.has_non_monomial);

        let r = enumerate_units(&z4, &gf2, 1 << 20).unwrap();
        assert!(r.has_non_monomial);

        let r = enumerate_units(&z3, &gf3, 1 << 20).unwrap();
        assert!(r.has_non_monomial);
    }

    #[test]
    fn unit_inverses_verify_both_sides() {
        let gf3 = FieldSpec::prime(3).unwrap();
        let z3 = GroupCtx::finite_cyclic(3).unwrap();
        let one = AlgebraElem::one(&z3, &gf3);
        let r = enumerate_units(&z3, &gf3, 1 << 20).unwrap();
        assert!(!r.units.is_empty());
        for (a, b) in &r.units {
            assert_eq!(a.mul(b).unwrap(), one);
            assert_eq!(b.mul(a).unwrap(), one);
        }
    }

    #[test]
    fn units_cap_is_enforced() {
        let gf5 = FieldSpec::prime(5).unwrap();
        let z12 = GroupCtx::finite_cyclic(12).unwrap();
        match enumerate_units(&z12, &gf5, 1 << 20) {
            Err(Error::CapExceeded { needed, cap }) => {
                assert_eq!(needed, 5u128.pow(12));
                assert_eq!(cap, 1 << 20);
            }
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn element_text_round_trips_over_q() {
        let (ctx, spec) = free_xy();
        for text in [
            "3/2*x*y - 1 + y^-1",
            "x",
            "-x + y",
            "1 + x + y + x*y",
            "x^-2*y^-3*x^2*y^3 - 1",
            "0",
        ] {
            let e = if text == "0" {
                AlgebraElem::zero(&ctx, &spec)
            } else {
                parse(&ctx, &spec, text)
            };
            let shown = e.to_string();
            let back = AlgebraElem::parse(&ctx, &spec, &shown).unwrap();
            assert_eq!(e, back, "failed on {text} (rendered {shown})");
        }
    }

    #[test]
    fn element_text_round_trips_over_golden_field() {
        let ab = Alphabet::new(["x", "y"]).unwrap();
        let ctx = GroupCtx::free_group(ab);
        let spec = FieldSpec::golden();
        for text in ["3/2*x*y - 1 + t*y^-1", "(2*t+1)*x", "t^2*x - t", "(t - 1)*x*y + 2"] {
            let e = parse(&ctx, &spec, text);
            let shown = e.to_string();
            let back = AlgebraElem::parse(&ctx, &spec, &shown).unwrap();
            assert_eq!(e, back, "failed on {text} (rendered {shown})");
        }
    }

    #[test]
    fn generator_names_shadow_the_field_variable() {
        let ab = Alphabet::new(["t", "y"]).unwrap();
        let ctx = GroupCtx::free_group(ab);
        let spec = FieldSpec::golden();
        // `t` is a generator here, so the bare head is a word, not a scalar.
        let e = parse(&ctx, &spec, "t*y");
        assert_eq!(e.support_size(), 1);
        let g = e.support().next().unwrap();
        assert_eq!(ctx.elem_text(g), "t*y");
        // The coefficient form is still reachable with parentheses.
        let f = parse(&ctx, &spec, "(t)*y");
        let g = f.support().next().unwrap();
        assert_eq!(ctx.elem_text(g), "y");
    }

    #[test]
    fn parse_rejects_malformed_sums() {
        let (ctx, spec) = free_xy();
        for text in ["", "+", "x + ", "x ++ y", "* x"] {
            assert!(AlgebraElem::parse(&ctx, &spec, text).is_err(), "case {text}");
        }
    }

    #[test]
    fn exponent_minus_does_not_split_terms() {
        let (ctx, spec) = free_xy();
        let e = parse(&ctx, &spec, "x^-2*y^-3*x^2*y^3");
        assert_eq!(e.support_size(), 1);
        let e = parse(&ctx, &spec, "x^-1 - y^-1");
        assert_eq!(e.support_size(), 2);
    }
}
