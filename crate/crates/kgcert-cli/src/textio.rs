//! Text forms shared by commands and file formats: canonical group-spec
//! text, algebra-element parsing for every backend, and free-group
//! inference from element text.

use std::collections::BTreeSet;

use kgcert_core::algebra::AlgebraElem;
use kgcert_core::group::{CtxKind, GroupCtx};
use kgcert_core::scalar::{FieldKind, FieldSpec, Scalar};
use kgcert_core::word::Alphabet;

/// Canonical spec text for a context; inverse of `GroupCtx::parse`.
pub fn group_text(ctx: &GroupCtx) -> String {
    match ctx.kind() {
        CtxKind::FreeGroup(a) => {
            let names: Vec<&str> = a.generators().map(|g| a.name(g)).collect();
            format!("free({})", names.join(","))
        }
        CtxKind::FreeAbelian(d) => format!("Z^{d}"),
        CtxKind::FiniteCyclic(n) => format!("Z/{n}"),
        CtxKind::Affine(spec) => format!("affine({spec})"),
        CtxKind::FreeProduct(ranks) => {
            let parts: Vec<String> = ranks.iter().map(|r| format!("Z^{r}")).collect();
            format!("fp({})", parts.join(","))
        }
        CtxKind::WreathZZ => "wreath".into(),
        CtxKind::DirectProduct(factors) => {
            let parts: Vec<String> = factors.iter().map(group_text).collect();
            format!("prod({})", parts.join(", "))
        }
    }
}

/// Generator names appearing in element text: maximal alphanumeric runs that
/// start with a letter, minus the field's own variable name.
pub fn inferred_names(text: &str, spec: &FieldSpec) -> Vec<String> {
    let reserved = match spec.kind() {
        FieldKind::NumberField { var, .. } => Some(var.as_str()),
        _ => None,
    };
    let mut names = BTreeSet::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_alphabetic() {
            let mut run = String::from(c);
            while let Some(&n) = chars.peek() {
                if n.is_ascii_alphanumeric() {
                    run.push(n);
                    chars.next();
                } else {
                    break;
                }
            }
            if Some(run.as_str()) != reserved {
                names.insert(run);
            }
        } else if c.is_ascii_alphanumeric() {
            while chars.peek().is_some_and(|n| n.is_ascii_alphanumeric()) {
                chars.next();
            }
        }
    }
    names.into_iter().collect()
}

/// The free group on the generators appearing in the element text.
pub fn infer_free_ctx(text: &str, spec: &FieldSpec) -> Result<GroupCtx, String> {
    let names = inferred_names(text, spec);
    if names.is_empty() {
        return Err(format!("no generator names found in `{text}`"));
    }
    let alphabet = Alphabet::new(names).map_err(|e| e.to_string())?;
    Ok(GroupCtx::free_group(alphabet))
}

/// Splits element text into (negated, fragment) pairs on top-level +/−.
/// Signs directly after `^ * / ( [ { , :` belong to the fragment.
fn split_terms(text: &str) -> Result<Vec<(bool, String)>, String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let mut cur_neg = false;
    let mut prev: Option<char> = None;
    for ch in text.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth = depth.saturating_sub(1),
            _ => {}
        }
        let splits = (ch == '+' || ch == '-')
            && depth == 0
            && !matches!(prev, Some('^' | '*' | '/' | '(' | '[' | '{' | ',' | ':'));
        if splits {
            if prev.is_none() {
                if !cur.trim().is_empty() {
                    return Err("misplaced sign".into());
                }
                cur_neg = ch == '-';
            } else {
                if cur.trim().is_empty() {
                    return Err("misplaced sign".into());
                }
                out.push((cur_neg, std::mem::take(&mut cur)));
                cur_neg = ch == '-';
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err("element text has an empty term".into());
    }
    out.push((cur_neg, cur));
    Ok(out)
}

/// Parses `+`/`-` separated terms over any backend.  Free-group contexts use
/// the full expression grammar; other backends accept terms of the form
/// `scalar`, `element`, or `scalar*element` in the backend's element syntax.
pub fn parse_algebra(
    ctx: &GroupCtx,
    spec: &FieldSpec,
    text: &str,
) -> Result<AlgebraElem, String> {
    if matches!(ctx.kind(), CtxKind::FreeGroup(_)) {
        return AlgebraElem::parse(ctx, spec, text).map_err(|e| e.to_string());
    }
    let mut terms = Vec::new();
    for (negated, frag) in split_terms(text)? {
        let frag = frag.trim();
        let (coeff, elem) = if let Ok(c) = Scalar::parse(spec, frag) {
            (c, ctx.identity())
        } else if let Some((left, right)) = top_level_star(frag) {
            let c = Scalar::parse(spec, left.trim()).map_err(|e| e.to_string())?;
            let e = ctx.parse_elem(right.trim()).map_err(|e| e.to_string())?;
            (c, e)
        } else {
            let e = ctx.parse_elem(frag).map_err(|e| e.to_string())?;
            (Scalar::one(spec), e)
        };
        let coeff = if negated { coeff.neg() } else { coeff };
        terms.push((coeff, elem));
    }
    AlgebraElem::from_terms(ctx, spec, terms).map_err(|e| e.to_string())
}

/// Splits `frag` at its first top-level `*`, if any.
fn top_level_star(frag: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in frag.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth = depth.saturating_sub(1),
            '*' if depth == 0 => return Some((&frag[..i], &frag[i + 1..])),
            _ => {}
        }
    }
    None
}
