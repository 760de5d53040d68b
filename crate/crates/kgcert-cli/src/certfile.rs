//! The on-disk certificate format.
//!
//! ```text
//! kgcert certificate v1
//! field: GF(5)
//! group: Z/2
//! term: <scalar> | <element>          (one per term of r)
//! sandwich: <scalar> | <element> | <element>
//! ```
//!
//! Scalars use the field's literal syntax, elements the backend's element
//! syntax; neither ever contains `|`.  Files written here are accepted by
//! `kgcert verify` and re-checked from scratch — the format carries a claim,
//! not a proof.

use std::path::Path;

use kgcert_core::algebra::AlgebraElem;
use kgcert_core::cert::IdealCertificate;
use kgcert_core::group::GroupCtx;
use kgcert_core::scalar::{FieldSpec, Scalar};

use crate::textio::group_text;

const HEADER: &str = "kgcert certificate v1";

pub fn write_certificate(path: &Path, cert: &IdealCertificate) -> Result<(), String> {
    let r = cert.r();
    let ctx = r.ctx();
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("field: {}\n", r.spec()));
    out.push_str(&format!("group: {}\n", group_text(ctx)));
    for (g, c) in r.terms() {
        out.push_str(&format!("term: {c} | {}\n", ctx.elem_text(g)));
    }
    for (c, u, v) in cert.sandwiches() {
        out.push_str(&format!(
            "sandwich: {c} | {} | {}\n",
            ctx.elem_text(u),
            ctx.elem_text(v)
        ));
    }
    std::fs::write(path, out).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

pub fn read_certificate(path: &Path) -> Result<IdealCertificate, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some(HEADER) {
        return Err(format!("{}: missing `{HEADER}` header", path.display()));
    }

    let mut field: Option<FieldSpec> = None;
    let mut group: Option<GroupCtx> = None;
    let mut terms: Vec<(Scalar, kgcert_core::group::GroupElem)> = Vec::new();
    let mut sandwiches = Vec::new();

    for (no, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| format!("line {}: expected `key: value`", no + 2))?;
        let rest = rest.trim();
        let fail = |msg: String| format!("line {}: {msg}", no + 2);
        match key.trim() {
            "field" => field = Some(FieldSpec::parse(rest).map_err(|e| fail(e.to_string()))?),
            "group" => group = Some(GroupCtx::parse(rest).map_err(|e| fail(e.to_string()))?),
            "term" => {
                let spec = field.as_ref().ok_or_else(|| fail("term before field".into()))?;
                let ctx = group.as_ref().ok_or_else(|| fail("term before group".into()))?;
                let parts: Vec<&str> = rest.split('|').map(str::trim).collect();
                if parts.len() != 2 {
                    return Err(fail("expected `scalar | element`".into()));
                }
                terms.push((
                    Scalar::parse(spec, parts[0]).map_err(|e| fail(e.to_string()))?,
                    ctx.parse_elem(parts[1]).map_err(|e| fail(e.to_string()))?,
                ));
            }
            "sandwich" => {
                let spec = field.as_ref().ok_or_else(|| fail("sandwich before field".into()))?;
                let ctx = group.as_ref().ok_or_else(|| fail("sandwich before group".into()))?;
                let parts: Vec<&str> = rest.split('|').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(fail("expected `scalar | element | element`".into()));
                }
                sandwiches.push((
                    Scalar::parse(spec, parts[0]).map_err(|e| fail(e.to_string()))?,
                    ctx.parse_elem(parts[1]).map_err(|e| fail(e.to_string()))?,
                    ctx.parse_elem(parts[2]).map_err(|e| fail(e.to_string()))?,
                ));
            }
            other => return Err(fail(format!("unknown key `{other}`"))),
        }
    }

    let spec = field.ok_or_else(|| format!("{}: no field line", path.display()))?;
    let ctx = group.ok_or_else(|| format!("{}: no group line", path.display()))?;
    if terms.is_empty() {
        return Err(format!("{}: no term lines", path.display()));
    }
    let r = AlgebraElem::from_terms(&ctx, &spec, terms).map_err(|e| e.to_string())?;
    IdealCertificate::from_parts(r, sandwiches).map_err(|e| e.to_string())
}
