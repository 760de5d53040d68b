//! Certificates that an element generates the improper ideal.
//!
//! An [`IdealCertificate`] for `r ∈ kG` is a list of sandwiches
//! `(cⱼ, uⱼ, vⱼ)` with `Σⱼ cⱼ·uⱼ·r·vⱼ = 1`; its existence proves that the
//! two-sided ideal generated by `r` is the whole algebra.  Verification is
//! exact expansion — no tolerance, no word-problem solver.  Constructors
//! build certificates from conjugacy relations (binomials), from commutator
//! witnesses (trinomials), and by bounded linear-algebra search; each
//! verifies its own output before returning it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraElem;
use crate::binomial::{ConjRelation, RelationForm};
use crate::group::{GroupCtx, GroupElem};
use crate::scalar::{FieldSpec, Scalar};
use crate::word::{ball_enumerate, ball_size, Alphabet, Generator};
use crate::{Error, Result};

/// One summand `cⱼ·uⱼ·r·vⱼ` of a certificate: `(coefficient, left, right)`.
pub type Sandwich = (Scalar, GroupElem, GroupElem);

/// A claimed expression of the algebra unit as `Σⱼ cⱼ·uⱼ·r·vⱼ`.
///
/// Library constructors ([`binomial_certificate`], [`trinomial_certificate`],
/// [`search_certificate`]) only return certificates that pass
/// [`verify_certificate`]; a certificate assembled from external data via
/// [`IdealCertificate::from_parts`] carries no such guarantee until checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCertificate {
    r: AlgebraElem,
    sandwiches: Vec<Sandwich>,
}

impl IdealCertificate {
    /// Packages a certificate claim without checking the defining sum.
    ///
    /// Coefficients must live in the field of `r` and the group elements in
    /// its group; the sum itself is judged by [`verify_certificate`].
    pub fn from_parts(r: AlgebraElem, sandwiches: Vec<Sandwich>) -> Result<Self> {
        let ctx = r.ctx().clone();
        let spec = r.spec().clone();
        let mut canonical = Vec::with_capacity(sandwiches.len());
        for (c, u, v) in sandwiches {
            if c.spec() != &spec {
                return Err(Error::FieldMismatch);
            }
            canonical.push((c, ctx.canonicalize(u)?, ctx.canonicalize(v)?));
        }
        Ok(IdealCertificate {
            r,
            sandwiches: canonical,
        })
    }

    /// The element the certificate is about.
    pub fn r(&self) -> &AlgebraElem {
        &self.r
    }

    /// The sandwich list `(cⱼ, uⱼ, vⱼ)`.
    pub fn sandwiches(&self) -> &[Sandwich] {
        &self.sandwiches
    }
}

/// The outcome of checking a certificate's defining sum.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    /// Whether `Σⱼ cⱼ·uⱼ·r·vⱼ` equals the algebra unit exactly.
    pub verified: bool,
    /// `Σⱼ cⱼ·uⱼ·r·vⱼ − 1`; zero exactly when verified.
    pub residual: AlgebraElem,
}

/// Expands a certificate's sum exactly and compares it with the unit.
pub fn verify_certificate(cert: &IdealCertificate) -> Result<VerifyReport> {
    let r = cert.r();
    let mut acc = AlgebraElem::zero(r.ctx(), r.spec());
    for (c, u, v) in cert.sandwiches() {
        acc = acc.add(&r.sandwich(u, v)?.scale(c)?)?;
    }
    let residual = acc.sub(&AlgebraElem::one(r.ctx(), r.spec()))?;
    Ok(VerifyReport {
        verified: residual.is_zero(),
        residual,
    })
}

fn assert_constructed_verifies(cert: &IdealCertificate) -> Result<()> {
    if verify_certificate(cert)?.verified {
        Ok(())
    } else {
        Err(Error::Internal(
            "constructed certificate failed its own verification".into(),
        ))
    }
}

/// Builds a certificate for `r = g − c` from a two-sided conjugacy relation
/// with nonzero exponent sum.
///
/// Writing the relation as `Π_{i≤M} hᵢ⁻¹ghᵢ = Π_{j≤M′} h′ⱼ⁻¹gh′ⱼ` and using
/// `hᵢ⁻¹ghᵢ − c = hᵢ⁻¹·r·hᵢ`, each side telescopes:
/// `Π_{i≤M} hᵢ⁻¹ghᵢ − c^M = Σ_m c^{M−m}·(P_{m−1}h_m⁻¹)·r·h_m` with
/// `P_m` the partial products.  Subtracting the two expansions leaves
/// `λ = c^{M′} − c^M` on the left, which is invertible exactly when
/// `c^{M−M′} ≠ 1`; dividing by it expresses 1 in the ideal of `r`.
pub fn binomial_certificate(rel: &ConjRelation, c: &Scalar) -> Result<IdealCertificate> {
    let RelationForm::TwoSided { left, right } = rel.form() else {
        return Err(Error::BadParameters(
            "binomial certificates need a two-sided relation (see rearrange_relation)".into(),
        ));
    };
    let d = rel.exponent_sum();
    if d == 0 {
        return Err(Error::BadParameters(
            "binomial certificates need a relation with nonzero exponent sum".into(),
        ));
    }
    if c.is_zero() {
        return Err(Error::ZeroElement);
    }
    if c.pow(d)?.is_one() {
        return Err(Error::OrderViolation);
    }

    let ctx = rel.ctx();
    let spec = c.spec().clone();
    let g = rel.g().clone();
    let r = AlgebraElem::from_terms(
        ctx,
        &spec,
        [
            (Scalar::one(&spec), g.clone()),
            (c.neg(), ctx.identity()),
        ],
    )?;

    let big_m = left.len() as i64;
    let big_m_prime = right.len() as i64;
    let lambda = c.pow(big_m_prime)?.sub(&c.pow(big_m)?)?;
    let inv_lambda = lambda.inv()?;

    let mut sandwiches = Vec::with_capacity(left.len() + right.len());
    let mut expand_side = |side: &[GroupElem], length: i64, negate: bool| -> Result<()> {
        let mut partial = ctx.identity();
        for (m, h) in side.iter().enumerate() {
            let coeff = c.pow(length - 1 - m as i64)?.mul(&inv_lambda)?;
            let coeff = if negate { coeff.neg() } else { coeff };
            let u = ctx.multiply(&partial, &ctx.invert(h)?)?;
            sandwiches.push((coeff, u, h.clone()));
            partial = ctx.multiply(&partial, &ctx.conjugate(&g, h)?)?;
        }
        Ok(())
    };
    expand_side(left, big_m, false)?;
    expand_side(right, big_m_prime, true)?;

    let cert = IdealCertificate::from_parts(r, sandwiches)?;
    assert_constructed_verifies(&cert)?;
    Ok(cert)
}

/// Builds a certificate for the trinomial `r = 1 + h − f`, where
/// `f = Π wᵢ⁻¹·K^{sᵢ}·wᵢ` for `K = [g, h]` must be a non-identity element
/// commuting with `g`.
///
/// The construction chains three identities.  First,
/// `K − 1 = g⁻¹h⁻¹g·r − g⁻¹h⁻¹·r·g` (this is where `fg = gf` enters).
/// Second, `f − 1` telescopes through the witness list via
/// `ab − 1 = a(b−1) + (a−1)` and `w⁻¹aw − 1 = w⁻¹(a−1)w`, with
/// `K⁻¹ − 1 = −K⁻¹(K − 1)` covering negative signs.  Third,
/// `1 = h⁻¹·r + h⁻¹·(f−1)`.  The default witness `[(1, +1)]` (so `f = K`)
/// yields exactly three sandwiches:
/// `(1, h⁻¹, 1), (1, h⁻¹g⁻¹h⁻¹g, 1), (−1, h⁻¹g⁻¹h⁻¹, g)`.
pub fn trinomial_certificate(
    ctx: &GroupCtx,
    spec: &FieldSpec,
    g: &GroupElem,
    h: &GroupElem,
    ncl_witness: &[(GroupElem, i8)],
) -> Result<IdealCertificate> {
    let g = ctx.canonicalize(g.clone())?;
    let h = ctx.canonicalize(h.clone())?;
    let k = ctx.commutator(&g, &h)?;
    let k_inv = ctx.invert(&k)?;

    // f and the left-to-right partial products in front of each factor.
    let mut prefixes = Vec::with_capacity(ncl_witness.len());
    let mut f = ctx.identity();
    for (w, sign) in ncl_witness {
        if *sign != 1 && *sign != -1 {
            return Err(Error::BadParameters(
                "witness signs must be +1 or -1".into(),
            ));
        }
        prefixes.push(f.clone());
        let base = if *sign == 1 { &k } else { &k_inv };
        let factor = ctx.conjugate(base, w)?;
        f = ctx.multiply(&f, &factor)?;
    }
    if ctx.is_identity(&f) {
        return Err(Error::TrivialF);
    }
    if !ctx.commutes(&f, &g)? {
        return Err(Error::NotCommuting);
    }

    let one = Scalar::one(spec);
    let r = AlgebraElem::from_terms(
        ctx,
        spec,
        [
            (one.clone(), ctx.identity()),
            (one.clone(), h.clone()),
            (one.neg(), f.clone()),
        ],
    )?;

    let h_inv = ctx.invert(&h)?;
    let g_inv_h_inv = ctx.invert(&ctx.multiply(&h, &g)?)?;
    let g_inv_h_inv_g = ctx.multiply(&g_inv_h_inv, &g)?;

    let mut sandwiches = vec![(one.clone(), h_inv.clone(), ctx.identity())];
    for ((w, sign), prefix) in ncl_witness.iter().zip(&prefixes) {
        let mut lead = ctx.multiply(&h_inv, prefix)?;
        lead = ctx.multiply(&lead, &ctx.invert(w)?)?;
        if *sign == -1 {
            lead = ctx.multiply(&lead, &k_inv)?;
        }
        let plus = ctx.multiply(&lead, &g_inv_h_inv_g)?;
        let minus = ctx.multiply(&lead, &g_inv_h_inv)?;
        let gv = ctx.multiply(&g, w)?;
        let (c_plus, c_minus) = if *sign == 1 {
            (one.clone(), one.neg())
        } else {
            (one.neg(), one.clone())
        };
        sandwiches.push((c_plus, plus, w.clone()));
        sandwiches.push((c_minus, minus, gv));
    }

    let cert = IdealCertificate::from_parts(r, sandwiches)?;
    assert_constructed_verifies(&cert)?;
    Ok(cert)
}

/// From a non-commuting pair, finds `(g, h)` with `g` commuting with
/// `h⁻¹gh ≠ g` — the configuration [`trinomial_certificate`] needs with its
/// default witness.
///
/// If `h₁` commutes with `h₂⁻¹h₁h₂`, the pair itself qualifies.  Otherwise
/// the candidate is `([h₁, h₂], h₁)`; the commutation this requires holds one
/// derived-series step down in any solvable group but not in general, so it
/// is checked, with [`Error::NotLastTerm`] on failure.
pub fn solvable_witness(
    ctx: &GroupCtx,
    h1: &GroupElem,
    h2: &GroupElem,
) -> Result<(GroupElem, GroupElem)> {
    let h1 = ctx.canonicalize(h1.clone())?;
    let h2 = ctx.canonicalize(h2.clone())?;
    if ctx.commutes(&h1, &h2)? {
        return Err(Error::Commuting);
    }
    let conj = ctx.conjugate(&h1, &h2)?;
    if ctx.commutes(&h1, &conj)? {
        return Ok((h1, h2));
    }
    // h₁ fails to commute with h₁·[h₁,h₂], hence with g = [h₁,h₂]; so
    // h₁⁻¹gh₁ ≠ g holds automatically and only the commutation is in doubt.
    let g = ctx.commutator(&h1, &h2)?;
    let g_conj = ctx.conjugate(&g, &h1)?;
    if ctx.commutes(&g, &g_conj)? {
        Ok((g, h1))
    } else {
        Err(Error::NotLastTerm)
    }
}

/// Result of a bounded certificate search.
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// A verified certificate was assembled.
    Found(IdealCertificate),
    /// No combination of sandwiches from the searched radius expresses 1.
    /// Evidence only — never a proof that the ideal is proper.
    NotFound { radius: usize },
}

/// A basis column of the incremental elimination, inter-reduced against its
/// peers, expressed as a combination of original sandwich columns.
struct BasisVec {
    col: BTreeMap<GroupElem, Scalar>,
    comb: BTreeMap<usize, Scalar>,
    pivot: GroupElem,
}

/// `target += λ·source`, dropping entries that cancel to zero.
fn axpy<K: Ord + Clone>(
    target: &mut BTreeMap<K, Scalar>,
    lambda: &Scalar,
    source: &BTreeMap<K, Scalar>,
) -> Result<()> {
    for (key, value) in source {
        let delta = lambda.mul(value)?;
        match target.get(key) {
            Some(existing) => {
                let sum = existing.add(&delta)?;
                if sum.is_zero() {
                    target.remove(key);
                } else {
                    target.insert(key.clone(), sum);
                }
            }
            None => {
                if !delta.is_zero() {
                    target.insert(key.clone(), delta);
                }
            }
        }
    }
    Ok(())
}

fn scale_in_place<K: Ord>(map: &mut BTreeMap<K, Scalar>, lambda: &Scalar) -> Result<()> {
    for value in map.values_mut() {
        *value = value.mul(lambda)?;
    }
    Ok(())
}

/// Searches for a certificate whose sandwich conjugators are images of words
/// of length at most `radius`.
///
/// Every pair `(u, v)` of ball-word images contributes the expansion of
/// `u·r·v` as a column over the group elements it touches; the search
/// maintains an inter-reduced basis of these columns, tracks each basis
/// vector as a combination of original pairs, and keeps the unit's residual
/// reduced against the basis.  Columns arrive ordered by total word length
/// (ties broken by enumeration order), duplicates are skipped, and the
/// search stops the moment the residual vanishes, so results are
/// deterministic and monotone in the radius.  `pair_cap` bounds the number
/// of `(u, v)` pairs considered.
pub fn search_certificate(
    r: &AlgebraElem,
    alphabet: &Alphabet,
    assignment: &BTreeMap<Generator, GroupElem>,
    radius: usize,
    pair_cap: u128,
) -> Result<SearchOutcome> {
    if r.support_size() < 2 {
        return Err(Error::BadParameters(
            "certificate search needs an element with at least two terms".into(),
        ));
    }
    let ctx = r.ctx();
    let spec = r.spec();
    let words = ball_size(alphabet.rank(), radius);
    match words.checked_mul(words) {
        Some(needed) if needed <= pair_cap => {}
        _ => {
            return Err(Error::BudgetExceeded {
                needed: words.saturating_mul(words),
                cap: pair_cap,
            })
        }
    }

    // Distinct images of ball words, tagged with the length of the first
    // (shortest) word reaching each.
    let mut images: Vec<(usize, GroupElem)> = Vec::new();
    let mut seen_images = BTreeSet::new();
    for word in ball_enumerate(alphabet, radius, pair_cap)? {
        let e = ctx.eval_word(&word, assignment)?;
        if seen_images.insert(e.clone()) {
            images.push((word.len(), e));
        }
    }
    let mut order: Vec<(usize, usize, usize)> = Vec::with_capacity(images.len() * images.len());
    for iu in 0..images.len() {
        for iv in 0..images.len() {
            order.push((images[iu].0 + images[iv].0, iu, iv));
        }
    }
    order.sort_unstable();

    let mut res: BTreeMap<GroupElem, Scalar> =
        BTreeMap::from([(ctx.identity(), Scalar::one(spec))]);
    let mut res_comb: BTreeMap<usize, Scalar> = BTreeMap::new();
    let mut basis: Vec<BasisVec> = Vec::new();
    let mut seen_cols: BTreeSet<BTreeMap<GroupElem, Scalar>> = BTreeSet::new();
    let mut pairs: Vec<(GroupElem, GroupElem)> = Vec::new();

    for (_, iu, iv) in order {
        let u = &images[iu].1;
        let v = &images[iv].1;
        let expansion = r.sandwich(u, v)?;
        let mut col: BTreeMap<GroupElem, Scalar> = expansion
            .terms()
            .map(|(g, c)| (g.clone(), c.clone()))
            .collect();
        if !seen_cols.insert(col.clone()) {
            continue;
        }
        let idx = pairs.len();
        pairs.push((u.clone(), v.clone()));

        let mut comb = BTreeMap::from([(idx, Scalar::one(spec))]);
        for bv in &basis {
            if let Some(lambda) = col.get(&bv.pivot).cloned() {
                let neg = lambda.neg();
                axpy(&mut col, &neg, &bv.col)?;
                axpy(&mut comb, &neg, &bv.comb)?;
            }
        }
        let Some(pivot) = col.keys().next().cloned() else {
            pairs.pop();
            continue;
        };
        let inv = col
            .get(&pivot)
            .expect("pivot entry exists")
            .inv()?;
        scale_in_place(&mut col, &inv)?;
        scale_in_place(&mut comb, &inv)?;
        for bv in &mut basis {
            if let Some(mu) = bv.col.get(&pivot).cloned() {
                let neg = mu.neg();
                axpy(&mut bv.col, &neg, &col)?;
                axpy(&mut bv.comb, &neg, &comb)?;
            }
        }
        if let Some(nu) = res.get(&pivot).cloned() {
            axpy(&mut res, &nu.neg(), &col)?;
            axpy(&mut res_comb, &nu, &comb)?;
        }
        basis.push(BasisVec { col, comb, pivot });

        if res.is_empty() {
            let sandwiches = res_comb
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), pairs[*i].0.clone(), pairs[*i].1.clone()))
                .collect();
            let cert = IdealCertificate::from_parts(r.clone(), sandwiches)?;
            assert_constructed_verifies(&cert)?;
            return Ok(SearchOutcome::Found(cert));
        }
    }
    Ok(SearchOutcome::NotFound { radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::{standard_witness, WitnessFamily};
    use crate::group::wreath_generators;
    use crate::word::Word;

    fn gf5_order_two() -> (GroupCtx, FieldSpec, AlgebraElem) {
        let ctx = GroupCtx::finite_cyclic(2).unwrap();
        let spec = FieldSpec::prime(5).unwrap();
        let r = AlgebraElem::from_terms(
            &ctx,
            &spec,
            [
                (Scalar::one(&spec), GroupElem::Residue(1)),
                (Scalar::from_i64(&spec, -2), GroupElem::Residue(0)),
            ],
        )
        .unwrap();
        (ctx, spec, r)
    }

    #[test]
    fn hand_expansion_mod_five_verifies() {
        let (ctx, spec, r) = gf5_order_two();
        let cert = IdealCertificate::from_parts(
            r,
            vec![
                (Scalar::from_i64(&spec, 3), GroupElem::Residue(1), ctx.identity()),
                (Scalar::one(&spec), ctx.identity(), ctx.identity()),
            ],
        )
        .unwrap();
        assert!(verify_certificate(&cert).unwrap().verified);
    }

    #[test]
    fn empty_sandwich_list_reports_unit_residual() {
        let (ctx, spec, r) = gf5_order_two();
        let cert = IdealCertificate::from_parts(r, Vec::new()).unwrap();
        let report = verify_certificate(&cert).unwrap();
        assert!(!report.verified);
        let minus_one = AlgebraElem::one(&ctx, &spec).neg();
        assert_eq!(report.residual, minus_one);
    }

    #[test]
    fn foreign_field_coefficients_are_rejected() {
        let (ctx, _, r) = gf5_order_two();
        let rationals = FieldSpec::rationals();
        assert!(matches!(
            IdealCertificate::from_parts(
                r,
                vec![(Scalar::one(&rationals), ctx.identity(), ctx.identity())],
            ),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn telescoped_certificate_matches_the_hand_expansion() {
        let witness = standard_witness(WitnessFamily::FiniteOrder { n: 2 }).unwrap();
        let spec = FieldSpec::prime(5).unwrap();
        let cert =
            binomial_certificate(witness.relation().unwrap(), &Scalar::from_i64(&spec, 2))
                .unwrap();
        let ctx = cert.r().ctx().clone();
        assert_eq!(
            cert.sandwiches(),
            &[
                (Scalar::one(&spec), ctx.identity(), ctx.identity()),
                (
                    Scalar::from_i64(&spec, 3),
                    GroupElem::Residue(1),
                    ctx.identity()
                ),
            ]
        );
        assert!(verify_certificate(&cert).unwrap().verified);
    }

    #[test]
    fn doubling_map_certificate_verifies_over_the_rationals() {
        let witness = standard_witness(WitnessFamily::AffineScaling {
            alpha: num_rational::BigRational::from_integer(2.into()),
        })
        .unwrap();
        let spec = FieldSpec::rationals();
        for c in [
            Scalar::from_i64(&spec, 2),
            Scalar::from_i64(&spec, 3),
            Scalar::parse(&spec, "1/2").unwrap(),
        ] {
            let cert = binomial_certificate(witness.relation().unwrap(), &c).unwrap();
            assert!(verify_certificate(&cert).unwrap().verified);
        }
    }

    #[test]
    fn scalars_with_matching_power_are_rejected() {
        let witness = standard_witness(WitnessFamily::FiniteOrder { n: 2 }).unwrap();
        let rel = witness.relation().unwrap();
        let spec = FieldSpec::prime(5).unwrap();
        // 1² = 1 and 4² = 16 ≡ 1 (mod 5).
        for c in [Scalar::one(&spec), Scalar::from_i64(&spec, 4)] {
            assert!(matches!(
                binomial_certificate(rel, &c),
                Err(Error::OrderViolation)
            ));
        }
        assert!(matches!(
            binomial_certificate(rel, &Scalar::zero(&spec)),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn unusable_relations_are_rejected() {
        let ctx = GroupCtx::wreath();
        let (g, h) = wreath_generators();
        let spec = FieldSpec::rationals();
        let c = Scalar::from_i64(&spec, 2);
        // Signed-list form is not accepted directly.
        let signed = ConjRelation::new(
            &ctx,
            g.clone(),
            RelationForm::SignedList(vec![(h.clone(), 1), (h.clone(), -1)]),
        )
        .unwrap();
        assert!(matches!(
            binomial_certificate(&signed, &c),
            Err(Error::BadParameters(_))
        ));
        // Neither is a two-sided relation with zero exponent sum.
        let balanced = ConjRelation::new(
            &ctx,
            g,
            RelationForm::TwoSided {
                left: vec![h.clone()],
                right: vec![h],
            },
        )
        .unwrap();
        assert!(matches!(
            binomial_certificate(&balanced, &c),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn default_witness_yields_the_three_sandwich_certificate() {
        let ctx = GroupCtx::wreath();
        let (g, h) = wreath_generators();
        let spec = FieldSpec::rationals();
        let cert =
            trinomial_certificate(&ctx, &spec, &g, &h, &[(ctx.identity(), 1)]).unwrap();
        assert!(verify_certificate(&cert).unwrap().verified);

        let one = Scalar::one(&spec);
        let h_inv = ctx.invert(&h).unwrap();
        let g_inv_h_inv = ctx.invert(&ctx.multiply(&h, &g).unwrap()).unwrap();
        let expected = [
            (one.clone(), h_inv.clone(), ctx.identity()),
            (
                one.clone(),
                ctx.multiply(
                    &h_inv,
                    &ctx.multiply(&g_inv_h_inv, &g).unwrap(),
                )
                .unwrap(),
                ctx.identity(),
            ),
            (
                one.neg(),
                ctx.multiply(&h_inv, &g_inv_h_inv).unwrap(),
                g.clone(),
            ),
        ];
        assert_eq!(cert.sandwiches(), expected);
    }

    #[test]
    fn trinomial_certificate_verifies_over_gf5() {
        let ctx = GroupCtx::wreath();
        let (g, h) = wreath_generators();
        let spec = FieldSpec::prime(5).unwrap();
        let cert =
            trinomial_certificate(&ctx, &spec, &g, &h, &[(ctx.identity(), 1)]).unwrap();
        assert!(verify_certificate(&cert).unwrap().verified);
    }

    #[test]
    fn two_term_witness_gives_five_sandwiches() {
        let ctx = GroupCtx::wreath();
        let (g, h) = wreath_generators();
        let spec = FieldSpec::rationals();
        let witness = [(h.clone(), 1), (ctx.identity(), -1)];
        let cert = trinomial_certificate(&ctx, &spec, &g, &h, &witness).unwrap();
        assert_eq!(cert.sandwiches().len(), 5);
        assert!(verify_certificate(&cert).unwrap().verified);
    }

    #[test]
    fn commuting_pair_has_trivial_commutator() {
        let ctx = GroupCtx::wreath();
        let (g, _) = wreath_generators();
        let g2 = ctx.pow(&g, 2).unwrap();
        let spec = FieldSpec::rationals();
        assert!(matches!(
            trinomial_certificate(&ctx, &spec, &g, &g2, &[(ctx.identity(), 1)]),
            Err(Error::TrivialF)
        ));
    }

    #[test]
    fn free_group_commutator_does_not_commute_with_g() {
        let alphabet = Alphabet::new(["x", "y"]).unwrap();
        let ctx = GroupCtx::free_group(alphabet.clone());
        let x = GroupElem::Word(Word::parse(&alphabet, "x").unwrap());
        let y = GroupElem::Word(Word::parse(&alphabet, "y").unwrap());
        let spec = FieldSpec::rationals();
        assert!(matches!(
            trinomial_certificate(&ctx, &spec, &x, &y, &[(ctx.identity(), 1)]),
            Err(Error::NotCommuting)
        ));
    }

    #[test]
    fn wreath_pair_is_its_own_solvable_witness() {
        let ctx = GroupCtx::wreath();
        let (g, h) = wreath_generators();
        let (a, b) = solvable_witness(&ctx, &g, &h).unwrap();
        assert_eq!(a, g);
        assert_eq!(b, h);
    }

    #[test]
    fn commuting_inputs_are_rejected_for_solvable_witness() {
        let ctx = GroupCtx::wreath();
        let (g, _) = wreath_generators();
        let g2 = ctx.pow(&g, 2).unwrap();
        assert!(matches!(
            solvable_witness(&ctx, &g, &g2),
            Err(Error::Commuting)
        ));
    }

    #[test]
    fn free_generators_admit_no_solvable_witness() {
        let alphabet = Alphabet::new(["x", "y"]).unwrap();
        let ctx = GroupCtx::free_group(alphabet.clone());
        let x = GroupElem::Word(Word::parse(&alphabet, "x").unwrap());
        let y = GroupElem::Word(Word::parse(&alphabet, "y").unwrap());
        assert!(matches!(
            solvable_witness(&ctx, &x, &y),
            Err(Error::NotLastTerm)
        ));
    }

    #[test]
    fn affine_pair_takes_the_commutator_branch() {
        let spec = FieldSpec::rationals();
        let ctx = GroupCtx::affine(spec.clone());
        let h1 = GroupElem::Affine {
            a: Scalar::from_i64(&spec, 2),
            b: Scalar::zero(&spec),
        };
        let h2 = GroupElem::Affine {
            a: Scalar::one(&spec),
            b: Scalar::one(&spec),
        };
        let (g, h) = solvable_witness(&ctx, &h1, &h2).unwrap();
        assert_eq!(g, ctx.commutator(&h1, &h2).unwrap());
        assert_eq!(h, h1);
        // The returned pair feeds the trinomial constructor.
        let cert = trinomial_certificate(&ctx, &spec, &g, &h, &[(ctx.identity(), 1)]).unwrap();
        assert!(verify_certificate(&cert).unwrap().verified);
    }

    fn standard_assignment(
        alphabet: &Alphabet,
        elems: &[GroupElem],
    ) -> BTreeMap<Generator, GroupElem> {
        alphabet
            .generators()
            .zip(elems.iter().cloned())
            .collect()
    }

    #[test]
    fn search_recovers_the_mod_five_certificate() {
        let (_, _, r) = gf5_order_two();
        let alphabet = Alphabet::new(["a"]).unwrap();
        let assignment = standard_assignment(&alphabet, &[GroupElem::Residue(1)]);
        let outcome = search_certificate(&r, &alphabet, &assignment, 1, 1_000).unwrap();
        let SearchOutcome::Found(cert) = outcome else {
            panic!("expected a certificate");
        };
        assert!(verify_certificate(&cert).unwrap().verified);
        assert!(!cert.sandwiches().is_empty());
    }

    #[test]
    fn search_reports_not_found_for_a_free_binomial() {
        let alphabet = Alphabet::new(["x", "y"]).unwrap();
        let ctx = GroupCtx::free_group(alphabet.clone());
        let spec = FieldSpec::rationals();
        let x = GroupElem::Word(Word::parse(&alphabet, "x").unwrap());
        let r = AlgebraElem::from_terms(
            &ctx,
            &spec,
            [
                (Scalar::one(&spec), x.clone()),
                (Scalar::from_i64(&spec, -2), ctx.identity()),
            ],
        )
        .unwrap();
        let assignment = standard_assignment(
            &alphabet,
            &[
                x,
                GroupElem::Word(Word::parse(&alphabet, "y").unwrap()),
            ],
        );
        for radius in [1, 2] {
            match search_certificate(&r, &alphabet, &assignment, radius, 1_000_000).unwrap() {
                SearchOutcome::NotFound { radius: reported } => assert_eq!(reported, radius),
                SearchOutcome::Found(_) => panic!("no certificate should exist at radius {radius}"),
            }
        }
    }

    #[test]
    fn search_recovers_the_trinomial_certificate() {
        let ctx = GroupCtx::wreath();
        let (g, h) = wreath_generators();
        let spec = FieldSpec::rationals();
        let k = ctx.commutator(&g, &h).unwrap();
        let one = Scalar::one(&spec);
        let r = AlgebraElem::from_terms(
            &ctx,
            &spec,
            [
                (one.clone(), ctx.identity()),
                (one.clone(), h.clone()),
                (one.neg(), k),
            ],
        )
        .unwrap();
        let alphabet = Alphabet::new(["g", "h"]).unwrap();
        let assignment = standard_assignment(&alphabet, &[g, h]);
        let outcome = search_certificate(&r, &alphabet, &assignment, 4, 100_000).unwrap();
        let SearchOutcome::Found(cert) = outcome else {
            panic!("expected a certificate at radius 4");
        };
        assert!(verify_certificate(&cert).unwrap().verified);
    }

    #[test]
    fn search_budget_and_preconditions_are_enforced() {
        let (ctx, spec, r) = gf5_order_two();
        let alphabet = Alphabet::new(["a"]).unwrap();
        let assignment = standard_assignment(&alphabet, &[GroupElem::Residue(1)]);
        assert!(matches!(
            search_certificate(&r, &alphabet, &assignment, 1, 4),
            Err(Error::BudgetExceeded { .. })
        ));
        let monomial =
            AlgebraElem::monomial(&ctx, &spec, Scalar::from_i64(&spec, 3), GroupElem::Residue(1))
                .unwrap();
        assert!(matches!(
            search_certificate(&monomial, &alphabet, &assignment, 1, 1_000),
            Err(Error::BadParameters(_))
        ));
    }
}
