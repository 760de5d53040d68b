//! Relations among conjugates of a group element.
//!
//! A *conjugacy relation* for `g` asserts that a product of conjugates
//! `hᵢ⁻¹·g·hᵢ` (with exponents ±1) collapses to the identity, or that two
//! such products are equal.  The exponent sum of any such relation is a
//! multiple of a single invariant of `(G, g)`; every multiple certified by a
//! concrete relation constrains which scalars `c` let the binomial `g − c`
//! generate the improper ideal of the group algebra.  This module verifies
//! relations, rewrites signed relations into two-sided form, searches for
//! relations with bounded conjugator words, and constructs witnesses for
//! standard group families known to admit them.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::group::{GroupCtx, GroupElem};
use crate::scalar::{FieldSpec, Scalar};
use crate::word::{ball_enumerate, Alphabet, Generator, Word};
use crate::{Error, Result};

/// Largest explicit term count a witness constructor will materialize.
const MAX_WITNESS_TERMS: u64 = 1_000_000;

/// The two shapes of a conjugacy relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationForm {
    /// Asserts `Π (hᵢ⁻¹·g·hᵢ)^εᵢ = 1` with each `εᵢ ∈ {+1, −1}`.
    SignedList(Vec<(GroupElem, i8)>),
    /// Asserts `Π (hᵢ⁻¹·g·hᵢ) = Π (h′ⱼ⁻¹·g·h′ⱼ)` (all exponents +1).
    TwoSided {
        left: Vec<GroupElem>,
        right: Vec<GroupElem>,
    },
}

/// A verified relation among conjugates of a fixed group element.
///
/// Construction checks the asserted equation exactly in the group, so every
/// value of this type is a certificate.  The exponent sum (`Σεᵢ` for a signed
/// list, `M − M′` for a two-sided relation) is stored alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjRelation {
    ctx: GroupCtx,
    g: GroupElem,
    form: RelationForm,
    exponent_sum: i64,
}

impl ConjRelation {
    /// Verifies the asserted relation and packages it as a certificate.
    pub fn new(ctx: &GroupCtx, g: GroupElem, form: RelationForm) -> Result<Self> {
        let g = ctx.canonicalize(g)?;
        let form = canonicalize_form(ctx, form)?;
        let exponent_sum = check_relation(ctx, &g, &form)?;
        Ok(ConjRelation {
            ctx: ctx.clone(),
            g,
            form,
            exponent_sum,
        })
    }

    /// The group the relation lives in.
    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }

    /// The element whose conjugates the relation multiplies.
    pub fn g(&self) -> &GroupElem {
        &self.g
    }

    /// The relation's shape and conjugator lists.
    pub fn form(&self) -> &RelationForm {
        &self.form
    }

    /// `Σεᵢ` for a signed list, `M − M′` for a two-sided relation.
    pub fn exponent_sum(&self) -> i64 {
        self.exponent_sum
    }
}

fn canonicalize_form(ctx: &GroupCtx, form: RelationForm) -> Result<RelationForm> {
    Ok(match form {
        RelationForm::SignedList(terms) => {
            let mut out = Vec::with_capacity(terms.len());
            for (h, eps) in terms {
                if eps != 1 && eps != -1 {
                    return Err(Error::BadParameters(format!(
                        "relation exponent must be +1 or -1, got {eps}"
                    )));
                }
                out.push((ctx.canonicalize(h)?, eps));
            }
            RelationForm::SignedList(out)
        }
        RelationForm::TwoSided { left, right } => {
            let canon = |side: Vec<GroupElem>| -> Result<Vec<GroupElem>> {
                side.into_iter().map(|h| ctx.canonicalize(h)).collect()
            };
            RelationForm::TwoSided {
                left: canon(left)?,
                right: canon(right)?,
            }
        }
    })
}

/// Evaluates a relation exactly and returns its exponent sum.
///
/// Returns `Σεᵢ` for a signed list or `M − M′` for a two-sided relation once
/// the asserted equation is confirmed; fails with [`Error::RelationFalse`]
/// when the product is not the identity (resp. the sides differ).  The
/// element `g` must not be the identity: every equation among conjugates of
/// the identity is vacuously true and certifies nothing.
pub fn check_relation(ctx: &GroupCtx, g: &GroupElem, form: &RelationForm) -> Result<i64> {
    let g = ctx.canonicalize(g.clone())?;
    if ctx.is_identity(&g) {
        return Err(Error::IdentityInput);
    }
    match form {
        RelationForm::SignedList(terms) => {
            let mut product = ctx.identity();
            let mut sum: i64 = 0;
            for (h, eps) in terms {
                if *eps != 1 && *eps != -1 {
                    return Err(Error::BadParameters(format!(
                        "relation exponent must be +1 or -1, got {eps}"
                    )));
                }
                let conj = ctx.conjugate(&g, h)?;
                let factor = if *eps == 1 { conj } else { ctx.invert(&conj)? };
                product = ctx.multiply(&product, &factor)?;
                sum += i64::from(*eps);
            }
            if ctx.is_identity(&product) {
                Ok(sum)
            } else {
                Err(Error::RelationFalse)
            }
        }
        RelationForm::TwoSided { left, right } => {
            let eval_side = |side: &[GroupElem]| -> Result<GroupElem> {
                let mut product = ctx.identity();
                for h in side {
                    let conj = ctx.conjugate(&g, h)?;
                    product = ctx.multiply(&product, &conj)?;
                }
                Ok(product)
            };
            if eval_side(left)? == eval_side(right)? {
                Ok(left.len() as i64 - right.len() as i64)
            } else {
                Err(Error::RelationFalse)
            }
        }
    }
}

/// Rewrites a verified signed-list relation into two-sided form.
///
/// Repeatedly replaces an adjacent pair `(hᵢ, −1), (hᵢ₊₁, +1)` by
/// `(hᵢ₊₁, +1), (hᵢ·(hᵢ₊₁⁻¹·g·hᵢ₊₁), −1)` — which leaves the product value
/// unchanged — until every +1 term precedes every −1 term.  The number of
/// misordered pairs strictly decreases at each step, so this terminates.  The
/// positive terms become the left side; the negative terms, inverted as a
/// block, become the right side in reverse order.  The result is re-verified
/// and has the same exponent sum.
pub fn rearrange_relation(rel: &ConjRelation) -> Result<ConjRelation> {
    let RelationForm::SignedList(terms) = rel.form() else {
        return Err(Error::BadParameters(
            "rearrangement applies to signed-list relations only".into(),
        ));
    };
    let ctx = rel.ctx();
    let g = rel.g();
    let mut terms = terms.clone();
    loop {
        let swap_at = (0..terms.len().saturating_sub(1))
            .find(|&i| terms[i].1 == -1 && terms[i + 1].1 == 1);
        let Some(i) = swap_at else { break };
        let conj_next = ctx.conjugate(g, &terms[i + 1].0)?;
        let pushed = ctx.multiply(&terms[i].0, &conj_next)?;
        terms[i] = core::mem::replace(&mut terms[i + 1], (pushed, -1));
    }
    let split = terms.iter().position(|(_, eps)| *eps == -1).unwrap_or(terms.len());
    let left: Vec<GroupElem> = terms[..split].iter().map(|(h, _)| h.clone()).collect();
    let right: Vec<GroupElem> = terms[split..].iter().rev().map(|(h, _)| h.clone()).collect();
    ConjRelation::new(ctx, g.clone(), RelationForm::TwoSided { left, right })
}

/// Outcome of a bounded search for relations among conjugates of `g`.
#[derive(Clone, Debug)]
pub struct BinomialVerdict {
    /// The element whose conjugates were searched.
    pub g: GroupElem,
    /// Greatest common divisor of the exponent sums of all relations found;
    /// `None` when no relation with nonzero sum was found.  Any scalar `c`
    /// with `c^d ≠ 1` for this divisor `d` makes `g − c` generate the
    /// improper ideal; the search never claims `d` is the least such value.
    pub divisor_found: Option<u64>,
    /// One verified relation per (product value, term count) collision found.
    pub relations: Vec<ConjRelation>,
}

/// Searches for two-sided relations whose conjugators are images of short
/// words.
///
/// The conjugator pool consists of `e⁻¹·g·e` for `e` ranging over the images
/// of all words of length at most `radius` under `assignment` (deduplicated,
/// first word in length-then-lexicographic order wins).  All products of at
/// most `max_terms` pool elements are enumerated layer by layer; whenever the
/// same group element arises as a product of two different term counts, the
/// two factorizations form a verified two-sided relation with nonzero
/// exponent sum.  The verdict records the gcd of all sums found.  `cap`
/// bounds both the ball enumeration and the total number of group
/// multiplications.
///
/// Finding nothing is consistent with — but never proof of — the absence of
/// relations.
pub fn relation_search(
    ctx: &GroupCtx,
    g: &GroupElem,
    alphabet: &Alphabet,
    assignment: &BTreeMap<Generator, GroupElem>,
    radius: usize,
    max_terms: usize,
    cap: u128,
) -> Result<BinomialVerdict> {
    if radius < 1 || max_terms < 2 {
        return Err(Error::BadParameters(
            "relation search needs radius >= 1 and max_terms >= 2".into(),
        ));
    }
    let g = ctx.canonicalize(g.clone())?;
    if ctx.is_identity(&g) {
        return Err(Error::IdentityInput);
    }

    let mut pool: BTreeMap<GroupElem, GroupElem> = BTreeMap::new();
    for word in ball_enumerate(alphabet, radius, cap)? {
        let e = ctx.eval_word(&word, assignment)?;
        let conj = ctx.conjugate(&g, &e)?;
        pool.entry(conj).or_insert(e);
    }

    // For each product value, the ascending list of term counts that reach
    // it, each with the first conjugator sequence found.
    let mut reached: BTreeMap<GroupElem, Vec<(usize, Vec<GroupElem>)>> = BTreeMap::new();
    reached.insert(ctx.identity(), vec![(0, Vec::new())]);

    let mut layer: BTreeMap<GroupElem, Vec<GroupElem>> = BTreeMap::new();
    layer.insert(ctx.identity(), Vec::new());
    let mut ops: u128 = 0;
    for length in 1..=max_terms {
        let mut next: BTreeMap<GroupElem, Vec<GroupElem>> = BTreeMap::new();
        for (value, seq) in &layer {
            for (conj, conjugator) in &pool {
                ops += 1;
                if ops > cap {
                    return Err(Error::BudgetExceeded { needed: ops, cap });
                }
                let product = ctx.multiply(value, conj)?;
                next.entry(product).or_insert_with(|| {
                    let mut extended = seq.clone();
                    extended.push(conjugator.clone());
                    extended
                });
            }
        }
        for (value, seq) in &next {
            reached
                .entry(value.clone())
                .or_default()
                .push((length, seq.clone()));
        }
        layer = next;
    }

    let mut divisor: u64 = 0;
    let mut relations = Vec::new();
    for (_, hits) in reached {
        let Some(((base_len, base_seq), rest)) = hits.split_first() else {
            continue;
        };
        for (len, seq) in rest {
            divisor = divisor.gcd(&((len - base_len) as u64));
            relations.push(ConjRelation::new(
                ctx,
                g.clone(),
                RelationForm::TwoSided {
                    left: seq.clone(),
                    right: base_seq.clone(),
                },
            )?);
        }
    }
    Ok(BinomialVerdict {
        g,
        divisor_found: if divisor == 0 { None } else { Some(divisor) },
        relations,
    })
}

/// Group families with a known conjugacy relation or order claim for some
/// non-identity element.
#[derive(Clone, Debug)]
pub enum WitnessFamily {
    /// A cyclic group of order `n > 1`; its generator satisfies `gⁿ = 1`.
    FiniteOrder { n: u64 },
    /// Affine maps of the line over ℚ: `g: t ↦ t + 1` and `h: t ↦ αt` with
    /// `α = m/m′ ∉ {0, 1}` satisfy `(h⁻¹gh)^m = g^{m′}`.
    AffineScaling { alpha: BigRational },
    /// Elements `h ≠ h′` of a supplied group with `hⁿ = h′ⁿ`, `n > 1`;
    /// `g = h⁻¹h′` satisfies an explicit `n`-term relation.
    EqualPowers {
        ctx: GroupCtx,
        h: GroupElem,
        h_prime: GroupElem,
        n: u64,
    },
    /// Non-commuting `h₁, h₂` of a supplied group where `h₁` commutes with
    /// `h₂ⁿ`, `n > 1`; reduces to [`WitnessFamily::EqualPowers`] with
    /// `h = h₂`, `h′ = h₁⁻¹h₂h₁`, and `g = [h₂, h₁]`.
    CommutingPower {
        ctx: GroupCtx,
        h1: GroupElem,
        h2: GroupElem,
        n: u64,
    },
    /// Affine maps over ℚ[t]/(t² − t − 1) with `h: t ↦ φt` for the golden
    /// ratio φ: here `h²gh⁻² = g·(hgh⁻¹)`, a two-sided relation with
    /// exponent sum −1.
    GoldenScaling,
    /// A group presented with the braid-like relation `(xy)^d = (yx)^d`
    /// (even form) or `(xy)^d·x = (yx)^d·y` (odd form).  The witness element
    /// is carried in the free group on `x, y`; the order claim holds in the
    /// presented quotient, which no backend realizes, so it is returned
    /// unverified.
    ArtinTits { d: u64, odd: bool },
}

/// Either a machine-checked relation or an order claim taken on trust.
#[derive(Clone, Debug)]
pub enum WitnessClaim {
    /// An explicit relation, verified in the carrier group.
    Verified(Box<ConjRelation>),
    /// The claim `ḡⁿ = 1` (in the quotient by `[g, G]`) holds by a proof
    /// about a group no backend realizes; it is not machine-checked here.
    UnverifiedOrderClaim,
}

/// A group, a non-identity element `g`, and a claim that the exponent-sum
/// invariant of `(G, g)` divides `n`.
///
/// Whenever the claim is verified, every scalar `c ≠ 0` with `cⁿ ≠ 1` makes
/// `g − c` generate the improper ideal of `kG`.
#[derive(Clone, Debug)]
pub struct CollapseWitness {
    pub ctx: GroupCtx,
    pub g: GroupElem,
    pub claim: WitnessClaim,
    pub n: u64,
}

impl CollapseWitness {
    /// The verified relation, when the claim carries one.
    pub fn relation(&self) -> Option<&ConjRelation> {
        match &self.claim {
            WitnessClaim::Verified(rel) => Some(rel.as_ref()),
            WitnessClaim::UnverifiedOrderClaim => None,
        }
    }
}

/// Constructs the standard witness for a known group family.
///
/// Hypotheses are validated against the supplied parameters; families with a
/// live backend return a relation checked by [`check_relation`], while the
/// presented-group family returns an [`WitnessClaim::UnverifiedOrderClaim`].
pub fn standard_witness(family: WitnessFamily) -> Result<CollapseWitness> {
    match family {
        WitnessFamily::FiniteOrder { n } => finite_order_witness(n),
        WitnessFamily::AffineScaling { alpha } => affine_scaling_witness(alpha),
        WitnessFamily::EqualPowers {
            ctx,
            h,
            h_prime,
            n,
        } => equal_powers_witness(&ctx, h, h_prime, n),
        WitnessFamily::CommutingPower { ctx, h1, h2, n } => {
            commuting_power_witness(&ctx, h1, h2, n)
        }
        WitnessFamily::GoldenScaling => golden_scaling_witness(),
        WitnessFamily::ArtinTits { d, odd } => artin_tits_witness(d, odd),
    }
}

fn term_count(n: u64, what: &str) -> Result<usize> {
    if n > MAX_WITNESS_TERMS {
        return Err(Error::BadParameters(format!(
            "{what} {n} exceeds the explicit-relation limit {MAX_WITNESS_TERMS}"
        )));
    }
    Ok(n as usize)
}

fn finite_order_witness(n: u64) -> Result<CollapseWitness> {
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "a finite-order witness needs n > 1, got {n}"
        )));
    }
    let count = term_count(n, "order")?;
    let ctx = GroupCtx::finite_cyclic(n)?;
    let g = GroupElem::Residue(1);
    let relation = ConjRelation::new(
        &ctx,
        g.clone(),
        RelationForm::TwoSided {
            left: vec![ctx.identity(); count],
            right: Vec::new(),
        },
    )?;
    Ok(CollapseWitness {
        ctx,
        g,
        claim: WitnessClaim::Verified(Box::new(relation)),
        n,
    })
}

fn affine_scaling_witness(alpha: BigRational) -> Result<CollapseWitness> {
    use num_traits::{One, Zero};
    if alpha.is_zero() || alpha.is_one() {
        return Err(Error::BadParameters(format!(
            "affine scaling needs alpha outside {{0, 1}}, got {alpha}"
        )));
    }
    let m = alpha.numer().clone();
    let m_prime = alpha.denom().clone();
    let n_big = (&m - &m_prime).abs();
    let n = n_big
        .to_u64()
        .ok_or_else(|| Error::BadParameters("scaling exponent difference too large".into()))?;
    let m_count = term_count(
        m.abs()
            .to_u64()
            .ok_or_else(|| Error::BadParameters("numerator too large".into()))?,
        "numerator",
    )?;
    let m_prime_count = term_count(
        m_prime
            .to_u64()
            .ok_or_else(|| Error::BadParameters("denominator too large".into()))?,
        "denominator",
    )?;

    let spec = FieldSpec::rationals();
    let ctx = GroupCtx::affine(spec.clone());
    let g = GroupElem::Affine {
        a: Scalar::one(&spec),
        b: Scalar::one(&spec),
    };
    let h = GroupElem::Affine {
        a: Scalar::from_rational(&spec, alpha)?,
        b: Scalar::zero(&spec),
    };
    // (h⁻¹gh)^m = g^{m′}; for negative m, move the left side's inverse
    // across, which the relation's commuting translations permit.
    let form = if m.is_negative() {
        let mut left = vec![h; m_count];
        left.extend(vec![ctx.identity(); m_prime_count]);
        RelationForm::TwoSided {
            left,
            right: Vec::new(),
        }
    } else {
        RelationForm::TwoSided {
            left: vec![h; m_count],
            right: vec![ctx.identity(); m_prime_count],
        }
    };
    let relation = ConjRelation::new(&ctx, g.clone(), form)?;
    Ok(CollapseWitness {
        ctx,
        g,
        claim: WitnessClaim::Verified(Box::new(relation)),
        n,
    })
}

fn equal_powers_witness(
    ctx: &GroupCtx,
    h: GroupElem,
    h_prime: GroupElem,
    n: u64,
) -> Result<CollapseWitness> {
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "an equal-powers witness needs n > 1, got {n}"
        )));
    }
    let count = term_count(n, "exponent")?;
    let h = ctx.canonicalize(h)?;
    let h_prime = ctx.canonicalize(h_prime)?;
    if h == h_prime {
        return Err(Error::BadParameters(
            "equal-powers witness needs h != h'".into(),
        ));
    }
    if ctx.pow(&h, n as i64)? != ctx.pow(&h_prime, n as i64)? {
        return Err(Error::BadParameters(format!(
            "hypothesis h^{n} = h'^{n} does not hold"
        )));
    }
    let g = ctx.multiply(&ctx.invert(&h)?, &h_prime)?;
    // h′ = h·g and hⁿ = h′ⁿ force Π_{i=n−1..0} (h^{-i}·g·h^{i}) = 1, by
    // collecting the h factors of (h·g)ⁿ on the left.
    let mut terms = Vec::with_capacity(count);
    let mut power = ctx.identity();
    for _ in 0..count {
        terms.push((power.clone(), 1));
        power = ctx.multiply(&power, &h)?;
    }
    terms.reverse();
    let relation = ConjRelation::new(ctx, g.clone(), RelationForm::SignedList(terms))?;
    Ok(CollapseWitness {
        ctx: ctx.clone(),
        g,
        claim: WitnessClaim::Verified(Box::new(relation)),
        n,
    })
}

fn commuting_power_witness(
    ctx: &GroupCtx,
    h1: GroupElem,
    h2: GroupElem,
    n: u64,
) -> Result<CollapseWitness> {
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "a commuting-power witness needs n > 1, got {n}"
        )));
    }
    let h1 = ctx.canonicalize(h1)?;
    let h2 = ctx.canonicalize(h2)?;
    if ctx.commutes(&h1, &h2)? {
        return Err(Error::BadParameters(
            "commuting-power witness needs non-commuting h1, h2".into(),
        ));
    }
    let h2_n = ctx.pow(&h2, n as i64)?;
    if !ctx.commutes(&h1, &h2_n)? {
        return Err(Error::BadParameters(format!(
            "hypothesis [h1, h2^{n}] = 1 does not hold"
        )));
    }
    let h_prime = ctx.conjugate(&h2, &h1)?;
    equal_powers_witness(ctx, h2, h_prime, n)
}

fn golden_scaling_witness() -> Result<CollapseWitness> {
    let spec = FieldSpec::golden();
    let ctx = GroupCtx::affine(spec.clone());
    let g = GroupElem::Affine {
        a: Scalar::one(&spec),
        b: Scalar::one(&spec),
    };
    let phi = Scalar::from_poly(
        &spec,
        vec![BigRational::from_integer(0.into()), BigRational::from_integer(1.into())],
    )?;
    let h = GroupElem::Affine {
        a: phi,
        b: Scalar::zero(&spec),
    };
    // φ² = φ + 1 makes h²gh⁻² equal g·(hgh⁻¹): both translate by φ².
    let h_inv = ctx.invert(&h)?;
    let relation = ConjRelation::new(
        &ctx,
        g.clone(),
        RelationForm::TwoSided {
            left: vec![ctx.pow(&h_inv, 2)?],
            right: vec![ctx.identity(), h_inv],
        },
    )?;
    Ok(CollapseWitness {
        ctx,
        g,
        claim: WitnessClaim::Verified(Box::new(relation)),
        n: 1,
    })
}

fn artin_tits_witness(d: u64, odd: bool) -> Result<CollapseWitness> {
    if d < 1 || (!odd && d < 2) {
        return Err(Error::BadParameters(format!(
            "the even-form witness needs d > 1 and the odd form d >= 1, got d = {d}"
        )));
    }
    let alphabet = Alphabet::new(["x", "y"])?;
    let ctx = GroupCtx::free_group(alphabet.clone());
    let x = Word::generator(&alphabet, Generator(0));
    let y = Word::generator(&alphabet, Generator(1));
    let (g, n) = if odd {
        // (xy)^d·x = (yx)^d·y collapses x·y⁻¹ to the identity in the
        // quotient by [g, G], so the invariant is 1.
        (x.multiply(&y.invert())?, 1)
    } else {
        // (xy)^d = (yx)^d are distinct equal d-th powers, so their ratio
        // g = (xy)⁻¹(yx) has invariant dividing d.
        let h = x.multiply(&y)?;
        let h_prime = y.multiply(&x)?;
        (h.invert().multiply(&h_prime)?, d)
    };
    Ok(CollapseWitness {
        ctx,
        g: GroupElem::Word(g),
        claim: WitnessClaim::UnverifiedOrderClaim,
        n,
    })
}
