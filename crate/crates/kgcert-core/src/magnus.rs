//! Truncated noncommutative power-series expansion for free groups.
//!
//! Sending each generator `xᵢ` to `1 + Xᵢ` embeds a free group into the ring
//! of noncommutative power series; the least degree of a nonconstant term of
//! a word's image (its *weight*) equals the word's depth in the lower
//! central series, a classical fact this module relies on but does not
//! re-prove.  Series are truncated at a degree cap, which is harmless
//! because truncation commutes with multiplication.  The weight machinery
//! refutes, inside free groups, the commutator configuration that the
//! trinomial certificate construction requires.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::word::{primitive_root, Word};
use crate::{Error, Result};

/// A polynomial in noncommuting variables `X0, X1, …`, truncated above a
/// degree cap.
///
/// Monomials are sequences of generator indices; coefficients are integers
/// and stored zeros are never kept.  Images of group elements always have
/// constant term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCSeries {
    rank: usize,
    cap: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl NCSeries {
    /// The series `1`.
    pub fn one(rank: usize, cap: usize) -> Self {
        NCSeries {
            rank,
            cap,
            terms: BTreeMap::from([(Vec::new(), BigInt::one())]),
        }
    }

    /// Number of variables.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Degree cap the series is truncated at.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// All stored `(monomial, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, monomial: &[usize]) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Whether the series is exactly `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&[]).is_one()
    }

    /// Truncated product; the factors must agree on rank and cap.
    pub fn mul(&self, other: &NCSeries) -> Result<NCSeries> {
        if self.rank != other.rank {
            return Err(Error::AlphabetMismatch);
        }
        if self.cap != other.cap {
            return Err(Error::BadParameters(
                "cannot multiply series with different degree caps".into(),
            ));
        }
        let mut terms: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1.len() + m2.len() > self.cap {
                    continue;
                }
                let mut monomial = Vec::with_capacity(m1.len() + m2.len());
                monomial.extend_from_slice(m1);
                monomial.extend_from_slice(m2);
                let coeff = c1 * c2;
                let entry = terms.entry(monomial).or_insert_with(BigInt::zero);
                *entry += coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(NCSeries {
            rank: self.rank,
            cap: self.cap,
            terms,
        })
    }

    /// The homogeneous part of the given degree.
    pub fn component(&self, degree: usize) -> BTreeMap<Vec<usize>, BigInt> {
        self.terms
            .iter()
            .filter(|(m, _)| m.len() == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Least degree ≥ 1 carrying a nonzero term, if any.
    pub fn min_positive_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter(|m| !m.is_empty())
            .map(|m| m.len())
            .min()
    }
}

impl core::fmt::Display for NCSeries {
    fn fmt(&self, out: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut ordered: Vec<(&Vec<usize>, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| (m.len(), (*m).clone()));
        if ordered.is_empty() {
            return write!(out, "0");
        }
        for (position, (monomial, coeff)) in ordered.into_iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if position == 0 {
                if negative {
                    write!(out, "-")?;
                }
            } else if negative {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let show_coeff = !magnitude.is_one() || monomial.is_empty();
            if show_coeff {
                write!(out, "{magnitude}")?;
            }
            if !monomial.is_empty() {
                if show_coeff {
                    write!(out, "*")?;
                }
                let text: Vec<String> =
                    monomial.iter().map(|i| format!("X{i}")).collect();
                write!(out, "{}", text.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Expands a word through `xᵢ ↦ 1 + Xᵢ`, truncating at degree `cap`.
///
/// Inverse letters map to the truncated geometric series
/// `Σ_{k≤cap} (−Xᵢ)^k`, so the expansion is exactly multiplicative at every
/// cap: cancelling letters multiply to exactly 1, never to 1 plus tail
/// noise.
pub fn magnus_embed(w: &Word, cap: usize) -> Result<NCSeries> {
    if cap < 1 {
        return Err(Error::BadParameters(
            "series expansion needs a degree cap of at least 1".into(),
        ));
    }
    let rank = w.alphabet().rank();
    let mut acc = NCSeries::one(rank, cap);
    for letter in w.letters() {
        let index = letter.gen.0;
        let mut letter_terms: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        if letter.sign > 0 {
            letter_terms.insert(Vec::new(), BigInt::one());
            letter_terms.insert(vec![index], BigInt::one());
        } else {
            let mut sign = BigInt::one();
            for degree in 0..=cap {
                letter_terms.insert(vec![index; degree], sign.clone());
                sign = -sign;
            }
        }
        let letter_series = NCSeries {
            rank,
            cap,
            terms: letter_terms,
        };
        acc = acc.mul(&letter_series)?;
    }
    Ok(acc)
}

/// A word's position in the lower central series, as far as the cap sees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// The least degree with a nonzero nonconstant term.
    Bounded(usize),
    /// The expansion is exactly 1 up to the cap; the weight exceeds it.
    AboveCap,
}

/// Least degree of a nonzero nonconstant term of the expansion, or
/// [`Weight::AboveCap`] when every such term lies beyond the cap.
pub fn weight(w: &Word, cap: usize) -> Result<Weight> {
    if w.is_identity() {
        return Err(Error::IdentityInput);
    }
    Ok(match magnus_embed(w, cap)?.min_positive_degree() {
        Some(degree) => Weight::Bounded(degree),
        None => Weight::AboveCap,
    })
}

/// The leading homogeneous component of a word's expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightComponent {
    /// The word's weight.
    pub degree: usize,
    /// The nonzero degree-`degree` part; its nonvanishing certifies that the
    /// word's image in the corresponding free-abelian quotient has infinite
    /// order.
    pub terms: BTreeMap<Vec<usize>, BigInt>,
}

/// Computes the weight and the homogeneous component at that degree.
pub fn lcs_image(w: &Word, cap: usize) -> Result<WeightComponent> {
    if w.is_identity() {
        return Err(Error::IdentityInput);
    }
    let series = magnus_embed(w, cap)?;
    match series.min_positive_degree() {
        Some(degree) => Ok(WeightComponent {
            degree,
            terms: series.component(degree),
        }),
        None => Err(Error::CapExceeded {
            needed: cap as u128 + 1,
            cap: cap as u128,
        }),
    }
}

/// A verified contradiction: the commutator configuration cannot live in a
/// free group.
#[derive(Clone, Debug)]
pub struct RefutationReport {
    /// The common primitive root of `f` and `g`.
    pub root: Word,
    /// Weight of the root (call it `i`).
    pub root_weight: usize,
    /// Exponent with `f = root^k`; nonzero, so `f` has weight exactly `i`.
    pub f_power: i64,
    /// Verified lower bound on the weight of `[g, h]` — at least `i + 1`,
    /// so everything in its normal closure sits strictly deeper than `f`.
    pub commutator_weight_floor: usize,
}

/// Outcome of [`refute_trinomial_config`].
#[derive(Clone, Debug)]
pub enum RefutationOutcome {
    /// The configuration is impossible; the report shows the weight clash.
    Refuted(RefutationReport),
    /// The cap is too small to certify the clash; retry with at least
    /// `required_cap`.
    Inconclusive { required_cap: usize, cap: usize },
}

/// Refutes, inside a free group, the hypothesis package "`f ≠ 1` commutes
/// with `g`, and `f` lies in the normal closure of `[g, h]`".
///
/// Commuting elements of a free group are powers of a common primitive word
/// `g₀`.  With `i = weight(g₀)`: `f = g₀^k` forces `weight(f) = i` (leading
/// components scale linearly and the quotient is torsion-free), while
/// `[g, h]` has weight ≥ i + 1, and so does everything in its normal
/// closure — a contradiction, reported with both verified weights.  Returns
/// [`RefutationOutcome::Inconclusive`] when the cap cannot see degree
/// `i + 1`.
pub fn refute_trinomial_config(
    f: &Word,
    g: &Word,
    h: &Word,
    cap: usize,
) -> Result<RefutationOutcome> {
    if f.is_identity() || g.is_identity() {
        return Err(Error::PreconditionFailed(
            "f and g must be non-identity words".into(),
        ));
    }
    if f.multiply(g)? != g.multiply(f)? {
        return Err(Error::PreconditionFailed(
            "f and g do not commute".into(),
        ));
    }
    let commutator = g
        .invert()
        .multiply(&h.invert())?
        .multiply(g)?
        .multiply(h)?;
    if commutator.is_identity() {
        return Err(Error::PreconditionFailed(
            "g and h commute, so the normal closure of [g, h] is trivial".into(),
        ));
    }

    let (root_g, _) = primitive_root(g)?;
    let (root_f, f_multiplicity) = primitive_root(f)?;
    let f_power = if root_f == root_g {
        f_multiplicity as i64
    } else if root_f == root_g.invert() {
        -(f_multiplicity as i64)
    } else {
        return Err(Error::PreconditionFailed(
            "f and g have no common primitive root".into(),
        ));
    };

    let root_weight = match weight(&root_g, cap)? {
        Weight::Bounded(i) => i,
        Weight::AboveCap => {
            return Ok(RefutationOutcome::Inconclusive {
                required_cap: cap + 1,
                cap,
            })
        }
    };
    if cap < root_weight + 1 {
        return Ok(RefutationOutcome::Inconclusive {
            required_cap: root_weight + 1,
            cap,
        });
    }

    let Weight::Bounded(f_weight) = weight(f, cap)? else {
        return Err(Error::Internal(
            "a root power lost its leading component".into(),
        ));
    };
    if f_weight != root_weight {
        return Err(Error::Internal(
            "a root power changed weight".into(),
        ));
    }
    let commutator_deep_enough = match weight(&commutator, cap)? {
        Weight::Bounded(j) => j > root_weight,
        Weight::AboveCap => true,
    };
    if !commutator_deep_enough {
        return Err(Error::Internal(
            "a commutator with a deep factor stayed shallow".into(),
        ));
    }
    Ok(RefutationOutcome::Refuted(RefutationReport {
        root: root_g,
        root_weight,
        f_power,
        commutator_weight_floor: root_weight + 1,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn two_letters() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn word(text: &str) -> Word {
        Word::parse(&two_letters(), text).unwrap()
    }

    #[test]
    fn identity_and_cancelling_words_expand_to_one() {
        assert!(magnus_embed(&word("1"), 3).unwrap().is_one());
        assert!(magnus_embed(&word("x*x^-1"), 3).unwrap().is_one());
        assert!(magnus_embed(&word("y^-1*x^-1*x*y"), 5).unwrap().is_one());
    }

    #[test]
    fn commutator_expansion_matches_the_hand_computation() {
        let series = magnus_embed(&word("[x,y]"), 3).unwrap();
        let one = BigInt::from(1);
        let minus_one = BigInt::from(-1);
        assert_eq!(series.coeff(&[]), one);
        assert_eq!(series.coeff(&[0, 1]), one);
        assert_eq!(series.coeff(&[1, 0]), minus_one);
        assert_eq!(series.coeff(&[0, 0, 1]), minus_one);
        assert_eq!(series.coeff(&[1, 1, 0]), one);
        assert_eq!(series.coeff(&[0, 1, 0]), one);
        assert_eq!(series.coeff(&[1, 0, 1]), minus_one);
        assert_eq!(series.terms().count(), 7);
        // No degree-1 terms: the commutator dies in the abelianization.
        assert_eq!(series.coeff(&[0]), BigInt::from(0));
        assert_eq!(series.coeff(&[1]), BigInt::from(0));
    }

    #[test]
    fn display_orders_terms_by_degree() {
        let series = magnus_embed(&word("[x,y]"), 2).unwrap();
        assert_eq!(series.to_string(), "1 + X0*X1 - X1*X0");
    }

    #[test]
    fn expansion_is_multiplicative_under_truncation() {
        for (u, v) in [("x*y^-1", "y*x"), ("[x,y]", "y^-1"), ("x^3", "x^-5")] {
            let wu = word(u);
            let wv = word(v);
            let product = wu.multiply(&wv).unwrap();
            for cap in 1..=4 {
                let lhs = magnus_embed(&wu, cap)
                    .unwrap()
                    .mul(&magnus_embed(&wv, cap).unwrap())
                    .unwrap();
                assert_eq!(lhs, magnus_embed(&product, cap).unwrap());
            }
        }
    }

    #[test]
    fn weights_of_nested_commutators_step_up() {
        assert_eq!(weight(&word("x"), 3).unwrap(), Weight::Bounded(1));
        assert_eq!(weight(&word("[x,y]"), 3).unwrap(), Weight::Bounded(2));
        assert_eq!(weight(&word("[[x,y],y]"), 4).unwrap(), Weight::Bounded(3));
        assert_eq!(weight(&word("[[x,y],y]"), 2).unwrap(), Weight::AboveCap);
        assert!(matches!(
            weight(&word("1"), 3),
            Err(Error::IdentityInput)
        ));
    }

    #[test]
    fn leading_components_match_known_values() {
        let square = lcs_image(&word("x^2"), 3).unwrap();
        assert_eq!(square.degree, 1);
        assert_eq!(square.terms, BTreeMap::from([(vec![0], BigInt::from(2))]));

        let comm = lcs_image(&word("[x,y]"), 3).unwrap();
        assert_eq!(comm.degree, 2);
        assert_eq!(
            comm.terms,
            BTreeMap::from([
                (vec![0, 1], BigInt::from(1)),
                (vec![1, 0], BigInt::from(-1)),
            ])
        );

        let cube = lcs_image(&word("[x,y]").pow(3), 3).unwrap();
        assert_eq!(cube.degree, 2);
        assert_eq!(
            cube.terms,
            BTreeMap::from([
                (vec![0, 1], BigInt::from(3)),
                (vec![1, 0], BigInt::from(-3)),
            ])
        );

        assert!(matches!(
            lcs_image(&word("[[x,y],y]"), 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn generator_configuration_is_refuted() {
        let outcome =
            refute_trinomial_config(&word("x"), &word("x"), &word("y"), 3).unwrap();
        let RefutationOutcome::Refuted(report) = outcome else {
            panic!("expected a refutation");
        };
        assert_eq!(report.root, word("x"));
        assert_eq!(report.root_weight, 1);
        assert_eq!(report.f_power, 1);
        assert_eq!(report.commutator_weight_floor, 2);
    }

    #[test]
    fn commutator_power_configuration_is_refuted_at_depth_two() {
        let outcome = refute_trinomial_config(
            &word("[x,y]").pow(2),
            &word("[x,y]"),
            &word("x"),
            4,
        )
        .unwrap();
        let RefutationOutcome::Refuted(report) = outcome else {
            panic!("expected a refutation");
        };
        assert_eq!(report.root_weight, 2);
        assert_eq!(report.f_power, 2);
        assert_eq!(report.commutator_weight_floor, 3);
    }

    #[test]
    fn negative_powers_share_the_root_up_to_inversion() {
        let outcome =
            refute_trinomial_config(&word("x^-2"), &word("x"), &word("y"), 3).unwrap();
        let RefutationOutcome::Refuted(report) = outcome else {
            panic!("expected a refutation");
        };
        assert_eq!(report.f_power, -2);
    }

    #[test]
    fn shallow_caps_are_reported_as_inconclusive() {
        let outcome = refute_trinomial_config(
            &word("[x,y]").pow(2),
            &word("[x,y]"),
            &word("x"),
            2,
        )
        .unwrap();
        let RefutationOutcome::Inconclusive { required_cap, cap } = outcome else {
            panic!("expected an inconclusive outcome");
        };
        assert_eq!(required_cap, 3);
        assert_eq!(cap, 2);
    }

    #[test]
    fn degenerate_configurations_are_rejected() {
        // f and g do not commute.
        assert!(matches!(
            refute_trinomial_config(&word("x"), &word("y"), &word("x"), 3),
            Err(Error::PreconditionFailed(_))
        ));
        // f is the identity.
        assert!(matches!(
            refute_trinomial_config(&word("1"), &word("x"), &word("y"), 3),
            Err(Error::PreconditionFailed(_))
        ));
        // g and h commute.
        assert!(matches!(
            refute_trinomial_config(&word("x"), &word("x"), &word("x^2"), 3),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
