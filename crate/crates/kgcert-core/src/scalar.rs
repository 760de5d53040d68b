//! Exact field arithmetic: rationals, prime fields GF(p), and rational number
//! fields ℚ[t]/(f) with a monic, user-asserted-irreducible modulus.
//!
//! Every [`Scalar`] carries its [`FieldSpec`]; mixing specs is a [`Error::FieldMismatch`].
//! Canonical forms (reduced fractions, residues in `[0, p)`, remainders of degree
//! `< deg f` with trimmed leading zeros) make equality plain representation equality.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Largest admissible prime-field characteristic (exclusive bound 2^31).
pub const MAX_PRIME: u64 = 1 << 31;

/// The three supported field kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    /// GF(p), p prime, p < 2^31 so products of residues fit in u64.
    Prime(u64),
    /// ℚ[var]/(modulus); `modulus` is monic, ascending coefficients, degree ≥ 1.
    /// Irreducibility is user-asserted; a reducible modulus surfaces as
    /// [`Error::ReducibleModulus`] on the first inversion that finds a factor.
    NumberField { var: String, modulus: Vec<BigRational> },
}

/// Cheap-to-clone handle on a field description.
#[derive(Clone, Debug)]
pub struct FieldSpec(Arc<FieldKind>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for FieldSpec {}
impl PartialOrd for FieldSpec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FieldSpec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}
impl core::hash::Hash for FieldSpec {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec(Arc::new(FieldKind::Rationals))
    }

    /// GF(p). Fails unless `p` is a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::BadParameters(format!("characteristic {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::BadParameters(format!("{p} is not prime")));
        }
        Ok(FieldSpec(Arc::new(FieldKind::Prime(p))))
    }

    /// ℚ[var]/(modulus), coefficients ascending. The modulus is normalized to be
    /// monic; degree must be ≥ 1. Irreducibility is the caller's assertion.
    pub fn number_field(var: &str, modulus: Vec<BigRational>) -> Result<Self> {
        let mut modulus = modulus;
        while modulus.last().is_some_and(Zero::is_zero) {
            modulus.pop();
        }
        if modulus.len() < 2 {
            return Err(Error::BadParameters("modulus must have degree >= 1".to_owned()));
        }
        if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphabetic()) {
            return Err(Error::BadParameters(format!("bad variable name `{var}`")));
        }
        let lead = modulus.last().unwrap().clone();
        if !lead.is_one() {
            for c in &mut modulus {
                *c /= lead.clone();
            }
        }
        Ok(FieldSpec(Arc::new(FieldKind::NumberField { var: var.to_owned(), modulus })))
    }

    /// The golden-ratio field ℚ[t]/(t² − t − 1).
    pub fn golden() -> Self {
        let m1: BigRational = -BigRational::one();
        Self::number_field("t", vec![m1.clone(), m1, BigRational::one()])
            .expect("fixed monic modulus")
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    /// Number of elements for finite fields, None for infinite ones.
    pub fn size(&self) -> Option<u64> {
        match self.kind() {
            FieldKind::Prime(p) => Some(*p),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    fn modulus(&self) -> &[BigRational] {
        match self.kind() {
            FieldKind::NumberField { modulus, .. } => modulus,
            _ => unreachable!("modulus requested for non number field"),
        }
    }

    /// All elements of a finite field, in residue order.
    pub fn enumerate(&self) -> Result<Vec<Scalar>> {
        match self.kind() {
            FieldKind::Prime(p) => {
                Ok((0..*p).map(|r| Scalar { spec: self.clone(), value: Value::Mod(r) }).collect())
            }
            _ => Err(Error::InfiniteFieldRejected),
        }
    }

    /// Parses field-spec text: `Q`, `GF(5)`, `Q[t]/(t^2-t-1)`, or the preset name `golden`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Self::rationals());
        }
        if t == "golden" {
            return Ok(Self::golden());
        }
        if let Some(rest) = t.strip_prefix("GF(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::Syntax {
                pos: t.len(),
                msg: "expected `)` closing GF(".to_owned(),
            })?;
            let p: u64 = inner.trim().parse().map_err(|_| Error::Syntax {
                pos: 3,
                msg: format!("bad characteristic `{inner}`"),
            })?;
            return Self::prime(p);
        }
        if let Some(rest) = t.strip_prefix("Q[") {
            let (var, rest) = rest.split_once(']').ok_or_else(|| Error::Syntax {
                pos: 2,
                msg: "expected `]` after variable".to_owned(),
            })?;
            let var = var.trim();
            let rest = rest.trim();
            let body = rest
                .strip_prefix("/(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::Syntax {
                    pos: 2 + var.len(),
                    msg: "expected `/(...)` with the modulus".to_owned(),
                })?;
            let coeffs = parse_poly_text(body, var)?;
            return Self::number_field(var, coeffs);
        }
        Err(Error::Syntax { pos: 0, msg: format!("unrecognized field spec `{t}`") })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "GF({p})"),
            FieldKind::NumberField { var, modulus } => {
                write!(f, "Q[{var}]/({})", poly_text(modulus, var))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Value {
    Rat(BigRational),
    Mod(u64),
    /// Remainder mod the field's modulus: ascending coefficients, trailing zeros
    /// trimmed (so zero is the empty vector).
    Poly(Vec<BigRational>),
}

/// An element of one of the supported fields, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    spec: FieldSpec,
    value: Value,
}

/// Outcome of a multiplicative-order computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    /// No k ≤ cap with c^k = 1 (over ℚ or a number field: infinite or above cap).
    Unknown,
}

impl Scalar {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn zero(spec: &FieldSpec) -> Self {
        let value = match spec.kind() {
            FieldKind::Rationals => Value::Rat(BigRational::zero()),
            FieldKind::Prime(_) => Value::Mod(0),
            FieldKind::NumberField { .. } => Value::Poly(Vec::new()),
        };
        Scalar { spec: spec.clone(), value }
    }

    pub fn one(spec: &FieldSpec) -> Self {
        Self::from_i64(spec, 1)
    }

    pub fn from_i64(spec: &FieldSpec, n: i64) -> Self {
        let value = match spec.kind() {
            FieldKind::Rationals => Value::Rat(BigRational::from(BigInt::from(n))),
            FieldKind::Prime(p) => Value::Mod(n.rem_euclid(*p as i64) as u64),
            FieldKind::NumberField { .. } => {
                if n == 0 {
                    Value::Poly(Vec::new())
                } else {
                    Value::Poly(vec![BigRational::from(BigInt::from(n))])
                }
            }
        };
        Scalar { spec: spec.clone(), value }
    }

    /// A rational value, reduced into the given field (mod p for prime fields).
    pub fn from_rational(spec: &FieldSpec, q: BigRational) -> Result<Self> {
        match spec.kind() {
            FieldKind::Rationals => Ok(Scalar { spec: spec.clone(), value: Value::Rat(q) }),
            FieldKind::Prime(p) => {
                let num = reduce_int_mod(q.numer(), *p);
                let den = reduce_int_mod(q.denom(), *p);
                if den == 0 {
                    return Err(Error::ZeroElement);
                }
                let value = Value::Mod(mul_mod(num, inv_mod(den, *p), *p));
                Ok(Scalar { spec: spec.clone(), value })
            }
            FieldKind::NumberField { .. } => {
                let value =
                    if q.is_zero() { Value::Poly(Vec::new()) } else { Value::Poly(vec![q]) };
                Ok(Scalar { spec: spec.clone(), value })
            }
        }
    }

    /// Number-field element from ascending polynomial coefficients (reduced mod the modulus).
    pub fn from_poly(spec: &FieldSpec, coeffs: Vec<BigRational>) -> Result<Self> {
        match spec.kind() {
            FieldKind::NumberField { modulus, .. } => {
                let rem = poly_rem(coeffs, modulus);
                Ok(Scalar { spec: spec.clone(), value: Value::Poly(rem) })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Prime-field residue.
    pub fn from_residue(spec: &FieldSpec, r: u64) -> Result<Self> {
        match spec.kind() {
            FieldKind::Prime(p) => {
                Ok(Scalar { spec: spec.clone(), value: Value::Mod(r % p) })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_zero(),
            Value::Mod(r) => *r == 0,
            Value::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_one(),
            Value::Mod(r) => *r == 1,
            Value::Poly(c) => c.len() == 1 && c[0].is_one(),
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.prime();
                Value::Mod((a + b) % p)
            }
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(poly_add(a, b)),
            _ => return Err(Error::FieldMismatch),
        };
        Ok(Scalar { spec: self.spec.clone(), value })
    }

    pub fn neg(&self) -> Scalar {
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a) => {
                let p = self.prime();
                Value::Mod(if *a == 0 { 0 } else { p - a })
            }
            Value::Poly(a) => Value::Poly(a.iter().map(|c| -c).collect()),
        };
        Scalar { spec: self.spec.clone(), value }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => Value::Mod(mul_mod(*a, *b, self.prime())),
            (Value::Poly(a), Value::Poly(b)) => {
                Value::Poly(poly_rem(poly_mul(a, b), self.spec.modulus()))
            }
            _ => return Err(Error::FieldMismatch),
        };
        Ok(Scalar { spec: self.spec.clone(), value })
    }

    /// Multiplicative inverse. For number fields this runs the extended Euclidean
    /// algorithm against the modulus and reports [`Error::ReducibleModulus`] with the
    /// discovered factor if the gcd is not constant.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(a.recip()),
            Value::Mod(a) => Value::Mod(inv_mod(*a, self.prime())),
            Value::Poly(a) => {
                let (g, s) = poly_ext_gcd(a, self.spec.modulus());
                if poly_deg(&g) != Some(0) {
                    let var = match self.spec.kind() {
                        FieldKind::NumberField { var, .. } => var.as_str(),
                        _ => "t",
                    };
                    return Err(Error::ReducibleModulus(poly_text(&g, var)));
                }
                let scale = g[0].recip();
                let scaled: Vec<BigRational> = s.iter().map(|c| c * &scale).collect();
                Value::Poly(poly_rem(scaled, self.spec.modulus()))
            }
        };
        Ok(Scalar { spec: self.spec.clone(), value })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inv()?)
    }

    /// c^k for any integer k (negative exponents invert first).
    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one(&self.spec);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    fn prime(&self) -> u64 {
        match self.spec.kind() {
            FieldKind::Prime(p) => *p,
            _ => unreachable!("prime() on non prime field"),
        }
    }

    /// The rational value, if this is a ℚ scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(q) => Some(q),
            _ => None,
        }
    }

    /// The residue, if this is a prime-field scalar.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Mod(r) => Some(*r),
            _ => None,
        }
    }

    /// Ascending remainder coefficients, if this is a number-field scalar.
    pub fn as_poly(&self) -> Option<&[BigRational]> {
        match &self.value {
            Value::Poly(c) => Some(c),
            _ => None,
        }
    }

    /// True when the value is a plain rational constant (no `t` part) — used by
    /// display code to decide whether parentheses are needed.
    pub fn is_constant(&self) -> bool {
        match &self.value {
            Value::Poly(c) => c.len() <= 1,
            _ => true,
        }
    }

    /// Parses scalar text in this field's syntax (`3/2`, `7`, `2*t + 1/3`, ...).
    pub fn parse(spec: &FieldSpec, text: &str) -> Result<Scalar> {
        match spec.kind() {
            FieldKind::Rationals => {
                let q = parse_rational_text(text.trim())?;
                Scalar::from_rational(spec, q)
            }
            FieldKind::Prime(_) => {
                let q = parse_rational_text(text.trim())?;
                Scalar::from_rational(spec, q)
            }
            FieldKind::NumberField { var, .. } => {
                let coeffs = parse_poly_text(text, var)?;
                Scalar::from_poly(spec, coeffs)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(q) => write!(f, "{q}"),
            Value::Mod(r) => write!(f, "{r}"),
            Value::Poly(c) => {
                let var = match self.spec.kind() {
                    FieldKind::NumberField { var, .. } => var.as_str(),
                    _ => "t",
                };
                write!(f, "{}", poly_text(c, var))
            }
        }
    }
}

/// Least k ≥ 1 with c^k = 1. Prime fields factor p−1 and answer exactly; over ℚ
/// or a number field the powers are iterated up to `cap` and `Unknown` is
/// returned past it.
pub fn mult_order(c: &Scalar, cap: u64) -> Result<Order> {
    if c.is_zero() {
        return Err(Error::ZeroElement);
    }
    if c.is_one() {
        return Ok(Order::Finite(1));
    }
    if let Value::Mod(a) = &c.value {
        let p = c.prime();
        let mut order = p - 1;
        for (q, _) in factorize(p - 1) {
            while order.is_multiple_of(q) && pow_mod(*a, order / q, p) == 1 {
                order /= q;
            }
        }
        return Ok(Order::Finite(order));
    }
    let mut acc = c.clone();
    for k in 1..=cap {
        // invariant: acc = c^k at this point
        if acc.is_one() {
            return Ok(Order::Finite(k));
        }
        if k < cap {
            acc = acc.mul(c).expect("same spec");
        }
    }
    Ok(Order::Unknown)
}

// ---------------------------------------------------------------------------
// modular arithmetic helpers (p < 2^31, so u64 products never overflow)

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce_int_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    u64::try_from(m).expect("residue fits u64")
}

/// Deterministic Miller–Rabin; bases {2,3,5,7} decide primality below 3.2 × 10^18,
/// far past the 2^31 admission bound.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'base: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

// ---------------------------------------------------------------------------
// polynomial helpers (ascending coefficients, trailing zeros trimmed)

fn poly_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_deg(v: &[BigRational]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero));
    }
    poly_trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    poly_trim(out)
}

/// Remainder of `a` divided by monic `m`.
fn poly_rem(a: Vec<BigRational>, m: &[BigRational]) -> Vec<BigRational> {
    let mut r = poly_trim(a);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - dm;
        for (i, c) in m[..dm].iter().enumerate() {
            let idx = shift + i;
            let sub = c * &lead;
            r[idx] -= sub;
        }
        r = poly_trim(r);
    }
    r
}

/// Extended Euclid over ℚ[t]: returns (g, s) with s·a ≡ g (mod m).
fn poly_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    // Invariants: r0 = s0·a (mod m), r1 = s1·a (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = poly_trim(a.to_vec());
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, rem) = poly_divmod(&r0, &r1);
        let s2 = poly_add(&s0, &poly_mul(&q, &s1).iter().map(|c| -c).collect::<Vec<_>>());
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    (r0, s0)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = poly_deg(&rem) {
        if dr < db {
            break;
        }
        let coef = &rem[dr] / &lead;
        let shift = dr - db;
        quot[shift] = coef.clone();
        for (i, c) in b.iter().enumerate() {
            let sub = c * &coef;
            rem[shift + i] -= sub;
        }
        rem = poly_trim(rem);
    }
    (poly_trim(quot), rem)
}

fn poly_text(c: &[BigRational], var: &str) -> String {
    if c.is_empty() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (deg, coef) in c.iter().enumerate().rev() {
        if coef.is_zero() {
            continue;
        }
        let mag = coef.abs();
        if out.is_empty() {
            if coef.is_negative() {
                out.push('-');
            }
        } else if coef.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let unit_coef = mag.is_one() && deg > 0;
        if !unit_coef {
            out.push_str(&mag.to_string());
        }
        if deg > 0 {
            if !unit_coef {
                out.push('*');
            }
            out.push_str(var);
            if deg > 1 {
                out.push_str(&format!("^{deg}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_rational_text(t: &str) -> Result<BigRational> {
    let bad = |msg: &str| Error::Syntax { pos: 0, msg: msg.to_owned() };
    if let Some((n, d)) = t.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(BigRational::new(num, den))
    } else {
        let num: BigInt = t.trim().parse().map_err(|_| bad("bad integer"))?;
        Ok(BigRational::from(num))
    }
}

/// Parses `2*t^2 - t + 1/3` style polynomial text into ascending coefficients.
fn parse_poly_text(text: &str, var: &str) -> Result<Vec<BigRational>> {
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut add_term = |deg: usize, c: BigRational| {
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigRational::zero());
        }
        coeffs[deg] += c;
    };
    // Split on top-level +/- (no parentheses in scalar syntax).
    let bytes = text.as_bytes();
    let mut start = 0;
    let mut sign = BigRational::one();
    let mut terms: Vec<(BigRational, String)> = Vec::new();
    let mut i = 0;
    while i <= bytes.len() {
        let at_split = i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-';
        if at_split {
            let frag = text[start..i].trim();
            if !frag.is_empty() {
                terms.push((sign.clone(), frag.to_owned()));
            } else if start != 0 {
                // interior empty fragment means doubled signs: reject
                return Err(Error::Syntax { pos: i, msg: "misplaced sign".to_owned() });
            }
            if i < bytes.len() {
                sign = if bytes[i] == b'-' { -BigRational::one() } else { BigRational::one() };
            }
            start = i + 1;
        }
        i += 1;
    }
    if terms.is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty scalar".to_owned() });
    }
    for (sgn, frag) in terms {
        let (deg, coef) = parse_poly_term(&frag, var)?;
        add_term(deg, sgn * coef);
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// One term: `5`, `1/3`, `t`, `t^2`, `2*t`, `2/3*t^4`.
fn parse_poly_term(frag: &str, var: &str) -> Result<(usize, BigRational)> {
    let bad = |msg: String| Error::Syntax { pos: 0, msg };
    let frag = frag.trim();
    if let Some(idx) = frag.find(var) {
        let (coef_part, var_part) = frag.split_at(idx);
        let coef_part = coef_part.trim().trim_end_matches('*').trim();
        let coef = if coef_part.is_empty() {
            BigRational::one()
        } else {
            parse_rational_text(coef_part)?
        };
        let rest = &var_part[var.len()..];
        let rest = rest.trim();
        let deg = if rest.is_empty() {
            1
        } else if let Some(exp) = rest.strip_prefix('^') {
            exp.trim().parse::<usize>().map_err(|_| bad(format!("bad exponent `{exp}`")))?
        } else {
            return Err(bad(format!("unexpected trailing `{rest}`")));
        };
        Ok((deg, coef))
    } else {
        Ok((0, parse_rational_text(frag)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_canonical_forms() {
        let spec = FieldSpec::rationals();
        let a = Scalar::from_rational(&spec, q(2, 4)).unwrap();
        let b = Scalar::from_rational(&spec, q(1, 2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1/2");
        let c = Scalar::from_rational(&spec, q(-3, -6)).unwrap();
        assert_eq!(c, b);
    }

    #[test]
    fn prime_field_arithmetic_and_inverse() {
        let gf5 = FieldSpec::prime(5).unwrap();
        let two = Scalar::from_i64(&gf5, 2);
        let three = Scalar::from_i64(&gf5, 3);
        assert_eq!(two.add(&three).unwrap(), Scalar::zero(&gf5));
        assert_eq!(two.mul(&three).unwrap(), Scalar::one(&gf5));
        assert_eq!(two.inv().unwrap(), three);
        assert_eq!(Scalar::from_i64(&gf5, -2), three);
        assert!(Scalar::zero(&gf5).inv().is_err());
    }

    #[test]
    fn prime_spec_rejects_composites_and_huge() {
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert!(FieldSpec::prime(2147483647).is_ok()); // 2^31 - 1 is prime
    }

    #[test]
    fn golden_field_satisfies_phi_squared_is_phi_plus_one() {
        let g = FieldSpec::golden();
        let phi = Scalar::from_poly(&g, vec![BigRational::zero(), BigRational::one()]).unwrap();
        let lhs = phi.mul(&phi).unwrap();
        let rhs = phi.add(&Scalar::one(&g)).unwrap();
        assert_eq!(lhs, rhs);
        let inv = phi.inv().unwrap();
        assert!(phi.mul(&inv).unwrap().is_one());
        // 1/phi = phi - 1
        assert_eq!(inv, phi.sub(&Scalar::one(&g)).unwrap());
    }

    #[test]
    fn reducible_modulus_detected_on_inversion() {
        let m1: BigRational = -BigRational::one();
        let spec = FieldSpec::number_field("t", vec![m1, BigRational::zero(), BigRational::one()])
            .unwrap(); // t^2 - 1 = (t-1)(t+1)
        let t_minus_1 = Scalar::from_poly(
            &spec,
            vec![-BigRational::one(), BigRational::one()],
        )
        .unwrap();
        match t_minus_1.inv() {
            Err(Error::ReducibleModulus(_)) => {}
            other => panic!("expected ReducibleModulus, got {other:?}"),
        }
    }

    #[test]
    fn mult_order_examples() {
        let gf5 = FieldSpec::prime(5).unwrap();
        assert_eq!(mult_order(&Scalar::one(&gf5), 10).unwrap(), Order::Finite(1));
        assert_eq!(mult_order(&Scalar::from_i64(&gf5, 2), 10).unwrap(), Order::Finite(4));
        let q_spec = FieldSpec::rationals();
        assert_eq!(mult_order(&Scalar::from_i64(&q_spec, 2), 64).unwrap(), Order::Unknown);
        assert_eq!(mult_order(&Scalar::from_i64(&q_spec, -1), 64).unwrap(), Order::Finite(2));
        assert!(mult_order(&Scalar::zero(&gf5), 10).is_err());
    }

    #[test]
    fn mult_order_divisor_minimality() {
        let gf7 = FieldSpec::prime(7).unwrap();
        for a in 1..7 {
            let c = Scalar::from_i64(&gf7, a);
            let Order::Finite(k) = mult_order(&c, 100).unwrap() else { panic!() };
            assert!(c.pow(k as i64).unwrap().is_one());
            for d in 1..k {
                if k % d == 0 {
                    assert!(!c.pow(d as i64).unwrap().is_one(), "a={a} k={k} d={d}");
                }
            }
        }
    }

    #[test]
    fn field_spec_text_round_trips() {
        for text in ["Q", "GF(5)", "Q[t]/(t^2 - t - 1)"] {
            let spec = FieldSpec::parse(text).unwrap();
            let again = FieldSpec::parse(&spec.to_string()).unwrap();
            assert_eq!(spec, again);
        }
        assert_eq!(FieldSpec::parse("golden").unwrap(), FieldSpec::golden());
        assert_eq!(
            FieldSpec::parse("Q[t]/(t^2-t-1)").unwrap(),
            FieldSpec::golden()
        );
    }

    #[test]
    fn scalar_text_round_trips() {
        let q_spec = FieldSpec::rationals();
        for text in ["3/2", "-7", "0"] {
            let s = Scalar::parse(&q_spec, text).unwrap();
            assert_eq!(Scalar::parse(&q_spec, &s.to_string()).unwrap(), s);
        }
        let g = FieldSpec::golden();
        for text in ["2*t + 1/3", "t^1", "-t", "0", "5", "1/2*t - 1"] {
            let s = Scalar::parse(&g, text).unwrap();
            assert_eq!(Scalar::parse(&g, &s.to_string()).unwrap(), s, "text {text}");
        }
    }

    #[test]
    fn number_field_reduction_applies_modulus() {
        let g = FieldSpec::golden();
        // t^2 reduces to t + 1
        let t2 = Scalar::from_poly(
            &g,
            vec![BigRational::zero(), BigRational::zero(), BigRational::one()],
        )
        .unwrap();
        let expect = Scalar::parse(&g, "t + 1").unwrap();
        assert_eq!(t2, expect);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let q_spec = FieldSpec::rationals();
        let two = Scalar::from_i64(&q_spec, 2);
        assert_eq!(two.pow(-2).unwrap(), Scalar::from_rational(&q_spec, q(1, 4)).unwrap());
        assert_eq!(two.pow(0).unwrap(), Scalar::one(&q_spec));
    }
}
