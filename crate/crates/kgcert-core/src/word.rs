//! Freely reduced words over a named alphabet: parsing, arithmetic, cyclic
//! reduction, ball enumeration, and primitive-root extraction.
//!
//! A [`Word`] is a shared, immutable, freely reduced letter sequence with a cached
//! hash, so equality checks during pair searches are cheap. The total order on
//! words is length-then-lexicographic with `x < x⁻¹ < y < y⁻¹`, and every
//! enumeration in the crate follows it.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// A named free-group alphabet. Cheap to clone; compares by name list.
#[derive(Clone, Debug)]
pub struct Alphabet(Arc<Vec<String>>);

impl Alphabet {
    /// Builds an alphabet from generator names. Names must be nonempty
    /// alphanumeric strings, pairwise distinct, and not the reserved `1`.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::BadParameters("alphabet must be nonempty".to_owned()));
        }
        let mut seen = BTreeSet::new();
        for n in &names {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(Error::BadParameters(format!("bad generator name `{n}`")));
            }
            if n == "1" {
                return Err(Error::BadParameters("`1` is reserved for the identity".to_owned()));
            }
            if !seen.insert(n.clone()) {
                return Err(Error::BadParameters(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Alphabet(Arc::new(names)))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.0[g.0]
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.rank()).map(Generator)
    }

    pub fn lookup(&self, name: &str) -> Option<Generator> {
        self.0.iter().position(|n| n == name).map(Generator)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Alphabet {}
impl PartialOrd for Alphabet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Alphabet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}
impl core::hash::Hash for Alphabet {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

/// Index of a generator within its alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(pub usize);

/// One signed letter of a word. Letters order as `x < x⁻¹ < y < y⁻¹ < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    /// +1 or −1.
    pub sign: i8,
}

impl Letter {
    pub fn pos(gen: Generator) -> Self {
        Letter { gen, sign: 1 }
    }
    pub fn neg(gen: Generator) -> Self {
        Letter { gen, sign: -1 }
    }
    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, sign: -self.sign }
    }
    fn rank(self) -> (usize, u8) {
        (self.gen.0, u8::from(self.sign < 0))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

struct WordData {
    alphabet: Alphabet,
    letters: Vec<Letter>,
    hash: u64,
}

/// A freely reduced word. Immutable and cheap to clone.
#[derive(Clone)]
pub struct Word(Arc<WordData>);

fn letters_hash(letters: &[Letter]) -> u64 {
    // FNV-1a over (generator, sign) pairs; used only as an equality fast path.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for l in letters {
        for byte in (l.gen.0 as u64).to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        h ^= l.sign as u8 as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Pushes a letter onto a reduced prefix, cancelling if it inverts the last.
fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last().copied() == Some(l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

impl Word {
    pub fn identity(alphabet: &Alphabet) -> Self {
        Self::from_reduced(alphabet.clone(), Vec::new())
    }

    pub fn generator(alphabet: &Alphabet, g: Generator) -> Self {
        Self::from_reduced(alphabet.clone(), vec![Letter::pos(g)])
    }

    /// Builds a word from arbitrary letters, freely reducing.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(alphabet: &Alphabet, letters: I) -> Self {
        let mut buf = Vec::new();
        for l in letters {
            push_reduced(&mut buf, l);
        }
        Self::from_reduced(alphabet.clone(), buf)
    }

    fn from_reduced(alphabet: Alphabet, letters: Vec<Letter>) -> Self {
        let hash = letters_hash(&letters);
        Word(Arc::new(WordData { alphabet, letters, hash }))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.0.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0.letters
    }

    pub fn len(&self) -> usize {
        self.0.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_empty()
    }

    fn check(&self, other: &Word) -> Result<()> {
        if self.alphabet() == other.alphabet() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Freely reduced product.
    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check(other)?;
        let mut buf = self.0.letters.clone();
        for &l in other.letters() {
            push_reduced(&mut buf, l);
        }
        Ok(Self::from_reduced(self.0.alphabet.clone(), buf))
    }

    pub fn invert(&self) -> Word {
        let letters: Vec<Letter> = self.0.letters.iter().rev().map(|l| l.inverse()).collect();
        Self::from_reduced(self.0.alphabet.clone(), letters)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut buf = Vec::new();
        for _ in 0..k.unsigned_abs() {
            for &l in base.letters() {
                push_reduced(&mut buf, l);
            }
        }
        Self::from_reduced(self.0.alphabet.clone(), buf)
    }

    /// Conjugate `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Word) -> Result<Word> {
        other.invert().multiply(self)?.multiply(other)
    }

    /// Splits `self = u · w₀ · u⁻¹` with `w₀` cyclically reduced;
    /// returns `(w₀, u)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let letters = self.letters();
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let core = Self::from_reduced(self.0.alphabet.clone(), letters[lo..hi].to_vec());
        let conj = Self::from_reduced(self.0.alphabet.clone(), letters[..lo].to_vec());
        (core, conj)
    }

    /// Leading letter, if any.
    pub fn first(&self) -> Option<Letter> {
        self.0.letters.first().copied()
    }

    /// Trailing letter, if any.
    pub fn last(&self) -> Option<Letter> {
        self.0.letters.last().copied()
    }

    /// Parses word text over the given alphabet. Grammar:
    /// `word := term (('*')? term)*`,
    /// `term := ident ('^' int)? | '[' word ',' word ']' | '(' word ')'`,
    /// identifiers are maximal alphanumeric runs, `1` is the identity, and
    /// `[a,b]` abbreviates `a⁻¹b⁻¹ab`.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Word> {
        let tokens = lex(text)?;
        let mut p = Parser { alphabet, tokens: &tokens, at: 0, text_len: text.len() };
        let w = p.word()?;
        if p.at != p.tokens.len() {
            return Err(Error::Syntax {
                pos: p.tokens[p.at].pos,
                msg: format!("unexpected `{}`", p.tokens[p.at].kind.describe()),
            });
        }
        Ok(w)
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        self.0.hash == other.0.hash
            && self.0.letters == other.0.letters
            && self.0.alphabet == other.0.alphabet
    }
}
impl Eq for Word {}

impl core::hash::Hash for Word {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Word {
    /// Length-then-lexicographic, the enumeration order used everywhere.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .alphabet
            .cmp(&other.0.alphabet)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.0.letters.cmp(&other.0.letters))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl fmt::Display for Word {
    /// Run-length compressed text that reparses to the same word, e.g. `x^3*y^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        let letters = self.letters();
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = self.alphabet().name(l.gen);
            let exp = i64::from(l.sign) * run as i64;
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// lexer / parser

#[derive(Debug, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Int(i64),
    Star,
    Caret,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => s.clone(),
            TokenKind::Int(n) => n.to_string(),
            TokenKind::Star => "*".to_owned(),
            TokenKind::Caret => "^".to_owned(),
            TokenKind::LBracket => "[".to_owned(),
            TokenKind::RBracket => "]".to_owned(),
            TokenKind::LParen => "(".to_owned(),
            TokenKind::RParen => ")".to_owned(),
            TokenKind::Comma => ",".to_owned(),
        }
    }
}

struct Token {
    kind: TokenKind,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let kind = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'*' => TokenKind::Star,
            b'^' => TokenKind::Caret,
            b'[' => TokenKind::LBracket,
            b']' => TokenKind::RBracket,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b',' => TokenKind::Comma,
            b'-' => {
                // Only valid as the sign of an exponent: fold into an Int token.
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    return Err(Error::Syntax { pos: start, msg: "dangling `-`".to_owned() });
                }
                let n: i64 = text[digits_start..i].parse().map_err(|_| Error::Syntax {
                    pos: digits_start,
                    msg: "exponent out of range".to_owned(),
                })?;
                out.push(Token { kind: TokenKind::Int(-n), pos: start });
                continue;
            }
            c if c.is_ascii_alphanumeric() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let run = &text[start..i];
                let kind = if run.bytes().all(|b| b.is_ascii_digit()) && run != "1" {
                    match run.parse::<i64>() {
                        Ok(n) => TokenKind::Int(n),
                        Err(_) => {
                            return Err(Error::Syntax {
                                pos: start,
                                msg: "number out of range".to_owned(),
                            })
                        }
                    }
                } else {
                    TokenKind::Ident(run.to_owned())
                };
                out.push(Token { kind, pos: start });
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{}`", other as char),
                });
            }
        };
        out.push(Token { kind, pos: i });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    tokens: &'a [Token],
    at: usize,
    text_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.at).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.text_len, |t| t.pos)
    }

    fn expect(&mut self, kind: &TokenKind) -> Result<()> {
        if self.peek() == Some(kind) {
            self.at += 1;
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: self.pos(),
                msg: format!("expected `{}`", kind.describe()),
            })
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut acc = Word::identity(self.alphabet);
        let mut first = true;
        loop {
            match self.peek() {
                Some(TokenKind::Star) if !first => {
                    self.at += 1;
                    let t = self.term()?;
                    acc = acc.multiply(&t).expect("same alphabet");
                }
                Some(TokenKind::Ident(_) | TokenKind::LBracket | TokenKind::LParen) => {
                    let t = self.term()?;
                    acc = acc.multiply(&t).expect("same alphabet");
                }
                _ if first => {
                    return Err(Error::Syntax {
                        pos: self.pos(),
                        msg: "expected a word".to_owned(),
                    });
                }
                _ => return Ok(acc),
            }
            first = false;
        }
    }

    fn term(&mut self) -> Result<Word> {
        match self.peek() {
            Some(TokenKind::Ident(name)) => {
                let name = name.clone();
                let pos = self.pos();
                self.at += 1;
                let base = if name == "1" {
                    Word::identity(self.alphabet)
                } else {
                    match self.alphabet.lookup(&name) {
                        Some(g) => Word::generator(self.alphabet, g),
                        None => {
                            let _ = pos;
                            return Err(Error::UnknownGenerator(name));
                        }
                    }
                };
                if self.peek() == Some(&TokenKind::Caret) {
                    self.at += 1;
                    let exp = match self.peek() {
                        Some(&TokenKind::Int(n)) => n,
                        Some(TokenKind::Ident(s)) if s == "1" => 1,
                        _ => {
                            return Err(Error::Syntax {
                                pos: self.pos(),
                                msg: "expected an integer exponent".to_owned(),
                            });
                        }
                    };
                    self.at += 1;
                    Ok(base.pow(exp))
                } else {
                    Ok(base)
                }
            }
            Some(TokenKind::LBracket) => {
                self.at += 1;
                let a = self.word()?;
                self.expect(&TokenKind::Comma)?;
                let b = self.word()?;
                self.expect(&TokenKind::RBracket)?;
                // [a, b] = a⁻¹ b⁻¹ a b
                let ai = a.invert();
                let bi = b.invert();
                Ok(ai.multiply(&bi)?.multiply(&a)?.multiply(&b)?)
            }
            Some(TokenKind::LParen) => {
                self.at += 1;
                let w = self.word()?;
                self.expect(&TokenKind::RParen)?;
                Ok(w)
            }
            _ => Err(Error::Syntax { pos: self.pos(), msg: "expected a term".to_owned() }),
        }
    }
}

// ---------------------------------------------------------------------------
// enumeration and string algorithms

/// Number of reduced words of length ≤ `radius` over an alphabet of the given
/// rank, as an exact u128.
pub fn ball_size(rank: usize, radius: usize) -> u128 {
    let dirs = 2 * rank as u128;
    let mut total: u128 = 1;
    let mut layer: u128 = 1;
    for k in 1..=radius {
        layer = if k == 1 { dirs } else { layer * (dirs - 1) };
        total += layer;
    }
    total
}

/// All freely reduced words of length ≤ `radius`, in length-then-lexicographic
/// order. Errors with [`Error::BudgetExceeded`] if the count would exceed `cap`.
pub fn ball_enumerate(alphabet: &Alphabet, radius: usize, cap: u128) -> Result<Vec<Word>> {
    let needed = ball_size(alphabet.rank(), radius);
    if needed > cap {
        return Err(Error::BudgetExceeded { needed, cap });
    }
    let mut letters: Vec<Letter> = Vec::new();
    for g in alphabet.generators() {
        letters.push(Letter::pos(g));
        letters.push(Letter::neg(g));
    }
    letters.sort();

    let mut out = vec![Word::identity(alphabet)];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 1..=radius {
        let mut next = Vec::new();
        for prefix in &layer {
            for &l in &letters {
                if prefix.last().copied() == Some(l.inverse()) {
                    continue;
                }
                let mut w = prefix.clone();
                w.push(l);
                next.push(w);
            }
        }
        for w in &next {
            out.push(Word::from_reduced(alphabet.clone(), w.clone()));
        }
        layer = next;
    }
    Ok(out)
}

/// The set of generators appearing (with either sign) in any of the words.
pub fn involved_generators(words: &[Word]) -> BTreeSet<Generator> {
    let mut out = BTreeSet::new();
    for w in words {
        for l in w.letters() {
            out.insert(l.gen);
        }
    }
    out
}

/// Writes `w = u^k` with `u` primitive (not a proper power) and `k` maximal.
/// Cyclically reduces, finds the smallest period of the cyclic core with a
/// prefix-function scan, and conjugates back.
pub fn primitive_root(w: &Word) -> Result<(Word, usize)> {
    if w.is_identity() {
        return Err(Error::IdentityInput);
    }
    let (core, conj) = w.cyclic_reduce();
    let letters = core.letters();
    let n = letters.len();
    // Prefix function (KMP failure table); smallest period is n − f[n−1].
    let mut f = vec![0usize; n];
    for i in 1..n {
        let mut j = f[i - 1];
        while j > 0 && letters[i] != letters[j] {
            j = f[j - 1];
        }
        if letters[i] == letters[j] {
            j += 1;
        }
        f[i] = j;
    }
    let p = n - f[n - 1];
    let (root_core, k) = if n % p == 0 && p < n {
        (Word::from_reduced(w.alphabet().clone(), letters[..p].to_vec()), n / p)
    } else {
        (core, 1)
    };
    let root = conj.multiply(&root_core)?.multiply(&conj.invert())?;
    Ok((root, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(&ab(), text).unwrap()
    }

    #[test]
    fn parse_cancels_adjacent_inverses() {
        assert!(w("x*x^-1").is_identity());
        assert_eq!(w("x*y*y^-1*x"), w("x^2"));
    }

    #[test]
    fn commutator_sugar_expands() {
        let c = w("[x,y]");
        assert_eq!(c, w("x^-1*y^-1*x*y"));
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn exponents_expand_to_letters() {
        let v = w("x^3*y^-2");
        let ls = v.letters();
        assert_eq!(ls.len(), 5);
        assert!(ls[..3].iter().all(|l| l.sign == 1 && l.gen == Generator(0)));
        assert!(ls[3..].iter().all(|l| l.sign == -1 && l.gen == Generator(1)));
    }

    #[test]
    fn grammar_accepts_juxtaposition_and_parens() {
        assert_eq!(w("x y"), w("x*y"));
        assert_eq!(w("(x*y)"), w("x*y"));
        let c = w("[x,y]");
        let expect = c
            .invert()
            .multiply(&w("y^-1"))
            .unwrap()
            .multiply(&c)
            .unwrap()
            .multiply(&w("y"))
            .unwrap();
        assert_eq!(w("[[x,y],y]"), expect);
        assert!(w("1").is_identity());
        assert!(w("x^0").is_identity());
        assert_eq!(w("x^1"), w("x"));
    }

    #[test]
    fn grammar_rejects_malformed_input() {
        assert!(matches!(Word::parse(&ab(), "x^"), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse(&ab(), "x*"), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse(&ab(), "(x"), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse(&ab(), ""), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse(&ab(), "x+y"), Err(Error::Syntax { .. })));
        // Exponents attach to identifiers only, never to groups or commutators.
        assert!(matches!(Word::parse(&ab(), "(x*y)^2"), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse(&ab(), "[x,y]^2"), Err(Error::Syntax { .. })));
        // `xy` is one identifier, not a product.
        assert!(matches!(Word::parse(&ab(), "xy"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(Word::parse(&ab(), "z"), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn multiply_and_invert_examples() {
        let a = w("x*y");
        let b = w("y^-1*x");
        assert_eq!(a.multiply(&b).unwrap(), w("x^2"));
        assert_eq!(w("x*y^-1").invert(), w("y*x^-1"));
        assert!(a.multiply(&a.invert()).unwrap().is_identity());
    }

    #[test]
    fn cyclic_reduce_peels_conjugation() {
        let abc = Alphabet::new(["x", "y", "z"]).unwrap();
        let v = Word::parse(&abc, "z*x^-2*y^-3*x^2*y^3*z^-1").unwrap();
        let (core, conj) = v.cyclic_reduce();
        assert_eq!(core, Word::parse(&abc, "x^-2*y^-3*x^2*y^3").unwrap());
        assert_eq!(conj, Word::parse(&abc, "z").unwrap());
        let rebuilt = conj.multiply(&core).unwrap().multiply(&conj.invert()).unwrap();
        assert_eq!(rebuilt, v);
    }

    #[test]
    fn cyclic_reduce_of_cyclically_reduced_word_is_identity_conjugator() {
        let v = w("x*y");
        let (core, conj) = v.cyclic_reduce();
        assert_eq!(core, v);
        assert!(conj.is_identity());
    }

    #[test]
    fn ball_counts_match_closed_form() {
        assert_eq!(ball_size(2, 0), 1);
        assert_eq!(ball_size(2, 1), 5);
        assert_eq!(ball_size(2, 3), 53);
        let b0 = ball_enumerate(&ab(), 0, 1 << 20).unwrap();
        assert_eq!(b0.len(), 1);
        let b1 = ball_enumerate(&ab(), 1, 1 << 20).unwrap();
        assert_eq!(b1.len(), 5);
        let b3 = ball_enumerate(&ab(), 3, 1 << 20).unwrap();
        assert_eq!(b3.len(), 53);
    }

    #[test]
    fn ball_is_sorted_and_duplicate_free() {
        let b = ball_enumerate(&ab(), 4, 1 << 20).unwrap();
        for pair in b.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn ball_respects_budget() {
        match ball_enumerate(&ab(), 10, 100) {
            Err(Error::BudgetExceeded { needed, cap }) => {
                assert_eq!(cap, 100);
                assert!(needed > 100);
            }
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn involved_generators_examples() {
        let empty = involved_generators(&[w("1")]);
        assert!(empty.is_empty());
        let both = involved_generators(&[w("x^-2*y^-3*x^2*y^3")]);
        assert_eq!(both.len(), 2);
        let one = involved_generators(&[w("x^5")]);
        assert_eq!(one.into_iter().collect::<Vec<_>>(), vec![Generator(0)]);
    }

    #[test]
    fn primitive_root_examples() {
        let (u, k) = primitive_root(&w("x^3")).unwrap();
        assert_eq!((u, k), (w("x"), 3));
        let (u, k) = primitive_root(&w("[x,y]")).unwrap();
        assert_eq!((u, k), (w("[x,y]"), 1));
        let (u, k) = primitive_root(&w("y*x^4*y^-1")).unwrap();
        assert_eq!((u, k), (w("y*x*y^-1"), 4));
        assert!(primitive_root(&w("1")).is_err());
    }

    #[test]
    fn primitive_root_reconstructs_word() {
        let cases = [
            w("x"),
            w("x*y*x*y"),
            w("x*y^-1").pow(6),
            w("y^-2*x^3*y^2"),
            w("[x,y]").pow(2),
        ];
        for v in cases {
            let (u, k) = primitive_root(&v).unwrap();
            assert_eq!(u.pow(k as i64), v, "failed on {v}");
        }
    }

    #[test]
    fn word_order_is_length_then_lex() {
        assert!(w("1") < w("x"));
        assert!(w("x") < w("x^-1"));
        assert!(w("x^-1") < w("y"));
        assert!(w("y^-1") < w("x^2"));
        assert!(w("x^2") < w("x*y"));
    }

    #[test]
    fn display_round_trips() {
        for text in ["1", "x", "x^3*y^-2", "[x,y]", "y*x^4*y^-1", "x^-1*y*x"] {
            let v = w(text);
            let again = Word::parse(&ab(), &v.to_string()).unwrap();
            assert_eq!(v, again, "failed on {text}");
        }
    }
}
