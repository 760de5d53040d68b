//! Compiler for the universal sentences characterizing resistant groups.
//!
//! A group G is k-resistant when no single non-monomial element of kG
//! generates the improper ideal.  Every way the ideal of r = Σᵢ cᵢgᵢ could
//! contain 1 is described by an expression Σⱼ c_{m+j}·g_{m+j}·r·g_{m+m′+j}
//! together with the pattern of coincidences among the products
//! g_{m+j}·gᵢ·g_{m+m′+j}: a partition of the (i, j) grid with one block
//! whose common value is 1 and whose coefficient sum is 1, all other blocks
//! summing to 0.  Negating the conjunction describing each (partition,
//! distinguished block) configuration yields universal sentences in mixed
//! group and field variables; because every atom mentions only one variable
//! kind, each sentence splits into a disjunction of a group-only and a
//! field-only universally quantified part, and quantifying over a class of
//! finite fields lets the field parts be discharged by enumeration.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{FieldSpec, Scalar};
use crate::{Error, Result};

/// A partition of the m × m′ index grid with one distinguished block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    m: usize,
    m_prime: usize,
    /// Blocks of grid cells (i, j), 1 ≤ i ≤ m, 1 ≤ j ≤ m′; each block is
    /// sorted and blocks are ordered by first appearance in the j-major
    /// cell order.
    blocks: Vec<Vec<(usize, usize)>>,
    /// Index of the distinguished block.
    distinguished: usize,
}

impl PartitionSpec {
    /// Validates that the blocks are nonempty, disjoint, and cover the grid.
    pub fn new(
        m: usize,
        m_prime: usize,
        blocks: Vec<Vec<(usize, usize)>>,
        distinguished: usize,
    ) -> Result<Self> {
        if m < 2 || m_prime < 2 {
            return Err(Error::BadParameters(
                "the grid needs m >= 2 and m' >= 2".into(),
            ));
        }
        if distinguished >= blocks.len() {
            return Err(Error::BadParameters(
                "the distinguished block index is out of range".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::BadParameters("blocks must be nonempty".into()));
            }
            for &(i, j) in block {
                if i < 1 || i > m || j < 1 || j > m_prime || !seen.insert((i, j)) {
                    return Err(Error::BadParameters(
                        "blocks must partition the index grid".into(),
                    ));
                }
            }
        }
        if seen.len() != m * m_prime {
            return Err(Error::BadParameters(
                "blocks must cover the index grid".into(),
            ));
        }
        Ok(PartitionSpec { m, m_prime, blocks, distinguished })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn m_prime(&self) -> usize {
        self.m_prime
    }

    pub fn blocks(&self) -> &[Vec<(usize, usize)>] {
        &self.blocks
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }
}

/// Product of group variables by 1-based index; the empty product is the
/// group identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTerm(pub Vec<usize>);

/// Sum of monomials, each a product of field variables by 1-based index;
/// the empty sum is 0 and the empty monomial is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldTerm(pub Vec<Vec<usize>>);

/// An equation between two terms of one variable kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Group(GroupTerm, GroupTerm),
    Field(FieldTerm, FieldTerm),
}

impl Atom {
    pub fn is_group(&self) -> bool {
        matches!(self, Atom::Group(..))
    }
}

/// An atom or its negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Literal {
    pub negated: bool,
    pub atom: Atom,
}

/// Boolean combination of atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

/// One universally quantified sentence over group variables g1..gn and
/// field variables c1..cn′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sentence {
    pub m: usize,
    pub m_prime: usize,
    /// n = m + 2m′.
    pub group_vars: usize,
    /// n′ = m + m′.
    pub field_vars: usize,
    /// The negated conjunction describing one collapse configuration.
    pub body: Formula,
}

/// A sentence in split form: (∀ḡ ∨ group literals) ∨ (∀c̄ ∨ field literals).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub group_vars: usize,
    pub field_vars: usize,
    pub group_part: Vec<Literal>,
    pub field_part: Vec<Literal>,
}

/// A group-only universal sentence left after filtering field parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSentence {
    pub group_vars: usize,
    pub clause: Vec<Literal>,
}

/// The number of partitions of an n-element set.
pub fn bell_number(n: usize) -> u128 {
    // Bell triangle: each row starts with the previous row's last entry and
    // adds the neighbor above to the left; B(n) is the first entry of row n.
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("nonempty row"));
        for &above in &row {
            let last = *next.last().expect("nonempty");
            next.push(last + above);
        }
        row = next;
    }
    row[0]
}

/// All set partitions of {0, …, cells−1} as restricted-growth strings, in
/// lexicographic order.
fn growth_strings(cells: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(cells);
    fn go(cells: usize, prefix: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == cells {
            out.push(prefix.clone());
            return;
        }
        for next in 0..=max + 1 {
            prefix.push(next);
            go(cells, prefix, max.max(next), out);
            prefix.pop();
        }
    }
    if cells == 0 {
        return vec![Vec::new()];
    }
    prefix.push(0);
    go(cells, &mut prefix, 0, &mut out);
    out
}

/// Enumerates every (partition of the m × m′ grid, distinguished block)
/// configuration, in deterministic order.
///
/// Partitions are generated as restricted-growth strings over the j-major
/// cell order, so each appears exactly once; within a partition every block
/// is distinguished in turn.  `partition_cap` bounds the Bell number before
/// any enumeration starts.
pub fn enumerate_configs(
    m: usize,
    m_prime: usize,
    partition_cap: u128,
) -> Result<Vec<PartitionSpec>> {
    if m < 2 || m_prime < 2 {
        return Err(Error::BadParameters(
            "the grid needs m >= 2 and m' >= 2".into(),
        ));
    }
    let cells_count = m * m_prime;
    let bell = bell_number(cells_count);
    if bell > partition_cap {
        return Err(Error::CapExceeded { needed: bell, cap: partition_cap });
    }
    let mut cells = Vec::with_capacity(cells_count);
    for j in 1..=m_prime {
        for i in 1..=m {
            cells.push((i, j));
        }
    }
    let mut out = Vec::new();
    for code in growth_strings(cells_count) {
        let block_count = code.iter().copied().max().unwrap_or(0) + 1;
        let mut blocks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); block_count];
        for (cell, &b) in cells.iter().zip(&code) {
            blocks[b].push(*cell);
        }
        for d in 0..block_count {
            out.push(PartitionSpec::new(m, m_prime, blocks.clone(), d)?);
        }
    }
    Ok(out)
}

/// The product g_{m+j} · g_i · g_{m+m′+j} attached to grid cell (i, j).
fn cell_term(spec: &PartitionSpec, cell: (usize, usize)) -> GroupTerm {
    let (i, j) = cell;
    GroupTerm(vec![spec.m + j, i, spec.m + spec.m_prime + j])
}

/// The coefficient monomial c_{m+j} · c_i attached to grid cell (i, j).
fn cell_monomial(spec: &PartitionSpec, cell: (usize, usize)) -> Vec<usize> {
    let (i, j) = cell;
    vec![spec.m + j, i]
}

/// Builds the sentence negating one collapse configuration.
///
/// The conjunction asserts, in order: the support elements g1..gm are
/// distinct; the coefficients c1..cm are nonzero; cell products agree within
/// each block and differ across every pair of cells in different blocks; the
/// distinguished block's common product is the identity; its coefficient
/// sum is 1; every other block's coefficient sum is 0.  The sentence is the
/// negation of that conjunction.  Configurations inconsistent with any group
/// or field are still emitted: their negations hold vacuously and are
/// harmless.
pub fn build_sentence(spec: &PartitionSpec) -> Sentence {
    let mut parts: Vec<Formula> = Vec::new();
    let positive = |atom: Atom| Formula::Atom(atom);
    let negative = |atom: Atom| Formula::Not(Box::new(Formula::Atom(atom)));

    for a in 1..=spec.m {
        for b in (a + 1)..=spec.m {
            parts.push(negative(Atom::Group(GroupTerm(vec![a]), GroupTerm(vec![b]))));
        }
    }
    for a in 1..=spec.m {
        parts.push(negative(Atom::Field(FieldTerm(vec![vec![a]]), FieldTerm(vec![]))));
    }
    for block in &spec.blocks {
        let rep = cell_term(spec, block[0]);
        for &cell in &block[1..] {
            parts.push(positive(Atom::Group(rep.clone(), cell_term(spec, cell))));
        }
    }
    for (p, left) in spec.blocks.iter().enumerate() {
        for right in &spec.blocks[p + 1..] {
            for &a in left {
                for &b in right {
                    parts.push(negative(Atom::Group(
                        cell_term(spec, a),
                        cell_term(spec, b),
                    )));
                }
            }
        }
    }
    let dist = &spec.blocks[spec.distinguished];
    parts.push(positive(Atom::Group(cell_term(spec, dist[0]), GroupTerm(vec![]))));
    parts.push(positive(Atom::Field(
        FieldTerm(dist.iter().map(|&c| cell_monomial(spec, c)).collect()),
        FieldTerm(vec![vec![]]),
    )));
    for (b, block) in spec.blocks.iter().enumerate() {
        if b == spec.distinguished {
            continue;
        }
        parts.push(positive(Atom::Field(
            FieldTerm(block.iter().map(|&c| cell_monomial(spec, c)).collect()),
            FieldTerm(vec![]),
        )));
    }

    Sentence {
        m: spec.m,
        m_prime: spec.m_prime,
        group_vars: spec.m + 2 * spec.m_prime,
        field_vars: spec.m + spec.m_prime,
        body: Formula::Not(Box::new(Formula::And(parts))),
    }
}

/// Reads the literal list out of a negated-conjunction body.
fn extract_literals(body: &Formula) -> Result<Vec<Literal>> {
    let Formula::Not(inner) = body else {
        return Err(Error::BadParameters(
            "the sentence body is not a negated conjunction".into(),
        ));
    };
    let Formula::And(items) = inner.as_ref() else {
        return Err(Error::BadParameters(
            "the sentence body is not a negated conjunction".into(),
        ));
    };
    items
        .iter()
        .map(|item| match item {
            Formula::Atom(atom) => Ok(Literal { negated: false, atom: atom.clone() }),
            Formula::Not(sub) => match sub.as_ref() {
                Formula::Atom(atom) => Ok(Literal { negated: true, atom: atom.clone() }),
                _ => Err(Error::BadParameters(
                    "conjuncts must be atoms or negated atoms".into(),
                )),
            },
            _ => Err(Error::BadParameters(
                "conjuncts must be atoms or negated atoms".into(),
            )),
        })
        .collect()
}

/// Converts a negated-conjunction sentence into its split form.
///
/// De Morgan turns ¬(L₁ ∧ … ∧ L_k) into ¬L₁ ∨ … ∨ ¬L_k; every literal
/// mentions only group or only field variables, so sorting the disjuncts by
/// kind and passing the disjunction through the two quantifier blocks is an
/// equivalence.  The result is a single pair per input sentence.
pub fn split_disjunction(sentence: &Sentence) -> Result<Vec<SplitPair>> {
    let literals = extract_literals(&sentence.body)?;
    let mut group_part = Vec::new();
    let mut field_part = Vec::new();
    for lit in literals {
        let flipped = Literal { negated: !lit.negated, atom: lit.atom };
        if flipped.atom.is_group() {
            group_part.push(flipped);
        } else {
            field_part.push(flipped);
        }
    }
    Ok(vec![SplitPair {
        group_vars: sentence.group_vars,
        field_vars: sentence.field_vars,
        group_part,
        field_part,
    }])
}

/// Runs `pred` over every base^arity assignment; true when all pass.
fn all_assignments(
    base: usize,
    arity: usize,
    mut pred: impl FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    let mut digits = vec![0usize; arity];
    loop {
        if !pred(&digits)? {
            return Ok(false);
        }
        let mut i = 0;
        loop {
            if i == arity {
                return Ok(true);
            }
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// A finite group given by its multiplication table; element 0 is the
/// identity.  Small models like these decide the group parts of sentences
/// by exhaustion.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl SmallGroup {
    /// The cyclic group of the given order.
    pub fn cyclic(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadParameters("a group has at least one element".into()));
        }
        let mul = (0..order)
            .map(|a| (0..order).map(|b| (a + b) % order).collect())
            .collect();
        let inv = (0..order).map(|a| (order - a) % order).collect();
        Ok(SmallGroup { mul, inv })
    }

    /// The Klein four-group.
    pub fn klein_four() -> Self {
        let mul = (0..4usize).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        SmallGroup { mul, inv: vec![0, 1, 2, 3] }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// The inverse table, exposed for table-based sanity checks.
    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }
}

fn eval_group_term(group: &SmallGroup, term: &GroupTerm, assign: &[usize]) -> Result<usize> {
    let mut acc = 0usize;
    for &var in &term.0 {
        let value = var
            .checked_sub(1)
            .and_then(|idx| assign.get(idx))
            .ok_or_else(|| Error::BadParameters("group variable out of range".into()))?;
        acc = group.mul(acc, *value);
    }
    Ok(acc)
}

fn eval_group_literal(group: &SmallGroup, lit: &Literal, assign: &[usize]) -> Result<bool> {
    let Atom::Group(lhs, rhs) = &lit.atom else {
        return Err(Error::BadParameters(
            "field atom in a group-only clause".into(),
        ));
    };
    let equal = eval_group_term(group, lhs, assign)? == eval_group_term(group, rhs, assign)?;
    Ok(equal != lit.negated)
}

fn eval_field_term(
    spec: &FieldSpec,
    term: &FieldTerm,
    elems: &[Scalar],
    digits: &[usize],
) -> Result<Scalar> {
    let mut sum = Scalar::zero(spec);
    for monomial in &term.0 {
        let mut prod = Scalar::one(spec);
        for &var in monomial {
            let value = var
                .checked_sub(1)
                .and_then(|idx| digits.get(idx))
                .ok_or_else(|| Error::BadParameters("field variable out of range".into()))?;
            prod = prod.mul(&elems[*value])?;
        }
        sum = sum.add(&prod)?;
    }
    Ok(sum)
}

fn eval_field_literal(
    spec: &FieldSpec,
    lit: &Literal,
    elems: &[Scalar],
    digits: &[usize],
) -> Result<bool> {
    let Atom::Field(lhs, rhs) = &lit.atom else {
        return Err(Error::BadParameters(
            "group atom in a field-only clause".into(),
        ));
    };
    let equal =
        eval_field_term(spec, lhs, elems, digits)? == eval_field_term(spec, rhs, elems, digits)?;
    Ok(equal != lit.negated)
}

/// Whether the disjunction of group literals holds for every assignment of
/// the given variables in the small group.
pub fn group_clause_valid(
    group: &SmallGroup,
    group_vars: usize,
    clause: &[Literal],
) -> Result<bool> {
    all_assignments(group.order(), group_vars, |assign| {
        for lit in clause {
            if eval_group_literal(group, lit, assign)? {
                return Ok(true);
            }
        }
        Ok(false)
    })
}

/// Whether the disjunction of field literals holds for every assignment
/// over the (finite) field.
pub fn field_clause_valid(
    spec: &FieldSpec,
    field_vars: usize,
    clause: &[Literal],
) -> Result<bool> {
    if spec.size().is_none() {
        return Err(Error::InfiniteFieldRejected);
    }
    let elems = spec.enumerate()?;
    all_assignments(elems.len(), field_vars, |digits| {
        for lit in clause {
            if eval_field_literal(spec, lit, &elems, digits)? {
                return Ok(true);
            }
        }
        Ok(false)
    })
}

/// Whether the doubly-quantified sentence holds over a small group and a
/// finite field.
///
/// The body is a negated conjunction of variable-disjoint literals, so
/// ∀ḡ∀c̄ ¬(G(ḡ) ∧ C(c̄)) is false exactly when both conjunction halves are
/// separately satisfiable; the two searches run independently.
pub fn sentence_holds(
    group: &SmallGroup,
    spec: &FieldSpec,
    sentence: &Sentence,
) -> Result<bool> {
    if spec.size().is_none() {
        return Err(Error::InfiniteFieldRejected);
    }
    let literals = extract_literals(&sentence.body)?;
    let group_lits: Vec<&Literal> = literals.iter().filter(|l| l.atom.is_group()).collect();
    let field_lits: Vec<&Literal> = literals.iter().filter(|l| !l.atom.is_group()).collect();

    let group_satisfiable = !all_assignments(group.order(), sentence.group_vars, |assign| {
        for lit in &group_lits {
            if !eval_group_literal(group, lit, assign)? {
                return Ok(true);
            }
        }
        Ok(false)
    })?;
    let elems = spec.enumerate()?;
    let field_satisfiable = !all_assignments(elems.len(), sentence.field_vars, |digits| {
        for lit in &field_lits {
            if !eval_field_literal(spec, lit, &elems, digits)? {
                return Ok(true);
            }
        }
        Ok(false)
    })?;
    Ok(!(group_satisfiable && field_satisfiable))
}

/// Discharges field parts over a class of finite fields, keeping the group
/// parts of the pairs whose field part fails in some listed field.
///
/// A pair whose field disjunction is valid over every listed field imposes
/// no group condition and is dropped; infinite fields cannot be checked by
/// exhaustion and are rejected outright.
pub fn field_filter(
    pairs: &[SplitPair],
    fields: &[FieldSpec],
) -> Result<Vec<GroupSentence>> {
    for spec in fields {
        if spec.size().is_none() {
            return Err(Error::InfiniteFieldRejected);
        }
    }
    let mut out = Vec::new();
    for pair in pairs {
        let mut valid_everywhere = true;
        for spec in fields {
            if !field_clause_valid(spec, pair.field_vars, &pair.field_part)? {
                valid_everywhere = false;
                break;
            }
        }
        if !valid_everywhere {
            out.push(GroupSentence {
                group_vars: pair.group_vars,
                clause: pair.group_part.clone(),
            });
        }
    }
    Ok(out)
}

/// Output syntax for [`emit_pairs`] and [`emit_group_sentences`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    /// Parenthesized quantifier/Boolean syntax with `=` and `/=` atoms.
    Native,
    /// Untyped first-order syntax for standard provers.
    Prover,
}

fn group_term_native(term: &GroupTerm) -> String {
    match term.0.as_slice() {
        [] => "1".into(),
        [v] => format!("g{v}"),
        vars => {
            let inner: Vec<String> = vars.iter().map(|v| format!("g{v}")).collect();
            format!("(* {})", inner.join(" "))
        }
    }
}

fn field_monomial_native(monomial: &[usize]) -> String {
    match monomial {
        [] => "1".into(),
        [v] => format!("c{v}"),
        vars => {
            let inner: Vec<String> = vars.iter().map(|v| format!("c{v}")).collect();
            format!("(* {})", inner.join(" "))
        }
    }
}

fn field_term_native(term: &FieldTerm) -> String {
    match term.0.as_slice() {
        [] => "0".into(),
        [monomial] => field_monomial_native(monomial),
        monomials => {
            let inner: Vec<String> =
                monomials.iter().map(|m| field_monomial_native(m)).collect();
            format!("(+ {})", inner.join(" "))
        }
    }
}

fn literal_native(lit: &Literal) -> String {
    let op = if lit.negated { "/=" } else { "=" };
    match &lit.atom {
        Atom::Group(lhs, rhs) => {
            format!("({op} {} {})", group_term_native(lhs), group_term_native(rhs))
        }
        Atom::Field(lhs, rhs) => {
            format!("({op} {} {})", field_term_native(lhs), field_term_native(rhs))
        }
    }
}

fn quantified_native(prefix: &str, vars: usize, clause: &[Literal]) -> String {
    let names: Vec<String> = (1..=vars).map(|v| format!("{prefix}{v}")).collect();
    let lits: Vec<String> = clause.iter().map(literal_native).collect();
    let body = if lits.is_empty() {
        "(or)".into()
    } else {
        format!("(or {})", lits.join(" "))
    };
    format!("(forall ({}) {})", names.join(" "), body)
}

fn group_term_prover(term: &GroupTerm) -> String {
    let mut acc: Option<String> = None;
    for &v in &term.0 {
        let var = format!("G{v}");
        acc = Some(match acc {
            None => var,
            Some(prev) => format!("mul({prev},{var})"),
        });
    }
    acc.unwrap_or_else(|| "e".into())
}

fn field_term_prover(term: &FieldTerm) -> String {
    let monomial = |vars: &[usize]| -> String {
        let mut acc: Option<String> = None;
        for &v in vars {
            let var = format!("C{v}");
            acc = Some(match acc {
                None => var,
                Some(prev) => format!("mul({prev},{var})"),
            });
        }
        acc.unwrap_or_else(|| "one".into())
    };
    let mut acc: Option<String> = None;
    for vars in &term.0 {
        let mono = monomial(vars);
        acc = Some(match acc {
            None => mono,
            Some(prev) => format!("add({prev},{mono})"),
        });
    }
    acc.unwrap_or_else(|| "zero".into())
}

fn literal_prover(lit: &Literal) -> String {
    let op = if lit.negated { "!=" } else { "=" };
    match &lit.atom {
        Atom::Group(lhs, rhs) => {
            format!("{} {op} {}", group_term_prover(lhs), group_term_prover(rhs))
        }
        Atom::Field(lhs, rhs) => {
            format!("{} {op} {}", field_term_prover(lhs), field_term_prover(rhs))
        }
    }
}

fn quantified_prover(prefix: &str, vars: usize, clause: &[Literal]) -> String {
    let names: Vec<String> = (1..=vars).map(|v| format!("{prefix}{v}")).collect();
    let body = if clause.is_empty() {
        "$false".into()
    } else {
        let lits: Vec<String> = clause.iter().map(literal_prover).collect();
        lits.join(" | ")
    };
    format!("(! [{}] : ({}))", names.join(","), body)
}

/// Renders split pairs, one sentence per line, in the chosen syntax.
pub fn emit_pairs(pairs: &[SplitPair], format: EmitFormat) -> String {
    let mut out = String::new();
    for (index, pair) in pairs.iter().enumerate() {
        match format {
            EmitFormat::Native => {
                out.push_str(&format!(
                    "(or {} {})\n",
                    quantified_native("g", pair.group_vars, &pair.group_part),
                    quantified_native("c", pair.field_vars, &pair.field_part),
                ));
            }
            EmitFormat::Prover => {
                out.push_str(&format!(
                    "fof(config_{}, axiom, ({} | {})).\n",
                    index + 1,
                    quantified_prover("G", pair.group_vars, &pair.group_part),
                    quantified_prover("C", pair.field_vars, &pair.field_part),
                ));
            }
        }
    }
    out
}

/// Renders group-only sentences, one per line, in the chosen syntax.
pub fn emit_group_sentences(sentences: &[GroupSentence], format: EmitFormat) -> String {
    let mut out = String::new();
    for (index, s) in sentences.iter().enumerate() {
        match format {
            EmitFormat::Native => {
                out.push_str(&format!(
                    "{}\n",
                    quantified_native("g", s.group_vars, &s.clause)
                ));
            }
            EmitFormat::Prover => {
                out.push_str(&format!(
                    "fof(group_{}, axiom, {}).\n",
                    index + 1,
                    quantified_prover("G", s.group_vars, &s.clause),
                ));
            }
        }
    }
    out
}
