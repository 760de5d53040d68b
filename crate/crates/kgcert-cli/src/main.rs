//! `kgcert`: decide, certify, and search improper-ideal generation in group
//! algebras from the command line.
//!
//! Every subcommand prints a line-oriented report with a versioned header,
//! the configuration it ran with, and a `repro:` line that reruns it.  Exit
//! codes follow one convention everywhere: 0 is a definitive positive result
//! (verified, found, pass), 1 a definitive negative one (fail, refuted,
//! exhaustively absent), 2 an inconclusive bounded search, and 3 a usage or
//! input error.

mod certfile;
mod report;
mod textio;

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use kgcert_core::algebra::{binomial_normalize, enumerate_units, AlgebraElem};
use kgcert_core::binomial::{relation_search, standard_witness, WitnessFamily};
use kgcert_core::cert::{
    binomial_certificate, search_certificate, trinomial_certificate, verify_certificate,
    IdealCertificate, SearchOutcome,
};
use kgcert_core::freiheit::{
    c_reduction, find_ab_form, freiheit_scan, small_support_find, strongly_reduced_check,
    ScanOutcome, StrongReduction,
};
use kgcert_core::group::{
    power_substitution_n, wreath_generators, CtxKind, GroupCtx, GroupElem,
};
use kgcert_core::magnus::{refute_trinomial_config, weight, RefutationOutcome, Weight};
use kgcert_core::scalar::{FieldSpec, Scalar};
use kgcert_core::sentence::{
    build_sentence, emit_group_sentences, emit_pairs, enumerate_configs, field_filter,
    group_clause_valid, split_disjunction, EmitFormat, SmallGroup, SplitPair,
};
use kgcert_core::word::{Alphabet, Generator, Letter, Word};
use kgcert_core::Error;

use report::Report;
use textio::{group_text, infer_free_ctx, inferred_names, parse_algebra};

#[derive(Parser)]
#[command(
    name = "kgcert",
    version,
    about = "Decide, certify, and search improper-ideal generation in group algebras"
)]
struct Cli {
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Recorded worker count; execution is sequential and results are
    /// byte-identical for any value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Recorded seed for randomized batteries.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse inputs and echo their canonical forms.
    Parse {
        /// Group spec: free(x,y), Z^3, Z/4, affine(Q), fp(Z^1,Z^2), wreath.
        #[arg(long)]
        group: Option<String>,
        /// Field spec: Q, GF(p), Q[t]/(t^2-t-1), golden.
        #[arg(long)]
        field: Option<String>,
        /// Group element in the backend's element syntax (needs --group).
        #[arg(long)]
        elem: Option<String>,
        /// Algebra element (needs --field; --group defaults to the free
        /// group on the generators appearing in the text).
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
    },

    /// Decide whether an element is strongly reduced (exit 0 yes, 1 no).
    CheckStrong {
        #[arg(long, default_value = "Q")]
        field: String,
        /// Free group override; inferred from --r when omitted.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },

    /// Left-translate by the shortest support element so that condition (c)
    /// of strong reduction holds with 1 in the support.
    ReduceC {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },

    /// Search radius-bounded pairs (a, b) making a·r·b strongly reduced with
    /// 1 in its support (exit 0 found, 2 none in range).
    FindAb {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = 1_000_000)]
        pair_cap: u128,
    },

    /// Scan the bounded ideal slice of r for elements avoiding a generator
    /// (exit 0 verified candidate, 2 none found).
    ScanFreiheit {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        /// Generator the candidate must avoid.
        #[arg(long)]
        kill: String,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = 1_000_000)]
        pair_cap: u128,
    },

    /// Search the bounded ideal slice for elements of support size at most
    /// --size-cap (exit 0 found, 2 none in range).
    SmallSupport {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        size_cap: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u128,
    },

    /// Search conjugacy relations for the element of a binomial g − c and
    /// report the exponent-sum divisor (exit 0 improper, 2 inconclusive).
    AnalyzeBinomial {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Binomial element text (alternative to --g/--c).
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        /// Group element of the normalized binomial g − c.
        #[arg(long)]
        g: Option<String>,
        /// Scalar of the normalized binomial g − c.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, default_value_t = 6)]
        max_terms: usize,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u128,
    },

    /// Build a verified certificate for g − c from a known witness family
    /// (exit 0 written, 1 the scalar order blocks this relation).
    CertBinomial {
        /// Witness family providing the conjugacy relation.
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Group order for --family finite-order.
        #[arg(long)]
        n: Option<u64>,
        /// Scaling ratio for --family affine, e.g. 2 or -3/2.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
        /// The scalar c of the binomial g − c.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        cert_out: PathBuf,
    },

    /// Build the verified trinomial certificate for r = 1 + h − [g,h]
    /// (g must commute with h⁻¹gh).
    CertTrinomial {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        cert_out: PathBuf,
    },

    /// Blind bounded search for a certificate of any element
    /// (exit 0 found and verified, 2 not found in range).
    CertSearch {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = 1_000_000)]
        pair_cap: u128,
        /// Certificate file to write on success; printed in the report when
        /// omitted.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },

    /// Re-check a certificate file from scratch (exit 0 verified, 1 not).
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },

    /// Lower-central weight of a free-group word by power-series expansion
    /// (exit 0 bounded, 2 above the cap).
    MagnusWeight {
        #[arg(long)]
        word: String,
        /// Comma-separated generator names; inferred when omitted.
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },

    /// Weight-based refutation of a trinomial collapse configuration
    /// (exit 1 refuted — a definitive negative — 2 inconclusive).
    RefuteTrinomial {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },

    /// Exhaustively enumerate the units of a finite group algebra
    /// (exit 0 a non-monomial unit exists, 1 all units are monomial).
    Units {
        #[arg(long)]
        field: String,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u128,
    },

    /// Compile, split, and optionally field-filter the universal sentences
    /// for one grid size.
    GenSentences {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        m_prime: usize,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u128,
        #[arg(long, value_enum, default_value_t = FormatArg::Native)]
        format: FormatArg,
        /// Comma-separated finite fields; validates and drops field parts,
        /// emitting group-only sentences.
        #[arg(long)]
        fields: Option<String>,
        /// Non-semantic heuristic: drop sentences whose group half no
        /// abelian group of order <= 6 violates.
        #[arg(long)]
        prune: bool,
        /// File for the emitted sentences; embedded in the report when
        /// omitted.
        #[arg(long)]
        sentences_out: Option<PathBuf>,
    },

    /// Least N making the substitution y′ ↦ y^N injective on elements of
    /// the free product Z * Z².
    PowerSubst {
        /// Element of fp(Z^1,Z^2), repeatable.
        #[arg(long = "elem", required = true)]
        elems: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Cyclic group of order n: the generator's n-th power is 1.
    FiniteOrder,
    /// Affine maps of the line: scaling by alpha relates g and h⁻¹gh.
    Affine,
    /// Affine maps over the golden number field.
    Golden,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Native,
    Prover,
}

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            std::process::exit(if ok { 0 } else { 3 });
        }
    };
    match run(cli, &argv) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(3);
        }
    }
}

fn run(cli: Cli, argv: &[String]) -> Result<i32, String> {
    let mut report = Report::new(command_name(&cli.command), argv);
    report.kv("threads", cli.threads);
    if let Some(seed) = cli.seed {
        report.kv("seed", seed);
    }
    let code = dispatch(&cli.command, &mut report)?;
    report.finish(code, cli.output.as_deref())?;
    Ok(code)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Parse { .. } => "parse",
        Command::CheckStrong { .. } => "check-strong",
        Command::ReduceC { .. } => "reduce-c",
        Command::FindAb { .. } => "find-ab",
        Command::ScanFreiheit { .. } => "scan-freiheit",
        Command::SmallSupport { .. } => "small-support",
        Command::AnalyzeBinomial { .. } => "analyze-binomial",
        Command::CertBinomial { .. } => "cert-binomial",
        Command::CertTrinomial { .. } => "cert-trinomial",
        Command::CertSearch { .. } => "cert-search",
        Command::Verify { .. } => "verify",
        Command::MagnusWeight { .. } => "magnus-weight",
        Command::RefuteTrinomial { .. } => "refute-trinomial",
        Command::Units { .. } => "units",
        Command::GenSentences { .. } => "gen-sentences",
        Command::PowerSubst { .. } => "power-subst",
    }
}

fn es(e: Error) -> String {
    e.to_string()
}

/// Field + free-group context + parsed element for the reduction commands.
fn free_algebra(
    group: &Option<String>,
    field: &str,
    r: &str,
    report: &mut Report,
) -> Result<AlgebraElem, String> {
    let spec = FieldSpec::parse(field).map_err(es)?;
    let ctx = match group {
        Some(g) => {
            let ctx = GroupCtx::parse(g).map_err(es)?;
            if !matches!(ctx.kind(), CtxKind::FreeGroup(_)) {
                return Err("this command needs a free-group carrier".into());
            }
            ctx
        }
        None => infer_free_ctx(r, &spec)?,
    };
    report.kv("field", &spec);
    report.kv("group", group_text(&ctx));
    report.kv("r", r.trim());
    AlgebraElem::parse(&ctx, &spec, r).map_err(es)
}

fn alphabet_of(elem: &AlgebraElem) -> Result<Alphabet, String> {
    match elem.ctx().kind() {
        CtxKind::FreeGroup(a) => Ok(a.clone()),
        _ => Err("free-group carrier required".into()),
    }
}

fn letter_text(alphabet: &Alphabet, l: Letter) -> String {
    if l.sign < 0 {
        format!("{}^-1", alphabet.name(l.gen))
    } else {
        alphabet.name(l.gen).to_owned()
    }
}

fn parse_alphabet(flag: &Option<String>, texts: &[&str]) -> Result<Alphabet, String> {
    let names: Vec<String> = match flag {
        Some(list) => list.split(',').map(|s| s.trim().to_owned()).collect(),
        None => {
            let spec = FieldSpec::rationals();
            let mut union = BTreeSet::new();
            for t in texts {
                union.extend(inferred_names(t, &spec));
            }
            union.into_iter().collect()
        }
    };
    if names.is_empty() {
        return Err("no generator names given or found".into());
    }
    Alphabet::new(names).map_err(es)
}

/// The per-backend generator set used by searches over non-free carriers.
fn standard_assignment(
    ctx: &GroupCtx,
) -> Result<(Alphabet, BTreeMap<Generator, GroupElem>), String> {
    match ctx.kind() {
        CtxKind::FreeGroup(a) => {
            let map = a
                .generators()
                .map(|g| (g, GroupElem::Word(Word::generator(a, g))))
                .collect();
            Ok((a.clone(), map))
        }
        CtxKind::FiniteCyclic(_) => {
            let a = Alphabet::new(["g"]).map_err(es)?;
            Ok((a, [(Generator(0), GroupElem::Residue(1))].into()))
        }
        CtxKind::FreeAbelian(d) => {
            let d = *d;
            let a = Alphabet::new((1..=d).map(|i| format!("a{i}"))).map_err(es)?;
            let map = (0..d)
                .map(|i| {
                    let mut v = vec![0i64; d];
                    v[i] = 1;
                    (Generator(i), GroupElem::Vector(v))
                })
                .collect();
            Ok((a, map))
        }
        CtxKind::WreathZZ => {
            let a = Alphabet::new(["g", "h"]).map_err(es)?;
            let (g, h) = wreath_generators();
            Ok((a, [(Generator(0), g), (Generator(1), h)].into()))
        }
        CtxKind::FreeProduct(ranks) => {
            let mut names = Vec::new();
            let mut elems = Vec::new();
            for (f, &rank) in ranks.iter().enumerate() {
                for j in 0..rank {
                    names.push(format!("g{}", names.len() + 1));
                    let mut v = vec![0i64; rank];
                    v[j] = 1;
                    elems.push(GroupElem::Syllables(vec![(f, v)]));
                }
            }
            let a = Alphabet::new(names).map_err(es)?;
            let map = elems
                .into_iter()
                .enumerate()
                .map(|(i, e)| (Generator(i), e))
                .collect();
            Ok((a, map))
        }
        _ => Err("this backend has no standard generator set for searching".into()),
    }
}

/// Every abelian group of order at most 6, for the non-semantic prune
/// heuristic.
fn prune_battery() -> kgcert_core::Result<Vec<SmallGroup>> {
    let mut groups: Vec<SmallGroup> = (1..=6).map(SmallGroup::cyclic).collect::<kgcert_core::Result<_>>()?;
    groups.push(SmallGroup::klein_four());
    Ok(groups)
}

fn write_cert_to(
    path: &Path,
    cert: &IdealCertificate,
    report: &mut Report,
) -> Result<(), String> {
    certfile::write_certificate(path, cert)?;
    report.kv("sandwiches", cert.sandwiches().len());
    report.kv("certificate", path.display());
    Ok(())
}

fn dispatch(cmd: &Command, report: &mut Report) -> Result<i32, String> {
    match cmd {
        Command::Parse { group, field, elem, r } => {
            if group.is_none() && field.is_none() && elem.is_none() && r.is_none() {
                return Err("nothing to parse; give --group, --field, --elem, or --r".into());
            }
            let ctx = group
                .as_deref()
                .map(GroupCtx::parse)
                .transpose()
                .map_err(es)?;
            if let Some(ctx) = &ctx {
                report.kv("group", group_text(ctx));
            }
            let spec = field
                .as_deref()
                .map(FieldSpec::parse)
                .transpose()
                .map_err(es)?;
            if let Some(spec) = &spec {
                report.kv("field", spec);
            }
            if let Some(text) = elem {
                let ctx = ctx.as_ref().ok_or("--elem needs --group")?;
                let parsed = ctx.parse_elem(text).map_err(es)?;
                report.kv("elem", ctx.elem_text(&parsed));
            }
            if let Some(text) = r {
                let spec = spec.as_ref().ok_or("--r needs --field")?;
                let owned;
                let rctx = match &ctx {
                    Some(c) => c,
                    None => {
                        owned = infer_free_ctx(text, spec)?;
                        report.kv("group", group_text(&owned));
                        &owned
                    }
                };
                let parsed = parse_algebra(rctx, spec, text)?;
                report.kv("r", &parsed);
                report.kv("support-size", parsed.support_size());
            }
            report.kv("result", "ok");
            Ok(0)
        }

        Command::CheckStrong { field, group, r } => {
            let elem = free_algebra(group, field, r, report)?;
            match strongly_reduced_check(&elem).map_err(es)? {
                StrongReduction::Pass => {
                    report.kv("result", "strongly-reduced");
                    Ok(0)
                }
                StrongReduction::Fail { condition, symbol } => {
                    let alphabet = alphabet_of(&elem)?;
                    report.kv("result", "not-strongly-reduced");
                    report.kv("condition", condition);
                    report.kv("symbol", letter_text(&alphabet, symbol));
                    Ok(1)
                }
            }
        }

        Command::ReduceC { field, group, r } => {
            let elem = free_algebra(group, field, r, report)?;
            let rep = c_reduction(&elem).map_err(es)?;
            report.kv("shortest", elem.ctx().elem_text(&rep.shortest));
            report.kv("reduced", &rep.reduced);
            report.kv("one-in-support", rep.one_in_support);
            report.kv("no-conjugate-pad", rep.no_conjugate_pad);
            report.kv("same-involvement", rep.same_involvement);
            report.kv("result", "reduced");
            Ok(0)
        }

        Command::FindAb { field, group, r, radius, pair_cap } => {
            let elem = free_algebra(group, field, r, report)?;
            report.kv("radius", radius);
            report.kv("pair-cap", pair_cap);
            let scan = find_ab_form(&elem, *radius, *pair_cap).map_err(es)?;
            let ctx = elem.ctx();
            for (a, b) in &scan.successes {
                report.kv("pair", format!("{} | {}", ctx.elem_text(a), ctx.elem_text(b)));
            }
            report.kv("pairs-found", scan.successes.len());
            if scan.successes.is_empty() {
                report.kv("result", "none-found");
                Ok(2)
            } else {
                report.kv("result", "found");
                Ok(0)
            }
        }

        Command::ScanFreiheit { field, group, r, kill, radius, pair_cap } => {
            let elem = free_algebra(group, field, r, report)?;
            let alphabet = alphabet_of(&elem)?;
            let gen = alphabet
                .lookup(kill)
                .ok_or_else(|| format!("generator `{kill}` is not in the alphabet"))?;
            report.kv("kill", kill);
            report.kv("radius", radius);
            report.kv("pair-cap", pair_cap);
            match freiheit_scan(&elem, gen, *radius, *pair_cap).map_err(es)? {
                ScanOutcome::NoViolation { radius } => {
                    report.kv("scanned-radius", radius);
                    report.kv("result", "no-violation");
                    report.kv(
                        "note",
                        "bounded scan only; this never proves the intersection trivial",
                    );
                    Ok(2)
                }
                ScanOutcome::Candidate(c) => {
                    let ctx = elem.ctx();
                    report.kv("element", &c.element);
                    for (s, u, v) in &c.combination {
                        report.kv(
                            "combination",
                            format!("{s} | {} | {}", ctx.elem_text(u), ctx.elem_text(v)),
                        );
                    }
                    report.kv("result", "candidate-found");
                    Ok(0)
                }
            }
        }

        Command::SmallSupport { field, group, r, radius, size_cap, budget } => {
            let elem = free_algebra(group, field, r, report)?;
            report.kv("radius", radius);
            report.kv("size-cap", size_cap);
            report.kv("budget", budget);
            let found = small_support_find(&elem, *radius, *size_cap, *budget).map_err(es)?;
            for e in &found {
                report.kv("element", e);
            }
            report.kv("elements-found", found.len());
            if found.is_empty() {
                report.kv("result", "none-found");
                Ok(2)
            } else {
                report.kv("result", "found");
                Ok(0)
            }
        }

        Command::AnalyzeBinomial { group, field, r, g, c, radius, max_terms, cap } => {
            let ctx = GroupCtx::parse(group).map_err(es)?;
            let spec = FieldSpec::parse(field).map_err(es)?;
            report.kv("group", group_text(&ctx));
            report.kv("field", &spec);
            let (g, c) = match (r, g, c) {
                (Some(text), None, None) => {
                    let elem = parse_algebra(&ctx, &spec, text)?;
                    let nb = binomial_normalize(&elem).map_err(es)?;
                    (nb.g, nb.c)
                }
                (None, Some(gt), Some(ct)) => (
                    ctx.parse_elem(gt).map_err(es)?,
                    Scalar::parse(&spec, ct).map_err(es)?,
                ),
                _ => return Err("give either --r or both --g and --c".into()),
            };
            report.kv("g", ctx.elem_text(&g));
            report.kv("c", &c);
            report.kv("radius", radius);
            report.kv("max-terms", max_terms);
            let (alphabet, assignment) = standard_assignment(&ctx)?;
            let verdict =
                relation_search(&ctx, &g, &alphabet, &assignment, *radius, *max_terms, *cap)
                    .map_err(es)?;
            report.kv("relations-found", verdict.relations.len());
            match verdict.divisor_found {
                Some(d) => {
                    report.kv("divisor", d);
                    if c.pow(d as i64).map_err(es)?.is_one() {
                        report.kv("result", "divisor-blocked");
                        report.kv(
                            "note",
                            format!("c^{d} = 1, so this divisor cannot certify g - c"),
                        );
                        Ok(2)
                    } else {
                        report.kv("result", "improper");
                        report.kv(
                            "note",
                            format!("c^{d} differs from 1; the ideal of g - c contains 1"),
                        );
                        Ok(0)
                    }
                }
                None => {
                    report.kv("divisor", "none");
                    report.kv("result", "no-relation-found");
                    Ok(2)
                }
            }
        }

        Command::CertBinomial { family, n, alpha, field, c, cert_out } => {
            let witness = match family {
                FamilyArg::FiniteOrder => {
                    let n = n.ok_or("--family finite-order needs --n")?;
                    standard_witness(WitnessFamily::FiniteOrder { n }).map_err(es)?
                }
                FamilyArg::Affine => {
                    let text = alpha.as_deref().ok_or("--family affine needs --alpha")?;
                    let alpha = BigRational::from_str(text)
                        .map_err(|e| format!("bad --alpha `{text}`: {e}"))?;
                    standard_witness(WitnessFamily::AffineScaling { alpha }).map_err(es)?
                }
                FamilyArg::Golden => standard_witness(WitnessFamily::GoldenScaling).map_err(es)?,
            };
            let rel = witness
                .relation()
                .ok_or("this family carries an unverified order claim; no certificate exists")?;
            report.kv("group", group_text(&witness.ctx));
            report.kv("g", witness.ctx.elem_text(&witness.g));
            report.kv("invariant-multiple", witness.n);
            let spec = FieldSpec::parse(field).map_err(es)?;
            let c = Scalar::parse(&spec, c).map_err(es)?;
            report.kv("field", &spec);
            report.kv("c", &c);
            match binomial_certificate(rel, &c) {
                Ok(cert) => {
                    write_cert_to(cert_out, &cert, report)?;
                    report.kv("result", "certificate-verified");
                    Ok(0)
                }
                Err(Error::OrderViolation) => {
                    report.kv("result", "order-violation");
                    report.kv(
                        "note",
                        "the scalar's power matches 1 on this relation's exponent sum; \
                         g - c cannot be certified through it",
                    );
                    Ok(1)
                }
                Err(e) => Err(es(e)),
            }
        }

        Command::CertTrinomial { group, field, g, h, cert_out } => {
            let ctx = GroupCtx::parse(group).map_err(es)?;
            let spec = FieldSpec::parse(field).map_err(es)?;
            report.kv("group", group_text(&ctx));
            report.kv("field", &spec);
            let g = ctx.parse_elem(g).map_err(es)?;
            let h = ctx.parse_elem(h).map_err(es)?;
            report.kv("g", ctx.elem_text(&g));
            report.kv("h", ctx.elem_text(&h));
            let cert =
                trinomial_certificate(&ctx, &spec, &g, &h, &[(ctx.identity(), 1)]).map_err(es)?;
            report.kv("r", cert.r());
            write_cert_to(cert_out, &cert, report)?;
            report.kv("result", "certificate-verified");
            Ok(0)
        }

        Command::CertSearch { group, field, r, radius, pair_cap, cert_out } => {
            let ctx = GroupCtx::parse(group).map_err(es)?;
            let spec = FieldSpec::parse(field).map_err(es)?;
            report.kv("group", group_text(&ctx));
            report.kv("field", &spec);
            report.kv("r", r.trim());
            report.kv("radius", radius);
            report.kv("pair-cap", pair_cap);
            let elem = parse_algebra(&ctx, &spec, r)?;
            let (alphabet, assignment) = standard_assignment(&ctx)?;
            match search_certificate(&elem, &alphabet, &assignment, *radius, *pair_cap)
                .map_err(es)?
            {
                SearchOutcome::Found(cert) => {
                    match cert_out {
                        Some(path) => write_cert_to(path, &cert, report)?,
                        None => {
                            for (c, u, v) in cert.sandwiches() {
                                report.kv(
                                    "sandwich",
                                    format!(
                                        "{c} | {} | {}",
                                        ctx.elem_text(u),
                                        ctx.elem_text(v)
                                    ),
                                );
                            }
                            report.kv("sandwiches", cert.sandwiches().len());
                        }
                    }
                    report.kv("result", "certificate-verified");
                    Ok(0)
                }
                SearchOutcome::NotFound { radius } => {
                    report.kv("searched-radius", radius);
                    report.kv("result", "not-found");
                    report.kv(
                        "note",
                        "bounded search only; this never proves the ideal proper",
                    );
                    Ok(2)
                }
            }
        }

        Command::Verify { cert } => {
            let cert = certfile::read_certificate(cert)?;
            report.kv("field", cert.r().spec());
            report.kv("group", group_text(cert.r().ctx()));
            report.kv("r", cert.r());
            report.kv("sandwiches", cert.sandwiches().len());
            let outcome = verify_certificate(&cert).map_err(es)?;
            if outcome.verified {
                report.kv("result", "verified");
                Ok(0)
            } else {
                report.kv("residual", &outcome.residual);
                report.kv("result", "not-verified");
                Ok(1)
            }
        }

        Command::MagnusWeight { word, alphabet, cap } => {
            let a = parse_alphabet(alphabet, &[word])?;
            let w = Word::parse(&a, word).map_err(es)?;
            report.kv("word", &w);
            report.kv("cap", cap);
            match weight(&w, *cap).map_err(es)? {
                Weight::Bounded(k) => {
                    report.kv("weight", k);
                    report.kv("result", "weight-bounded");
                    Ok(0)
                }
                Weight::AboveCap => {
                    report.kv("result", "above-cap");
                    Ok(2)
                }
            }
        }

        Command::RefuteTrinomial { f, g, h, alphabet, cap } => {
            let a = parse_alphabet(alphabet, &[f, g, h])?;
            let f = Word::parse(&a, f).map_err(es)?;
            let g = Word::parse(&a, g).map_err(es)?;
            let h = Word::parse(&a, h).map_err(es)?;
            report.kv("f", &f);
            report.kv("g", &g);
            report.kv("h", &h);
            report.kv("cap", cap);
            match refute_trinomial_config(&f, &g, &h, *cap).map_err(es)? {
                RefutationOutcome::Refuted(rep) => {
                    report.kv("root", &rep.root);
                    report.kv("root-weight", rep.root_weight);
                    report.kv("f-power", rep.f_power);
                    report.kv("commutator-weight-floor", rep.commutator_weight_floor);
                    report.kv("result", "refuted");
                    report.kv(
                        "note",
                        "f lies outside the normal closure of [g,h]; the collapse \
                         configuration is impossible",
                    );
                    Ok(1)
                }
                RefutationOutcome::Inconclusive { required_cap, cap } => {
                    report.kv("required-cap", required_cap);
                    report.kv("used-cap", cap);
                    report.kv("result", "inconclusive");
                    Ok(2)
                }
            }
        }

        Command::Units { field, group, cap } => {
            let ctx = GroupCtx::parse(group).map_err(es)?;
            let spec = FieldSpec::parse(field).map_err(es)?;
            report.kv("group", group_text(&ctx));
            report.kv("field", &spec);
            report.kv("cap", cap);
            let rep = enumerate_units(&ctx, &spec, *cap).map_err(es)?;
            report.kv("units", rep.units.len());
            report.kv("non-monomial", if rep.has_non_monomial { "yes" } else { "no" });
            if let Some((u, inv)) = rep.units.iter().find(|(u, _)| u.support_size() > 1) {
                report.kv("unit", u);
                report.kv("inverse", inv);
            }
            if rep.has_non_monomial {
                report.kv("result", "non-monomial-unit-found");
                Ok(0)
            } else {
                report.kv("result", "all-units-monomial");
                Ok(1)
            }
        }

        Command::GenSentences { m, m_prime, cap, format, fields, prune, sentences_out } => {
            report.kv("m", m);
            report.kv("m-prime", m_prime);
            let configs = enumerate_configs(*m, *m_prime, *cap).map_err(es)?;
            let partitions: BTreeSet<_> = configs.iter().map(|c| c.blocks().to_vec()).collect();
            report.kv("partitions", partitions.len());
            report.kv("configs", configs.len());
            let mut pairs: Vec<SplitPair> = configs
                .iter()
                .map(|c| {
                    split_disjunction(&build_sentence(c)).map(|mut v| v.remove(0))
                })
                .collect::<kgcert_core::Result<_>>()
                .map_err(es)?;
            if *prune {
                let battery = prune_battery().map_err(es)?;
                let before = pairs.len();
                let mut kept = Vec::new();
                for pair in pairs {
                    let mut violated_somewhere = false;
                    for group in &battery {
                        if !group_clause_valid(group, pair.group_vars, &pair.group_part)
                            .map_err(es)?
                        {
                            violated_somewhere = true;
                            break;
                        }
                    }
                    if violated_somewhere {
                        kept.push(pair);
                    }
                }
                pairs = kept;
                report.kv("pruned", before - pairs.len());
                report.kv(
                    "prune-note",
                    "heuristic only (group half unviolated in every abelian group of order <= 6); \
                     never a statement about all groups",
                );
            }
            let fmt = match format {
                FormatArg::Native => EmitFormat::Native,
                FormatArg::Prover => EmitFormat::Prover,
            };
            let text = match fields {
                Some(list) => {
                    let specs: Vec<FieldSpec> = list
                        .split(',')
                        .map(|s| FieldSpec::parse(s.trim()))
                        .collect::<kgcert_core::Result<_>>()
                        .map_err(es)?;
                    for spec in &specs {
                        report.kv("filter-field", spec);
                    }
                    let kept = field_filter(&pairs, &specs).map_err(es)?;
                    report.kv("kept-after-filter", kept.len());
                    emit_group_sentences(&kept, fmt)
                }
                None => emit_pairs(&pairs, fmt),
            };
            match sentences_out {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    report.kv("sentences-file", path.display());
                }
                None => {
                    report.kv("sentences", "");
                    for line in text.lines() {
                        report.raw(line);
                    }
                }
            }
            report.kv("result", "emitted");
            Ok(0)
        }

        Command::PowerSubst { elems } => {
            let ctx = GroupCtx::free_product(vec![1, 2]).map_err(es)?;
            report.kv("group", group_text(&ctx));
            let parsed: Vec<GroupElem> = elems
                .iter()
                .map(|t| ctx.parse_elem(t))
                .collect::<kgcert_core::Result<_>>()
                .map_err(es)?;
            for e in &parsed {
                report.kv("elem", ctx.elem_text(e));
            }
            let n = power_substitution_n(&ctx, &parsed).map_err(es)?;
            report.kv("n", n);
            report.kv("result", "ok");
            Ok(0)
        }
    }
}
