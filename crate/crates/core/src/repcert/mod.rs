//! Representation-type certificates.
//!
//! A certificate is a verdict plus a trail of machine-checked facts, each of
//! which can be recomputed from scratch ([`verify_trail`]), plus the
//! hypotheses that no finite computation can check.

pub mod corpus;
pub mod family;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

pub use corpus::{corpus, corpus_algebra, corpus_entries, corpus_names, corpus_presentation, over_field, CorpusEntry};
pub use family::{
    analyze_member, degenerate_flag, family_m, family_member, family_n, iso_classes, scan_family, FamilyKind,
    FamilyReport, FieldScan, MemberRecord, ScanOptions,
};

use crate::algebra::{parse_poly, AlgebraError, AlgebraTable};
use crate::frobenius::{find_frobenius_form, FrobeniusError};
use crate::linalg::{Field, FieldSpec};
use crate::module::{ModuleError, ModuleRep};
use crate::resolution::{hilbert_growth, minimal_resolution, ResolutionError};

#[derive(Debug, Error)]
pub enum RepCertError {
    #[error("quotient mismatch: {0}")]
    QuotientMismatch(String),
    #[error("the factor rule only propagates wildness; input verdict is {0:?}")]
    NotWild(Verdict),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    WildEvidence,
    WildAssumingFg,
    TameConsistent,
    Inconclusive,
}

/// One recomputable fact.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Evidence {
    /// A family member's invariants: indecomposability, Betti table,
    /// periodicity window, growth and τ-fixedness.
    Member {
        algebra: String,
        field: String,
        family: FamilyKind,
        lambda: u32,
        module_hash: String,
        indecomposability: String,
        betti: Vec<usize>,
        period: Option<usize>,
        growth_evidence: bool,
        tau_fixed: Option<bool>,
    },
    /// The listed members fall into `classes` isomorphism classes.
    IsoClasses { algebra: String, field: String, family: FamilyKind, lambdas: Vec<u32>, classes: usize },
    /// Growth degree of the trivial module's Betti table.
    Growth { algebra: String, field: String, cutoff: usize, betti: Vec<usize>, degree: i32 },
    /// `algebra / ⟨ideal⟩` has the same normalized table as `quotient`.
    FactorRule { algebra: String, ideal: Vec<String>, quotient: String, quotient_dim: usize, canonical_hash: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub strategy: String,
    pub algebra: String,
    pub algebra_hash: String,
    pub canonical_hash: String,
    pub evidence: Vec<Evidence>,
    pub unverified_hypotheses: Vec<String>,
    pub notes: Vec<String>,
    pub options: ScanOptions,
}

fn field_of(spec: &str) -> Result<Field, RepCertError> {
    let s: FieldSpec =
        spec.parse().map_err(|m: String| AlgebraError::Parse { location: "field".into(), message: m })?;
    Ok(Field::new(&s).map_err(AlgebraError::from)?)
}

/// Lemma-style certificate from a family scan.
pub fn certify_wild_lemma(a: &AlgebraTable, r: &FamilyReport) -> Certificate {
    let mut evidence = Vec::new();
    let mut notes = Vec::new();
    let mut sample = 0usize;
    let mut all_indec = true;
    let mut all_distinct = true;
    let mut all_growth = true;
    let mut all_periodic = true;
    let mut tau_ok = true;
    let mut dims = std::collections::BTreeSet::new();
    for scan in &r.fields {
        let live: Vec<&MemberRecord> = scan.members.iter().filter(|m| m.flagged.is_none()).collect();
        for m in scan.members.iter().filter(|m| m.flagged.is_some()) {
            notes.push(format!(
                "{} λ={} excluded: {}",
                scan.field,
                m.lambda_display,
                m.flagged.as_deref().unwrap_or_default()
            ));
        }
        for m in &live {
            sample += 1;
            if let Some(e) = &m.error {
                notes.push(format!("{} λ={} failed: {e}", scan.field, m.lambda_display));
                all_indec = false;
                all_growth = false;
                all_periodic = false;
                continue;
            }
            dims.insert(m.dim);
            all_indec &= m.is_indecomposable();
            all_growth &= m.complexity.growth_evidence;
            all_periodic &= m.periodicity.period.is_some();
            tau_ok &= m.tau_fixed == Some(false);
            evidence.push(Evidence::Member {
                algebra: r.algebra.clone(),
                field: scan.field.clone(),
                family: r.kind,
                lambda: m.lambda,
                module_hash: m.module_hash.clone(),
                indecomposability: m.indecomposability.clone(),
                betti: m.betti.clone(),
                period: m.periodicity.period,
                growth_evidence: m.complexity.growth_evidence,
                tau_fixed: m.tau_fixed,
            });
        }
        let classes: std::collections::BTreeSet<usize> = live.iter().map(|m| m.iso_class).collect();
        let undecided = scan
            .undecided_pairs
            .iter()
            .any(|(x, y)| live.iter().any(|m| m.lambda == *x) && live.iter().any(|m| m.lambda == *y));
        if classes.len() != live.len() || undecided {
            all_distinct = false;
        }
        evidence.push(Evidence::IsoClasses {
            algebra: r.algebra.clone(),
            field: scan.field.clone(),
            family: r.kind,
            lambdas: live.iter().map(|m| m.lambda).collect(),
            classes: classes.len(),
        });
    }
    let one_dim = dims.len() == 1;
    let wild = sample > 0 && all_indec && all_distinct && one_dim && all_growth && tau_ok;
    let (verdict, hypotheses) = if wild {
        (
            Verdict::WildEvidence,
            vec![
                format!("infinitude extrapolated from {sample} members over finite fields"),
                "finite fields stand in for an algebraically closed field".to_string(),
                "complexity ≥ 2 evidenced by non-periodicity up to dmax and Betti growth, not proven".to_string(),
            ],
        )
    } else if sample > 0 && all_periodic {
        (
            Verdict::TameConsistent,
            vec!["tameness is not certified: periodicity was observed family-wide, which is consistent with it"
                .to_string()],
        )
    } else {
        (Verdict::Inconclusive, Vec::new())
    };
    if !wild {
        for (ok, what) in [
            (all_indec, "not every member is indecomposable"),
            (all_distinct, "members are not pairwise non-isomorphic"),
            (one_dim, "members do not share one dimension"),
            (all_growth, "not every member has growth evidence (aperiodic to dmax with a strictly growing Betti tail)"),
            (tau_ok, "τ(M) ≇ M is not established for every member"),
        ] {
            if !ok {
                notes.push(what.to_string());
            }
        }
    }
    Certificate {
        verdict,
        strategy: "lemma-family".into(),
        algebra: r.algebra.clone(),
        algebra_hash: a.content_hash(),
        canonical_hash: a.canonical_hash(),
        evidence,
        unverified_hypotheses: hypotheses,
        notes,
        options: r.options,
    }
}

/// Scan plus certificate in one step.
pub fn certify_family(
    a: &Arc<AlgebraTable>,
    kind: FamilyKind,
    fields: &[Field],
    opts: &ScanOptions,
) -> Result<(FamilyReport, Certificate), RepCertError> {
    let report = scan_family(a, kind, fields, opts)?;
    let cert = certify_wild_lemma(a, &report);
    Ok((report, cert))
}

fn trivial_module(a: &Arc<AlgebraTable>) -> Result<ModuleRep, ModuleError> {
    let f = a.field();
    let actions = a
        .generators()
        .iter()
        .map(|g| {
            let c = a.augmentation(&g.element)?;
            Ok(crate::linalg::Matrix::from_vec(f, 1, 1, vec![c]))
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    ModuleRep::new(a.clone(), 1, actions)
}

/// The simple module `k` (generators act by their augmentation).
pub fn trivial(a: &Arc<AlgebraTable>) -> Result<ModuleRep, RepCertError> {
    Ok(trivial_module(a)?)
}

/// Growth-style certificate: Krull-dimension proxy of the trivial module's
/// Betti table.
pub fn certify_wild_theorem(a: &Arc<AlgebraTable>, opts: &ScanOptions) -> Result<Certificate, RepCertError> {
    let k = trivial(a)?;
    let table = minimal_resolution(&k, opts.cutoff)?;
    let betti = table.betti();
    let mut notes = Vec::new();
    let (verdict, hypotheses, degree) = match hilbert_growth(&betti) {
        Ok(g) if g.krull_proxy >= 3 => (
            Verdict::WildAssumingFg,
            vec!["Fg assumed".to_string(), "growth degree from finite table".to_string()],
            g.degree,
        ),
        Ok(g) => {
            notes.push(format!("Krull-dimension proxy {} < 3: the growth criterion does not apply", g.krull_proxy));
            (Verdict::Inconclusive, Vec::new(), g.degree)
        }
        Err(e) => {
            notes.push(format!("growth did not stabilise: {e}"));
            (Verdict::Inconclusive, Vec::new(), i32::MIN)
        }
    };
    Ok(Certificate {
        verdict,
        strategy: "theorem-growth".into(),
        algebra: a.name().to_string(),
        algebra_hash: a.content_hash(),
        canonical_hash: a.canonical_hash(),
        evidence: vec![Evidence::Growth {
            algebra: a.name().to_string(),
            field: a.field().spec().to_string(),
            cutoff: opts.cutoff,
            betti,
            degree,
        }],
        unverified_hypotheses: hypotheses,
        notes,
        options: *opts,
    })
}

/// `A / ⟨ideal⟩` for ideal generators written in `A`'s generators.
pub fn quotient_by(a: &AlgebraTable, ideal: &[String]) -> Result<Arc<AlgebraTable>, RepCertError> {
    let names = a.generator_names();
    let mut gens = Vec::new();
    for (i, s) in ideal.iter().enumerate() {
        let p = parse_poly(s, &names, a.field())
            .map_err(|e| AlgebraError::Parse { location: format!("ideal[{i}]"), message: e.to_string() })?;
        gens.push(a.eval_poly(&p));
    }
    let q = a.quotient_by_ideal(&gens, &format!("{}/<{}>", a.name(), ideal.join(",")))?;
    q.table.ok_or_else(|| RepCertError::QuotientMismatch("the ideal is the whole algebra".into()))
}

/// Lifts a wild verdict for `A/I` to `A`.
pub fn certify_factor_rule(
    a: &AlgebraTable,
    ideal: &[String],
    known: &Certificate,
) -> Result<Certificate, RepCertError> {
    if !matches!(known.verdict, Verdict::WildEvidence | Verdict::WildAssumingFg) {
        return Err(RepCertError::NotWild(known.verdict));
    }
    let q = quotient_by(a, ideal)?;
    if q.canonical_hash() != known.canonical_hash {
        return Err(RepCertError::QuotientMismatch(format!(
            "{} (dim {}) does not match the certified algebra {}",
            q.name(),
            q.dim(),
            known.algebra
        )));
    }
    let mut evidence = vec![Evidence::FactorRule {
        algebra: a.name().to_string(),
        ideal: ideal.to_vec(),
        quotient: known.algebra.clone(),
        quotient_dim: q.dim(),
        canonical_hash: q.canonical_hash(),
    }];
    evidence.extend(known.evidence.iter().cloned());
    let mut notes = vec![format!("factor-algebra rule via ideal ⟨{}⟩", ideal.join(", "))];
    notes.extend(known.notes.iter().cloned());
    Ok(Certificate {
        verdict: known.verdict,
        strategy: "factor".into(),
        algebra: a.name().to_string(),
        algebra_hash: a.content_hash(),
        canonical_hash: a.canonical_hash(),
        evidence,
        unverified_hypotheses: known.unverified_hypotheses.clone(),
        notes,
        options: known.options,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrailCheck {
    pub index: usize,
    pub kind: String,
    pub ok: bool,
    pub detail: String,
}

/// Resolves algebra names appearing in a trail.
pub type Resolver<'a> = dyn Fn(&str) -> Result<Arc<AlgebraTable>, AlgebraError> + Sync + 'a;

fn check(index: usize, kind: &str, ok: bool, detail: String) -> TrailCheck {
    TrailCheck { index, kind: kind.to_string(), ok, detail }
}

/// Recomputes every evidence item from scratch and compares.
pub fn verify_trail(cert: &Certificate, resolve: &Resolver) -> Vec<TrailCheck> {
    let opts = cert.options;
    cert.evidence
        .iter()
        .enumerate()
        .map(|(i, ev)| match verify_item(ev, resolve, &opts) {
            Ok((kind, ok, detail)) => check(i, kind, ok, detail),
            Err(e) => check(i, "error", false, e.to_string()),
        })
        .collect()
}

fn verify_item(
    ev: &Evidence,
    resolve: &Resolver,
    opts: &ScanOptions,
) -> Result<(&'static str, bool, String), RepCertError> {
    match ev {
        Evidence::Member {
            algebra,
            field,
            family,
            lambda,
            module_hash,
            indecomposability,
            betti,
            period,
            growth_evidence,
            tau_fixed,
        } => {
            let base = resolve(algebra)?;
            let f = field_of(field)?;
            let a = over_field(&base, &f)?;
            let fd = find_frobenius_form(&a, opts.seed, 64).ok();
            let l = f.from_index(*lambda).ok_or_else(|| RepCertError::QuotientMismatch(format!("λ index {lambda}")))?;
            let rec = analyze_member(&a, fd.as_ref(), *family, l, opts);
            let same = rec.module_hash == *module_hash
                && rec.indecomposability == *indecomposability
                && rec.betti == *betti
                && rec.periodicity.period == *period
                && rec.complexity.growth_evidence == *growth_evidence
                && rec.tau_fixed == *tau_fixed;
            Ok(("Member", same, format!("{family}_{} over {field}: recomputed", rec.lambda_display)))
        }
        Evidence::IsoClasses { algebra, field, family, lambdas, classes } => {
            let base = resolve(algebra)?;
            let f = field_of(field)?;
            let a = over_field(&base, &f)?;
            let modules: Vec<Option<ModuleRep>> =
                lambdas.iter().map(|&l| f.from_index(l).and_then(|x| family_member(&a, *family, x).ok())).collect();
            let (class, undecided) = iso_classes(&modules, opts)?;
            let n = class.iter().copied().max().map_or(0, |c| c + 1);
            Ok((
                "IsoClasses",
                n == *classes && undecided.is_empty(),
                format!("{n} classes among {} members", lambdas.len()),
            ))
        }
        Evidence::Growth { algebra, field, cutoff, betti, degree } => {
            let base = resolve(algebra)?;
            let a = over_field(&base, &field_of(field)?)?;
            let t = minimal_resolution(&trivial(&a)?, *cutoff)?;
            let d = hilbert_growth(&t.betti()).map(|g| g.degree).unwrap_or(i32::MIN);
            Ok(("Growth", t.betti() == *betti && d == *degree, format!("degree {d}")))
        }
        Evidence::FactorRule { algebra, ideal, quotient, quotient_dim, canonical_hash } => {
            let a = resolve(algebra)?;
            let target = resolve(quotient)?;
            let q = quotient_by(&a, ideal)?;
            let ok = q.dim() == *quotient_dim
                && q.canonical_hash() == *canonical_hash
                && target.canonical_hash() == *canonical_hash;
            Ok(("FactorRule", ok, format!("{}/⟨{}⟩ has dim {}", algebra, ideal.join(","), q.dim())))
        }
    }
}
