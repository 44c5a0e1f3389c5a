//! The one-parameter families `M_λ` and `N_λ` and family scans.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::over_field;
use super::RepCertError;
use crate::algebra::AlgebraTable;
use crate::frobenius::{ar_translate_omega, find_frobenius_form, FrobeniusData};
use crate::linalg::{Field, FieldElem, Matrix};
use crate::module::{is_indecomposable, is_isomorphic, IndecVerdict, IsoVerdict, ModuleError, ModuleRep};
use crate::resolution::{complexity_estimate, periodicity_in, resolve, ComplexityEstimate, IsoOptions, Periodicity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum FamilyKind {
    M,
    N,
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FamilyKind::M => "M",
            FamilyKind::N => "N",
        })
    }
}

fn xy(a: &AlgebraTable) -> Result<(usize, usize), ModuleError> {
    let x = a.generator_index("x");
    let y = a.generator_index("y");
    match (x, y) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(ModuleError::Shape(format!("{} has no generators named x and y", a.name()))),
    }
}

fn family_module(a: &Arc<AlgebraTable>, dim: usize, x_act: Matrix, y_act: Matrix) -> Result<ModuleRep, ModuleError> {
    let (x, y) = xy(a)?;
    let mut actions = vec![Matrix::zeros(a.field(), dim, dim); a.generators().len()];
    actions[x] = x_act;
    actions[y] = y_act;
    ModuleRep::new(a.clone(), dim, actions)
}

/// `x ↦ [[0,λ],[0,0]]`, `y ↦ [[0,1],[0,0]]`; other generators act by zero.
pub fn family_m(a: &Arc<AlgebraTable>, lambda: FieldElem) -> Result<ModuleRep, ModuleError> {
    let f = a.field();
    let mut x = Matrix::zeros(f, 2, 2);
    x.set(0, 1, lambda);
    let y = Matrix::unit(f, 2, 2, 0, 1);
    family_module(a, 2, x, y)
}

/// `x ↦ λ(e12 + e23)`, `y ↦ e13`.
pub fn family_n(a: &Arc<AlgebraTable>, lambda: FieldElem) -> Result<ModuleRep, ModuleError> {
    let f = a.field();
    let mut x = Matrix::zeros(f, 3, 3);
    x.set(0, 1, lambda);
    x.set(1, 2, lambda);
    let y = Matrix::unit(f, 3, 3, 0, 2);
    family_module(a, 3, x, y)
}

pub fn family_member(a: &Arc<AlgebraTable>, kind: FamilyKind, lambda: FieldElem) -> Result<ModuleRep, ModuleError> {
    match kind {
        FamilyKind::M => family_m(a, lambda),
        FamilyKind::N => family_n(a, lambda),
    }
}

/// Why a member is excluded from evidence, if it is.
pub fn degenerate_flag(kind: FamilyKind, lambda: FieldElem) -> Option<String> {
    lambda.is_zero().then(|| match kind {
        FamilyKind::M => "λ = 0: x acts by zero".to_string(),
        FamilyKind::N => "λ = 0: x acts by zero, so its restriction to k[x] decomposes".to_string(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub cutoff: usize,
    pub dmax: usize,
    pub seed: u64,
    pub trials: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { cutoff: 12, dmax: 10, seed: 0, trials: 16 }
    }
}

impl ScanOptions {
    pub fn iso(&self) -> IsoOptions {
        IsoOptions { seed: self.seed, trials: self.trials }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MemberRecord {
    pub lambda: u32,
    pub lambda_display: String,
    pub dim: usize,
    pub module_hash: String,
    pub indecomposability: String,
    pub residue_dim: Option<usize>,
    pub iso_class: usize,
    pub periodicity: Periodicity,
    pub betti: Vec<usize>,
    pub complexity: ComplexityEstimate,
    pub tau_fixed: Option<bool>,
    pub flagged: Option<String>,
    pub error: Option<String>,
}

impl MemberRecord {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self.indecomposability.as_str(), "AbsolutelyIndecomposable" | "IndecomposableOverBaseField")
    }

    pub fn is_absolutely_indecomposable(&self) -> bool {
        self.indecomposability == "AbsolutelyIndecomposable"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldScan {
    pub field: String,
    pub algebra_hash: String,
    pub frobenius: Option<String>,
    pub members: Vec<MemberRecord>,
    /// Number of isomorphism classes among all members.
    pub classes: usize,
    /// Pairs whose isomorphism test was inconclusive (treated as distinct).
    pub undecided_pairs: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyReport {
    pub algebra: String,
    pub algebra_hash: String,
    pub kind: FamilyKind,
    pub options: ScanOptions,
    pub fields: Vec<FieldScan>,
}

impl FamilyReport {
    pub fn members(&self) -> impl Iterator<Item = (&FieldScan, &MemberRecord)> {
        self.fields.iter().flat_map(|s| s.members.iter().map(move |m| (s, m)))
    }
}

/// Invariants of one member, computed from scratch.
pub fn analyze_member(
    a: &Arc<AlgebraTable>,
    fd: Option<&FrobeniusData>,
    kind: FamilyKind,
    lambda: FieldElem,
    opts: &ScanOptions,
) -> MemberRecord {
    let f = a.field();
    let mut rec = MemberRecord {
        lambda: lambda.index(),
        lambda_display: f.display(lambda),
        dim: 0,
        module_hash: String::new(),
        indecomposability: "Unknown".into(),
        residue_dim: None,
        iso_class: 0,
        periodicity: Periodicity { period: None, dmax: opts.dmax, undecided: vec![], vanishes_at: None },
        betti: vec![],
        complexity: ComplexityEstimate {
            c_hat: None,
            certified_lower: 0,
            certified_facts: vec![],
            growth_evidence: false,
            strictly_growing_tail: false,
            periodic: None,
            diagnostics: vec![],
        },
        tau_fixed: None,
        flagged: degenerate_flag(kind, lambda),
        error: None,
    };
    let run = |rec: &mut MemberRecord| -> Result<(), RepCertError> {
        let m = family_member(a, kind, lambda)?;
        rec.dim = m.dim();
        rec.module_hash = m.content_hash();
        let v = is_indecomposable(&m)?;
        rec.indecomposability = v.name().to_string();
        rec.residue_dim = match v {
            IndecVerdict::AbsolutelyIndecomposable { residue_dim }
            | IndecVerdict::IndecomposableOverBaseField { residue_dim } => Some(residue_dim),
            IndecVerdict::Decomposable { .. } => None,
        };
        let res = resolve(&m, opts.cutoff.max(opts.dmax))?;
        rec.periodicity = periodicity_in(&res, opts.dmax, opts.iso())?;
        let mut table = res.table.clone();
        table.rows.truncate(opts.cutoff + 1);
        table.cutoff = opts.cutoff;
        rec.betti = table.betti();
        rec.complexity = complexity_estimate(&table, Some(&rec.periodicity))?;
        if let Some(fd) = fd {
            let tau = ar_translate_omega(&m, fd)?;
            rec.tau_fixed = match is_isomorphic(&tau, &m, opts.seed, opts.trials)? {
                IsoVerdict::Yes { .. } => Some(true),
                IsoVerdict::No { .. } => Some(false),
                IsoVerdict::Unknown => None,
            };
        }
        Ok(())
    };
    if let Err(e) = run(&mut rec) {
        rec.error = Some(e.to_string());
    }
    rec
}

/// Partitions modules into isomorphism classes (first-seen order).
pub fn iso_classes(
    modules: &[Option<ModuleRep>],
    opts: &ScanOptions,
) -> Result<(Vec<usize>, Vec<(usize, usize)>), RepCertError> {
    let mut reps: Vec<usize> = Vec::new();
    let mut class = vec![usize::MAX; modules.len()];
    let mut undecided = Vec::new();
    for i in 0..modules.len() {
        let Some(mi) = &modules[i] else {
            class[i] = reps.len();
            reps.push(i);
            continue;
        };
        let mut found = None;
        for (c, &r) in reps.iter().enumerate() {
            let Some(mr) = &modules[r] else { continue };
            let seed = opts.seed.wrapping_add((i * 7919 + r) as u64);
            match is_isomorphic(mi, mr, seed, opts.trials)? {
                IsoVerdict::Yes { .. } => {
                    found = Some(c);
                    break;
                }
                IsoVerdict::No { .. } => {}
                IsoVerdict::Unknown => undecided.push((r, i)),
            }
        }
        class[i] = match found {
            Some(c) => c,
            None => {
                reps.push(i);
                reps.len() - 1
            }
        };
    }
    Ok((class, undecided))
}

/// Scans every `λ` of every listed field. Per-member work runs in parallel;
/// the report is ordered by (field, λ).
pub fn scan_family(
    a: &Arc<AlgebraTable>,
    kind: FamilyKind,
    fields: &[Field],
    opts: &ScanOptions,
) -> Result<FamilyReport, RepCertError> {
    let mut scans = Vec::new();
    for field in fields {
        let alg = over_field(a, field)?;
        let fd = find_frobenius_form(&alg, opts.seed, 64).ok();
        let lambdas: Vec<FieldElem> = field.elements().collect();
        let mut members: Vec<MemberRecord> =
            lambdas.par_iter().map(|&l| analyze_member(&alg, fd.as_ref(), kind, l, opts)).collect();
        let modules: Vec<Option<ModuleRep>> = lambdas.iter().map(|&l| family_member(&alg, kind, l).ok()).collect();
        let (class, undecided) = iso_classes(&modules, opts)?;
        for (m, c) in members.iter_mut().zip(&class) {
            m.iso_class = *c;
        }
        scans.push(FieldScan {
            field: field.spec().to_string(),
            algebra_hash: alg.content_hash(),
            frobenius: fd.as_ref().map(|d| d.source.clone()),
            classes: class.iter().copied().max().map_or(0, |c| c + 1),
            undecided_pairs: undecided.iter().map(|&(i, j)| (lambdas[i].index(), lambdas[j].index())).collect(),
            members,
        });
    }
    Ok(FamilyReport {
        algebra: a.name().to_string(),
        algebra_hash: a.content_hash(),
        kind,
        options: *opts,
        fields: scans,
    })
}
