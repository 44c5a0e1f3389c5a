//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reptype::algebra::{parse_poly, AlgebraTable, NcPoly};
use reptype::cli::execute;
use reptype::frobenius::{ar_translate_dtr, ar_translate_omega, find_frobenius_form};
use reptype::linalg::{Field, Matrix};
use reptype::module::{is_isomorphic, is_isomorphic_exact, IsoVerdict, ModuleRep};
use reptype::repcert::*;
use reptype::resolution::{
    all_cocycles, carlson_module, complexity_estimate, is_periodic, minimal_resolution, periodicity_in, resolve,
    syzygy, syzygy_power, IsoOptions,
};

type Outcome = Result<String, String>;

fn fields(spec: &[(u32, u32)]) -> Vec<Field> {
    spec.iter().map(|&(p, e)| Field::extension(p, e).unwrap()).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn c1() -> Outcome {
    let k = trivial(&corpus_algebra("kleinfour").map_err(e)?).map_err(e)?;
    let b = minimal_resolution(&k, 10).map_err(e)?.betti();
    let want: Vec<usize> = (0..=10).map(|n| n + 1).collect();
    ensure(b == want, || format!("betti {b:?}"))?;
    Ok(format!("b_0..b_10 = {b:?}"))
}

fn family_checks(report: &FamilyReport, nonzero_only: bool) -> Result<(), String> {
    for scan in &report.fields {
        let members: Vec<_> = scan.members.iter().filter(|m| !(nonzero_only && m.flagged.is_some())).collect();
        for m in &members {
            ensure(m.error.is_none(), || format!("{} λ={}: {:?}", scan.field, m.lambda_display, m.error))?;
            ensure(m.is_indecomposable(), || {
                format!("{} λ={} is {}", scan.field, m.lambda_display, m.indecomposability)
            })?;
            ensure(m.periodicity.certainly_aperiodic(), || {
                format!("{} λ={} periodicity {:?}", scan.field, m.lambda_display, m.periodicity)
            })?;
            ensure(m.complexity.strictly_growing_tail, || {
                format!("{} λ={} betti {:?}", scan.field, m.lambda_display, m.betti)
            })?;
        }
        let mut classes: Vec<usize> = members.iter().map(|m| m.iso_class).collect();
        classes.sort_unstable();
        classes.dedup();
        ensure(classes.len() == members.len(), || {
            format!("{}: only {} classes among {} members", scan.field, classes.len(), members.len())
        })?;
        ensure(scan.undecided_pairs.is_empty(), || {
            format!("{}: undecided pairs {:?}", scan.field, scan.undecided_pairs)
        })?;
    }
    Ok(())
}

fn c2() -> Outcome {
    let a = corpus_algebra("elab_3_2").map_err(e)?;
    let (report, cert) =
        certify_family(&a, FamilyKind::M, &fields(&[(3, 1), (3, 2)]), &ScanOptions::default()).map_err(e)?;
    for (_, m) in report.members() {
        ensure(m.is_absolutely_indecomposable(), || format!("λ={} is {}", m.lambda_display, m.indecomposability))?;
    }
    family_checks(&report, false)?;
    ensure(cert.verdict == Verdict::WildEvidence, || format!("verdict {:?}", cert.verdict))?;
    Ok(format!(
        "{} members, classes {:?}, verdict {:?}",
        report.members().count(),
        report.fields.iter().map(|s| s.classes).collect::<Vec<_>>(),
        cert.verdict
    ))
}

fn c3() -> Outcome {
    let a = corpus_algebra("dihedral8").map_err(e)?;
    let opts = ScanOptions::default();
    let (_, cert) = certify_family(&a, FamilyKind::M, &fields(&[(2, 1), (2, 2)]), &opts).map_err(e)?;
    ensure(cert.verdict == Verdict::TameConsistent, || format!("verdict {:?}", cert.verdict))?;
    let (mut periodic, mut not_periodic) = (0, Vec::new());
    for field in fields(&[(2, 1), (2, 2)]) {
        let alg = over_field(&a, &field).map_err(e)?;
        for l in field.elements() {
            let m = family_m(&alg, l).map_err(e)?;
            let o2 = syzygy_power(&m, 2).map_err(e)?;
            if is_isomorphic(&o2, &m, opts.seed, opts.trials).map_err(e)?.is_yes() {
                periodic += 1;
            } else {
                let b = minimal_resolution(&m, 6).map_err(e)?.betti();
                not_periodic.push(format!("{} λ={} (betti {b:?})", field.spec(), field.display(l)));
            }
        }
    }
    let summary = format!("verdict {:?}; Ω²(M_λ) ≅ M_λ for {periodic} members", cert.verdict);
    ensure(not_periodic.is_empty(), || format!("{summary}; NOT for {}", not_periodic.join(", ")))?;
    Ok(summary)
}

fn c4() -> Outcome {
    let a = corpus_algebra("nfam_host").map_err(e)?;
    let (report, cert) =
        certify_family(&a, FamilyKind::N, &fields(&[(2, 1), (2, 2)]), &ScanOptions::default()).map_err(e)?;
    family_checks(&report, true)?;
    ensure(cert.verdict == Verdict::WildEvidence, || format!("verdict {:?}", cert.verdict))?;
    Ok(format!("verdict {:?}", cert.verdict))
}

fn c5() -> Outcome {
    let target = corpus_algebra("elab_3_2").map_err(e)?;
    let opts = ScanOptions::default();
    let (_, known) = certify_family(&target, FamilyKind::M, &fields(&[(3, 1), (3, 2)]), &opts).map_err(e)?;
    let mut out = Vec::new();
    for name in ["c5_3", "c6_3"] {
        let a = corpus_algebra(name).map_err(e)?;
        ensure(a.dim() == 27, || format!("{name} has dim {}", a.dim()))?;
        let ideal = vec!["xy-yx".to_string()];
        let q = quotient_by(&a, &ideal).map_err(e)?;
        ensure(q.dim() == 9, || format!("{name}/(xy-yx) has dim {}", q.dim()))?;
        ensure(q.canonical_hash() == target.canonical_hash(), || format!("{name}/(xy-yx) differs from elab_3_2"))?;
        let cert = certify_factor_rule(&a, &ideal, &known).map_err(e)?;
        ensure(cert.verdict == Verdict::WildEvidence, || format!("{name}: {:?}", cert.verdict))?;
        let resolver = |n: &str| corpus_algebra(n);
        let trail = verify_trail(&cert, &resolver);
        ensure(trail.iter().all(|t| t.ok), || {
            format!("{name}: trail failures {:?}", trail.iter().filter(|t| !t.ok).collect::<Vec<_>>())
        })?;
        out.push(format!("{name}: dim 27, quotient 9, {:?}", cert.verdict));
    }
    Ok(out.join("; "))
}

fn c6() -> Outcome {
    let d8 = corpus_algebra("dihedral8").map_err(e)?;
    let reference = minimal_resolution(&trivial(&d8).map_err(e)?, 10).map_err(e)?.betti();
    let c62 = corpus_algebra("c6_2").map_err(e)?;
    let names = c62.generator_names();
    let images: Vec<NcPoly> = names
        .iter()
        .map(|g| parse_poly(if g == "x" { "x+y" } else { g }, &names, c62.field()))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    let c62x = Arc::new(c62.change_generators(&images).map_err(e)?);
    let mut same_table = Vec::new();
    for a in [corpus_algebra("c5_2").map_err(e)?, c62x] {
        ensure(a.dim() == 8, || format!("{} has dim {}", a.name(), a.dim()))?;
        let b = minimal_resolution(&trivial(&a).map_err(e)?, 10).map_err(e)?.betti();
        ensure(b == reference, || format!("{}: {b:?} vs dihedral8 {reference:?}", a.name()))?;
        same_table.push(format!(
            "{} normalized table {} dihedral8",
            a.name(),
            if a.canonical_hash() == d8.canonical_hash() { "=" } else { "≠" }
        ));
    }
    Ok(format!("betti {reference:?}; {}", same_table.join(", ")))
}

fn small_modules(a: &Arc<AlgebraTable>) -> Vec<(String, ModuleRep)> {
    let mut out = Vec::new();
    if let Ok(k) = trivial(a) {
        out.push(("k".to_string(), k));
    }
    for kind in [FamilyKind::M, FamilyKind::N] {
        for l in a.field().elements() {
            if let Ok(m) = family_member(a, kind, l) {
                if m.dim() <= 4 {
                    out.push((format!("{kind}_{}", a.field().display(l)), m));
                }
            }
        }
    }
    out
}

fn c7() -> Outcome {
    let mut checked = 0;
    let mut algebras = Vec::new();
    for name in corpus_names() {
        let a = corpus_algebra(name).map_err(e)?;
        let Ok(fd) = find_frobenius_form(&a, 0, 64) else { continue };
        algebras.push(name.to_string());
        for (label, m) in small_modules(&a) {
            let dtr = ar_translate_dtr(&m).map_err(e)?;
            let om = ar_translate_omega(&m, &fd).map_err(e)?;
            match is_isomorphic_exact(&dtr, &om).map_err(e)? {
                IsoVerdict::Yes { .. } => checked += 1,
                v => return Err(format!("{name} {label}: DTr vs Ω²ν gives {v:?}")),
            }
        }
    }
    Ok(format!("{checked} modules over {} Frobenius algebras ({})", algebras.len(), algebras.join(", ")))
}

fn c8() -> Outcome {
    let opts = ScanOptions::default();
    let a = corpus_algebra("elab_2_3").map_err(e)?;
    let b = minimal_resolution(&trivial(&a).map_err(e)?, 12).map_err(e)?.betti();
    let want: Vec<usize> = (0..=12).map(|n| (n + 1) * (n + 2) / 2).collect();
    ensure(b == want, || format!("elab_2_3 betti {b:?}"))?;
    let degree = |c: &Certificate| match &c.evidence[0] {
        Evidence::Growth { degree, .. } => *degree,
        _ => i32::MIN,
    };
    let cert = certify_wild_theorem(&a, &opts).map_err(e)?;
    ensure(degree(&cert) == 2 && cert.verdict == Verdict::WildAssumingFg, || {
        format!("elab_2_3: degree {} {:?}", degree(&cert), cert.verdict)
    })?;
    let k4 = certify_wild_theorem(&corpus_algebra("kleinfour").map_err(e)?, &opts).map_err(e)?;
    ensure(degree(&k4) == 1 && k4.verdict == Verdict::Inconclusive, || {
        format!("kleinfour: degree {} {:?}", degree(&k4), k4.verdict)
    })?;
    Ok(format!("elab_2_3 degree 2 {:?}; kleinfour degree 1 {:?}", cert.verdict, k4.verdict))
}

fn c9() -> Outcome {
    let a = corpus_algebra("kleinfour").map_err(e)?;
    let res = resolve(&trivial(&a).map_err(e)?, 4).map_err(e)?;
    let zetas: Vec<_> = all_cocycles(&res, 1).into_iter().filter(|z| z.coeffs.iter().any(|c| !c.is_zero())).collect();
    ensure(zetas.len() == 3, || format!("{} nonzero classes in degree 1", zetas.len()))?;
    let mut periods = Vec::new();
    for z in &zetas {
        let l = carlson_module(z, &res).map_err(e)?;
        ensure(l.dim() == 2, || format!("L_ζ has dim {}", l.dim()))?;
        let p = is_periodic(&l, 2, IsoOptions::default()).map_err(e)?;
        ensure(p.period.is_some_and(|d| d <= 2), || format!("L_ζ periodicity {p:?}"))?;
        periods.push(p.period.unwrap());
    }
    Ok(format!("periods {periods:?}"))
}

fn rank_nullity() -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut n = 0;
    for f in fields(&[(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (7, 1)]) {
        for _ in 0..200 {
            let (r, c) = (rng.gen_range(0..7), rng.gen_range(0..7));
            let data = (0..r * c).map(|_| f.from_index(rng.gen_range(0..f.q())).unwrap()).collect();
            let m = Matrix::from_vec(&f, r, c, data);
            let k = m.null_space();
            ensure(m.rank() + k.len() == c, || format!("rank-nullity fails over {}", f.spec()))?;
            ensure(k.iter().all(|v| m.mul_vec(v).iter().all(|x| x.is_zero())), || "kernel vector not killed".into())?;
            n += 1;
        }
    }
    Ok(n)
}

fn associativity() -> Result<usize, String> {
    let names = corpus_names();
    for name in &names {
        let a = corpus_algebra(name).map_err(e)?;
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = a.product(i, j).to_vec();
                for k in 0..d {
                    let l = a.mul(&ij, &a.basis_vector(k));
                    let r = a.mul(&a.basis_vector(i), a.product(j, k));
                    ensure(l == r, || format!("{name}: (b{i}b{j})b{k} ≠ b{i}(b{j}b{k})"))?;
                }
            }
        }
    }
    Ok(names.len())
}

fn c_hat_pairs() -> Result<usize, String> {
    let mk = |alg: &str, kind: Option<FamilyKind>, l: u32| -> Result<ModuleRep, String> {
        let a = corpus_algebra(alg).map_err(e)?;
        match kind {
            None => trivial(&a).map_err(e),
            Some(k) => family_member(&a, k, a.field().from_index(l).unwrap()).map_err(e),
        }
    };
    let pairs = [
        (("kleinfour", None, 0), ("kleinfour", Some(FamilyKind::M), 1)),
        (("kleinfour", Some(FamilyKind::M), 1), ("kleinfour", Some(FamilyKind::M), 1)),
        (("dihedral8", Some(FamilyKind::M), 1), ("dihedral8", None, 0)),
        (("dihedral8", Some(FamilyKind::M), 1), ("dihedral8", Some(FamilyKind::M), 0)),
        (("elab_3_2", Some(FamilyKind::M), 1), ("elab_3_2", Some(FamilyKind::M), 2)),
        (("elab_3_2", None, 0), ("elab_3_2", Some(FamilyKind::M), 0)),
        (("nfam_host", Some(FamilyKind::N), 1), ("nfam_host", None, 0)),
        (("poly_trunc_3", None, 0), ("poly_trunc_3", None, 0)),
        (("qci_7", None, 0), ("qci_7", Some(FamilyKind::M), 3)),
        (("elab_2_3", None, 0), ("elab_2_3", Some(FamilyKind::M), 1)),
    ];
    let opts = IsoOptions::default();
    let c_hat = |m: &ModuleRep| -> Result<Option<u32>, String> {
        let res = resolve(m, 12).map_err(e)?;
        let p = periodicity_in(&res, 6, opts).map_err(e)?;
        Ok(complexity_estimate(&res.table, Some(&p)).map_err(e)?.c_hat)
    };
    for (x, y) in &pairs {
        let (m, n) = (mk(x.0, x.1, x.2)?, mk(y.0, y.1, y.2)?);
        let (cm, cn, cs) = (c_hat(&m)?, c_hat(&n)?, c_hat(&m.direct_sum(&n).map_err(e)?)?);
        ensure(cs == cm.max(cn), || format!("{x:?} ⊕ {y:?}: {cs:?} vs max({cm:?}, {cn:?})"))?;
    }
    Ok(pairs.len())
}

fn c10() -> Outcome {
    let n = rank_nullity()?;
    let algs = associativity()?;
    for name in ["kleinfour", "dihedral8", "qci_7", "elab_3_2"] {
        let a = corpus_algebra(name).map_err(e)?;
        let omega = syzygy(&ModuleRep::free(&a, 2)).map_err(e)?;
        ensure(omega.dim() == 0, || format!("Ω(A²) over {name} has dim {}", omega.dim()))?;
        let t = minimal_resolution(&family_m(&a, a.field().one()).map_err(e)?, 10).map_err(e)?;
        ensure(t.check_recurrence(), || format!("syzygy recurrence fails over {name}"))?;
    }
    let pairs = c_hat_pairs()?;
    let args =
        ["reptype", "scan", "corpus:dihedral8", "--field", "2", "--field", "2,2", "--seed", "7", "--trials", "5"];
    let first = execute(args);
    let second = execute(args);
    ensure(first.code == 0, || format!("cli exit {}: {}", first.code, first.stderr))?;
    ensure(first == second, || "seeded CLI output differs between runs".into())?;
    Ok(format!(
        "{n} matrices, {algs} algebras associative, Ω(P)=0, recurrence, {pairs} c_hat pairs, CLI byte-identical"
    ))
}

fn main() {
    type Crit = (u32, &'static str, fn() -> Outcome, u64);
    let criteria: [Crit; 10] = [
        (1, "kleinfour trivial module betti", c1, 5),
        (2, "elab_3_2 M-family wild evidence", c2, 60),
        (3, "dihedral8 M-family tame-consistent", c3, 30),
        (4, "nfam_host N-family wild evidence", c4, 60),
        (5, "factor rule on c5_3 and c6_3", c5, 60),
        (6, "c5_2 and c6_2 match dihedral8", c6, 60),
        (7, "DTr equals Omega^2 nu", c7, 120),
        (8, "growth degrees", c8, 60),
        (9, "Carlson modules over kleinfour", c9, 60),
        (10, "property suites", c10, 300),
    ];
    let mut failed = 0;
    for (n, name, f, limit) in criteria {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let dt = t.elapsed();
        let r = match r {
            Ok(msg) if dt > Duration::from_secs(limit) => Err(format!("took {dt:.2?} > {limit}s ({msg})")),
            other => other,
        };
        match r {
            Ok(msg) => println!("PASS criterion {n:>2} [{name}] {dt:.2?}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n:>2} [{name}] {dt:.2?}: {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
