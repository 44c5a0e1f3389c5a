//! Minimal projective resolutions, Betti tables, periodicity, complexity
//! estimates, Carlson modules and Hilbert growth.

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{FieldElem, Matrix, Subspace};
use crate::module::{is_isomorphic, projective_cover, Cover, IsoVerdict, ModuleError, ModuleRep};

#[derive(Debug, Error)]
pub enum ResolutionError {
    #[error("table too short: need at least {needed} degrees, have {got}")]
    TableTooShort { needed: usize, got: usize },
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("zero cocycle")]
    ZeroCocycle,
    #[error("growth did not stabilise; differences: {0:?}")]
    Unstable(Vec<Vec<i64>>),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionRow {
    pub n: usize,
    pub b_n: usize,
    /// `ℓ(P_n) = b_n · dim A` (length equals dimension for local algebras).
    pub len_pn: usize,
    /// `dim Ω^n(M)`, with `Ω^0 = M`.
    pub dim_syzygy: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionTable {
    pub algebra: String,
    pub algebra_dim: usize,
    pub cutoff: usize,
    pub rows: Vec<ResolutionRow>,
}

impl ResolutionTable {
    pub fn betti(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.b_n).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,b_n,len_Pn,dim_syzygy\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{}\n", r.n, r.b_n, r.len_pn, r.dim_syzygy));
        }
        s
    }

    /// `dim Ω^{n+1} = b_n·dim A − dim Ω^n` on every row, and zero tails.
    pub fn check_recurrence(&self) -> bool {
        let d = self.algebra_dim;
        let rec = self.rows.windows(2).all(|w| w[1].dim_syzygy + w[0].dim_syzygy == w[0].b_n * d);
        let tails = self.rows.iter().skip_while(|r| r.b_n != 0).all(|r| r.b_n == 0);
        rec && tails
    }
}

/// A resolution with its covers and syzygies kept.
#[derive(Debug, Clone)]
pub struct Resolution {
    /// `syzygies[n] = Ω^n(M)`, `n = 0..=cutoff+1`.
    pub syzygies: Vec<ModuleRep>,
    /// `covers[n]: P_n → Ω^n(M)`.
    pub covers: Vec<Cover>,
    pub table: ResolutionTable,
}

/// Computes `P_0, …, P_N` of a minimal projective resolution.
pub fn resolve(m: &ModuleRep, cutoff: usize) -> Result<Resolution, ResolutionError> {
    let alg = m.algebra();
    let d = alg.dim();
    let mut syzygies = vec![m.clone()];
    let mut covers = Vec::with_capacity(cutoff + 1);
    let mut rows = Vec::with_capacity(cutoff + 1);
    for n in 0..=cutoff {
        let current = &syzygies[n];
        let cover = projective_cover(current)?;
        debug_assert!(cover.is_minimal());
        rows.push(ResolutionRow { n, b_n: cover.rank, len_pn: cover.rank * d, dim_syzygy: current.dim() });
        let next = cover.syzygy();
        covers.push(cover);
        syzygies.push(next);
    }
    let table = ResolutionTable { algebra: alg.name().to_string(), algebra_dim: d, cutoff, rows };
    Ok(Resolution { syzygies, covers, table })
}

pub fn minimal_resolution(m: &ModuleRep, cutoff: usize) -> Result<ResolutionTable, ResolutionError> {
    Ok(resolve(m, cutoff)?.table)
}

pub fn syzygy(m: &ModuleRep) -> Result<ModuleRep, ResolutionError> {
    Ok(projective_cover(m)?.syzygy())
}

pub fn syzygy_power(m: &ModuleRep, n: usize) -> Result<ModuleRep, ResolutionError> {
    let mut out = m.clone();
    for _ in 0..n {
        out = syzygy(&out)?;
    }
    Ok(out)
}

/// `dim Ext^n(M, k)` for `n ≤ N`: the Betti numbers, since minimal
/// differentials land in the radical.
pub fn ext_dims(m: &ModuleRep, cutoff: usize) -> Result<Vec<usize>, ResolutionError> {
    m.algebra().radical().map_err(ModuleError::from)?;
    Ok(minimal_resolution(m, cutoff)?.betti())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoOptions {
    pub seed: u64,
    pub trials: usize,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { seed: 0, trials: 16 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Periodicity {
    pub period: Option<usize>,
    pub dmax: usize,
    /// Degrees where the isomorphism test returned `Unknown`.
    pub undecided: Vec<usize>,
    /// `Ω^d(M) = 0` for this `d` (finite projective dimension).
    pub vanishes_at: Option<usize>,
}

impl Periodicity {
    /// Non-periodicity up to `dmax` is certain.
    pub fn certainly_aperiodic(&self) -> bool {
        self.period.is_none() && self.undecided.is_empty()
    }
}

/// Smallest `d ≤ dmax` with `Ω^d(M) ≅ M`.
pub fn is_periodic(m: &ModuleRep, dmax: usize, opts: IsoOptions) -> Result<Periodicity, ResolutionError> {
    let mut undecided = Vec::new();
    let mut current = m.clone();
    for d in 1..=dmax {
        current = syzygy(&current)?;
        if current.dim() == 0 {
            return Ok(Periodicity { period: None, dmax, undecided, vanishes_at: Some(d) });
        }
        if current.dim() != m.dim() {
            continue;
        }
        match is_isomorphic(&current, m, opts.seed.wrapping_add(d as u64), opts.trials)? {
            IsoVerdict::Yes { .. } => return Ok(Periodicity { period: Some(d), dmax, undecided, vanishes_at: None }),
            IsoVerdict::No { .. } => {}
            IsoVerdict::Unknown => undecided.push(d),
        }
    }
    Ok(Periodicity { period: None, dmax, undecided, vanishes_at: None })
}

/// Periodicity read off an already computed resolution of `M`.
pub fn periodicity_in(res: &Resolution, dmax: usize, opts: IsoOptions) -> Result<Periodicity, ResolutionError> {
    let m = &res.syzygies[0];
    if res.syzygies.len() <= dmax {
        return Err(ResolutionError::TableTooShort { needed: dmax + 1, got: res.syzygies.len() });
    }
    let mut undecided = Vec::new();
    for d in 1..=dmax {
        let current = &res.syzygies[d];
        if current.dim() == 0 {
            return Ok(Periodicity { period: None, dmax, undecided, vanishes_at: Some(d) });
        }
        if current.dim() != m.dim() {
            continue;
        }
        match is_isomorphic(current, m, opts.seed.wrapping_add(d as u64), opts.trials)? {
            IsoVerdict::Yes { .. } => return Ok(Periodicity { period: Some(d), dmax, undecided, vanishes_at: None }),
            IsoVerdict::No { .. } => {}
            IsoVerdict::Unknown => undecided.push(d),
        }
    }
    Ok(Periodicity { period: None, dmax, undecided, vanishes_at: None })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WindowDiagnostic {
    pub c: u32,
    /// `max b_n / n^{c−1}` over the last half of the table.
    pub max_ratio: f64,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexityEstimate {
    /// Heuristic value from the growth window; `None` if no `c ≤ 4` fits.
    pub c_hat: Option<u32>,
    /// Lower bound from exact facts only.
    pub certified_lower: u32,
    pub certified_facts: Vec<String>,
    /// Non-periodic to `dmax` and strictly growing Betti tail.
    pub growth_evidence: bool,
    pub strictly_growing_tail: bool,
    pub periodic: Option<usize>,
    pub diagnostics: Vec<WindowDiagnostic>,
}

pub const MIN_TABLE: usize = 8;

/// The last half of the table: degrees `⌈N/2⌉..=N` (and at least 1).
fn window(b: &[usize]) -> std::ops::Range<usize> {
    let n = b.len();
    (n / 2).max(1)..n
}

/// Strict growth `b_n < b_{n+1}` over the last half.
pub fn strictly_growing_tail(b: &[usize]) -> bool {
    let w = window(b);
    w.len() >= 2 && b[w].windows(2).all(|p| p[0] < p[1])
}

pub fn complexity_estimate(
    t: &ResolutionTable,
    periodicity: Option<&Periodicity>,
) -> Result<ComplexityEstimate, ResolutionError> {
    let b = t.betti();
    if b.len() < MIN_TABLE {
        return Err(ResolutionError::TableTooShort { needed: MIN_TABLE, got: b.len() });
    }
    let periodic = periodicity.and_then(|p| p.period);
    let growing = strictly_growing_tail(&b);
    let mut facts = Vec::new();
    let mut lower = 0;
    if b.iter().all(|&x| x != 0) {
        lower = 1;
        facts.push(format!("b_n > 0 for all n ≤ {}", t.cutoff));
    }
    if let Some(d) = periodic {
        facts.push(format!("Ω^{d}(M) ≅ M verified exactly"));
    }
    let aperiodic = periodicity.map(|p| p.certainly_aperiodic() && p.vanishes_at.is_none()).unwrap_or(false);
    let growth_evidence = aperiodic && growing && lower == 1;
    if growth_evidence {
        lower = 2;
        let dmax = periodicity.map(|p| p.dmax).unwrap_or(0);
        facts.push(format!("evidence: no Ω-period ≤ {dmax} and strictly growing Betti tail"));
    }

    let w = window(&b);
    let half = w.start + w.len() / 2;
    let mut diagnostics = Vec::new();
    let mut c_hat = None;
    if b.contains(&0) {
        c_hat = Some(0);
    } else if periodic.is_some() {
        c_hat = Some(1);
    }
    for c in 1..=4u32 {
        let ratio = |n: usize| b[n] as f64 / (n as f64).powi(c as i32 - 1);
        let first = (w.start..half).map(ratio).fold(f64::MIN, f64::max);
        let second = (half..w.end).map(ratio).fold(f64::MIN, f64::max);
        let max_ratio = first.max(second);
        // non-increasing in the bounded sense: the later half never exceeds the earlier one
        let passes = second <= first * (1.0 + 1e-9);
        diagnostics.push(WindowDiagnostic { c, max_ratio, passes });
        if c_hat.is_none() && passes {
            c_hat = Some(c);
        }
    }
    Ok(ComplexityEstimate {
        c_hat,
        certified_lower: lower,
        certified_facts: facts,
        growth_evidence,
        strictly_growing_tail: growing,
        periodic,
        diagnostics,
    })
}

/// A degree-`n` cocycle: the functional on `P_n` sending the `j`-th free
/// generator to `coeffs[j]` and the radical to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    pub degree: usize,
    pub coeffs: Vec<FieldElem>,
}

impl Cocycle {
    /// The functional on `P_n = A^{b_n}` in block coordinates.
    pub fn functional(&self, res: &Resolution) -> Result<Vec<FieldElem>, ResolutionError> {
        let cover = res
            .covers
            .get(self.degree)
            .ok_or(ResolutionError::TableTooShort { needed: self.degree + 1, got: res.covers.len() })?;
        if self.coeffs.len() != cover.rank {
            return Err(ResolutionError::NotACocycle(format!(
                "{} coefficients for {} generators of P_{}",
                self.coeffs.len(),
                cover.rank,
                self.degree
            )));
        }
        let alg = &cover.algebra;
        let f = alg.field();
        let eps: Vec<FieldElem> = (0..alg.dim())
            .map(|i| alg.augmentation(&alg.basis_vector(i)))
            .collect::<Result<_, _>>()
            .map_err(ModuleError::from)?;
        let mut out = Vec::with_capacity(cover.rank * alg.dim());
        for &c in &self.coeffs {
            out.extend(eps.iter().map(|&e| f.mul(c, e)));
        }
        Ok(out)
    }

    /// `ζ ∘ d_{n+1} = 0`, checked on the images of the generators of `P_{n+1}`.
    pub fn check(&self, res: &Resolution) -> Result<(), ResolutionError> {
        let zeta = self.functional(res)?;
        let cover = &res.covers[self.degree];
        let f = cover.algebra.field();
        for (j, k) in cover.kernel_generators()?.iter().enumerate() {
            if !f.dot(&zeta, k).is_zero() {
                return Err(ResolutionError::NotACocycle(format!(
                    "nonzero on the image of generator {j} of P_{}",
                    self.degree + 1
                )));
            }
        }
        Ok(())
    }
}

/// `L_ζ = ker(Ω^n(k) → k)`, the kernel of the map induced by `ζ`.
pub fn carlson_module(zeta: &Cocycle, res: &Resolution) -> Result<ModuleRep, ResolutionError> {
    if zeta.coeffs.iter().all(|c| c.is_zero()) {
        return Err(ResolutionError::ZeroCocycle);
    }
    if zeta.degree == 0 {
        return Err(ResolutionError::NotACocycle("degree must be at least 1".into()));
    }
    zeta.check(res)?;
    let functional = zeta.functional(res)?;
    let cover = &res.covers[zeta.degree];
    let omega = &res.syzygies[zeta.degree];
    let f = omega.field();
    let row = Matrix::from_rows(f, functional.len(), &[functional]).mul(cover.section());
    let kernel = Subspace::span(f, omega.dim(), &row.null_space());
    Ok(omega.submodule(&kernel)?)
}

/// Every nonzero cocycle of degree `n` over a prime-power field (all of
/// `F^{b_n} \ 0`), in lexicographic index order.
pub fn all_cocycles(res: &Resolution, degree: usize) -> Vec<Cocycle> {
    let Some(cover) = res.covers.get(degree) else { return Vec::new() };
    let f = cover.algebra.field();
    let b = cover.rank as u32;
    let total = (f.q() as u64).pow(b);
    (1..total)
        .map(|mut k| {
            let coeffs = (0..b)
                .map(|_| {
                    let c = f.from_index((k % f.q() as u64) as u32).unwrap();
                    k /= f.q() as u64;
                    c
                })
                .collect();
            Cocycle { degree, coeffs }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertGrowth {
    /// Polynomial degree of the sequence; `-1` for an eventually zero one.
    pub degree: i32,
    /// `degree + 1`, the Krull-dimension proxy.
    pub krull_proxy: u32,
    pub window: usize,
    pub differences: Vec<Vec<i64>>,
}

/// Polynomial growth degree by finite differences: the smallest `k` whose
/// `k`-th differences are a nonzero constant over the stability window.
pub fn hilbert_growth(dims: &[usize]) -> Result<HilbertGrowth, ResolutionError> {
    if dims.len() < MIN_TABLE {
        return Err(ResolutionError::TableTooShort { needed: MIN_TABLE, got: dims.len() });
    }
    let mut seq: Vec<i64> = dims.iter().map(|&d| d as i64).collect();
    let half = dims.len() / 2;
    if seq[half..].iter().all(|&x| x == 0) {
        return Ok(HilbertGrowth { degree: -1, krull_proxy: 0, window: dims.len() - half, differences: vec![seq] });
    }
    let mut differences = Vec::new();
    for k in 0..=4 {
        let w = ((seq.len()) / 2).max(3);
        if seq.len() < w {
            break;
        }
        let tail = &seq[seq.len() - w..];
        let stable = tail.iter().all(|&x| x == tail[0]) && tail[0] != 0;
        differences.push(seq.clone());
        if stable {
            return Ok(HilbertGrowth { degree: k, krull_proxy: k as u32 + 1, window: w, differences });
        }
        seq = seq.windows(2).map(|p| p[1] - p[0]).collect();
    }
    Err(ResolutionError::Unstable(differences))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::truncated;

    fn simple(a: &std::sync::Arc<crate::algebra::AlgebraTable>) -> ModuleRep {
        ModuleRep::new(a.clone(), 1, vec![Matrix::zeros(a.field(), 1, 1); a.generators().len()]).unwrap()
    }

    #[test]
    fn dual_numbers_constant_table() {
        let a = truncated(2, &["x"], &["x^2"], 3);
        let t = minimal_resolution(&simple(&a), 10).unwrap();
        assert!(t.betti().iter().all(|&b| b == 1));
        assert!(t.check_recurrence());
        let p = is_periodic(&simple(&a), 4, IsoOptions::default()).unwrap();
        assert_eq!(p.period, Some(1));
        let c = complexity_estimate(&t, Some(&p)).unwrap();
        assert_eq!(c.c_hat, Some(1));
        assert_eq!(ext_dims(&simple(&a), 5).unwrap(), vec![1; 6]);
    }

    #[test]
    fn klein_four_linear_table() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xy-yx"], 4);
        let k = simple(&a);
        let t = minimal_resolution(&k, 10).unwrap();
        assert_eq!(t.betti(), (1..=11).collect::<Vec<_>>());
        assert_eq!(t.rows[1].dim_syzygy, 3);
        assert!(t.check_recurrence());
        let p = is_periodic(&k, 6, IsoOptions::default()).unwrap();
        assert!(p.certainly_aperiodic());
        let c = complexity_estimate(&t, Some(&p)).unwrap();
        assert_eq!(c.c_hat, Some(2));
        assert!(c.growth_evidence);
        assert_eq!(c.certified_lower, 2);
        assert_eq!(hilbert_growth(&t.betti()).unwrap().degree, 1);
    }

    #[test]
    fn projective_table_terminates() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xy-yx"], 4);
        let t = minimal_resolution(&ModuleRep::regular(&a), 9).unwrap();
        assert_eq!(t.rows[0].b_n, 1);
        assert!(t.rows[1..].iter().all(|r| r.b_n == 0));
        assert_eq!(complexity_estimate(&t, None).unwrap().c_hat, Some(0));
        assert!(complexity_estimate(&minimal_resolution(&ModuleRep::regular(&a), 3).unwrap(), None).is_err());
    }

    #[test]
    fn carlson_modules_over_klein_four() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xy-yx"], 4);
        let res = resolve(&simple(&a), 3).unwrap();
        let zetas = all_cocycles(&res, 1);
        assert_eq!(zetas.len(), 3);
        for z in &zetas {
            let l = carlson_module(z, &res).unwrap();
            assert_eq!(l.dim(), 2);
            assert!(l.check_relations());
            let p = is_periodic(&l, 4, IsoOptions::default()).unwrap();
            assert!(p.period.is_some_and(|d| d <= 2));
        }
        let zero = Cocycle { degree: 1, coeffs: vec![a.field().zero(); 2] };
        assert!(matches!(carlson_module(&zero, &res), Err(ResolutionError::ZeroCocycle)));
    }

    #[test]
    fn growth_degrees() {
        assert_eq!(hilbert_growth(&[1; 10]).unwrap().krull_proxy, 1);
        let squares: Vec<usize> = (0..13).map(|n| (n + 1) * (n + 2) / 2).collect();
        assert_eq!(hilbert_growth(&squares).unwrap().degree, 2);
        let osc: Vec<usize> = (0..12).map(|n| 1 + n % 2).collect();
        assert!(matches!(hilbert_growth(&osc), Err(ResolutionError::Unstable(_))));
    }
}
