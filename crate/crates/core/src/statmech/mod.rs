//! Floating-point layer: Lennard-Jones type potentials
//! `V(r) = αε((σ/r)^δ − (σ/r)^ν)`, sampled curves, and the second virial
//! coefficient `B₂(T) = 2π∫₀^∞ (1 − e^{−V/kT}) r² dr`.

mod quad;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::schrodinger::LJParams;
use crate::susyqm::{de_boer_parameter, ground_state, MolecularParams, SusyError};

pub use quad::{gk15, integrate, QuadResult, Segment};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatmechError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("quadrature did not converge at kT/ε = {t}: error {err:e} after {segments} segments")]
    NoConvergence { t: f64, err: f64, segments: usize },
    #[error(transparent)]
    Susy(#[from] SusyError),
}

/// Exponent pair `(δ, ν)` of the potential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    TwelveSix,
    TenSix,
    General { nu: u32, delta: u32 },
}

impl Family {
    pub fn general(nu: u32, delta: u32) -> Result<Family, StatmechError> {
        match (delta, nu) {
            (12, 6) => Ok(Family::TwelveSix),
            (10, 6) => Ok(Family::TenSix),
            _ if nu >= 1 && delta > nu => Ok(Family::General { nu, delta }),
            _ => Err(StatmechError::InvalidParams(format!(
                "need 0 < ν < δ, got ν = {nu}, δ = {delta}"
            ))),
        }
    }

    pub fn nu(self) -> u32 {
        match self {
            Family::TwelveSix | Family::TenSix => 6,
            Family::General { nu, .. } => nu,
        }
    }

    pub fn delta(self) -> u32 {
        match self {
            Family::TwelveSix => 12,
            Family::TenSix => 10,
            Family::General { delta, .. } => delta,
        }
    }

    /// Location of the minimum in units of σ: `(δ/ν)^{1/(δ−ν)}`.
    pub fn r_min(self) -> f64 {
        let (n, d) = (self.nu() as f64, self.delta() as f64);
        (d / n).powf(1.0 / (d - n))
    }

    /// Shape factor making the well depth exactly ε.
    pub fn alpha(self) -> f64 {
        match self {
            Family::TwelveSix => 4.0,
            Family::TenSix => 25.0 / 6.0 * (5.0f64 / 3.0).sqrt(),
            Family::General { .. } => {
                let s = self.r_min();
                1.0 / (s.powi(-(self.nu() as i32)) - s.powi(-(self.delta() as i32)))
            }
        }
    }

    fn alpha_text(self) -> String {
        match self {
            Family::TwelveSix => "4".into(),
            Family::TenSix => "25/6*sqrt(5/3)".into(),
            Family::General { .. } => format!("{:e}", self.alpha()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.delta(), self.nu())
    }
}

impl FromStr for Family {
    type Err = StatmechError;

    /// `"δ-ν"`, e.g. `"12-6"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || StatmechError::InvalidParams(format!("family must look like 12-6, got {s:?}"));
        let (d, n) = s.trim().split_once('-').ok_or_else(bad)?;
        let d: u32 = d.trim().parse().map_err(|_| bad())?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        Family::general(n, d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialSpec {
    pub family: Family,
    pub sigma: f64,
    pub eps_depth: f64,
    pub alpha: f64,
}

impl PotentialSpec {
    pub fn new(family: Family, sigma: f64, eps_depth: f64) -> Result<Self, StatmechError> {
        if !(sigma > 0.0 && eps_depth > 0.0 && sigma.is_finite() && eps_depth.is_finite()) {
            return Err(StatmechError::InvalidParams("σ and ε must be positive".into()));
        }
        let spec = PotentialSpec {
            family,
            sigma,
            eps_depth,
            alpha: family.alpha(),
        };
        let depth = spec.reduced(family.r_min());
        if ((depth + 1.0) / 1.0).abs() > 1e-10 {
            return Err(StatmechError::InvalidParams(format!(
                "{family}: well depth {depth} is not −1 in units of ε"
            )));
        }
        Ok(spec)
    }

    /// `V/ε` at `r = sσ`, written as `αx^ν(x^{δ−ν} − 1)` with `x = 1/s` so
    /// that `s = 1` gives an exact zero.
    pub fn reduced(&self, s: f64) -> f64 {
        let x = 1.0 / s;
        let (n, d) = (self.family.nu() as i32, self.family.delta() as i32);
        self.alpha * x.powi(n) * (x.powi(d - n) - 1.0)
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.eps_depth * self.reduced(r / self.sigma)
    }

    /// `V/ε = Σ c·s^{−p}` as `(c, p)` pairs.
    pub fn terms(&self) -> Vec<(f64, f64)> {
        vec![
            (self.alpha, self.family.delta() as f64),
            (-self.alpha, self.family.nu() as f64),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    /// Above this value of `V/kT` the Boltzmann factor is taken as zero.
    pub overflow_threshold: f64,
    /// The integral is cut where `|V|/kT` drops below this.
    pub tail_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-9,
            overflow_threshold: 700.0,
            tail_tol: 1e-8,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureConfig {
    fn check(&self) -> Result<(), StatmechError> {
        let ok = [self.rel_tol, self.overflow_threshold, self.tail_tol]
            .iter()
            .all(|v| *v > 0.0)
            && self.max_subdivisions > 0;
        if ok {
            Ok(())
        } else {
            Err(StatmechError::InvalidParams("quadrature settings must be positive".into()))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VirialPoint {
    pub b2: f64,
    pub err: f64,
    /// Hard-core radius `r₀` and tail cut `R` in units of σ.
    pub r_core: f64,
    pub r_cut: f64,
    /// Bound on the second-order tail term that the analytic correction drops.
    pub tail_bound: f64,
    pub segments: usize,
}

pub fn second_virial(spec: &PotentialSpec, t_reduced: f64, cfg: &QuadratureConfig) -> Result<VirialPoint, StatmechError> {
    let p = second_virial_reduced(&spec.terms(), t_reduced, cfg)?;
    let s3 = spec.sigma.powi(3);
    Ok(VirialPoint {
        b2: p.b2 * s3,
        err: p.err * s3,
        ..p
    })
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    // f(lo) and f(hi) have opposite signs
    let up = f(lo) < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) < 0.0) == up {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `B₂/σ³` for `V/ε = Σ c·(σ/r)^p` at `kT/ε = t_reduced`. Every `p` must
/// exceed 3 so the tail converges.
pub fn second_virial_reduced(
    terms: &[(f64, f64)],
    t_reduced: f64,
    cfg: &QuadratureConfig,
) -> Result<VirialPoint, StatmechError> {
    cfg.check()?;
    if !(t_reduced > 0.0 && t_reduced.is_finite()) {
        return Err(StatmechError::InvalidParams(format!("kT/ε must be positive, got {t_reduced}")));
    }
    let terms: Vec<(f64, f64)> = terms.iter().copied().filter(|(c, _)| *c != 0.0).collect();
    if terms.iter().any(|(_, p)| *p <= 3.0) {
        return Err(StatmechError::InvalidParams("power-law exponents must exceed 3".into()));
    }
    if terms.is_empty() {
        return Ok(VirialPoint {
            b2: 0.0,
            err: 0.0,
            r_core: 0.0,
            r_cut: 0.0,
            tail_bound: 0.0,
            segments: 0,
        });
    }
    let beta = 1.0 / t_reduced;
    let bv = |r: f64| beta * terms.iter().map(|(c, p)| c * r.powf(-p)).sum::<f64>();
    let envelope = |r: f64| beta * terms.iter().map(|(c, p)| c.abs() * r.powf(-p)).sum::<f64>();
    let thr = cfg.overflow_threshold;

    // Hard core: the innermost crossing of V/kT = threshold.
    let mut r_core = 0.0;
    let mut r = 1.0;
    if bv(r) >= thr {
        while bv(r) >= thr && r < 1e6 {
            r *= 2.0;
        }
        r_core = bisect(|x| bv(x) - thr, r / 2.0, r);
    } else {
        for _ in 0..64 {
            r /= 2.0;
            if bv(r) >= thr {
                r_core = bisect(|x| bv(x) - thr, r, 2.0 * r);
                break;
            }
        }
    }

    // Tail cut where the envelope of |V|/kT falls below tail_tol.
    let mut hi = r_core.max(1.0) * 2.0;
    while envelope(hi) >= cfg.tail_tol {
        hi *= 2.0;
    }
    let r_cut = bisect(|x| cfg.tail_tol - envelope(x), hi / 2.0, hi);

    let integrand = |r: f64| {
        let x = bv(r);
        if x > thr {
            r * r
        } else {
            -(-x).exp_m1() * r * r
        }
    };
    let mut breaks = vec![r_core];
    breaks.extend(
        [0.9, 1.0, 1.1, 1.25, 1.5, 2.0, 3.0, 5.0, 8.0, 13.0]
            .into_iter()
            .filter(|b| *b > r_core && *b < r_cut),
    );
    breaks.push(r_cut);
    let q = integrate(integrand, &breaks, cfg.rel_tol, cfg.max_subdivisions).map_err(|q| {
        StatmechError::NoConvergence {
            t: t_reduced,
            err: q.err,
            segments: q.segments,
        }
    })?;

    // ∫_R^∞ (V/kT) r² dr
    let tail: f64 = terms
        .iter()
        .map(|(c, p)| c * beta * r_cut.powf(3.0 - p) / (p - 3.0))
        .sum();
    let p_min = terms.iter().map(|(_, p)| *p).fold(f64::INFINITY, f64::min);
    let e = envelope(r_cut);
    let tail_bound = 0.5 * e * e * r_cut.powi(3) / (2.0 * p_min - 3.0);

    let two_pi = 2.0 * std::f64::consts::PI;
    Ok(VirialPoint {
        b2: two_pi * (r_core.powi(3) / 3.0 + q.value + tail),
        err: two_pi * (q.err + tail_bound),
        r_core,
        r_cut,
        tail_bound: two_pi * tail_bound,
        segments: q.segments,
    })
}

/// Temperature at which `B₂` changes sign, by bisection on `[lo, hi]`.
pub fn boyle_temperature(spec: &PotentialSpec, lo: f64, hi: f64, cfg: &QuadratureConfig) -> Result<f64, StatmechError> {
    let b = |t: f64| second_virial(spec, t, cfg).map(|p| p.b2);
    let (mut lo, mut hi) = (lo, hi);
    let (blo, bhi) = (b(lo)?, b(hi)?);
    if blo.signum() == bhi.signum() {
        return Err(StatmechError::InvalidParams(format!(
            "B₂ does not change sign on [{lo}, {hi}]"
        )));
    }
    while hi - lo > 1e-9 * hi {
        let mid = 0.5 * (lo + hi);
        if b(mid)?.signum() == blo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VirialRow {
    pub t_reduced: f64,
    pub b2_first: f64,
    pub err_first: f64,
    pub b2_second: f64,
    pub err_second: f64,
}

/// `B₂` of two potentials with the same σ and ε on a temperature grid.
/// `jobs` limits the worker count; rows come back in grid order either way.
pub fn virial_table(
    first: &PotentialSpec,
    second: &PotentialSpec,
    t_grid: &[f64],
    cfg: &QuadratureConfig,
    jobs: Option<usize>,
) -> Result<Vec<VirialRow>, StatmechError> {
    if first.sigma != second.sigma || first.eps_depth != second.eps_depth {
        return Err(StatmechError::InvalidParams(
            "both potentials must share σ and ε".into(),
        ));
    }
    if t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(StatmechError::InvalidParams("temperatures must increase strictly".into()));
    }
    let row = |&t: &f64| -> Result<VirialRow, StatmechError> {
        let a = second_virial(first, t, cfg)?;
        let b = second_virial(second, t, cfg)?;
        Ok(VirialRow {
            t_reduced: t,
            b2_first: a.b2,
            err_first: a.err,
            b2_second: b.b2,
            err_second: b.err,
        })
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| StatmechError::InvalidParams(e.to_string()))?
            .install(|| t_grid.par_iter().map(row).collect()),
        None => t_grid.par_iter().map(row).collect(),
    }
}

pub const CSV_HEADER: &str = "T_reduced,B2_12_6,err_12_6,B2_10_6,err_10_6";

/// Rows in round-trip decimal form (17 significant digits).
pub fn virial_csv(rows: &[VirialRow]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            r.t_reduced, r.b2_first, r.err_first, r.b2_second, r.err_second
        ));
    }
    s
}

/// `steps` points from `lo` to `hi`, evenly spaced in `log T` or in `T`.
pub fn temperature_grid(lo: f64, hi: f64, steps: usize, log: bool) -> Result<Vec<f64>, StatmechError> {
    if !(lo > 0.0 && hi > lo) || steps < 2 {
        return Err(StatmechError::InvalidParams(
            "need 0 < tmin < tmax and at least 2 steps".into(),
        ));
    }
    let k = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            let f = i as f64 / k;
            if i == steps - 1 {
                hi
            } else if log {
                lo * (hi / lo).powf(f)
            } else {
                lo + (hi - lo) * f
            }
        })
        .collect())
}

/// Default axis for the virial table: kT/ε ∈ [0.3, 10], 100 log-spaced points.
pub fn default_temperature_grid() -> Vec<f64> {
    temperature_grid(0.3, 10.0, 100, true).expect("valid constants")
}

fn check_grid(r_grid: &[f64]) -> Result<(), StatmechError> {
    match r_grid.iter().find(|r| !(**r > 0.0)) {
        Some(r) => Err(StatmechError::NonPositiveRadius(*r)),
        None => Ok(()),
    }
}

/// `(r/σ, V(r)/ε)` samples.
pub fn potential_curve(spec: &PotentialSpec, r_grid: &[f64]) -> Result<Vec<(f64, f64)>, StatmechError> {
    check_grid(r_grid)?;
    Ok(r_grid
        .iter()
        .map(|r| {
            let s = r / spec.sigma;
            (s, spec.reduced(s))
        })
        .collect())
}

/// `(r, ψ₀(r))` samples of the zero-energy ground state.
pub fn wavefunction_curve(p: &LJParams, r_grid: &[f64]) -> Result<Vec<(f64, f64)>, StatmechError> {
    check_grid(r_grid)?;
    let g = ground_state(p)?;
    Ok(r_grid.iter().map(|r| (*r, g.eval(*r))).collect())
}

/// Two-column CSV.
pub fn curve_csv(header: &str, samples: &[(f64, f64)]) -> String {
    let mut s = format!("{header}\n");
    for (a, b) in samples {
        s.push_str(&format!("{a:.16e},{b:.16e}\n"));
    }
    s
}

/// `r_min:r_max:n` grid, inclusive.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, StatmechError> {
    let bad = || StatmechError::InvalidParams(format!("grid must be rmin:rmax:n, got {text:?}"));
    let parts: Vec<&str> = text.split(':').collect();
    let [a, b, n] = parts.as_slice() else { return Err(bad()) };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 || !(b >= a) {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    Ok((0..n)
        .map(|i| if i == n - 1 { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
        .collect())
}

/// De Boer form `−(Λ²/2) d²/dr̃² + Ṽ(r̃)` in units of σ and ε.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DimensionlessForm {
    pub lambda: f64,
    pub family: Family,
}

impl DimensionlessForm {
    pub fn v_tilde(&self, r: f64) -> f64 {
        PotentialSpec {
            family: self.family,
            sigma: 1.0,
            eps_depth: 1.0,
            alpha: self.family.alpha(),
        }
        .reduced(r)
    }

    pub fn render(&self) -> String {
        format!(
            "{}*(1/r^{} - 1/r^{})",
            self.family.alpha_text(),
            self.family.delta(),
            self.family.nu()
        )
    }
}

pub fn dimensionless_form(m: &MolecularParams, family: Family) -> DimensionlessForm {
    DimensionlessForm {
        lambda: de_boer_parameter(m),
        family,
    }
}
