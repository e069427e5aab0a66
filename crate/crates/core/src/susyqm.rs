//! Supersymmetric structure of the `(2ν−2)`–`ν` Lennard-Jones family:
//! superpotential, partner potentials, zero-energy ground state, and the
//! molecular-parameter form of the shape condition.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactalg::{rat, AlgError, ExpForm, FieldCtx, FieldElem, Rat, RatFunc};
use crate::schrodinger::LJParams;
use crate::statmech::Family;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SusyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// `Ā ≠ (ν−1)√B̄`. This is a statement about the superpotential ansatz,
    /// not about Galoisian integrability.
    #[error("shape condition Ā = (ν−1)√B̄ fails: {0} (the SUSY ansatz does not apply; this is not a non-integrability verdict)")]
    ShapeCondition(String),
    #[error("only zero energy is covered, got ε = {0}")]
    NonzeroEnergy(String),
    #[error("the superpotential needs δ = 2ν − 2, got ν = {nu}, δ = {delta}")]
    WrongFamily { nu: u32, delta: u32 },
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// `w(r) = coefficient / r^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPotential {
    pub coefficient: FieldElem,
    pub exponent: u32,
}

impl SuperPotential {
    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::power(self.coefficient.clone(), -(self.exponent as i64))
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.coefficient.to_f64() * r.powi(-(self.exponent as i32))
    }

    pub fn render(&self) -> String {
        self.to_ratfunc().render("r")
    }
}

/// `Ā = (ν−1)√B̄` exactly. `mirror` selects the `+√B̄` branch, which swaps
/// the roles of the partners.
pub fn superpotential_from_lj(
    nu: u32,
    a_bar: &Rat,
    b_bar: &Rat,
    mirror: bool,
) -> Result<SuperPotential, SusyError> {
    if nu < 3 || !a_bar.is_positive() || !b_bar.is_positive() {
        return Err(SusyError::InvalidParams("need ν ≥ 3, Ā > 0, B̄ > 0".into()));
    }
    let mut ctx = FieldCtx::new();
    let sb = ctx.sqrt(&FieldElem::from_rat(b_bar.clone()))?;
    let expect = &sb * &FieldElem::from_int(nu as i64 - 1);
    if FieldElem::from_rat(a_bar.clone()) != expect {
        return Err(SusyError::ShapeCondition(format!(
            "Ā = {a_bar}, (ν−1)√B̄ = {}",
            expect.render(false)
        )));
    }
    Ok(SuperPotential {
        coefficient: if mirror { sb } else { -&sb },
        exponent: nu - 1,
    })
}

/// Floating-point form of the shape condition, relative tolerance `rel_tol`.
/// Returns the coefficient `−√B̄` on success.
pub fn shape_condition_f64(nu: u32, a_bar: f64, b_bar: f64, rel_tol: f64) -> Result<f64, SusyError> {
    if !(a_bar > 0.0 && b_bar > 0.0) {
        return Err(SusyError::InvalidParams("need Ā > 0, B̄ > 0".into()));
    }
    let expect = (nu as f64 - 1.0) * b_bar.sqrt();
    if ((a_bar - expect) / a_bar).abs() <= rel_tol {
        Ok(-b_bar.sqrt())
    } else {
        Err(SusyError::ShapeCondition(format!("Ā = {a_bar}, (ν−1)√B̄ = {expect}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartnerPair {
    pub v_minus: RatFunc,
    pub v_plus: RatFunc,
}

/// `v∓ = w² ∓ w′`.
pub fn partner_potentials(w: &SuperPotential) -> PartnerPair {
    let wr = w.to_ratfunc();
    let sq = &wr * &wr;
    let d = wr.derivative();
    PartnerPair {
        v_minus: &sq - &d,
        v_plus: &sq + &d,
    }
}

/// `ψ₀ = exp(−∫w dr)` with the integration constant set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundState {
    pub w: SuperPotential,
    pub psi: ExpForm,
}

impl GroundState {
    pub fn eval(&self, r: f64) -> f64 {
        self.psi.eval_f64(r)
    }

    pub fn render(&self) -> String {
        self.psi.render("r")
    }
}

pub fn ground_state(p: &LJParams) -> Result<GroundState, SusyError> {
    if !p.energy.is_zero() {
        return Err(SusyError::NonzeroEnergy(p.energy.to_string()));
    }
    if p.delta != 2 * p.nu - 2 {
        return Err(SusyError::WrongFamily {
            nu: p.nu,
            delta: p.delta,
        });
    }
    if !p.c_bar.is_zero() {
        return Err(SusyError::InvalidParams(
            "the superpotential ansatz has no centrifugal term; need C̄ = 0".into(),
        ));
    }
    let w = superpotential_from_lj(p.nu, &p.a_bar, &p.b_bar, false)?;
    // −∫ c r^{1−ν} dr = c r^{2−ν}/(ν−2)
    let k = w.exponent as i64 - 1;
    let arg = RatFunc::power(&w.coefficient * &FieldElem::from_rat(rat(1, k)), -k);
    Ok(GroundState {
        psi: ExpForm::exp(arg),
        w,
    })
}

/// Physical scales: length σ, well depth ε, reduced mass μ, and ħ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MolecularParams {
    pub sigma: f64,
    pub eps_depth: f64,
    pub mass: f64,
    pub hbar: f64,
}

impl MolecularParams {
    pub fn new(sigma: f64, eps_depth: f64, mass: f64, hbar: f64) -> Result<Self, SusyError> {
        let m = MolecularParams {
            sigma,
            eps_depth,
            mass,
            hbar,
        };
        if [sigma, eps_depth, mass, hbar].iter().all(|v| v.is_finite() && *v > 0.0) {
            Ok(m)
        } else {
            Err(SusyError::InvalidParams("σ, ε, μ, ħ must be positive and finite".into()))
        }
    }

    /// `ħ²/(μεσ²)`.
    pub fn quantumness(&self) -> f64 {
        self.hbar * self.hbar / (self.mass * self.eps_depth * self.sigma * self.sigma)
    }
}

/// `(1/3)√(5/3)`, the value of `ħ²/(μεσ²)` at which the 10-6 potential
/// admits the superpotential.
pub fn susy_condition_value() -> f64 {
    (5.0f64 / 3.0).sqrt() / 3.0
}

/// De Boer parameter `Λ = ħ/(σ√(με))`.
pub fn de_boer_parameter(m: &MolecularParams) -> f64 {
    m.hbar / (m.sigma * (m.mass * m.eps_depth).sqrt())
}

pub fn susy_condition_residual(m: &MolecularParams) -> f64 {
    m.quantumness() - susy_condition_value()
}

/// `(2μαεσ^ν/ħ², 2μαεσ^δ/ħ²)`.
pub fn molecular_to_ab(m: &MolecularParams, family: Family) -> (f64, f64) {
    let k = 2.0 * m.mass * family.alpha() * m.eps_depth / (m.hbar * m.hbar);
    (
        k * m.sigma.powi(family.nu() as i32),
        k * m.sigma.powi(family.delta() as i32),
    )
}
