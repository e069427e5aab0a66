//! C ABI over `lj_galois`.
//!
//! Every function returns an [`LjStatus`]; results come back through out
//! pointers. Objects are opaque handles released with their `_free`
//! function, and strings handed out must be released with
//! [`lj_string_free`]. On failure [`lj_last_error`] describes the problem
//! for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lj_galois::cli::{parse_expression, verdict_json, ParseError};
use lj_galois::exactalg::{parse_rat, AlgError, FieldElem, Rat, RatFunc};
use lj_galois::kovacic::{self, KovacicError, KovacicVerdict};
use lj_galois::schrodinger::{
    self as schrodinger, integrable_zero_energy, martinet_ramis, LJParams, SchrodingerError, WhittakerParams,
    DEFAULT_WITNESS_RANGE,
};
use lj_galois::statmech::{second_virial, Family, PotentialSpec, QuadratureConfig, StatmechError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LjStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    InvalidArgument = 4,
    /// Poles or radicals outside the working field.
    Undecided = 5,
    NoConvergence = 6,
    Internal = 7,
}

/// A rational function over ℚ(√d).
pub struct LjRatFunc {
    inner: RatFunc,
}

/// Kovacic verdict together with the equation it answers.
pub struct LjVerdict {
    r: RatFunc,
    verdict: KovacicVerdict,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(LjStatus, String);

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Syntax { .. } => Failure(LjStatus::Syntax, e.to_string()),
            ParseError::Alg(a) => a.into(),
        }
    }
}

impl From<AlgError> for Failure {
    fn from(e: AlgError) -> Self {
        let s = match e {
            AlgError::UnsupportedExtension { .. } | AlgError::UnsupportedPoles { .. } => LjStatus::Undecided,
            AlgError::ZeroDenominator | AlgError::ZeroFunction => LjStatus::InvalidArgument,
            _ => LjStatus::Internal,
        };
        Failure(s, e.to_string())
    }
}

impl From<KovacicError> for Failure {
    fn from(e: KovacicError) -> Self {
        let s = match e {
            KovacicError::UnableToDecide(_) => LjStatus::Undecided,
            KovacicError::NotClosedForm(_) => LjStatus::InvalidArgument,
            KovacicError::Internal(_) => LjStatus::Internal,
        };
        Failure(s, e.to_string())
    }
}

impl From<SchrodingerError> for Failure {
    fn from(e: SchrodingerError) -> Self {
        match e {
            SchrodingerError::Kovacic(k) => k.into(),
            SchrodingerError::Alg(a) => a.into(),
            SchrodingerError::MethodDisagreement(_) => Failure(LjStatus::Internal, e.to_string()),
            other => Failure(LjStatus::InvalidArgument, other.to_string()),
        }
    }
}

impl From<StatmechError> for Failure {
    fn from(e: StatmechError) -> Self {
        let s = match e {
            StatmechError::NoConvergence { .. } => LjStatus::NoConvergence,
            _ => LjStatus::InvalidArgument,
        };
        Failure(s, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LjStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LjStatus::Ok
        }
        Ok(Err(Failure(s, m))) => {
            set_error(&m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            LjStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(LjStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(LjStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn rational(p: *const c_char) -> Result<Rat, Failure> {
    let s = text(p)?;
    parse_rat(s.trim()).ok_or_else(|| Failure(LjStatus::InvalidArgument, format!("not a rational: {s:?}")))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn lj_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn lj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expression in `x`, e.g. `"(4 - 20*x^2 - 3*x^4)/(16*x^6)"`.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_ratfunc_parse(text_in: *const c_char, out: *mut *mut LjRatFunc) -> LjStatus {
    guard(|| {
        let r = parse_expression(text(text_in)?)?;
        put(out, Box::into_raw(Box::new(LjRatFunc { inner: r })))
    })
}

/// # Safety
/// `h` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn lj_ratfunc_free(h: *mut LjRatFunc) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Renders in the parser's grammar with variable `x`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_ratfunc_render(h: *const LjRatFunc, out: *mut *mut c_char) -> LjStatus {
    guard(|| {
        let r = h.as_ref().ok_or_else(null)?;
        put(out, c_string(r.inner.render("x")))
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_ratfunc_eval(h: *const LjRatFunc, x: f64, out: *mut f64) -> LjStatus {
    guard(|| {
        let r = h.as_ref().ok_or_else(null)?;
        put(out, r.inner.eval_f64(x))
    })
}

/// Normal form `y'' = r(z) y` of the Lennard-Jones radial equation in
/// `z = r²`. Rationals are strings such as `"5"` or `"-3/2"`.
///
/// # Safety
/// All strings must be valid C strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_normal_form(
    nu: u32,
    delta: u32,
    a_bar: *const c_char,
    b_bar: *const c_char,
    c_bar: *const c_char,
    energy: *const c_char,
    formal: bool,
    out: *mut *mut LjRatFunc,
) -> LjStatus {
    guard(|| {
        let p = LJParams::new(
            nu,
            delta,
            rational(a_bar)?,
            rational(b_bar)?,
            rational(c_bar)?,
            rational(energy)?,
            formal,
        )?;
        let r = schrodinger::lj_normal_form(&p)?;
        put(out, Box::into_raw(Box::new(LjRatFunc { inner: r })))
    })
}

/// Runs Kovacic's algorithm on `y'' = r y`.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_kovacic_solve(r: *const LjRatFunc, out: *mut *mut LjVerdict) -> LjStatus {
    guard(|| {
        let r = &r.as_ref().ok_or_else(null)?.inner;
        let verdict = kovacic::solve(r)?;
        put(
            out,
            Box::into_raw(Box::new(LjVerdict {
                r: r.clone(),
                verdict,
            })),
        )
    })
}

/// # Safety
/// `v` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn lj_verdict_free(v: *mut LjVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// 1–3 for the case that produced a solution, 4 for no Liouvillian solution.
///
/// # Safety
/// `v` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_verdict_case(v: *const LjVerdict, out: *mut u8) -> LjStatus {
    guard(|| put(out, v.as_ref().ok_or_else(null)?.verdict.case()))
}

/// The same JSON document the command-line tool prints.
///
/// # Safety
/// `v` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_verdict_json(v: *const LjVerdict, out: *mut *mut c_char) -> LjStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(null)?;
        put(out, c_string(verdict_json(&v.r, &v.verdict, "x").to_string()))
    })
}

/// Zero-energy integrability of the `(2ν−2)`–`ν` family.
///
/// # Safety
/// All strings must be valid C strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_integrable_zero_energy(
    nu: u32,
    a_bar: *const c_char,
    b_bar: *const c_char,
    c_bar: *const c_char,
    formal: bool,
    out: *mut bool,
) -> LjStatus {
    guard(|| {
        let zero = Rat::from_integer(0.into());
        let p = LJParams::new(
            nu,
            nu.saturating_mul(2).saturating_sub(2),
            rational(a_bar)?,
            rational(b_bar)?,
            rational(c_bar)?,
            zero,
            formal,
        )?;
        put(out, integrable_zero_energy(&p, DEFAULT_WITNESS_RANGE)?.integrable)
    })
}

/// Martinet–Ramis test for the Whittaker equation with rational κ, μ.
///
/// # Safety
/// Both strings must be valid C strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lj_martinet_ramis(kappa: *const c_char, mu: *const c_char, out: *mut bool) -> LjStatus {
    guard(|| {
        let w = WhittakerParams {
            kappa: FieldElem::from_rat(rational(kappa)?),
            mu: FieldElem::from_rat(rational(mu)?),
        };
        put(out, martinet_ramis(&w))
    })
}

/// `B₂/σ³` of `αε((σ/r)^δ − (σ/r)^ν)` at `kT/ε = t_reduced`. `rel_tol ≤ 0`
/// selects the default tolerance.
///
/// # Safety
/// `b2` and `err` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lj_second_virial(
    delta: u32,
    nu: u32,
    t_reduced: f64,
    rel_tol: f64,
    b2: *mut f64,
    err: *mut f64,
) -> LjStatus {
    guard(|| {
        if b2.is_null() || err.is_null() {
            return Err(null());
        }
        let spec = PotentialSpec::new(Family::general(nu, delta)?, 1.0, 1.0)?;
        let mut cfg = QuadratureConfig::default();
        if rel_tol > 0.0 {
            cfg.rel_tol = rel_tol;
        }
        let p = second_virial(&spec, t_reduced, &cfg)?;
        put(b2, p.b2)?;
        put(err, p.err)
    })
}
