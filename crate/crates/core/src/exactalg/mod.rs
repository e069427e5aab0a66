//! Exact arithmetic: rationals, one quadratic extension, polynomials,
//! rational functions, pole analysis and Laurent heads.

mod expr;
mod field;
mod laurent;
mod poly;
pub mod rat;
mod ratfunc;
mod roots;

pub use expr::{exp_integral, ExpForm, Quadrature};
pub use field::{FieldCtx, FieldElem};
pub use laurent::{laurent_head, sqrt_laurent, LaurentHead, Point, SqrtHead};
pub use poly::Poly;
pub use rat::{parse_rat, rat, rat_int, Rat};
pub use ratfunc::{normalize, RatFunc};
pub use roots::{poles, roots_with_multiplicity, PoleData};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("cannot split denominator into linear factors: {detail}")]
    UnsupportedPoles { detail: String },
    #[error("operation undefined for the zero function")]
    ZeroFunction,
    #[error("expansion needs an even order, got {order}")]
    OddOrder { order: i64 },
    #[error("order {order} is outside the supported range ({expected})")]
    UnexpectedOrder { order: i64, expected: &'static str },
    #[error("unsupported field extension: {detail}")]
    UnsupportedExtension { detail: String },
}
