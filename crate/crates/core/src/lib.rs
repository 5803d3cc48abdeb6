//! Generic initial ideals, partial elimination ladders and curve invariants
//! for homogeneous ideals in `k[x0, ..., xn]`.
//!
//! Everything is generic over the coefficient [`Field`]; [`Gf32003`] is the
//! default and [`Rational`] gives exact characteristic-zero arithmetic.

pub mod curve;
pub mod error;
pub mod field;
pub mod gin;
pub mod groebner;
pub mod ideal_file;
pub mod linear;
pub mod monomial;
pub mod monomial_ideal;
pub mod partial_elim;
pub mod poly;

pub use curve::{curve_invariants, curve_report, CurveInvariants, CurveReport, ReportOptions, Verdict};
pub use error::{Error, Result};
pub use field::{Field, FieldChoice, Fp, Gf32003, Rational, SUPPORTED_PRIMES};
pub use gin::{gin, m_invariant, random_change, GinOptions, GinResult};
pub use groebner::{buchberger, ideals_equal, Caps, GroebnerBasis, Ideal};
pub use linear::LinearChange;
pub use monomial::{Monomial, TermOrder};
pub use monomial_ideal::{HilbertData, MonomialIdeal};
pub use partial_elim::{decomposition_check, PartialElimLadder};
pub use poly::Polynomial;

pub type GfPolynomial = Polynomial<Gf32003>;
pub type GfIdeal = Ideal<Gf32003>;
pub type QPolynomial = Polynomial<Rational>;
pub type QIdeal = Ideal<Rational>;
