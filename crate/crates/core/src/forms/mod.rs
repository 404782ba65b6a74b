//! Polynomial containers and the linear substitution actions on them.
//!
//! Matrices act on the column of variables: `(h.F)(v) = F(h v)`. With this
//! convention `h1.(h2.F) = (h2 h1).F`.

mod binary;
mod expr;
mod matrix;
mod ternary;
mod unipoly;

pub use binary::{act_binary, act_gl2, BinaryForm12, Gl2ActionTable};
pub use expr::{parse_poly, SparsePoly};
pub use matrix::{Mat2, Mat3};
pub use ternary::{act_gl3, monomial_index, TernaryQuintic, QUINTIC_MONOMIALS};
pub use unipoly::{gcd_univ, is_squarefree, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormsError {
    #[error("operands live in different fields: GF(3^{left}) and GF(3^{right})")]
    MixedContexts { left: u32, right: u32 },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expected a homogeneous form of degree {expected}")]
    Shape { expected: u32 },
}
