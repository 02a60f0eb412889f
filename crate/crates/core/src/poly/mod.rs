//! Dense polynomials over `Q(√d)`: univariate (`Π_m`) and tensor-bounded
//! multivariate (`Π^n_{m,max}`).

mod tensor;
mod text;
mod uni;

pub use tensor::{poly_equal, AffineForm, TensorPoly};
pub use text::{parse_poly, parse_scalar, parse_scalar_list, sqrt_of_integer};
pub use uni::UniPoly;
