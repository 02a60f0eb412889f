//! Exact scalars: rationals and the real quadratic field `Q(√d)`.

mod enumerate;
mod quad;
mod rational;

pub use enumerate::{enumerate_by_height, visit_window, Interval, RationalTable};
pub use quad::{is_squarefree, Height, QuadScalar, DEFAULT_D};
pub use rational::Rational;

/// `a - b√d` for `z = a + b√d`.
pub fn quad_conjugate(z: &QuadScalar) -> QuadScalar {
    z.conjugate()
}

/// The coefficient `b` of `z = a + b√d`. Q-linear on `Q(√d)` but
/// discontinuous as a map on the reals.
pub fn surd_part(z: &QuadScalar) -> Rational {
    z.surd_part().clone()
}
