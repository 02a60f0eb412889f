//! Exact machinery for polynomial functions: solutions of the difference
//! equation `Δ_h^{m+1} f = 0`.
//!
//! Everything is computed over `Q(√d)` without rounding. The crate provides
//! tensor-product interpolation of such functions on grids, the shear
//! decomposition `P(x, y) = Σ A_i(x + y) x^i` of bivariate interpolants, the
//! Jacobian determinants that witness open sets inside graph closures, and
//! samplers that expose the local unboundedness of discontinuous solutions.

pub mod diff;
pub mod error;
pub mod explore;
pub mod interp;
pub mod model;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod shear;

pub use diff::{check_frechet, check_frechet_variable, fixed_step_diff, variable_step_diff, Evaluate, FrechetReport};
pub use error::{Error, Result};
pub use explore::{coverage_by_height, coverage_fraction, growth_table, image_cloud, sample_graph, CoverageGrid, GrowthTable, PointCloud, Rect};
pub use interp::{build_interpolant, check_integer_extension, check_rational_refinement, fit_tensor_grid, phi_gamma_eval, GridSpec, SampleTensor};
pub use shear::{bivariate_jacobian, forbidden_alphas, shear_decompose, slice_polynomial, xi_determinant, ShearDecomposition};
pub use model::{Node, SectionSpec, WitnessModel};
pub use poly::{TensorPoly, UniPoly};
pub use scalar::{QuadScalar, Rational};
