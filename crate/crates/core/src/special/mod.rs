//! Closed-form root functions and a small dense symmetric eigensolver.

mod eigen;
mod lambert;
mod matrix;
mod roots;

pub use eigen::{symmetric_eigen, SymmetricEigen};
pub use lambert::lambert_w0;
pub use matrix::Matrix;
pub use roots::{cubic_root_f, cubic_root_f_with_residual, quartic_root_g, quartic_root_g_with_residual, RootResult};
