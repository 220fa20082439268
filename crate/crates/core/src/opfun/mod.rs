//! Operators, shifted solves, the test matrices and exact reference actions.

mod apply;
mod io;
mod operator;
mod oracle;
mod solve;
mod testmat;

pub use apply::{apply_approx, apply_general_alpha, apply_half_power, ApplyReport};
pub use io::{read_matrix_market, read_vector, write_matrix_market, write_vector};
pub use operator::{DenseMatrix, OperatorRep, SectorClaim, Storage, Tridiagonal};
pub use oracle::{oracle_apply_diag, oracle_diag, oracle_tridiag_toeplitz, spectral_error};
pub use solve::{solve_dense, solve_shifted};
pub use testmat::{
    convection_diffusion_sector, exponent_grid, make_convection_diffusion, make_diag_sector,
    reported_convection_beta,
};

use num_complex::Complex64;

pub(crate) fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
