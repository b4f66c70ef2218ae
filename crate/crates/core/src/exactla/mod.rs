//! Exact dense linear algebra over a prime field.

mod echelon;
mod field;
mod matrix;

pub use echelon::{
    cokernel_data, image_basis, inverse, kernel_basis, kron, left_kernel_basis, rank, rref, solve,
    Coordinates, RowSpace,
};
pub use field::{Field, DEFAULT_CHAR};
pub use matrix::Matrix;
