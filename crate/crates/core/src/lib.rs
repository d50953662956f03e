//! Commutative algebra over prime fields and the rationals: Gröbner bases,
//! Hilbert functions, graded Betti numbers and Lefschetz-type properties of
//! homogeneous ideals.

pub mod betti;
pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod props;
pub mod ring;

pub use error::{AlgebraError, Result};
pub use field::{FieldSpec, Scalar};
pub use ideal::{Ideal, LinearForm};
pub use linalg::{sparse_echelon, sparse_rank, Matrix, SparseRow};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Term};
pub use ring::PolyRing;
pub use graded::{
    d_invariant, delta_invariant, hilbert_function, hilbert_function_bounded, is_m_primary, socle_profile,
    std_monomials, GradedQuotient, HilbertFunction, SocleProfile,
};
pub use betti::{
    betti_table, betti_table_bounded, has_linear_resolution, koszul_strand_rank, regularity, BettiTable, ModuleTag,
};
pub use parse::{format_ideal_file, parse_ideal_file, parse_ideal_file_over, ParseError};
