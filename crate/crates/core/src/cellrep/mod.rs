//! Cell modules of the algebras generated by `σ_1, U_1, .., U_{n-1}`:
//! half-diagram bases, Gram matrices and their determinants, and the
//! spin-chain representation of the Temperley-Lieb generators.

mod gram;
mod halfdiag;
mod matrix;
pub mod reference;
mod spin;
mod verify;

pub use gram::{
    det_closed_form, det_recurrence, gram_det, gram_entry, gram_matrix, rank_at, CellModule,
};
pub use halfdiag::{half_diagram_basis, BasisMethod, HalfDiagram, Lambda, Sign};
pub use matrix::{find_equivalence, rank, Matrix, PolyMatrix};
pub use spin::{
    eval_at, invert_q, site_reversal, spin_block, spin_hamiltonian, spin_rep_u, verify_spin_tl,
    LaurentMatrix, DEFAULT_MAX_SITES,
};
pub use verify::{
    det_table, timed, verify_chebyshev, verify_det_table, verify_printed_matrices, verify_ranks,
    DetRow,
};
