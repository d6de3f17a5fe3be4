//! Verma modules and singular vectors over the Jacobi algebra `g_n`.

pub mod algebra;
pub mod cli;
pub mod pbw;
pub mod ring;
pub mod singular;
pub mod verma;
