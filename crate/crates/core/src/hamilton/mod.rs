//! Hamilton cycles: an exact oracle for small graphs and the contraction
//! procedure built on uniform odd 2-factors.

mod lift;
pub(crate) mod oracle;
mod procedure;

pub use lift::lift_hamilton_cycle;
pub use oracle::{hamilton_cycle, hamilton_cycle_with, hamilton_path_from_cycle, MASK_LIMIT, ORACLE_BOUND};
pub use procedure::{
    contraction_procedure, LevelRecord, ProcedureConfig, ProcedureOutcome, ProcedureTrace,
    QuotientAudit,
};
