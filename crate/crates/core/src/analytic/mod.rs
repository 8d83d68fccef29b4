//! Certified numerics: interval decimals, zeta(3), evaluation of the forms,
//! the coincidence check and the irrationality gate.

pub mod elementary;
pub mod forms;
pub mod gate;
pub mod highprec;
pub mod zeta;

pub use forms::{
    coincidence_check, eval_form, eval_linear_form, eval_series, CoincidenceVerdict, FormEvaluation,
};
pub use gate::{irrationality_gate, GateReport, GateScan};
pub use highprec::HighPrec;
pub use zeta::zeta3;
