//! Moment/SOS relaxations of polynomial optimization problems.

pub mod instance;
pub mod pop;
pub mod report;
pub mod sdpa;
pub mod solver;

pub use instance::{build_dual, build_primal, dual_residual, Block, BlockRole, SdpInstance};
pub use pop::{Pop, TruncationData};
pub use report::{gap_report, guarantee, solve_order, GapReport, Guarantee, OrderOutcome, OrderRecord};
pub use sdpa::{read_sdpa, write_sdpa};
pub use solver::{solve, Solution, SolveStatus, SolverOptions};
