//! Numerical tolerances and instance-size caps.
//!
//! All tolerances are fixed constants; experiment configs may override a few
//! of them (see `harness::config`), but library defaults live here so every
//! solver agrees on what "feasible" means.

/// Primal feasibility tolerance for LP and polytope membership checks.
pub const TOL_FEAS: f64 = 1e-8;

/// Duality-gap tolerance for optimality certificates.
pub const TOL_GAP: f64 = 1e-7;

/// Pivot magnitude below which a simplex column is treated as zero.
pub const TOL_PIVOT: f64 = 1e-10;

/// Tolerance used when deduplicating / comparing geometric points.
pub const TOL_GEOM: f64 = 1e-9;

/// Best-response tie tolerance (actions within this of the max are ties).
pub const TOL_TIE: f64 = 1e-9;

/// Maximum misreport gain allowed by the behavioral IC check.
pub const TOL_IC: f64 = 1e-6;

/// Default ellipsoid target accuracy.
pub const ELLIPSOID_EPS: f64 = 1e-6;

/// Hard cap on simplex pivots before declaring numerical failure.
pub const MAX_SIMPLEX_PIVOTS: usize = 50_000;

/// Instance-size caps for general (tensor-utility) instances.
pub const CAP_RECEIVERS_GENERAL: usize = 3;
/// Receiver cap for binary-action set-function instances.
pub const CAP_RECEIVERS_SET_FUNCTION: usize = 8;
/// Cap on types per receiver.
pub const CAP_TYPES: usize = 3;
/// Cap on actions.
pub const CAP_ACTIONS: usize = 3;
/// Cap on states of nature.
pub const CAP_STATES: usize = 4;

/// Exhaustive set-function oracle cap (2^n scan).
pub const CAP_ORACLE_BRUTE_FORCE: usize = 20;

/// Supermodularity is verified on construction up to this many receivers.
pub const CAP_SUPERMODULAR_CHECK: usize = 12;

/// Grid resolution (per coordinate) for the security-game image discretization.
pub const SECURITY_GRID_RESOLUTION: usize = 64;
