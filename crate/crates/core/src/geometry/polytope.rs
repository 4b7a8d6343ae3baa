//! H-representation polytopes: inequality rows, equality rows, and optional
//! per-coordinate lower bounds.
//!
//! The same type carries every feasible set in the crate: persuasive-scheme
//! sets, extended IC menu sets, loss-image sets, and ad-hoc test polytopes.

use crate::config::TOL_FEAS;
use crate::error::GeometryError;
use crate::geometry::linalg::dot;

/// A polytope `{ x : A x <= b, E x = f, x_j >= l_j (where bounded) }`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    dim: usize,
    /// Rows `a . x <= b`.
    ineq: Vec<(Vec<f64>, f64)>,
    /// Rows `a . x = b`.
    eq: Vec<(Vec<f64>, f64)>,
    /// Per-coordinate lower bounds; `None` means the coordinate is free.
    lower: Vec<Option<f64>>,
}

impl Polytope {
    /// A polytope over `dim` free coordinates with no constraints yet.
    pub fn free(dim: usize) -> Self {
        Polytope { dim, ineq: Vec::new(), eq: Vec::new(), lower: vec![None; dim] }
    }

    /// A polytope over `dim` nonnegative coordinates (probability-like
    /// variables default to lower bound 0).
    pub fn nonneg(dim: usize) -> Self {
        Polytope { dim, ineq: Vec::new(), eq: Vec::new(), lower: vec![Some(0.0); dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_ineq(&mut self, row: Vec<f64>, bound: f64) {
        assert_eq!(row.len(), self.dim, "inequality row length must equal dim");
        self.ineq.push((row, bound));
    }

    pub fn add_eq(&mut self, row: Vec<f64>, value: f64) {
        assert_eq!(row.len(), self.dim, "equality row length must equal dim");
        self.eq.push((row, value));
    }

    pub fn set_lower(&mut self, coord: usize, bound: Option<f64>) {
        self.lower[coord] = bound;
    }

    pub fn ineqs(&self) -> &[(Vec<f64>, f64)] {
        &self.ineq
    }

    pub fn eqs(&self) -> &[(Vec<f64>, f64)] {
        &self.eq
    }

    pub fn lower_bounds(&self) -> &[Option<f64>] {
        &self.lower
    }

    /// Largest constraint violation of `x` (0 when feasible).
    pub fn violation(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim);
        let mut v: f64 = 0.0;
        for (a, b) in &self.ineq {
            v = v.max(dot(a, x) - b);
        }
        for (a, b) in &self.eq {
            v = v.max((dot(a, x) - b).abs());
        }
        for (j, l) in self.lower.iter().enumerate() {
            if let Some(l) = l {
                v = v.max(l - x[j]);
            }
        }
        v
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        self.violation(x) <= tol
    }

    /// Feasibility via a phase-I LP.
    pub fn is_feasible(&self) -> Result<bool, GeometryError> {
        use crate::geometry::simplex::{solve_lp, LpSense, LpStatus};
        let zero = vec![0.0; self.dim];
        let sol = solve_lp(&zero, self, LpSense::Min)?;
        Ok(matches!(sol.status, LpStatus::Optimal))
    }

    /// Box `[lo, hi]^dim`.
    pub fn hypercube(dim: usize, lo: f64, hi: f64) -> Self {
        let mut p = Polytope::free(dim);
        for j in 0..dim {
            p.set_lower(j, Some(lo));
            let mut row = vec![0.0; dim];
            row[j] = 1.0;
            p.add_ineq(row, hi);
        }
        p
    }

    /// Probability simplex `{ x >= 0, sum x = 1 }`.
    pub fn simplex(dim: usize) -> Self {
        let mut p = Polytope::nonneg(dim);
        p.add_eq(vec![1.0; dim], 1.0);
        p
    }

    /// Stack two polytopes on disjoint coordinate blocks.
    pub fn product(&self, other: &Polytope) -> Polytope {
        let dim = self.dim + other.dim;
        let mut p = Polytope::free(dim);
        p.lower[..self.dim].clone_from_slice(&self.lower);
        p.lower[self.dim..].clone_from_slice(&other.lower);
        for (a, b) in &self.ineq {
            let mut row = vec![0.0; dim];
            row[..self.dim].clone_from_slice(a);
            p.add_ineq(row, *b);
        }
        for (a, b) in &self.eq {
            let mut row = vec![0.0; dim];
            row[..self.dim].clone_from_slice(a);
            p.add_eq(row, *b);
        }
        for (a, b) in &other.ineq {
            let mut row = vec![0.0; dim];
            row[self.dim..].clone_from_slice(a);
            p.add_ineq(row, *b);
        }
        for (a, b) in &other.eq {
            let mut row = vec![0.0; dim];
            row[self.dim..].clone_from_slice(a);
            p.add_eq(row, *b);
        }
        p
    }

    /// Chebyshev center: an interior point maximizing the inscribed-ball
    /// radius (within the affine hull of the equality rows the ball radius is
    /// measured in all coordinates, so a degenerate polytope reports 0).
    pub fn chebyshev_center(&self) -> Result<(Vec<f64>, f64), GeometryError> {
        use crate::geometry::simplex::{solve_lp, LpSense, LpStatus};
        // Variables (x, t): maximize t s.t. a.x + ||a|| t <= b, x_j - t >= l_j.
        let mut p = Polytope::free(self.dim + 1);
        for (a, b) in &self.ineq {
            let mut row = a.clone();
            row.push(dot(a, a).sqrt());
            p.add_ineq(row, *b);
        }
        for (j, l) in self.lower.iter().enumerate() {
            if let Some(l) = l {
                let mut row = vec![0.0; self.dim + 1];
                row[j] = -1.0;
                row[self.dim] = 1.0;
                p.add_ineq(row, -l);
            }
        }
        for (a, b) in &self.eq {
            let mut row = a.clone();
            row.push(0.0);
            p.add_eq(row, *b);
        }
        // Keep t bounded even for unbounded feasible sets.
        let mut tcap = vec![0.0; self.dim + 1];
        tcap[self.dim] = 1.0;
        p.add_ineq(tcap, 1e6);
        let mut obj = vec![0.0; self.dim + 1];
        obj[self.dim] = 1.0;
        let sol = solve_lp(&obj, &p, LpSense::Max)?;
        match sol.status {
            LpStatus::Optimal => {
                let x = sol.point[..self.dim].to_vec();
                Ok((x, sol.point[self.dim]))
            }
            _ => Err(GeometryError::NumericalFailure {
                op: "chebyshev_center",
                detail: format!("status {:?}", sol.status),
            }),
        }
    }

    /// Membership check used as the precondition of decomposition ops.
    pub fn check_member(&self, x: &[f64]) -> Result<(), GeometryError> {
        if x.len() != self.dim {
            return Err(GeometryError::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        let v = self.violation(x);
        if v > 10.0 * TOL_FEAS {
            return Err(GeometryError::NotAMember { violation: v });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn violation_on_square() {
        let p = Polytope::hypercube(2, 0.0, 1.0);
        assert!(p.contains(&[0.5, 0.5], 0.0));
        assert!(!p.contains(&[1.5, 0.5], 1e-9));
        assert!((p.violation(&[1.5, -0.25]) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn product_stacks_blocks() {
        let p = Polytope::simplex(2).product(&Polytope::hypercube(1, 0.0, 2.0));
        assert_eq!(p.dim(), 3);
        assert!(p.contains(&[0.25, 0.75, 1.0], 1e-12));
        assert!(!p.contains(&[0.25, 0.5, 1.0], 1e-9));
    }
}
