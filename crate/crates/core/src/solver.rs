//! One fully assembled solve: validated parameters, derived constants,
//! both Riemann-Hilbert solutions and the factorizer, ready for boundary
//! evaluation and contour tracing.

use num_complex::Complex64;

use crate::factorization::{FactorError, Factorizer};
use crate::params::{derive, validate, DerivedConstants, ModelParams, ValidationReport};
use crate::rh1::Phi1;
use crate::rh2::{Phi2Solution, Rh2Error};
use crate::surface::{SideValue, SurfacePoint};

#[derive(Debug, Clone)]
pub enum SolveError {
    Validation(ValidationReport),
    Factorization(FactorError),
    Assembly(Rh2Error),
}

impl core::fmt::Display for SolveError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SolveError::Validation(r) => {
                write!(f, "invalid parameters:")?;
                for v in &r.violations {
                    write!(f, " [{}] {};", v.code, v.message)?;
                }
                Ok(())
            }
            SolveError::Factorization(e) => write!(f, "factorization failed: {e}"),
            SolveError::Assembly(e) => write!(f, "constant assembly failed: {e}"),
        }
    }
}

/// Everything derived from one `ModelParams`. Immutable; independent
/// solves may run concurrently.
#[derive(Debug, Clone)]
pub struct SolverState {
    pub params: ModelParams,
    pub derived: DerivedConstants,
    pub phi1: Phi1,
    pub factorizer: Factorizer,
    pub phi2: Phi2Solution,
}

impl SolverState {
    pub fn build(params: ModelParams) -> Result<SolverState, SolveError> {
        let report = validate(&params);
        if !report.is_pass() {
            return Err(SolveError::Validation(report));
        }
        let derived = derive(&params);
        let phi1 = Phi1::new(&params, &derived);
        let factorizer = Factorizer::build(&params, &derived).map_err(SolveError::Factorization)?;
        let phi2 = Phi2Solution::assemble(&params, &derived, &phi1, &factorizer)
            .map_err(SolveError::Assembly)?;
        Ok(SolverState { params, derived, phi1, factorizer, phi2 })
    }

    pub fn phi1_at(&self, pt: SurfacePoint) -> Complex64 {
        self.phi1.at(pt)
    }

    pub fn phi2_at(&self, pt: SurfacePoint) -> Complex64 {
        self.phi2.phi2_at(&self.factorizer, &self.phi1, pt)
    }

    pub fn x_at(&self, pt: SurfacePoint) -> Complex64 {
        self.factorizer.at(pt)
    }

    /// The map factor `-i lambda / tau1_hat`.
    fn map_factor(&self) -> Complex64 {
        Complex64::new(0.0, -self.derived.lambda / self.params.tau1_hat)
    }

    /// `omega = -i lambda/tau1_hat Phi2^+` on a slit side (upper sheet).
    pub fn omega_side(&self, sv: SideValue) -> Complex64 {
        self.map_factor() * self.phi2.phi2_side(&self.factorizer, &self.phi1, sv)
    }

    /// `omega` at an interior point of the upper sheet.
    pub fn omega_at(&self, pt: SurfacePoint) -> Complex64 {
        self.map_factor() * self.phi2_at(pt)
    }
}
