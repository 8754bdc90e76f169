use crate::error::{Error, Result};
use crate::integrator::{KernelMode, Method, StepScheme};
use crate::model::{OscillatorProblem, State};
use crate::quadrature::DEFAULT_NODES;
use crate::wiener::WienerPath;

/// Fine-grid comparator for strong errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reference {
    pub state: State,
    /// Set when the forcing has no closed-form kernel and Filon was used on
    /// the fine grid instead.
    pub used_fallback: bool,
}

pub(crate) fn reference_scheme(problem: &OscillatorProblem, n_fine: usize) -> Result<(StepScheme, bool)> {
    let h = problem.t_end() / n_fine as f64;
    if problem.forcing().terms().is_some() {
        Ok((StepScheme::new(problem.clone(), h, KernelMode::ExactTrig)?, false))
    } else {
        Ok((StepScheme::new(problem.clone(), h, Method::Filon.kernel_mode(DEFAULT_NODES))?, true))
    }
}

/// Final state of the exact-kernel scheme on the path's own fine grid.
pub fn reference_solution(problem: &OscillatorProblem, path: &WienerPath) -> Result<Reference> {
    if (path.t_end() - problem.t_end()).abs() > 1e-12 * problem.t_end() {
        return Err(Error::InvalidWienerGrid(format!(
            "path ends at {} but the problem ends at {}",
            path.t_end(),
            problem.t_end()
        )));
    }
    let (scheme, used_fallback) = reference_scheme(problem, path.n_fine())?;
    Ok(Reference { state: scheme.integrate_final(path.increments())?, used_fallback })
}
