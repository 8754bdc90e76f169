use crate::integrator::Method;
use crate::lab::strong::StrongErrorReport;

#[derive(Debug, Clone, PartialEq)]
pub enum FitOutcome {
    Fitted {
        /// Least-squares slope of `ln err_x` against `ln h`.
        slope: f64,
        /// `ln(e_i / e_{i+1}) / ln(h_i / h_{i+1})` between consecutive step
        /// sizes; the log2 error ratio when `h` halves.
        local_orders: Vec<f64>,
    },
    /// Every error is within 10x of the floor.
    Saturated,
    InsufficientPoints { usable: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderFit {
    pub method: Method,
    pub omega: f64,
    pub outcome: FitOutcome,
}

/// Fits the observed order of the position error for every `(method, ω)`
/// group of the report. Only errors above `10 * floor` are used; at least
/// three are required.
pub fn convergence_order(report: &StrongErrorReport, floor: f64) -> Vec<OrderFit> {
    let mut groups: Vec<(Method, f64, Vec<(f64, f64)>)> = Vec::new();
    for row in &report.rows {
        match groups.iter_mut().find(|(m, w, _)| *m == row.method && *w == row.omega) {
            Some((_, _, pts)) => pts.push((row.h, row.err_x)),
            None => groups.push((row.method, row.omega, vec![(row.h, row.err_x)])),
        }
    }
    groups
        .into_iter()
        .map(|(method, omega, mut pts)| {
            pts.sort_by(|a, b| b.0.total_cmp(&a.0));
            let usable: Vec<(f64, f64)> =
                pts.into_iter().filter(|&(_, e)| e.is_finite() && e > 10.0 * floor).collect();
            let outcome = match usable.len() {
                0 => FitOutcome::Saturated,
                n if n < 3 => FitOutcome::InsufficientPoints { usable: n },
                _ => fit(&usable),
            };
            OrderFit { method, omega, outcome }
        })
        .collect()
}

fn fit(points: &[(f64, f64)]) -> FitOutcome {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(h, e)| (h.ln(), e.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    let local_orders = logs.windows(2).map(|w| (w[0].1 - w[1].1) / (w[0].0 - w[1].0)).collect();
    FitOutcome::Fitted { slope: sxy / sxx, local_orders }
}
