//! Approximation-ratio experiments: greedy total against an exact optimum on
//! seeded random instances.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{brute_force_opt, solve_shared_vertex_paths, SolveBudget};
use crate::gen::{random_instance, GenConfig, Shape};
use crate::greedy::{bottom_up_greedy, OrderPolicy};

pub const CSV_HEADER: &str = "seed,tree_size,subtree_count,M,greedy,opt,ratio";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactMethod {
    Oracle,
    SharedVertexPaths,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptOutcome {
    Exact(u64),
    /// The search ran out of budget; the best total seen is a lower bound.
    BudgetExceeded {
        lower_bound: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub seed: u64,
    pub tree_size: usize,
    pub subtree_count: usize,
    pub max_leaves: usize,
    pub greedy_total: u64,
    pub opt: OptOutcome,
}

impl RatioRow {
    /// `opt / greedy`, or 1 when both are zero. `None` without an exact optimum.
    pub fn ratio(&self) -> Option<f64> {
        match self.opt {
            OptOutcome::Exact(_) if self.greedy_total == 0 => Some(1.0),
            OptOutcome::Exact(opt) => Some(opt as f64 / self.greedy_total as f64),
            OptOutcome::BudgetExceeded { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aggregate {
    pub count: usize,
    /// Rows with an exact optimum; the ratio statistics cover only these.
    pub exact_count: usize,
    pub max_ratio: Option<f64>,
    pub mean_ratio: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RatioReport {
    pub rows: Vec<RatioRow>,
}

impl RatioReport {
    pub fn aggregate(&self) -> Aggregate {
        let ratios: Vec<f64> = self.rows.iter().filter_map(RatioRow::ratio).collect();
        let max_ratio = ratios.iter().copied().reduce(f64::max);
        let mean_ratio = (!ratios.is_empty()).then(|| ratios.iter().sum::<f64>() / ratios.len() as f64);
        Aggregate {
            count: self.rows.len(),
            exact_count: ratios.len(),
            max_ratio,
            mean_ratio,
        }
    }

    /// One line per row under [`CSV_HEADER`]. Rows without an exact optimum
    /// show `budget_exceeded>=LB` in the `opt` column and `NA` as ratio.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let (opt, ratio) = match (row.opt, row.ratio()) {
                (OptOutcome::Exact(opt), Some(r)) => (opt.to_string(), format!("{r:.6}")),
                (OptOutcome::BudgetExceeded { lower_bound }, _) => {
                    (format!("budget_exceeded>={lower_bound}"), "NA".to_string())
                }
                (OptOutcome::Exact(opt), None) => (opt.to_string(), "NA".to_string()),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                row.seed, row.tree_size, row.subtree_count, row.max_leaves, row.greedy_total, opt, ratio
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let agg = self.aggregate();
        let show = |x: Option<f64>| x.map_or_else(|| "undefined".to_string(), |v| format!("{v:.6}"));
        format!(
            "trials={} exact={} budget_exceeded={} max_ratio={} mean_ratio={}",
            agg.count,
            agg.exact_count,
            agg.count - agg.exact_count,
            show(agg.max_ratio),
            show(agg.mean_ratio)
        )
    }
}

fn run_trial(config: &GenConfig, seed: u64, method: ExactMethod, budget: &SolveBudget) -> Result<RatioRow> {
    let instance = random_instance(&config.with_seed(seed))?;
    let (greedy, _) = bottom_up_greedy(&instance, &OrderPolicy::default())?;
    let exact = match method {
        ExactMethod::Oracle => brute_force_opt(&instance, budget),
        ExactMethod::SharedVertexPaths => solve_shared_vertex_paths(&instance, budget),
    };
    let opt = match exact {
        Ok(sol) => OptOutcome::Exact(sol.total()),
        Err(Error::BudgetExceeded { best_lower_bound, .. }) => OptOutcome::BudgetExceeded {
            lower_bound: best_lower_bound.max(greedy.total()),
        },
        Err(e) => return Err(e),
    };
    Ok(RatioRow {
        seed,
        tree_size: instance.tree().vertex_count(),
        subtree_count: instance.len(),
        max_leaves: instance.max_nonroot_leaves(),
        greedy_total: greedy.total(),
        opt,
    })
}

/// Runs `trials` instances with seeds `config.seed, config.seed + 1, ...`.
/// Trials run in parallel; rows stay in trial order.
pub fn run_ratio_experiment(
    config: &GenConfig,
    trials: usize,
    method: ExactMethod,
    budget: &SolveBudget,
) -> Result<RatioReport> {
    config.validate()?;
    if method == ExactMethod::SharedVertexPaths
        && !matches!(config.shape, Shape::RootCrossingPaths | Shape::DirectedPaths)
    {
        return Err(Error::InvalidConfig(
            "the shared-vertex solver needs directed or root-crossing paths".into(),
        ));
    }
    let rows = (0..trials as u64)
        .into_par_iter()
        .map(|t| run_trial(config, config.seed.wrapping_add(t), method, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let report =
            run_ratio_experiment(&GenConfig::default(), 0, ExactMethod::Oracle, &SolveBudget::default()).unwrap();
        assert!(report.rows.is_empty());
        let agg = report.aggregate();
        assert_eq!(agg.max_ratio, None);
        assert_eq!(agg.mean_ratio, None);
        assert_eq!(report.to_csv(), format!("{CSV_HEADER}\n"));
        assert!(report.summary().contains("max_ratio=undefined"));
    }

    #[test]
    fn shared_method_needs_compatible_shape() {
        let err = run_ratio_experiment(
            &GenConfig::default(),
            1,
            ExactMethod::SharedVertexPaths,
            &SolveBudget::default(),
        );
        assert!(matches!(err, Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn budget_rows_are_kept_and_flagged() {
        let config = GenConfig::default().with_seed(3);
        let report = run_ratio_experiment(&config, 4, ExactMethod::Oracle, &SolveBudget::with_node_limit(1)).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert!(report
            .rows
            .iter()
            .all(|r| matches!(r.opt, OptOutcome::BudgetExceeded { lower_bound } if lower_bound >= r.greedy_total)));
        assert!(report.to_csv().contains("budget_exceeded>="));
        assert_eq!(report.aggregate().exact_count, 0);
    }

    #[test]
    fn zero_greedy_reports_ratio_one() {
        let row = RatioRow {
            seed: 0,
            tree_size: 1,
            subtree_count: 1,
            max_leaves: 0,
            greedy_total: 0,
            opt: OptOutcome::Exact(0),
        };
        assert_eq!(row.ratio(), Some(1.0));
    }
}
