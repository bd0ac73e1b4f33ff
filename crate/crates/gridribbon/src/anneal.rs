//! Simulated-annealing search over grid moves, minimizing the ribbon
//! length of the diagram, plus a breadth-first oracle for desk-scale
//! verification.

use crate::error::{Error, Result};
use crate::grid::{trace, validate, GridDiagram};
use crate::metrics::ribbon_length;
use crate::moves::{apply, legal_moves, GridMove};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;

/// Annealing parameters. Runs are fully determined by the seed.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchConfig {
    pub max_steps: u64,
    pub seed: u64,
    pub initial_temp: f64,
    pub cooling: f64,
    /// Maximum grid-size growth above the starting size; stabilizations
    /// that would exceed it are not offered.
    pub stab_budget: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_steps: 2_000,
            seed: 0,
            initial_temp: 3.0,
            cooling: 0.999,
            stab_budget: 1,
        }
    }
}

impl SearchConfig {
    fn check(&self) -> Result<()> {
        if self.max_steps == 0 || self.initial_temp <= 0.0 || !(0.0..1.0).contains(&self.cooling)
        {
            return Err(Error::IllegalMove(format!(
                "bad annealing config: {self:?}"
            )));
        }
        Ok(())
    }
}

/// Search log: step counts, acceptance counts, and the length after every
/// accepted move as (step, total) pairs.
#[derive(Clone, Debug, Serialize)]
pub struct AnnealReport {
    pub steps: u64,
    pub accepted: u64,
    pub rejected: u64,
    pub start_total: u64,
    pub best_total: u64,
    pub best_size: usize,
    pub trajectory: Vec<(u64, u64)>,
}

/// Deterministic tie-break: shorter total, then smaller grid, then
/// lexicographically smaller serialization.
fn better(
    cand_total: u64,
    cand: &GridDiagram,
    best_total: u64,
    best: &GridDiagram,
) -> bool {
    (cand_total, cand.size(), cand.black(), cand.white())
        < (best_total, best.size(), best.black(), best.white())
}

/// Anneal from `start`, never returning a diagram longer than the input.
pub fn anneal(start: &GridDiagram, cfg: &SearchConfig) -> Result<(GridDiagram, AnnealReport)> {
    cfg.check()?;
    if !validate(start).is_valid() {
        return Err(Error::InvalidGrid("anneal requires a valid diagram".into()));
    }
    trace(start)?; // single component required

    let max_size = start.size() + cfg.stab_budget;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut current = start.clone();
    let mut current_total = ribbon_length(&current)?.total;
    let mut best = current.clone();
    let mut best_total = current_total;
    let start_total = current_total;

    let mut temp = cfg.initial_temp;
    let mut accepted = 0u64;
    let mut rejected = 0u64;
    let mut trajectory = Vec::new();

    for step in 0..cfg.max_steps {
        let moves: Vec<GridMove> = legal_moves(&current)
            .into_iter()
            .filter(|m| current.size() as isize + m.size_delta() <= max_size as isize)
            .collect();
        if moves.is_empty() {
            break;
        }
        let mv = moves[rng.random_range(0..moves.len())];
        let candidate = apply(&current, mv)?;
        debug_assert!(validate(&candidate).is_valid());
        let cand_total = ribbon_length(&candidate)?.total;
        let delta = cand_total as i64 - current_total as i64;
        let accept = delta <= 0 || rng.random::<f64>() < (-(delta as f64) / temp).exp();
        if accept {
            current = candidate;
            current_total = cand_total;
            accepted += 1;
            trajectory.push((step, current_total));
            if better(current_total, &current, best_total, &best) {
                best = current.clone();
                best_total = current_total;
            }
        } else {
            rejected += 1;
        }
        temp *= cfg.cooling;
    }

    let report = AnnealReport {
        steps: cfg.max_steps,
        accepted,
        rejected,
        start_total,
        best_total,
        best_size: best.size(),
        trajectory,
    };
    Ok((best, report))
}

/// Run `restarts` independent annealing chains (seeds `seed`, `seed+1`, ...)
/// and keep the best result under the deterministic tie-break. Restarts run
/// in parallel when the `parallel` feature is on; the merge is performed in
/// restart order, so the outcome does not depend on scheduling.
pub fn anneal_restarts(
    start: &GridDiagram,
    cfg: &SearchConfig,
    restarts: usize,
) -> Result<(GridDiagram, Vec<AnnealReport>)> {
    if restarts == 0 {
        return Err(Error::IllegalMove("need at least one restart".into()));
    }
    let results = crate::parallel::map_indices(restarts, |i| {
        let mut sub = *cfg;
        sub.seed = cfg.seed.wrapping_add(i as u64);
        anneal(start, &sub)
    });
    merge_restarts(results)
}

/// Serial variant of [`anneal_restarts`] for comparison benchmarks.
pub fn anneal_restarts_serial(
    start: &GridDiagram,
    cfg: &SearchConfig,
    restarts: usize,
) -> Result<(GridDiagram, Vec<AnnealReport>)> {
    if restarts == 0 {
        return Err(Error::IllegalMove("need at least one restart".into()));
    }
    let results = (0..restarts)
        .map(|i| {
            let mut sub = *cfg;
            sub.seed = cfg.seed.wrapping_add(i as u64);
            anneal(start, &sub)
        })
        .collect();
    merge_restarts(results)
}

fn merge_restarts(
    results: Vec<Result<(GridDiagram, AnnealReport)>>,
) -> Result<(GridDiagram, Vec<AnnealReport>)> {
    let mut best: Option<GridDiagram> = None;
    let mut best_total = u64::MAX;
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        let (d, report) = r?;
        let total = report.best_total;
        match &best {
            None => {
                best = Some(d);
                best_total = total;
            }
            Some(b) => {
                if better(total, &d, best_total, b) {
                    best = Some(d);
                    best_total = total;
                }
            }
        }
        reports.push(report);
    }
    Ok((best.expect("at least one restart"), reports))
}

const EXHAUSTIVE_MAX_SIZE: usize = 7;
const EXHAUSTIVE_MAX_DEPTH: usize = 6;

/// Minimum ribbon length reachable from `d` in at most `depth`
/// non-stabilizing moves, by breadth-first enumeration. The oracle for
/// annealing at desk scale; capped at size 7 and depth 6.
pub fn exhaustive_min(d: &GridDiagram, depth: usize) -> Result<u64> {
    if d.size() > EXHAUSTIVE_MAX_SIZE || depth > EXHAUSTIVE_MAX_DEPTH {
        return Err(Error::SearchCapsExceeded {
            size: d.size(),
            max_size: EXHAUSTIVE_MAX_SIZE,
            depth,
            max_depth: EXHAUSTIVE_MAX_DEPTH,
        });
    }
    let mut min_total = ribbon_length(d)?.total;
    let mut visited: HashSet<GridDiagram> = HashSet::new();
    visited.insert(d.clone());
    let mut frontier = vec![d.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for cur in &frontier {
            for mv in legal_moves(cur) {
                if matches!(mv, GridMove::Stabilization { .. }) {
                    continue;
                }
                let cand = apply(cur, mv)?;
                if visited.insert(cand.clone()) {
                    min_total = min_total.min(ribbon_length(&cand)?.total);
                    next.push(cand);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(min_total)
}
