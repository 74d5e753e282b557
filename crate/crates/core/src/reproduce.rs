//! The four reference checkpoints, recomputed from scratch.

use crate::bounds::{self, Measure, NoiseFamily};
use crate::criteria::{self, CriterionParams};
use crate::error::Result;
use crate::states::{self, ChessboardParams};

#[derive(Debug, Clone, PartialEq)]
pub struct Checkpoint {
    pub name: &'static str,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
}

impl Checkpoint {
    pub fn deviation(&self) -> f64 {
        (self.computed - self.expected).abs()
    }

    pub fn passed(&self) -> bool {
        self.deviation() <= self.tolerance
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReproduceOptions {
    /// `alpha` for the chessboard checkpoint; 250 unless deliberately perturbed.
    pub chessboard_alpha: f64,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions { chessboard_alpha: 250.0 }
    }
}

/// Chessboard state at state weight 0.9, i.e. noise weight 0.1.
pub fn chessboard_example_state() -> Result<crate::BipartiteDensityMatrix> {
    states::mix_white_noise(&states::chessboard_state(&ChessboardParams::EXAMPLE)?, 0.1)
}

pub fn run_checkpoints(options: ReproduceOptions) -> Result<Vec<Checkpoint>> {
    let chess = chessboard_example_state()?;
    let margin = criteria::kyfan_criterion_test(&chess, CriterionParams::new(options.chessboard_alpha, 240.0)?)?.margin;

    let tiles = states::tiles_ppt_state();
    let c1 = bounds::concurrence_lower_bound(&tiles, CriterionParams::diagonal(1.0)?)?.bound;
    let c100 = bounds::concurrence_lower_bound(&tiles, CriterionParams::diagonal(100.0)?)?.bound;
    let threshold =
        bounds::detection_threshold(&NoiseFamily::new(tiles), CriterionParams::diagonal(5.0)?, Measure::Concurrence)?;

    Ok(vec![
        Checkpoint { name: "chessboard Ky Fan margin (alpha=250, beta=240)", computed: margin, expected: 0.0027, tolerance: 5e-4 },
        Checkpoint { name: "tiles concurrence bound (alpha=beta=1)", computed: c1, expected: 0.05399, tolerance: 1e-4 },
        Checkpoint { name: "tiles concurrence bound (alpha=beta=100)", computed: c100, expected: 0.055549, tolerance: 1e-5 },
        Checkpoint { name: "tiles noise threshold (alpha=beta=5)", computed: threshold, expected: 0.1177, tolerance: 2e-3 },
    ])
}
