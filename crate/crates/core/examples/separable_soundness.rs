//! Random separable states never violate any Ky Fan test, and their bounds
//! are always reported as zero.

use kyfan_sep::bounds::{self, Measure};
use kyfan_sep::criteria::{self, ParamGrid};
use kyfan_sep::states;

fn main() -> kyfan_sep::Result<()> {
    let grid = ParamGrid::linear_product(0.0, 10.0, 5)?;
    let mut worst = f64::NEG_INFINITY;
    let mut detections = 0usize;
    for seed in 0..200u64 {
        let rho = states::random_separable(3, 3, 1 + (seed as usize % 5), seed)?;
        for &params in grid.points() {
            let v = criteria::kyfan_criterion_test(&rho, params)?;
            worst = worst.max(v.margin);
            detections += usize::from(v.detected);
            assert_eq!(bounds::lower_bound(Measure::Concurrence, &rho, params)?.bound, 0.0);
        }
    }
    println!("200 states x {} parameter pairs: {detections} detections, largest margin {worst:+.3e}", grid.len());
    Ok(())
}
