//! Grid search for the (alpha, beta) pair with the largest Ky Fan margin.

use kyfan_sep::criteria::{self, ParamGrid};
use kyfan_sep::reproduce::chessboard_example_state;
use kyfan_sep::states;

fn main() -> kyfan_sep::Result<()> {
    let cases = [
        ("noisy chessboard", chessboard_example_state()?),
        ("tiles", states::tiles_ppt_state()),
        ("Ginibre 3x3", states::random_density(3, 3, 42)?),
    ];
    let standard = ParamGrid::standard();
    let coarse = ParamGrid::log_product(0.1, 100.0, 4)?;
    for (name, rho) in &cases {
        for (label, grid) in [("standard", &standard), ("coarse", &coarse)] {
            let (best, v) = criteria::optimize_params(rho, grid)?;
            println!("{name:<17} {label:<8} ({:>3} points): {best}, margin {:+.6e}, detected {}", grid.len(), v.margin, v.detected);
        }
    }
    Ok(())
}
