//! Largest white-noise weight for which the Ky Fan bound still certifies
//! entanglement, for a few parameter choices.
//!
//! The family is `(1 - w) rho + w I/(d_A d_B)`.

use kyfan_sep::bounds::{self, Measure, NoiseFamily};
use kyfan_sep::criteria::CriterionParams;
use kyfan_sep::states;

fn main() -> kyfan_sep::Result<()> {
    let families = [("tiles", NoiseFamily::new(states::tiles_ppt_state())), ("Bell", NoiseFamily::new(states::bell_state()))];
    for (name, family) in &families {
        for x in [0.0, 1.0, 5.0, 50.0] {
            let params = CriterionParams::diagonal(x)?;
            let w = bounds::detection_threshold(family, params, Measure::Concurrence)?;
            println!("{name:<6} alpha=beta={x:<5} threshold w* = {w:.6}");
        }
    }
    Ok(())
}
