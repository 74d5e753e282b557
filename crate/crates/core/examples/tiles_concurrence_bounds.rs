//! Concurrence and CREN lower bounds for the tiles UPB state.

use kyfan_sep::bounds::{self, Measure};
use kyfan_sep::criteria::CriterionParams;
use kyfan_sep::states;

fn main() -> kyfan_sep::Result<()> {
    let rho = states::tiles_ppt_state();
    println!("{:>8}  {:>12}  {:>12}", "alpha", "concurrence", "CREN");
    for x in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0] {
        let params = CriterionParams::diagonal(x)?;
        let c = bounds::lower_bound(Measure::Concurrence, &rho, params)?;
        let n = bounds::lower_bound(Measure::Cren, &rho, params)?;
        println!("{x:>8}  {:>12.7}  {:>12.7}", c.bound, n.bound);
    }
    Ok(())
}
