//! Compare the PPT, CCNR and enhanced realignment tests with the Ky Fan
//! family on a few standard states.
//!
//! With alpha = beta = 0 the Ky Fan test collapses to CCNR; raising the
//! parameters can only help on states whose marginals are not maximally mixed.

use kyfan_sep::criteria::{self, CriterionParams};
use kyfan_sep::{states, BipartiteDensityMatrix};

fn report(name: &str, rho: &BipartiteDensityMatrix) -> kyfan_sep::Result<()> {
    println!("{name} ({}x{})", rho.dim_a(), rho.dim_b());
    for v in [criteria::ppt_test(rho)?, criteria::ccnr_test(rho)?, criteria::enhanced_realignment_test(rho)?] {
        println!("  {:<22} margin {:+.6e}  detected {}", v.criterion.to_string(), v.margin, v.detected);
    }
    for x in [0.0, 1.0, 10.0, 100.0] {
        let params = CriterionParams::diagonal(x)?;
        let v = criteria::kyfan_criterion_test(rho, params)?;
        println!("  Ky Fan {params:<28} margin {:+.6e}  detected {}", v.margin, v.detected);
    }
    Ok(())
}

fn main() -> kyfan_sep::Result<()> {
    report("Bell state", &states::bell_state())?;
    report("tiles bound-entangled state", &states::tiles_ppt_state())?;
    report("random separable 3x3", &states::random_separable(3, 3, 4, 11)?)?;
    report("Ginibre 2x3", &states::random_density(2, 3, 5)?)?;
    Ok(())
}
