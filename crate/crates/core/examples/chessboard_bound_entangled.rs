//! A chessboard state with a little white noise is PPT and passes CCNR, yet a
//! large-parameter Ky Fan test still certifies it as entangled.

use kyfan_sep::criteria::{self, CriterionParams};
use kyfan_sep::states::{self, ChessboardParams};

fn main() -> kyfan_sep::Result<()> {
    let params = ChessboardParams::EXAMPLE;
    let pure_board = states::chessboard_state(&params)?;
    let rho = states::mix_white_noise(&pure_board, 0.1)?;

    let ppt = criteria::ppt_test(&rho)?;
    let ccnr = criteria::ccnr_test(&rho)?;
    println!("PPT  min eigenvalue of partial transpose: {:+.6e} (detected {})", -ppt.margin, ppt.detected);
    println!("CCNR margin: {:+.6e} (detected {})", ccnr.margin, ccnr.detected);

    for (alpha, beta) in [(0.0, 0.0), (10.0, 10.0), (100.0, 100.0), (250.0, 240.0), (1000.0, 1000.0)] {
        let v = criteria::kyfan_criterion_test(&rho, CriterionParams::new(alpha, beta)?)?;
        println!("Ky Fan alpha={alpha:>6} beta={beta:>6}: margin {:+.6e} detected {}", v.margin, v.detected);
    }
    Ok(())
}
