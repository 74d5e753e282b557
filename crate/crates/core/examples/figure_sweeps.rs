//! Write CSV sweeps of the CREN bound for the noisy tiles state, one file per
//! parameter choice, into the directory given as the first argument (default:
//! the system temp directory).

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use kyfan_sep::bounds::Measure;
use kyfan_sep::criteria::CriterionParams;
use kyfan_sep::states;
use kyfan_sep::sweep::{self, SweepSpec, SweepVariable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args_os().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let rho = states::tiles_ppt_state();
    for x in [1.0, 7.0] {
        let spec = SweepSpec::new(SweepVariable::NoiseWeight, 0.0, 0.2, 41, CriterionParams::diagonal(x)?)?;
        let rows = sweep::run_sweep(&rho, &spec, Measure::Cren)?;
        let path = dir.join(format!("tiles_cren_alpha{x}.csv"));
        sweep::write_csv(&rows, BufWriter::new(File::create(&path)?))?;
        let last_positive = rows.iter().filter(|r| !r.clamped).map(|r| r.x).fold(f64::NAN, f64::max);
        println!("{}: {} rows, last certified w = {last_positive:.3}", path.display(), rows.len());
    }
    Ok(())
}
