//! Pure states in Schmidt form: exact concurrence and CREN against the Ky Fan
//! lower bounds, and the decomposition of `M(psi)` into its diagonal part plus
//! the cross terms `2 sum_{i<j} sqrt(lambda_i lambda_j)`.

use kyfan_sep::bounds::{self, Measure};
use kyfan_sep::criteria::CriterionParams;
use kyfan_sep::{states, SchmidtSpectrum};

fn main() -> kyfan_sep::Result<()> {
    let spectra = [vec![1.0, 0.0, 0.0], vec![0.5, 0.5, 0.0], vec![0.6, 0.3, 0.1], vec![1.0 / 3.0; 3]];
    for lambdas in spectra {
        let spectrum = SchmidtSpectrum::new(lambdas)?;
        let psi = states::pure_from_schmidt(&spectrum, 3, 3)?;
        let rho = psi.to_density();
        let params = CriterionParams::diagonal(1.0)?;
        let c = bounds::pure_concurrence(&psi)?;
        let n = bounds::pure_cren(&psi)?;
        let cb = bounds::lower_bound(Measure::Concurrence, &rho, params)?.bound;
        let nb = bounds::lower_bound(Measure::Cren, &rho, params)?.bound;
        let (lhs, rhs) = bounds::pure_m_decomposition_check(&psi, params)?;
        println!(
            "lambda={:?}\n  C={c:.6} >= {cb:.6}   N={n:.6} >= {nb:.6}   |M|={lhs:.12} split={rhs:.12}",
            spectrum.lambdas()
        );
    }
    Ok(())
}
