//! Save a state to the JSON state-file format, read it back and confirm the
//! criteria give identical answers.

use kyfan_sep::criteria::{self, CriterionParams};
use kyfan_sep::states;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rho = states::random_density(2, 3, 2024)?;
    let path = std::env::temp_dir().join("kyfan_example_state.json");
    states::write_state(&rho, &path)?;
    let back = states::read_state(&path)?;

    let params = CriterionParams::new(3.0, 0.5)?;
    let before = criteria::kyfan_criterion_test(&rho, params)?.margin;
    let after = criteria::kyfan_criterion_test(&back, params)?.margin;
    println!("wrote {}", path.display());
    println!("margin before {before:+.17e}\nmargin after  {after:+.17e}");
    assert_eq!(rho.matrix(), back.matrix(), "round trip must be lossless");

    // Malformed files are rejected with a description of what is wrong.
    match states::from_json_str(r#"{"dim_a": 1, "dim_b": 1, "matrix": [[[2.0, 0.0]]]}"#) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
