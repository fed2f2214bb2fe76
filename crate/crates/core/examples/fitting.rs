//! Reduction modulo the Fitting subgroup: for G = SL2(5), check that the
//! π-submaximal subgroups of G are exactly the preimages of those of
//! G/F(G) ≅ L2(4), for every π ⊆ {2, 3, 5}.
//!
//! ```text
//! cargo run --release --example fitting
//! ```

use submax::engine::verify_fitting_reduction;
use submax::groups::sl2_5;
use submax::pi_arith::PrimeSet;

fn main() -> submax::Result<()> {
    let g = sl2_5()?;
    for pi in PrimeSet::new([2, 3, 5])?.subsets() {
        let report = verify_fitting_reduction(&g, &pi)?;
        println!(
            "π = {pi:<9} |F(G)| = {}  images match: {}  {}",
            report.fitting_order,
            report.images_match,
            report.verdict().label()
        );
        for note in &report.notes {
            println!("  - {note}");
        }
    }
    Ok(())
}
