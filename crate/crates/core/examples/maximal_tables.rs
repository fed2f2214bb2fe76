//! Maximal subgroups: compute the maximal subgroup classes of each small
//! minimal simple group and compare them with the tabulated ones.
//!
//! ```text
//! cargo run --release --example maximal_tables
//! ```

use submax::engine::verify_maximal_tables;
use submax::pi_arith::{Family, FamilyKey};

fn main() -> submax::Result<()> {
    for (family, q) in [
        (Family::L2TwoP, 8),
        (Family::L2Prime, 13),
        (Family::L2ThreeP, 27),
        (Family::L3Three, 3),
        (Family::Sz, 8),
    ] {
        let report = verify_maximal_tables(FamilyKey::new(family, q)?)?;
        println!("{}: {}", report.key, report.verdict.label());
        for row in &report.table {
            println!("  table   {:<16} classes {}", row.descriptor.to_string(), row.ncc);
        }
        for (d, n) in &report.computed {
            println!("  found   {:<16} classes {}", d.to_string(), n);
        }
        for d in report.verdict.details() {
            println!("  - {d}");
        }
    }
    Ok(())
}
