//! Brute-force verification: enumerate the π-subgroups of Aut(S), intersect
//! the π-maximal ones with S and compare with the classification.
//!
//! ```text
//! cargo run --release --example verify_full
//! ```

use submax::cli::render_report;
use submax::engine::{verify_case, Tier, DEFAULT_BUDGET};
use submax::oracle::CaseKey;
use submax::pi_arith::{Family, FamilyKey, PrimeSet};

fn main() -> submax::Result<()> {
    for (family, q, pi) in [
        (Family::L2TwoP, 8, vec![2, 3]),
        (Family::L2Prime, 13, vec![2, 3]),
        (Family::L3Three, 3, vec![2, 13]),
    ] {
        let case = CaseKey::new(FamilyKey::new(family, q)?, PrimeSet::new(pi)?);
        let report = verify_case(&case, Tier::Full, DEFAULT_BUDGET)?;
        print!("{}", render_report(&report));
        println!("  ({} ms)\n", report.elapsed_ms);
    }
    Ok(())
}
