//! Targeted verification for L2(q), q prime, where full subgroup enumeration
//! is out of reach: candidate subgroups are built directly and checked by
//! element streaming.
//!
//! ```text
//! cargo run --release --example targeted -- 137 2,3
//! ```

use submax::cli::render_report;
use submax::engine::{verify_case, Tier, DEFAULT_BUDGET};
use submax::oracle::CaseKey;
use submax::pi_arith::{Family, FamilyKey};

fn main() -> submax::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q = args.first().map_or(Ok(137), |s| s.parse()).expect("q is an integer");
    let pi = args.get(1).map_or("2,3", String::as_str);

    let case = CaseKey::new(FamilyKey::new(Family::L2Prime, q)?, pi.parse()?);
    let report = verify_case(&case, Tier::Targeted, DEFAULT_BUDGET)?;
    print!("{}", render_report(&report));
    println!("  ({} ms)", report.elapsed_ms);
    Ok(())
}
