//! The D_π property: G satisfies D_π when all its π-maximal subgroups are
//! conjugate. Compares a brute-force check with the arithmetic criterion for
//! L2(q), which applies when 2 ∉ π and π contains the characteristic of q
//! (it prints `None` otherwise).
//!
//! ```text
//! cargo run --release --example dpi
//! ```

use submax::engine::dpi_check;
use submax::groups::psl2;
use submax::oracle::{dpi_l2_criterion, simple_primes, CaseKey};
use submax::pi_arith::{Family, FamilyKey, PrimeSet};

fn main() -> submax::Result<()> {
    for (family, q) in [(Family::L2Prime, 7), (Family::L2Prime, 13), (Family::L2TwoP, 8)] {
        let key = FamilyKey::new(family, q)?;
        let g = psl2(q)?;
        let odd: Vec<u64> = simple_primes(&key).iter().filter(|&p| p != 2).collect();
        for pi in PrimeSet::new(odd)?.subsets() {
            let case = CaseKey::new(key, pi.clone());
            let computed = dpi_check(&g, &pi)?;
            let predicted = dpi_l2_criterion(&case);
            println!("{case}: D_π computed {computed}, criterion {predicted:?}");
        }
    }
    Ok(())
}

