//! Group construction and identification: build PSL2(q) and Sz(q) as
//! permutation groups, compute their orders with Schreier–Sims, and name
//! the Sylow subgroups and point stabilisers.
//!
//! ```text
//! cargo run --release --example groups
//! ```

use submax::bsgs::PermGroup;
use submax::classes::sylow_subgroup;
use submax::groups::{psl2, sz};
use submax::pi_arith::prime_support;
use submax::structid::identify;

fn describe(name: &str, g: &PermGroup) -> submax::Result<()> {
    println!("{name}: degree {}, order {}", g.degree(), g.order());
    for &p in prime_support(g.order())?.primes() {
        let sylow = sylow_subgroup(g, p)?;
        println!("  Sylow {p}: {}", identify(&sylow));
    }
    Ok(())
}

fn main() -> submax::Result<()> {
    describe("L2(7)", &psl2(7)?)?;
    describe("L2(27)", &psl2(27)?)?;
    describe("Sz(8)", &sz(8)?)?;
    Ok(())
}
