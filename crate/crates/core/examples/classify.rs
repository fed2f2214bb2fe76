//! Symbolic classification: print the predicted π-submaximal classes of a
//! minimal simple group.
//!
//! ```text
//! cargo run --example classify -- l2-prime 13 2,3
//! ```

use submax::cli::{parse_case, render_classify};
use submax::oracle::classify;

fn main() -> submax::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family = args.first().map_or("l2-prime", String::as_str);
    let q = args.get(1).map_or(Ok(13), |s| s.parse()).expect("q is an integer");
    let pi = args.get(2).map_or("2,3", String::as_str);

    let case = parse_case(family, Some(q), pi)?;
    let result = classify(&case)?;
    print!("{}", render_classify(&case, &result));
    Ok(())
}
