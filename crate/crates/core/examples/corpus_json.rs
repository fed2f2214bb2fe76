//! Corpus runner: parse a corpus document, verify every case in parallel
//! and print one canonical JSON report per line. The output is identical
//! for any thread count.
//!
//! ```text
//! cargo run --release --example corpus_json
//! ```

use submax::cli::{parse_corpus, run_corpus, to_json, ReportDoc};
use submax::engine::DEFAULT_BUDGET;

const CORPUS: &str = r#"{"schema":1,"cases":[
  {"family":"l2-2p","q":4,"pi":[2,3],"tier":"full"},
  {"family":"l2-prime","q":7,"pi":[2,3],"tier":"full"},
  {"family":"l2-prime","q":7,"pi":[3,7],"tier":"targeted"}
]}"#;

fn main() {
    let corpus = parse_corpus(CORPUS).expect("valid corpus");
    for report in run_corpus(&corpus, DEFAULT_BUDGET) {
        println!("{}", to_json(&ReportDoc::new(&report)));
    }
}
