//! Runs the randomized verification suite on the built-in interpretation.
//!
//! ```bash
//! cargo run --release -p mbti-szondi --example verify_connection -- 500
//! ```

use mbti_szondi::polarity::DEFAULT_SEED;
use mbti_szondi::{Connection, Interpretation, Suite};

fn main() {
    let trials = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let conn = Connection::new(Interpretation::builtin());
    let report = conn.verify_interpretation(Suite::All, trials, DEFAULT_SEED);
    print!("{}", report.render());
    if !report.passed() {
        std::process::exit(3);
    }
}
