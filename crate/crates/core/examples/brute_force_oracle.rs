//! Counts the models of every type-indicator row by evaluating it on all
//! 12^8 profiles, and compares with the symbolic counts.
//!
//! Takes several minutes on one core:
//!
//! ```bash
//! cargo run --release -p mbti-szondi --example brute_force_oracle
//! ```

use std::time::Instant;

use mbti_szondi::{oracle, Connection, Formula, IndicatorSet, Interpretation, TypeIndicator};

fn main() {
    let conn = Connection::new(Interpretation::builtin());
    let rows: Vec<Formula> = conn.translation().rows().to_vec();
    let start = Instant::now();
    let counts = oracle::count_all(&rows);
    println!(
        "brute force over 12^8 profiles: {:.1} s",
        start.elapsed().as_secs_f64()
    );
    let mut all_match = true;
    for (t, brute) in TypeIndicator::ALL.iter().zip(&counts) {
        let symbolic = conn.right_polarity(IndicatorSet::singleton(*t)).count();
        let ok = symbolic == *brute;
        all_match &= ok;
        println!(
            "{t} brute={brute} symbolic={symbolic} {}",
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    if !all_match {
        std::process::exit(1);
    }
}
