//! Writes the cache of all 2^16 right polarities, then answers lookups from
//! it and shows that a cache for another interpretation is refused.
//!
//! ```bash
//! cargo run --release -p mbti-szondi --example precompute_cache -- /tmp/polarities.cache
//! ```

use std::path::PathBuf;
use std::time::Instant;

use mbti_szondi::cache::{self, CacheFile};
use mbti_szondi::{Connection, IndicatorSet, Interpretation};

fn main() -> mbti_szondi::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("mbti-szondi.cache"));
    let conn = Connection::new(Interpretation::builtin());

    let start = Instant::now();
    cache::precompute(&conn, &path)?;
    println!("wrote {} in {:.1?}", path.display(), start.elapsed());

    let file = CacheFile::open(&path)?;
    for query in ["{}", "ENTJ", "ISTJ,INTJ", "INTJ,ENTJ"] {
        let set: IndicatorSet = query.parse()?;
        let stored = file.lookup(conn.translation(), set)?;
        let live = conn.right_polarity(set);
        println!(
            "{set}: {} profiles, matches live: {}",
            stored.count(),
            stored.set_eq(&live)
        );
    }

    let mut rows = Interpretation::builtin().rows().clone();
    rows.swap(0, 1);
    let other = Interpretation::from_rows(rows, None);
    match file.lookup(&other, IndicatorSet::EMPTY) {
        Err(e) => println!("other interpretation: {e}"),
        Ok(_) => println!("other interpretation: accepted"),
    }
    Ok(())
}
