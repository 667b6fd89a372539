//! Right polarity: the profiles compatible with every indicator in a set.
//!
//! ```bash
//! cargo run -p mbti-szondi --example translate_indicators -- ISTJ,INTJ
//! ```

use mbti_szondi::{Connection, IndicatorSet, Interpretation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> mbti_szondi::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "ISTJ,INTJ".into());
    let set: IndicatorSet = arg.parse()?;
    let conn = Connection::new(Interpretation::builtin());

    println!("i({set}) = {}", conn.translation().lift(set));
    let image = conn.right_polarity(set);
    println!(
        "{} profiles in {} boxes",
        image.count(),
        image.boxes().len()
    );

    let canonical = image.canonical();
    for b in canonical.boxes().iter().take(5) {
        println!("  {b}  ({} profiles)", b.count());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    if image.count() > 0 {
        for _ in 0..3 {
            let p = image.nth(rng.gen_range(0..image.count())).unwrap();
            println!("sample <{p}>");
        }
    }
    Ok(())
}
