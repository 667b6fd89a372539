//! Left polarity of single profiles and of a small list.

use mbti_szondi::{Connection, Interpretation, Profile};

fn main() -> mbti_szondi::Result<()> {
    let conn = Connection::new(Interpretation::builtin());
    let profiles: Vec<Profile> = [
        "h+ s+ e- hy- k- p- d+ m+",
        "h0 s0 e0 hy-! k+-^! p+! d0 m0",
        "h0 s0 e0 hy-! k+-^! p+!! d0 m+-^!",
    ]
    .iter()
    .map(|s| s.parse())
    .collect::<Result<_, _>>()?;

    for p in &profiles {
        println!(
            "<{p}> -> {}",
            conn.left_polarity_of(std::slice::from_ref(p))
        );
    }
    // Adding profiles can only shrink the common indicators.
    println!("all three -> {}", conn.left_polarity_of(&profiles));
    println!("last two -> {}", conn.left_polarity_of(&profiles[1..]));
    Ok(())
}
