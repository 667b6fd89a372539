//! Builds an interpretation from basic translations, validates it, and
//! compares one query against the built-in table.

use mbti_szondi::interpretation::validate;
use mbti_szondi::{
    pattern, BasicKey, Connection, Dominance, Factor, Formula, IndicatorSet, Interpretation,
    PatternSpec, Polarity, Profile,
};

fn main() -> mbti_szondi::Result<()> {
    let builtin = Interpretation::builtin();
    let mut basic = builtin.basic().expect("built-in basics").clone();

    // Read extraversion and introversion from the s factor instead of hy.
    let s = |polarity, dominance| pattern(PatternSpec::new(Factor::S, polarity, dominance));
    basic.set(
        BasicKey::Extraversion,
        Formula::Or(vec![
            s(Polarity::Positive, Dominance::Dominant),
            Formula::atom(Factor::S, "+".parse()?),
        ]),
    );
    basic.set(
        BasicKey::Introversion,
        Formula::Or(vec![
            s(Polarity::Negative, Dominance::Dominant),
            Formula::atom(Factor::S, "-".parse()?),
        ]),
    );

    let custom = Interpretation::from_basic(basic);
    let report = validate(&custom);
    println!("errors {:?}", report.errors);
    println!("warnings {:?}", report.warnings);
    println!("fingerprint {}", custom.fingerprint());

    let set: IndicatorSet = "INTJ".parse()?;
    let (old, new) = (Connection::new(builtin), Connection::new(custom.clone()));
    let overlap = old
        .right_polarity(set)
        .intersection(&new.right_polarity(set));
    println!(
        "→{set}: built-in {}, custom {}, shared {}",
        old.right_polarity(set).count(),
        new.right_polarity(set).count(),
        overlap.count()
    );
    let p: Profile = "h0 s0 e0 hy-! k+-^! p+! d0 m0".parse()?;
    println!(
        "<{p}>: built-in {}, custom {}",
        old.left_polarity_of(&[p]),
        new.left_polarity_of(&[p])
    );

    // The document form loads back to the same rows.
    let reloaded = Interpretation::load(&custom.to_document())?;
    assert_eq!(reloaded.fingerprint(), custom.fingerprint());
    Ok(())
}
