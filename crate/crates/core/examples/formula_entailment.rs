//! Parses formulas, counts their models, and decides entailment.

use mbti_szondi::{Formula, Interpretation, TypeIndicator};

fn main() -> mbti_szondi::Result<()> {
    let thinking: Formula = "k- | k+- | k+-^!".parse()?;
    let no_positive_k: Formula =
        "!(k+ | k+! | k+!! | k+!!! | k0 | k-! | k-!! | k-!!! | k+-_!)".parse()?;
    println!("{thinking}: {} models", thinking.models().count());
    println!("{no_positive_k}: {} models", no_positive_k.models().count());
    println!("equivalent: {}", thinking.equivalent(&no_positive_k));

    let interp = Interpretation::builtin();
    let istj = interp.row(TypeIndicator::ALL[0]);
    let intj = interp.row(TypeIndicator::ALL[3]);
    println!("ISTJ = {istj}");
    println!("ISTJ entails thinking: {}", istj.entails(&thinking));
    println!("ISTJ entails INTJ: {}", istj.entails(intj));

    let both = Formula::And(vec![istj.clone(), intj.clone()]);
    match both.models().iter().next() {
        Some(p) => println!("ISTJ and INTJ share <{p}>"),
        None => println!("ISTJ and INTJ share nothing"),
    }
    Ok(())
}
