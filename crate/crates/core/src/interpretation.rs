//! Translations into the pivot language: `i` from type indicators (the built-in
//! table, its generating pattern and the J/P dominance rule, or a
//! user-supplied document) and `p` from profiles.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::model::{
    Attitude, Factor, IndicatorSet, Judgment, Perception, Profile, Signature, TypeIndicator,
    INDICATOR_COUNT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dominance {
    Dominant,
    NonDominant,
}

/// Parameters of the per-factor generating pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternSpec {
    pub factor: Factor,
    pub polarity: Polarity,
    pub dominance: Dominance,
}

impl PatternSpec {
    pub fn new(factor: Factor, polarity: Polarity, dominance: Dominance) -> Self {
        PatternSpec {
            factor,
            polarity,
            dominance,
        }
    }

    /// The signatures the pattern admits for its factor.
    pub fn signatures(&self) -> &'static [Signature] {
        use Signature::*;
        match (self.polarity, self.dominance) {
            (Polarity::Positive, Dominance::NonDominant) => {
                &[Plus, Ambivalent, AmbivalentRejecting]
            }
            (Polarity::Negative, Dominance::NonDominant) => {
                &[Minus, Ambivalent, AmbivalentApproving]
            }
            (Polarity::Positive, Dominance::Dominant) => {
                &[PlusSingle, PlusDouble, PlusTriple, AmbivalentApproving]
            }
            (Polarity::Negative, Dominance::Dominant) => {
                &[MinusSingle, MinusDouble, MinusTriple, AmbivalentRejecting]
            }
        }
    }
}

/// Expands a generating pattern into its disjunction of atoms.
pub fn pattern(spec: PatternSpec) -> Formula {
    Formula::any_of(spec.factor, spec.signatures())
}

/// Keys of the ten basic translations: the two attitudes and each of the four
/// faculties at both dominance levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicKey {
    Extraversion,
    Introversion,
    Feeling,
    FeelingDominant,
    Thinking,
    ThinkingDominant,
    Intuition,
    IntuitionDominant,
    Sensing,
    SensingDominant,
}

impl BasicKey {
    pub const ALL: [BasicKey; 10] = [
        BasicKey::Extraversion,
        BasicKey::Introversion,
        BasicKey::Feeling,
        BasicKey::FeelingDominant,
        BasicKey::Thinking,
        BasicKey::ThinkingDominant,
        BasicKey::Intuition,
        BasicKey::IntuitionDominant,
        BasicKey::Sensing,
        BasicKey::SensingDominant,
    ];

    /// Document key: `E I F F! T T! N N! S S!`.
    pub fn token(self) -> &'static str {
        match self {
            BasicKey::Extraversion => "E",
            BasicKey::Introversion => "I",
            BasicKey::Feeling => "F",
            BasicKey::FeelingDominant => "F!",
            BasicKey::Thinking => "T",
            BasicKey::ThinkingDominant => "T!",
            BasicKey::Intuition => "N",
            BasicKey::IntuitionDominant => "N!",
            BasicKey::Sensing => "S",
            BasicKey::SensingDominant => "S!",
        }
    }

    pub fn from_token(token: &str) -> Option<BasicKey> {
        BasicKey::ALL.into_iter().find(|k| k.token() == token)
    }

    fn index(self) -> usize {
        self as usize
    }

    fn attitude(a: Attitude) -> BasicKey {
        match a {
            Attitude::Extraversion => BasicKey::Extraversion,
            Attitude::Introversion => BasicKey::Introversion,
        }
    }

    fn perception(p: Perception, dominant: bool) -> BasicKey {
        match (p, dominant) {
            (Perception::Sensing, false) => BasicKey::Sensing,
            (Perception::Sensing, true) => BasicKey::SensingDominant,
            (Perception::Intuition, false) => BasicKey::Intuition,
            (Perception::Intuition, true) => BasicKey::IntuitionDominant,
        }
    }

    fn judgment(j: Judgment, dominant: bool) -> BasicKey {
        match (j, dominant) {
            (Judgment::Thinking, false) => BasicKey::Thinking,
            (Judgment::Thinking, true) => BasicKey::ThinkingDominant,
            (Judgment::Feeling, false) => BasicKey::Feeling,
            (Judgment::Feeling, true) => BasicKey::FeelingDominant,
        }
    }
}

impl fmt::Display for BasicKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// The ten basic translations, indexed by [`BasicKey`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicTranslations([Formula; 10]);

impl BasicTranslations {
    pub fn new(formulas: [Formula; 10]) -> Self {
        BasicTranslations(formulas)
    }

    pub fn get(&self, key: BasicKey) -> &Formula {
        &self.0[key.index()]
    }

    pub fn set(&mut self, key: BasicKey, formula: Formula) {
        self.0[key.index()] = formula;
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasicKey, &Formula)> {
        BasicKey::ALL.into_iter().zip(self.0.iter())
    }

    /// The row an indicator gets under the dominance rule: the attitude, then
    /// the perceiving and judging faculties, exactly one of them dominant.
    pub fn compose(&self, indicator: TypeIndicator) -> Formula {
        let perception_dominant = indicator.perception_is_dominant();
        Formula::And(vec![
            self.get(BasicKey::attitude(indicator.attitude)).clone(),
            self.get(BasicKey::perception(
                indicator.perception,
                perception_dominant,
            ))
            .clone(),
            self.get(BasicKey::judgment(indicator.judgment, !perception_dominant))
                .clone(),
        ])
    }

    pub fn synthesize_rows(&self) -> [Formula; INDICATOR_COUNT] {
        TypeIndicator::ALL.map(|t| self.compose(t))
    }
}

/// A translation `i` of type indicators into the pivot language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    basic: Option<BasicTranslations>,
    rows: [Formula; INDICATOR_COUNT],
}

/// Lifts rows to indicator sets by conjunction; the empty set maps to `TRUE`.
pub fn conjoin_rows<'a>(rows: impl IntoIterator<Item = &'a Formula>) -> Formula {
    let mut parts: Vec<Formula> = rows.into_iter().cloned().collect();
    match parts.len() {
        0 => Formula::Top,
        1 => parts.pop().expect("one row"),
        _ => Formula::And(parts),
    }
}

impl Interpretation {
    /// Builds an interpretation from the ten basic translations, deriving the
    /// sixteen rows by the dominance rule.
    pub fn from_basic(basic: BasicTranslations) -> Self {
        let rows = basic.synthesize_rows();
        Interpretation {
            basic: Some(basic),
            rows,
        }
    }

    /// Builds an interpretation from explicit rows in [`TypeIndicator::ALL`]
    /// order, optionally keeping the basic translations they came from.
    pub fn from_rows(rows: [Formula; INDICATOR_COUNT], basic: Option<BasicTranslations>) -> Self {
        Interpretation { basic, rows }
    }

    /// The built-in translation table.
    pub fn builtin() -> Self {
        let basic = builtin_basic();
        let b = |key| basic.get(key).clone();
        use BasicKey::*;
        // Attitude, perception, judgment.
        let row = |a: BasicKey, p: BasicKey, j: BasicKey| Formula::And(vec![b(a), b(p), b(j)]);
        let rows = [
            row(Introversion, SensingDominant, Thinking),   // ISTJ
            row(Introversion, SensingDominant, Feeling),    // ISFJ
            row(Introversion, IntuitionDominant, Feeling),  // INFJ
            row(Introversion, IntuitionDominant, Thinking), // INTJ
            row(Introversion, Sensing, ThinkingDominant),   // ISTP
            row(Introversion, Sensing, FeelingDominant),    // ISFP
            row(Introversion, Intuition, FeelingDominant),  // INFP
            row(Introversion, Intuition, ThinkingDominant), // INTP
            row(Extraversion, SensingDominant, Thinking),   // ESTP
            row(Extraversion, SensingDominant, Feeling),    // ESFP
            row(Extraversion, IntuitionDominant, Feeling),  // ENFP
            row(Extraversion, IntuitionDominant, Thinking), // ENTP
            row(Extraversion, Sensing, ThinkingDominant),   // ESTJ
            row(Extraversion, Sensing, FeelingDominant),    // ESFJ
            row(Extraversion, Intuition, FeelingDominant),  // ENFJ
            row(Extraversion, Intuition, ThinkingDominant), // ENTJ
        ];
        Interpretation {
            basic: Some(basic),
            rows,
        }
    }

    pub fn basic(&self) -> Option<&BasicTranslations> {
        self.basic.as_ref()
    }

    pub fn row(&self, indicator: TypeIndicator) -> &Formula {
        &self.rows[indicator.index()]
    }

    pub fn rows(&self) -> &[Formula; INDICATOR_COUNT] {
        &self.rows
    }

    /// `i(I)`: the conjunction of the rows of `set`.
    pub fn lift(&self, set: IndicatorSet) -> Formula {
        conjoin_rows(set.iter().map(|t| self.row(t)))
    }

    pub fn is_negation_free(&self) -> bool {
        self.rows.iter().all(Formula::is_negation_free)
    }

    /// Indicators whose row differs from the composition the dominance rule
    /// prescribes. Without basic translations every indicator is reported.
    pub fn dominance_violations(&self) -> Vec<TypeIndicator> {
        match &self.basic {
            None => TypeIndicator::ALL.to_vec(),
            Some(basic) => TypeIndicator::ALL
                .into_iter()
                .filter(|&t| basic.compose(t) != *self.row(t))
                .collect(),
        }
    }

    pub fn dominance_consistency(&self) -> bool {
        self.dominance_violations().is_empty()
    }

    /// Stable SHA-256 over the canonical rendering of the sixteen rows.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        for (t, row) in TypeIndicator::ALL.iter().zip(&self.rows) {
            hasher.update(format!("{t} = {row}\n").as_bytes());
        }
        format!("{:x}", hasher.finalize())
    }

    /// Renders the interpretation as a loadable document.
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        if let Some(basic) = &self.basic {
            for (key, formula) in basic.iter() {
                out.push_str(&format!("{:?} = {:?}\n", key.token(), formula.to_string()));
            }
            out.push('\n');
        }
        for (t, row) in TypeIndicator::ALL.iter().zip(&self.rows) {
            out.push_str(&format!("{t} = {:?}\n", row.to_string()));
        }
        out
    }

    /// Parses a document without the semantic checks of [`validate`].
    pub fn parse_document(source: &str) -> Result<Interpretation> {
        parse_document(source)
    }

    /// Parses and validates an interpretation document: a TOML table mapping
    /// `E I F F! T T! N N! S S!` and/or the sixteen indicator codes to
    /// formulas. With only the ten basic keys the rows are synthesised.
    pub fn load(source: &str) -> Result<Interpretation> {
        let interp = Interpretation::parse_document(source)?;
        let report = validate(&interp);
        match report.errors.into_iter().next() {
            Some(err) => Err(err),
            None => Ok(interp),
        }
    }
}

/// Validation findings. Errors make an interpretation unusable; warnings flag
/// properties the built-in table has but a custom one need not.
#[derive(Debug, Default)]
pub struct ValidationReport {
    pub errors: Vec<Error>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Pairs of basic translations that must have a common model: each attitude
/// with every faculty at both levels, and each judging faculty against each
/// perceiving faculty at the opposite dominance level.
pub fn consistency_pairs() -> Vec<(BasicKey, BasicKey)> {
    use BasicKey::*;
    let mut pairs = Vec::new();
    for a in [Extraversion, Introversion] {
        for b in &BasicKey::ALL[2..] {
            pairs.push((a, *b));
        }
    }
    for (j, j_dom) in [(Feeling, FeelingDominant), (Thinking, ThinkingDominant)] {
        pairs.push((j, IntuitionDominant));
        pairs.push((j, SensingDominant));
        pairs.push((j_dom, Intuition));
        pairs.push((j_dom, Sensing));
    }
    pairs
}

pub fn validate(interp: &Interpretation) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (t, row) in TypeIndicator::ALL.iter().zip(interp.rows()) {
        if !row.is_satisfiable() {
            report.errors.push(Error::UnsatisfiableRow(*t));
        }
    }
    if let Some(basic) = interp.basic() {
        for (a, b) in consistency_pairs() {
            let both = Formula::And(vec![basic.get(a).clone(), basic.get(b).clone()]);
            if !both.is_satisfiable() {
                report.errors.push(Error::ConsistencyViolation {
                    left: a.token().to_string(),
                    right: b.token().to_string(),
                });
            }
        }
        let e_and_i = Formula::And(vec![
            basic.get(BasicKey::Extraversion).clone(),
            basic.get(BasicKey::Introversion).clone(),
        ]);
        if e_and_i.is_satisfiable() {
            report
                .warnings
                .push("E and I have a common model; the attitudes are not exclusive".into());
        }
        let violations = interp.dominance_violations();
        if !violations.is_empty() {
            let codes: Vec<String> = violations.iter().map(|t| t.code()).collect();
            report.warnings.push(format!(
                "rows deviate from the J/P dominance rule: {}",
                codes.join(",")
            ));
        }
    } else {
        report
            .warnings
            .push("no basic translations; consistency pairs not checked".into());
    }
    if !interp.is_negation_free() {
        report
            .warnings
            .push("rows contain negation; polarities use the complement path".into());
    }
    report
}

#[derive(Deserialize)]
#[serde(transparent)]
struct Document(BTreeMap<String, String>);

fn parse_document(source: &str) -> Result<Interpretation> {
    let doc: Document = toml::from_str(source).map_err(|e| Error::Document(e.to_string()))?;
    let mut basic: [Option<Formula>; 10] = Default::default();
    let mut rows: [Option<Formula>; INDICATOR_COUNT] = Default::default();
    for (key, text) in &doc.0 {
        let formula: Formula = text.parse().map_err(|source| Error::EntryParse {
            key: key.clone(),
            source,
        })?;
        if let Some(k) = BasicKey::from_token(key) {
            basic[k.index()] = Some(formula);
        } else if let Some(t) = TypeIndicator::ALL.iter().find(|t| t.code() == *key) {
            rows[t.index()] = Some(formula);
        } else {
            return Err(Error::Document(format!("unknown key `{key}`")));
        }
    }
    let basic_count = basic.iter().filter(|b| b.is_some()).count();
    let row_count = rows.iter().filter(|r| r.is_some()).count();
    if basic_count != 0 && basic_count != 10 {
        let missing: Vec<&str> = BasicKey::ALL
            .iter()
            .filter(|k| basic[k.index()].is_none())
            .map(|k| k.token())
            .collect();
        return Err(Error::Document(format!(
            "incomplete basic translations, missing {}",
            missing.join(" ")
        )));
    }
    if row_count != 0 && row_count != INDICATOR_COUNT {
        let missing: Vec<String> = TypeIndicator::ALL
            .iter()
            .filter(|t| rows[t.index()].is_none())
            .map(|t| t.code())
            .collect();
        return Err(Error::Document(format!(
            "incomplete rows, missing {}",
            missing.join(" ")
        )));
    }
    let basic =
        (basic_count == 10).then(|| BasicTranslations(basic.map(|b| b.expect("checked complete"))));
    match (basic, row_count == INDICATOR_COUNT) {
        (basic, true) => Ok(Interpretation::from_rows(
            rows.map(|r| r.expect("checked complete")),
            basic,
        )),
        (Some(basic), false) => Ok(Interpretation::from_basic(basic)),
        (None, false) => Err(Error::Document("document defines no translations".into())),
    }
}

fn builtin_basic() -> BasicTranslations {
    use Dominance::*;
    use Factor::*;
    use Polarity::*;
    use Signature::*;
    let pat = |f, p, d| pattern(PatternSpec::new(f, p, d));
    let and = |a, b| Formula::And(vec![a, b]);
    // Sense factors: touching h, hearing e, seeing hy, smelling d, tasting m.
    let senses = |tiers: &[[Signature; 5]]| {
        let factors = [H, E, Hy, D, M];
        Formula::Or(
            tiers
                .iter()
                .flat_map(|tier| factors.iter().zip(tier).map(|(&f, &s)| Formula::atom(f, s)))
                .collect(),
        )
    };
    let sensing = senses(&[
        [Plus, Minus, Minus, Plus, Plus],
        [Ambivalent; 5],
        [
            AmbivalentRejecting,
            AmbivalentApproving,
            AmbivalentApproving,
            AmbivalentRejecting,
            AmbivalentRejecting,
        ],
    ]);
    let sensing_dominant = senses(&[
        [PlusSingle, MinusSingle, MinusSingle, PlusSingle, PlusSingle],
        [PlusDouble, MinusDouble, MinusDouble, PlusDouble, PlusDouble],
        [PlusTriple, MinusTriple, MinusTriple, PlusTriple, PlusTriple],
        [
            AmbivalentApproving,
            AmbivalentRejecting,
            AmbivalentRejecting,
            AmbivalentApproving,
            AmbivalentApproving,
        ],
    ]);
    BasicTranslations([
        Formula::any_of(
            Hy,
            &[
                Plus,
                PlusSingle,
                PlusDouble,
                PlusTriple,
                AmbivalentApproving,
            ],
        ),
        Formula::any_of(
            Hy,
            &[
                Minus,
                MinusSingle,
                MinusDouble,
                MinusTriple,
                AmbivalentRejecting,
            ],
        ),
        and(pat(H, Positive, NonDominant), pat(P, Negative, NonDominant)),
        and(pat(H, Positive, Dominant), pat(P, Negative, Dominant)),
        pat(K, Negative, NonDominant),
        pat(K, Negative, Dominant),
        and(pat(K, Positive, NonDominant), pat(P, Positive, NonDominant)),
        and(pat(K, Positive, Dominant), pat(P, Positive, Dominant)),
        and(pat(K, Positive, NonDominant), sensing),
        and(pat(K, Positive, Dominant), sensing_dominant),
    ])
}

/// `p(profile)`: the conjunction of the profile's eight atoms in factor order.
pub fn map_profile(profile: &Profile) -> Formula {
    Formula::And(profile.iter().map(|(f, s)| Formula::atom(f, s)).collect())
}

/// `p(P)`: the disjunction of the profiles' translations; `FALSE` for none.
pub fn lift_profiles<'a>(profiles: impl IntoIterator<Item = &'a Profile>) -> Formula {
    let mut parts: Vec<Formula> = profiles.into_iter().map(map_profile).collect();
    match parts.len() {
        0 => Formula::Bottom,
        1 => parts.pop().expect("one profile"),
        _ => Formula::Or(parts),
    }
}
