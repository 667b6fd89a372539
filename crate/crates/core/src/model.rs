//! Finite carriers of both personality spaces: Szondi signatures, factors and
//! profiles on one side, Myers-Briggs type indicators and their powerset on the
//! other.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// Number of Szondi signatures.
pub const SIGNATURE_COUNT: usize = 12;
/// Number of Szondi factors.
pub const FACTOR_COUNT: usize = 8;
/// Number of Myers-Briggs type indicators.
pub const INDICATOR_COUNT: usize = 16;
/// `12^8`, the size of the profile space.
pub const PROFILE_COUNT: u64 = 429_981_696;

/// One of Szondi's twelve reaction signatures.
///
/// The discriminant is the canonical ordinal: approval and rejection grades
/// first (`-!!!` up to `+!!!`), then the three ambivalent signatures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Signature {
    /// `-!!!`
    MinusTriple = 0,
    /// `-!!`
    MinusDouble,
    /// `-!`
    MinusSingle,
    /// `-`
    Minus,
    /// `0`
    Zero,
    /// `+`
    Plus,
    /// `+!`
    PlusSingle,
    /// `+!!`
    PlusDouble,
    /// `+!!!`
    PlusTriple,
    /// `±_!`, ambivalence with rejection bias.
    AmbivalentRejecting,
    /// `±`, ambivalence without bias.
    Ambivalent,
    /// `±^!`, ambivalence with approval bias.
    AmbivalentApproving,
}

/// Result of comparing two signatures in the Hasse order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignatureOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Signature {
    pub const ALL: [Signature; SIGNATURE_COUNT] = [
        Signature::MinusTriple,
        Signature::MinusDouble,
        Signature::MinusSingle,
        Signature::Minus,
        Signature::Zero,
        Signature::Plus,
        Signature::PlusSingle,
        Signature::PlusDouble,
        Signature::PlusTriple,
        Signature::AmbivalentRejecting,
        Signature::Ambivalent,
        Signature::AmbivalentApproving,
    ];

    /// ASCII tokens, indexed by ordinal. Longest tokens are matched first when
    /// scanning, see [`Signature::scan`].
    const TOKENS: [&'static str; SIGNATURE_COUNT] = [
        "-!!!", "-!!", "-!", "-", "0", "+", "+!", "+!!", "+!!!", "+-_!", "+-", "+-^!",
    ];

    const UNICODE: [&'static str; SIGNATURE_COUNT] = [
        "−!!!", "−!!", "−!", "−", "0", "+", "+!", "+!!", "+!!!", "±_!", "±", "±^!",
    ];

    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn from_ordinal(ordinal: usize) -> Option<Signature> {
        Signature::ALL.get(ordinal).copied()
    }

    /// ASCII rendering, e.g. `+-^!` for `±^!`.
    pub fn token(self) -> &'static str {
        Signature::TOKENS[self.ordinal()]
    }

    /// Typographic rendering with `−` and `±`.
    pub fn symbol(self) -> &'static str {
        Signature::UNICODE[self.ordinal()]
    }

    /// Number of exclamation marks (Szondi's quanta).
    pub fn quanta(self) -> u8 {
        match self {
            Signature::MinusTriple | Signature::PlusTriple => 3,
            Signature::MinusDouble | Signature::PlusDouble => 2,
            Signature::MinusSingle
            | Signature::PlusSingle
            | Signature::AmbivalentRejecting
            | Signature::AmbivalentApproving => 1,
            Signature::Minus | Signature::Zero | Signature::Plus | Signature::Ambivalent => 0,
        }
    }

    /// A signature is dominant iff it carries at least one quantum.
    pub fn is_dominant(self) -> bool {
        self.quanta() > 0
    }

    pub fn is_ambivalent(self) -> bool {
        self.ordinal() >= Signature::AmbivalentRejecting.ordinal()
    }

    /// Compares two signatures in the Hasse order: a 9-chain from `-!!!` to
    /// `+!!!` and a separate 3-chain `±_! < ± < ±^!`.
    pub fn compare(self, other: Signature) -> SignatureOrder {
        if self.is_ambivalent() != other.is_ambivalent() {
            return SignatureOrder::Incomparable;
        }
        // Within either chain the ordinal order is the chain order.
        match self.ordinal().cmp(&other.ordinal()) {
            std::cmp::Ordering::Less => SignatureOrder::Less,
            std::cmp::Ordering::Equal => SignatureOrder::Equal,
            std::cmp::Ordering::Greater => SignatureOrder::Greater,
        }
    }

    /// `self ≤ other` in the Hasse order.
    pub fn leq(self, other: Signature) -> bool {
        matches!(
            self.compare(other),
            SignatureOrder::Less | SignatureOrder::Equal
        )
    }

    /// Hasse-diagram cover pairs `(lower, upper)`.
    pub fn covers() -> impl Iterator<Item = (Signature, Signature)> {
        Signature::ALL
            .windows(2)
            .filter(|w| w[0].is_ambivalent() == w[1].is_ambivalent())
            .map(|w| (w[0], w[1]))
    }

    /// Matches the longest signature token at the start of `input`, returning
    /// the signature and the number of bytes consumed. Accepts `±` and `−` as
    /// aliases for `+-` and `-`.
    pub fn scan(input: &str) -> Option<(Signature, usize)> {
        let mut best: Option<(Signature, usize)> = None;
        for (sig, token) in Signature::ALL.iter().zip(Signature::TOKENS) {
            for candidate in [token.to_string(), alias(token)] {
                if input.starts_with(&candidate)
                    && best.is_none_or(|(_, len)| candidate.len() > len)
                {
                    best = Some((*sig, candidate.len()));
                }
            }
        }
        best
    }
}

fn alias(token: &str) -> String {
    token.replacen("+-", "±", 1).replacen('-', "−", 1)
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Signature {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match Signature::scan(s) {
            Some((sig, len)) if len == s.len() => Ok(sig),
            _ => Err(ParseError::new(0, format!("unknown signature `{s}`"))),
        }
    }
}

/// Szondi's four vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vector {
    S,
    P,
    Sch,
    C,
}

impl Vector {
    pub fn token(self) -> &'static str {
        match self {
            Vector::S => "S",
            Vector::P => "P",
            Vector::Sch => "Sch",
            Vector::C => "C",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Vector::S => "Id",
            Vector::P => "Super-Ego",
            Vector::Sch => "Ego",
            Vector::C => "Id",
        }
    }
}

/// One of Szondi's eight factors, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Factor {
    H = 0,
    S,
    E,
    Hy,
    K,
    P,
    D,
    M,
}

impl Factor {
    pub const ALL: [Factor; FACTOR_COUNT] = [
        Factor::H,
        Factor::S,
        Factor::E,
        Factor::Hy,
        Factor::K,
        Factor::P,
        Factor::D,
        Factor::M,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Factor> {
        Factor::ALL.get(index).copied()
    }

    pub fn token(self) -> &'static str {
        match self {
            Factor::H => "h",
            Factor::S => "s",
            Factor::E => "e",
            Factor::Hy => "hy",
            Factor::K => "k",
            Factor::P => "p",
            Factor::D => "d",
            Factor::M => "m",
        }
    }

    pub fn vector(self) -> Vector {
        match self {
            Factor::H | Factor::S => Vector::S,
            Factor::E | Factor::Hy => Vector::P,
            Factor::K | Factor::P => Vector::Sch,
            Factor::D | Factor::M => Vector::C,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Factor::H => "love",
            Factor::S => "attitude",
            Factor::E => "ethics",
            Factor::Hy => "morality",
            Factor::K => "having",
            Factor::P => "being",
            Factor::D => "relations",
            Factor::M => "bindings",
        }
    }

    /// Descriptive labels for the `+` and `-` reactions of this factor.
    pub fn reaction_labels(self) -> (&'static str, &'static str) {
        match self {
            Factor::H => ("physical love", "platonic love"),
            Factor::S => ("(proactive) activity", "(receptive) passivity"),
            Factor::E => ("ethical behaviour", "unethical behaviour"),
            Factor::Hy => ("immoral behaviour", "moral behaviour"),
            Factor::K => ("having more", "having less"),
            Factor::P => ("being more", "being less"),
            Factor::D => ("unfaithfulness", "faithfulness"),
            Factor::M => ("dependence", "independence"),
        }
    }

    /// Matches a factor token at the start of `input` (`hy` before `h`).
    pub fn scan(input: &str) -> Option<(Factor, usize)> {
        if input.starts_with("hy") {
            return Some((Factor::Hy, 2));
        }
        let factor = match input.as_bytes().first()? {
            b'h' => Factor::H,
            b's' => Factor::S,
            b'e' => Factor::E,
            b'k' => Factor::K,
            b'p' => Factor::P,
            b'd' => Factor::D,
            b'm' => Factor::M,
            _ => return None,
        };
        Some((factor, 1))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A Szondi personality profile: one signature per factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile([Signature; FACTOR_COUNT]);

impl Profile {
    pub const fn new(signatures: [Signature; FACTOR_COUNT]) -> Self {
        Profile(signatures)
    }

    /// Szondi's norm profile `h+ s+ e- hy- k- p- d+ m+`.
    pub const fn norm() -> Self {
        use Signature::{Minus, Plus};
        Profile([Plus, Plus, Minus, Minus, Minus, Minus, Plus, Plus])
    }

    pub fn uniform(signature: Signature) -> Self {
        Profile([signature; FACTOR_COUNT])
    }

    pub fn get(&self, factor: Factor) -> Signature {
        self.0[factor.index()]
    }

    pub fn set(&mut self, factor: Factor, signature: Signature) {
        self.0[factor.index()] = signature;
    }

    pub fn with(mut self, factor: Factor, signature: Signature) -> Self {
        self.set(factor, signature);
        self
    }

    pub fn signatures(&self) -> &[Signature; FACTOR_COUNT] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (Factor, Signature)> + '_ {
        Factor::ALL.iter().map(move |&f| (f, self.get(f)))
    }

    /// True iff at least one factor carries a quantum.
    pub fn has_dominant_factor(&self) -> bool {
        self.0.iter().any(|s| s.is_dominant())
    }

    /// Base-12 positional encoding with `h` as the most significant digit.
    pub fn to_index(&self) -> u32 {
        self.0.iter().fold(0u32, |acc, s| {
            acc * SIGNATURE_COUNT as u32 + s.ordinal() as u32
        })
    }

    pub fn from_index(index: u64) -> Result<Profile, crate::Error> {
        if index >= PROFILE_COUNT {
            return Err(crate::Error::ProfileIndexOutOfRange(index));
        }
        let mut rest = index as u32;
        let mut sigs = [Signature::MinusTriple; FACTOR_COUNT];
        for slot in sigs.iter_mut().rev() {
            *slot = Signature::ALL[(rest % SIGNATURE_COUNT as u32) as usize];
            rest /= SIGNATURE_COUNT as u32;
        }
        Ok(Profile(sigs))
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (factor, sig)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{factor}{sig}")?;
        }
        Ok(())
    }
}

impl FromStr for Profile {
    type Err = ParseError;

    /// Parses whitespace-separated `factor signature` tokens such as
    /// `h+ s+ e- hy- k- p- d+ m+`; each factor exactly once, in any order.
    /// A factor may also be separated from its signature by whitespace.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let mut slots: [Option<Signature>; FACTOR_COUNT] = [None; FACTOR_COUNT];
        let mut pos = 0;
        let bytes_len = input.len();
        while pos < bytes_len {
            let rest = &input[pos..];
            let trimmed = rest.trim_start();
            if trimmed.is_empty() {
                break;
            }
            pos += rest.len() - trimmed.len();
            let (factor, flen) = Factor::scan(trimmed).ok_or_else(|| {
                ParseError::new(pos, format!("expected a factor at `{}`", head(trimmed)))
            })?;
            pos += flen;
            let after = &input[pos..];
            let sig_start = after.len() - after.trim_start().len();
            let (sig, slen) = Signature::scan(&after[sig_start..]).ok_or_else(|| {
                ParseError::new(pos, format!("expected a signature after `{factor}`"))
            })?;
            pos += sig_start + slen;
            if let Some(c) = input[pos..].chars().next() {
                if !c.is_whitespace() {
                    return Err(ParseError::new(pos, format!("unexpected `{c}`")));
                }
            }
            if slots[factor.index()].replace(sig).is_some() {
                return Err(ParseError::new(pos, format!("duplicate factor `{factor}`")));
            }
        }
        let missing: Vec<&str> = Factor::ALL
            .iter()
            .filter(|f| slots[f.index()].is_none())
            .map(|f| f.token())
            .collect();
        if !missing.is_empty() {
            return Err(ParseError::new(
                input.len(),
                format!("missing factor(s): {}", missing.join(" ")),
            ));
        }
        Ok(Profile(slots.map(|s| s.expect("all factors present"))))
    }
}

fn head(s: &str) -> &str {
    s.split_whitespace().next().unwrap_or(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Attitude {
    Extraversion,
    Introversion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perception {
    Sensing,
    Intuition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Judgment {
    Thinking,
    Feeling,
}

/// The `J`/`P` flag: which of judgment or perception faces the outer world.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Judging,
    Perceiving,
}

/// A Myers-Briggs type indicator such as `ISTJ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeIndicator {
    pub attitude: Attitude,
    pub perception: Perception,
    pub judgment: Judgment,
    pub orientation: Orientation,
}

impl TypeIndicator {
    /// The sixteen indicators in their conventional listing order; the
    /// position in this array is the indicator's bit in an [`IndicatorSet`].
    pub const ALL: [TypeIndicator; INDICATOR_COUNT] = {
        use Attitude::*;
        use Judgment::*;
        use Orientation::*;
        use Perception::*;
        const fn t(a: Attitude, p: Perception, j: Judgment, o: Orientation) -> TypeIndicator {
            TypeIndicator {
                attitude: a,
                perception: p,
                judgment: j,
                orientation: o,
            }
        }
        [
            t(Introversion, Sensing, Thinking, Judging),
            t(Introversion, Sensing, Feeling, Judging),
            t(Introversion, Intuition, Feeling, Judging),
            t(Introversion, Intuition, Thinking, Judging),
            t(Introversion, Sensing, Thinking, Perceiving),
            t(Introversion, Sensing, Feeling, Perceiving),
            t(Introversion, Intuition, Feeling, Perceiving),
            t(Introversion, Intuition, Thinking, Perceiving),
            t(Extraversion, Sensing, Thinking, Perceiving),
            t(Extraversion, Sensing, Feeling, Perceiving),
            t(Extraversion, Intuition, Feeling, Perceiving),
            t(Extraversion, Intuition, Thinking, Perceiving),
            t(Extraversion, Sensing, Thinking, Judging),
            t(Extraversion, Sensing, Feeling, Judging),
            t(Extraversion, Intuition, Feeling, Judging),
            t(Extraversion, Intuition, Thinking, Judging),
        ]
    };

    pub fn index(self) -> usize {
        TypeIndicator::ALL
            .iter()
            .position(|&t| t == self)
            .expect("every indicator is listed")
    }

    pub fn from_index(index: usize) -> Option<TypeIndicator> {
        TypeIndicator::ALL.get(index).copied()
    }

    pub fn code(self) -> String {
        let mut s = String::with_capacity(4);
        s.push(match self.attitude {
            Attitude::Extraversion => 'E',
            Attitude::Introversion => 'I',
        });
        s.push(match self.perception {
            Perception::Sensing => 'S',
            Perception::Intuition => 'N',
        });
        s.push(match self.judgment {
            Judgment::Thinking => 'T',
            Judgment::Feeling => 'F',
        });
        s.push(match self.orientation {
            Orientation::Judging => 'J',
            Orientation::Perceiving => 'P',
        });
        s
    }

    /// Whether the perceiving faculty shows as dominant to the outer world:
    /// judging introverts and perceiving extraverts.
    pub fn perception_is_dominant(self) -> bool {
        matches!(
            (self.attitude, self.orientation),
            (Attitude::Introversion, Orientation::Judging)
                | (Attitude::Extraversion, Orientation::Perceiving)
        )
    }
}

impl fmt::Display for TypeIndicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for TypeIndicator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        TypeIndicator::ALL
            .iter()
            .find(|t| t.code() == upper)
            .copied()
            .ok_or_else(|| ParseError::new(0, format!("unknown type indicator `{}`", s.trim())))
    }
}

/// A subset of the sixteen type indicators, stored as a 16-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndicatorSet(u16);

impl IndicatorSet {
    pub const EMPTY: IndicatorSet = IndicatorSet(0);
    pub const FULL: IndicatorSet = IndicatorSet(u16::MAX);

    pub fn from_bits(bits: u16) -> Self {
        IndicatorSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn singleton(indicator: TypeIndicator) -> Self {
        IndicatorSet(1 << indicator.index())
    }

    /// All `2^16` indicator sets in mask order.
    pub fn all_sets() -> impl Iterator<Item = IndicatorSet> {
        (0..=u16::MAX).map(IndicatorSet)
    }

    pub fn contains(self, indicator: TypeIndicator) -> bool {
        self.0 & (1 << indicator.index()) != 0
    }

    pub fn insert(&mut self, indicator: TypeIndicator) {
        self.0 |= 1 << indicator.index();
    }

    pub fn remove(&mut self, indicator: TypeIndicator) {
        self.0 &= !(1 << indicator.index());
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        IndicatorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndicatorSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndicatorSet(self.0 & !other.0)
    }

    pub fn complement(self) -> Self {
        IndicatorSet(!self.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = TypeIndicator> {
        TypeIndicator::ALL
            .into_iter()
            .filter(move |&t| self.contains(t))
    }
}

impl FromIterator<TypeIndicator> for IndicatorSet {
    fn from_iter<I: IntoIterator<Item = TypeIndicator>>(iter: I) -> Self {
        let mut set = IndicatorSet::EMPTY;
        for t in iter {
            set.insert(t);
        }
        set
    }
}

impl fmt::Display for IndicatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<String> = self.iter().map(TypeIndicator::code).collect();
        write!(f, "{{{}}}", codes.join(","))
    }
}

impl FromStr for IndicatorSet {
    type Err = ParseError;

    /// Comma-separated indicators, optionally wrapped in braces; `{}` or an
    /// empty string is the empty set.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            body = inner.trim();
        }
        let mut set = IndicatorSet::EMPTY;
        if body.is_empty() {
            return Ok(set);
        }
        let mut offset = s.len() - s.trim_start().len();
        for part in body.split(',') {
            let indicator: TypeIndicator = part
                .parse()
                .map_err(|e: ParseError| ParseError::new(offset, e.message))?;
            set.insert(indicator);
            offset += part.len() + 1;
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities() {
        assert_eq!(Signature::ALL.len(), 12);
        assert_eq!(Factor::ALL.len(), 8);
        assert_eq!(TypeIndicator::ALL.len(), 16);
        assert_eq!(PROFILE_COUNT, 12u64.pow(8));
        let codes: std::collections::HashSet<_> =
            TypeIndicator::ALL.iter().map(|t| t.code()).collect();
        assert_eq!(codes.len(), 16);
    }

    #[test]
    fn signature_ordinals_roundtrip() {
        for (i, s) in Signature::ALL.iter().enumerate() {
            assert_eq!(s.ordinal(), i);
            assert_eq!(Signature::from_ordinal(i), Some(*s));
            assert_eq!(s.token().parse::<Signature>().unwrap(), *s);
            assert_eq!(s.symbol().parse::<Signature>().unwrap(), *s);
        }
        assert_eq!(Signature::from_ordinal(12), None);
    }

    #[test]
    fn hasse_examples() {
        use Signature::*;
        assert_eq!(Minus.compare(Plus), SignatureOrder::Less);
        assert_eq!(Ambivalent.compare(Ambivalent), SignatureOrder::Equal);
        assert_eq!(
            PlusSingle.compare(AmbivalentApproving),
            SignatureOrder::Incomparable
        );
        assert_eq!(
            AmbivalentApproving.compare(AmbivalentRejecting),
            SignatureOrder::Greater
        );
        assert_eq!(Signature::covers().count(), 8 + 2);
    }

    #[test]
    fn hasse_order_is_partial_order() {
        for a in Signature::ALL {
            assert!(a.leq(a));
            for b in Signature::ALL {
                if a.leq(b) && b.leq(a) {
                    assert_eq!(a, b);
                }
                for c in Signature::ALL {
                    if a.leq(b) && b.leq(c) {
                        assert!(a.leq(c), "{a} <= {b} <= {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_is_quantum() {
        use Signature::*;
        let plain = [Minus, Zero, Plus, Ambivalent];
        for s in Signature::ALL {
            assert_eq!(s.is_dominant(), !plain.contains(&s), "{s}");
        }
        assert_eq!(Signature::ALL.iter().filter(|s| s.is_dominant()).count(), 8);
    }

    #[test]
    fn factor_vectors_match_table() {
        use Factor::*;
        let expected = [
            (H, Vector::S),
            (S, Vector::S),
            (E, Vector::P),
            (Hy, Vector::P),
            (K, Vector::Sch),
            (P, Vector::Sch),
            (D, Vector::C),
            (M, Vector::C),
        ];
        for (f, v) in expected {
            assert_eq!(f.vector(), v);
        }
    }

    #[test]
    fn profile_index_extremes() {
        assert_eq!(
            Profile::from_index(0).unwrap(),
            Profile::uniform(Signature::MinusTriple)
        );
        assert_eq!(
            Profile::from_index(PROFILE_COUNT - 1).unwrap(),
            Profile::uniform(Signature::AmbivalentApproving)
        );
        assert_eq!(
            Profile::uniform(Signature::AmbivalentApproving).to_index() as u64,
            PROFILE_COUNT - 1
        );
        assert!(Profile::from_index(PROFILE_COUNT).is_err());
        assert!(Profile::from_index(u64::MAX).is_err());
    }

    #[test]
    fn norm_profile_index() {
        // Ordinals: + = 5, - = 3, digits 5 5 3 3 3 3 5 5 in base 12.
        let expected = [5u64, 5, 3, 3, 3, 3, 5, 5]
            .iter()
            .fold(0u64, |acc, d| acc * 12 + d);
        let norm = Profile::norm();
        assert_eq!(norm.to_index() as u64, expected);
        assert_eq!(Profile::from_index(expected).unwrap(), norm);
    }

    #[test]
    fn profile_text() {
        let norm: Profile = "h+ s+ e- hy- k- p- d+ m+".parse().unwrap();
        assert_eq!(norm, Profile::norm());
        assert_eq!(norm.to_string(), "h+ s+ e- hy- k- p- d+ m+");
        let shuffled: Profile = "m+ d+ p- k- hy- e- s+ h+".parse().unwrap();
        assert_eq!(shuffled, norm);
        let spaced: Profile = "h + s + e - hy - k - p - d + m +".parse().unwrap();
        assert_eq!(spaced, norm);
        let amb: Profile = "h± s+-_! e+-^! hy-!!! k0 p+!! d+ m+".parse().unwrap();
        assert_eq!(amb.get(Factor::H), Signature::Ambivalent);
        assert_eq!(amb.get(Factor::S), Signature::AmbivalentRejecting);
        assert_eq!(amb.get(Factor::E), Signature::AmbivalentApproving);
        assert_eq!(amb.to_string().parse::<Profile>().unwrap(), amb);
    }

    #[test]
    fn profile_text_errors() {
        let err = "h+ s+".parse::<Profile>().unwrap_err();
        assert!(err.message.contains("missing"), "{err}");
        let err = "h+ h- s+ e- hy- k- p- d+ m+"
            .parse::<Profile>()
            .unwrap_err();
        assert!(err.message.contains("duplicate"), "{err}");
        assert!("x+ s+ e- hy- k- p- d+ m+".parse::<Profile>().is_err());
        assert!("h* s+ e- hy- k- p- d+ m+".parse::<Profile>().is_err());
        assert!("h+x s+ e- hy- k- p- d+ m+".parse::<Profile>().is_err());
    }

    #[test]
    fn indicator_decomposition() {
        let istj: TypeIndicator = "istj".parse().unwrap();
        assert_eq!(istj.attitude, Attitude::Introversion);
        assert_eq!(istj.perception, Perception::Sensing);
        assert_eq!(istj.judgment, Judgment::Thinking);
        assert_eq!(istj.orientation, Orientation::Judging);
        assert_eq!(istj.index(), 0);
        assert_eq!(istj.to_string(), "ISTJ");
        assert_eq!(TypeIndicator::ALL[15].code(), "ENTJ");
        assert!("ABCD".parse::<TypeIndicator>().is_err());
    }

    #[test]
    fn indicator_set_text() {
        assert_eq!("{}".parse::<IndicatorSet>().unwrap(), IndicatorSet::EMPTY);
        assert_eq!(IndicatorSet::EMPTY.to_string(), "{}");
        let set: IndicatorSet = "entj, istj".parse().unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.to_string(), "{ISTJ,ENTJ}");
        assert_eq!("ISTJ,ENTJ".parse::<IndicatorSet>().unwrap(), set);
        assert_eq!("{ISTJ,ENTJ}".parse::<IndicatorSet>().unwrap(), set);
        assert!("ISTJ,XXXX".parse::<IndicatorSet>().is_err());
        assert_eq!(IndicatorSet::FULL.len(), 16);
        assert!(set.is_subset(IndicatorSet::FULL));
        assert_eq!(set.complement().len(), 14);
    }
}
