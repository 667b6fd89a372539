//! The logical pivot language: classical propositional formulas over the 96
//! atoms `f^s`, read over profiles where each factor carries exactly one
//! signature.
//!
//! Text syntax: atoms are a factor token immediately followed by a signature
//! token (`h+`, `hy-!`, `p+-^!`); `!` negates, `&` conjoins, `|` disjoins,
//! `=>` and `<=>` are sugar for implication and equivalence; `TRUE` and
//! `FALSE` are the constants. Precedence, tightest first: `!`, `&`, `|`,
//! `=>`, `<=>`. Operators should be separated from atoms by whitespace where
//! a signature could otherwise absorb them.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::model::{Factor, Profile, Signature};
use crate::profile_set::ProfileSet;

/// An atomic proposition: factor `factor` carries signature `signature`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub factor: Factor,
    pub signature: Signature,
}

impl Atom {
    pub fn new(factor: Factor, signature: Signature) -> Self {
        Atom { factor, signature }
    }

    /// All 96 atoms, factor-major.
    pub fn all() -> impl Iterator<Item = Atom> {
        Factor::ALL
            .into_iter()
            .flat_map(|f| Signature::ALL.into_iter().map(move |s| Atom::new(f, s)))
    }

    pub fn holds(&self, profile: &Profile) -> bool {
        profile.get(self.factor) == self.signature
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.factor, self.signature)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Atom(Atom),
    Not(Box<Formula>),
    /// n-ary conjunction; the empty conjunction is true.
    And(Vec<Formula>),
    /// n-ary disjunction; the empty disjunction is false.
    Or(Vec<Formula>),
}

impl Formula {
    pub fn atom(factor: Factor, signature: Signature) -> Formula {
        Formula::Atom(Atom::new(factor, signature))
    }

    pub fn negate(inner: Formula) -> Formula {
        Formula::Not(Box::new(inner))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Or(vec![Formula::negate(lhs), rhs])
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::And(vec![
            Formula::implies(lhs.clone(), rhs.clone()),
            Formula::implies(rhs, lhs),
        ])
    }

    /// Disjunction of `factor^s` for each listed signature.
    pub fn any_of(factor: Factor, signatures: &[Signature]) -> Formula {
        Formula::Or(
            signatures
                .iter()
                .map(|&s| Formula::atom(factor, s))
                .collect(),
        )
    }

    /// Truth of the formula in the model given by `profile`.
    pub fn evaluate(&self, profile: &Profile) -> bool {
        match self {
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Atom(a) => a.holds(profile),
            Formula::Not(inner) => !inner.evaluate(profile),
            Formula::And(parts) => parts.iter().all(|p| p.evaluate(profile)),
            Formula::Or(parts) => parts.iter().any(|p| p.evaluate(profile)),
        }
    }

    pub fn is_negation_free(&self) -> bool {
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(_) => true,
            Formula::Not(_) => false,
            Formula::And(parts) | Formula::Or(parts) => parts.iter().all(Formula::is_negation_free),
        }
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(a) => out.push(*a),
            Formula::Not(inner) => inner.collect_atoms(out),
            Formula::And(parts) | Formula::Or(parts) => {
                parts.iter().for_each(|p| p.collect_atoms(out))
            }
        }
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(_) => 1,
            Formula::Not(inner) => 1 + inner.size(),
            Formula::And(parts) | Formula::Or(parts) => {
                1 + parts.iter().map(Formula::size).sum::<usize>()
            }
        }
    }

    /// The exact set of profiles satisfying the formula. Negation is handled
    /// by complementing against the full profile space.
    pub fn models(&self) -> ProfileSet {
        match self {
            Formula::Top => ProfileSet::full(),
            Formula::Bottom => ProfileSet::empty(),
            Formula::Atom(a) => ProfileSet::atom(a.factor, a.signature),
            Formula::Not(inner) => inner.models().complement(),
            Formula::And(parts) => {
                let mut acc = ProfileSet::full();
                for p in parts {
                    acc = acc.intersection(&p.models());
                    if acc.is_empty() {
                        break;
                    }
                }
                acc
            }
            Formula::Or(parts) => parts
                .iter()
                .fold(ProfileSet::empty(), |acc, p| acc.union(&p.models())),
        }
    }

    /// Logical consequence: every model of `self` is a model of `other`.
    pub fn entails(&self, other: &Formula) -> bool {
        self.models().is_subset(&other.models())
    }

    pub fn equivalent(&self, other: &Formula) -> bool {
        let (a, b) = (self.models(), other.models());
        a.set_eq(&b)
    }

    pub fn is_satisfiable(&self) -> bool {
        !self.models().is_empty()
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::And(parts) | Formula::Or(parts) if parts.len() == 1 => parts[0].precedence(),
            Formula::Or(parts) if parts.len() >= 2 => 1,
            Formula::And(parts) if parts.len() >= 2 => 2,
            _ => 3,
        }
    }

    fn fmt_child(&self, child: &Formula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Same-kind nesting is parenthesised so the tree shape survives a
        // parse of the rendering.
        if child.precedence() <= self.precedence() {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => f.write_str("TRUE"),
            Formula::Bottom => f.write_str("FALSE"),
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(inner) => {
                f.write_str("!")?;
                if inner.precedence() < 3 {
                    write!(f, "({inner})")
                } else {
                    write!(f, "{inner}")
                }
            }
            Formula::And(parts) | Formula::Or(parts) => {
                let (sep, empty) = if matches!(self, Formula::And(_)) {
                    (" & ", "TRUE")
                } else {
                    (" | ", "FALSE")
                };
                match parts.as_slice() {
                    [] => f.write_str(empty),
                    [only] => write!(f, "{only}"),
                    _ => {
                        for (i, p) in parts.iter().enumerate() {
                            if i > 0 {
                                f.write_str(sep)?;
                            }
                            self.fmt_child(p, f)?;
                        }
                        Ok(())
                    }
                }
            }
        }
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s, pos: 0 };
        let f = parser.iff()?;
        parser.skip_ws();
        if parser.pos < s.len() {
            return Err(parser.error("unexpected input"));
        }
        Ok(f)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn error(&self, message: &str) -> ParseError {
        let near: String = self.rest().chars().take(12).collect();
        if near.is_empty() {
            ParseError::new(self.pos, format!("{message} at end of input"))
        } else {
            ParseError::new(self.pos, format!("{message} near `{near}`"))
        }
    }

    fn eat(&mut self, tokens: &[&str]) -> bool {
        self.skip_ws();
        for t in tokens {
            if self.rest().starts_with(t) {
                self.pos += t.len();
                return true;
            }
        }
        false
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implication()?;
        if self.eat(&["<=>", "↔"]) {
            let rhs = self.iff()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        self.skip_ws();
        if !self.rest().starts_with("<=>") && self.eat(&["=>", "→"]) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let first = self.conjunction()?;
        let mut parts = vec![first];
        while self.eat(&["|", "∨"]) {
            parts.push(self.conjunction()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Formula::Or(parts)
        })
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let first = self.unary()?;
        let mut parts = vec![first];
        while self.eat(&["&", "∧"]) {
            parts.push(self.unary()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Formula::And(parts)
        })
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&["!", "¬"]) {
            return Ok(Formula::negate(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        self.skip_ws();
        if self.eat(&["("]) {
            let inner = self.iff()?;
            if !self.eat(&[")"]) {
                return Err(self.error("expected `)`"));
            }
            return Ok(inner);
        }
        for (word, value) in [("TRUE", Formula::Top), ("FALSE", Formula::Bottom)] {
            if self.rest().starts_with(word) {
                self.pos += word.len();
                return Ok(value);
            }
        }
        let start = self.pos;
        let (factor, flen) =
            Factor::scan(self.rest()).ok_or_else(|| self.error("expected an atom"))?;
        self.pos += flen;
        let (sig, slen) = Signature::scan(self.rest())
            .ok_or_else(|| ParseError::new(start, format!("atom `{factor}` lacks a signature")))?;
        self.pos += slen;
        Ok(Formula::atom(factor, sig))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PROFILE_COUNT;
    use Signature::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let norm = Profile::norm();
        assert!(Formula::atom(Factor::Hy, Minus).evaluate(&norm));
        assert!(Formula::Top.evaluate(&norm));
        assert!(!Formula::Bottom.evaluate(&norm));
        assert!(Formula::And(vec![]).evaluate(&norm));
        assert!(!Formula::Or(vec![]).evaluate(&norm));
        let extraversion = f("hy+ | hy+! | hy+!! | hy+!!! | hy+-^!");
        assert!(!extraversion.evaluate(&norm));
    }

    #[test]
    fn model_counts() {
        assert_eq!(Formula::Top.models().count(), PROFILE_COUNT);
        assert!(Formula::Bottom.models().is_empty());
        for atom in Atom::all() {
            assert_eq!(Formula::Atom(atom).models().count(), 12u64.pow(7), "{atom}");
        }
        assert_eq!(Atom::all().count(), 96);
    }

    #[test]
    fn satisfiability_under_one_signature_per_factor() {
        assert!(Formula::Top.is_satisfiable());
        assert!(!Formula::Bottom.is_satisfiable());
        assert!(!f("h+ & h-").is_satisfiable());
        assert!(f("h+ & s-").is_satisfiable());
        assert!(!f("!h+ & h+").is_satisfiable());
    }

    #[test]
    fn entailment_basics() {
        let a = f("h+ & k-");
        let b = f("k- & h+");
        assert!(Formula::Bottom.entails(&a));
        assert!(a.entails(&Formula::Top));
        assert!(a.equivalent(&b));
        assert!(a.equivalent(&a));
        assert!(a.entails(&f("h+")));
        assert!(!f("h+").entails(&a));
        // Exactly one signature per factor: the 12 atoms of a factor are exhaustive.
        let all_h = Formula::Or(
            Signature::ALL
                .iter()
                .map(|&s| Formula::atom(Factor::H, s))
                .collect(),
        );
        assert!(Formula::Top.entails(&all_h));
    }

    #[test]
    fn parse_precedence() {
        assert_eq!(
            f("h+ | s- & !k0"),
            Formula::Or(vec![
                Formula::atom(Factor::H, Plus),
                Formula::And(vec![
                    Formula::atom(Factor::S, Minus),
                    Formula::negate(Formula::atom(Factor::K, Zero)),
                ]),
            ])
        );
        assert_eq!(f("p+-^!"), Formula::atom(Factor::P, AmbivalentApproving));
        assert_eq!(f("hy-!"), Formula::atom(Factor::Hy, MinusSingle));
        assert_eq!(f("h±_!"), Formula::atom(Factor::H, AmbivalentRejecting));
        assert_eq!(f("h+ => k-"), Formula::implies(f("h+"), f("k-")));
        assert!(f("h+ <=> k-").equivalent(&f("(h+ & k-) | (!h+ & !k-)")));
        assert_eq!(f("TRUE"), Formula::Top);
        assert_eq!(f("(FALSE)"), Formula::Bottom);
    }

    #[test]
    fn parse_errors_have_locations() {
        let err = "h+ & (k- | x+)".parse::<Formula>().unwrap_err();
        assert_eq!(err.offset, 11);
        let err = "h+ &".parse::<Formula>().unwrap_err();
        assert_eq!(err.offset, 4);
        assert!("h+ k-".parse::<Formula>().is_err());
        assert!("(h+".parse::<Formula>().is_err());
        assert!("h".parse::<Formula>().is_err());
    }

    #[test]
    fn render_roundtrip_keeps_shape() {
        let nested = Formula::And(vec![
            Formula::And(vec![f("h+"), f("s+")]),
            Formula::Or(vec![f("k-"), Formula::negate(f("p+ | p-"))]),
        ]);
        let text = nested.to_string();
        assert_eq!(text, "(h+ & s+) & (k- | !(p+ | p-))");
        assert_eq!(f(&text), nested);
    }
}
