//! A computable antitone Galois connection between Myers-Briggs type
//! indicators and Szondi personality profiles.
//!
//! Both spaces are powersets: sets of the 16 type indicators and sets of the
//! `12^8` profiles. Each side is translated into a propositional pivot
//! language over the 96 atoms `factor^signature`; the right polarity sends an
//! indicator set to the profiles entailing its translation and the left
//! polarity sends a profile set to the indicators its translation entails.
//!
//! ```
//! use mbti_szondi::{Connection, IndicatorSet, Interpretation, Profile};
//!
//! let conn = Connection::new(Interpretation::builtin());
//! let entj: IndicatorSet = "ENTJ".parse().unwrap();
//! let profiles = conn.right_polarity(entj);
//! assert!(profiles.count() > 0);
//! assert_eq!(conn.left_polarity_of(&[Profile::norm()]), IndicatorSet::EMPTY);
//! ```

pub mod cache;
pub mod cli;
pub mod error;
pub mod formula;
pub mod interpretation;
pub mod model;
pub mod oracle;
pub mod polarity;
pub mod profile_set;

pub use error::{Error, ParseError, Result};
pub use formula::{Atom, Formula};
pub use interpretation::{
    lift_profiles, map_profile, pattern, BasicKey, BasicTranslations, Dominance, Interpretation,
    PatternSpec, Polarity,
};
pub use model::{
    Factor, IndicatorSet, Profile, Signature, SignatureOrder, TypeIndicator, PROFILE_COUNT,
};
pub use polarity::{to_boxes, Connection, ConnectionReport, IndicatorTranslation, Suite};
pub use profile_set::{ProfileSet, SignatureBox, SignatureSet};
