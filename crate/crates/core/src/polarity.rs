//! The antitone Galois connection between indicator sets and profile sets.
//!
//! The right polarity sends an indicator set `I` to the profiles whose
//! translation entails `i(I)`; the left polarity sends a profile set `P` to the
//! indicators whose row is entailed by `p(P)`. Under one-signature-per-factor
//! semantics `p(p)` has the single model `p`, so `p(p) ⇒ φ` holds exactly when
//! `p` satisfies `φ`, and both polarities reduce to model sets.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::interpretation::{consistency_pairs, lift_profiles, BasicKey, Interpretation};
use crate::model::{IndicatorSet, Profile, TypeIndicator, INDICATOR_COUNT, PROFILE_COUNT};
use crate::profile_set::ProfileSet;

/// Default seed for randomised verification.
pub const DEFAULT_SEED: u64 = 0x5EED_2016;
/// Default number of randomised trials per check.
pub const DEFAULT_TRIALS: usize = 1000;
/// Largest sampled profile list.
pub const MAX_SAMPLE_PROFILES: usize = 64;

/// A translation of type indicators and indicator sets into formulas.
///
/// Implementations other than [`Interpretation`] exist to exercise the
/// verification suite; the connection properties are only guaranteed when
/// `lift` is antitone in the entailment order.
pub trait IndicatorTranslation {
    fn row(&self, indicator: TypeIndicator) -> &Formula;

    fn lift(&self, set: IndicatorSet) -> Formula {
        crate::interpretation::conjoin_rows(set.iter().map(|t| self.row(t)))
    }
}

impl IndicatorTranslation for Interpretation {
    fn row(&self, indicator: TypeIndicator) -> &Formula {
        Interpretation::row(self, indicator)
    }

    fn lift(&self, set: IndicatorSet) -> Formula {
        Interpretation::lift(self, set)
    }
}

/// Model set of a negation-free formula as disjoint boxes.
pub fn to_boxes(formula: &Formula) -> Result<ProfileSet> {
    if !formula.is_negation_free() {
        return Err(Error::NegationUnsupported);
    }
    Ok(formula.models())
}

fn model_set(formula: &Formula) -> ProfileSet {
    // Negation-free formulas take the box path; others need complements.
    to_boxes(formula).unwrap_or_else(|_| formula.models())
}

/// The connection induced by a translation, with the sixteen row model sets
/// computed once.
pub struct Connection<T = Interpretation> {
    translation: T,
    rows: Vec<ProfileSet>,
}

impl<T: IndicatorTranslation> Connection<T> {
    pub fn new(translation: T) -> Self {
        let rows = TypeIndicator::ALL
            .iter()
            .map(|&t| model_set(translation.row(t)))
            .collect();
        Connection { translation, rows }
    }

    pub fn translation(&self) -> &T {
        &self.translation
    }

    pub fn row_models(&self, indicator: TypeIndicator) -> &ProfileSet {
        &self.rows[indicator.index()]
    }

    /// `→I`: all profiles satisfying `i(I)`.
    pub fn right_polarity(&self, set: IndicatorSet) -> ProfileSet {
        model_set(&self.translation.lift(set))
    }

    /// `←P` for a symbolic profile set: indicators whose row model set
    /// contains `P`. The empty set yields every indicator.
    pub fn left_polarity(&self, profiles: &ProfileSet) -> IndicatorSet {
        TypeIndicator::ALL
            .into_iter()
            .filter(|&t| profiles.is_subset(self.row_models(t)))
            .collect()
    }

    /// `←P` for an explicit list, by evaluating each row on each profile.
    pub fn left_polarity_of(&self, profiles: &[Profile]) -> IndicatorSet {
        TypeIndicator::ALL
            .into_iter()
            .filter(|&t| {
                let row = self.translation.row(t);
                profiles.iter().all(|p| row.evaluate(p))
            })
            .collect()
    }

    /// `→(←P)`.
    pub fn closure_right(&self, profiles: &[Profile]) -> ProfileSet {
        self.right_polarity(self.left_polarity_of(profiles))
    }

    /// `←(→I)`.
    pub fn closure_left(&self, set: IndicatorSet) -> IndicatorSet {
        self.left_polarity(&self.right_polarity(set))
    }

    /// Kernel of `→`: `I ≡ I'` iff `→I = →I'`.
    pub fn kernel_equivalent_indicators(&self, a: IndicatorSet, b: IndicatorSet) -> bool {
        a == b || self.right_polarity(a).set_eq(&self.right_polarity(b))
    }

    /// Kernel of `←`: `P ≡ P'` iff `←P = ←P'`.
    pub fn kernel_equivalent_profiles(&self, a: &ProfileSet, b: &ProfileSet) -> bool {
        self.left_polarity(a) == self.left_polarity(b)
    }

    /// Partitions all `2^16` indicator sets by their right-polarity image.
    /// Classes are ordered by their smallest member mask.
    pub fn kernel_classes(&self) -> Vec<Vec<IndicatorSet>> {
        let mut classes: HashMap<ProfileSet, usize> = HashMap::new();
        let mut out: Vec<Vec<IndicatorSet>> = Vec::new();
        for set in IndicatorSet::all_sets() {
            let image = self.right_polarity(set).canonical();
            let next = out.len();
            let slot = *classes.entry(image).or_insert(next);
            if slot == next {
                out.push(Vec::new());
            }
            out[slot].push(set);
        }
        out
    }

    /// Uniformly random profile from `set`, or `None` if it is empty.
    fn sample_in(&self, set: &ProfileSet, rng: &mut impl Rng) -> Option<Profile> {
        let count = set.count();
        (count > 0).then(|| set.nth(rng.gen_range(0..count)).expect("rank below count"))
    }
}

fn random_profile(rng: &mut impl Rng) -> Profile {
    Profile::from_index(rng.gen_range(0..PROFILE_COUNT)).expect("index in range")
}

fn random_indicator_set(rng: &mut impl Rng) -> IndicatorSet {
    IndicatorSet::from_bits(rng.gen())
}

/// Uniform masks almost always mix both attitudes and have an empty image,
/// so half of the draws are sets of at most three indicators instead.
fn random_query_set(rng: &mut impl Rng) -> IndicatorSet {
    if rng.gen() {
        return random_indicator_set(rng);
    }
    let len = rng.gen_range(0..=3);
    (0..len)
        .map(|_| TypeIndicator::ALL[rng.gen_range(0..INDICATOR_COUNT)])
        .collect()
}

fn random_subset(set: IndicatorSet, rng: &mut impl Rng) -> IndicatorSet {
    IndicatorSet::from_bits(set.bits() & rng.gen::<u16>())
}

fn show_profiles(profiles: &[Profile]) -> String {
    let shown: Vec<String> = profiles.iter().map(|p| format!("<{p}>")).collect();
    format!("[{}]", shown.join(", "))
}

/// Outcome of one named check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub trials: usize,
    /// A counterexample, present whenever `passed` is false.
    pub witness: Option<String>,
    #[serde(serialize_with = "serialize_millis")]
    pub elapsed: Duration,
}

fn serialize_millis<S: serde::Serializer>(
    d: &Duration,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct ConnectionReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl ConnectionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = format!("seed {}\n", self.seed);
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:<28} trials={:<6} {:>9.2} ms\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.trials,
                c.elapsed.as_secs_f64() * 1e3
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("     witness: {w}\n"));
            }
        }
        out
    }
}

/// Which group of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Facts,
    Lemma,
    Theorem,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "facts" => Ok(Suite::Facts),
            "lemma" => Ok(Suite::Lemma),
            "theorem" => Ok(Suite::Theorem),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite `{s}` (facts, lemma, theorem, all)")),
        }
    }
}

struct Checker {
    report: ConnectionReport,
}

impl Checker {
    /// Runs `body` for each trial; the first witness it returns fails the check.
    fn run(&mut self, name: &str, trials: usize, mut body: impl FnMut(usize) -> Option<String>) {
        let start = Instant::now();
        let mut witness = None;
        let mut done = 0;
        for t in 0..trials {
            done += 1;
            if let Some(w) = body(t) {
                witness = Some(w);
                break;
            }
        }
        self.report.checks.push(CheckResult {
            name: name.to_string(),
            passed: witness.is_none(),
            trials: done,
            witness,
            elapsed: start.elapsed(),
        });
    }
}

impl<T: IndicatorTranslation> Connection<T> {
    /// A random profile list of at most [`MAX_SAMPLE_PROFILES`] entries, half
    /// of them drawn from `inside` when it is non-empty.
    fn sample_profiles(&self, inside: &ProfileSet, rng: &mut impl Rng) -> Vec<Profile> {
        let len = rng.gen_range(0..=MAX_SAMPLE_PROFILES);
        (0..len)
            .map(|k| {
                if k % 2 == 0 {
                    self.sample_in(inside, rng)
                        .unwrap_or_else(|| random_profile(rng))
                } else {
                    random_profile(rng)
                }
            })
            .collect()
    }

    /// A profile list entirely inside `→I`, or a random one if `→I` is empty.
    fn sample_inside(&self, inside: &ProfileSet, rng: &mut impl Rng) -> Vec<Profile> {
        let len = rng.gen_range(0..=MAX_SAMPLE_PROFILES);
        (0..len)
            .map(|_| {
                self.sample_in(inside, rng)
                    .unwrap_or_else(|| random_profile(rng))
            })
            .collect()
    }

    /// Connection check: `P ⊆ →I ⟺ I ⊆ ←P`. The left side uses the symbolic
    /// right polarity, the right side evaluates rows on the explicit list.
    pub fn check_biconditional(&self, set: IndicatorSet, profiles: &[Profile]) -> Option<String> {
        let right = self.right_polarity(set);
        let lhs = profiles.iter().all(|p| right.contains(p));
        let rhs = set.is_subset(self.left_polarity_of(profiles));
        (lhs != rhs).then(|| {
            format!(
                "I={set} P={} : P⊆→I is {lhs}, I⊆←P is {rhs}",
                show_profiles(profiles)
            )
        })
    }

    fn galois_checks(&self, checker: &mut Checker, trials: usize, rng: &mut ChaCha8Rng) {
        checker.run("galois.biconditional", trials, |t| {
            let set = random_query_set(rng);
            let right = self.right_polarity(set);
            // Alternate between lists built to land inside →I and mixed lists.
            let profiles = if t % 2 == 0 {
                self.sample_inside(&right, rng)
            } else {
                self.sample_profiles(&right, rng)
            };
            self.check_biconditional(set, &profiles)
        });
    }

    fn polarity_checks(&self, checker: &mut Checker, trials: usize, rng: &mut ChaCha8Rng) {
        checker.run("polarity.right_antitone", trials, |_| {
            let larger = random_query_set(rng);
            let smaller = random_subset(larger, rng);
            let (big, small) = (self.right_polarity(larger), self.right_polarity(smaller));
            big.witness_outside(&small)
                .map(|p| format!("I={smaller} ⊆ I'={larger} but <{p}> ∈ →I' \\ →I"))
        });
        checker.run("polarity.left_antitone", trials, |_| {
            let anchor = self.right_polarity(random_query_set(rng));
            let larger = self.sample_profiles(&anchor, rng);
            let smaller: Vec<Profile> = larger.iter().copied().filter(|_| rng.gen()).collect();
            let (l_big, l_small) = (
                self.left_polarity_of(&larger),
                self.left_polarity_of(&smaller),
            );
            (!l_big.is_subset(l_small)).then(|| {
                format!(
                    "P={} ⊆ P'={} but ←P'={l_big} ⊄ ←P={l_small}",
                    show_profiles(&smaller),
                    show_profiles(&larger)
                )
            })
        });
        checker.run("closure.profiles_inflationary", trials, |_| {
            let anchor = self.right_polarity(random_query_set(rng));
            let profiles = self.sample_profiles(&anchor, rng);
            let closure = self.closure_right(&profiles);
            profiles
                .iter()
                .find(|p| !closure.contains(p))
                .map(|p| format!("<{p}> ∈ P but ∉ →(←P) for P={}", show_profiles(&profiles)))
        });
        checker.run("closure.indicators_inflationary", trials, |_| {
            let set = random_query_set(rng);
            let closure = self.closure_left(set);
            (!set.is_subset(closure)).then(|| format!("I={set} ⊄ ←(→I)={closure}"))
        });
    }

    fn translation_checks(&self, checker: &mut Checker, trials: usize, rng: &mut ChaCha8Rng) {
        checker.run("lift.antitone", trials, |_| {
            let larger = random_query_set(rng);
            let smaller = random_subset(larger, rng);
            let big = model_set(&self.translation.lift(larger));
            let small = model_set(&self.translation.lift(smaller));
            big.witness_outside(&small)
                .map(|p| format!("I={smaller} ⊆ I'={larger} but <{p}> ⊨ i(I') ∧ ¬i(I)"))
        });
        checker.run("profiles.lift_monotone", trials, |_| {
            let anchor = self.right_polarity(random_query_set(rng));
            let larger = self.sample_profiles(&anchor, rng);
            let smaller: Vec<Profile> = larger.iter().copied().filter(|_| rng.gen()).collect();
            let (a, b) = (lift_profiles(&smaller), lift_profiles(&larger));
            // Symbolic and evaluated entailment must both hold.
            let evaluated = smaller.iter().all(|p| a.evaluate(p) && b.evaluate(p));
            (!(evaluated && a.entails(&b)))
                .then(|| format!("p(P) ⇏ p(P') for P={}", show_profiles(&smaller)))
        });
        checker.run(
            "rows.distinct",
            INDICATOR_COUNT * (INDICATOR_COUNT - 1) / 2,
            |k| {
                let (a, b) = pair_index(k);
                self.rows[a].set_eq(&self.rows[b]).then(|| {
                    format!(
                        "rows {} and {} are equivalent",
                        TypeIndicator::ALL[a],
                        TypeIndicator::ALL[b]
                    )
                })
            },
        );
        checker.run("rows.nonempty", INDICATOR_COUNT, |k| {
            let t = TypeIndicator::ALL[k];
            self.right_polarity(IndicatorSet::singleton(t))
                .is_empty()
                .then(|| format!("→{{{t}}} is empty"))
        });
        checker.run("profiles.injective", trials, |_| {
            let a = random_profile(rng);
            let b = random_profile(rng);
            let (fa, fb) = (
                crate::interpretation::map_profile(&a),
                crate::interpretation::map_profile(&b),
            );
            let same_syntax = fa == fb;
            let same_models = fa.models() == fb.models();
            ((a == b) != same_syntax || (a == b) != same_models)
                .then(|| format!("p(<{a}>) vs p(<{b}>)"))
        });
    }

    /// Runs the selected checks with `trials` random samples each.
    pub fn verify(&self, suite: Suite, trials: usize, seed: u64) -> ConnectionReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checker = Checker {
            report: ConnectionReport {
                seed,
                checks: Vec::new(),
            },
        };
        if matches!(suite, Suite::Facts | Suite::All) {
            self.translation_checks(&mut checker, trials, &mut rng);
        }
        if matches!(suite, Suite::Lemma | Suite::All) {
            self.polarity_checks(&mut checker, trials, &mut rng);
        }
        if matches!(suite, Suite::Theorem | Suite::All) {
            self.galois_checks(&mut checker, trials, &mut rng);
        }
        checker.report
    }
}

impl Connection<Interpretation> {
    /// Runs the full suite including the consistency checks that need the
    /// basic translations.
    pub fn verify_interpretation(
        &self,
        suite: Suite,
        trials: usize,
        seed: u64,
    ) -> ConnectionReport {
        let mut report = ConnectionReport {
            seed,
            checks: Vec::new(),
        };
        if matches!(suite, Suite::Facts | Suite::All) {
            report
                .checks
                .extend(basic_consistency_checks(&self.translation));
        }
        report
            .checks
            .extend(self.verify(suite, trials, seed).checks);
        report
    }
}

fn pair_index(k: usize) -> (usize, usize) {
    let mut k = k;
    for a in 0..INDICATOR_COUNT {
        let span = INDICATOR_COUNT - 1 - a;
        if k < span {
            return (a, a + 1 + k);
        }
        k -= span;
    }
    unreachable!("pair index out of range")
}

/// Consistency of the basic translations: the listed conjunctions are
/// satisfiable and the two attitudes exclude each other.
pub fn basic_consistency_checks(interp: &Interpretation) -> Vec<CheckResult> {
    let mut checker = Checker {
        report: ConnectionReport::default(),
    };
    let Some(basic) = interp.basic() else {
        checker.run("basics.present", 1, |_| {
            Some("interpretation has no basic translations".into())
        });
        return checker.report.checks;
    };
    let pairs = consistency_pairs();
    let (attitude_pairs, cross_pairs): (Vec<_>, Vec<_>) = pairs
        .into_iter()
        .partition(|(a, _)| matches!(a, BasicKey::Extraversion | BasicKey::Introversion));
    for (name, list) in [
        ("basics.attitude_pairs", attitude_pairs),
        ("basics.cross_dominance", cross_pairs),
    ] {
        checker.run(name, list.len(), |k| {
            let (a, b) = list[k];
            let both = Formula::And(vec![basic.get(a).clone(), basic.get(b).clone()]);
            (!both.is_satisfiable()).then(|| format!("i({a}) ∧ i({b}) ≡ ⊥"))
        });
    }
    checker.run("basics.attitudes_exclusive", 1, |_| {
        let both = Formula::And(vec![
            basic.get(BasicKey::Extraversion).clone(),
            basic.get(BasicKey::Introversion).clone(),
        ]);
        both.models()
            .nth(0)
            .map(|p| format!("<{p}> satisfies i(E) ∧ i(I)"))
    });
    checker.report.checks
}
