//! Exhaustive model counting by evaluating formulas on every profile.
//!
//! Independent of the box representation: it only uses the dense index
//! encoding and [`Formula::evaluate`]. Slow by design of the problem size
//! (`12^8` profiles), so callers run it once and pin the results.

use crate::formula::Formula;
use crate::model::{Factor, Profile, Signature, FACTOR_COUNT, PROFILE_COUNT, SIGNATURE_COUNT};

/// Counts, for each formula, the profiles in `[0, 12^8)` that satisfy it.
///
/// Profiles are visited in index order; the odometer below yields exactly
/// `Profile::from_index(ix)` for `ix = 0, 1, ...`.
pub fn count_all(formulas: &[Formula]) -> Vec<u64> {
    count_range(formulas, 0, PROFILE_COUNT)
}

/// Like [`count_all`] restricted to indices `start..end`.
pub fn count_range(formulas: &[Formula], start: u64, end: u64) -> Vec<u64> {
    let mut counts = vec![0u64; formulas.len()];
    if start >= end {
        return counts;
    }
    let mut digits = Profile::from_index(start)
        .expect("start index in range")
        .signatures()
        .map(|s| s.ordinal());
    for _ in start..end {
        let profile = Profile::new(digits.map(|d| Signature::ALL[d]));
        for (c, f) in counts.iter_mut().zip(formulas) {
            if f.evaluate(&profile) {
                *c += 1;
            }
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < SIGNATURE_COUNT {
                break;
            }
            *d = 0;
        }
    }
    counts
}

/// All profiles that vary over `factors` and agree with `base` elsewhere,
/// in odometer order.
pub fn sub_universe(factors: &[Factor], base: Profile) -> Vec<Profile> {
    let mut out = vec![base];
    for &f in factors {
        out = out
            .into_iter()
            .flat_map(|p| Signature::ALL.into_iter().map(move |s| p.with(f, s)))
            .collect();
    }
    out
}

/// Number of profiles in `sub_universe(factors, _)`.
pub fn sub_universe_size(factors: &[Factor]) -> u64 {
    (SIGNATURE_COUNT as u64).pow(factors.len() as u32)
}

/// Scale from a sub-universe count to a full-space count when the formula
/// mentions only `factors`.
pub fn lift_factor(factors: &[Factor]) -> u64 {
    (SIGNATURE_COUNT as u64).pow((FACTOR_COUNT - factors.len()) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_matches_index_decoding() {
        let start = 123_456_789;
        let f = Formula::Top;
        assert_eq!(count_range(&[f], start, start + 5000), vec![5000]);
        // Walk a window across a carry into the most significant digit.
        let boundary = 12u64.pow(7) - 3;
        let formulas: Vec<Formula> = (0..6)
            .map(|k| {
                crate::interpretation::map_profile(&Profile::from_index(boundary + k).unwrap())
            })
            .collect();
        assert_eq!(count_range(&formulas, boundary, boundary + 6), vec![1; 6]);
    }

    #[test]
    fn sub_universe_shape() {
        let u = sub_universe(&[Factor::H, Factor::S, Factor::E], Profile::norm());
        assert_eq!(
            u.len() as u64,
            sub_universe_size(&[Factor::H, Factor::S, Factor::E])
        );
        assert_eq!(u.len(), 1728);
        let mut d = u.clone();
        d.sort();
        d.dedup();
        assert_eq!(d.len(), 1728);
        assert!(u
            .iter()
            .all(|p| p.get(Factor::M) == Profile::norm().get(Factor::M)));
        assert_eq!(lift_factor(&[Factor::H]), 12u64.pow(7));
    }
}
