//! Symbolic sets of profiles as unions of pairwise-disjoint signature boxes.
//!
//! A [`SignatureBox`] is a Cartesian product of one non-empty signature subset
//! per factor. Model sets of the translation formulas are small unions of
//! such boxes, so counting, membership and inclusion never touch the `12^8`
//! individual profiles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::model::{Factor, Profile, Signature, FACTOR_COUNT, SIGNATURE_COUNT};

const FULL_MASK: u16 = (1 << SIGNATURE_COUNT) - 1;

/// A subset of the twelve signatures as a 12-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignatureSet(u16);

impl SignatureSet {
    pub const EMPTY: SignatureSet = SignatureSet(0);
    pub const FULL: SignatureSet = SignatureSet(FULL_MASK);

    pub fn from_bits(bits: u16) -> Self {
        SignatureSet(bits & FULL_MASK)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn singleton(signature: Signature) -> Self {
        SignatureSet(1 << signature.ordinal())
    }

    pub fn contains(self, signature: Signature) -> bool {
        self.0 & (1 << signature.ordinal()) != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_full(self) -> bool {
        self.0 == FULL_MASK
    }

    pub fn union(self, other: Self) -> Self {
        SignatureSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SignatureSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SignatureSet(self.0 & !other.0)
    }

    pub fn complement(self) -> Self {
        SignatureSet(!self.0 & FULL_MASK)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Signature> {
        Signature::ALL
            .into_iter()
            .filter(move |&s| self.contains(s))
    }

    /// The `n`-th member in ordinal order.
    fn nth(self, n: u32) -> Option<Signature> {
        self.iter().nth(n as usize)
    }
}

impl FromIterator<Signature> for SignatureSet {
    fn from_iter<I: IntoIterator<Item = Signature>>(iter: I) -> Self {
        iter.into_iter().fold(SignatureSet::EMPTY, |acc, s| {
            acc.union(SignatureSet::singleton(s))
        })
    }
}

impl fmt::Display for SignatureSet {
    /// Concatenated ASCII tokens in ordinal order, e.g. `-+-+-^!`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.iter() {
            f.write_str(s.token())?;
        }
        Ok(())
    }
}

impl FromStr for SignatureSet {
    type Err = ParseError;

    /// Inverse of `Display`: tokens must be strictly ascending, which makes the
    /// concatenation unambiguous under longest-match scanning.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut set = SignatureSet::EMPTY;
        let mut last: Option<Signature> = None;
        let mut pos = 0;
        while pos < s.len() {
            let (sig, len) = Signature::scan(&s[pos..])
                .ok_or_else(|| ParseError::new(pos, "expected a signature token"))?;
            if last.is_some_and(|l| l >= sig) {
                return Err(ParseError::new(pos, "signature tokens must be ascending"));
            }
            set = set.union(SignatureSet::singleton(sig));
            last = Some(sig);
            pos += len;
        }
        if set.is_empty() {
            return Err(ParseError::new(0, "empty signature subset"));
        }
        Ok(set)
    }
}

/// The Cartesian product of one non-empty signature subset per factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignatureBox([SignatureSet; FACTOR_COUNT]);

impl SignatureBox {
    pub const FULL: SignatureBox = SignatureBox([SignatureSet::FULL; FACTOR_COUNT]);

    /// `None` if any factor's subset is empty.
    pub fn new(sets: [SignatureSet; FACTOR_COUNT]) -> Option<Self> {
        if sets.iter().any(|s| s.is_empty()) {
            None
        } else {
            Some(SignatureBox(sets))
        }
    }

    pub fn atom(factor: Factor, signature: Signature) -> Self {
        SignatureBox::FULL.restrict(factor, SignatureSet::singleton(signature))
    }

    pub fn point(profile: &Profile) -> Self {
        SignatureBox(profile.signatures().map(SignatureSet::singleton))
    }

    pub fn get(&self, factor: Factor) -> SignatureSet {
        self.0[factor.index()]
    }

    pub fn sets(&self) -> &[SignatureSet; FACTOR_COUNT] {
        &self.0
    }

    fn restrict(mut self, factor: Factor, set: SignatureSet) -> Self {
        self.0[factor.index()] = set;
        self
    }

    pub fn count(&self) -> u64 {
        self.0.iter().map(|s| s.len() as u64).product()
    }

    pub fn contains(&self, profile: &Profile) -> bool {
        self.0
            .iter()
            .zip(profile.signatures())
            .all(|(set, &sig)| set.contains(sig))
    }

    pub fn intersects(&self, other: &SignatureBox) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| !a.intersection(*b).is_empty())
    }

    pub fn intersection(&self, other: &SignatureBox) -> Option<SignatureBox> {
        let mut sets = self.0;
        for (a, b) in sets.iter_mut().zip(&other.0) {
            *a = a.intersection(*b);
        }
        SignatureBox::new(sets)
    }

    pub fn is_subset(&self, other: &SignatureBox) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a.is_subset(*b))
    }

    /// `self \ other` as at most eight pairwise-disjoint boxes.
    pub fn subtract(&self, other: &SignatureBox, out: &mut Vec<SignatureBox>) {
        if !self.intersects(other) {
            out.push(*self);
            return;
        }
        let mut rest = *self;
        for i in 0..FACTOR_COUNT {
            let outside = rest.0[i].difference(other.0[i]);
            if !outside.is_empty() {
                let mut piece = rest;
                piece.0[i] = outside;
                out.push(piece);
            }
            rest.0[i] = rest.0[i].intersection(other.0[i]);
        }
    }

    /// The `rank`-th profile of the box in mixed-radix order (`h` most
    /// significant), for `rank < count()`.
    pub fn nth(&self, mut rank: u64) -> Option<Profile> {
        if rank >= self.count() {
            return None;
        }
        let mut sigs = [Signature::MinusTriple; FACTOR_COUNT];
        for i in (0..FACTOR_COUNT).rev() {
            let radix = self.0[i].len() as u64;
            sigs[i] = self.0[i].nth((rank % radix) as u32)?;
            rank /= radix;
        }
        Some(Profile::new(sigs))
    }

    /// If the boxes agree on all factors but one, their union as a box.
    fn merge(&self, other: &SignatureBox) -> Option<SignatureBox> {
        let mut differing = None;
        for i in 0..FACTOR_COUNT {
            if self.0[i] != other.0[i] {
                if differing.is_some() {
                    return None;
                }
                differing = Some(i);
            }
        }
        let i = differing?;
        let mut merged = *self;
        merged.0[i] = self.0[i].union(other.0[i]);
        Some(merged)
    }
}

impl fmt::Display for SignatureBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, set) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{set}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignatureBox {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| ParseError::new(0, "box must be enclosed in `[` `]`"))?;
        let parts: Vec<&str> = inner.split_whitespace().collect();
        if parts.len() != FACTOR_COUNT {
            return Err(ParseError::new(
                0,
                format!("box needs {FACTOR_COUNT} subsets, found {}", parts.len()),
            ));
        }
        let mut sets = [SignatureSet::EMPTY; FACTOR_COUNT];
        for (slot, part) in sets.iter_mut().zip(parts) {
            *slot = part.parse()?;
        }
        Ok(SignatureBox(sets))
    }
}

/// A finite union of pairwise-disjoint signature boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ProfileSet {
    boxes: Vec<SignatureBox>,
}

impl ProfileSet {
    pub fn empty() -> Self {
        ProfileSet { boxes: Vec::new() }
    }

    pub fn full() -> Self {
        ProfileSet::from_box(SignatureBox::FULL)
    }

    pub fn from_box(b: SignatureBox) -> Self {
        ProfileSet { boxes: vec![b] }
    }

    pub fn atom(factor: Factor, signature: Signature) -> Self {
        ProfileSet::from_box(SignatureBox::atom(factor, signature))
    }

    pub fn singleton(profile: &Profile) -> Self {
        ProfileSet::from_box(SignatureBox::point(profile))
    }

    pub fn from_profiles<'a>(profiles: impl IntoIterator<Item = &'a Profile>) -> Self {
        let mut points: Vec<Profile> = profiles.into_iter().copied().collect();
        points.sort_unstable();
        points.dedup();
        ProfileSet {
            boxes: points.iter().map(SignatureBox::point).collect(),
        }
    }

    /// Builds a set from boxes that may overlap.
    pub fn from_boxes(boxes: impl IntoIterator<Item = SignatureBox>) -> Self {
        boxes.into_iter().fold(ProfileSet::empty(), |acc, b| {
            acc.union(&ProfileSet::from_box(b))
        })
    }

    /// Wraps boxes the caller guarantees to be pairwise disjoint.
    pub fn from_disjoint_boxes(boxes: Vec<SignatureBox>) -> Self {
        ProfileSet { boxes }
    }

    pub fn boxes(&self) -> &[SignatureBox] {
        &self.boxes
    }

    pub fn count(&self) -> u64 {
        self.boxes.iter().map(SignatureBox::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, profile: &Profile) -> bool {
        self.boxes.iter().any(|b| b.contains(profile))
    }

    /// True iff no two boxes share a profile.
    pub fn is_disjoint(&self) -> bool {
        self.boxes
            .iter()
            .enumerate()
            .all(|(i, a)| self.boxes[i + 1..].iter().all(|b| !a.intersects(b)))
    }

    pub fn intersection(&self, other: &ProfileSet) -> ProfileSet {
        let mut boxes = Vec::new();
        for a in &self.boxes {
            for b in &other.boxes {
                if let Some(c) = a.intersection(b) {
                    boxes.push(c);
                }
            }
        }
        ProfileSet { boxes }.coalesced()
    }

    pub fn difference(&self, other: &ProfileSet) -> ProfileSet {
        let mut current = self.boxes.clone();
        let mut next = Vec::new();
        for b in &other.boxes {
            if current.is_empty() {
                break;
            }
            next.clear();
            for a in &current {
                a.subtract(b, &mut next);
            }
            std::mem::swap(&mut current, &mut next);
        }
        ProfileSet { boxes: current }.coalesced()
    }

    pub fn union(&self, other: &ProfileSet) -> ProfileSet {
        if self.is_empty() {
            return other.clone();
        }
        let extra = other.difference(self);
        let mut boxes = self.boxes.clone();
        boxes.extend(extra.boxes);
        ProfileSet { boxes }.coalesced()
    }

    pub fn complement(&self) -> ProfileSet {
        ProfileSet::full().difference(self)
    }

    pub fn is_subset(&self, other: &ProfileSet) -> bool {
        let mut pieces = Vec::new();
        let mut next = Vec::new();
        for a in &self.boxes {
            if other.boxes.iter().any(|b| a.is_subset(b)) {
                continue;
            }
            pieces.clear();
            pieces.push(*a);
            for b in &other.boxes {
                next.clear();
                for p in &pieces {
                    p.subtract(b, &mut next);
                }
                std::mem::swap(&mut pieces, &mut next);
                if pieces.is_empty() {
                    break;
                }
            }
            if !pieces.is_empty() {
                return false;
            }
        }
        true
    }

    /// Some profile of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &ProfileSet) -> Option<Profile> {
        self.difference(other).nth(0)
    }

    pub fn set_eq(&self, other: &ProfileSet) -> bool {
        self.count() == other.count() && self.is_subset(other)
    }

    /// The `rank`-th profile, enumerating boxes in stored order.
    pub fn nth(&self, mut rank: u64) -> Option<Profile> {
        for b in &self.boxes {
            let c = b.count();
            if rank < c {
                return b.nth(rank);
            }
            rank -= c;
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = Profile> + '_ {
        self.boxes
            .iter()
            .flat_map(|b| (0..b.count()).filter_map(move |r| b.nth(r)))
    }

    /// Repeatedly merges pairs of boxes that differ in exactly one factor.
    /// Disjoint boxes that agree elsewhere are disjoint on that factor, so the
    /// merged list stays disjoint.
    fn coalesced(mut self) -> ProfileSet {
        let mut changed = true;
        while changed && self.boxes.len() > 1 {
            changed = false;
            let mut i = 0;
            while i < self.boxes.len() {
                let mut j = i + 1;
                while j < self.boxes.len() {
                    if let Some(m) = self.boxes[i].merge(&self.boxes[j]) {
                        self.boxes[i] = m;
                        self.boxes.swap_remove(j);
                        changed = true;
                    } else {
                        j += 1;
                    }
                }
                i += 1;
            }
        }
        self
    }

    /// A canonical decomposition: equal sets yield identical box lists.
    ///
    /// Built factor by factor: signatures of the leading factor are grouped by
    /// the canonical form of their cofactor on the remaining factors.
    pub fn canonical(&self) -> ProfileSet {
        ProfileSet {
            boxes: canonical_boxes(&self.boxes, 0),
        }
    }
}

fn canonical_boxes(boxes: &[SignatureBox], level: usize) -> Vec<SignatureBox> {
    if boxes.is_empty() {
        return Vec::new();
    }
    if level == FACTOR_COUNT {
        return vec![SignatureBox::FULL];
    }
    // Signatures covered by the same boxes have the same cofactor.
    let mut by_pattern: BTreeMap<Vec<usize>, SignatureSet> = BTreeMap::new();
    for sig in Signature::ALL {
        let pattern: Vec<usize> = boxes
            .iter()
            .enumerate()
            .filter(|(_, b)| b.0[level].contains(sig))
            .map(|(i, _)| i)
            .collect();
        if !pattern.is_empty() {
            let entry = by_pattern.entry(pattern).or_insert(SignatureSet::EMPTY);
            *entry = entry.union(SignatureSet::singleton(sig));
        }
    }
    let mut by_child: BTreeMap<Vec<SignatureBox>, SignatureSet> = BTreeMap::new();
    for (pattern, sigs) in by_pattern {
        let sub: Vec<SignatureBox> = pattern.iter().map(|&i| boxes[i]).collect();
        let child = canonical_boxes(&sub, level + 1);
        let entry = by_child.entry(child).or_insert(SignatureSet::EMPTY);
        *entry = entry.union(sigs);
    }
    let mut groups: Vec<(SignatureSet, Vec<SignatureBox>)> = by_child
        .into_iter()
        .map(|(child, sigs)| (sigs, child))
        .collect();
    groups.sort_by_key(|(sigs, _)| sigs.bits().trailing_zeros());
    let mut out = Vec::new();
    for (sigs, child) in groups {
        for mut b in child {
            b.0[level] = sigs;
            out.push(b);
        }
    }
    out
}

impl fmt::Display for ProfileSet {
    /// `count=<n>` followed by the boxes, e.g. `count=1 [+ + - - - - + +]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "count={}", self.count())?;
        for b in &self.boxes {
            write!(f, " {b}")?;
        }
        Ok(())
    }
}

impl FromStr for ProfileSet {
    type Err = ParseError;

    /// Parses the `Display` form and checks the stated count against the boxes
    /// and that the boxes are pairwise disjoint.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let rest = s
            .strip_prefix("count=")
            .ok_or_else(|| ParseError::new(0, "expected `count=`"))?;
        let end = rest.find(|c: char| c.is_whitespace()).unwrap_or(rest.len());
        let stated: u64 = rest[..end]
            .parse()
            .map_err(|_| ParseError::new(6, "invalid count"))?;
        let mut boxes = Vec::new();
        let mut body = &rest[end..];
        let base = s.len() - body.len();
        while let Some(open) = body.find('[') {
            if !body[..open].trim().is_empty() {
                return Err(ParseError::new(
                    s.len() - body.len(),
                    "unexpected text between boxes",
                ));
            }
            let close = body[open..]
                .find(']')
                .ok_or_else(|| ParseError::new(base, "unterminated box"))?
                + open;
            let b: SignatureBox = body[open..=close]
                .parse()
                .map_err(|e: ParseError| ParseError::new(s.len() - body.len() + open, e.message))?;
            boxes.push(b);
            body = &body[close + 1..];
        }
        if !body.trim().is_empty() {
            return Err(ParseError::new(s.len() - body.len(), "trailing text"));
        }
        let set = ProfileSet { boxes };
        if !set.is_disjoint() {
            return Err(ParseError::new(0, "boxes overlap"));
        }
        if set.count() != stated {
            return Err(ParseError::new(
                0,
                format!("stated count {stated} but boxes hold {}", set.count()),
            ));
        }
        Ok(set)
    }
}
