//! Integer partitions and the statistics consumed by the character and
//! Hurwitz formulas.
//!
//! A [`Partition`] is stored as its weakly decreasing part list, which is the
//! only source of truth; multiplicities are derived on demand. The empty
//! partition (weight 0) is a valid value and appears as an endpoint when a
//! profile is split between two orbits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition from parts that must already be positive and
    /// weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(invalid(&parts, "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(&parts, "parts must be weakly decreasing"));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from positive parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    /// The one-row shape `(d)`.
    pub fn row(d: usize) -> Self {
        if d == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![d])
        }
    }

    /// The one-column shape `(1^d)`, also the class of the identity.
    pub fn column(d: usize) -> Self {
        Self::from_sorted(vec![1; d])
    }

    /// The class `(2,1^{d-2})` of transpositions. Requires `d >= 2`.
    pub fn transposition(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::DegreeOutOfRange {
                degree: d,
                reason: "S(d) has no transpositions for d < 2".into(),
            });
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, d - 2));
        Ok(Self::from_sorted(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts, `l(θ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Colength `l*(θ) = |θ| - l(θ)`, the minimal number of transpositions
    /// whose product has cycle type θ.
    pub fn l_star(&self) -> usize {
        self.weight - self.parts.len()
    }

    /// Count of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Distinct part values (descending) paired with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let columns = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=columns)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// Centralizer order `z_θ = Π m_i! i^{m_i}`.
    pub fn z_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (value, count) in self.multiplicities() {
            for j in 1..=count {
                z *= BigUint::from(j) * BigUint::from(value);
            }
        }
        z
    }

    /// Multiset union of the two part lists.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    /// Multiset difference `self \ other`, or `None` when `other` is not a
    /// sub-multiset of `self`.
    pub fn difference(&self, other: &Partition) -> Option<Partition> {
        let mut remaining = self.parts.clone();
        for p in &other.parts {
            let pos = remaining.iter().position(|q| q == p)?;
            remaining.remove(pos);
        }
        Some(Self::from_sorted(remaining))
    }

    /// Every distinct split of the parts into an ordered pair `(ν, σ)` with
    /// `ν ∪ σ = self`. Ordered by the part counts placed in `ν`, smallest part
    /// varying fastest, so `(∅, self)` comes first and `(self, ∅)` last.
    pub fn sub_multisets(&self) -> Vec<(Partition, Partition)> {
        let mults = self.multiplicities();
        let mut counts = vec![0usize; mults.len()];
        let mut out = Vec::new();
        loop {
            let mut taken = Vec::new();
            let mut left = Vec::new();
            for (&(value, mult), &c) in mults.iter().zip(&counts) {
                taken.extend(std::iter::repeat_n(value, c));
                left.extend(std::iter::repeat_n(value, mult - c));
            }
            out.push((Self::from_sorted(taken), Self::from_sorted(left)));

            // odometer step, last digit fastest
            let mut i = mults.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if counts[i] < mults[i].1 {
                    counts[i] += 1;
                    break;
                }
                counts[i] = 0;
            }
        }
    }
}

fn invalid(parts: &[usize], reason: &str) -> Error {
    Error::InvalidPartition {
        input: format!("{parts:?}"),
        reason: reason.into(),
    }
}

/// All partitions of `d` in descending lexicographic order. `d = 0` yields
/// the single empty partition.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            fill(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(d, d, &mut Vec::with_capacity(d), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"3,1,1"`. Whitespace is ignored; the empty string is the empty
/// partition. Parts must already be weakly decreasing.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Self::empty());
        }
        let parts = compact
            .split(',')
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::InvalidPartition {
                    input: s.to_string(),
                    reason: format!("{tok:?} is not a positive integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| match e {
            Error::InvalidPartition { reason, .. } => Error::InvalidPartition {
                input: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A degree together with the fixed ramification profiles `μ^(1..s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileSet {
    degree: usize,
    profiles: Vec<Partition>,
}

impl ProfileSet {
    pub fn new(degree: usize, profiles: Vec<Partition>) -> Result<Self> {
        for p in &profiles {
            if p.weight() != degree {
                return Err(Error::WeightMismatch {
                    expected: degree,
                    found: p.weight(),
                });
            }
        }
        Ok(Self { degree, profiles })
    }

    /// No fixed profiles (`s = 0`).
    pub fn bare(degree: usize) -> Self {
        Self {
            degree,
            profiles: Vec::new(),
        }
    }

    /// Parses a semicolon-separated list such as `"3,1,1;2,2,1"`. An empty
    /// (or all-whitespace) string means `s = 0`.
    pub fn parse(degree: usize, s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::bare(degree));
        }
        let profiles = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        Self::new(degree, profiles)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }

    /// Number of fixed profiles `s`.
    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn total_l_star(&self) -> usize {
        self.profiles.iter().map(Partition::l_star).sum()
    }

    /// `Π m_1(μ^(i))`.
    pub fn product_of_fixed_points(&self) -> i64 {
        self.profiles.iter().map(|p| p.multiplicity(1) as i64).product()
    }

    /// All ways to split every profile simultaneously into a part of weight
    /// `first_degree` and its complement, as `(ν, σ)` profile sets.
    pub fn splits(&self, first_degree: usize) -> Vec<(ProfileSet, ProfileSet)> {
        assert!(first_degree <= self.degree);
        let rest_degree = self.degree - first_degree;
        let mut acc: Vec<(Vec<Partition>, Vec<Partition>)> = vec![(Vec::new(), Vec::new())];
        for profile in &self.profiles {
            let options: Vec<(Partition, Partition)> = profile
                .sub_multisets()
                .into_iter()
                .filter(|(nu, _)| nu.weight() == first_degree)
                .collect();
            let mut next = Vec::with_capacity(acc.len() * options.len());
            for (nus, sigmas) in &acc {
                for (nu, sigma) in &options {
                    let mut nus = nus.clone();
                    let mut sigmas = sigmas.clone();
                    nus.push(nu.clone());
                    sigmas.push(sigma.clone());
                    next.push((nus, sigmas));
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|(nus, sigmas)| {
                (
                    ProfileSet {
                        degree: first_degree,
                        profiles: nus,
                    },
                    ProfileSet {
                        degree: rest_degree,
                        profiles: sigmas,
                    },
                )
            })
            .collect()
    }
}

impl fmt::Display for ProfileSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.profiles.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Independent count: number of partitions of n with parts at most k.
    fn count_partitions(n: usize, k: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=k.min(n)).map(|part| count_partitions(n - part, part)).sum()
    }

    fn factorial(n: usize) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(1), vec![p("1")]);
        assert_eq!(enumerate_partitions(5).len(), 7);
        assert_eq!(enumerate_partitions(10).len(), 42);
        for d in 0..=15 {
            assert_eq!(enumerate_partitions(d).len(), count_partitions(d, d), "d = {d}");
        }
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn enumeration_is_descending_lex_and_unique() {
        for d in 1..=12 {
            let all = enumerate_partitions(d);
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
            assert!(all.iter().all(|q| q.weight() == d));
        }
        let five: Vec<String> = enumerate_partitions(5).iter().map(|q| q.to_string()).collect();
        assert_eq!(five, ["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"]);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::row(6).conjugate(), Partition::column(6));
        assert_eq!(p("3,1,1").conjugate(), p("3,1,1"));
        for d in 3..=9 {
            let hook = Partition::transposition(d).unwrap();
            assert_eq!(hook.conjugate(), Partition::new(vec![d - 1, 1]).unwrap());
        }
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugation_is_involution_and_closed() {
        for d in 0..=12 {
            let all = enumerate_partitions(d);
            let set: HashSet<_> = all.iter().cloned().collect();
            for lambda in &all {
                let c = lambda.conjugate();
                assert_eq!(c.weight(), d);
                assert_eq!(&c.conjugate(), lambda);
                assert!(set.contains(&c));
            }
        }
    }

    #[test]
    fn z_order_examples() {
        assert_eq!(Partition::column(6).z_order(), factorial(6));
        assert_eq!(p("2,1,1,1").z_order(), BigUint::from(12u32));
        assert_eq!(p("2,2,1").z_order(), BigUint::from(8u32));
        assert_eq!(Partition::empty().z_order(), BigUint::from(1u32));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for d in 1..=10 {
            let n = factorial(d);
            let total: BigUint = enumerate_partitions(d).iter().map(|t| &n / t.z_order()).sum();
            assert_eq!(total, n, "d = {d}");
        }
    }

    #[test]
    fn colength_and_multiplicity() {
        assert_eq!(Partition::column(7).l_star(), 0);
        assert_eq!(Partition::row(7).l_star(), 6);
        assert_eq!(p("2,2,1").l_star(), 2);
        assert_eq!(p("2,1,1,1").multiplicity(1), 3);
        assert_eq!(p("5").multiplicity(1), 0);
        assert_eq!(p("2,2,1").multiplicity(2), 2);
        assert_eq!(p("3,3,1").multiplicities(), vec![(3, 2), (1, 1)]);
    }

    #[test]
    fn sub_multiset_examples() {
        let e = Partition::empty();
        assert_eq!(
            p("2,1").sub_multisets(),
            vec![
                (e.clone(), p("2,1")),
                (p("1"), p("2")),
                (p("2"), p("1")),
                (p("2,1"), e.clone()),
            ]
        );
        assert_eq!(
            p("1,1").sub_multisets(),
            vec![(e.clone(), p("1,1")), (p("1"), p("1")), (p("1,1"), e.clone())]
        );
        assert_eq!(p("2,2,1").sub_multisets().len(), 6);
        assert_eq!(e.sub_multisets(), vec![(e.clone(), e)]);
    }

    /// Brute force: every subset of part positions, deduplicated.
    fn sub_multisets_by_subsets(mu: &Partition) -> HashSet<(Partition, Partition)> {
        let n = mu.len();
        (0..1u32 << n)
            .map(|mask| {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                for (i, &part) in mu.parts().iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        a.push(part);
                    } else {
                        b.push(part);
                    }
                }
                (Partition::new(a).unwrap(), Partition::new(b).unwrap())
            })
            .collect()
    }

    #[test]
    fn sub_multisets_match_subset_enumeration() {
        for d in 0..=9 {
            for mu in enumerate_partitions(d) {
                let listed = mu.sub_multisets();
                let set: HashSet<_> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len(), "duplicates for {mu:?}");
                assert_eq!(set, sub_multisets_by_subsets(&mu), "{mu:?}");
                for (nu, sigma) in &listed {
                    assert_eq!(&nu.union(sigma), &mu);
                    assert_eq!(nu.weight() + sigma.weight(), mu.weight());
                    assert_eq!(mu.difference(nu).as_ref(), Some(sigma));
                }
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(p(" 3, 1 ,1 "), Partition::new(vec![3, 1, 1]).unwrap());
        assert_eq!(p(""), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("3,,1".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), p("3,2,1"));

        let set = ProfileSet::parse(5, "3,1,1; 2,2,1").unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.total_l_star(), 4);
        assert_eq!(set.to_string(), "3,1,1;2,2,1");
        assert!(ProfileSet::parse(5, "").unwrap().is_empty());
        assert!(matches!(
            ProfileSet::parse(5, "3,1"),
            Err(Error::WeightMismatch { expected: 5, found: 4 })
        ));
    }

    #[test]
    fn profile_splits() {
        let set = ProfileSet::parse(4, "2,1,1;3,1").unwrap();
        let splits = set.splits(1);
        // ν^(1) = (1), ν^(2) = (1)
        assert_eq!(splits.len(), 1);
        assert_eq!(splits[0].0.to_string(), "1;1");
        assert_eq!(splits[0].1.to_string(), "2,1;3");
        assert_eq!(set.splits(2).len(), 0);
        assert_eq!(ProfileSet::bare(4).splits(2).len(), 1);
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(parts in proptest::collection::vec(1usize..9, 0..8)) {
            let lambda = Partition::from_unsorted(parts).unwrap();
            let back: Partition = lambda.to_string().parse().unwrap();
            prop_assert_eq!(&back, &lambda);
            prop_assert_eq!(lambda.weight(), lambda.parts().iter().sum::<usize>());
            prop_assert!(lambda.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
