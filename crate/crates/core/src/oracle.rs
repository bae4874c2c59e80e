//! Definitional brute force: enumerate permutation tuples directly.
//!
//! Profile slots iterate over their conjugacy classes, transposition slots
//! over every transposition, and the last slot is forced to be the inverse of
//! the running product (then checked for the right cycle type). Transitivity
//! is tested with a union-find over the generated action.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::character::factorial;
use crate::error::{Error, Result};
use crate::partition::{Partition, ProfileSet};

const MAX_POINTS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceBound {
    /// Degrees up to this value are always allowed.
    pub max_degree: usize,
    /// One degree above `max_degree` is allowed with at most this many
    /// transpositions.
    pub max_k_above: usize,
}

impl Default for BruteForceBound {
    fn default() -> Self {
        Self {
            max_degree: 4,
            max_k_above: 6,
        }
    }
}

impl BruteForceBound {
    pub fn with_max_degree(max_degree: usize) -> Self {
        Self {
            max_degree,
            ..Self::default()
        }
    }

    pub fn allows(&self, degree: usize, k: usize) -> bool {
        degree <= self.max_degree || (degree == self.max_degree + 1 && k <= self.max_k_above)
    }
}

type Perm = [u8; MAX_POINTS];

fn identity(d: usize) -> Perm {
    let mut p = [0u8; MAX_POINTS];
    for (i, x) in p.iter_mut().enumerate().take(d) {
        *x = i as u8;
    }
    p
}

/// `(a * b)(i) = a(b(i))`.
fn compose(a: &Perm, b: &Perm, d: usize) -> Perm {
    let mut out = [0u8; MAX_POINTS];
    for i in 0..d {
        out[i] = a[b[i] as usize];
    }
    out
}

fn inverse(a: &Perm, d: usize) -> Perm {
    let mut out = [0u8; MAX_POINTS];
    for i in 0..d {
        out[a[i] as usize] = i as u8;
    }
    out
}

fn cycle_type(p: &Perm, d: usize) -> Partition {
    let mut seen = [false; MAX_POINTS];
    let mut lengths = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths).expect("cycle lengths are positive")
}

fn all_permutations(d: usize) -> Vec<Perm> {
    fn extend(d: usize, prefix: &mut Vec<u8>, used: &mut [bool; MAX_POINTS], out: &mut Vec<Perm>) {
        if prefix.len() == d {
            let mut p = [0u8; MAX_POINTS];
            p[..d].copy_from_slice(prefix);
            out.push(p);
            return;
        }
        for x in 0..d {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u8);
                extend(d, prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(d, &mut Vec::with_capacity(d), &mut [false; MAX_POINTS], &mut out);
    out
}

fn class_members(d: usize, class: &Partition) -> Vec<Perm> {
    all_permutations(d)
        .into_iter()
        .filter(|p| &cycle_type(p, d) == class)
        .collect()
}

fn is_transitive(tuple: &[Perm], d: usize) -> bool {
    let mut parent: [u8; MAX_POINTS] = identity(d);
    fn find(parent: &mut [u8; MAX_POINTS], mut x: usize) -> usize {
        while parent[x] as usize != x {
            parent[x] = parent[parent[x] as usize];
            x = parent[x] as usize;
        }
        x
    }
    let mut components = d;
    for p in tuple {
        for i in 0..d {
            let (a, b) = (find(&mut parent, i), find(&mut parent, p[i] as usize));
            if a != b {
                parent[a] = b as u8;
                components -= 1;
            }
        }
    }
    components <= 1
}

struct Search<'a> {
    d: usize,
    slots: Vec<&'a [Perm]>,
    last_class: &'a Partition,
    transitive_only: bool,
}

impl Search<'_> {
    /// Counts completions of `tuple` (holding the first slots) with product
    /// `prefix`.
    fn count(&self, tuple: &mut Vec<Perm>, prefix: Perm) -> u64 {
        let depth = tuple.len();
        if depth == self.slots.len() {
            // final slot is determined: prefix * last = id
            let last = inverse(&prefix, self.d);
            if &cycle_type(&last, self.d) != self.last_class {
                return 0;
            }
            if self.transitive_only {
                tuple.push(last);
                let ok = is_transitive(tuple, self.d);
                tuple.pop();
                return ok as u64;
            }
            return 1;
        }
        let mut total = 0;
        for p in self.slots[depth] {
            tuple.push(*p);
            total += self.count(tuple, compose(&prefix, p, self.d));
            tuple.pop();
        }
        total
    }
}

/// Number of tuples `(α_1..α_s, τ_1..τ_k)` with `α_i` of cycle type `μ^(i)`,
/// `τ_j` transpositions and `α_1···α_s τ_1···τ_k = 1`.
pub fn count_tuples(profiles: &ProfileSet, k: usize, transitive_only: bool) -> Result<u64> {
    let d = profiles.degree();
    if d == 0 || d > MAX_POINTS {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            reason: format!("brute force handles 1 <= d <= {MAX_POINTS}"),
        });
    }
    let mut classes: Vec<Partition> = profiles.profiles().to_vec();
    if k > 0 {
        if d < 2 {
            return Ok(0);
        }
        let tau = Partition::transposition(d)?;
        classes.extend(std::iter::repeat_n(tau, k));
    }
    let Some(last_class) = classes.pop() else {
        // empty tuple: product is trivially the identity
        return Ok(u64::from(!transitive_only || d == 1));
    };
    let members: Vec<(Partition, Vec<Perm>)> = {
        let mut distinct: Vec<Partition> = classes.clone();
        distinct.sort();
        distinct.dedup();
        distinct.into_iter().map(|c| {
            let m = class_members(d, &c);
            (c, m)
        }).collect()
    };
    let lookup = |c: &Partition| -> &[Perm] {
        &members.iter().find(|(key, _)| key == c).expect("class listed").1
    };
    let search = Search {
        d,
        slots: classes.iter().map(lookup).collect(),
        last_class: &last_class,
        transitive_only,
    };
    if search.slots.is_empty() {
        return Ok(search.count(&mut Vec::new(), identity(d)));
    }
    Ok(search.slots[0]
        .par_iter()
        .map(|first| {
            let mut tuple = vec![*first];
            search.count(&mut tuple, *first)
        })
        .sum())
}

fn check_bound(profiles: &ProfileSet, k: usize, bound: &BruteForceBound) -> Result<()> {
    if bound.allows(profiles.degree(), k) {
        Ok(())
    } else {
        Err(Error::BruteForceBound {
            degree: profiles.degree(),
            transpositions: k,
            max_degree: bound.max_degree,
        })
    }
}

/// `(1/d!)·#{transitive tuples}`.
pub fn oracle_connected(profiles: &ProfileSet, k: usize, bound: &BruteForceBound) -> Result<BigRational> {
    check_bound(profiles, k, bound)?;
    let n = count_tuples(profiles, k, true)?;
    Ok(BigRational::new(BigInt::from(n), BigInt::from(factorial(profiles.degree()))))
}

/// `(1/d!)·#{all tuples}`.
pub fn oracle_disconnected(profiles: &ProfileSet, k: usize, bound: &BruteForceBound) -> Result<BigRational> {
    check_bound(profiles, k, bound)?;
    let n = count_tuples(profiles, k, false)?;
    Ok(BigRational::new(BigInt::from(n), BigInt::from(factorial(profiles.degree()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use num_traits::Zero;

    fn set(d: usize, s: &str) -> ProfileSet {
        ProfileSet::parse(d, s).unwrap()
    }

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(all_permutations(4).len(), 24);
        let sizes: usize = enumerate_partitions(5).iter().map(|c| class_members(5, c).len()).sum();
        assert_eq!(sizes, 120);
        assert_eq!(class_members(4, &"2,2".parse().unwrap()).len(), 3);
        let p = all_permutations(5)[37];
        assert_eq!(compose(&p, &inverse(&p, 5), 5)[..5], identity(5)[..5]);
    }

    #[test]
    fn raw_counts() {
        // 4-tuples of transpositions in S(3) with trivial product: 27 total, 24 transitive
        assert_eq!(count_tuples(&set(3, ""), 4, false).unwrap(), 27);
        assert_eq!(count_tuples(&set(3, ""), 4, true).unwrap(), 24);
        assert_eq!(count_tuples(&set(2, ""), 2, true).unwrap(), 1);
        // a 3-cycle times two transpositions: 2 * 3 = 6 tuples
        assert_eq!(count_tuples(&set(3, "3"), 2, true).unwrap(), 6);
        assert_eq!(count_tuples(&set(1, ""), 0, true).unwrap(), 1);
        assert_eq!(count_tuples(&set(3, ""), 0, true).unwrap(), 0);
        assert_eq!(count_tuples(&set(3, ""), 0, false).unwrap(), 1);
    }

    #[test]
    fn oracle_examples() {
        let b = BruteForceBound::default();
        assert_eq!(oracle_connected(&set(3, ""), 4, &b).unwrap(), q(4, 1));
        assert!(oracle_connected(&set(2, ""), 3, &b).unwrap().is_zero());
        assert_eq!(oracle_connected(&set(4, "4"), 3, &b).unwrap(), q(4, 1));
        assert_eq!(oracle_disconnected(&set(2, ""), 4, &b).unwrap(), q(1, 2));
        assert_eq!(oracle_disconnected(&set(3, ""), 4, &b).unwrap(), q(9, 2));
    }

    #[test]
    fn bound_is_enforced() {
        let b = BruteForceBound::default();
        assert!(b.allows(5, 6));
        assert!(!b.allows(5, 7));
        assert!(!b.allows(6, 0));
        assert!(matches!(
            oracle_connected(&set(5, ""), 8, &b),
            Err(Error::BruteForceBound { degree: 5, .. })
        ));
        assert!(BruteForceBound::with_max_degree(5).allows(5, 8));
    }
}
