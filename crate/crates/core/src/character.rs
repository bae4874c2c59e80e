//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule: the class parts are removed
//! largest first, each step summing over the rim hooks of that size with sign
//! `(-1)^(height - 1)`. Intermediate results are memoized on the pair
//! (remaining shape, remaining class), both kept as canonical partitions.
//! Everything here is exact integer arithmetic.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Shapes left after removing one rim hook of `size` cells from `shape`,
/// each paired with the hook's leg length (rows spanned minus one).
pub fn remove_rim_hooks(shape: &Partition, size: usize) -> Vec<(Partition, usize)> {
    let rows = shape.parts();
    let cols = shape.conjugate();
    let cols = cols.parts();
    let mut out = Vec::new();
    for (i, &row_len) in rows.iter().enumerate() {
        for j in 0..row_len {
            let arm = row_len - j - 1;
            let leg = cols[j] - i - 1;
            if arm + leg + 1 != size {
                continue;
            }
            // Walk the rim from (i, row end) down to (i + leg, j).
            let mut next = rows.to_vec();
            for t in i..i + leg {
                next[t] = rows[t + 1] - 1;
            }
            next[i + leg] = j;
            while next.last() == Some(&0) {
                next.pop();
            }
            let next = Partition::new(next).expect("rim hook removal keeps the shape a partition");
            out.push((next, leg));
        }
    }
    out
}

/// Memo store for character values. Readers share the lock; insertions are
/// serialized.
#[derive(Default)]
pub struct CharacterMemo {
    values: RwLock<HashMap<(Partition, Partition), BigInt>>,
}

impl CharacterMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide memo used by the free functions of this module.
    pub fn global() -> &'static CharacterMemo {
        static MEMO: OnceLock<CharacterMemo> = OnceLock::new();
        MEMO.get_or_init(CharacterMemo::new)
    }

    pub fn len(&self) -> usize {
        self.values.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `χ_λ(μ)`.
    pub fn chi(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch {
                expected: lambda.weight(),
                found: mu.weight(),
            });
        }
        Ok(self.chi_unchecked(lambda, mu))
    }

    fn chi_unchecked(&self, shape: &Partition, class: &Partition) -> BigInt {
        let Some((&strip, rest)) = class.parts().split_first() else {
            return BigInt::one();
        };
        if rest.is_empty() {
            // a single strip covering the whole shape: shape must be a hook
            return match remove_rim_hooks(shape, strip).first() {
                Some((_, leg)) => sign(*leg),
                None => BigInt::zero(),
            };
        }
        let key = (shape.clone(), class.clone());
        if let Some(v) = self.values.read().unwrap().get(&key) {
            return v.clone();
        }
        let rest = Partition::new(rest.to_vec()).expect("suffix of a partition");
        let mut total = BigInt::zero();
        for (smaller, leg) in remove_rim_hooks(shape, strip) {
            let v = self.chi_unchecked(&smaller, &rest);
            if leg % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.values.write().unwrap().insert(key, total.clone());
        total
    }

    /// `dim λ = χ_λ(1^d)`.
    pub fn dimension(&self, lambda: &Partition) -> BigInt {
        self.chi_unchecked(lambda, &Partition::column(lambda.weight()))
    }

    /// `f_θ(λ) = (d!/z_θ) χ_λ(θ) / dim λ`.
    pub fn central_character(&self, theta: &Partition, lambda: &Partition) -> Result<BigRational> {
        let chi = self.chi(lambda, theta)?;
        let class_size = factorial(theta.weight()) / theta.z_order();
        Ok(BigRational::new(
            BigInt::from(class_size) * chi,
            self.dimension(lambda),
        ))
    }
}

fn sign(leg: usize) -> BigInt {
    if leg.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `χ_λ(μ)` through the process-wide memo.
pub fn chi(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    CharacterMemo::global().chi(lambda, mu)
}

pub fn dimension(lambda: &Partition) -> BigInt {
    CharacterMemo::global().dimension(lambda)
}

pub fn central_character(theta: &Partition, lambda: &Partition) -> Result<BigRational> {
    CharacterMemo::global().central_character(theta, lambda)
}

/// Central character of the transposition class via contents:
/// `Σ C(λ_i, 2) - Σ C(λ'_i, 2)`.
pub fn transposition_content(lambda: &Partition) -> Result<i64> {
    if lambda.weight() < 2 {
        return Err(Error::DegreeOutOfRange {
            degree: lambda.weight(),
            reason: "the transposition class needs |λ| >= 2".into(),
        });
    }
    Ok(content_sum(lambda))
}

/// Same sum without the weight check; it is 0 for the shapes of weight 0
/// and 1, which have no transpositions.
pub(crate) fn content_sum(lambda: &Partition) -> i64 {
    let pairs = |p: &Partition| -> i64 {
        p.parts()
            .iter()
            .map(|&x| (x * x.saturating_sub(1) / 2) as i64)
            .sum()
    };
    pairs(lambda) - pairs(&lambda.conjugate())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    LoadedFromCache(PathBuf),
}

/// All `χ_λ(μ)` for `λ, μ ⊢ d`, rows and columns in descending
/// lexicographic partition order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
    provenance: Provenance,
}

impl CharacterTable {
    pub fn compute(degree: usize, memo: &CharacterMemo) -> Self {
        let partitions = enumerate_partitions(degree);
        let values: Vec<Vec<BigInt>> = partitions
            .par_iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| memo.chi_unchecked(lambda, mu))
                    .collect()
            })
            .collect();
        Self::assemble(degree, partitions, values, Provenance::Computed)
    }

    /// Rebuilds a table from stored values, checking that the partition order
    /// is the canonical one and the array is square.
    pub fn from_values(
        degree: usize,
        partitions: Vec<Partition>,
        values: Vec<Vec<BigInt>>,
        provenance: Provenance,
    ) -> Result<Self> {
        if partitions != enumerate_partitions(degree) {
            return Err(Error::Internal(format!(
                "partition order for degree {degree} is not canonical"
            )));
        }
        let n = partitions.len();
        if values.len() != n || values.iter().any(|row| row.len() != n) {
            return Err(Error::Internal(format!(
                "character table for degree {degree} is not {n}x{n}"
            )));
        }
        Ok(Self::assemble(degree, partitions, values, provenance))
    }

    fn assemble(
        degree: usize,
        partitions: Vec<Partition>,
        values: Vec<Vec<BigInt>>,
        provenance: Provenance,
    ) -> Self {
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Self {
            degree,
            partitions,
            index,
            values,
            provenance,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ_λ(μ)`; `None` if either partition is not of this degree.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        Some(&self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    /// Dimension of the `i`-th irreducible. The identity class `(1^d)` is the
    /// last column.
    pub fn dimension_at(&self, i: usize) -> &BigInt {
        self.values[i].last().expect("non-empty table")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Hook-length formula, independent of the rim-hook recursion.
    fn hook_dimension(lambda: &Partition) -> BigUint {
        let cols = lambda.conjugate();
        let mut hooks = BigUint::one();
        for (i, &row) in lambda.parts().iter().enumerate() {
            for j in 0..row {
                hooks *= BigUint::from(row - j + cols.parts()[j] - i - 1);
            }
        }
        factorial(lambda.weight()) / hooks
    }

    #[test]
    fn rim_hook_removal() {
        let mut got: Vec<_> = remove_rim_hooks(&p("2,2"), 2);
        got.sort();
        // horizontal domino off the bottom row, vertical domino off the right
        assert_eq!(got, vec![(p("1,1"), 1), (p("2"), 0)]);
        assert_eq!(remove_rim_hooks(&p("2,1"), 3), vec![(Partition::empty(), 1)]);
        assert_eq!(remove_rim_hooks(&p("2,2"), 3), vec![(p("1"), 1)]);
        assert_eq!(remove_rim_hooks(&p("3,3"), 5), vec![]);
        for (shape, _) in remove_rim_hooks(&p("4,3,1"), 3) {
            assert_eq!(shape.weight(), 5);
        }
    }

    #[test]
    fn small_table_s3() {
        let memo = CharacterMemo::new();
        assert_eq!(memo.chi(&p("2,1"), &p("3")).unwrap(), BigInt::from(-1));
        assert_eq!(memo.chi(&p("2,1"), &p("2,1")).unwrap(), BigInt::from(0));
        assert_eq!(memo.chi(&p("2,1"), &p("1,1,1")).unwrap(), BigInt::from(2));
        assert_eq!(memo.chi(&p("1,1,1"), &p("2,1")).unwrap(), BigInt::from(-1));
        assert!(matches!(
            memo.chi(&p("2,1"), &p("2")),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn closed_forms() {
        let memo = CharacterMemo::new();
        for d in 2..=9 {
            let standard = Partition::new(vec![d - 1, 1]).unwrap();
            let hook = Partition::transposition(d).unwrap();
            for mu in enumerate_partitions(d) {
                let m1 = mu.multiplicity(1) as i64;
                let sgn: i64 = if mu.l_star() % 2 == 0 { 1 } else { -1 };
                assert_eq!(memo.chi(&Partition::row(d), &mu).unwrap(), BigInt::one());
                assert_eq!(memo.chi(&Partition::column(d), &mu).unwrap(), BigInt::from(sgn));
                assert_eq!(memo.chi(&standard, &mu).unwrap(), BigInt::from(m1 - 1));
                assert_eq!(memo.chi(&hook, &mu).unwrap(), BigInt::from((m1 - 1) * sgn));
            }
        }
    }

    #[test]
    fn dimensions_match_hook_lengths() {
        assert_eq!(dimension(&Partition::row(7)), BigInt::one());
        assert_eq!(dimension(&p("2,1")), BigInt::from(2));
        assert_eq!(dimension(&Partition::column(7)), BigInt::one());
        for d in 1..=11 {
            for lambda in enumerate_partitions(d) {
                assert_eq!(dimension(&lambda), BigInt::from(hook_dimension(&lambda)), "{lambda:?}");
            }
        }
    }

    #[test]
    fn central_character_examples() {
        for d in 3..=9 {
            let id = Partition::column(d);
            let tau = Partition::transposition(d).unwrap();
            for lambda in enumerate_partitions(d) {
                assert!(central_character(&id, &lambda).unwrap().is_one());
                let f = central_character(&tau, &lambda).unwrap();
                assert!(f.is_integer());
                assert_eq!(f.to_integer(), BigInt::from(transposition_content(&lambda).unwrap()));
            }
            let binom = (d * (d - 1) / 2) as i64;
            let second = (d * (d - 3) / 2) as i64;
            assert_eq!(transposition_content(&Partition::row(d)).unwrap(), binom);
            assert_eq!(transposition_content(&Partition::column(d)).unwrap(), -binom);
            assert_eq!(transposition_content(&Partition::new(vec![d - 1, 1]).unwrap()).unwrap(), second);
            assert_eq!(transposition_content(&tau).unwrap(), -second);
            assert_eq!(
                central_character(&tau, &tau).unwrap(),
                BigRational::from_integer(BigInt::from(-second))
            );
        }
        assert_eq!(transposition_content(&p("2,1")).unwrap(), 0);
        assert!(transposition_content(&p("1")).is_err());
    }

    #[test]
    fn content_is_antisymmetric() {
        for d in 2..=10 {
            for lambda in enumerate_partitions(d) {
                assert_eq!(
                    transposition_content(&lambda).unwrap(),
                    -transposition_content(&lambda.conjugate()).unwrap()
                );
            }
        }
    }

    #[test]
    fn table_layout() {
        let memo = CharacterMemo::new();
        let t = CharacterTable::compute(3, &memo);
        let column: Vec<_> = t.values().iter().map(|row| row[0].clone()).collect();
        assert_eq!(column, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(t.dimension_at(1), &BigInt::from(2));
        let one = CharacterTable::compute(1, &memo);
        assert_eq!(one.values(), &[vec![BigInt::one()]]);
        assert_eq!(*t.provenance(), Provenance::Computed);

        let bad = CharacterTable::from_values(3, enumerate_partitions(2), vec![], Provenance::Computed);
        assert!(bad.is_err());
    }

    #[test]
    fn memo_is_shared_across_threads() {
        let memo = CharacterMemo::new();
        let lambdas = enumerate_partitions(8);
        let mu = p("3,2,2,1");
        let values: Vec<BigInt> = lambdas.par_iter().map(|l| memo.chi(l, &mu).unwrap()).collect();
        let fresh = CharacterMemo::new();
        for (l, v) in lambdas.iter().zip(values) {
            assert_eq!(fresh.chi(l, &mu).unwrap(), v);
        }
        assert!(!memo.is_empty());
        let total: BigInt = lambdas.iter().map(|l| memo.dimension(l).pow(2)).sum();
        assert_eq!(total, BigInt::from(factorial(8)));
    }
}
