//! Disconnected and connected Hurwitz numbers of the sphere.
//!
//! A query fixes a degree `d`, profiles `μ^(1..s)` and a number `k` of simple
//! (transposition) branch points. The disconnected number `H*` comes from the
//! Frobenius character sum. The connected number `H` is obtained by inverting
//! the orbit-of-a-point recursion on labeled tuple counts
//!
//! ```text
//! T*(d, μ, k) = Σ_{d1, ν ⊆ μ, k1} C(d-1, d1-1) C(k, k1) T(d1, ν, k1) T*(d-d1, μ∖ν, k-k1)
//! ```
//!
//! where `T* = d!·H*` counts all tuples and `T = d!·H` the transitive ones.
//! The `d1 = d` term is `T` itself, so each `T` is `T*` minus the strictly
//! smaller orbits.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cache::TableStore;
use crate::character::{content_sum, factorial};
use crate::error::{Error, Result};
use crate::partition::{Partition, ProfileSet};

/// Number of labeled permutation tuples `(α_1..α_s, τ_1..τ_k)` with the given
/// cycle types, product the identity, optionally restricted to transitive
/// tuples. Equals `d!` times the matching Hurwitz number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleCount(pub BigInt);

impl TupleCount {
    pub fn to_hurwitz(&self, degree: usize) -> BigRational {
        BigRational::new(self.0.clone(), BigInt::from(factorial(degree)))
    }
}

/// A fully specified Hurwitz number request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzQuery {
    pub profiles: ProfileSet,
    pub transpositions: usize,
    /// Set for connected queries built from a genus.
    pub genus: Option<usize>,
}

impl HurwitzQuery {
    pub fn with_transpositions(profiles: ProfileSet, k: usize) -> Self {
        Self {
            profiles,
            transpositions: k,
            genus: None,
        }
    }

    pub fn with_genus(profiles: ProfileSet, g: usize) -> Result<Self> {
        let k = genus_to_transpositions(&profiles, g)?;
        Ok(Self {
            profiles,
            transpositions: k,
            genus: Some(g),
        })
    }

    pub fn degree(&self) -> usize {
        self.profiles.degree()
    }
}

/// Riemann–Hurwitz: `q = 2g + 2d - Σ l*(μ^(i)) - 2`.
pub fn genus_to_transpositions(profiles: &ProfileSet, g: usize) -> Result<usize> {
    let value = 2 * g as i64 + 2 * profiles.degree() as i64 - profiles.total_l_star() as i64 - 2;
    usize::try_from(value).map_err(|_| Error::NegativeTranspositionCount { value })
}

/// Inverse of [`genus_to_transpositions`]; `None` when `k` corresponds to no
/// nonnegative integer genus.
pub fn transpositions_to_genus(profiles: &ProfileSet, k: usize) -> Option<usize> {
    let twice = k as i64 + profiles.total_l_star() as i64 + 2 - 2 * profiles.degree() as i64;
    (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
}

pub(crate) fn parity_obstructed(profiles: &ProfileSet, k: usize) -> bool {
    (k + profiles.total_l_star()) % 2 == 1
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Direct Frobenius evaluation
/// `H* = Σ_λ (d!/dim λ)^{s-2} f_τ(λ)^k Π χ_λ(μ^(i)) / z_{μ^(i)}`,
/// with `f_τ` taken from the character table as a central character.
pub fn disconnected(store: &TableStore, profiles: &ProfileSet, k: usize) -> Result<BigRational> {
    let d = profiles.degree();
    if d == 0 {
        return Err(Error::DegreeOutOfRange {
            degree: 0,
            reason: "degree must be positive".into(),
        });
    }
    if parity_obstructed(profiles, k) {
        return Ok(BigRational::zero());
    }
    if d == 1 {
        // S(1) is trivial and has no transpositions.
        return Ok(if k == 0 { BigRational::one() } else { BigRational::zero() });
    }
    let table = store.table(d)?;
    let d_fact = BigInt::from(factorial(d));
    let tau = Partition::transposition(d)?;
    let tau_col = table.index_of(&tau).expect("transposition class present");
    let tau_class = BigRational::new(d_fact.clone(), BigInt::from(tau.z_order()));
    let cols: Vec<(usize, BigInt)> = profiles
        .profiles()
        .iter()
        .map(|mu| (table.index_of(mu).expect("profile of degree d"), BigInt::from(mu.z_order())))
        .collect();
    let s = profiles.len() as i32;

    let mut total = BigRational::zero();
    for (i, row) in table.values().iter().enumerate() {
        let dim = table.dimension_at(i);
        let f = &tau_class * BigRational::new(row[tau_col].clone(), dim.clone());
        let mut term = pow_signed(&BigRational::new(d_fact.clone(), dim.clone()), s - 2) * pow(&f, k);
        for (col, z) in &cols {
            term *= BigRational::new(row[*col].clone(), z.clone());
        }
        total += term;
    }
    Ok(total)
}

fn pow(base: &BigRational, exp: usize) -> BigRational {
    num_traits::pow(base.clone(), exp)
}

fn pow_signed(base: &BigRational, exp: i32) -> BigRational {
    if exp >= 0 {
        pow(base, exp as usize)
    } else {
        pow(&base.recip(), (-exp) as usize)
    }
}

/// The disconnected number as an exponential sum over the signed eigenvalues
/// `e = f_τ(λ)` of the transposition class sum: `H*(k) = Σ_e c(e) e^k`
/// for every `k >= 0` (with `0^0 = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisconnectedSeries {
    profiles: ProfileSet,
    weights: BTreeMap<i64, BigRational>,
}

impl DisconnectedSeries {
    pub fn build(store: &TableStore, profiles: &ProfileSet) -> Result<Self> {
        let d = profiles.degree();
        let table = store.table(d)?;
        let d_fact = BigRational::from_integer(BigInt::from(factorial(d)));
        let cols: Vec<(usize, BigRational)> = profiles
            .profiles()
            .iter()
            .map(|mu| {
                (
                    table.index_of(mu).expect("profile of degree d"),
                    BigRational::from_integer(BigInt::from(mu.z_order())),
                )
            })
            .collect();
        let s = profiles.len() as i32;

        let mut weights: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (i, (lambda, row)) in table.partitions().iter().zip(table.values()).enumerate() {
            let dim = BigRational::from_integer(table.dimension_at(i).clone());
            let mut w = pow_signed(&(&dim / &d_fact), 2 - s);
            for (col, z) in &cols {
                w *= BigRational::from_integer(row[*col].clone()) / z;
            }
            *weights.entry(content_sum(lambda)).or_insert_with(BigRational::zero) += w;
        }
        weights.retain(|_, w| !w.is_zero());
        Ok(Self {
            profiles: profiles.clone(),
            weights,
        })
    }

    pub fn profiles(&self) -> &ProfileSet {
        &self.profiles
    }

    /// Nonzero `c(e)` keyed by signed eigenvalue.
    pub fn weights(&self) -> &BTreeMap<i64, BigRational> {
        &self.weights
    }

    pub fn evaluate(&self, k: usize) -> BigRational {
        self.weights
            .iter()
            .map(|(&e, c)| c * BigRational::from_integer(num_traits::pow(BigInt::from(e), k)))
            .sum()
    }
}

type CountKey = (ProfileSet, usize);

/// Connected and disconnected evaluator with memoized tuple counts. Shares
/// the character tables of its [`TableStore`].
pub struct HurwitzSolver {
    store: Arc<TableStore>,
    series: RwLock<HashMap<ProfileSet, Arc<DisconnectedSeries>>>,
    all_counts: RwLock<HashMap<CountKey, BigInt>>,
    connected_counts: RwLock<HashMap<CountKey, BigInt>>,
}

impl HurwitzSolver {
    pub fn new(store: Arc<TableStore>) -> Self {
        Self {
            store,
            series: RwLock::new(HashMap::new()),
            all_counts: RwLock::new(HashMap::new()),
            connected_counts: RwLock::new(HashMap::new()),
        }
    }

    pub fn in_memory() -> Self {
        Self::new(Arc::new(TableStore::in_memory()))
    }

    pub fn store(&self) -> &TableStore {
        &self.store
    }

    pub fn series(&self, profiles: &ProfileSet) -> Result<Arc<DisconnectedSeries>> {
        if let Some(s) = self.series.read().unwrap().get(profiles) {
            return Ok(Arc::clone(s));
        }
        let built = Arc::new(DisconnectedSeries::build(&self.store, profiles)?);
        let mut map = self.series.write().unwrap();
        Ok(Arc::clone(map.entry(profiles.clone()).or_insert(built)))
    }

    /// `T*(d, μ, k)`, all tuples.
    pub fn disconnected_count(&self, profiles: &ProfileSet, k: usize) -> Result<TupleCount> {
        self.all_count(profiles, k).map(TupleCount)
    }

    fn all_count(&self, profiles: &ProfileSet, k: usize) -> Result<BigInt> {
        if parity_obstructed(profiles, k) {
            return Ok(BigInt::zero());
        }
        let key = (profiles.clone(), k);
        if let Some(v) = self.all_counts.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let h = self.series(profiles)?.evaluate(k);
        let count = h * BigRational::from_integer(BigInt::from(factorial(profiles.degree())));
        if !count.is_integer() {
            return Err(Error::Internal(format!(
                "tuple count for ({profiles}, k={k}) is not an integer: {count}"
            )));
        }
        let count = count.to_integer();
        self.all_counts.write().unwrap().insert(key, count.clone());
        Ok(count)
    }

    /// `T(d, μ, k)`, transitive tuples only.
    pub fn connected_count(&self, profiles: &ProfileSet, k: usize) -> Result<TupleCount> {
        self.transitive_count(profiles, k).map(TupleCount)
    }

    fn transitive_count(&self, profiles: &ProfileSet, k: usize) -> Result<BigInt> {
        let d = profiles.degree();
        if d == 0 || parity_obstructed(profiles, k) {
            return Ok(BigInt::zero());
        }
        let key = (profiles.clone(), k);
        if let Some(v) = self.connected_counts.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let mut count = self.all_count(profiles, k)?;
        for d1 in 1..d {
            let orbit_choices = binomial(d - 1, d1 - 1);
            for (inner, outer) in profiles.splits(d1) {
                for k1 in 0..=k {
                    if parity_obstructed(&inner, k1) || parity_obstructed(&outer, k - k1) {
                        continue;
                    }
                    let rest = self.all_count(&outer, k - k1)?;
                    if rest.is_zero() {
                        continue;
                    }
                    let orbit = self.transitive_count(&inner, k1)?;
                    if orbit.is_zero() {
                        continue;
                    }
                    count -= &orbit_choices * binomial(k, k1) * orbit * rest;
                }
            }
        }
        if count.is_negative() {
            return Err(Error::Internal(format!(
                "negative transitive count for ({profiles}, k={k})"
            )));
        }
        self.connected_counts.write().unwrap().insert(key, count.clone());
        Ok(count)
    }

    /// `H*_d(μ, k transpositions)` from the spectral series.
    pub fn disconnected(&self, profiles: &ProfileSet, k: usize) -> Result<BigRational> {
        Ok(self.disconnected_count(profiles, k)?.to_hurwitz(profiles.degree()))
    }

    /// Connected number with `k` simple branch points.
    pub fn connected_with_transpositions(&self, profiles: &ProfileSet, k: usize) -> Result<BigRational> {
        Ok(self.connected_count(profiles, k)?.to_hurwitz(profiles.degree()))
    }

    /// `H_{g,d}(μ^(1..s), q transpositions)` with `q` from Riemann–Hurwitz.
    pub fn connected(&self, profiles: &ProfileSet, g: usize) -> Result<BigRational> {
        if profiles.degree() == 0 {
            return Err(Error::DegreeOutOfRange {
                degree: 0,
                reason: "degree must be positive".into(),
            });
        }
        let q = genus_to_transpositions(profiles, g)?;
        self.connected_with_transpositions(profiles, q)
    }

    pub fn connected_query(&self, query: &HurwitzQuery) -> Result<BigRational> {
        self.connected_with_transpositions(&query.profiles, query.transpositions)
    }

    pub fn disconnected_query(&self, query: &HurwitzQuery) -> Result<BigRational> {
        self.disconnected(&query.profiles, query.transpositions)
    }
}
