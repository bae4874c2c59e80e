//! Spectral coefficients of Hurwitz numbers.
//!
//! For fixed `d` and profiles, every Hurwitz number with `k` simple branch
//! points has the form
//!
//! ```text
//! (2 / d!^2) Π (d! / z_{μ^(i)}) Σ_{1 <= m <= C(d,2)} coeff(m) m^k
//! ```
//!
//! with `k` in a fixed parity class. The disconnected coefficients `b*` are
//! read off the character table; the connected coefficients `b` are solved
//! from connected values at consecutive genera (a Vandermonde system in `m²`
//! after pulling out `m^{q_0}`), then checked against two further genera.

use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cache::TableStore;
use crate::character::{factorial, transposition_content};
use crate::error::{Error, Result};
use crate::hurwitz::{genus_to_transpositions, HurwitzSolver};
use crate::linalg;
use crate::partition::{Partition, ProfileSet};
use crate::rational::{exact_string, pow_i64, to_exact_string};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Disconnected,
    Connected,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Disconnected => "disconnected",
            Flavor::Connected => "connected",
        })
    }
}

/// Parity class of the transposition count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The class in which `k + Σ l*(μ^(i))` is even, the only one where the
    /// numbers can be nonzero.
    pub fn admissible(profiles: &ProfileSet) -> Self {
        Self::of(profiles.total_l_star())
    }

    fn matches(self, k: usize) -> bool {
        Self::of(k) == self
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

pub fn max_eigenvalue(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// `C(d-1, 2)`.
pub fn second_eigenvalue(d: usize) -> usize {
    max_eigenvalue(d.saturating_sub(1))
}

/// `d(d-3)/2`, the eigenvalue of `(d-1,1)`.
pub fn third_eigenvalue(d: usize) -> usize {
    (d * d.saturating_sub(3)) / 2
}

/// `(d!^2 / 2) Π (z_{μ^(i)} / d!)`, which turns a Hurwitz number into
/// `Σ coeff(m) m^k`.
pub fn normalization(profiles: &ProfileSet) -> BigRational {
    let d_fact = BigRational::from_integer(BigInt::from(factorial(profiles.degree())));
    let mut n = &d_fact * &d_fact / BigRational::from_integer(BigInt::from(2));
    for mu in profiles.profiles() {
        n *= BigRational::from_integer(BigInt::from(mu.z_order())) / &d_fact;
    }
    n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralDecomposition {
    profiles: ProfileSet,
    flavor: Flavor,
    parity: Parity,
    /// `coefficients[m - 1]` for `1 <= m <= C(d,2)`.
    coefficients: Vec<BigRational>,
}

impl SpectralDecomposition {
    pub fn degree(&self) -> usize {
        self.profiles.degree()
    }

    pub fn profiles(&self) -> &ProfileSet {
        &self.profiles
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn max_eigenvalue(&self) -> usize {
        self.coefficients.len()
    }

    /// Zero outside `[1, C(d,2)]`.
    pub fn coefficient(&self, m: usize) -> BigRational {
        match m.checked_sub(1).and_then(|i| self.coefficients.get(i)) {
            Some(c) => c.clone(),
            None => BigRational::zero(),
        }
    }

    /// Nonzero coefficients, largest `m` first.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coefficients
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
    }

    /// `Σ_m coeff(m) m^exponent`.
    pub fn power_sum(&self, exponent: usize) -> BigRational {
        self.nonzero()
            .map(|(m, c)| c * BigRational::from_integer(num_traits::pow(BigInt::from(m), exponent)))
            .sum()
    }

    /// The Hurwitz number this decomposition predicts for `exponent`
    /// transpositions. `None` when `exponent` is outside the parity class or
    /// zero (where the dropped `m = 0` terms would matter).
    pub fn reconstruct(&self, exponent: usize) -> Option<BigRational> {
        if exponent == 0 || !self.parity.matches(exponent) {
            return None;
        }
        Some(self.power_sum(exponent) / normalization(&self.profiles))
    }
}

fn require_degree(d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            reason: format!("need d >= {min}"),
        });
    }
    Ok(())
}

/// `b*(m) = ½ Σ_{|f(λ)| = m} dim(λ)² sgn(f(λ))^k Π χ_λ(μ^(i)) / dim λ` with
/// `k` in `parity`; `λ` with `f(λ) = 0` are dropped.
pub fn disconnected_spectrum(
    store: &TableStore,
    profiles: &ProfileSet,
    parity: Parity,
) -> Result<SpectralDecomposition> {
    let d = profiles.degree();
    require_degree(d, 2)?;
    let table = store.table(d)?;
    let cols: Vec<usize> = profiles
        .profiles()
        .iter()
        .map(|mu| table.index_of(mu).expect("profile of degree d"))
        .collect();
    let mut coefficients = vec![BigRational::zero(); max_eigenvalue(d)];
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (i, (lambda, row)) in table.partitions().iter().zip(table.values()).enumerate() {
        let f = transposition_content(lambda)?;
        if f == 0 {
            continue;
        }
        let dim = BigRational::from_integer(table.dimension_at(i).clone());
        let mut term = &half * &dim * &dim;
        if f < 0 && parity == Parity::Odd {
            term = -term;
        }
        for &col in &cols {
            term *= BigRational::from_integer(row[col].clone()) / &dim;
        }
        coefficients[f.unsigned_abs() as usize - 1] += term;
    }
    Ok(SpectralDecomposition {
        profiles: profiles.clone(),
        flavor: Flavor::Disconnected,
        parity,
        coefficients,
    })
}

/// Smallest genus whose transposition count is at least 1.
fn first_genus(profiles: &ProfileSet) -> usize {
    (0..)
        .find(|&g| genus_to_transpositions(profiles, g).is_ok_and(|q| q >= 1))
        .expect("q grows with g")
}

/// Genera used by [`connected_spectrum`]: the solve window followed by the
/// two held-out genera used for its self-check.
pub fn solve_genera(profiles: &ProfileSet) -> (std::ops::Range<usize>, [usize; 2]) {
    let g0 = first_genus(profiles);
    let m = max_eigenvalue(profiles.degree());
    (g0..g0 + m, [g0 + m, g0 + m + 1])
}

/// Connected coefficients `b(m)` from the exact `C(d,2) x C(d,2)` system
/// `Σ_m b(m) m^{q_j} = N · H_{g_j}`.
pub fn connected_spectrum(solver: &HurwitzSolver, profiles: &ProfileSet) -> Result<SpectralDecomposition> {
    let d = profiles.degree();
    require_degree(d, 2)?;
    let norm = normalization(profiles);
    let (window, held_out) = solve_genera(profiles);
    let exponents: Vec<usize> = window
        .clone()
        .map(|g| genus_to_transpositions(profiles, g))
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<BigInt>> = exponents
        .iter()
        .map(|&q| (1..=max_eigenvalue(d)).map(|m| num_traits::pow(BigInt::from(m), q)).collect())
        .collect();
    let rhs: Vec<BigRational> = exponents
        .iter()
        .map(|&q| Ok(solver.connected_with_transpositions(profiles, q)? * &norm))
        .collect::<Result<_>>()?;
    let coefficients = linalg::solve(&matrix, &rhs)?;
    let spectrum = SpectralDecomposition {
        profiles: profiles.clone(),
        flavor: Flavor::Connected,
        parity: Parity::admissible(profiles),
        coefficients,
    };
    for g in held_out {
        let q = genus_to_transpositions(profiles, g)?;
        let direct = solver.connected_with_transpositions(profiles, q)?;
        if spectrum.reconstruct(q) != Some(direct) {
            return Err(Error::Internal(format!(
                "connected spectrum for ({profiles}) fails to reproduce genus {g}"
            )));
        }
    }
    Ok(spectrum)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueCheck {
    pub m: usize,
    #[serde(with = "exact_string")]
    pub expected: BigRational,
    #[serde(with = "exact_string")]
    pub computed: BigRational,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementCheck {
    pub flavor: Flavor,
    pub statement: u8,
    pub claim: String,
    pub checks: Vec<ValueCheck>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub degree: usize,
    pub profiles: Vec<Partition>,
    pub statements: Vec<StatementCheck>,
    pub pass: bool,
}

impl TheoremReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn statement(
    spectrum: &SpectralDecomposition,
    number: u8,
    claim: String,
    expected: impl IntoIterator<Item = (usize, BigRational)>,
) -> StatementCheck {
    let checks: Vec<ValueCheck> = expected
        .into_iter()
        .map(|(m, expected)| {
            let computed = spectrum.coefficient(m);
            ValueCheck {
                m,
                pass: computed == expected,
                expected,
                computed,
            }
        })
        .collect();
    StatementCheck {
        flavor: spectrum.flavor,
        statement: number,
        claim,
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

/// `d^{2-s} Π m_1(μ^(i))` and `(d-1)^{2-s} Π (m_1(μ^(i)) - 1)`.
fn fixed_point_factors(profiles: &ProfileSet) -> (BigRational, BigRational) {
    let d = profiles.degree() as i64;
    let s = profiles.len() as i64;
    let m1: Vec<i64> = profiles.profiles().iter().map(|mu| mu.multiplicity(1) as i64).collect();
    let second = pow_i64(d, 2 - s) * BigRational::from_integer(BigInt::from(m1.iter().product::<i64>()));
    let third = pow_i64(d - 1, 2 - s)
        * BigRational::from_integer(BigInt::from(m1.iter().map(|x| x - 1).product::<i64>()));
    (second, third)
}

fn check_hypothesis(d: usize) -> Result<()> {
    if d < 5 {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            reason: "the structure statements are only claimed for d >= 5".into(),
        });
    }
    Ok(())
}

fn lemma_statements(lemma: &SpectralDecomposition) -> Vec<StatementCheck> {
    let d = lemma.degree();
    let top = max_eigenvalue(d);
    let third = third_eigenvalue(d);
    let (_, third_coeff) = fixed_point_factors(lemma.profiles());
    vec![
        statement(lemma, 1, format!("b*({top}) = 1"), [(top, BigRational::one())]),
        statement(
            lemma,
            2,
            format!("b*(m) = 0 for {third} < m < {top}"),
            (third + 1..top).map(|m| (m, BigRational::zero())),
        ),
        statement(
            lemma,
            3,
            format!("b*({third}) = (d-1)^(2-s) prod(m1 - 1)"),
            [(third, third_coeff)],
        ),
    ]
}

fn theorem_statements(theorem: &SpectralDecomposition) -> Vec<StatementCheck> {
    let d = theorem.degree();
    let top = max_eigenvalue(d);
    let second = second_eigenvalue(d);
    let third = third_eigenvalue(d);
    let (second_coeff, third_coeff) = fixed_point_factors(theorem.profiles());
    vec![
        statement(theorem, 1, format!("b({top}) = 1"), [(top, BigRational::one())]),
        statement(
            theorem,
            2,
            format!("b(m) = 0 for {second} < m < {top}"),
            (second + 1..top).map(|m| (m, BigRational::zero())),
        ),
        statement(
            theorem,
            3,
            format!("b({second}) = -d^(2-s) prod(m1)"),
            [(second, -second_coeff)],
        ),
        statement(
            theorem,
            4,
            format!("b({third}) = (d-1)^(2-s) prod(m1 - 1)"),
            [(third, third_coeff)],
        ),
    ]
}

fn report(profiles: &ProfileSet, statements: Vec<StatementCheck>) -> TheoremReport {
    TheoremReport {
        degree: profiles.degree(),
        profiles: profiles.profiles().to_vec(),
        pass: statements.iter().all(|s| s.pass),
        statements,
    }
}

/// Checks the disconnected coefficient statements only.
pub fn verify_lemma(store: &TableStore, profiles: &ProfileSet) -> Result<TheoremReport> {
    check_hypothesis(profiles.degree())?;
    let lemma = disconnected_spectrum(store, profiles, Parity::admissible(profiles))?;
    Ok(report(profiles, lemma_statements(&lemma)))
}

/// Checks the coefficient statements for both flavors.
pub fn verify_theorem(solver: &HurwitzSolver, profiles: &ProfileSet) -> Result<TheoremReport> {
    check_hypothesis(profiles.degree())?;
    let lemma = disconnected_spectrum(solver.store(), profiles, Parity::admissible(profiles))?;
    let theorem = connected_spectrum(solver, profiles)?;
    let mut statements = lemma_statements(&lemma);
    statements.extend(theorem_statements(&theorem));
    Ok(report(profiles, statements))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub degree: usize,
    pub profiles: Vec<Partition>,
    pub flavor: Flavor,
    pub parity: Parity,
    pub max_eigenvalue: usize,
    /// Nonzero coefficients keyed by `m`, largest first.
    pub coefficients: IndexMap<String, String>,
}

impl SpectrumReport {
    pub fn new(spectrum: &SpectralDecomposition) -> Self {
        Self {
            degree: spectrum.degree(),
            profiles: spectrum.profiles.profiles().to_vec(),
            flavor: spectrum.flavor,
            parity: spectrum.parity,
            max_eigenvalue: spectrum.max_eigenvalue(),
            coefficients: spectrum
                .nonzero()
                .map(|(m, c)| (m.to_string(), to_exact_string(c)))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The three retained terms
/// `C(d,2)^q - d^{2-s} Π m_1 C(d-1,2)^q + (d-1)^{2-s} Π (m_1 - 1) (d(d-3)/2)^q`.
pub fn leading_terms(profiles: &ProfileSet, q: usize) -> BigRational {
    let d = profiles.degree();
    let (second_coeff, third_coeff) = fixed_point_factors(profiles);
    let p = |m: usize| BigRational::from_integer(num_traits::pow(BigInt::from(m), q));
    p(max_eigenvalue(d)) - second_coeff * p(second_eigenvalue(d)) + third_coeff * p(third_eigenvalue(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticReport {
    pub degree: usize,
    pub profiles: Vec<Partition>,
    pub genus: usize,
    pub transpositions: usize,
    /// `|N·H - leading terms| / (d(d-3)/2)^q`.
    #[serde(with = "exact_string")]
    pub error: BigRational,
    /// `Σ_{m < d(d-3)/2} |b(m)| ((d(d-3)/2 - 1) / (d(d-3)/2))^q`.
    #[serde(with = "exact_string")]
    pub bound: BigRational,
}

/// Relative remainder after the three leading terms, computed from the
/// connected number itself.
pub fn asymptotic_error(solver: &HurwitzSolver, profiles: &ProfileSet, g: usize) -> Result<BigRational> {
    check_hypothesis(profiles.degree())?;
    let q = genus_to_transpositions(profiles, g)?;
    let normalized = solver.connected_with_transpositions(profiles, q)? * normalization(profiles);
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(third_eigenvalue(profiles.degree())), q));
    Ok((normalized - leading_terms(profiles, q)).abs() / scale)
}

/// Upper bound on the relative remainder from the sub-leading coefficients.
pub fn remainder_bound(spectrum: &SpectralDecomposition, q: usize) -> BigRational {
    let third = third_eigenvalue(spectrum.degree());
    let ratio = BigRational::new(BigInt::from(third - 1), BigInt::from(third));
    let mass: BigRational = (1..third).map(|m| spectrum.coefficient(m).abs()).sum();
    mass * num_traits::pow(ratio, q)
}

pub fn asymptotic_report(
    solver: &HurwitzSolver,
    spectrum: &SpectralDecomposition,
    g: usize,
) -> Result<AsymptoticReport> {
    let profiles = spectrum.profiles();
    let q = genus_to_transpositions(profiles, g)?;
    Ok(AsymptoticReport {
        degree: profiles.degree(),
        profiles: profiles.profiles().to_vec(),
        genus: g,
        transpositions: q,
        error: asymptotic_error(solver, profiles, g)?,
        bound: remainder_bound(spectrum, q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::disconnected;
    use crate::partition::enumerate_partitions;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn set(d: usize, s: &str) -> ProfileSet {
        ProfileSet::parse(d, s).unwrap()
    }

    #[test]
    fn eigenvalue_landmarks() {
        assert_eq!(max_eigenvalue(5), 10);
        assert_eq!(second_eigenvalue(5), 6);
        assert_eq!(third_eigenvalue(5), 5);
        for d in 3..20 {
            assert_eq!(second_eigenvalue(d), third_eigenvalue(d) + 1);
        }
    }

    #[test]
    fn disconnected_d5_examples() {
        let store = TableStore::in_memory();
        let b = disconnected_spectrum(&store, &set(5, ""), Parity::Even).unwrap();
        assert_eq!(b.coefficient(10), int(1));
        assert_eq!(b.coefficient(5), int(16));
        for m in 6..=9 {
            assert!(b.coefficient(m).is_zero());
        }
        assert!(b.coefficient(0).is_zero() && b.coefficient(11).is_zero());
    }

    #[test]
    fn odd_class_is_zero() {
        let store = TableStore::in_memory();
        for d in 2..=7 {
            for mu in enumerate_partitions(d) {
                let profiles = ProfileSet::new(d, vec![mu.clone()]).unwrap();
                let wrong = match Parity::admissible(&profiles) {
                    Parity::Even => Parity::Odd,
                    Parity::Odd => Parity::Even,
                };
                let b = disconnected_spectrum(&store, &profiles, wrong).unwrap();
                assert_eq!(b.nonzero().count(), 0, "{mu:?}");
            }
        }
    }

    #[test]
    fn disconnected_reconstruction() {
        let store = TableStore::in_memory();
        for d in 2..=6 {
            let mut sets = vec![ProfileSet::bare(d)];
            sets.extend(enumerate_partitions(d).into_iter().map(|mu| ProfileSet::new(d, vec![mu]).unwrap()));
            for profiles in sets {
                let parity = Parity::admissible(&profiles);
                let b = disconnected_spectrum(&store, &profiles, parity).unwrap();
                for k in (1..=12).filter(|&k| parity.matches(k)) {
                    assert_eq!(
                        b.reconstruct(k).unwrap(),
                        disconnected(&store, &profiles, k).unwrap(),
                        "{profiles} k={k}"
                    );
                }
                assert!(b.reconstruct(0).is_none());
            }
        }
    }

    #[test]
    fn connected_d5_examples() {
        let solver = HurwitzSolver::in_memory();
        let b = connected_spectrum(&solver, &set(5, "")).unwrap();
        assert_eq!(b.coefficient(10), int(1));
        for m in 7..=9 {
            assert!(b.coefficient(m).is_zero());
        }
        assert_eq!(b.coefficient(6), int(-25));
        assert_eq!(b.coefficient(5), int(16));

        let b = connected_spectrum(&solver, &set(5, "5")).unwrap();
        assert!(b.coefficient(6).is_zero());
        assert_eq!(b.coefficient(5), int(-4));
    }

    #[test]
    fn connected_d6_transposition_pair_profile() {
        let solver = HurwitzSolver::in_memory();
        let b = connected_spectrum(&solver, &set(6, "2,2,1,1")).unwrap();
        assert_eq!(b.coefficient(10), int(-12));
    }

    #[test]
    fn normalization_matches_leading_coefficient() {
        // b(C(d,2)) = 1 means H ~ C(d,2)^q / N
        assert_eq!(normalization(&set(3, "")), int(18));
        assert_eq!(normalization(&set(3, "3")), int(9));
    }

    #[test]
    fn small_degree_is_rejected_by_verification() {
        let solver = HurwitzSolver::in_memory();
        assert!(matches!(
            verify_theorem(&solver, &set(4, "")),
            Err(Error::DegreeOutOfRange { degree: 4, .. })
        ));
        assert!(asymptotic_error(&solver, &set(4, ""), 3).is_err());
        assert!(disconnected_spectrum(solver.store(), &set(1, ""), Parity::Even).is_err());
    }

    #[test]
    fn verify_d5_and_d6_single_cycle() {
        let solver = HurwitzSolver::in_memory();
        let report = verify_theorem(&solver, &set(5, "")).unwrap();
        assert!(report.pass, "{}", report.to_json());
        assert_eq!(report.statements.len(), 7);

        let report = verify_theorem(&solver, &set(6, "6")).unwrap();
        assert!(report.pass);
        let s3 = report
            .statements
            .iter()
            .find(|s| s.flavor == Flavor::Connected && s.statement == 3)
            .unwrap();
        assert_eq!(s3.checks[0].m, 10);
        assert!(s3.checks[0].computed.is_zero());
    }

    #[test]
    fn asymptotic_error_is_the_subleading_tail() {
        let solver = HurwitzSolver::in_memory();
        let profiles = set(5, "");
        let b = connected_spectrum(&solver, &profiles).unwrap();
        for g in [0, 3, 9] {
            let q = genus_to_transpositions(&profiles, g).unwrap();
            let tail: BigRational = (1..=4)
                .map(|m| b.coefficient(m) * BigRational::from_integer(num_traits::pow(BigInt::from(m), q)))
                .sum();
            let expected = tail.abs() / BigRational::from_integer(num_traits::pow(BigInt::from(5), q));
            assert_eq!(asymptotic_error(&solver, &profiles, g).unwrap(), expected);
        }
    }

    #[test]
    fn report_json_roundtrip() {
        let solver = HurwitzSolver::in_memory();
        let report = verify_theorem(&solver, &set(5, "3,1,1")).unwrap();
        let json = report.to_json();
        let back: TheoremReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), json);

        let spectrum = SpectrumReport::new(&connected_spectrum(&solver, &set(5, "")).unwrap());
        let json = spectrum.to_json();
        assert_eq!(serde_json::from_str::<SpectrumReport>(&json).unwrap().to_json(), json);
        let keys: Vec<&String> = spectrum.coefficients.keys().take(3).collect();
        assert_eq!(keys, ["10", "6", "5"]);
    }
}
