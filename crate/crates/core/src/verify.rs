//! Runs every identity as an exact finite check and produces one
//! [`VerificationReport`] per (identity, dimension[, evaluation point]).
//!
//! Cells are independent and run in parallel; the report order is fixed by
//! the cell list, so a run is deterministic given its arguments.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::closed_forms::{self, Family, FormulaSet};
use crate::matrix::{DenseMatrix, Scalar};
use crate::q_closed_forms::{self, is_integer_polynomial_matrix};
use crate::qfield::QRationalFunction;
use crate::scalar::{frac, int, is_integral, render_rational, ExactRational};

/// Largest dimension for the `A`/`B` chain, integrality and sum-form checks.
pub const AB_MAX: usize = 12;
/// Upper corner of the von Szily grid.
pub const VON_SZILY_MAX: usize = 12;
/// Default symbolic q-check dimension.
pub const Q_SYMBOLIC_MAX: usize = 6;
/// Default numeric q-check dimension.
pub const Q_NUMERIC_MAX: usize = 12;
/// Largest dimension for the q -> 1 specialization check.
pub const Q_TO_1_MAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "LU_EQ_M")]
    LuEqM,
    #[serde(rename = "L_LINV")]
    LLinv,
    #[serde(rename = "U_UINV")]
    UUinv,
    #[serde(rename = "S_EQ_GMG")]
    SEqGmg,
    #[serde(rename = "LU_ORACLE_MATCH")]
    LuOracleMatch,
    #[serde(rename = "AB_EQ_MINV")]
    AbEqMinv,
    #[serde(rename = "A_AINV")]
    AAinv,
    #[serde(rename = "BINV_B")]
    BinvB,
    #[serde(rename = "BINV_AINV_EQ_M")]
    BinvAinvEqM,
    #[serde(rename = "MINV_INTEGRALITY")]
    MinvIntegrality,
    #[serde(rename = "MINV_SUMFORM")]
    MinvSumform,
    #[serde(rename = "VON_SZILY")]
    VonSzily,
    #[serde(rename = "Q_LU_EQ_M")]
    QLuEqM,
    #[serde(rename = "Q_L_LINV")]
    QLLinv,
    #[serde(rename = "Q_U_UINV")]
    QUUinv,
    #[serde(rename = "Q_A_AINV")]
    QAAinv,
    #[serde(rename = "Q_BINV_B")]
    QBinvB,
    #[serde(rename = "Q_BINV_AINV_EQ_M")]
    QBinvAinvEqM,
    #[serde(rename = "Q_AB_EQ_MINV")]
    QAbEqMinv,
    #[serde(rename = "Q_S_EQ_GMG")]
    QSEqGmg,
    #[serde(rename = "Q_TO_1")]
    QTo1,
}

impl IdentityId {
    pub const CLASSICAL: [IdentityId; 12] = [
        IdentityId::LuEqM,
        IdentityId::LLinv,
        IdentityId::UUinv,
        IdentityId::SEqGmg,
        IdentityId::LuOracleMatch,
        IdentityId::AbEqMinv,
        IdentityId::AAinv,
        IdentityId::BinvB,
        IdentityId::BinvAinvEqM,
        IdentityId::MinvIntegrality,
        IdentityId::MinvSumform,
        IdentityId::VonSzily,
    ];

    /// q-identities checked both symbolically and numerically.
    pub const Q_MATRIX: [IdentityId; 8] = [
        IdentityId::QLuEqM,
        IdentityId::QLLinv,
        IdentityId::QUUinv,
        IdentityId::QAAinv,
        IdentityId::QBinvB,
        IdentityId::QBinvAinvEqM,
        IdentityId::QAbEqMinv,
        IdentityId::QSEqGmg,
    ];

    pub fn tag(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .expect("identity tags are strings")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    ExactClassical,
    SymbolicQ,
    NumericQ { q0: ExactRational, seed: u64 },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::ExactClassical => f.write_str("exact-classical"),
            Mode::SymbolicQ => f.write_str("symbolic-q"),
            Mode::NumericQ { q0, seed } => {
                write!(f, "numeric-q(q0={},seed={seed})", render_rational(q0))
            }
        }
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact-classical" => Ok(Mode::ExactClassical),
            "symbolic-q" => Ok(Mode::SymbolicQ),
            _ => {
                let inner = s
                    .strip_prefix("numeric-q(q0=")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| format!("unknown mode {s:?}"))?;
                let (q0, seed) = inner
                    .split_once(",seed=")
                    .ok_or_else(|| format!("unknown mode {s:?}"))?;
                Ok(Mode::NumericQ {
                    q0: <ExactRational as crate::render::TextScalar>::parse_text(q0)
                        .map_err(|e| e.to_string())?,
                    seed: seed.parse().map_err(|_| format!("bad seed in {s:?}"))?,
                })
            }
        }
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Mode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

/// Exact scalars are carried in their lossless text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstFailure {
    pub i: usize,
    pub j: usize,
    pub expected: String,
    pub actual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub n: usize,
    pub mode: Mode,
    pub outcome: Outcome,
    pub first_failure: Option<FirstFailure>,
}

impl VerificationReport {
    fn pass(identity: IdentityId, n: usize, mode: Mode) -> Self {
        Self {
            identity,
            n,
            mode,
            outcome: Outcome::Pass,
            first_failure: None,
        }
    }

    fn fail(identity: IdentityId, n: usize, mode: Mode, failure: FirstFailure) -> Self {
        Self {
            identity,
            n,
            mode,
            outcome: Outcome::Fail,
            first_failure: Some(failure),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

fn failure(i: usize, j: usize, expected: String, actual: String) -> FirstFailure {
    FirstFailure {
        i,
        j,
        expected,
        actual,
        family: None,
    }
}

/// Compares matrices; `expected` comes first.
fn compare<T: Scalar>(
    identity: IdentityId,
    n: usize,
    mode: Mode,
    expected: &DenseMatrix<T>,
    actual: &DenseMatrix<T>,
) -> VerificationReport {
    match expected.first_mismatch(actual) {
        None => VerificationReport::pass(identity, n, mode),
        Some(mm) => VerificationReport::fail(
            identity,
            n,
            mode,
            failure(mm.row, mm.col, mm.expected.render(), mm.actual.render()),
        ),
    }
}

fn product<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> DenseMatrix<T> {
    a.multiply(b).expect("square factors of equal size")
}

/// Runs `check` over `cells` in parallel, keeping cell order.
fn run_cells<C: Sync>(
    cells: Vec<C>,
    check: impl Fn(&C) -> VerificationReport + Sync + Send,
) -> Vec<VerificationReport> {
    cells.par_iter().map(check).collect()
}

fn classical_cell(id: IdentityId, n: usize, formulas: FormulaSet) -> VerificationReport {
    let mode = Mode::ExactClassical;
    let g = |f: Family| closed_forms::generate(f, n, formulas);
    match id {
        IdentityId::LuEqM => compare(
            id,
            n,
            mode,
            &g(Family::M),
            &product(&g(Family::L), &g(Family::U)),
        ),
        IdentityId::LLinv => compare(
            id,
            n,
            mode,
            &DenseMatrix::identity(n),
            &product(&g(Family::L), &g(Family::Linv)),
        ),
        IdentityId::UUinv => compare(
            id,
            n,
            mode,
            &DenseMatrix::identity(n),
            &product(&g(Family::U), &g(Family::Uinv)),
        ),
        IdentityId::SEqGmg => {
            let s = g(Family::S);
            let gm = g(Family::G);
            let report = compare(
                id,
                n,
                mode.clone(),
                &s,
                &product(&product(&gm, &g(Family::M)), &gm),
            );
            if !report.passed() {
                return report;
            }
            first_non_integer(&s).map_or(report, |(i, j, v)| {
                VerificationReport::fail(id, n, mode, failure(i, j, "integer".into(), v))
            })
        }
        IdentityId::LuOracleMatch => match g(Family::M).lu_doolittle() {
            Err(e) => VerificationReport::fail(
                id,
                n,
                mode,
                failure(0, 0, "nonzero pivots".into(), e.to_string()),
            ),
            Ok(lu) => {
                let l_report = compare(id, n, mode.clone(), &g(Family::L), &lu.l);
                if !l_report.passed() {
                    return l_report;
                }
                compare(id, n, mode, &g(Family::U), &lu.u)
            }
        },
        IdentityId::AbEqMinv => {
            let minv = g(Family::M)
                .invert_gauss_jordan()
                .expect("M is nonsingular");
            compare(id, n, mode, &minv, &product(&g(Family::A), &g(Family::B)))
        }
        IdentityId::AAinv => compare(
            id,
            n,
            mode,
            &DenseMatrix::identity(n),
            &product(&g(Family::A), &g(Family::Ainv)),
        ),
        IdentityId::BinvB => compare(
            id,
            n,
            mode,
            &DenseMatrix::identity(n),
            &product(&g(Family::Binv), &g(Family::B)),
        ),
        IdentityId::BinvAinvEqM => compare(
            id,
            n,
            mode,
            &g(Family::M),
            &product(&g(Family::Binv), &g(Family::Ainv)),
        ),
        IdentityId::MinvIntegrality => {
            let minv = g(Family::M)
                .invert_gauss_jordan()
                .expect("M is nonsingular");
            first_non_integer(&minv).map_or_else(
                || VerificationReport::pass(id, n, mode.clone()),
                |(i, j, v)| {
                    VerificationReport::fail(
                        id,
                        n,
                        mode.clone(),
                        failure(i, j, "integer".into(), v),
                    )
                },
            )
        }
        IdentityId::MinvSumform => {
            let minv = g(Family::M)
                .invert_gauss_jordan()
                .expect("M is nonsingular");
            let sum_form = DenseMatrix::from_fn(n, n, |i, j| {
                BigRational::from_integer(closed_forms::minv_entry_integer_form(n, i, j, formulas))
            });
            compare(id, n, mode, &minv, &sum_form)
        }
        IdentityId::VonSzily => {
            // `n` is the grid corner here
            let s = closed_forms::generate(Family::S, n + 1, formulas);
            let sums = DenseMatrix::from_fn(n + 1, n + 1, |i, j| {
                BigRational::from_integer(closed_forms::von_szily_sum(i, j))
            });
            compare(id, n, mode, &s, &sums)
        }
        other => panic!("{other} is not a classical identity"),
    }
}

fn first_non_integer(m: &DenseMatrix<ExactRational>) -> Option<(usize, usize, String)> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !is_integral(m.get(i, j)))
        .map(|(i, j)| (i, j, render_rational(m.get(i, j))))
}

/// Classical identities: the LU family for `N = 1..=n_max`, the `A`/`B`
/// family for `N = 1..=min(n_max, 12)`, von Szily on the grid
/// `0..=min(n_max, 12)`.
pub fn run_classical_suite(n_max: usize, formulas: FormulaSet) -> Vec<VerificationReport> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let ab_max = n_max.min(AB_MAX);
    let mut cells = Vec::new();
    for id in IdentityId::CLASSICAL {
        match id {
            IdentityId::LuEqM
            | IdentityId::LLinv
            | IdentityId::UUinv
            | IdentityId::SEqGmg
            | IdentityId::LuOracleMatch => cells.extend((1..=n_max).map(|n| (id, n))),
            IdentityId::VonSzily => cells.push((id, n_max.min(VON_SZILY_MAX))),
            _ => cells.extend((1..=ab_max).map(|n| (id, n))),
        }
    }
    run_cells(cells, |&(id, n)| classical_cell(id, n, formulas))
}

/// The eight q-matrix identities over any realization of the q-families.
/// `gen` yields a family at dimension `n`; `extra_s_check` is the extra
/// integer-polynomial requirement on `q-S` (symbolic mode only).
fn q_matrix_cell<T: Scalar>(
    id: IdentityId,
    n: usize,
    mode: Mode,
    gen: impl Fn(Family) -> DenseMatrix<T>,
    extra_s_check: impl Fn(&DenseMatrix<T>) -> Option<FirstFailure>,
) -> VerificationReport {
    let eye = DenseMatrix::identity(n);
    match id {
        IdentityId::QLuEqM => compare(
            id,
            n,
            mode,
            &gen(Family::M),
            &product(&gen(Family::L), &gen(Family::U)),
        ),
        IdentityId::QLLinv => compare(
            id,
            n,
            mode,
            &eye,
            &product(&gen(Family::L), &gen(Family::Linv)),
        ),
        IdentityId::QUUinv => compare(
            id,
            n,
            mode,
            &eye,
            &product(&gen(Family::U), &gen(Family::Uinv)),
        ),
        IdentityId::QAAinv => compare(
            id,
            n,
            mode,
            &eye,
            &product(&gen(Family::A), &gen(Family::Ainv)),
        ),
        IdentityId::QBinvB => compare(
            id,
            n,
            mode,
            &eye,
            &product(&gen(Family::Binv), &gen(Family::B)),
        ),
        IdentityId::QBinvAinvEqM => compare(
            id,
            n,
            mode,
            &gen(Family::M),
            &product(&gen(Family::Binv), &gen(Family::Ainv)),
        ),
        IdentityId::QAbEqMinv => {
            let minv = gen(Family::M)
                .invert_gauss_jordan()
                .expect("q-M is nonsingular");
            compare(
                id,
                n,
                mode,
                &minv,
                &product(&gen(Family::A), &gen(Family::B)),
            )
        }
        IdentityId::QSEqGmg => {
            let s = gen(Family::S);
            let g = gen(Family::G);
            let report = compare(
                id,
                n,
                mode.clone(),
                &s,
                &product(&product(&g, &gen(Family::M)), &g),
            );
            if !report.passed() {
                return report;
            }
            extra_s_check(&s).map_or(report, |f| VerificationReport::fail(id, n, mode, f))
        }
        other => panic!("{other} is not a q-matrix identity"),
    }
}

/// Symbolic q-identities for `N = 1..=n_max`.
pub fn run_q_symbolic_suite(n_max: usize, formulas: FormulaSet) -> Vec<VerificationReport> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let cells: Vec<(IdentityId, usize)> = IdentityId::Q_MATRIX
        .into_iter()
        .flat_map(|id| (1..=n_max).map(move |n| (id, n)))
        .collect();
    run_cells(cells, |&(id, n)| {
        q_matrix_cell(
            id,
            n,
            Mode::SymbolicQ,
            |f| q_closed_forms::qgenerate(f, n, formulas),
            |s: &DenseMatrix<QRationalFunction>| {
                if is_integer_polynomial_matrix(s) {
                    return None;
                }
                let (i, j) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| {
                        let e = s.get(i, j);
                        !(e.is_polynomial() && e.numerator().has_integer_coefficients())
                    })
                    .expect("some entry is not an integer polynomial");
                Some(failure(
                    i,
                    j,
                    "integer polynomial".into(),
                    s.get(i, j).render(),
                ))
            },
        )
    })
}

/// `trials` evaluation points from the seeded stream: `±a/b` with
/// `a, b` uniform in `2..=9`, redrawn when `a == b`.
pub fn sample_q0s(trials: usize, seed: u64) -> Vec<ExactRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    while out.len() < trials {
        let a: i64 = rng.gen_range(2..=9);
        let b: i64 = rng.gen_range(2..=9);
        let negative: bool = rng.gen();
        if a == b {
            continue;
        }
        out.push(if negative { frac(-a, b) } else { frac(a, b) });
    }
    out
}

/// Numeric q-identities for `N = 1..=n_max` at `trials` seeded points.
pub fn run_q_numeric_suite(
    n_max: usize,
    trials: usize,
    seed: u64,
    formulas: FormulaSet,
) -> Vec<VerificationReport> {
    assert!(
        n_max >= 1 && trials >= 1,
        "n_max and trials must be at least 1"
    );
    let points = sample_q0s(trials, seed);
    let cells: Vec<(usize, &ExactRational)> = (1..=n_max)
        .flat_map(|n| points.iter().map(move |q0| (n, q0)))
        .collect();
    // one cell per point runs all identities on a single generation of
    // every family
    let per_point: Vec<Vec<VerificationReport>> = cells
        .par_iter()
        .map(|&(n, q0)| {
            let families: Vec<DenseMatrix<ExactRational>> = Family::ALL
                .iter()
                .map(|&f| q_closed_forms::qgenerate_at(f, n, formulas, q0))
                .collect();
            let lookup = |f: Family| {
                let k = Family::ALL
                    .iter()
                    .position(|&g| g == f)
                    .expect("listed family");
                families[k].clone()
            };
            IdentityId::Q_MATRIX
                .iter()
                .map(|&id| {
                    let mode = Mode::NumericQ {
                        q0: q0.clone(),
                        seed,
                    };
                    q_matrix_cell(id, n, mode, lookup, |_| None)
                })
                .collect()
        })
        .collect();
    (0..IdentityId::Q_MATRIX.len())
        .flat_map(|k| per_point.iter().map(move |reports| reports[k].clone()))
        .collect()
}

/// Every family's reduced q-entries evaluated at `q = 1` against the
/// classical entries, for `N = 1..=n_max`.
pub fn run_q_to_1_suite(n_max: usize, formulas: FormulaSet) -> Vec<VerificationReport> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let id = IdentityId::QTo1;
    run_cells((1..=n_max).collect(), |&n| {
        let one = int(1);
        for family in Family::ALL {
            let q = q_closed_forms::qgenerate(family, n, formulas);
            let c = closed_forms::generate(family, n, formulas);
            for i in 0..n {
                for j in 0..n {
                    let expected = c.get(i, j);
                    let actual = q.get(i, j).evaluate(&one);
                    let bad = match &actual {
                        Ok(v) => v != expected,
                        Err(_) => true,
                    };
                    if bad {
                        let actual = actual.map_or_else(
                            |_| format!("pole: {}", q.get(i, j).render()),
                            |v| render_rational(&v),
                        );
                        let mut f = failure(i, j, render_rational(expected), actual);
                        f.family = Some(family.name().to_string());
                        return VerificationReport::fail(id, n, Mode::SymbolicQ, f);
                    }
                }
            }
        }
        VerificationReport::pass(id, n, Mode::SymbolicQ)
    })
}

/// Symbolic checks up to `n_max_symbolic`, numeric checks up to
/// `n_max_numeric` at `trials` seeded points, and q -> 1 up to
/// `min(8, max(n_max_symbolic, n_max_numeric))`.
pub fn run_q_suite(
    n_max_symbolic: usize,
    n_max_numeric: usize,
    trials: usize,
    seed: u64,
    formulas: FormulaSet,
) -> Vec<VerificationReport> {
    let mut reports = run_q_symbolic_suite(n_max_symbolic, formulas);
    reports.extend(run_q_numeric_suite(n_max_numeric, trials, seed, formulas));
    reports.extend(run_q_to_1_suite(
        Q_TO_1_MAX.min(n_max_symbolic.max(n_max_numeric)),
        formulas,
    ));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_one_passes_everything() {
        let reports = run_classical_suite(1, FormulaSet::Corrected);
        assert!(all_passed(&reports));
        assert_eq!(reports.len(), IdentityId::CLASSICAL.len());
    }

    #[test]
    fn dimension_two_passes() {
        assert!(all_passed(&run_classical_suite(2, FormulaSet::Corrected)));
    }

    #[test]
    fn printed_catalog_failures_carry_coordinates() {
        let reports = run_classical_suite(3, FormulaSet::Printed);
        let bad: Vec<_> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| (r.identity, r.n, r.first_failure.clone().unwrap()))
            .collect();
        let cell = |i, j, e: &str, a: &str| failure(i, j, e.into(), a.into());
        assert_eq!(
            bad,
            vec![
                (IdentityId::UUinv, 3, cell(0, 2, "0", "-3")),
                (IdentityId::MinvSumform, 2, cell(1, 0, "2", "-2")),
                (IdentityId::MinvSumform, 3, cell(1, 0, "-6", "6")),
            ]
        );
    }

    #[test]
    fn symbolic_q_small() {
        let reports = run_q_symbolic_suite(2, FormulaSet::Corrected);
        assert!(all_passed(&reports), "{reports:#?}");
    }

    #[test]
    fn numeric_q_at_two() {
        let q0 = int(2);
        for id in IdentityId::Q_MATRIX {
            let r = q_matrix_cell(
                id,
                3,
                Mode::NumericQ {
                    q0: q0.clone(),
                    seed: 0,
                },
                |f| q_closed_forms::qgenerate_at(f, 3, FormulaSet::Corrected, &q0),
                |_| None,
            );
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn q_to_1_l_entry() {
        let l = q_closed_forms::qgen_l(3);
        assert_eq!(l.get(2, 1).evaluate(&int(1)).unwrap(), frac(4, 3));
        assert!(all_passed(&run_q_to_1_suite(3, FormulaSet::Corrected)));
    }

    #[test]
    fn sampling_is_seeded_and_valid() {
        let a = sample_q0s(50, 7);
        assert_eq!(a, sample_q0s(50, 7));
        assert_ne!(a, sample_q0s(50, 8));
        for q in &a {
            assert!(q.numer() != q.denom() && *q.numer() != -q.denom());
            assert!(*q != int(0));
        }
    }

    #[test]
    fn report_json_shape() {
        let r = VerificationReport::pass(IdentityId::QTo1, 3, Mode::SymbolicQ);
        assert_eq!(
            r.to_json_line(),
            r#"{"identity":"Q_TO_1","n":3,"mode":"symbolic-q","outcome":"pass","first_failure":null}"#
        );
        let f = VerificationReport::fail(
            IdentityId::UUinv,
            3,
            Mode::NumericQ {
                q0: frac(-3, 7),
                seed: 42,
            },
            failure(1, 2, "0".into(), "-4".into()),
        );
        let line = f.to_json_line();
        assert_eq!(
            line,
            r#"{"identity":"U_UINV","n":3,"mode":"numeric-q(q0=-3/7,seed=42)","outcome":"fail","first_failure":{"i":1,"j":2,"expected":"0","actual":"-4"}}"#
        );
        let back: VerificationReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn identity_tags() {
        assert_eq!(IdentityId::BinvAinvEqM.tag(), "BINV_AINV_EQ_M");
        assert_eq!(IdentityId::QSEqGmg.tag(), "Q_S_EQ_GMG");
        assert_eq!(IdentityId::LuOracleMatch.tag(), "LU_ORACLE_MATCH");
    }
}
