//! Identity verification over parameter grids.
//!
//! Every check compares a closed form against direct evaluation (or against
//! a brute-force recurrence oracle) with exact equality, and records the
//! first few counterexamples. Two checks evaluate formulas exactly as
//! published where they are known to be wrong; a mismatch there is reported
//! as `erratum-documented` provided every discrepancy has the expected shape.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{companion_power, generator, j0, jmatrix, J0Variant, Matrix3};
use crate::scalars::{pow2, CycloScalar, Rational};
use crate::sequences::{j3_val, k_val, m_val, progression_coeffs, x_val};
use crate::series::{gf_series_check, gf_series_check_perturbed};
use crate::unrestricted::{
    basis, binet_qk, cassini_sides, norm_closed, norm_direct, norm_erratum_term, offset_grid, qk,
    qk_negative_closed, qm, qm_binet, qm_linear, sum_closed, sum_direct, theta, NormVariant,
    OffsetTriple,
};

pub const SCHEMA: &str = "joq-report/1";
pub const DEFAULT_SEED: u64 = 7;

/// The check registry, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    Binet,
    Cassini,
    GeneratingFunction,
    J3Relation,
    KRecurrences,
    MXIdentities,
    Matrix,
    MatrixJ0Qm,
    NegativeIndex,
    Norm,
    NormStated,
    ProgressionRecurrence,
    QkRecurrences,
    Sums,
}

impl CheckName {
    pub const ALL: [CheckName; 14] = [
        CheckName::Binet,
        CheckName::Cassini,
        CheckName::GeneratingFunction,
        CheckName::J3Relation,
        CheckName::KRecurrences,
        CheckName::MXIdentities,
        CheckName::Matrix,
        CheckName::MatrixJ0Qm,
        CheckName::NegativeIndex,
        CheckName::Norm,
        CheckName::NormStated,
        CheckName::ProgressionRecurrence,
        CheckName::QkRecurrences,
        CheckName::Sums,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Binet => "binet",
            CheckName::Cassini => "cassini",
            CheckName::GeneratingFunction => "generating-function",
            CheckName::J3Relation => "j3-relation",
            CheckName::KRecurrences => "k-recurrences",
            CheckName::MXIdentities => "m-x-identities",
            CheckName::Matrix => "matrix",
            CheckName::MatrixJ0Qm => "matrix-j0-qm",
            CheckName::NegativeIndex => "negative-index",
            CheckName::Norm => "norm",
            CheckName::NormStated => "norm-stated",
            CheckName::ProgressionRecurrence => "progression-recurrence",
            CheckName::QkRecurrences => "qk-recurrences",
            CheckName::Sums => "sums",
        }
    }

    /// Checks whose mismatches are expected and get classified as errata.
    pub fn documents_erratum(self) -> bool {
        matches!(self, CheckName::NormStated | CheckName::MatrixJ0Qm)
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

impl Serialize for CheckName {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub n_min: i64,
    pub n_max: i64,
    pub triples: Vec<OffsetTriple>,
    pub series_depth: usize,
    pub seed: u64,
    pub checks: BTreeSet<CheckName>,
    /// Test mode: perturbs the brute-force oracles so the suite must fail.
    pub mutate_oracle: bool,
    pub max_counterexamples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::with_seed(DEFAULT_SEED)
    }
}

impl SuiteConfig {
    /// Defaults with the offset grid drawn from `seed`.
    pub fn with_seed(seed: u64) -> Self {
        SuiteConfig {
            n_min: -10,
            n_max: 20,
            triples: offset_grid(seed),
            series_depth: 16,
            seed,
            checks: CheckName::ALL.into_iter().collect(),
            mutate_oracle: false,
            max_counterexamples: 10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if self.n_min > self.n_max {
            return bad(format!("n_min {} > n_max {}", self.n_min, self.n_max));
        }
        if self.series_depth < 3 {
            return bad(format!("series depth must be >= 3, got {}", self.series_depth));
        }
        if self.triples.is_empty() {
            return bad("no offset triples".into());
        }
        if self.max_counterexamples == 0 {
            return bad("max_counterexamples must be >= 1".into());
        }
        Ok(())
    }

    /// `n_min..=n_max` clipped below at `floor`.
    fn indices(&self, floor: i64) -> std::ops::RangeInclusive<i64> {
        self.n_min.max(floor)..=self.n_max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ErratumDocumented,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: i64,
    pub offsets: Option<OffsetTriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: CheckName,
    pub status: Status,
    pub cases_run: u64,
    /// Total mismatches; only the first `max_counterexamples` are listed.
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub version: &'static str,
    pub config: SuiteConfig,
    pub checks: Vec<CheckReport>,
}

impl VerificationReport {
    /// No check has status `fail`.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: CheckName) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    config.validate()?;
    let names: Vec<CheckName> = config.checks.iter().copied().collect();
    let checks = names.par_iter().map(|&name| run_check(name, config)).collect();
    Ok(VerificationReport {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        config: config.clone(),
        checks,
    })
}

struct Tally {
    limit: usize,
    cases: u64,
    failures: u64,
    /// A mismatch that does not have the documented erratum shape.
    unexplained: bool,
    examples: Vec<Counterexample>,
}

impl Tally {
    fn new(limit: usize) -> Self {
        Tally {
            limit,
            cases: 0,
            failures: 0,
            unexplained: false,
            examples: Vec::new(),
        }
    }

    fn record(&mut self, outcome: Option<Counterexample>) {
        self.cases += 1;
        if let Some(cx) = outcome {
            self.failures += 1;
            if self.examples.len() < self.limit {
                self.examples.push(cx);
            }
        }
    }

    fn finish(self, name: CheckName) -> CheckReport {
        let status = match (self.failures, self.unexplained) {
            (0, _) => Status::Pass,
            (_, false) if name.documents_erratum() => Status::ErratumDocumented,
            _ => Status::Fail,
        };
        CheckReport {
            name,
            status,
            cases_run: self.cases,
            failures: self.failures,
            counterexamples: self.examples,
        }
    }
}

/// Builds counterexamples for one evaluation point.
#[derive(Clone, Copy)]
struct At {
    n: i64,
    offsets: Option<OffsetTriple>,
}

impl At {
    fn seq(n: i64) -> Self {
        At { n, offsets: None }
    }

    fn grid(n: i64, t: &OffsetTriple) -> Self {
        At { n, offsets: Some(*t) }
    }

    /// `None` when equal, otherwise a counterexample labelled `what`.
    fn cmp<T: PartialEq + fmt::Display>(self, what: &str, lhs: &T, rhs: &T) -> Option<Counterexample> {
        (lhs != rhs).then(|| self.cx(what, lhs.to_string(), rhs.to_string()))
    }

    fn cmp_result<T: PartialEq + fmt::Display>(
        self,
        what: &str,
        lhs: &T,
        rhs: Result<T>,
    ) -> Option<Counterexample> {
        match rhs {
            Ok(r) => self.cmp(what, lhs, &r),
            Err(e) => Some(self.cx(what, lhs.to_string(), format!("error: {e}"))),
        }
    }

    fn cx(self, what: &str, lhs: String, rhs: String) -> Counterexample {
        Counterexample {
            n: self.n,
            offsets: self.offsets,
            detail: (!what.is_empty()).then(|| what.to_string()),
            lhs,
            rhs,
        }
    }
}

/// Brute-force `s_(n+3) = s_(n+2) + s_(n+1) + 2 s_n` table over `lo..=hi`,
/// run outward from the seeds at indices 0, 1, 2.
struct RecurrenceOracle {
    lo: i64,
    values: Vec<Rational>,
}

impl RecurrenceOracle {
    fn new(seeds: [i64; 3], lo: i64, hi: i64, mutate: bool) -> Self {
        let lo = lo.min(0);
        let hi = hi.max(2);
        let len = (hi - lo + 1) as usize;
        let mut values = vec![Rational::from(0); len];
        let at = |n: i64| (n - lo) as usize;
        for (s, v) in seeds.iter().enumerate() {
            values[at(s as i64)] = Rational::from(*v);
        }
        let bump = if mutate { Rational::from(1) } else { Rational::from(0) };
        for n in 3..=hi {
            values[at(n)] = &values[at(n - 1)] + &values[at(n - 2)]
                + Rational::from(2) * &values[at(n - 3)]
                + &bump;
        }
        let two = Rational::from(2);
        for n in (lo..0).rev() {
            let v = &values[at(n + 3)] - &values[at(n + 2)] - &values[at(n + 1)];
            values[at(n)] = v.checked_div(&two).expect("nonzero") + &bump;
        }
        RecurrenceOracle { lo, values }
    }

    fn get(&self, n: i64) -> &Rational {
        &self.values[(n - self.lo) as usize]
    }
}

fn run_check(name: CheckName, cfg: &SuiteConfig) -> CheckReport {
    let mut tally = Tally::new(cfg.max_counterexamples);
    let int = Rational::from;
    match name {
        CheckName::KRecurrences => {
            let oracle = RecurrenceOracle::new([3, 1, 3], cfg.n_min, cfg.n_max, cfg.mutate_oracle);
            for n in cfg.indices(i64::MIN) {
                let at = At::seq(n);
                let outcome = at
                    .cmp("K_n vs recurrence oracle", &k_val(n), oracle.get(n))
                    .or_else(|| {
                        at.cmp("K_(n+3) = K_n + 7*2^n", &k_val(n + 3), &(k_val(n) + int(7) * pow2(n)))
                    })
                    .or_else(|| {
                        let rhs = k_val(n + 2) + k_val(n + 1) + int(2) * k_val(n);
                        at.cmp("K_(n+3) = K_(n+2) + K_(n+1) + 2K_n", &k_val(n + 3), &rhs)
                    });
                tally.record(outcome);
            }
        }
        CheckName::MXIdentities => {
            let w = CycloScalar::omega();
            let w_diff = &w - &w.conjugate();
            for n in cfg.indices(i64::MIN) {
                let at = At::seq(n);
                let p = CycloScalar::omega_pow(n);
                let x_roots = (&p - &p.conjugate())
                    .checked_div(&w_diff)
                    .and_then(|x| x.rational_part());
                let outcome = at
                    .cmp("M_n^2 = M_2n + 2", &m_val(n).square(), &(m_val(2 * n) + int(2)))
                    .or_else(|| at.cmp("M_(-n) = M_n", &m_val(-n), &m_val(n)))
                    .or_else(|| at.cmp("X_(-n) = -X_n", &x_val(-n), &-x_val(n)))
                    .or_else(|| {
                        at.cmp_result("M_n = w1^n + w2^n", &m_val(n), (&p + &p.conjugate()).rational_part())
                    })
                    .or_else(|| at.cmp_result("X_n = (w1^n - w2^n)/(w1 - w2)", &x_val(n), x_roots));
                tally.record(outcome);
            }
            for n in cfg.indices(i64::MIN) {
                for m in cfg.indices(i64::MIN) {
                    let rhs = x_val(m + 1) * m_val(n) - x_val(m) * m_val(n - 1);
                    let what = format!("M_(n+m) = X_(m+1) M_n - X_m M_(n-1), m={m}");
                    tally.record(At::seq(n).cmp(&what, &m_val(n + m), &rhs));
                }
            }
        }
        CheckName::J3Relation => {
            let oracle = RecurrenceOracle::new([0, 1, 1], cfg.n_min - 2, cfg.n_max, cfg.mutate_oracle);
            for n in cfg.indices(i64::MIN) {
                let at = At::seq(n);
                let rel = oracle.get(n) + int(2) * oracle.get(n - 1) + int(6) * oracle.get(n - 2);
                let outcome = at
                    .cmp("J3_n vs recurrence oracle", &j3_val(n), oracle.get(n))
                    .or_else(|| at.cmp("K_n = J_n + 2J_(n-1) + 6J_(n-2)", &k_val(n), &rel));
                tally.record(outcome);
            }
        }
        CheckName::ProgressionRecurrence => {
            for a in 1..=5 {
                let (c2, c1, c0) = progression_coeffs(a).expect("a >= 1");
                for r in 0..a {
                    for n in cfg.indices(0) {
                        let lhs = j3_val(a * (n + 3) + r);
                        let rhs = &c2 * j3_val(a * (n + 2) + r)
                            + &c1 * j3_val(a * (n + 1) + r)
                            + &c0 * j3_val(a * n + r);
                        tally.record(At::seq(n).cmp(&format!("a={a}, r={r}"), &lhs, &rhs));
                    }
                }
            }
        }
        CheckName::QkRecurrences => {
            for t in &cfg.triples {
                let th = theta(t);
                for n in cfg.indices(i64::MIN) {
                    let at = At::grid(n, t);
                    let step = qk(n, t) + th.scale(&(int(7) * pow2(n)));
                    let order3 = qk(n + 2, t) + qk(n + 1, t) + qk(n, t).scale(&int(2));
                    let outcome = at
                        .cmp("QK_(n+3) = QK_n + 7*2^n*Theta", &qk(n + 3, t), &step)
                        .or_else(|| at.cmp("QK_(n+3) = QK_(n+2) + QK_(n+1) + 2QK_n", &qk(n + 3, t), &order3));
                    tally.record(outcome);
                }
            }
        }
        CheckName::Binet => {
            for t in &cfg.triples {
                let b = basis(t);
                tally.record(At::grid(0, t).cmp("Phi2 = conj(Phi1)", &b.phi2, &b.phi1.conjugate_scalars()));
                for n in cfg.indices(i64::MIN) {
                    let at = At::grid(n, t);
                    let direct = qk(n, t);
                    let m = qm(n, t);
                    let outcome = at
                        .cmp_result("QK_n = 2^n Theta + w1^n Phi1 + w2^n Phi2", &direct, binet_qk(n, t))
                        .or_else(|| at.cmp_result("QM_n = w1^n Phi1 + w2^n Phi2", &m, qm_binet(n, t)))
                        .or_else(|| at.cmp("QM_(n-1) = QM_(n+2)", &qm(n - 1, t), &qm(n + 2, t)))
                        .or_else(|| at.cmp("QM_n linear in M_n, M_(n-1)", &m, &qm_linear(n, t)));
                    tally.record(outcome);
                }
            }
        }
        CheckName::NegativeIndex => {
            for t in &cfg.triples {
                for n in cfg.indices(0) {
                    let at = At::grid(n, t);
                    tally.record(at.cmp_result("QK_(-n) closed form", &qk(-n, t), qk_negative_closed(n, t)));
                }
            }
        }
        CheckName::Norm => {
            for t in &cfg.triples {
                for n in cfg.indices(i64::MIN) {
                    let at = At::grid(n, t);
                    let direct = norm_direct(n, t);
                    let outcome = at
                        .cmp("corrected closed form", &direct, &norm_closed(n, t, NormVariant::Corrected))
                        .or_else(|| at.cmp_result("QK_n * conj(QK_n)", &direct, qk(n, t).norm()));
                    tally.record(outcome);
                }
            }
        }
        CheckName::NormStated => {
            for t in &cfg.triples {
                for n in cfg.indices(i64::MIN) {
                    let direct = norm_direct(n, t);
                    let stated = norm_closed(n, t, NormVariant::Stated);
                    let outcome = At::grid(n, t).cmp("stated closed form", &direct, &stated);
                    if outcome.is_some() && &stated - &direct != norm_erratum_term(n) {
                        tally.unexplained = true;
                    }
                    tally.record(outcome);
                }
            }
        }
        CheckName::Sums => {
            for t in &cfg.triples {
                for n in cfg.indices(0) {
                    let at = At::grid(n, t);
                    let direct = sum_direct(n, t).expect("n >= 0");
                    tally.record(at.cmp_result("sum_(j=0..n) QK_j closed form", &direct, sum_closed(n, t)));
                }
            }
        }
        CheckName::Cassini => {
            for t in &cfg.triples {
                for n in cfg.indices(1) {
                    let at = At::grid(n, t);
                    let outcome = match cassini_sides(n, t) {
                        Ok(s) => at.cmp("QK_(n+1) QK_(n-1) - QK_n^2", &s.lhs, &s.rhs),
                        Err(e) => Some(at.cx("", String::new(), format!("error: {e}"))),
                    };
                    tally.record(outcome);
                }
            }
        }
        CheckName::GeneratingFunction => {
            let depth = cfg.series_depth;
            for t in &cfg.triples {
                let at = At::grid(depth as i64, t);
                let ok = if cfg.mutate_oracle {
                    gf_series_check_perturbed(t, depth, 3)
                } else {
                    gf_series_check(t, depth)
                };
                let outcome = match ok {
                    Ok(true) => None,
                    Ok(false) => Some(at.cx(
                        "denominator * series vs numerator",
                        "product coefficients".into(),
                        "numerator, then zeros".into(),
                    )),
                    Err(e) => Some(at.cx("", String::new(), format!("error: {e}"))),
                };
                tally.record(outcome);
            }
        }
        CheckName::Matrix => {
            let indices = cfg.indices(0);
            let powers: Vec<_> = indices.clone().map(|n| companion_power(n as u32)).collect();
            for t in &cfg.triples {
                let start = j0(t, J0Variant::Qk);
                for (n, power) in indices.clone().zip(&powers) {
                    let at = At::grid(n, t);
                    let lhs = jmatrix(n, t).expect("n >= 0");
                    tally.record(at.cmp("J_n = J_0(QK) A^n", &lhs, &start.mul_int(power)));
                }
            }
        }
        CheckName::MatrixJ0Qm => {
            for t in &cfg.triples {
                let at = At::grid(0, t);
                let direct = jmatrix(0, t).expect("n = 0");
                let printed = j0(t, J0Variant::Qm);
                let outcome = at.cmp("J_0(QK) vs J_0(QM)", &direct, &printed);
                if outcome.is_some() {
                    // QK_m - QM_m = 2^m Theta, so the gap must be the generator of 2^m Theta
                    let th = theta(t);
                    let gap = generator(0, |m| th.scale(&pow2(m)));
                    let diff = Matrix3::from_fn(|r, c| {
                        direct.entry(r, c) - printed.entry(r, c)
                    });
                    if diff != gap {
                        tally.unexplained = true;
                    }
                }
                tally.record(outcome);
            }
        }
    }
    tally.finish(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(checks: &[CheckName]) -> SuiteConfig {
        SuiteConfig {
            n_min: -3,
            n_max: 6,
            triples: vec![OffsetTriple::new(1, 2, 3), OffsetTriple::new(0, 0, 0), OffsetTriple::new(-2, 3, 1)],
            checks: checks.iter().copied().collect(),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn registry_is_sorted_by_name() {
        let names: Vec<&str> = CheckName::ALL.iter().map(|c| c.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
        }
        assert!("bogus".parse::<CheckName>().is_err());
    }

    #[test]
    fn oracle_matches_closed_forms() {
        let o = RecurrenceOracle::new([3, 1, 3], -12, 25, false);
        for n in -12..=25 {
            assert_eq!(o.get(n), &k_val(n));
        }
        let m = RecurrenceOracle::new([3, 1, 3], -12, 25, true);
        assert_ne!(m.get(5), &k_val(5));
        assert_eq!(m.get(2), &k_val(2));
    }

    #[test]
    fn small_suite_passes_with_two_errata() {
        let report = run_suite(&small(&CheckName::ALL)).unwrap();
        assert!(report.passed());
        let errata: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.status == Status::ErratumDocumented)
            .map(|c| c.name)
            .collect();
        assert_eq!(errata, vec![CheckName::MatrixJ0Qm, CheckName::NormStated]);
        for c in &report.checks {
            assert_eq!(c.status == Status::Pass, c.counterexamples.is_empty());
            assert!(c.cases_run > 0);
        }
    }

    #[test]
    fn mutated_oracle_fails() {
        let mut cfg = small(&[CheckName::KRecurrences, CheckName::GeneratingFunction]);
        cfg.mutate_oracle = true;
        let report = run_suite(&cfg).unwrap();
        assert!(!report.passed());
        for c in &report.checks {
            assert_eq!(c.status, Status::Fail, "{}", c.name);
            assert!(!c.counterexamples.is_empty());
        }
    }

    #[test]
    fn counterexamples_are_capped() {
        let mut cfg = small(&[CheckName::NormStated]);
        cfg.max_counterexamples = 2;
        let report = run_suite(&cfg).unwrap();
        let c = report.check(CheckName::NormStated).unwrap();
        assert_eq!(c.counterexamples.len(), 2);
        assert_eq!(c.failures, c.cases_run);
    }

    #[test]
    fn config_validation() {
        let mut cfg = SuiteConfig::default();
        cfg.n_min = 5;
        cfg.n_max = 4;
        assert!(run_suite(&cfg).is_err());
        let mut cfg = SuiteConfig::default();
        cfg.series_depth = 2;
        assert!(cfg.validate().is_err());
        assert!(SuiteConfig::default().validate().is_ok());
    }

    #[test]
    fn cases_run_counts() {
        let mut cfg = small(&[CheckName::Cassini, CheckName::Sums]);
        cfg.n_min = -3;
        cfg.n_max = 6;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.check(CheckName::Cassini).unwrap().cases_run, 6 * 3);
        assert_eq!(report.check(CheckName::Sums).unwrap().cases_run, 7 * 3);
    }
}
