//! Named verification suites, their JSON reports, and the driver behind the
//! `cobordism` binary.

mod suites;

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::thread;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::report::{CaseRecord, Verification};

pub use suites::registry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("unknown check `{0}`; run `cobordism list` for the registered ids")]
    UnknownCheck(String),
    #[error("unknown profile `{0}` (expected quick or full)")]
    UnknownProfile(String),
    #[error("cannot write {path}: {reason}")]
    Io { path: String, reason: String },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Small bounds, a few seconds in total.
    Quick,
    /// The full verification bounds.
    #[default]
    Full,
}

impl FromStr for Profile {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(CliError::UnknownProfile(other.to_owned())),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        })
    }
}

/// Command-line overrides; unset values fall back to the profile.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub profile: Profile,
    pub max_degree: Option<u64>,
    pub n: Option<u64>,
    pub max_n: Option<u64>,
    pub t_max: Option<u64>,
}

impl Params {
    pub fn profile(profile: Profile) -> Self {
        Params { profile, ..Params::default() }
    }
}

/// Parameter lookups made by a running suite, recorded for its report.
pub struct Context {
    params: Params,
    used: RefCell<BTreeMap<String, String>>,
}

impl Context {
    pub fn new(params: Params) -> Self {
        let mut used = BTreeMap::new();
        used.insert("profile".to_owned(), params.profile.to_string());
        Context { params, used: RefCell::new(used) }
    }

    fn resolve(&self, key: &str, given: Option<u64>, quick: u64, full: u64) -> u64 {
        let value = given.unwrap_or(match self.params.profile {
            Profile::Quick => quick,
            Profile::Full => full,
        });
        self.used.borrow_mut().insert(key.to_owned(), value.to_string());
        value
    }

    pub fn max_degree(&self, quick: u64, full: u64) -> u64 {
        self.resolve("max_degree", self.params.max_degree, quick, full)
    }

    pub fn n(&self, quick: u64, full: u64) -> u64 {
        self.resolve("n", self.params.n, quick, full)
    }

    pub fn max_n(&self, quick: u64, full: u64) -> u64 {
        self.resolve("max_n", self.params.max_n, quick, full)
    }

    pub fn t_max(&self, quick: u64, full: u64) -> u64 {
        self.resolve("t_max", self.params.t_max, quick, full)
    }

    /// Records a derived bound that is not a command-line flag.
    pub fn record(&self, key: &str, value: impl fmt::Display) {
        self.used.borrow_mut().insert(key.to_owned(), value.to_string());
    }

    pub fn into_used(self) -> BTreeMap<String, String> {
        self.used.into_inner()
    }
}

/// A registered suite. `run` returns `Err` for invalid parameters or an
/// internal error, which is reported as status `error`.
#[derive(Clone, Copy)]
pub struct Suite {
    pub id: &'static str,
    pub description: &'static str,
    pub run: fn(&Context) -> Result<Verification, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    /// Process exit code: 0 pass, 1 fail, 2 error.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

/// Every integer, the wall time included, is a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub details: Vec<CaseRecord>,
    pub wall_time_ms: String,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn wall_time(&self) -> u128 {
        self.wall_time_ms.parse().unwrap_or(0)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.details.iter().filter(|c| !c.ok)
    }

    /// A short plain-text table.
    pub fn render(&self, all_cases: bool) -> String {
        let mut out = format!(
            "{:<22} {:<6} {:>6} cases {:>8} ms",
            self.check,
            self.status,
            self.details.len(),
            self.wall_time_ms
        );
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("  [{}]\n", params.join(" ")));
        for c in &self.details {
            if all_cases || !c.ok {
                let mark = if c.ok { "ok  " } else { "FAIL" };
                out.push_str(&format!("  {mark} {}", c.case));
                if c.ok {
                    out.push_str(&format!(": {}", c.actual));
                } else {
                    out.push_str(&format!("\n       expected: {}\n       actual:   {}", c.expected, c.actual));
                }
                out.push('\n');
            }
        }
        out
    }
}

pub fn find_suite<'a>(suites: &'a [Suite], id: &str) -> Option<&'a Suite> {
    suites.iter().find(|s| s.id == id)
}

/// Runs one suite.
pub fn run_suite(suite: &Suite, params: &Params) -> VerificationReport {
    let start = Instant::now();
    let ctx = Context::new(params.clone());
    let outcome = (suite.run)(&ctx);
    let elapsed = start.elapsed().as_millis();
    let (status, details) = match outcome {
        Ok(v) => (if v.passed() { Status::Pass } else { Status::Fail }, v.cases),
        Err(e) => (
            Status::Error,
            vec![CaseRecord { case: "error".to_owned(), expected: String::new(), actual: e, ok: false }],
        ),
    };
    VerificationReport {
        check: suite.id.to_owned(),
        params: ctx.into_used(),
        status,
        details,
        wall_time_ms: elapsed.to_string(),
    }
}

/// Runs a registered suite by id; `all` runs every suite.
pub fn run(check_id: &str, params: &Params) -> Result<VerificationReport, CliError> {
    if check_id == "all" {
        return Ok(run_all_with(&registry(), params).summary);
    }
    let suites = registry();
    let suite = find_suite(&suites, check_id).ok_or_else(|| CliError::UnknownCheck(check_id.to_owned()))?;
    Ok(run_suite(suite, params))
}

/// The per-suite reports, sorted by id, and a summary report whose details
/// hold one record per suite followed by each failing case.
#[derive(Clone, Debug)]
pub struct AggregateReport {
    pub reports: Vec<VerificationReport>,
    pub summary: VerificationReport,
}

impl AggregateReport {
    pub fn status(&self) -> Status {
        self.summary.status
    }
}

pub fn run_all(profile: Profile) -> AggregateReport {
    run_all_with(&registry(), &Params::profile(profile))
}

/// Runs `suites` concurrently with shared parameters.
pub fn run_all_with(suites: &[Suite], params: &Params) -> AggregateReport {
    let start = Instant::now();
    let mut reports: Vec<VerificationReport> = thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|suite| s.spawn(move || run_suite(suite, params))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    reports.sort_by(|a, b| a.check.cmp(&b.check));

    let mut details = Vec::new();
    for r in &reports {
        details.push(CaseRecord {
            case: r.check.clone(),
            expected: Status::Pass.to_string(),
            actual: r.status.to_string(),
            ok: r.status == Status::Pass,
        });
    }
    for r in &reports {
        for c in r.failures() {
            details.push(CaseRecord { case: format!("{}: {}", r.check, c.case), ..c.clone() });
        }
    }
    let status = if reports.iter().any(|r| r.status == Status::Error) {
        Status::Error
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    let mut summary_params = BTreeMap::new();
    summary_params.insert("profile".to_owned(), params.profile.to_string());
    let summary = VerificationReport {
        check: "all".to_owned(),
        params: summary_params,
        status,
        details,
        wall_time_ms: start.elapsed().as_millis().to_string(),
    };
    AggregateReport { reports, summary }
}

/// Writes `report` as JSON to `path`.
pub fn write_json(report: &VerificationReport, path: &str) -> Result<(), CliError> {
    std::fs::write(path, report.to_json() + "\n")
        .map_err(|e| CliError::Io { path: path.to_owned(), reason: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_parse() {
        assert_eq!("quick".parse::<Profile>().unwrap(), Profile::Quick);
        assert!("fast".parse::<Profile>().is_err());
    }

    #[test]
    fn unknown_check() {
        assert_eq!(run("nope", &Params::default()).unwrap_err(), CliError::UnknownCheck("nope".into()));
    }

    #[test]
    fn registry_ids() {
        let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let expected = [
            "pi-closed-form",
            "transfer-sn",
            "transfer-s2t2t",
            "sq1-homology",
            "lemma-l32",
            "lemma-analog",
            "sn-identities",
            "primitivity",
            "girard-newton",
            "generators",
            "gcd-criterion",
            "lemma-binom",
            "zseq",
            "mf-ia",
            "unoriented-transfer",
        ];
        assert_eq!(ids, expected);
    }

    #[test]
    fn json_round_trip() {
        let r = run("generators", &Params::default()).unwrap();
        let json = r.to_json();
        let back = VerificationReport::from_json(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn error_status() {
        let params = Params { max_n: Some(2), ..Params::default() };
        let r = run("zseq", &params).unwrap();
        assert_eq!(r.status, Status::Error);
        assert_eq!(r.status.exit_code(), 2);
    }
}
