//! Reporting helpers for the acceptance suite.
//!
//! Every criterion produces exactly one `PASS` or `FAIL` line. Indented
//! detail lines and `INFO` lines carry the measured values behind it and
//! never change the verdict.

use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

/// Collects verdicts and prints them as they arrive.
#[derive(Debug, Default)]
pub struct Report {
    verdicts: Vec<(String, bool)>,
}

impl Report {
    pub fn new(title: &str) -> Self {
        println!("{title}");
        Self::default()
    }

    /// Records and prints the single verdict line of a criterion.
    pub fn criterion(&mut self, id: &str, passed: bool, text: impl Display) {
        println!("[{}] {id:>2}  {text}", if passed { "PASS" } else { "FAIL" });
        self.verdicts.push((id.to_string(), passed));
    }

    /// Indented measurement behind the preceding or following verdict.
    pub fn detail(&self, text: impl Display) {
        println!("          {text}");
    }

    /// Supplementary measurement that is not itself a criterion.
    pub fn info(&self, id: &str, text: impl Display) {
        println!("[INFO] {id:>2}  {text}");
    }

    pub fn failed(&self) -> Vec<&str> {
        self.verdicts
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(id, _)| id.as_str())
            .collect()
    }

    /// Prints the tally and maps it to the process exit status.
    pub fn finish(self) -> ExitCode {
        let failed = self.failed();
        let total = self.verdicts.len();
        if failed.is_empty() {
            println!("acceptance: {total}/{total} criteria pass");
            ExitCode::SUCCESS
        } else {
            println!(
                "acceptance: {}/{total} criteria pass; failing: {}",
                total - failed.len(),
                failed.join(", ")
            );
            ExitCode::FAILURE
        }
    }
}

/// Runs `f` and returns its value with the wall time in seconds.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}

/// `"ok"` or `"off"`, for detail lines that list several sub-checks.
pub fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "off"
    }
}
