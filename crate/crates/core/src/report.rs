//! Named pass/fail checks with witnesses.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Present exactly when the check failed.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass: false, witness: Some(witness.into()) });
    }

    /// `Ok(())` passes, `Err(w)` fails with witness `w`.
    pub fn record(&mut self, name: impl Into<String>, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => self.pass(name),
            Err(w) => self.fail(name, w),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name)
        } else {
            self.fail(name, witness())
        }
    }

    /// Appends another report's checks, prefixing their names.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}.{}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// One `CHECK <name>: PASS|FAIL [witness]` line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match (&c.pass, &c.witness) {
                (true, _) => out.push_str(&format!("CHECK {}: PASS\n", c.name)),
                (false, Some(w)) => out.push_str(&format!("CHECK {}: FAIL {}\n", c.name, w)),
                (false, None) => out.push_str(&format!("CHECK {}: FAIL\n", c.name)),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = Report::new();
        r.pass("a");
        r.fail("b", "x=1");
        assert_eq!(r.to_text(), "CHECK a: PASS\nCHECK b: FAIL x=1\n");
        assert_eq!(
            r.to_json(),
            r#"{"checks":[{"name":"a","pass":true,"witness":null},{"name":"b","pass":false,"witness":"x=1"}]}"#
        );
        assert!(!r.all_pass());
    }
}
