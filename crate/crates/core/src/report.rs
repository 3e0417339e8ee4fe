//! Check reports: named verdicts with counterexample coordinates and
//! witness matrices.

use serde::Serialize;

use crate::error::{shape_err, Result};
use crate::exactalg::FpMatrix;

pub const COMPOSITION: &str = "matrices act on column vectors; g.f applies f first";
pub const FLATTENING: &str = "tensor legs flatten row-major: (i,j) -> i*dim2 + j";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u32>,
    /// Name of another witness in the same check that this one inverts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse_of: Option<String>,
    #[serde(skip)]
    modulus: u32,
}

impl Witness {
    pub fn new(name: impl Into<String>, m: &FpMatrix) -> Self {
        Witness {
            name: name.into(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().to_vec(),
            inverse_of: None,
            modulus: m.modulus(),
        }
    }

    pub fn inverse(name: impl Into<String>, m: &FpMatrix, of: impl Into<String>) -> Self {
        Witness {
            inverse_of: Some(of.into()),
            ..Witness::new(name, m)
        }
    }

    pub fn matrix(&self) -> FpMatrix {
        FpMatrix::new(self.modulus, self.rows, self.cols, self.entries.clone())
            .expect("witness built from a valid matrix")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        Check {
            name: name.into(),
            verdict,
            counterexample: None,
            detail: None,
            witnesses: Vec::new(),
        }
    }

    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Check::new(name, Verdict::from_bool(ok))
    }

    pub fn info(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(name, Verdict::Info).with_detail(detail)
    }

    /// Exact matrix equation `lhs = rhs`; on failure records the first
    /// differing `(row, col)`.
    pub fn equation(name: impl Into<String>, lhs: &FpMatrix, rhs: &FpMatrix) -> Result<Self> {
        let name = name.into();
        if lhs.shape() != rhs.shape() {
            return Err(shape_err(
                format!("both sides of '{name}'"),
                lhs.shape(),
                rhs.shape(),
            ));
        }
        let diff = lhs.first_difference(rhs);
        let mut check = Check::flag(name, diff.is_none());
        check.counterexample = diff.map(|(r, c)| [r, c]);
        if let Some((r, c)) = diff {
            check.detail = Some(format!(
                "lhs[{r},{c}] = {} but rhs[{r},{c}] = {}",
                lhs.get(r, c),
                rhs.get(r, c)
            ));
        }
        Ok(check)
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub conventions: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(id: impl Into<String>) -> Self {
        Report {
            id: id.into(),
            conventions: vec![COMPOSITION.to_string(), FLATTENING.to_string()],
            checks: Vec::new(),
        }
    }

    pub fn convention(&mut self, c: impl Into<String>) {
        let c = c.into();
        if !self.conventions.contains(&c) {
            self.conventions.push(c);
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn equation(
        &mut self,
        name: impl Into<String>,
        lhs: &FpMatrix,
        rhs: &FpMatrix,
    ) -> Result<bool> {
        let check = Check::equation(name, lhs, rhs)?;
        let ok = check.passed();
        self.push(check);
        Ok(ok)
    }

    /// Appends another report's checks under `prefix`, merging conventions.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.conventions {
            self.convention(c);
        }
        for mut check in other.checks {
            if !prefix.is_empty() {
                check.name = format!("{prefix}: {}", check.name);
            }
            self.checks.push(check);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn verdict(&self, name: &str) -> Option<Verdict> {
        self.get(name).map(|c| c.verdict)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Re-checks every witness pair declared as mutually inverse.
    pub fn verify_witnesses(&self) -> std::result::Result<(), String> {
        for check in &self.checks {
            for w in &check.witnesses {
                let Some(of) = &w.inverse_of else { continue };
                let base = check
                    .witnesses
                    .iter()
                    .find(|b| &b.name == of)
                    .ok_or_else(|| {
                        format!(
                            "{}: witness '{}' inverts missing '{of}'",
                            check.name, w.name
                        )
                    })?;
                let (m, inv) = (base.matrix(), w.matrix());
                let ok = matches!((m.mul(&inv), inv.mul(&m)), (Ok(a), Ok(b)) if a.is_identity() && b.is_identity());
                if !ok {
                    return Err(format!(
                        "{}: witness '{}' does not invert '{of}'",
                        check.name, w.name
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equation_records_first_difference() {
        let a = FpMatrix::from_rows(3, &[&[1, 0], &[0, 1]]);
        let b = FpMatrix::from_rows(3, &[&[1, 0], &[2, 1]]);
        let c = Check::equation("x", &a, &b).unwrap();
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.counterexample, Some([1, 0]));
        assert!(Check::equation("x", &a, &a).unwrap().passed());
        assert!(Check::equation("x", &a, &FpMatrix::identity(3, 3)).is_err());
    }

    #[test]
    fn inverse_witnesses_are_rechecked() {
        let m = FpMatrix::from_rows(5, &[&[2, 1], &[1, 1]]);
        let mut r = Report::new("t");
        r.push(
            Check::flag("inv", true)
                .with_witness(Witness::new("m", &m))
                .with_witness(Witness::inverse("m^-1", &m.inverse().unwrap(), "m")),
        );
        assert!(r.verify_witnesses().is_ok());
        r.checks[0].witnesses[1] = Witness::inverse("m^-1", &m, "m");
        assert!(r.verify_witnesses().is_err());
    }

    #[test]
    fn info_does_not_fail() {
        let mut r = Report::new("t");
        r.push(Check::info("note", "hello"));
        assert!(r.passed());
        r.push(Check::flag("bad", false));
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.failures().count(), 1);
    }
}
