//! Instance files: named objects, explicit integer matrices and role
//! declarations binding maps to structure slots.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::entwining::EntwiningData;
use crate::error::{Error, Result};
use crate::exactalg::{check_modulus, FpMatrix};
use crate::hopfmod::HopfModuleData;
use crate::structures::{BimonoidData, ComoduleAlgebraData, ComonoidData, MonoidData, Side};

pub const MAX_DIM_VAR: &str = "ENTWINE_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
}

impl MapSpec {
    pub fn from_matrix(m: &FpMatrix) -> Self {
        MapSpec {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|&v| v as i64).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

impl From<SideSpec> for Side {
    fn from(s: SideSpec) -> Side {
        match s {
            SideSpec::Left => Side::Left,
            SideSpec::Right => Side::Right,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Role {
    Monoid {
        object: String,
        m: String,
        e: String,
    },
    Comonoid {
        object: String,
        delta: String,
        eps: String,
    },
    Bimonoid {
        object: String,
        m: String,
        e: String,
        delta: String,
        eps: String,
    },
    /// `over` names a bimonoid role; `coalgebra` an optional comonoid role
    /// (the one-dimensional comonoid when absent).
    ComoduleAlgebra {
        object: String,
        m: String,
        e: String,
        rho: String,
        over: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coalgebra: Option<String>,
    },
    /// `monoid` and `comonoid` name roles providing those structures.
    Entwining {
        monoid: String,
        comonoid: String,
        lambda: String,
        side: SideSpec,
    },
    /// `over` names a bimonoid or entwining role.
    HopfModule {
        object: String,
        action: String,
        coaction: String,
        over: String,
    },
}

impl Role {
    pub fn kind(&self) -> &'static str {
        match self {
            Role::Monoid { .. } => "monoid",
            Role::Comonoid { .. } => "comonoid",
            Role::Bimonoid { .. } => "bimonoid",
            Role::ComoduleAlgebra { .. } => "comodule_algebra",
            Role::Entwining { .. } => "entwining",
            Role::HopfModule { .. } => "hopf_module",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field_p: u64,
    pub objects: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, MapSpec>,
    pub roles: BTreeMap<String, Role>,
    #[serde(default)]
    pub meta: serde_json::Value,
}

/// A validated instance together with the notes produced while loading it.
#[derive(Clone, Debug, PartialEq)]
pub struct Loaded {
    pub file: InstanceFile,
    pub warnings: Vec<String>,
}

pub fn max_dim() -> Result<usize> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{MAX_DIM_VAR}={v:?} is not a dimension"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

pub fn load_instance(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text)
}

pub fn parse_instance(text: &str) -> Result<Loaded> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("parse error: {e}")))?;
    file.validate(max_dim()?)
}

/// Pretty JSON with every array of scalars kept on one line.
pub fn to_json(file: &InstanceFile) -> String {
    let pretty = serde_json::to_string_pretty(file).expect("instance serializes");
    let mut out = String::with_capacity(pretty.len());
    let mut lines = pretty.lines().peekable();
    while let Some(line) = lines.next() {
        if !line.ends_with('[') {
            out.push_str(line);
            out.push('\n');
            continue;
        }
        let mut items = Vec::new();
        let mut closing = None;
        let mut rest = Vec::new();
        while let Some(&next) = lines.peek() {
            let t = next.trim();
            if t.starts_with(']') {
                closing = Some(t.to_string());
                lines.next();
                break;
            }
            if t.starts_with('{') || t.starts_with('[') {
                break;
            }
            items.push(t.trim_end_matches(',').to_string());
            rest.push(next.to_string());
            lines.next();
        }
        match closing {
            Some(close) => {
                out.push_str(line);
                out.push_str(&items.join(", "));
                out.push_str(&close);
            }
            None => {
                out.push_str(line);
                for r in rest {
                    out.push('\n');
                    out.push_str(&r);
                }
            }
        }
        out.push('\n');
    }
    out
}

impl InstanceFile {
    pub fn modulus(&self) -> u32 {
        self.field_p as u32
    }

    /// Reduces entries, then enforces dimension caps and every role's shape
    /// constraints.
    pub fn validate(mut self, cap: usize) -> Result<Loaded> {
        let p = check_modulus(self.field_p)?;
        let mut warnings = Vec::new();
        for (name, &d) in &self.objects {
            if d > cap {
                return Err(Error::Input(format!(
                    "object '{name}' has dimension {d} above the cap {cap} ({MAX_DIM_VAR})"
                )));
            }
        }
        for (name, spec) in self.maps.iter_mut() {
            if spec.entries.len() != spec.rows * spec.cols {
                return Err(Error::Input(format!(
                    "map '{name}': {} entries for a {}x{} matrix",
                    spec.entries.len(),
                    spec.rows,
                    spec.cols
                )));
            }
            let out_of_range = spec
                .entries
                .iter()
                .filter(|&&v| v < 0 || v >= p as i64)
                .count();
            if out_of_range > 0 {
                warnings.push(format!(
                    "map '{name}': {out_of_range} entries reduced mod {p}"
                ));
                for v in spec.entries.iter_mut() {
                    *v = v.rem_euclid(p as i64);
                }
            }
        }
        for name in self.roles.keys() {
            self.check_role(name)?;
        }
        Ok(Loaded {
            file: self,
            warnings,
        })
    }

    fn dim(&self, object: &str) -> Result<usize> {
        self.objects
            .get(object)
            .copied()
            .ok_or_else(|| Error::Input(format!("unknown object '{object}'")))
    }

    fn role(&self, name: &str) -> Result<&Role> {
        self.roles
            .get(name)
            .ok_or_else(|| Error::Input(format!("unknown role '{name}'")))
    }

    /// The named map, required to have the given shape.
    pub fn map(&self, name: &str, rows: usize, cols: usize) -> Result<FpMatrix> {
        let spec = self
            .maps
            .get(name)
            .ok_or_else(|| Error::Input(format!("unknown map '{name}'")))?;
        if (spec.rows, spec.cols) != (rows, cols) {
            return Err(Error::Input(format!(
                "map '{name}' has shape {}x{}, role requires {rows}x{cols}",
                spec.rows, spec.cols
            )));
        }
        FpMatrix::from_i64(self.modulus(), rows, cols, &spec.entries)
    }

    fn check_role(&self, name: &str) -> Result<()> {
        let ctx = |e: Error| match e {
            Error::Input(msg) => Error::Input(format!("role '{name}': {msg}")),
            other => other,
        };
        match self.role(name)? {
            Role::Monoid { .. } | Role::Bimonoid { .. } => self.monoid(name).map(|_| ()),
            Role::Comonoid { .. } => self.comonoid(name).map(|_| ()),
            Role::ComoduleAlgebra { .. } => self.comodule_algebra(name).map(|_| ()),
            Role::Entwining { .. } => self.entwining(name).map(|_| ()),
            Role::HopfModule {
                object,
                action,
                coaction,
                over,
            } => {
                let (da, dc) = match self.role(over)? {
                    Role::Entwining { .. } => {
                        let ed = self.entwining(over)?;
                        (ed.monoid.dim, ed.comonoid.dim)
                    }
                    _ => {
                        let d = self.bimonoid(over)?.dim();
                        (d, d)
                    }
                };
                let d = self.dim(object)?;
                self.map(action, d, d * da)?;
                self.map(coaction, d * dc, d).map(|_| ())
            }
        }
        .map_err(ctx)
    }

    pub fn monoid(&self, name: &str) -> Result<MonoidData> {
        match self.role(name)? {
            Role::Monoid { object, m, e }
            | Role::Bimonoid { object, m, e, .. }
            | Role::ComoduleAlgebra { object, m, e, .. } => {
                let d = self.dim(object)?;
                MonoidData::new(self.map(m, d, d * d)?, self.map(e, d, 1)?)
            }
            other => Err(Error::Input(format!(
                "role '{name}' is a {}, not a monoid",
                other.kind()
            ))),
        }
    }

    pub fn comonoid(&self, name: &str) -> Result<ComonoidData> {
        match self.role(name)? {
            Role::Comonoid { object, delta, eps }
            | Role::Bimonoid {
                object, delta, eps, ..
            } => {
                let d = self.dim(object)?;
                ComonoidData::new(self.map(delta, d * d, d)?, self.map(eps, 1, d)?)
            }
            other => Err(Error::Input(format!(
                "role '{name}' is a {}, not a comonoid",
                other.kind()
            ))),
        }
    }

    pub fn bimonoid(&self, name: &str) -> Result<BimonoidData> {
        match self.role(name)? {
            Role::Bimonoid { .. } => BimonoidData::new(self.monoid(name)?, self.comonoid(name)?),
            other => Err(Error::Input(format!(
                "role '{name}' is a {}, not a bimonoid",
                other.kind()
            ))),
        }
    }

    /// The comodule algebra and the comonoid `C` it is paired with.
    pub fn comodule_algebra(&self, name: &str) -> Result<(ComoduleAlgebraData, ComonoidData)> {
        match self.role(name)? {
            Role::ComoduleAlgebra {
                object,
                rho,
                over,
                coalgebra,
                ..
            } => {
                let algebra = self.monoid(name)?;
                let a = self.bimonoid(over)?;
                let b = self.dim(object)?;
                let rho = self.map(rho, a.dim() * b, b)?;
                let c = match coalgebra {
                    Some(c) => self.comonoid(c)?,
                    None => ComonoidData::trivial(self.modulus()),
                };
                Ok((ComoduleAlgebraData::new(algebra, a, rho)?, c))
            }
            other => Err(Error::Input(format!(
                "role '{name}' is a {}, not a comodule algebra",
                other.kind()
            ))),
        }
    }

    pub fn entwining(&self, name: &str) -> Result<EntwiningData> {
        match self.role(name)? {
            Role::Entwining {
                monoid,
                comonoid,
                lambda,
                side,
            } => {
                let a = self.monoid(monoid)?;
                let c = self.comonoid(comonoid)?;
                let (da, dc) = (a.dim, c.dim);
                let lambda = self.map(lambda, da * dc, da * dc)?;
                EntwiningData::new(a, c, lambda, (*side).into())
            }
            other => Err(Error::Input(format!(
                "role '{name}' is a {}, not an entwining",
                other.kind()
            ))),
        }
    }

    /// The module data and the entwining it is taken over: a named
    /// entwining, or the one induced by a named bimonoid.
    pub fn hopf_module(&self, name: &str) -> Result<(HopfModuleData, EntwiningData)> {
        match self.role(name)? {
            Role::HopfModule {
                object,
                action,
                coaction,
                over,
            } => {
                let ed = match self.role(over)? {
                    Role::Entwining { .. } => self.entwining(over)?,
                    _ => crate::entwining::entwining_from_bimonoid(&self.bimonoid(over)?)?,
                };
                let d = self.dim(object)?;
                let hm = HopfModuleData {
                    dim: d,
                    action: self.map(action, d, d * ed.monoid.dim)?,
                    coaction: self.map(coaction, d * ed.comonoid.dim, d)?,
                };
                Ok((hm, ed))
            }
            other => Err(Error::Input(format!(
                "role '{name}' is a {}, not a hopf module",
                other.kind()
            ))),
        }
    }

    /// Role names of the given kind, in name order.
    pub fn roles_of(&self, kind: &str) -> Vec<&str> {
        self.roles
            .iter()
            .filter(|(_, r)| r.kind() == kind)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Hopf module roles declared over the named role.
    pub fn modules_over(&self, over_role: &str) -> Vec<&str> {
        self.roles
            .iter()
            .filter(|(_, r)| matches!(r, Role::HopfModule { over, .. } if over == over_role))
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Basis labels recorded under `meta.basis.<object>`.
    pub fn basis_labels(&self, object: &str) -> Vec<String> {
        self.meta
            .get("basis")
            .and_then(|b| b.get(object))
            .and_then(|v| v.as_array())
            .map(|a| {
                a.iter()
                    .filter_map(|s| s.as_str().map(str::to_string))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn object_of(&self, role: &str) -> Option<&str> {
        match self.roles.get(role)? {
            Role::Monoid { object, .. }
            | Role::Comonoid { object, .. }
            | Role::Bimonoid { object, .. }
            | Role::ComoduleAlgebra { object, .. }
            | Role::HopfModule { object, .. } => Some(object),
            Role::Entwining { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kz2() -> String {
        r#"{
          "field_p": 3,
          "objects": {"A": 2},
          "maps": {
            "m": {"rows": 2, "cols": 4, "entries": [1,0,0,1, 0,1,1,0]},
            "e": {"rows": 2, "cols": 1, "entries": [1,0]},
            "delta": {"rows": 4, "cols": 2, "entries": [1,0, 0,0, 0,0, 0,1]},
            "eps": {"rows": 1, "cols": 2, "entries": [1,4]}
          },
          "roles": {"A": {"kind": "bimonoid", "object": "A", "m": "m", "e": "e", "delta": "delta", "eps": "eps"}},
          "meta": {"basis": {"A": ["u", "g"]}}
        }"#
        .to_string()
    }

    #[test]
    fn loads_and_reduces() {
        let loaded = parse_instance(&kz2()).unwrap();
        assert_eq!(loaded.warnings.len(), 1);
        assert!(loaded.warnings[0].contains("'eps'"));
        let a = loaded.file.bimonoid("A").unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.eps().entries(), &[1, 1]);
        assert_eq!(loaded.file.basis_labels("A"), vec!["u", "g"]);
    }

    #[test]
    fn role_shape_violation_names_map() {
        let bad = kz2().replace(
            r#""m": {"rows": 2, "cols": 4, "entries": [1,0,0,1, 0,1,1,0]}"#,
            r#""m": {"rows": 3, "cols": 2, "entries": [1,0,0,1,0,1]}"#,
        );
        let err = parse_instance(&bad).unwrap_err().to_string();
        assert!(err.contains("map 'm'"), "{err}");
    }

    #[test]
    fn rejects_composite_modulus_and_garbage() {
        assert!(parse_instance(&kz2().replace("\"field_p\": 3", "\"field_p\": 4")).is_err());
        assert!(matches!(parse_instance("{").unwrap_err(), Error::Input(_)));
    }

    #[test]
    fn round_trips() {
        let loaded = parse_instance(&kz2()).unwrap();
        let again = parse_instance(&to_json(&loaded.file)).unwrap();
        assert_eq!(again.file, loaded.file);
        assert!(again.warnings.is_empty());
    }

    #[test]
    fn dimension_cap() {
        let file: InstanceFile = serde_json::from_str(&kz2()).unwrap();
        assert!(file.clone().validate(1).is_err());
        assert!(file.validate(2).is_ok());
    }
}
