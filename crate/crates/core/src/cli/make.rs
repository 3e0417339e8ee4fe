//! Instance generators for group, monoid and Sweedler algebras.

use std::collections::BTreeMap;

use serde_json::json;

use super::instance::{InstanceFile, MapSpec, Role, SideSpec};
use crate::corpus;
use crate::entwining::entwining_from_bimonoid;
use crate::error::{Error, Result};
use crate::exactalg::FpMatrix;
use crate::hopfmod::{characters, check_hopf_module, group_likes, HopfModuleData};
use crate::structures::BimonoidData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `F_p[Z/n]`.
    Cyclic {
        order: usize,
    },
    /// Monoid algebra from a multiplication table over `0..n`.
    Monoid {
        table: Vec<Vec<usize>>,
        identity: usize,
    },
    Sweedler,
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoactionKind {
    /// `B = A`, `ρ = δ`.
    Regular,
    /// `B = F_p`, `ρ = e`.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MakeOptions {
    pub p: u64,
    pub family: Family,
    pub labels: Option<Vec<String>>,
    pub entwining: bool,
    pub regular_module: bool,
    pub twisted_modules: bool,
    pub comodule_algebra: Option<CoactionKind>,
    pub description: Option<String>,
}

impl MakeOptions {
    pub fn new(p: u64, family: Family) -> Self {
        MakeOptions {
            p,
            family,
            labels: None,
            entwining: false,
            regular_module: false,
            twisted_modules: false,
            comodule_algebra: None,
            description: None,
        }
    }
}

/// Parses `"0,1;1,1"` into a square table.
pub fn parse_table(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|v| {
                    v.trim()
                        .parse()
                        .map_err(|_| Error::Input(format!("bad table entry {v:?}")))
                })
                .collect()
        })
        .collect()
}

struct Builder {
    file: InstanceFile,
}

impl Builder {
    fn map(&mut self, name: &str, m: &FpMatrix) -> String {
        self.file
            .maps
            .insert(name.to_string(), MapSpec::from_matrix(m));
        name.to_string()
    }
}

fn default_labels(family: &Family, dim: usize) -> Vec<String> {
    match family {
        Family::Cyclic { .. } => (0..dim)
            .map(|k| match k {
                0 => "u".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect(),
        Family::Sweedler => ["1", "g", "x", "gx"].map(String::from).to_vec(),
        Family::Trivial => vec!["1".to_string()],
        Family::Monoid { .. } => (0..dim).map(|k| format!("m{k}")).collect(),
    }
}

fn family_name(family: &Family) -> String {
    match family {
        Family::Cyclic { order } => format!("cyclic group algebra F_p[Z/{order}]"),
        Family::Monoid { table, .. } => format!("monoid algebra on {} elements", table.len()),
        Family::Sweedler => "Sweedler 4-dimensional Hopf algebra".to_string(),
        Family::Trivial => "one-dimensional trivial bimonoid".to_string(),
    }
}

pub fn build_bimonoid(p: u64, family: &Family) -> Result<BimonoidData> {
    match family {
        Family::Cyclic { order } => corpus::cyclic_group_algebra(p, *order),
        Family::Monoid { table, identity } => corpus::monoid_algebra(p, table, *identity),
        Family::Sweedler => corpus::sweedler(p),
        Family::Trivial => corpus::trivial(p),
    }
}

pub fn make_instance(opts: &MakeOptions) -> Result<InstanceFile> {
    let a = build_bimonoid(opts.p, &opts.family)?;
    let p = a.modulus();
    let d = a.dim();
    let labels = opts
        .labels
        .clone()
        .unwrap_or_else(|| default_labels(&opts.family, d));
    if labels.len() != d {
        return Err(Error::Input(format!(
            "{} labels for a {d}-dimensional algebra",
            labels.len()
        )));
    }
    let mut b = Builder {
        file: InstanceFile {
            field_p: opts.p,
            objects: BTreeMap::from([("A".to_string(), d)]),
            maps: BTreeMap::new(),
            roles: BTreeMap::new(),
            meta: json!({
                "description": opts.description.clone().unwrap_or_else(|| family_name(&opts.family)),
                "basis": {"A": labels},
            }),
        },
    };
    let role = Role::Bimonoid {
        object: "A".into(),
        m: b.map("m", a.m()),
        e: b.map("e", a.e()),
        delta: b.map("delta", a.delta()),
        eps: b.map("eps", a.eps()),
    };
    b.file.roles.insert("A".into(), role);

    if opts.entwining {
        let ed = entwining_from_bimonoid(&a)?;
        let lambda = b.map("lambda0", &ed.lambda0);
        b.file.roles.insert(
            "lambda".into(),
            Role::Entwining {
                monoid: "A".into(),
                comonoid: "A".into(),
                lambda,
                side: SideSpec::Right,
            },
        );
    }
    if opts.regular_module {
        b.file.roles.insert(
            "regular".into(),
            Role::HopfModule {
                object: "A".into(),
                action: "m".into(),
                coaction: "delta".into(),
                over: "A".into(),
            },
        );
    }
    if opts.twisted_modules {
        let ed = entwining_from_bimonoid(&a)?;
        let mut k = 0;
        for chi in characters(&a)? {
            for g in group_likes(&a)? {
                let hm = HopfModuleData {
                    dim: 1,
                    action: chi.clone(),
                    coaction: g.clone(),
                };
                if !check_hopf_module(&hm, &ed)?.passed() {
                    continue;
                }
                b.file.objects.insert("X".into(), 1);
                let action = b.map(&format!("twisted{k}_action"), &chi);
                let coaction = b.map(&format!("twisted{k}_coaction"), &g);
                b.file.roles.insert(
                    format!("twisted{k}"),
                    Role::HopfModule {
                        object: "X".into(),
                        action,
                        coaction,
                        over: "A".into(),
                    },
                );
                k += 1;
            }
        }
    }
    match opts.comodule_algebra {
        None => {}
        Some(CoactionKind::Regular) => {
            b.file.roles.insert(
                "B".into(),
                Role::ComoduleAlgebra {
                    object: "A".into(),
                    m: "m".into(),
                    e: "e".into(),
                    rho: "delta".into(),
                    over: "A".into(),
                    coalgebra: None,
                },
            );
        }
        Some(CoactionKind::Trivial) => {
            b.file.objects.insert("B".into(), 1);
            let one = FpMatrix::identity(p, 1);
            let role = Role::ComoduleAlgebra {
                object: "B".into(),
                m: b.map("m_B", &one),
                e: b.map("e_B", &one),
                rho: b.map("rho", a.e()),
                over: "A".into(),
                coalgebra: None,
            };
            b.file.roles.insert("B".into(), role);
        }
    }
    Ok(b.file)
}
