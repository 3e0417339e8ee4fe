#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use entwine::cli::instance::{load_instance, InstanceFile};

pub const BIMONOID_FIXTURES: [&str; 5] = ["kz2_f3", "kz3_f2", "m2_f2", "sweedler_f5", "trivial_fp"];
pub const HOPF_FIXTURES: [&str; 4] = ["kz2_f3", "kz3_f2", "sweedler_f5", "trivial_fp"];
pub const ALL_FIXTURES: [&str; 7] = [
    "kz2_f3",
    "kz3_f2",
    "m2_f2",
    "sweedler_f5",
    "trivial_fp",
    "comodule_regular_kz2_f3",
    "trivial_coaction_kz2_f3",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> InstanceFile {
    load_instance(&fixture_path(name))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
        .file
}
