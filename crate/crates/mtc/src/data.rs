//! Bundled data sets, embedded at compile time.

use crate::center::Category;
use crate::moddata::ModularData;

pub const Z_E6_JSON: &str = include_str!("../../../data/z_e6.json");
pub const Z_HAAGERUP_JSON: &str = include_str!("../../../data/z_haagerup.json");
pub const HALF_E6_JSON: &str = include_str!("../../../data/half_e6.json");

/// Modular data of the center of ½E6 (labels 1, Y, X1..X5, U, V, W).
pub fn z_e6() -> ModularData {
    ModularData::from_json_str(Z_E6_JSON).expect("bundled z_e6.json is valid")
}

/// Modular data of the center of the Haagerup category.
pub fn z_haagerup() -> ModularData {
    ModularData::from_json_str(Z_HAAGERUP_JSON).expect("bundled z_haagerup.json is valid")
}

/// The skeletal ½E6 category with its printed half-braidings.
pub fn half_e6() -> Category {
    Category::from_json_str(HALF_E6_JSON).expect("bundled half_e6.json is valid")
}
