//! Display sequents: structures, the display postulates and the
//! interaction rules between the two families of connectives.

mod display;
mod distr;
mod structure;

pub use display::{canonical, display_leaf, display_moves, display_path, display_orbit, displays, StructRule};
pub use distr::{all_rules, distr_moves, distr_premises, ConfigError, DistrRule, Pat, RuleConfig};
pub use structure::{bin_polarity, un_polarity, Label, Polarity, Sequent, Structure};
