//! Ad-nilpotent and abelian ideals of standard parabolic subalgebras, counted
//! through antichains of the positive root poset.
//!
//! An ideal of `p_I` is determined by its set of roots Φ, which is a filter of
//! (Δ+, ≤) that avoids Δ_I and is closed under subtracting the simple roots in
//! `I`. Filters are generated from antichains, classified once by the set of
//! simple roots they are compatible with, and aggregated into the `2^l` rows of
//! a count table.
//!
//! ```
//! use parabolic_ideals::{tabulate, RootSystem, SimpleType};
//!
//! let rs = RootSystem::build(SimpleType::G2).unwrap();
//! let table = tabulate(&rs);
//! assert_eq!((table.rows()[0].n_count, table.rows()[0].ab_count), (8, 4));
//! ```

pub mod error;
mod golden_data;
pub mod ideals;
pub mod oracle;
pub mod poset;
pub mod render;
pub mod rootset;
pub mod rootsys;
pub mod tabulate;

pub use error::{Error, Result};
pub use ideals::{
    compatibility_mask, is_abelian, parabolic_compatible, IdealRecord, ParabolicMask,
};
pub use poset::Poset;
pub use render::OutputFormat;
pub use rootset::RootSet;
pub use rootsys::{Difference, Kind, Root, RootSystem, SimpleType};
pub use tabulate::{
    compare, golden, ideals_of, listing_order, tabulate, tabulate_as, tabulate_parallel_as,
    verify_against_golden, Count, Counts, Mismatch, Report, TableOf, TableRowOf,
};

/// Count table with `u64` counters.
pub type Table = TableOf<u64>;
pub type TableRow = TableRowOf<u64>;
