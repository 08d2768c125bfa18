//! Executable checks of categorical laws with structured reports.

pub mod adjunction;
pub mod category;
pub mod corpus;
pub mod counterexamples;
pub mod frobenius;
pub mod functors;
pub mod report;
pub mod separator;
pub mod universal;
pub mod updiaup;

pub use category::{CategoryName, Category, FiniteLimits};
pub use report::{Evidence, LawReport, Verdict};
