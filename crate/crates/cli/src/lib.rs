//! Command-line front end for `jlring`: expression parsing, scenarios,
//! command dispatch and the property suites.

pub mod commands;
pub mod expr;
pub mod report;
pub mod scenario;
pub mod suites;

pub use commands::{run, Outcome};
pub use expr::{parse_expr, round_trips, ParseError};
pub use report::{Check, Report};
pub use scenario::{Scenario, ScenarioError};
pub use suites::run_suite;
