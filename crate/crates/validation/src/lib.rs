//! Holds the `acceptance` test target. It lives in its own package so that
//! `cargo test --workspace` runs it after every other suite: a failing
//! criterion then cannot hide the results of the unit and property tests.
