//! Shared helpers for the integration-test crates. Not a test target
//! itself; each test file pulls this in with `mod support;`.

pub mod lie_oracle;
