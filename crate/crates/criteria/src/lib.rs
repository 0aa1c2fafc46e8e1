//! Acceptance checks for `kleene-core`; see `tests/acceptance.rs`.
