//! Command-line front end (placeholder while the core builds).
