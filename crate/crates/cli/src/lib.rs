//! Library surface of the `gfc` binary: lexer, parser, evaluator and
//! renderer. Exposed so integration tests can drive the exact code the
//! binary runs.

pub mod eval;
pub mod lexer;
pub mod parser;
pub mod render;
