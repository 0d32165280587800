pub mod anonymizer;
pub mod bpe;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod frontend;
mod fsutil;
pub mod lexicalizer;
pub mod pipeline;
pub mod unit;
pub mod vocabulary;

pub use error::{Error, Result};
pub use pipeline::Pipeline;
pub use unit::{Language, SourceUnit};
