// mdbook cannot run snippets that depend on workspace crates, so every
// chapter is pulled in as a doc comment and `cargo test` runs the code
// blocks as doc tests. One module per chapter keeps failures traceable.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/quivers.md")]
pub mod quivers {}
#[doc = include_str!("src/classification.md")]
pub mod classification {}
#[doc = include_str!("src/lambda.md")]
pub mod lambda {}
#[doc = include_str!("src/growth.md")]
pub mod growth {}
#[doc = include_str!("src/representations.md")]
pub mod representations {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}
