//! The narrative guide, mirrored from `book/` so the chapters render with
//! mdbook *and* their code blocks run as doc-tests here. One module per
//! chapter; a failing snippet points straight at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/divisor-sums.md")]
pub mod divisor_sums {}

#[doc = include_str!("../../../book/src/lucas-sequences.md")]
pub mod lucas_sequences {}

#[doc = include_str!("../../../book/src/pell-equations.md")]
pub mod pell_equations {}

#[doc = include_str!("../../../book/src/solving-the-equation.md")]
pub mod solving_the_equation {}

#[doc = include_str!("../../../book/src/sigma3-divisibility.md")]
pub mod sigma3_divisibility {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli_reference {}
