//! Finitely presented groups: words, presentations, abelianization.

mod abelian;
mod presentation;
mod snf;
mod tietze;
mod word;

pub use abelian::{AbelianTag, AbelianType};
pub use presentation::Presentation;
pub use snf::{smith_normal_form, IntMatrix, Snf};
pub use tietze::tietze_simplify;
pub use word::{Letter, Word};
