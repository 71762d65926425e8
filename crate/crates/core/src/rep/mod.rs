pub mod action;
pub mod element;
pub mod projectors;
pub mod relations;
pub mod word;

pub use action::{act_gen, act_word};
pub use element::{PolyRepElement, TExp};
pub use word::{standard_gen_word, Gen, StdKind, Word};
