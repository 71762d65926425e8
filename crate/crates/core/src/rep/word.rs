//! Generators and words of the alternate presentation.
//!
//! A word `g_1 g_2 … g_m` acts on the polynomial representation with the
//! rightmost generator first.

use std::fmt;

use crate::error::{CoreError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    T(usize),
    U(usize),
    /// The transposition (i, i+1).
    Swap(usize),
    Sigma,
    Tau,
}

impl Gen {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            Gen::T(i) | Gen::U(i) if !(1..=n).contains(&i) => {
                Err(CoreError::IndexOutOfRange { index: i as i64, max: n as i64 })
            }
            Gen::Swap(i) if !(1..n).contains(&i) => {
                Err(CoreError::IndexOutOfRange { index: i as i64, max: n as i64 - 1 })
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T(i) => write!(f, "t{i}"),
            Gen::U(i) => write!(f, "u{i}"),
            Gen::Swap(i) => write!(f, "s{i}"),
            Gen::Sigma => write!(f, "sig"),
            Gen::Tau => write!(f, "tau"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn of(gens: &[Gen]) -> Word {
        Word(gens.to_vec())
    }

    /// Word product: `self` acts after `other`.
    pub fn then(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, e: usize) -> Word {
        Word(self.0.iter().copied().cycle().take(self.0.len() * e).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|g| g.validate(n))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// The cycle `(i, i-1, …, 1)` = `s_{i-1} s_{i-2} … s_1`.
pub fn cycle_down_to_one(i: usize) -> Word {
    Word((1..i).rev().map(Gen::Swap).collect())
}

/// The cycle `(n, n-1, …, i)` = `s_{n-1} s_{n-2} … s_i`.
pub fn cycle_down_from_n(n: usize, i: usize) -> Word {
    Word((i..n).rev().map(Gen::Swap).collect())
}

/// The cycle `(i, i+1, …, n)` = `s_i s_{i+1} … s_{n-1}`.
pub fn cycle_up_to_n(n: usize, i: usize) -> Word {
    Word((i..n).map(Gen::Swap).collect())
}

/// The cycle `(1, 2, …, i)` = `s_1 s_2 … s_{i-1}`.
pub fn cycle_up_from_one(i: usize) -> Word {
    Word((1..i).map(Gen::Swap).collect())
}

/// The transposition `(i j)` as a palindromic word in adjacent swaps.
pub fn transposition(i: usize, j: usize) -> Word {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    let mut v: Vec<Gen> = (a..b).map(Gen::Swap).collect();
    v.extend((a..b - 1).rev().map(Gen::Swap));
    Word(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StdKind {
    X,
    Y,
}

/// `x_i = (i,…,1) σ (n,…,i)` and `y_i = (i,…,n) τ (1,…,i)`.
pub fn standard_gen_word(kind: StdKind, i: usize, n: usize) -> Result<Word> {
    if !(1..=n).contains(&i) {
        return Err(CoreError::IndexOutOfRange { index: i as i64, max: n as i64 });
    }
    Ok(match kind {
        StdKind::X => cycle_down_to_one(i).then(&Word::of(&[Gen::Sigma])).then(&cycle_down_from_n(n, i)),
        StdKind::Y => cycle_up_to_n(n, i).then(&Word::of(&[Gen::Tau])).then(&cycle_up_from_one(i)),
    })
}
