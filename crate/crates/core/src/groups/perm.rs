//! Permutations of `{1..n}`, stored 0-based as image lists.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// From 1-based images: `images[j-1] = w(j)`.
    pub fn from_images(images: &[usize]) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Some(Perm(out))
    }

    /// The transposition `(i, j)` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, j - 1);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(j)` for 1-based j.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j - 1] + 1
    }

    /// `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (j, &w) in self.0.iter().enumerate() {
            v[w] = j;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &w)| j == w)
    }

    /// Move entries to the image positions: `out[w(j)] = v[j]`.
    pub fn permute_vec<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (j, x) in v.iter().enumerate() {
            out[self.0[j]] = x.clone();
        }
        out
    }

    /// All permutations of `{1..n}` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if prefix.len() == used.len() {
                out.push(Perm(prefix.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Perm::from_images(&[2, 3, 1]).unwrap();
        let b = Perm::transposition(3, 1, 2);
        assert_eq!(a.compose(&b).apply(1), a.apply(b.apply(1)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(Perm::all(4).len(), 24);
        assert!(Perm::from_images(&[1, 1]).is_none());
    }

    #[test]
    fn permute_vec_moves_to_images() {
        let a = Perm::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(a.permute_vec(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }
}
