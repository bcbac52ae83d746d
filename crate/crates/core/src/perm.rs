//! Permutations of the port alphabet `{0, ..., n+1}`.
//!
//! Gluings are odd permutations, vertex rotations are even ones. Composition
//! follows the usual convention: `(a.compose(&b))(x) = a(b(x))`.

use std::fmt;

use crate::error::PermError;

/// The sign of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A permutation of the port alphabet, stored as its one-line image.
///
/// For spatial dimension `n` the alphabet has `n + 2` letters, so
/// `size() == n + 2` and `dim() == n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    img: Vec<u8>,
}

impl Permutation {
    /// Identity on the `n + 2`-letter alphabet.
    pub fn identity(dim: u8) -> Self {
        Permutation {
            img: (0..dim + 2).collect(),
        }
    }

    /// The transposition `s_ij`.
    pub fn transposition(dim: u8, i: u8, j: u8) -> Self {
        assert!(i != j && i < dim + 2 && j < dim + 2, "bad transposition");
        let mut img: Vec<u8> = (0..dim + 2).collect();
        img.swap(i as usize, j as usize);
        Permutation { img }
    }

    /// Builds a permutation from its one-line image; rejects non-bijections.
    pub fn from_images(img: Vec<u8>) -> Result<Self, PermError> {
        if img.len() < 3 {
            return Err(PermError::BadSize(img.len()));
        }
        let mut seen = vec![false; img.len()];
        for &x in &img {
            if (x as usize) >= img.len() || seen[x as usize] {
                return Err(PermError::NotABijection);
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { img })
    }

    pub fn size(&self) -> u8 {
        self.img.len() as u8
    }

    pub fn dim(&self) -> u8 {
        self.img.len() as u8 - 2
    }

    pub fn apply(&self, p: u8) -> u8 {
        self.img[p as usize]
    }

    pub fn images(&self) -> &[u8] {
        &self.img
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.img.len(), other.img.len(), "alphabet mismatch");
        Permutation {
            img: other.img.iter().map(|&x| self.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u8;
        }
        Permutation { img }
    }

    pub fn parity(&self) -> Parity {
        let mut seen = vec![false; self.img.len()];
        let mut transpositions = 0usize;
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Parity::Odd
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    /// Image of a port set under the permutation.
    pub fn apply_set(&self, ports: impl IntoIterator<Item = u8>) -> Vec<u8> {
        let mut out: Vec<u8> = ports.into_iter().map(|p| self.apply(p)).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm{:?}", self.img)
    }
}

impl fmt::Display for Permutation {
    /// Short form: `id`, `s_ij` for transpositions, one-line image otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let moved: Vec<u8> = (0..self.size()).filter(|&p| self.apply(p) != p).collect();
        if moved.len() == 2 {
            return write!(f, "s{}{}", moved[0], moved[1]);
        }
        let strs: Vec<String> = self.img.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", strs.join(" "))
    }
}

fn generate_all(dim: u8) -> Vec<Permutation> {
    let size = (dim + 2) as usize;
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..size as u8).collect();
    permute_rec(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute_rec(current: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k == current.len() {
        out.push(Permutation {
            img: current.clone(),
        });
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute_rec(current, k + 1, out);
        current.swap(k, i);
    }
}

/// All permutations of the dimension-`n` port alphabet, sorted.
pub fn all_perms(dim: u8) -> Vec<Permutation> {
    generate_all(dim)
}

/// The `(n+2)!/2` even permutations (rotations).
pub fn even_perms(dim: u8) -> Vec<Permutation> {
    generate_all(dim).into_iter().filter(|p| p.is_even()).collect()
}

/// The `(n+2)!/2` odd permutations (gluings).
pub fn odd_perms(dim: u8) -> Vec<Permutation> {
    generate_all(dim).into_iter().filter(|p| p.is_odd()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn transposition_is_odd() {
        for n in 1..=3u8 {
            for i in 0..n + 2 {
                for j in (i + 1)..n + 2 {
                    assert!(Permutation::transposition(n, i, j).is_odd());
                }
            }
        }
    }

    #[test]
    fn gluing_count_matches_half_factorial() {
        // (n+2)!/2 odd permutations of the alphabet
        let fact = |k: usize| (1..=k).product::<usize>();
        for n in 1..=3u8 {
            assert_eq!(odd_perms(n).len(), fact((n + 2) as usize) / 2);
            assert_eq!(even_perms(n).len(), fact((n + 2) as usize) / 2);
        }
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::transposition(2, 0, 1);
        let b = Permutation::transposition(2, 1, 2);
        let c = a.compose(&b);
        // b: 1 -> 2 then a: 2 -> 2
        assert_eq!(c.apply(1), 2);
        // b: 2 -> 1 then a: 1 -> 0
        assert_eq!(c.apply(2), 0);
    }

    #[test]
    fn display_short_forms() {
        assert_eq!(Permutation::identity(1).to_string(), "id");
        assert_eq!(Permutation::transposition(2, 0, 1).to_string(), "s01");
        let cyc = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(cyc.to_string(), "[1 2 0]");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1, 5]).is_err());
    }

    proptest! {
        #[test]
        fn parity_is_multiplicative(a in 0..120usize, b in 0..120usize) {
            let perms = all_perms(3);
            let pa = &perms[a % perms.len()];
            let pb = &perms[b % perms.len()];
            let even = |p: &Permutation| p.is_even();
            prop_assert_eq!(even(&pa.compose(pb)), even(pa) == even(pb));
        }

        #[test]
        fn inverse_cancels(a in 0..120usize) {
            let perms = all_perms(3);
            let p = &perms[a % perms.len()];
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(p).is_identity());
        }
    }
}
