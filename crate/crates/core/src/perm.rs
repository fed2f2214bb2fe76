//! Permutations of `{0, …, n-1}` acting on the right.
//!
//! `images[i]` is the image of `i`. Products compose left to right, so
//! `i^(g*h) = (i^g)^h`, and `h.conj(g)` is `g⁻¹ h g`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= u16::MAX as usize + 1, "degree too large");
        Perm {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    /// Validates that `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        if n > u16::MAX as usize + 1 {
            return Err(Error::MalformedPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::MalformedPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(Error::MalformedPermutation(format!(
                        "bad cycle {cycle:?} for degree {degree}"
                    )));
                }
                touched[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * other`: apply `self` first.
    #[inline]
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g⁻¹ · self · g`.
    #[inline]
    pub fn conj(&self, g: &Perm) -> Perm {
        // i^(g⁻¹ x g): the point i^g' maps to (i^x)^g for every i.
        let mut out = vec![0u16; self.degree()];
        for i in 0..self.degree() {
            out[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Perm {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Lengths of all cycles, including fixed points.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i)
    }

    /// Disjoint cycles of length > 1.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).image(0), 2);
        assert_eq!(a.mul(&a.inverse()), Perm::identity(3));
    }

    #[test]
    fn conjugation_matches_products() {
        let x = Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let g = Perm::from_cycles(5, &[&[0, 3], &[1, 4, 2]]).unwrap();
        assert_eq!(x.conj(&g), g.inverse().mul(&x).mul(&g));
    }

    #[test]
    fn order_and_cycles() {
        let x = Perm::from_cycles(7, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(x.order(), 6);
        assert_eq!(x.pow(6), Perm::identity(7));
        assert_eq!(x.to_string(), "(0 1 2)(3 4)");
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }
}
