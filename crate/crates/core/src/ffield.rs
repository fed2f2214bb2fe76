//! Finite fields GF(p^k) in a polynomial basis.
//!
//! Fields here are tiny (at most a few thousand elements), so elements are
//! plain coefficient vectors and every operation reduces eagerly.

use crate::error::{Error, Result};
use crate::pi_arith::{factorize, is_prime};

/// GF(p^k) given by a monic irreducible modulus of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    /// Coefficients low degree first, length `k + 1`, leading coefficient 1.
    modulus: Vec<u64>,
}

/// A field element: `k` coefficients over GF(p), low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl FieldSpec {
    /// GF(p^k) with the least monic irreducible modulus, ordering candidates
    /// by their lower coefficients read as a base-p number (constant term
    /// least significant).
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidInput("field degree must be positive".into()));
        }
        match p.checked_pow(k) {
            Some(size) if size <= 1 << 31 => {}
            _ => {
                return Err(Error::CapExceeded {
                    cap: "field size",
                    value: u64::MAX,
                    limit: 1 << 31,
                })
            }
        }
        let size = p.pow(k);
        // Candidates in increasing order of Σ cᵢ pⁱ over the lower coefficients,
        // i.e. the highest non-leading coefficient is the most significant.
        for n in 0..size {
            let mut modulus = Vec::with_capacity(k as usize + 1);
            let mut m = n;
            for _ in 0..k {
                modulus.push(m % p);
                m /= p;
            }
            modulus.push(1);
            if is_irreducible(&modulus, p) {
                return Ok(FieldSpec { p, k, modulus });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under Z → GF(p).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(self.p as i64) as u64;
        e
    }

    /// Canonical index Σ cᵢ pⁱ in `[0, p^k)`.
    pub fn index(&self, a: &FieldElement) -> usize {
        a.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c) as usize
    }

    pub fn element(&self, mut index: usize) -> FieldElement {
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = index as u64 % self.p;
            index /= self.p as usize;
        }
        e
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.size() as usize).map(|i| self.element(i)).collect()
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + (p - c) * m) % p;
            }
        }
        prod.truncate(k);
        FieldElement { coeffs: prod }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.size() - 2))
    }

    /// a ↦ a^(p^e).
    pub fn frobenius(&self, a: &FieldElement, e: u32) -> FieldElement {
        let mut x = a.clone();
        for _ in 0..(e % self.k) {
            x = self.pow(&x, self.p);
        }
        x
    }

    /// The Suzuki twist a ↦ a^(2^((k+1)/2)) on GF(2^k), k odd; applying it
    /// twice squares.
    pub fn suzuki_twist(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.p != 2 || self.k % 2 == 0 || self.k < 3 {
            return Err(Error::InvalidInput(
                "Suzuki twist needs GF(2^k) with k odd and at least 3".into(),
            ));
        }
        Ok(self.frobenius(a, (self.k + 1) / 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        let mut n = self.size() - 1;
        for (r, _) in factorize(self.size() - 1) {
            while n % r == 0 && self.pow(a, n / r) == self.one() {
                n /= r;
            }
        }
        Ok(n)
    }

    /// The first primitive element in canonical index order.
    pub fn generator(&self) -> FieldElement {
        let target = self.size() - 1;
        (1..self.size() as usize)
            .map(|i| self.element(i))
            .find(|a| self.multiplicative_order(a).unwrap() == target)
            .expect("multiplicative group of a finite field is cyclic")
    }
}

/// Monic `f` over GF(p) is irreducible iff no monic factor of degree ≤ deg/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for n in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut m = n;
            for _ in 0..d {
                g.push(m % p);
                m /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` by monic `g` over GF(p).
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (i, &gc) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * gc) % p;
            }
        }
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(7, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldSpec::new(3, 3).unwrap().modulus(), &[1, 2, 0, 1]);
        assert!(FieldSpec::new(4, 1).is_err());
    }

    /// Exhaustive scan of monic cubics over GF(2), roots only (a cubic is
    /// irreducible iff it has no root).
    #[test]
    fn gf8_modulus_matches_root_scan() {
        let mut irreducible = Vec::new();
        for c in 0..8u64 {
            let (c0, c1, c2) = (c & 1, (c >> 1) & 1, (c >> 2) & 1);
            let has_root = (0..2u64).any(|x| (c0 + c1 * x + c2 * x * x + x * x * x) % 2 == 0);
            if !has_root {
                irreducible.push(vec![c0, c1, c2, 1]);
            }
        }
        irreducible.sort_by_key(|v| (v[2], v[1], v[0]));
        assert_eq!(irreducible[0], vec![1, 1, 0, 1]);
    }

    #[test]
    fn basic_arithmetic() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.inv(&f7.from_int(3)).unwrap(), f7.from_int(5));
        assert_eq!(f7.inv(&f7.one()).unwrap(), f7.one());
        assert!(f7.inv(&f7.zero()).is_err());

        let f8 = FieldSpec::new(2, 3).unwrap();
        let g = f8.generator();
        assert_eq!(f8.mul(&g, &f8.pow(&g, 6)), f8.one());
        assert_eq!(f8.frobenius(&g, 3), g);
        assert_eq!(f8.frobenius(&g, 0), g);
        assert_eq!(f8.frobenius(&f8.zero(), 2), f8.zero());
    }

    #[test]
    fn fermat_and_cyclic() {
        for (p, k) in [(2, 2), (2, 3), (2, 5), (3, 3), (5, 1), (13, 1)] {
            let f = FieldSpec::new(p, k).unwrap();
            let q = f.size();
            for a in f.elements().iter().filter(|a| !f.is_zero(a)) {
                assert_eq!(f.pow(a, q - 1), f.one());
            }
            assert_eq!(f.multiplicative_order(&f.generator()).unwrap(), q - 1);
        }
    }

    #[test]
    fn distributivity_exhaustive() {
        for (p, k) in [(2, 3), (3, 2), (2, 4), (7, 1)] {
            let f = FieldSpec::new(p, k).unwrap();
            let els = f.elements();
            for a in &els {
                for b in &els {
                    for c in &els {
                        let lhs = f.mul(a, &f.add(b, c));
                        let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn twist_is_automorphism_squaring_to_frobenius() {
        for k in [3, 5] {
            let f = FieldSpec::new(2, k).unwrap();
            let els = f.elements();
            for a in &els {
                let ta = f.suzuki_twist(a).unwrap();
                assert_eq!(f.suzuki_twist(&ta).unwrap(), f.mul(a, a));
                for b in &els {
                    let tb = f.suzuki_twist(b).unwrap();
                    assert_eq!(f.suzuki_twist(&f.mul(a, b)).unwrap(), f.mul(&ta, &tb));
                    assert_eq!(f.suzuki_twist(&f.add(a, b)).unwrap(), f.add(&ta, &tb));
                }
            }
        }
        let f8 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f8.suzuki_twist(&f8.zero()).unwrap(), f8.zero());
        assert_eq!(f8.suzuki_twist(&f8.one()).unwrap(), f8.one());
        let g = f8.generator();
        assert_eq!(f8.suzuki_twist(&g).unwrap(), f8.pow(&g, 4));
        assert!(FieldSpec::new(2, 4).unwrap().suzuki_twist(&g).is_err());
    }

    #[test]
    fn index_roundtrip() {
        let f = FieldSpec::new(3, 3).unwrap();
        for i in 0..27 {
            assert_eq!(f.index(&f.element(i)), i);
        }
    }
}
