//! Integer arithmetic over sets of primes.
//!
//! A [`PrimeSet`] stands for a set of primes π. Its complement π′ is never
//! materialized; membership in π′ is just `!contains`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `q` accepted anywhere in the crate.
pub const Q_MAX: u64 = (1 << 31) - 1;

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A finite set of primes, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    /// Builds a set from arbitrary input, rejecting non-primes and duplicates.
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        for &p in &v {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        v.sort_unstable();
        let before = v.len();
        v.dedup();
        if v.len() != before {
            return Err(Error::InvalidInput("duplicate prime in π".into()));
        }
        Ok(PrimeSet(v))
    }

    /// Like [`PrimeSet::new`] but silently merges duplicates.
    pub fn from_primes_dedup(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        PrimeSet::new(v)
    }

    pub fn single(p: u64) -> Result<Self> {
        PrimeSet::new([p])
    }

    pub fn primes(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.0.iter().copied().filter(|&p| other.contains(p)).collect())
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let mut v: Vec<u64> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        PrimeSet(v)
    }

    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.0.iter().copied().filter(|&p| !other.contains(p)).collect())
    }

    /// All subsets, in order of the bitmask over the sorted primes.
    pub fn subsets(&self) -> Vec<PrimeSet> {
        let n = self.0.len();
        (0..(1usize << n))
            .map(|mask| {
                PrimeSet(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(s: PrimeSet) -> Vec<u64> {
        s.0
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Parses `"2,3,7"`. Whitespace is tolerated, an empty string is the empty set.
impl FromStr for PrimeSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PrimeSet::empty());
        }
        let mut v = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let n: u64 = part
                .parse()
                .map_err(|_| Error::InvalidInput(format!("`{part}` is not an integer")))?;
            v.push(n);
        }
        PrimeSet::new(v)
    }
}

/// π(n): the primes dividing `n`.
pub fn prime_support(n: u64) -> Result<PrimeSet> {
    if n == 0 {
        return Err(Error::InvalidInput("prime support of 0".into()));
    }
    Ok(PrimeSet(factorize(n).into_iter().map(|(p, _)| p).collect()))
}

/// Prime factorization as `(p, exponent)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// n_π, the largest divisor of `n` whose primes all lie in π.
pub fn pi_part(n: u64, pi: &PrimeSet) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("π-part of 0".into()));
    }
    let mut m = n;
    let mut part = 1;
    for &p in pi.primes() {
        while m % p == 0 {
            m /= p;
            part *= p;
        }
    }
    Ok(part)
}

/// `true` iff π(n) ⊆ π. Panics on `n == 0`.
pub fn is_pi_number(n: u64, pi: &PrimeSet) -> bool {
    assert!(n > 0, "is_pi_number(0)");
    pi_part(n, pi).expect("n > 0") == n
}

/// `true` iff `q` is congruent modulo `modulus` to one of `residues`.
/// Negative residues are reduced into `[0, modulus)` first.
pub fn congruence_in(q: i64, residues: &[i64], modulus: i64) -> bool {
    assert!(modulus >= 2, "modulus must be at least 2");
    let r = q.rem_euclid(modulus);
    residues.iter().any(|&a| a.rem_euclid(modulus) == r)
}

/// Returns `(p, k)` with `q = p^k` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    match factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// The five families of minimal simple groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// L₂(2^p), p prime.
    #[serde(rename = "l2-2p")]
    L2TwoP,
    /// L₂(3^p), p odd prime.
    #[serde(rename = "l2-3p")]
    L2ThreeP,
    /// L₂(p), p > 3 prime with p² + 1 ≡ 0 (mod 5).
    #[serde(rename = "l2-prime")]
    L2Prime,
    /// Sz(2^p), p odd prime.
    #[serde(rename = "sz")]
    Sz,
    /// L₃(3).
    #[serde(rename = "l3-3")]
    L3Three,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::L2TwoP,
        Family::L2ThreeP,
        Family::L2Prime,
        Family::Sz,
        Family::L3Three,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::L2TwoP => "l2-2p",
            Family::L2ThreeP => "l2-3p",
            Family::L2Prime => "l2-prime",
            Family::Sz => "sz",
            Family::L3Three => "l3-3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family `{s}`")))
    }
}

/// A member of the Thompson list: family plus field size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyKey {
    pub family: Family,
    pub q: u64,
}

impl FamilyKey {
    /// Builds a key and validates it. For L₃(3) the given `q` is ignored.
    pub fn new(family: Family, q: u64) -> Result<Self> {
        let q = if family == Family::L3Three { 3 } else { q };
        let key = FamilyKey { family, q };
        match thompson_violation(&key) {
            None => Ok(key),
            Some(reason) => Err(Error::InvalidFamily {
                family: family.name().into(),
                q,
                reason,
            }),
        }
    }

    pub fn l3_3() -> Self {
        FamilyKey {
            family: Family::L3Three,
            q: 3,
        }
    }

    /// `(p, k)` with `q = p^k`.
    pub fn field(&self) -> (u64, u32) {
        prime_power(self.q).expect("validated key has prime-power q")
    }

    /// |S| for the simple group named by this key.
    pub fn simple_order(&self) -> u64 {
        let q = self.q;
        match self.family {
            Family::L2TwoP => q * (q - 1) * (q + 1),
            Family::L2ThreeP | Family::L2Prime => q * (q - 1) * (q + 1) / 2,
            Family::Sz => q * q * (q - 1) * (q * q + 1),
            Family::L3Three => 5616,
        }
    }

    /// |Aut(S) : S|.
    pub fn outer_order(&self) -> u64 {
        match self.family {
            Family::L2TwoP => self.field().1 as u64,
            Family::L2ThreeP => 2 * self.field().1 as u64,
            Family::L2Prime => 2,
            Family::Sz => self.field().1 as u64,
            Family::L3Three => 2,
        }
    }

    /// r = √(2q) for the Suzuki family.
    pub fn suzuki_r(&self) -> Option<u64> {
        if self.family != Family::Sz {
            return None;
        }
        let k = self.field().1;
        Some(1 << ((k + 1) / 2))
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::L2TwoP | Family::L2ThreeP | Family::L2Prime => format!("L2({})", self.q),
            Family::Sz => format!("Sz({})", self.q),
            Family::L3Three => "L3(3)".into(),
        }
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Membership in the Thompson list; never errors.
pub fn thompson_family_check(key: &FamilyKey) -> bool {
    thompson_violation(key).is_none()
}

/// Names the violated condition, if any.
pub fn thompson_violation(key: &FamilyKey) -> Option<String> {
    let q = key.q;
    if key.family == Family::L3Three {
        return None;
    }
    if q < 2 {
        return Some("q must be at least 2".into());
    }
    if q > Q_MAX {
        return Some(format!("q must not exceed {Q_MAX}"));
    }
    let pp = prime_power(q);
    match key.family {
        Family::L2TwoP => match pp {
            Some((2, k)) if is_prime(k as u64) => None,
            _ => Some("q must be 2^p with p prime".into()),
        },
        Family::L2ThreeP => match pp {
            Some((3, k)) if k > 2 && is_prime(k as u64) => None,
            _ => Some("q must be 3^p with p an odd prime".into()),
        },
        Family::L2Prime => {
            if !is_prime(q) {
                Some("q must be prime".into())
            } else if q <= 3 {
                Some("q must exceed 3".into())
            } else if (q * q + 1) % 5 != 0 {
                Some("q^2 + 1 must be divisible by 5".into())
            } else {
                None
            }
        }
        Family::Sz => match pp {
            Some((2, k)) if k > 2 && is_prime(k as u64) => None,
            _ => Some("q must be 2^p with p an odd prime".into()),
        },
        Family::L3Three => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ps(v: &[u64]) -> PrimeSet {
        PrimeSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn support_examples() {
        assert_eq!(prime_support(168).unwrap(), ps(&[2, 3, 7]));
        assert_eq!(prime_support(1).unwrap(), PrimeSet::empty());
        assert_eq!(prime_support(29120).unwrap(), ps(&[2, 5, 7, 13]));
        assert!(prime_support(0).is_err());
    }

    #[test]
    fn pi_part_examples() {
        assert_eq!(pi_part(168, &ps(&[2, 3])).unwrap(), 24);
        assert_eq!(pi_part(63, &ps(&[2])).unwrap(), 1);
        assert_eq!(pi_part(168, &ps(&[2, 3, 7])).unwrap(), 168);
        assert!(pi_part(0, &ps(&[2])).is_err());
    }

    #[test]
    fn pi_number_examples() {
        assert!(is_pi_number(24, &ps(&[2, 3])));
        assert!(is_pi_number(1, &PrimeSet::empty()));
        assert!(!is_pi_number(14, &ps(&[2, 3])));
    }

    #[test]
    fn congruences() {
        assert!(congruence_in(7, &[7, 31], 72));
        assert!(congruence_in(137, &[41], 48));
        assert!(congruence_in(17, &[1, -1], 8));
        assert!(!congruence_in(13, &[1, -1], 8));
    }

    #[test]
    fn thompson_examples() {
        let k = |f, q| FamilyKey { family: f, q };
        assert!(thompson_family_check(&k(Family::L2Prime, 7)));
        assert!(!thompson_family_check(&k(Family::L2Prime, 11)));
        assert!(!thompson_family_check(&k(Family::L2TwoP, 16)));
        assert!(!thompson_family_check(&k(Family::L2ThreeP, 3)));
        assert!(!thompson_family_check(&k(Family::L2ThreeP, 9)));
        assert!(thompson_family_check(&k(Family::L2ThreeP, 27)));
        assert!(thompson_family_check(&k(Family::L2TwoP, 4)));
        assert!(thompson_family_check(&k(Family::Sz, 8)));
        assert!(!thompson_family_check(&k(Family::Sz, 4)));
        assert!(thompson_family_check(&k(Family::L3Three, 3)));
    }

    #[test]
    fn prime_set_parsing() {
        assert_eq!("2,3".parse::<PrimeSet>().unwrap(), ps(&[2, 3]));
        assert_eq!("".parse::<PrimeSet>().unwrap(), PrimeSet::empty());
        assert!("2,2".parse::<PrimeSet>().is_err());
        assert!("2,4".parse::<PrimeSet>().is_err());
        assert!("x".parse::<PrimeSet>().is_err());
    }

    #[test]
    fn orders() {
        let key = FamilyKey::new(Family::Sz, 8).unwrap();
        assert_eq!(key.simple_order(), 29120);
        assert_eq!(key.suzuki_r(), Some(4));
        assert_eq!(FamilyKey::new(Family::L2ThreeP, 27).unwrap().simple_order(), 9828);
    }

    proptest! {
        #[test]
        fn pi_part_splits_n(n in 1u64..100_000, mask in 0u8..32) {
            let all = [2u64, 3, 5, 7, 11];
            let pi = PrimeSet::new(all.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, p)| *p)).unwrap();
            let a = pi_part(n, &pi).unwrap();
            let co = prime_support(n).unwrap().difference(&pi);
            let b = pi_part(n, &co).unwrap();
            prop_assert_eq!(a * b, n);
            prop_assert_eq!(gcd(a, b), 1);
        }

        #[test]
        fn pi_part_multiplicative(a in 1u64..3000, b in 1u64..3000) {
            prop_assume!(gcd(a, b) == 1);
            let pi = ps(&[2, 5, 13]);
            prop_assert_eq!(pi_part(a * b, &pi).unwrap(), pi_part(a, &pi).unwrap() * pi_part(b, &pi).unwrap());
        }

        #[test]
        fn congruence_shift_invariant(q in -1000i64..1000, r in -50i64..50, m in 2i64..100) {
            prop_assert_eq!(congruence_in(q, &[r], m), congruence_in(q, &[r + m], m));
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
}
