//! Explicit subgroups: a generating set plus the sorted list of elements.

use std::collections::{BTreeMap, HashSet};
use std::hash::{Hash, Hasher};

use crate::bsgs::{element_cap, orbit_lengths};
use crate::error::{Error, Result};
use crate::perm::{lcm, Perm};

/// A materialized permutation group. Elements are kept sorted so that
/// membership is a binary search and equality of subgroups is equality of
/// element lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
}

/// Isomorphism invariants used to rule out conjugacy cheaply.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: u64,
    pub histogram: Vec<(u64, u64)>,
    pub orbit_lengths: Vec<usize>,
    pub abelian: bool,
}

impl Subgroup {
    pub fn trivial(degree: usize) -> Subgroup {
        Subgroup {
            degree,
            gens: Vec::new(),
            elements: vec![Perm::identity(degree)],
        }
    }

    /// Trusts the caller that `elements` is a sorted group generated by `gens`.
    pub fn from_sorted_unchecked(gens: Vec<Perm>, elements: Vec<Perm>, degree: usize) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            degree,
            gens,
            elements,
        }
    }

    /// Closure of `gens` under multiplication, subject to the element cap.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Subgroup> {
        Self::generate_capped(degree, gens, element_cap())
    }

    pub fn generate_capped(degree: usize, gens: &[Perm], cap: u64) -> Result<Subgroup> {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for s in &gens {
                let y = list[i].mul(s);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    list.push(y);
                    if list.len() as u64 > cap {
                        return Err(Error::CapExceeded {
                            cap: "materialization",
                            value: list.len() as u64,
                            limit: cap,
                        });
                    }
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Ok(Subgroup {
            degree,
            gens,
            elements: list,
        })
    }

    /// Subgroup formed by an explicit element set already known to be closed.
    /// A small generating set is chosen greedily.
    pub fn from_element_set(degree: usize, mut elements: Vec<Perm>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        let gens = greedy_generators(degree, &elements);
        Subgroup {
            degree,
            gens,
            elements,
        }
    }

    /// `⟨self, x⟩` when `x` normalizes `self` and `x^p ∈ self` for the
    /// given prime `p`: the union of the cosets `self·x^i`, `0 ≤ i < p`.
    pub fn cyclic_extension(&self, x: &Perm, p: u64) -> Subgroup {
        let mut elements = Vec::with_capacity(self.elements.len() * p as usize);
        let mut xi = Perm::identity(self.degree);
        for _ in 0..p {
            elements.extend(self.elements.iter().map(|h| h.mul(&xi)));
            xi = xi.mul(x);
        }
        elements.sort_unstable();
        let mut gens = self.gens.clone();
        gens.push(x.clone());
        Subgroup {
            degree: self.degree,
            gens,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// `self^g = g⁻¹ self g`.
    pub fn conjugate(&self, g: &Perm) -> Subgroup {
        let mut elements: Vec<Perm> = self.elements.iter().map(|h| h.conj(g)).collect();
        elements.sort_unstable();
        Subgroup {
            degree: self.degree,
            gens: self.gens.iter().map(|h| h.conj(g)).collect(),
            elements,
        }
    }

    /// Whether `g` normalizes `self`.
    pub fn is_normalized_by(&self, g: &Perm) -> bool {
        self.gens.iter().all(|h| self.contains(&h.conj(g)))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elements: Vec<Perm> = small
            .elements
            .iter()
            .filter(|g| big.contains(g))
            .cloned()
            .collect();
        Subgroup::from_element_set(self.degree, elements)
    }

    /// Order-independent hash of the element set; equal subgroups have equal
    /// keys.
    pub fn key(&self) -> u64 {
        key_of_sorted(&self.elements)
    }

    /// Key of `self^g` without building the subgroup.
    pub fn conjugate_key(&self, g: &Perm) -> u64 {
        let mut elements: Vec<Perm> = self.elements.iter().map(|h| h.conj(g)).collect();
        elements.sort_unstable();
        key_of_sorted(&elements)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, g| lcm(acc, g.order()))
    }

    /// Element order → number of elements of that order.
    pub fn element_order_histogram(&self) -> BTreeMap<u64, u64> {
        let mut hist = BTreeMap::new();
        for g in &self.elements {
            *hist.entry(g.order()).or_insert(0) += 1;
        }
        hist
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.order(),
            histogram: self.element_order_histogram().into_iter().collect(),
            orbit_lengths: orbit_lengths(self.degree, &self.gens),
            abelian: self.is_abelian(),
        }
    }

    pub fn center(&self) -> Subgroup {
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|z| self.gens.iter().all(|g| z.mul(g) == g.mul(z)))
            .cloned()
            .collect();
        Subgroup::from_element_set(self.degree, elements)
    }

    /// Centralizer in `self` of the given elements.
    pub fn centralizer_of(&self, xs: &[Perm]) -> Subgroup {
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|z| xs.iter().all(|g| z.mul(g) == g.mul(z)))
            .cloned()
            .collect();
        Subgroup::from_element_set(self.degree, elements)
    }

    /// Normalizer in `self` of a subgroup `h` (by scanning `self`).
    pub fn normalizer_of(&self, h: &Subgroup) -> Subgroup {
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| h.is_normalized_by(g))
            .cloned()
            .collect();
        Subgroup::from_element_set(self.degree, elements)
    }

    /// Normal closure of commutators of generators.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Smallest normal subgroup of `self` containing `xs`.
    pub fn normal_closure(&self, xs: &[Perm]) -> Subgroup {
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = Subgroup::trivial(self.degree);
        let mut queue: Vec<Perm> = xs.to_vec();
        while let Some(x) = queue.pop() {
            if current.contains(&x) {
                continue;
            }
            gens.push(x);
            current = Subgroup::generate_capped(self.degree, &gens, u64::MAX)
                .expect("subgroup of a materialized group");
            for y in &gens {
                for g in &self.gens {
                    let z = y.conj(g);
                    if !current.contains(&z) {
                        queue.push(z);
                    }
                }
            }
        }
        current
    }

    pub fn is_solvable(&self) -> bool {
        let mut h = self.clone();
        loop {
            if h.order() == 1 {
                return true;
            }
            let d = h.derived_subgroup();
            if d.order() == h.order() {
                return false;
            }
            h = d;
        }
    }

    pub fn is_normal_in(&self, g: &Subgroup) -> bool {
        g.gens.iter().all(|x| self.is_normalized_by(x))
    }
}

/// Greedy small generating set for a closed element list.
pub fn greedy_generators(degree: usize, elements: &[Perm]) -> Vec<Perm> {
    let mut gens = Vec::new();
    let mut current: HashSet<Perm> = HashSet::new();
    current.insert(Perm::identity(degree));
    // Visiting large-order elements first keeps the list short.
    let mut by_order: Vec<&Perm> = elements.iter().collect();
    by_order.sort_by_key(|g| std::cmp::Reverse(g.order()));
    for g in by_order {
        if current.len() == elements.len() {
            break;
        }
        if current.contains(g) {
            continue;
        }
        gens.push(g.clone());
        let closure = Subgroup::generate_capped(degree, &gens, u64::MAX).expect("closed set");
        current = closure.elements.into_iter().collect();
    }
    gens
}

pub fn key_of_sorted(elements: &[Perm]) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    elements.len().hash(&mut h);
    for g in elements {
        g.hash(&mut h);
    }
    h.finish()
}
