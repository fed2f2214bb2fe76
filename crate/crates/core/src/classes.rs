//! Conjugacy classes of subgroups: orbit computations, cyclic-extension
//! enumeration of π-subgroups, π-maximality, maximal subgroups, pronormality,
//! Sylow, Fitting and Frattini subgroups, and quotients.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::bsgs::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::pi_arith::{is_pi_number, is_prime, pi_part, prime_support, PrimeSet};
use crate::subgroup::Subgroup;

/// A conjugacy class of subgroups of a parent group, stored as its
/// representative together with one conjugating element per member.
#[derive(Debug, Clone)]
pub struct ConjClass {
    pub representative: Subgroup,
    pub class_size: u64,
    pub normalizer: Subgroup,
    /// `conjugators[i]` carries the representative to the i-th member.
    pub conjugators: Vec<Perm>,
    key_index: HashMap<u64, usize>,
}

impl ConjClass {
    pub fn order(&self) -> u64 {
        self.representative.order()
    }

    /// Whether a subgroup with this key belongs to the class.
    pub fn contains_key(&self, key: u64) -> bool {
        self.key_index.contains_key(&key)
    }

    /// Member keys, in discovery order of the conjugators.
    pub fn keys(&self) -> impl Iterator<Item = u64> + '_ {
        self.key_index.keys().copied()
    }

    /// Element `c` with `representative^c = other`, if `other` is a member.
    pub fn conjugator_to(&self, other: &Subgroup) -> Option<&Perm> {
        self.key_index
            .get(&other.key())
            .map(|&i| &self.conjugators[i])
    }

    pub fn member(&self, i: usize) -> Subgroup {
        self.representative.conjugate(&self.conjugators[i])
    }

    /// Index `|N(H) : H|`.
    pub fn normalizer_index(&self) -> u64 {
        self.normalizer.order() / self.order()
    }
}

/// Orbit of `h` under conjugation by `g`. The normalizer is assembled from
/// Schreier elements of the orbit, so no scan of `g` is needed.
pub fn conjugacy_class(g: &PermGroup, h: Subgroup) -> Result<ConjClass> {
    let id = g.identity();
    let mut conjugators = vec![id];
    let mut key_index = HashMap::new();
    key_index.insert(h.key(), 0usize);
    let mut normalizer = h.clone();
    let mut extra: Vec<Perm> = Vec::new();
    let mut i = 0;
    while i < conjugators.len() {
        for s in g.generators() {
            let cs = conjugators[i].mul(s);
            let k = h.conjugate_key(&cs);
            match key_index.get(&k) {
                Some(&j) => {
                    let n = cs.mul(&conjugators[j].inverse());
                    if !normalizer.contains(&n) {
                        extra.push(n);
                        let mut gens = h.generators().to_vec();
                        gens.extend(extra.iter().cloned());
                        normalizer = Subgroup::generate(g.degree(), &gens)?;
                    }
                }
                None => {
                    key_index.insert(k, conjugators.len());
                    conjugators.push(cs);
                }
            }
        }
        i += 1;
    }
    let class_size = conjugators.len() as u64;
    if class_size * normalizer.order() != g.order() {
        return Err(Error::Construction(format!(
            "orbit-stabilizer failed: {class_size} · {} ≠ {}",
            normalizer.order(),
            g.order()
        )));
    }
    Ok(ConjClass {
        representative: h,
        class_size,
        normalizer,
        conjugators,
        key_index,
    })
}

/// Returns some `c ∈ g` with `h1^c = h2`, or `None`. Isomorphism invariants
/// are compared first.
pub fn are_conjugate(g: &PermGroup, h1: &Subgroup, h2: &Subgroup) -> Result<Option<Perm>> {
    if h1.fingerprint() != h2.fingerprint() {
        return Ok(None);
    }
    let class = conjugacy_class(g, h1.clone())?;
    Ok(class.conjugator_to(h2).cloned())
}

/// Subgroups `⟨H, x⟩ ⊋ H` with `x ∈ N(H)` and `|⟨H,x⟩ : H| = p ∈ π`, one
/// per subgroup, in the sorted order of the first witness `x`.
fn cyclic_extensions(class: &ConjClass, pi: &PrimeSet) -> Vec<Subgroup> {
    let h = &class.representative;
    let n = &class.normalizer;
    let mut covered = vec![false; n.elements().len()];
    let mut out = Vec::new();
    for (i, x) in n.elements().iter().enumerate() {
        if covered[i] || h.contains(x) {
            continue;
        }
        let mut y = x.clone();
        let mut k = 1u64;
        while !h.contains(&y) {
            y = y.mul(x);
            k += 1;
        }
        if !is_prime(k) || !pi.contains(k) {
            continue;
        }
        let ext = h.cyclic_extension(x, k);
        for e in ext.elements() {
            if let Some(j) = n.index_of(e) {
                covered[j] = true;
            }
        }
        out.push(ext);
    }
    out
}

/// Every solvable π-subgroup of `g` up to conjugacy, trivial group first.
///
/// Completeness: a solvable group has a composition series whose factors
/// have prime order, each term normal in the next. Starting from 1 and
/// adjoining, to a class representative `H`, every element of `N(H)` of
/// prime order modulo `H` therefore reaches a conjugate of every solvable
/// π-subgroup. Classes are processed layer by layer (by number of prime
/// factors of the order); candidates are built in parallel and merged in a
/// fixed order, so the output does not depend on scheduling.
pub fn solvable_pi_subgroup_classes(g: &PermGroup, pi: &PrimeSet) -> Result<Vec<ConjClass>> {
    let trivial = Subgroup::trivial(g.degree());
    let mut classes = vec![conjugacy_class(g, trivial)?];
    let mut known: HashMap<u64, usize> = classes[0].keys().map(|k| (k, 0)).collect();
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let candidates: Vec<Vec<Subgroup>> = layer
            .par_iter()
            .map(|&ci| cyclic_extensions(&classes[ci], pi))
            .collect();
        let mut next = Vec::new();
        for k in candidates.into_iter().flatten() {
            if known.contains_key(&k.key()) {
                continue;
            }
            let class = conjugacy_class(g, k)?;
            let idx = classes.len();
            for key in class.keys() {
                known.insert(key, idx);
            }
            classes.push(class);
            next.push(idx);
        }
        log::debug!(
            "cyclic extension: layer of {} classes gives {} new",
            layer.len(),
            next.len()
        );
        layer = next;
    }
    Ok(classes)
}

/// All π-subgroup classes. Requires every π-subgroup of `g` to be solvable;
/// a non-solvable π-group `g` is rejected.
pub fn pi_subgroup_classes(g: &PermGroup, pi: &PrimeSet) -> Result<Vec<ConjClass>> {
    if is_pi_number(g.order(), pi) && !g.materialize()?.is_solvable() {
        return Err(Error::NotSolvable(format!(
            "the group of order {} is a non-solvable π-group for π = {pi}",
            g.order()
        )));
    }
    solvable_pi_subgroup_classes(g, pi)
}

/// Whether some member of `h` lies in `m`.
pub fn contained_up_to_conjugacy(h: &ConjClass, m: &Subgroup) -> bool {
    let mut unlimited = u64::MAX;
    find_conjugate_inside(h, m, &mut unlimited).unwrap_or(None).is_some()
}

/// Searches the members of `h` for one inside `m`, one step per member.
/// Returns `None` when the budget runs out, `Some(None)` when no member
/// fits, and `Some(Some(c))` with `h.representative^c ≤ m` otherwise.
pub fn find_conjugate_inside(h: &ConjClass, m: &Subgroup, budget: &mut u64) -> Option<Option<Perm>> {
    if m.order() % h.order() != 0 {
        return Some(None);
    }
    for c in &h.conjugators {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        if h
            .representative
            .generators()
            .iter()
            .all(|x| m.contains(&x.conj(c)))
        {
            return Some(Some(c.clone()));
        }
    }
    Some(None)
}

/// Indices of the inclusion-maximal classes among `classes`, in decreasing
/// order of subgroup order (ties keep the input order).
///
/// A class is kept unless a conjugate of its representative lies in an
/// already kept class of larger order: anything strictly containing it
/// lies in some maximal element, which has larger order and was examined
/// earlier.
pub fn inclusion_maximal(classes: &[ConjClass]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(classes[i].order()));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        let h = &classes[i];
        let inside = kept.iter().any(|&j| {
            let m = &classes[j];
            m.order() > h.order() && contained_up_to_conjugacy(h, &m.representative)
        });
        if !inside {
            kept.push(i);
        }
    }
    kept
}

/// The classes of π-maximal subgroups (never empty). A π-group is its own
/// unique π-maximal subgroup; otherwise every π-subgroup must be solvable.
pub fn pi_maximal_classes(g: &PermGroup, pi: &PrimeSet) -> Result<Vec<ConjClass>> {
    if is_pi_number(g.order(), pi) {
        let whole = g.materialize()?;
        return Ok(vec![conjugacy_class(g, whole)?]);
    }
    let classes = solvable_pi_subgroup_classes(g, pi)?;
    Ok(select_maximal(classes))
}

fn select_maximal(classes: Vec<ConjClass>) -> Vec<ConjClass> {
    let idx = inclusion_maximal(&classes);
    let mut slots: Vec<Option<ConjClass>> = classes.into_iter().map(Some).collect();
    idx.into_iter().map(|i| slots[i].take().unwrap()).collect()
}

/// Maximal subgroups of a group whose proper subgroups are all solvable.
pub fn maximal_subgroup_classes(g: &PermGroup) -> Result<Vec<ConjClass>> {
    let all = prime_support(g.order())?;
    let classes: Vec<ConjClass> = solvable_pi_subgroup_classes(g, &all)?
        .into_iter()
        .filter(|c| c.order() < g.order())
        .collect();
    Ok(select_maximal(classes))
}

/// Whether `H` and `H^x` are conjugate in `⟨H, H^x⟩` for every `x ∈ g`.
/// `class` must be the `g`-class of `H`.
pub fn is_pronormal(g: &PermGroup, class: &ConjClass) -> Result<bool> {
    let h = &class.representative;
    for c in class.conjugators.iter().skip(1) {
        let h2 = h.conjugate(c);
        let mut gens = h.generators().to_vec();
        gens.extend(h2.generators().iter().cloned());
        let join = PermGroup::from_generators(g.degree(), &gens)?;
        if join.order() == g.order() {
            continue;
        }
        let join = join.materialize()?;
        let found = join
            .elements()
            .iter()
            .any(|l| h.generators().iter().all(|x| h2.contains(&x.conj(l))));
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Sylow p-subgroup, grown one cyclic step at a time inside normalizers.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<Subgroup> {
    let target = pi_part(g.order(), &PrimeSet::single(p)?)?;
    let mut h = Subgroup::trivial(g.degree());
    while h.order() < target {
        let class = conjugacy_class(g, h.clone())?;
        let n = &class.normalizer;
        let x = n
            .elements()
            .iter()
            .find(|x| !h.contains(x) && h.contains(&x.pow(p)))
            .ok_or_else(|| Error::Construction(format!("no p-element normalizes a non-Sylow {p}-subgroup")))?
            .clone();
        h = h.cyclic_extension(&x, p);
    }
    Ok(h)
}

/// `O_p(G)`: the intersection of all Sylow p-subgroups.
pub fn p_core(g: &PermGroup, p: u64) -> Result<Subgroup> {
    let sylow = sylow_subgroup(g, p)?;
    let class = conjugacy_class(g, sylow)?;
    let mut core = class.representative.clone();
    for i in 1..class.conjugators.len() {
        core = core.intersection(&class.member(i));
        if core.order() == 1 {
            break;
        }
    }
    Ok(core)
}

/// `F(G)`, the product of the p-cores.
pub fn fitting_subgroup(g: &PermGroup) -> Result<Subgroup> {
    let mut gens = Vec::new();
    for &p in prime_support(g.order())?.primes() {
        gens.extend(p_core(g, p)?.generators().iter().cloned());
    }
    Subgroup::generate(g.degree(), &gens)
}

/// `Φ(G)`, the intersection of all maximal subgroups.
pub fn frattini_subgroup(g: &PermGroup) -> Result<Subgroup> {
    let mut phi = g.materialize()?;
    for class in maximal_subgroup_classes(g)? {
        for i in 0..class.conjugators.len() {
            phi = phi.intersection(&class.member(i));
        }
    }
    Ok(phi)
}

/// `G/N` acting on the right cosets of `N`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: PermGroup,
    coset_of: HashMap<Perm, usize>,
    reps: Vec<Perm>,
}

impl Quotient {
    /// Image of an element of `G`.
    pub fn image(&self, x: &Perm) -> Perm {
        let images: Vec<usize> = self
            .reps
            .iter()
            .map(|r| self.coset_of[&r.mul(x)])
            .collect();
        Perm::from_images(images).expect("coset action is a permutation")
    }

    /// Image `HN/N` of a subgroup of `G`.
    pub fn image_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        let gens: Vec<Perm> = h.generators().iter().map(|x| self.image(x)).collect();
        Subgroup::generate(self.group.degree(), &gens)
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }
}

pub fn quotient_group(g: &PermGroup, n: &Subgroup) -> Result<Quotient> {
    if !g.generators().iter().all(|x| n.is_normalized_by(x)) {
        return Err(Error::NotNormal);
    }
    let elements = g.elements()?;
    let mut coset_of = HashMap::with_capacity(elements.len());
    let mut reps = Vec::new();
    for x in &elements {
        if coset_of.contains_key(x) {
            continue;
        }
        let idx = reps.len();
        for y in n.elements() {
            coset_of.insert(y.mul(x), idx);
        }
        reps.push(x.clone());
    }
    let mut q = Quotient {
        group: PermGroup::from_generators(reps.len(), &[])?,
        coset_of,
        reps,
    };
    let gens: Vec<Perm> = g.generators().iter().map(|x| q.image(x)).collect();
    q.group = PermGroup::from_generators(q.reps.len(), &gens)?;
    if q.group.order() * n.order() != g.order() {
        return Err(Error::Construction("coset action is not faithful on G/N".into()));
    }
    Ok(q)
}

/// Whether all π-maximal subgroups are conjugate.
pub fn dpi_check(g: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    Ok(pi_maximal_classes(g, pi)?.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, cycles: &[&[&[usize]]]) -> PermGroup {
        let gens: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(n, c).unwrap()).collect();
        PermGroup::from_generators(n, &gens).unwrap()
    }

    fn a4() -> PermGroup {
        group(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])
    }

    fn s4() -> PermGroup {
        group(4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]])
    }

    fn pi(ps: &[u64]) -> PrimeSet {
        PrimeSet::new(ps.to_vec()).unwrap()
    }

    #[test]
    fn a4_subgroup_classes() {
        let classes = pi_subgroup_classes(&a4(), &pi(&[2, 3])).unwrap();
        let mut orders: Vec<u64> = classes.iter().map(|c| c.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 3, 4, 12]);
        let maxes = pi_maximal_classes(&a4(), &pi(&[2, 3])).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].order(), 12);
    }

    #[test]
    fn s4_maximal_subgroups() {
        let maxes = maximal_subgroup_classes(&s4()).unwrap();
        let mut orders: Vec<u64> = maxes.iter().map(|c| c.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![6, 8, 12]);
        // D₈ is self-normalizing, yet not {2}-maximal is impossible: it is Sylow.
        let two = pi_maximal_classes(&s4(), &pi(&[2])).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].order(), 8);
    }

    #[test]
    fn pronormality_controls() {
        let g = a4();
        let c2 = Subgroup::generate(4, &[Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
        assert!(!is_pronormal(&g, &conjugacy_class(&g, c2).unwrap()).unwrap());
        let syl3 = sylow_subgroup(&g, 3).unwrap();
        assert_eq!(syl3.order(), 3);
        assert!(is_pronormal(&g, &conjugacy_class(&g, syl3).unwrap()).unwrap());
    }

    #[test]
    fn fitting_frattini_quotient() {
        let g = a4();
        let f = fitting_subgroup(&g).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(frattini_subgroup(&g).unwrap().order(), 1);
        let q = quotient_group(&g, &f).unwrap();
        assert_eq!(q.group.order(), 3);
        let c4 = group(4, &[&[&[0, 1, 2, 3]]]);
        assert_eq!(frattini_subgroup(&c4).unwrap().order(), 2);
    }

    #[test]
    fn conjugacy_queries() {
        let g = s4();
        let a = Subgroup::generate(4, &[Perm::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        let b = Subgroup::generate(4, &[Perm::from_cycles(4, &[&[2, 3]]).unwrap()]).unwrap();
        let c = Subgroup::generate(4, &[Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
        let x = are_conjugate(&g, &a, &b).unwrap().unwrap();
        assert_eq!(a.conjugate(&x), b);
        assert!(are_conjugate(&g, &a, &c).unwrap().is_none());
    }
}
