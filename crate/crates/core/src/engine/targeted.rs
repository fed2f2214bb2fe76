//! Verification for L₂(q), q prime, without enumerating subgroups: the
//! candidate π-maximal subgroups of Aut(S) = PGL₂(q) are built from the
//! Borel subgroup, the two tori with their dihedral normalizers and S₄, and
//! every claim about them is checked by element streaming and closure tests.

use std::collections::BTreeMap;

use log::debug;

use super::{compare_rows, VerifiedClass, Verdict};
use crate::bsgs::PermGroup;
use crate::classes::sylow_subgroup;
use crate::error::{Error, Result};
use crate::groups::{aut_embedding, borel_generators, EmbeddedSimple};
use crate::oracle::{CaseKey, ClassifyResult};
use crate::perm::Perm;
use crate::pi_arith::{is_pi_number, pi_part, Family, PrimeSet};
use crate::structid::{identify, StructureDescriptor as D};
use crate::subgroup::Subgroup;

/// Elements of p-power order > 1 of the ambient group, per prime, each
/// flagged with membership in S.
type Pools = BTreeMap<u64, Vec<(Perm, bool)>>;

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

fn out_of_budget() -> Verdict {
    Verdict::Inconclusive("targeted search exhausted the step budget".into())
}

/// Whether some π-subgroup of the ambient group properly contains `k`;
/// with `socle_only`, of S instead. `None` when the budget runs out.
///
/// If `L > K` is a π-group then for some p the Sylow p-subgroup P of K is
/// properly contained in one of L, so some p-element `y ∈ N_L(P) \ P` with
/// `y^p ∈ P` exists, lies outside K, and `⟨K, y⟩ ≤ L` is a π-group. Only
/// these `y` are tried.
fn has_pi_overgroup(
    k: &Subgroup,
    group_order: u64,
    pi: &PrimeSet,
    pools: &Pools,
    socle_only: bool,
    budget: &mut u64,
) -> Result<Option<bool>> {
    let cap = pi_part(group_order, pi)?;
    let degree = k.degree();
    for &p in pi.primes() {
        let single = PrimeSet::single(p)?;
        if pi_part(k.order(), &single)? == pi_part(group_order, &single)? {
            continue;
        }
        let Some(pool) = pools.get(&p) else { continue };
        let sylow = sylow_subgroup(&PermGroup::from_generators(degree, k.generators())?, p)?;
        for (y, in_s) in pool {
            if (socle_only && !in_s) || k.contains(y) || !sylow.contains(&y.pow(p)) || !sylow.is_normalized_by(y) {
                continue;
            }
            if *budget == 0 {
                return Ok(None);
            }
            *budget -= 1;
            let mut gens = k.generators().to_vec();
            gens.push(y.clone());
            match Subgroup::generate_capped(degree, &gens, cap) {
                Ok(l) if is_pi_number(l.order(), pi) => return Ok(Some(true)),
                Ok(_) | Err(Error::CapExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Some(false))
}

/// Searches for `S₄ = ⟨a, b⟩` with `|a| = 4`, `|b| = 3`, `(ab)² = 1` that
/// contains `h`, inside S or the ambient group. `None` on budget exhaustion.
fn find_sym4(h: Option<&Subgroup>, pools: &Pools, socle_only: bool, budget: &mut u64) -> Option<Option<Subgroup>> {
    let pick = |p: u64, ord: u64| -> Vec<&Perm> {
        pools
            .get(&p)
            .map(|v| {
                v.iter()
                    .filter(|(x, s)| (!socle_only || *s) && x.order() == ord)
                    .map(|(x, _)| x)
                    .collect()
            })
            .unwrap_or_default()
    };
    let fours = pick(2, 4);
    let threes = pick(3, 3);
    let fixed_a: Option<Perm> = h.and_then(|h| h.elements().iter().find(|x| x.order() == 4).cloned());
    let fixed_b: Option<Perm> = h.and_then(|h| h.elements().iter().find(|x| x.order() == 3).cloned());
    let a_list: Vec<&Perm> = match &fixed_a {
        Some(a) => vec![a],
        None => fours,
    };
    let b_list: Vec<&Perm> = match (&fixed_a, &fixed_b) {
        (None, Some(b)) => vec![b],
        _ => threes,
    };
    for a in &a_list {
        for b in &b_list {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            if !a.mul(b).pow(2).is_identity() {
                continue;
            }
            let m = Subgroup::generate_capped(a.degree(), &[(*a).clone(), (*b).clone()], 24).ok()?;
            if h.map_or(true, |h| h.is_subgroup_of(&m)) {
                return Some(Some(m));
            }
        }
    }
    Some(None)
}

fn intersect_socle(emb: &EmbeddedSimple, k: &Subgroup) -> Subgroup {
    let inside: Vec<Perm> = k.elements().iter().filter(|x| emb.socle.contains(x)).cloned().collect();
    Subgroup::from_element_set(emb.degree(), inside)
}

pub(super) fn verify(case: &CaseKey, oracle: &ClassifyResult, budget: u64) -> Result<(Vec<VerifiedClass>, Verdict)> {
    let key = case.key;
    let pi = &case.pi;
    if key.family != Family::L2Prime {
        return Ok((
            Vec::new(),
            Verdict::Inconclusive(format!("the targeted tier covers L2(q), q prime, only; {key} needs --tier full")),
        ));
    }
    let q = key.q;
    let emb = aut_embedding(key)?;
    let s_order = emb.socle.order();
    let a_order = emb.ambient.order();
    if is_pi_number(s_order, pi) {
        let whole = VerifiedClass {
            descriptor: D::Simple(s_order),
            order: s_order,
            generators: emb.socle.generators().to_vec(),
            class_size: 1,
            orbit: 0,
            pi_maximal: true,
            pronormal: Some(true),
            intravariant: true,
            wh_index: 1,
        };
        let classes = vec![whole];
        let problems = compare_rows(oracle, &classes, pi);
        return Ok((classes, Verdict::from_problems(problems)));
    }
    let mut budget = budget;

    // Pass 1: p-elements for p ∈ π and a generator of the nonsplit torus.
    let rel: Vec<u64> = pi.primes().iter().copied().filter(|&p| a_order % p == 0).collect();
    let mut pools: Pools = rel.iter().map(|&p| (p, Vec::new())).collect();
    let mut nonsplit: Option<Perm> = None;
    emb.ambient.for_each_element(|x| {
        let o = x.order();
        if o == q + 1 && nonsplit.is_none() {
            nonsplit = Some(x.clone());
        }
        if o > 1 {
            for &p in &rel {
                if is_power_of(o, p) {
                    pools.get_mut(&p).unwrap().push((x.clone(), false));
                }
            }
        }
    });
    for pool in pools.values_mut() {
        for (x, in_s) in pool.iter_mut() {
            *in_s = emb.socle.contains(x);
        }
    }
    debug!(
        "pools: {:?}",
        pools.iter().map(|(p, v)| (*p, v.len())).collect::<Vec<_>>()
    );
    let nonsplit = nonsplit.ok_or_else(|| Error::Construction("no element of order q+1".into()))?;
    let (translation, split) = borel_generators(q)?;
    let degree = emb.degree();

    // Candidates for π-maximal subgroups of the ambient group.
    let mut candidates: Vec<Subgroup> = Vec::new();
    let borel_part = pi_part(q - 1, pi)?;
    let mut gens = vec![split.pow((q - 1) / borel_part)];
    if pi.contains(q) {
        gens.push(translation);
    }
    candidates.push(Subgroup::generate(degree, &gens)?);
    for (torus, n) in [(&split, q - 1), (&nonsplit, q + 1)] {
        let m = pi_part(n, pi)?;
        let mut gens = vec![torus.pow(n / m)];
        if pi.contains(2) {
            let inv = torus.inverse();
            let w = pools[&2]
                .iter()
                .map(|(y, _)| y)
                .find(|y| y.order() == 2 && torus.conj(y) == inv)
                .ok_or_else(|| Error::Construction("no involution inverts a torus".into()))?;
            gens.push(w.clone());
        }
        candidates.push(Subgroup::generate(degree, &gens)?);
    }
    if pi.contains(2) && pi.contains(3) {
        match find_sym4(None, &pools, false, &mut budget) {
            None => return Ok((Vec::new(), out_of_budget())),
            Some(Some(m)) => candidates.push(m),
            Some(None) => return Err(Error::Construction("no S4 in PGL2(q)".into())),
        }
    }

    // Keep the π-maximal candidates and intersect them with S.
    let mut found: Vec<(Subgroup, D)> = Vec::new();
    for k in &candidates {
        let Some(over) = has_pi_overgroup(k, a_order, pi, &pools, false, &mut budget)? else {
            return Ok((Vec::new(), out_of_budget()));
        };
        debug!("candidate of order {}: π-maximal in Aut(S) = {}", k.order(), !over);
        if over {
            continue;
        }
        let h = intersect_socle(&emb, k);
        let d = identify(&h);
        if found.iter().all(|(_, e)| *e != d) {
            found.push((h, d));
        }
    }

    // Pass 2: normalizers of the intersections in the ambient group and in S.
    let mut n_a = vec![0u64; found.len()];
    let mut n_s = vec![0u64; found.len()];
    emb.ambient.for_each_element(|x| {
        for (i, (h, _)) in found.iter().enumerate() {
            if h.is_normalized_by(x) {
                n_a[i] += 1;
                if emb.socle.contains(x) {
                    n_s[i] += 1;
                }
            }
        }
    });

    let outer = &emb.outer_reps[0];
    let mut classes = Vec::new();
    let mut orbit = 0;
    for (i, (h, d)) in found.iter().enumerate() {
        let Some(over) = has_pi_overgroup(h, s_order, pi, &pools, true, &mut budget)? else {
            return Ok((Vec::new(), out_of_budget()));
        };
        let intravariant = n_a[i] > n_s[i];
        let class = VerifiedClass {
            descriptor: d.clone(),
            order: h.order(),
            generators: h.generators().to_vec(),
            class_size: s_order / n_s[i],
            orbit,
            pi_maximal: !over,
            pronormal: None,
            intravariant,
            wh_index: n_s[i] / h.order(),
        };
        if !intravariant {
            // The ambient class splits into two S-classes swapped by δ.
            let mut twin = class.clone();
            twin.generators = h.generators().iter().map(|x| x.conj(outer)).collect();
            classes.push(class);
            classes.push(twin);
        } else {
            classes.push(class);
        }
        orbit += 1;
    }

    let mut problems = compare_rows(oracle, &classes, pi);
    for r in &oracle.records {
        let Some(container) = &r.container else { continue };
        let Some((h, _)) = found.iter().find(|(_, d)| *d == r.descriptor) else { continue };
        if *container != D::Sym4 {
            problems.push(format!("no targeted search for containers of shape {container}"));
            continue;
        }
        let m = match find_sym4(Some(h), &pools, true, &mut budget) {
            None => return Ok((classes, out_of_budget())),
            Some(m) => m,
        };
        let ok = match m {
            None => false,
            Some(m) => {
                let hall = m.order() == pi_part(s_order, pi)?;
                hall || matches!(has_pi_overgroup(&m, s_order, pi, &pools, true, &mut budget)?, Some(false))
            }
        };
        if !ok {
            problems.push(format!("{} is not contained in a π-maximal S4", r.descriptor));
        }
    }
    Ok((classes, Verdict::from_problems(problems)))
}
