//! Ground truth by brute force: π-submaximal subgroups of a simple group
//! computed from the π-maximal subgroups of its automorphism group, and the
//! comparison against the symbolic classification.

mod targeted;

use std::fmt;
use std::time::Instant;

use log::{debug, info};
use serde::{Deserialize, Serialize};

use crate::bsgs::{element_cap, PermGroup};
use crate::classes::{
    conjugacy_class, find_conjugate_inside, fitting_subgroup, is_pronormal, maximal_subgroup_classes,
    pi_maximal_classes, quotient_group, ConjClass,
};
use crate::error::{Error, Result};
use crate::groups::{aut_embedding, is_simple, EmbeddedSimple};
use crate::oracle::{classify, maximal_subgroups_table, AutAction, CaseKey, ClassifyResult, MaxRow};
use crate::perm::Perm;
use crate::pi_arith::{is_pi_number, Family, FamilyKey, PrimeSet};
use crate::structid::{identify, isomorphism, StructureDescriptor as D};
use crate::subgroup::Subgroup;

/// Default step budget for containment searches.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// Enumerate every π-subgroup class of Aut(S).
    Full,
    /// Construct the predicted subgroups directly (large L₂(q), q prime).
    Targeted,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Full => "full",
            Tier::Targeted => "targeted",
        })
    }
}

impl std::str::FromStr for Tier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tier> {
        match s {
            "full" => Ok(Tier::Full),
            "targeted" => Ok(Tier::Targeted),
            _ => Err(Error::InvalidInput(format!("unknown tier {s:?} (expected full or targeted)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch(Vec<String>),
    /// A resource limit (element cap or step budget) stopped the check.
    Inconclusive(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch(_) => "MISMATCH",
            Verdict::Inconclusive(_) => "INCONCLUSIVE",
        }
    }

    pub fn details(&self) -> Vec<String> {
        match self {
            Verdict::Match => Vec::new(),
            Verdict::Mismatch(d) => d.clone(),
            Verdict::Inconclusive(r) => vec![r.clone()],
        }
    }

    pub fn is_match(&self) -> bool {
        *self == Verdict::Match
    }

    fn from_problems(problems: Vec<String>) -> Verdict {
        if problems.is_empty() {
            Verdict::Match
        } else {
            Verdict::Mismatch(problems)
        }
    }
}

/// One S-class of π-submaximal subgroups as found by the engine.
#[derive(Debug, Clone)]
pub struct VerifiedClass {
    pub descriptor: D,
    pub order: u64,
    pub generators: Vec<Perm>,
    pub class_size: u64,
    /// Index of the orbit of Out(S) on the classes.
    pub orbit: usize,
    pub pi_maximal: bool,
    /// `None` when the tier does not check pronormality.
    pub pronormal: Option<bool>,
    pub intravariant: bool,
    /// `|N_S(H) : H|`.
    pub wh_index: u64,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub case: CaseKey,
    pub tier: Tier,
    pub oracle: ClassifyResult,
    pub classes: Vec<VerifiedClass>,
    pub verdict: Verdict,
    pub elapsed_ms: u128,
}

/// Classes of a group acted on by outer automorphisms: the orbit index of
/// each class and whether it is fixed by every outer representative.
fn outer_orbits(classes: &[ConjClass], outer: &[Perm]) -> Result<(Vec<usize>, Vec<bool>)> {
    let n = classes.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut fixed = vec![true; n];
    for (i, c) in classes.iter().enumerate() {
        for o in outer {
            let k = c.representative.conjugate_key(o);
            let j = classes
                .iter()
                .position(|d| d.contains_key(k))
                .ok_or_else(|| Error::Construction("class set is not closed under outer automorphisms".into()))?;
            if j != i {
                fixed[i] = false;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut orbit = vec![0; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        orbit[i] = label[r];
    }
    Ok((orbit, fixed))
}

/// The engine's π-submaximal classes together with their S-classes.
pub struct Submaximal {
    pub classes: Vec<VerifiedClass>,
    /// S-classes, parallel to `classes` (empty when S itself is a π-group).
    pub conj: Vec<ConjClass>,
    /// π-maximal classes of S (empty when S itself is a π-group).
    pub socle_maximal: Vec<ConjClass>,
}

/// π-submaximal subgroups of S: the intersections `S ∩ K^o` with `K` ranging
/// over π-maximal class representatives of the ambient group and `o` over a
/// transversal of S in it, up to S-conjugacy.
pub fn submaximal_classes(emb: &EmbeddedSimple, pi: &PrimeSet) -> Result<Submaximal> {
    let s_order = emb.socle.order();
    if is_pi_number(s_order, pi) {
        return Ok(Submaximal {
            classes: vec![VerifiedClass {
                descriptor: D::Simple(s_order),
                order: s_order,
                generators: emb.socle.generators().to_vec(),
                class_size: 1,
                orbit: 0,
                pi_maximal: true,
                pronormal: Some(true),
                intravariant: true,
                wh_index: 1,
            }],
            conj: Vec::new(),
            socle_maximal: Vec::new(),
        });
    }
    let degree = emb.degree();
    let ambient_max = pi_maximal_classes(&emb.ambient, pi)?;
    debug!("{} π-maximal classes in the ambient group", ambient_max.len());
    let transversal = emb.coset_transversal();
    let mut conj: Vec<ConjClass> = Vec::new();
    for k in &ambient_max {
        for o in &transversal {
            let ko = k.representative.conjugate(o);
            let inside: Vec<Perm> = ko.elements().iter().filter(|x| emb.socle.contains(x)).cloned().collect();
            let h = Subgroup::from_element_set(degree, inside);
            if conj.iter().any(|c| c.contains_key(h.key())) {
                continue;
            }
            conj.push(conjugacy_class(&emb.socle, h)?);
        }
    }
    conj.sort_by_key(|c| std::cmp::Reverse(c.order()));
    let socle_maximal = pi_maximal_classes(&emb.socle, pi)?;
    let (orbit, fixed) = outer_orbits(&conj, &emb.outer_reps)?;
    let mut classes = Vec::with_capacity(conj.len());
    for (i, c) in conj.iter().enumerate() {
        let h = &c.representative;
        classes.push(VerifiedClass {
            descriptor: identify(h),
            order: h.order(),
            generators: h.generators().to_vec(),
            class_size: c.class_size,
            orbit: orbit[i],
            pi_maximal: socle_maximal.iter().any(|m| m.contains_key(h.key())),
            pronormal: Some(is_pronormal(&emb.socle, c)?),
            intravariant: fixed[i],
            wh_index: c.normalizer_index(),
        });
    }
    Ok(Submaximal {
        classes,
        conj,
        socle_maximal,
    })
}

/// A comparable row: (descriptor, ncc, action, π-maximal, pronormal, intravariant).
type Row = (D, u64, AutAction, bool, Option<bool>, bool);

fn row_text(r: &Row) -> String {
    let pron = match r.4 {
        Some(true) => "pronormal",
        Some(false) => "NOT pronormal",
        None => "pronormality unchecked",
    };
    format!(
        "{} ×{} ({}), {}, {}, {}",
        r.0,
        r.1,
        match r.2 {
            AutAction::Invariant => "invariant",
            AutAction::FusedByOuter => "fused by outer",
        },
        if r.3 { "π-maximal" } else { "not π-maximal" },
        pron,
        if r.5 { "intravariant" } else { "not intravariant" }
    )
}

/// Engine classes grouped into Out(S)-orbits, as table rows.
fn engine_rows(classes: &[VerifiedClass]) -> Vec<Row> {
    let norbits = classes.iter().map(|c| c.orbit + 1).max().unwrap_or(0);
    (0..norbits)
        .map(|o| {
            let members: Vec<&VerifiedClass> = classes.iter().filter(|c| c.orbit == o).collect();
            let c = members[0];
            let ncc = members.len() as u64;
            let action = if ncc == 1 { AutAction::Invariant } else { AutAction::FusedByOuter };
            (c.descriptor.clone(), ncc, action, c.pi_maximal, c.pronormal, c.intravariant)
        })
        .collect()
}

/// Multiset comparison of oracle and engine rows; pronormality is compared
/// only where the engine checked it.
fn compare_rows(oracle: &ClassifyResult, classes: &[VerifiedClass], pi: &PrimeSet) -> Vec<String> {
    let checked = classes.iter().all(|c| c.pronormal.is_some());
    let mut want: Vec<Row> = oracle
        .records
        .iter()
        .map(|r| {
            let pron = if checked { Some(r.pronormal) } else { None };
            (r.descriptor.clone(), r.ncc, r.aut_action, r.pi_maximal, pron, r.intravariant)
        })
        .collect();
    let mut got = engine_rows(classes);
    want.sort();
    got.sort();
    let mut problems = Vec::new();
    for w in &want {
        if let Some(i) = got.iter().position(|g| g == w) {
            got.remove(i);
        } else {
            problems.push(format!("predicted but not found: {}", row_text(w)));
        }
    }
    for g in &got {
        problems.push(format!("found but not predicted: {}", row_text(g)));
    }
    for c in classes {
        if !is_pi_prime_number(c.wh_index, pi) {
            problems.push(format!(
                "Wielandt–Hartley fails for {}: |N_S(H) : H| = {}",
                c.descriptor, c.wh_index
            ));
        }
    }
    problems
}

/// Whether `n` is coprime to every prime of π.
pub fn is_pi_prime_number(n: u64, pi: &PrimeSet) -> bool {
    pi.primes().iter().all(|&p| n % p != 0)
}

/// Checks the containers named by non-π-maximal oracle rows: some conjugate
/// of the engine class lies in a π-maximal S-class of the named shape.
/// Returns `None` if the step budget runs out.
fn check_containers(oracle: &ClassifyResult, sub: &Submaximal, budget: &mut u64) -> Option<Vec<String>> {
    let mut problems = Vec::new();
    for r in &oracle.records {
        let Some(container) = &r.container else { continue };
        let Some(i) = sub
            .classes
            .iter()
            .position(|c| c.descriptor == r.descriptor && !c.pi_maximal)
        else {
            continue;
        };
        let h = &sub.conj[i];
        let mut found = false;
        for m in &sub.socle_maximal {
            if identify(&m.representative) != *container {
                continue;
            }
            match find_conjugate_inside(h, &m.representative, budget) {
                None => return None,
                Some(Some(_)) => {
                    found = true;
                    break;
                }
                Some(None) => {}
            }
        }
        if !found {
            problems.push(format!(
                "{} is not contained in a π-maximal subgroup isomorphic to {container}",
                r.descriptor
            ));
        }
    }
    Some(problems)
}

fn cap_verdict(e: &Error) -> Option<Verdict> {
    match e {
        Error::CapExceeded { cap, value, limit } => Some(Verdict::Inconclusive(format!(
            "cap {cap} exceeded: {value} > {limit}"
        ))),
        _ => None,
    }
}

/// Verifies one case at the given tier.
pub fn verify_case(case: &CaseKey, tier: Tier, budget: u64) -> Result<Report> {
    verify_against(case, tier, budget, classify(case)?)
}

/// Verifies one case against the given expectation instead of the oracle.
pub fn verify_against(case: &CaseKey, tier: Tier, budget: u64, oracle: ClassifyResult) -> Result<Report> {
    let start = Instant::now();
    let outcome = match tier {
        Tier::Full => verify_full(case, &oracle, budget),
        Tier::Targeted => targeted::verify(case, &oracle, budget),
    };
    let (classes, verdict) = match outcome {
        Ok(x) => x,
        Err(e) => match cap_verdict(&e) {
            Some(v) => (Vec::new(), v),
            None => return Err(e),
        },
    };
    let elapsed_ms = start.elapsed().as_millis();
    info!("{case} [{tier}]: {} in {elapsed_ms} ms", verdict.label());
    Ok(Report {
        case: case.clone(),
        tier,
        oracle,
        classes,
        verdict,
        elapsed_ms,
    })
}

fn verify_full(case: &CaseKey, oracle: &ClassifyResult, budget: u64) -> Result<(Vec<VerifiedClass>, Verdict)> {
    let key = &case.key;
    let ambient_order = key.simple_order() * key.outer_order();
    let cap = element_cap();
    if ambient_order > cap {
        return Err(Error::CapExceeded {
            cap: "SUBMAX_CAP_ELEMENTS (|Aut(S)|)",
            value: ambient_order,
            limit: cap,
        });
    }
    let emb = aut_embedding(*key)?;
    let sub = submaximal_classes(&emb, &case.pi)?;
    let mut problems = compare_rows(oracle, &sub.classes, &case.pi);
    let mut budget = budget;
    match check_containers(oracle, &sub, &mut budget) {
        None => {
            return Ok((
                sub.classes,
                Verdict::Inconclusive("containment search exhausted the step budget".into()),
            ))
        }
        Some(p) => problems.extend(p),
    }
    Ok((sub.classes, Verdict::from_problems(problems)))
}

/// Result of comparing the computed maximal subgroups of S with the table.
#[derive(Debug, Clone)]
pub struct MaxTableReport {
    pub key: FamilyKey,
    pub table: Vec<MaxRow>,
    /// (descriptor, number of S-classes in the Out(S)-orbit), sorted.
    pub computed: Vec<(D, u64)>,
    pub verdict: Verdict,
}

/// Maximal subgroup classes of S against the maximal-subgroup tables.
pub fn verify_maximal_tables(key: FamilyKey) -> Result<MaxTableReport> {
    let emb = aut_embedding(key)?;
    let max = maximal_subgroup_classes(&emb.socle)?;
    let (orbit, _) = outer_orbits(&max, &emb.outer_reps)?;
    let norbits = orbit.iter().map(|o| o + 1).max().unwrap_or(0);
    let mut computed: Vec<(D, u64)> = (0..norbits)
        .map(|o| {
            let i = orbit.iter().position(|&x| x == o).unwrap();
            let n = orbit.iter().filter(|&&x| x == o).count() as u64;
            (identify(&max[i].representative), n)
        })
        .collect();
    computed.sort();
    let mut want: Vec<(D, u64)> = maximal_subgroups_table(&key)
        .iter()
        .map(|r| (r.descriptor.clone(), r.ncc))
        .collect();
    want.sort();
    let mut problems = Vec::new();
    for w in &want {
        if !computed.contains(w) {
            problems.push(format!("table row {} ×{} not found", w.0, w.1));
        }
    }
    for c in &computed {
        if !want.contains(c) {
            problems.push(format!("maximal subgroup {} ×{} missing from the table", c.0, c.1));
        }
    }
    Ok(MaxTableReport {
        key,
        table: maximal_subgroups_table(&key),
        computed,
        verdict: Verdict::from_problems(problems),
    })
}

/// Outcome of the Fitting-quotient checks for one π.
#[derive(Debug, Clone)]
pub struct FittingReport {
    pub pi: PrimeSet,
    pub fitting_order: u64,
    /// (1): π-maximal classes of G map onto those of G/N.
    pub images_match: bool,
    /// (2): H ∩ N = O_π(N) for every π-maximal H.
    pub intersections_are_core: bool,
    /// H ∩ N = 1 for every π-maximal H.
    pub intersections_trivial: bool,
    /// Whether N is a π′-group.
    pub n_is_pi_prime: bool,
    /// (3): images land in sm_π(G/N); `None` when the quotient is not a
    /// tabulated simple group.
    pub images_submaximal: Option<bool>,
    /// (4): H pronormal in G ⟺ HN/N pronormal in G/N, for every H.
    pub pronormality_agrees: bool,
    pub notes: Vec<String>,
}

impl FittingReport {
    pub fn verdict(&self) -> Verdict {
        let mut problems = Vec::new();
        if !self.images_match {
            problems.push("(1) images of π-maximal subgroups differ from m_π(G/N)".to_string());
        }
        if !self.intersections_are_core {
            problems.push("(2) some H ∩ N differs from O_π(N)".to_string());
        }
        if self.images_submaximal == Some(false) {
            problems.push("(3) some HN/N is not π-submaximal in G/N".to_string());
        }
        if !self.pronormality_agrees {
            problems.push("(4) pronormality differs between H and HN/N".to_string());
        }
        if self.intersections_trivial != self.n_is_pi_prime {
            problems.push("H ∩ N = 1 does not match N being a π′-group".to_string());
        }
        Verdict::from_problems(problems)
    }
}

/// A tabulated simple group isomorphic to `g`, if any, with an isomorphism
/// from `g` onto its socle given on generators.
fn simple_model(g: &PermGroup) -> Result<Option<(EmbeddedSimple, Vec<Perm>, Vec<Perm>)>> {
    if !is_simple(g)? {
        return Ok(None);
    }
    let candidates = [
        FamilyKey::new(Family::L2TwoP, 4)?,
        FamilyKey::new(Family::L2Prime, 7)?,
        FamilyKey::new(Family::L2TwoP, 8)?,
        FamilyKey::new(Family::L2Prime, 13)?,
        FamilyKey::new(Family::L2Prime, 17)?,
        FamilyKey::l3_3(),
    ];
    let gm = g.materialize()?;
    for key in candidates {
        if key.simple_order() != g.order() {
            continue;
        }
        let emb = aut_embedding(key)?;
        let sm = emb.socle.materialize()?;
        if let Some((from, to)) = isomorphism(&gm, &sm) {
            return Ok(Some((emb, from, to)));
        }
    }
    Ok(None)
}

/// Image of `h` under the homomorphism given by `from ↦ to` on generators.
fn map_subgroup(h: &Subgroup, g: &Subgroup, from: &[Perm], to: &[Perm], target_degree: usize) -> Result<Subgroup> {
    // Express each generator of h as a word in `from` by breadth-first search
    // over g, carrying the image along.
    use std::collections::HashMap;
    let mut image: HashMap<Perm, Perm> = HashMap::with_capacity(g.elements().len());
    let id = g.identity();
    image.insert(id.clone(), Perm::identity(target_degree));
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        let ix = image[&x].clone();
        for (a, b) in from.iter().zip(to) {
            let y = x.mul(a);
            if !image.contains_key(&y) {
                image.insert(y.clone(), ix.mul(b));
                queue.push(y);
            }
        }
        i += 1;
    }
    let gens: Vec<Perm> = h.generators().iter().map(|x| image[x].clone()).collect();
    Subgroup::generate(target_degree, &gens)
}

/// Checks the Fitting-quotient statements for `g` and `pi`.
pub fn verify_fitting_reduction(g: &PermGroup, pi: &PrimeSet) -> Result<FittingReport> {
    let n = fitting_subgroup(g)?;
    let quotient = quotient_group(g, &n)?;
    let gq = &quotient.group;
    let mut notes = Vec::new();

    let g_max = pi_maximal_classes(g, pi)?;
    let q_max = pi_maximal_classes(gq, pi)?;
    let images: Vec<Subgroup> = g_max
        .iter()
        .map(|c| quotient.image_subgroup(&c.representative))
        .collect::<Result<_>>()?;
    let mut hit = vec![false; q_max.len()];
    let mut images_match = g_max.len() == q_max.len();
    for im in &images {
        match q_max.iter().position(|c| c.contains_key(im.key())) {
            Some(j) if !hit[j] => hit[j] = true,
            _ => images_match = false,
        }
    }
    images_match &= hit.iter().all(|&h| h);

    let core = Subgroup::from_element_set(
        g.degree(),
        n.elements().iter().filter(|x| is_pi_number(x.order(), pi)).cloned().collect(),
    );
    let intersections: Vec<Subgroup> = g_max.iter().map(|c| c.representative.intersection(&n)).collect();
    let intersections_are_core = intersections.iter().all(|x| x.key() == core.key());
    let intersections_trivial = intersections.iter().all(|x| x.order() == 1);
    let n_is_pi_prime = is_pi_prime_number(n.order(), pi);

    let mut pronormality_agrees = true;
    for (c, im) in g_max.iter().zip(&images) {
        let qc = conjugacy_class(gq, im.clone())?;
        if is_pronormal(g, c)? != is_pronormal(gq, &qc)? {
            pronormality_agrees = false;
        }
    }

    let images_submaximal = match simple_model(gq)? {
        None => {
            notes.push("G/F(G) is not a tabulated simple group; statement (3) skipped".to_string());
            None
        }
        Some((emb, from, to)) => {
            let sub = submaximal_classes(&emb, pi)?;
            let gm = gq.materialize()?;
            let mut all = true;
            for im in &images {
                let mapped = map_subgroup(im, &gm, &from, &to, emb.degree())?;
                let ok = if sub.conj.is_empty() {
                    mapped.order() == emb.socle.order()
                } else {
                    sub.conj.iter().any(|c| c.contains_key(mapped.key()))
                };
                all &= ok;
            }
            notes.push(format!("G/F(G) ≅ {}", emb.key));
            Some(all)
        }
    };

    Ok(FittingReport {
        pi: pi.clone(),
        fitting_order: n.order(),
        images_match,
        intersections_are_core,
        intersections_trivial,
        n_is_pi_prime,
        images_submaximal,
        pronormality_agrees,
        notes,
    })
}

/// Whether all π-maximal subgroups of `g` are conjugate.
pub fn dpi_check(g: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    crate::classes::dpi_check(g, pi)
}
