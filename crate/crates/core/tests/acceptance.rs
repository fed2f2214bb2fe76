//! Acceptance criteria 1–8.
//!
//! Each test prints one `criterion N: PASS|FAIL — …` line (run with
//! `--nocapture` to see them) and then asserts the criterion as stated.
//!
//! ## Known red criteria
//!
//! Criteria 1 and 4 fail: the engine finds that three of the classification
//! tables disagree with the groups themselves (see README, "Known
//! disagreements"). `tier1_disagreements_are_exactly_the_known_ones` pins
//! that set so any other regression still shows up.

use std::path::PathBuf;
use std::time::Instant;

use submax::classes::{conjugacy_class, is_pronormal, sylow_subgroup};
use submax::cli::{parse_corpus, run_corpus};
use submax::engine::{dpi_check, verify_case, verify_fitting_reduction, verify_maximal_tables, Tier, DEFAULT_BUDGET};
use submax::groups::{aut_embedding, sl2_5};
use submax::oracle::{classify, dpi_l2_criterion, dpi_predict, maximal_subgroups_table, CaseKey};
use submax::perm::Perm;
use submax::pi_arith::{pi_part, prime_support, Family, FamilyKey, PrimeSet};
use submax::structid::{identify, model, StructureDescriptor as D};
use submax::subgroup::Subgroup;
use submax::bsgs::PermGroup;

fn report(n: u32, ok: bool, what: &str, start: Instant) {
    println!(
        "criterion {n}: {} — {what} ({} ms)",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed().as_millis()
    );
}

fn tier1() -> Vec<FamilyKey> {
    [
        (Family::L2TwoP, 4),
        (Family::L2Prime, 7),
        (Family::L2TwoP, 8),
        (Family::L2Prime, 13),
        (Family::L2Prime, 17),
        (Family::L2ThreeP, 27),
        (Family::L3Three, 3),
        (Family::Sz, 8),
    ]
    .into_iter()
    .map(|(f, q)| FamilyKey::new(f, q).unwrap())
    .collect()
}

fn tier1_cases() -> Vec<CaseKey> {
    let mut out = Vec::new();
    for key in tier1() {
        let primes = prime_support(key.simple_order()).unwrap();
        for pi in primes.subsets() {
            out.push(CaseKey::new(key, pi));
        }
    }
    out
}

fn case(f: Family, q: u64, pi: &[u64]) -> CaseKey {
    CaseKey::new(FamilyKey::new(f, q).unwrap(), PrimeSet::new(pi.to_vec()).unwrap())
}

fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/tier1.json")
}

/// Cases in which the engine disagrees with the tables, with the reason.
const KNOWN_DISAGREEMENTS: &[(&str, u64, &[u64])] = &[
    // Table 6 rows 2/3 give D_2 = C_2 when π_ε = {2}, 3 ∉ π, q ≡ −ε (mod 4).
    ("l2-prime", 7, &[2, 7]),
    ("l2-prime", 13, &[2, 13]),
    ("l2-prime", 17, &[2, 17]),
    // Table 4 row 3 gives the Sylow 2-subgroup E_4 when π₋ = {2}, 3 ∈ π.
    ("l2-3p", 27, &[2, 3]),
    ("l2-3p", 27, &[2, 3, 13]),
    // Table 8 lists D_{2(q±r+1)_π} and C_{(q−1)_π}:C_4 instead of
    // D_{2(q−1)_π} and C_{(q±r+1)_π}:C_4.
    ("sz", 8, &[2, 5]),
    ("sz", 8, &[2, 7]),
    ("sz", 8, &[2, 13]),
    ("sz", 8, &[2, 5, 7]),
    ("sz", 8, &[2, 5, 13]),
    ("sz", 8, &[2, 7, 13]),
];

#[test]
fn criterion_1_tier1_cross_validation() {
    let start = Instant::now();
    let text = std::fs::read_to_string(corpus_path()).unwrap();
    let corpus = parse_corpus(&text).unwrap();
    assert_eq!(corpus.cases.len(), 88);
    let reports = run_corpus(&corpus, DEFAULT_BUDGET);
    let mut bad = Vec::new();
    for r in &reports {
        if !r.verdict.is_match() {
            bad.push(format!("{} {:?}", r.case, r.verdict.details()));
        }
        for c in &r.classes {
            assert_eq!(c.pronormal, Some(true), "{}: {} not pronormal", r.case, c.descriptor);
            assert!(r.case.pi.primes().iter().all(|&p| c.wh_index % p != 0));
        }
    }
    let ok = bad.is_empty();
    report(
        1,
        ok,
        &format!("{}/{} tier-1 cases match", reports.len() - bad.len(), reports.len()),
        start,
    );
    for b in &bad {
        println!("    mismatch: {b}");
    }
    assert!(ok, "{} tier-1 cases disagree with the tables", bad.len());
}

#[test]
fn tier1_disagreements_are_exactly_the_known_ones() {
    let text = std::fs::read_to_string(corpus_path()).unwrap();
    let corpus = parse_corpus(&text).unwrap();
    let reports = run_corpus(&corpus, DEFAULT_BUDGET);
    let mut found: Vec<CaseKey> = reports
        .iter()
        .filter(|r| !r.verdict.is_match())
        .map(|r| r.case.clone())
        .collect();
    let mut known: Vec<CaseKey> = KNOWN_DISAGREEMENTS
        .iter()
        .map(|(f, q, pi)| case(f.parse().unwrap(), *q, pi))
        .collect();
    found.sort();
    known.sort();
    assert_eq!(found, known);
}

#[test]
fn criterion_2_l2_7() {
    let start = Instant::now();
    let r = verify_case(&case(Family::L2Prime, 7, &[2, 3]), Tier::Full, DEFAULT_BUDGET).unwrap();
    let shapes: Vec<String> = r.classes.iter().map(|c| c.descriptor.to_string()).collect();
    let by = |d: &D| r.classes.iter().filter(|c| c.descriptor == *d).collect::<Vec<_>>();
    let d6 = by(&D::Dihedral(6));
    let d8 = by(&D::Dihedral(8));
    let s4 = by(&D::Sym4);
    let ok = r.verdict.is_match()
        && r.classes.len() == 4
        && d6.len() == 1
        && !d6[0].pi_maximal
        && d8.len() == 1
        && !d8[0].pi_maximal
        && d8[0].order == pi_part(168, &PrimeSet::single(2).unwrap()).unwrap()
        && s4.len() == 2
        && s4[0].orbit == s4[1].orbit
        && s4.iter().all(|c| !c.intravariant && c.pi_maximal);
    report(2, ok, &format!("L2(7), π = {{2,3}}: {shapes:?}"), start);
    assert!(ok, "{:?}", r.verdict);
}

#[test]
fn criterion_3_l3_3() {
    let start = Instant::now();
    let r = verify_case(&case(Family::L3Three, 3, &[2, 3]), Tier::Full, DEFAULT_BUDGET).unwrap();
    let by = |d: &D| r.classes.iter().filter(|c| c.descriptor == *d).collect::<Vec<_>>();
    let top = by(&D::E9Gl23);
    let es = by(&D::Es27ByV4);
    let gl = by(&D::Gl2_3);
    let s4 = by(&D::Sym4);
    let ok = r.verdict.is_match()
        && top.len() == 2
        && top[0].orbit == top[1].orbit
        && top.iter().all(|c| !c.intravariant)
        && es.len() == 1
        && !es[0].pi_maximal
        && gl.len() == 1
        && !gl[0].pi_maximal
        && s4.len() == 1
        && s4[0].pi_maximal
        && s4[0].intravariant;
    report(3, ok, "L3(3), π = {2,3} reproduces the four rows, containers checked", start);
    assert!(ok, "{:?}", r.verdict);
}

#[test]
fn criterion_4_maximal_subgroup_tables() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for key in tier1() {
        let r = verify_maximal_tables(key).unwrap();
        let shapes: Vec<String> = r.computed.iter().map(|(d, n)| format!("{d}×{n}")).collect();
        println!("    {key}: {} {shapes:?}", r.verdict.label());
        if !r.verdict.is_match() {
            bad.push(format!("{key}: {:?}", r.verdict.details()));
        }
    }
    // The L2(q) table's q ≠ 7 exclusion and A4/S4 dichotomy, as table rows.
    let l7 = maximal_subgroups_table(&FamilyKey::new(Family::L2Prime, 7).unwrap());
    let l13 = maximal_subgroups_table(&FamilyKey::new(Family::L2Prime, 13).unwrap());
    assert!(l7.iter().all(|r| !matches!(r.descriptor, D::Dihedral(_))));
    assert!(l13.iter().any(|r| r.descriptor == D::Alt4) && l13.iter().all(|r| r.descriptor != D::Sym4));
    let ok = bad.is_empty();
    report(4, ok, &format!("{}/8 maximal-subgroup tables match", 8 - bad.len()), start);
    for b in &bad {
        println!("    mismatch: {b}");
    }
    assert!(ok);
}

#[test]
fn criterion_5_fitting_reduction() {
    let start = Instant::now();
    let g = sl2_5().unwrap();
    let mut ok = true;
    for pi in PrimeSet::new([2, 3, 5]).unwrap().subsets() {
        let r = verify_fitting_reduction(&g, &pi).unwrap();
        let expected_trivial = !pi.contains(2);
        let row_ok = r.verdict().is_match()
            && r.fitting_order == 2
            && r.images_submaximal == Some(true)
            && r.intersections_trivial == expected_trivial;
        println!(
            "    π = {pi}: (1) {} (2) {} (3) {:?} (4) {} H∩N=1: {}",
            r.images_match, r.intersections_are_core, r.images_submaximal, r.pronormality_agrees, r.intersections_trivial
        );
        ok &= row_ok;
    }
    report(5, ok, "SL2(5): statements (1)–(4) for all 8 subsets of {2,3,5}", start);
    assert!(ok);
}

#[test]
fn criterion_6_dpi_consistency() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut lemma_checked = 0;
    for key in tier1() {
        let emb = aut_embedding(key).unwrap();
        for pi in prime_support(key.simple_order()).unwrap().subsets() {
            let c = CaseKey::new(key, pi.clone());
            let predicted = dpi_predict(&c).unwrap();
            let computed = dpi_check(&emb.socle, &pi).unwrap();
            if predicted != computed {
                bad.push(format!("{c}: predicted {predicted}, computed {computed}"));
            }
            if key.family == Family::L2ThreeP {
                if let Some(lemma) = dpi_l2_criterion(&c) {
                    lemma_checked += 1;
                    if lemma != computed {
                        bad.push(format!("{c}: lemma says {lemma}, computed {computed}"));
                    }
                }
            }
        }
    }
    let ok = bad.is_empty() && lemma_checked == 4;
    report(
        6,
        ok,
        &format!("D_π agreement on all tier-1 cases; lemma checked on {lemma_checked} L2(27) cases"),
        start,
    );
    for b in &bad {
        println!("    {b}");
    }
    assert!(ok);
}

#[test]
fn criterion_7_targeted_tier() {
    let start = Instant::now();
    let mut ok = true;
    for (q, first) in [(137, D::Dihedral(8)), (103, D::Dihedral(6))] {
        let t = Instant::now();
        let r = verify_case(&case(Family::L2Prime, q, &[2, 3]), Tier::Targeted, DEFAULT_BUDGET).unwrap();
        let h = r.classes.iter().find(|c| c.descriptor == first);
        let row_ok = r.verdict.is_match() && h.is_some_and(|h| !h.pi_maximal);
        println!("    L2({q}): {} in {} ms", r.verdict.label(), t.elapsed().as_millis());
        ok &= row_ok;
    }
    let r = verify_case(&case(Family::L2Prime, 137, &[2, 3]), Tier::Targeted, DEFAULT_BUDGET).unwrap();
    let d8 = r.classes.iter().find(|c| c.descriptor == D::Dihedral(8)).unwrap();
    ok &= d8.order == pi_part(137 * 136 * 138 / 2, &PrimeSet::single(2).unwrap()).unwrap();
    report(7, ok, "L2(137) D8 and L2(103) D6: submaximal, not maximal, inside S4", start);
    assert!(ok);
}

fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cycles).unwrap()
}

#[test]
fn criterion_8_property_suites() {
    let start = Instant::now();
    // Lagrange, Sylow orders and pronormality of Sylow subgroups.
    for key in tier1() {
        let emb = aut_embedding(key).unwrap();
        let s = &emb.socle;
        for &p in prime_support(s.order()).unwrap().primes() {
            let sylow = sylow_subgroup(s, p).unwrap();
            assert_eq!(sylow.order(), pi_part(s.order(), &PrimeSet::single(p).unwrap()).unwrap());
            assert_eq!(s.order() % sylow.order(), 0);
            let class = conjugacy_class(s, sylow).unwrap();
            assert_eq!(class.class_size * class.normalizer.order(), s.order());
            assert!(is_pronormal(s, &class).unwrap(), "{key}: Sylow {p} not pronormal");
        }
    }
    // Negative control: C2 = ⟨(0 1)(2 3)⟩ is not pronormal in A4.
    let a4 = PermGroup::from_generators(4, &[perm(4, &[&[0, 1, 2]]), perm(4, &[&[0, 1], &[2, 3]])]).unwrap();
    let c2 = Subgroup::generate(4, &[perm(4, &[&[0, 1], &[2, 3]])]).unwrap();
    assert!(!is_pronormal(&a4, &conjugacy_class(&a4, c2).unwrap()).unwrap());
    // identify(model(d)) = d over every descriptor the tables use on tier 1.
    let mut descriptors: Vec<D> = Vec::new();
    for c in tier1_cases() {
        descriptors.extend(classify(&c).unwrap().records.into_iter().map(|r| r.descriptor));
    }
    for key in tier1() {
        descriptors.extend(maximal_subgroups_table(&key).into_iter().map(|r| r.descriptor));
    }
    descriptors.sort();
    descriptors.dedup();
    let mut checked = 0;
    for d in &descriptors {
        if let Some(m) = model(d) {
            assert_eq!(identify(&m), *d, "model of {d}");
            checked += 1;
        }
    }
    report(
        8,
        true,
        &format!("Sylow/Lagrange/pronormality on 8 groups, C2 < A4 control, {checked} descriptor models"),
        start,
    );
}
