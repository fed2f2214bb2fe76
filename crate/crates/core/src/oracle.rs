//! The symbolic classification: π-submaximal subgroup classes of a minimal
//! simple group predicted from `(family, q, π)` by arithmetic alone.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::pi_arith::{congruence_in, pi_part, prime_support, Family, FamilyKey, PrimeSet};
use crate::structid::{DescriptorJson, StructureDescriptor as D};

/// One classification instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseKey {
    pub key: FamilyKey,
    pub pi: PrimeSet,
}

impl CaseKey {
    pub fn new(key: FamilyKey, pi: PrimeSet) -> CaseKey {
        CaseKey { key, pi }
    }

    /// π ∩ π(S).
    pub fn relevant_primes(&self) -> PrimeSet {
        self.pi.intersection(&simple_primes(&self.key))
    }
}

impl fmt::Display for CaseKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, π = {}", self.key, self.pi)
    }
}

/// π(S).
pub fn simple_primes(key: &FamilyKey) -> PrimeSet {
    prime_support(key.simple_order()).expect("|S| > 0")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AutAction {
    Invariant,
    FusedByOuter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    /// π ∩ π(S) = ∅: the only π-submaximal subgroup is 1.
    EmptyPi,
    /// π ∩ π(S) = {p}: the Sylow p-subgroups.
    SinglePrime,
    /// π(S) ⊆ π: S itself.
    Full,
    /// Given by a classification table.
    Table,
}

/// One row of the answer: a shape of π-submaximal subgroup with its flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmaxRecord {
    #[serde(with = "descriptor_serde")]
    pub descriptor: D,
    pub order: u64,
    pub ncc: u64,
    pub aut_action: AutAction,
    pub pi_maximal: bool,
    #[serde(with = "opt_descriptor_serde")]
    pub container: Option<D>,
    pub pronormal: bool,
    pub intravariant: bool,
    /// Table number; 0 stands for the degenerate rules.
    pub table: u32,
    pub row: u32,
    #[serde(skip)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyResult {
    pub regime: Regime,
    pub records: Vec<SubmaxRecord>,
}

pub(crate) mod descriptor_serde {
    use super::*;
    use serde::{de::Error, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &D, s: S) -> std::result::Result<S::Ok, S::Error> {
        d.to_json().serialize(s)
    }

    pub fn deserialize<'de, De: Deserializer<'de>>(de: De) -> std::result::Result<D, De::Error> {
        let j = DescriptorJson::deserialize(de)?;
        D::from_json(&j).ok_or_else(|| De::Error::custom(format!("unknown descriptor kind {}", j.kind)))
    }
}

pub(crate) mod opt_descriptor_serde {
    use super::*;
    use serde::{de::Error, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Option<D>, s: S) -> std::result::Result<S::Ok, S::Error> {
        d.as_ref().map(|d| d.to_json()).serialize(s)
    }

    pub fn deserialize<'de, De: Deserializer<'de>>(de: De) -> std::result::Result<Option<D>, De::Error> {
        match Option::<DescriptorJson>::deserialize(de)? {
            None => Ok(None),
            Some(j) => D::from_json(&j)
                .map(Some)
                .ok_or_else(|| De::Error::custom(format!("unknown descriptor kind {}", j.kind))),
        }
    }
}

const FOOTNOTE_D8: &str = "H ≅ D8 and H is contained in a π-maximal subgroup isomorphic to S4";
const FOOTNOTE_D6: &str = "H ≅ D6 and H is contained in a π-maximal subgroup isomorphic to S4";
const ALWAYS_IN_E9GL23: &str = "always; H ≤ E9:GL2(3)";

fn record(descriptor: D, table: u32, row: u32) -> SubmaxRecord {
    let descriptor = descriptor.normalize();
    SubmaxRecord {
        order: descriptor.expected_order().expect("table shapes are recognized"),
        descriptor,
        ncc: 1,
        aut_action: AutAction::Invariant,
        pi_maximal: true,
        container: None,
        pronormal: true,
        intravariant: true,
        table,
        row,
        note: None,
    }
}

fn not_maximal(mut r: SubmaxRecord, container: D, note: &str) -> SubmaxRecord {
    r.pi_maximal = false;
    r.container = Some(container.normalize());
    r.note = Some(note.to_string());
    r
}

fn fused_pair(mut r: SubmaxRecord) -> SubmaxRecord {
    r.ncc = 2;
    r.aut_action = AutAction::FusedByOuter;
    r.intravariant = false;
    r
}

/// Structure of a Sylow p-subgroup of S, for p dividing |S|.
pub fn sylow_descriptor(key: &FamilyKey, p: u64) -> D {
    let q = key.q;
    let part = |n: u64| pi_part(n, &PrimeSet::single(p).unwrap()).unwrap();
    let d = match key.family {
        Family::L3Three => match p {
            2 => D::Semidihedral(16),
            3 => D::Extraspecial27,
            _ => D::Cyclic(13),
        },
        Family::Sz => {
            if p == 2 {
                D::SzBorel(q, 1)
            } else {
                let r = key.suzuki_r().unwrap();
                D::Cyclic(part(q - 1) * part(q - r + 1) * part(q + r + 1))
            }
        }
        _ => {
            let (char_p, k) = key.field();
            if p == char_p {
                D::ElemAbelian(p, k)
            } else if p == 2 {
                D::Dihedral(part(q * q - 1) / 2)
            } else {
                D::Cyclic(part(q - 1) * part(q + 1))
            }
        }
    };
    d.normalize()
}

/// The predicted π-submaximal subgroup classes.
pub fn classify(case: &CaseKey) -> Result<ClassifyResult> {
    let key = &case.key;
    let rel = case.relevant_primes();
    let all = simple_primes(key);
    if rel.is_empty() {
        return Ok(ClassifyResult {
            regime: Regime::EmptyPi,
            records: vec![record(D::Trivial, 0, 1)],
        });
    }
    if rel.len() == 1 {
        let p = rel.primes()[0];
        return Ok(ClassifyResult {
            regime: Regime::SinglePrime,
            records: vec![record(sylow_descriptor(key, p), 0, 2)],
        });
    }
    if all.is_subset(&case.pi) {
        return Ok(ClassifyResult {
            regime: Regime::Full,
            records: vec![record(D::Simple(key.simple_order()), 0, 3)],
        });
    }
    let pi = &case.pi;
    let q = key.q;
    let part = |n: u64| pi_part(n, pi).unwrap();
    let meets = |n: u64| !pi.intersection(&prime_support(n).unwrap()).is_empty();
    let has = |p: u64| pi.contains(p);
    let mut records = Vec::new();
    match key.family {
        Family::L2TwoP => {
            if !has(2) {
                if meets(q - 1) {
                    records.push(record(D::Cyclic(part(q - 1)), 1, 1));
                }
                if meets(q + 1) {
                    records.push(record(D::Cyclic(part(q + 1)), 1, 2));
                }
            } else {
                records.push(record(D::FrobEqCm(q, part(q - 1)), 2, 1));
                if meets(q - 1) {
                    records.push(record(D::Dihedral(2 * part(q - 1)), 2, 2));
                }
                if meets(q + 1) {
                    records.push(record(D::Dihedral(2 * part(q + 1)), 2, 3));
                }
            }
        }
        Family::L2ThreeP => {
            if !has(2) {
                if has(3) {
                    records.push(record(D::FrobEqCm(q, part(q - 1)), 3, 1));
                }
                if !has(3) && meets(q - 1) {
                    records.push(record(D::Cyclic(part(q - 1)), 3, 2));
                }
                if meets(q + 1) {
                    records.push(record(D::Cyclic(part(q + 1)), 3, 3));
                }
            } else {
                if has(3) {
                    records.push(record(D::FrobEqCm(q, part(q - 1) / 2), 4, 1));
                }
                let pi_plus = pi.intersection(&prime_support(q - 1).unwrap());
                if !pi_plus.is_empty() && pi_plus.primes() != [2] {
                    records.push(record(D::Dihedral(part(q - 1)), 4, 2));
                }
                records.push(record(D::Dihedral(part(q + 1)), 4, 3));
                if has(3) {
                    records.push(record(D::Alt4, 4, 4));
                }
            }
        }
        Family::L2Prime => {
            if !has(2) {
                if has(q) {
                    records.push(record(D::FrobCqCm(q, part(q - 1)), 5, 1));
                }
                if !has(q) && meets(q - 1) {
                    records.push(record(D::Cyclic(part(q - 1)), 5, 2));
                }
                if meets(q + 1) {
                    records.push(record(D::Cyclic(part(q + 1)), 5, 3));
                }
            } else {
                if has(q) {
                    records.push(record(D::FrobCqCm(q, part(q - 1) / 2), 6, 1));
                }
                for eps in [1i64, -1] {
                    if let Some(r) = table6_dihedral(q, pi, eps) {
                        records.push(r);
                    }
                }
                let qi = q as i64;
                if has(3) && congruence_in(qi, &[3, -3], 8) {
                    records.push(record(D::Alt4, 6, 4));
                }
                if has(3) && congruence_in(qi, &[1, -1], 8) {
                    records.push(fused_pair(record(D::Sym4, 6, 5)));
                }
            }
        }
        Family::Sz => {
            let r = key.suzuki_r().unwrap();
            if !has(2) {
                if meets(q - 1) {
                    records.push(record(D::Cyclic(part(q - 1)), 7, 1));
                }
                if meets(q - r + 1) {
                    records.push(record(D::Cyclic(part(q - r + 1)), 7, 2));
                }
                // The table prints C_{(q−r+1)_π} here; the condition π₋ ≠ ∅
                // refers to q+r+1, so the shape is read as C_{(q+r+1)_π}.
                if meets(q + r + 1) {
                    records.push(record(D::Cyclic(part(q + r + 1)), 7, 3));
                }
            } else {
                records.push(record(D::SzBorel(q, part(q - 1)), 8, 1));
                if meets(q - 1) {
                    records.push(record(D::CmC4(part(q - 1)), 8, 2));
                }
                if meets(q - r + 1) {
                    records.push(record(D::Dihedral(2 * part(q - r + 1)), 8, 3));
                }
                if meets(q + r + 1) {
                    records.push(record(D::Dihedral(2 * part(q + r + 1)), 8, 4));
                }
            }
        }
        Family::L3Three => {
            let (h2, h3, h13) = (has(2), has(3), has(13));
            if h3 && h13 {
                records.push(record(D::C13C3, 9, 1));
                records.push(record(D::Extraspecial27, 9, 2));
            } else if h2 && h13 {
                records.push(record(D::Cyclic(13), 9, 1));
                records.push(record(D::Semidihedral(16), 9, 2));
            } else {
                records.push(fused_pair(record(D::E9Gl23, 10, 1)));
                records.push(not_maximal(record(D::Es27ByV4, 10, 2), D::E9Gl23, ALWAYS_IN_E9GL23));
                records.push(not_maximal(record(D::Gl2_3, 10, 3), D::E9Gl23, ALWAYS_IN_E9GL23));
                records.push(record(D::Sym4, 10, 4));
            }
        }
    }
    Ok(ClassifyResult {
        regime: Regime::Table,
        records,
    })
}

/// Rows 2 (ε = +) and 3 (ε = −) of the L₂(q), q prime, 2 ∈ π table.
fn table6_dihedral(q: u64, pi: &PrimeSet, eps: i64) -> Option<SubmaxRecord> {
    let qi = q as i64;
    let n = (qi - eps) as u64;
    let pi_eps = pi.intersection(&prime_support(n).unwrap());
    let is = |ps: &[u64]| pi_eps.primes() == ps;
    let exists = !is(&[2]) || !pi.contains(3) || congruence_in(qi, &[eps], 8);
    if !exists {
        return None;
    }
    let row = if eps == 1 { 2 } else { 3 };
    let r = record(D::Dihedral(pi_part(n, pi).unwrap()), 6, row);
    let (d8_residue, d6_residues): (i64, [i64; 2]) = if eps == 1 { (41, [7, 31]) } else { (7, [41, 65]) };
    if is(&[2]) && pi.contains(3) && congruence_in(qi, &[d8_residue], 48) {
        return Some(not_maximal(r, D::Sym4, FOOTNOTE_D8));
    }
    if is(&[2, 3]) && congruence_in(qi, &d6_residues, 72) {
        return Some(not_maximal(r, D::Sym4, FOOTNOTE_D6));
    }
    Some(r)
}

/// Whether all π-submaximal (equivalently, π-maximal) subgroups are
/// predicted to be conjugate.
pub fn dpi_predict(case: &CaseKey) -> Result<bool> {
    let res = classify(case)?;
    Ok(res.records.len() == 1 && res.records[0].ncc == 1)
}

/// The D_π criterion for L₂(q), q = p^k, when 2 ∉ π and p ∈ π:
/// S ∈ D_π iff π ∩ π(S) ⊆ {p} ∪ π(q − 1). `None` outside that range.
pub fn dpi_l2_criterion(case: &CaseKey) -> Option<bool> {
    let key = &case.key;
    if !matches!(key.family, Family::L2TwoP | Family::L2ThreeP | Family::L2Prime) {
        return None;
    }
    let (p, _) = key.field();
    if case.pi.contains(2) || !case.pi.contains(p) {
        return None;
    }
    let allowed = prime_support(key.q - 1).unwrap().union(&PrimeSet::single(p).unwrap());
    Some(case.relevant_primes().is_subset(&allowed))
}

/// One row of a maximal-subgroup table, evaluated at a specific q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxRow {
    #[serde(with = "descriptor_serde")]
    pub descriptor: D,
    pub ncc: u64,
    pub aut_action: AutAction,
    pub table: u32,
    pub row: u32,
}

fn max_row(d: D, table: u32, row: u32) -> MaxRow {
    MaxRow {
        descriptor: d.normalize(),
        ncc: 1,
        aut_action: AutAction::Invariant,
        table,
        row,
    }
}

/// Maximal subgroup classes of S as listed by the tables (11–15), with the
/// conditions evaluated at the key's q.
pub fn maximal_subgroups_table(key: &FamilyKey) -> Vec<MaxRow> {
    let q = key.q;
    let qi = q as i64;
    match key.family {
        Family::L2TwoP => vec![
            max_row(D::FrobEqCm(q, q - 1), 11, 1),
            max_row(D::Dihedral(2 * (q - 1)), 11, 2),
            max_row(D::Dihedral(2 * (q + 1)), 11, 3),
        ],
        // The table writes the Borel subgroup as C_q:C_{(q−1)/2}; with q = 3^p
        // the kernel is elementary abelian.
        Family::L2ThreeP => vec![
            max_row(D::FrobEqCm(q, (q - 1) / 2), 12, 1),
            max_row(D::Dihedral(q - 1), 12, 2),
            max_row(D::Dihedral(q + 1), 12, 3),
            max_row(D::Alt4, 12, 4),
        ],
        Family::L2Prime => {
            let mut rows = vec![max_row(D::FrobCqCm(q, (q - 1) / 2), 13, 1)];
            if q != 7 {
                rows.push(max_row(D::Dihedral(q - 1), 13, 2));
                rows.push(max_row(D::Dihedral(q + 1), 13, 3));
            }
            if congruence_in(qi, &[3, -3], 8) {
                rows.push(max_row(D::Alt4, 13, 4));
            }
            if congruence_in(qi, &[1, -1], 8) {
                let mut r = max_row(D::Sym4, 13, 5);
                r.ncc = 2;
                r.aut_action = AutAction::FusedByOuter;
                rows.push(r);
            }
            rows
        }
        Family::Sz => {
            let r = key.suzuki_r().unwrap();
            vec![
                max_row(D::SzBorel(q, q - 1), 14, 1),
                max_row(D::CmC4(q - 1), 14, 2),
                max_row(D::Dihedral(2 * (q - r + 1)), 14, 3),
                max_row(D::Dihedral(2 * (q + r + 1)), 14, 4),
            ]
        }
        Family::L3Three => {
            let mut first = max_row(D::E9Gl23, 15, 1);
            first.ncc = 2;
            first.aut_action = AutAction::FusedByOuter;
            vec![first, max_row(D::C13C3, 15, 2), max_row(D::Sym4, 15, 3)]
        }
    }
}
