//! Abstract isomorphism types used by the classification tables, and the
//! identification of concrete subgroups against them.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bsgs::PermGroup;
use crate::perm::{gcd, Perm};
use crate::pi_arith::{factorize, is_prime, prime_power};
use crate::subgroup::{greedy_generators, Subgroup};

/// Isomorphism types. `Dihedral` and `Semidihedral` carry the group order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureDescriptor {
    Trivial,
    Cyclic(u64),
    Dihedral(u64),
    Semidihedral(u64),
    ElemAbelian(u64, u32),
    /// `E_q : C_m`, Frobenius with elementary abelian kernel of order `q`.
    FrobEqCm(u64, u64),
    /// `C_q : C_m`, Frobenius with kernel of prime order `q`.
    FrobCqCm(u64, u64),
    /// `E_q^{1+1} : C_m`, the Suzuki 2-group of order `q²` extended by `C_m`.
    SzBorel(u64, u64),
    /// `C_m : C_4`.
    CmC4(u64),
    Alt4,
    Sym4,
    Gl2_3,
    Extraspecial27,
    Es27ByV4,
    E9Gl23,
    C13C3,
    /// The whole simple group, of the given order.
    Simple(u64),
    Unrecognized { order: u64, fingerprint: String },
}

use StructureDescriptor as D;

/// JSON form: `{"kind": …, "params": […]}` plus `detail` for unrecognized
/// groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorJson {
    pub kind: String,
    pub params: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl StructureDescriptor {
    pub fn kind(&self) -> &'static str {
        match self {
            D::Trivial => "TRIVIAL",
            D::Cyclic(_) => "CYCLIC",
            D::Dihedral(_) => "DIHEDRAL",
            D::Semidihedral(_) => "SEMIDIHEDRAL",
            D::ElemAbelian(..) => "ELEM_ABELIAN",
            D::FrobEqCm(..) => "FROB_EQ_CM",
            D::FrobCqCm(..) => "FROB_CQ_CM",
            D::SzBorel(..) => "SZ_BOREL",
            D::CmC4(_) => "CM_C4",
            D::Alt4 => "ALT4",
            D::Sym4 => "SYM4",
            D::Gl2_3 => "GL2_3",
            D::Extraspecial27 => "EXTRASPECIAL_27",
            D::Es27ByV4 => "ES27_BY_V4",
            D::E9Gl23 => "E9_GL23",
            D::C13C3 => "C13_C3",
            D::Simple(_) => "SIMPLE",
            D::Unrecognized { .. } => "UNRECOGNIZED",
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            D::Cyclic(n) | D::Dihedral(n) | D::Semidihedral(n) | D::CmC4(n) | D::Simple(n) => vec![n],
            D::ElemAbelian(p, k) => vec![p, k as u64],
            D::FrobEqCm(q, m) | D::FrobCqCm(q, m) | D::SzBorel(q, m) => vec![q, m],
            D::Unrecognized { order, .. } => vec![order],
            _ => vec![],
        }
    }

    pub fn to_json(&self) -> DescriptorJson {
        DescriptorJson {
            kind: self.kind().to_string(),
            params: self.params(),
            detail: match self {
                D::Unrecognized { fingerprint, .. } => Some(fingerprint.clone()),
                _ => None,
            },
        }
    }

    pub fn from_json(j: &DescriptorJson) -> Option<StructureDescriptor> {
        let p = |i: usize| j.params.get(i).copied();
        let d = match j.kind.as_str() {
            "TRIVIAL" => D::Trivial,
            "CYCLIC" => D::Cyclic(p(0)?),
            "DIHEDRAL" => D::Dihedral(p(0)?),
            "SEMIDIHEDRAL" => D::Semidihedral(p(0)?),
            "ELEM_ABELIAN" => D::ElemAbelian(p(0)?, u32::try_from(p(1)?).ok()?),
            "FROB_EQ_CM" => D::FrobEqCm(p(0)?, p(1)?),
            "FROB_CQ_CM" => D::FrobCqCm(p(0)?, p(1)?),
            "SZ_BOREL" => D::SzBorel(p(0)?, p(1)?),
            "CM_C4" => D::CmC4(p(0)?),
            "ALT4" => D::Alt4,
            "SYM4" => D::Sym4,
            "GL2_3" => D::Gl2_3,
            "EXTRASPECIAL_27" => D::Extraspecial27,
            "ES27_BY_V4" => D::Es27ByV4,
            "E9_GL23" => D::E9Gl23,
            "C13_C3" => D::C13C3,
            "SIMPLE" => D::Simple(p(0)?),
            "UNRECOGNIZED" => D::Unrecognized {
                order: p(0)?,
                fingerprint: j.detail.clone().unwrap_or_default(),
            },
            _ => return None,
        };
        Some(d)
    }

    /// Canonical form: degenerate parameters collapse to smaller shapes
    /// (`D₂ = C₂`, `D₄ = E₄`, `E_q:C₁ = E_q`, `C_q:C₂ = D_{2q}`, `E₄:C₃ = A₄`,
    /// `C₁₃:C₃`, …).
    pub fn normalize(&self) -> StructureDescriptor {
        match *self {
            D::Cyclic(1) => D::Trivial,
            D::Dihedral(2) => D::Cyclic(2),
            D::Dihedral(4) => D::ElemAbelian(2, 2),
            D::ElemAbelian(_, 0) => D::Trivial,
            D::ElemAbelian(p, 1) => D::Cyclic(p),
            D::FrobEqCm(q, m) if is_prime(q) => D::FrobCqCm(q, m).normalize(),
            D::FrobEqCm(q, 1) => match prime_power(q) {
                Some((p, k)) => D::ElemAbelian(p, k),
                None => self.clone(),
            },
            D::FrobEqCm(4, 3) => D::Alt4,
            D::FrobCqCm(q, 1) => D::Cyclic(q).normalize(),
            D::FrobCqCm(q, 2) => D::Dihedral(2 * q),
            D::FrobCqCm(13, 3) => D::C13C3,
            D::CmC4(1) => D::Cyclic(4),
            D::CmC4(m) if is_prime(m) && m > 2 => D::FrobCqCm(m, 4),
            _ => self.clone(),
        }
    }

    /// Order of a group of this type; `None` for unrecognized groups.
    pub fn expected_order(&self) -> Option<u64> {
        Some(match *self {
            D::Trivial => 1,
            D::Cyclic(n) | D::Dihedral(n) | D::Semidihedral(n) | D::Simple(n) => n,
            D::ElemAbelian(p, k) => p.pow(k),
            D::FrobEqCm(q, m) | D::FrobCqCm(q, m) => q * m,
            D::SzBorel(q, m) => q * q * m,
            D::CmC4(m) => 4 * m,
            D::Alt4 => 12,
            D::Sym4 => 24,
            D::Gl2_3 => 48,
            D::Extraspecial27 => 27,
            D::Es27ByV4 => 108,
            D::E9Gl23 => 432,
            D::C13C3 => 39,
            D::Unrecognized { .. } => return None,
        })
    }
}

impl fmt::Display for StructureDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D::Trivial => write!(f, "1"),
            D::Cyclic(n) => write!(f, "C{n}"),
            D::Dihedral(n) => write!(f, "D{n}"),
            D::Semidihedral(n) => write!(f, "SD{n}"),
            D::ElemAbelian(p, k) => write!(f, "E{}", p.pow(*k)),
            D::FrobEqCm(q, m) => write!(f, "E{q}:C{m}"),
            D::FrobCqCm(q, m) => write!(f, "C{q}:C{m}"),
            D::SzBorel(q, 1) => write!(f, "E{q}^(1+1)"),
            D::SzBorel(q, m) => write!(f, "E{q}^(1+1):C{m}"),
            D::CmC4(m) => write!(f, "C{m}:C4"),
            D::Alt4 => write!(f, "A4"),
            D::Sym4 => write!(f, "S4"),
            D::Gl2_3 => write!(f, "GL2(3)"),
            D::Extraspecial27 => write!(f, "3+^(1+2)"),
            D::Es27ByV4 => write!(f, "3+^(1+2):2^2"),
            D::E9Gl23 => write!(f, "E9:GL2(3)"),
            D::C13C3 => write!(f, "C13:C3"),
            D::Simple(n) => write!(f, "S (order {n})"),
            D::Unrecognized { order, fingerprint } => write!(f, "?{order} [{fingerprint}]"),
        }
    }
}

/// Identifies a materialized subgroup. The result is normalized.
pub fn identify(h: &Subgroup) -> StructureDescriptor {
    let n = h.order();
    if n == 1 {
        return D::Trivial;
    }
    let hist = h.element_order_histogram();
    if h.is_abelian() {
        if hist.contains_key(&n) {
            return D::Cyclic(n).normalize();
        }
        if let Some((p, k)) = prime_power(n) {
            if h.exponent() == p {
                return D::ElemAbelian(p, k).normalize();
            }
        }
        return unrecognized(h);
    }
    // An index-2 cyclic subgroup whose complement consists of involutions.
    if n % 2 == 0 {
        if let Some(x) = h.elements().iter().find(|x| x.order() == n / 2) {
            let cyc = cyclic_of(x);
            let outside: Vec<&Perm> = h.elements().iter().filter(|y| cyc.binary_search(y).is_err()).collect();
            if outside.iter().all(|y| y.order() == 2) {
                return D::Dihedral(n).normalize();
            }
            if n >= 16 && prime_power(n).map(|(p, _)| p) == Some(2) {
                let target = x.pow(n / 4 - 1);
                if outside.iter().any(|y| y.order() == 2 && x.conj(y) == target) {
                    return D::Semidihedral(n);
                }
            }
        }
    }
    if let Some(d) = frobenius_shape(h) {
        return d;
    }
    for d in [D::Sym4, D::Gl2_3, D::Extraspecial27, D::Es27ByV4, D::E9Gl23] {
        if d.expected_order() == Some(n) && isomorphic(h, &model(&d).expect("named model")) {
            return d;
        }
    }
    unrecognized(h)
}

/// `identify(h) == d` after normalizing `d`.
pub fn matches(h: &Subgroup, d: &StructureDescriptor) -> bool {
    identify(h) == d.normalize()
}

fn unrecognized(h: &Subgroup) -> StructureDescriptor {
    let fp = h.fingerprint();
    let hist: Vec<String> = fp.histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    D::Unrecognized {
        order: fp.order,
        fingerprint: format!(
            "orders {{{}}}, {}",
            hist.join(","),
            if fp.abelian { "abelian" } else { "nonabelian" }
        ),
    }
}

fn cyclic_of(x: &Perm) -> Vec<Perm> {
    let mut out = vec![Perm::identity(x.degree())];
    let mut y = x.clone();
    while !y.is_identity() {
        out.push(y.clone());
        y = y.mul(x);
    }
    out.sort_unstable();
    out
}

/// `P : C_m` with `P` a normal Sylow p-subgroup that is elementary abelian
/// or a Suzuki 2-group, `C_m` cyclic, and no element of mixed order (so the
/// complement acts fixed-point-freely).
fn frobenius_shape(h: &Subgroup) -> Option<StructureDescriptor> {
    let n = h.order();
    for (p, k) in factorize(n) {
        let pk = p.pow(k);
        let m = n / pk;
        let p_elements: Vec<Perm> = h
            .elements()
            .iter()
            .filter(|x| prime_power(x.order()).map_or(x.order() == 1, |(r, _)| r == p))
            .cloned()
            .collect();
        if p_elements.len() as u64 != pk {
            continue;
        }
        let mixed = h.elements().iter().any(|x| {
            let o = x.order();
            o % p == 0 && gcd(o, m) > 1
        });
        if mixed {
            continue;
        }
        if m > 1 && !h.elements().iter().any(|x| x.order() == m) {
            continue;
        }
        let sylow = Subgroup::from_element_set(h.degree(), p_elements);
        if sylow.is_abelian() && sylow.exponent() == p {
            return Some(D::FrobEqCm(pk, m).normalize());
        }
        if p == 2 && k % 2 == 0 && is_suzuki_two_group(&sylow) {
            return Some(D::SzBorel(1 << (k / 2), m));
        }
    }
    None
}

/// Order `q²`, centre elementary abelian of order `q`, exponent 4, and
/// exactly `q − 1` involutions.
pub fn is_suzuki_two_group(p: &Subgroup) -> bool {
    let n = p.order();
    let k = match prime_power(n) {
        Some((2, k)) if k % 2 == 0 => k,
        _ => return false,
    };
    let q = 1u64 << (k / 2);
    let z = p.center();
    let hist = p.element_order_histogram();
    z.order() == q && z.exponent() == 2 && p.exponent() == 4 && hist.get(&2).copied() == Some(q - 1)
}

/// Whether `h` is isomorphic to `m`, by mapping a small generating set of
/// `m` into `h` and checking that the assignment extends to a bijective
/// homomorphism.
pub fn isomorphic(h: &Subgroup, m: &Subgroup) -> bool {
    isomorphism(m, h).is_some()
}

/// An isomorphism `from → to` given as images of a generating set of `from`.
pub fn isomorphism(from: &Subgroup, to: &Subgroup) -> Option<(Vec<Perm>, Vec<Perm>)> {
    if from.order() != to.order()
        || from.is_abelian() != to.is_abelian()
        || from.element_order_histogram() != to.element_order_histogram()
    {
        return None;
    }
    let gens = greedy_generators(from.degree(), from.elements());
    let orders: Vec<u64> = gens.iter().map(|g| g.order()).collect();
    let candidates: Vec<Vec<&Perm>> = orders
        .iter()
        .map(|&o| to.elements().iter().filter(|x| x.order() == o).collect())
        .collect();
    let mut chosen: Vec<Perm> = Vec::new();
    if search(from, to, &gens, &candidates, &mut chosen) {
        Some((gens, chosen))
    } else {
        None
    }
}

fn search(
    from: &Subgroup,
    to: &Subgroup,
    gens: &[Perm],
    candidates: &[Vec<&Perm>],
    chosen: &mut Vec<Perm>,
) -> bool {
    let i = chosen.len();
    if i == gens.len() {
        return extends_to_isomorphism(from, to, gens, chosen);
    }
    for &c in &candidates[i] {
        // Orders of pairwise products must agree.
        let ok = (0..i).all(|j| gens[j].mul(&gens[i]).order() == chosen[j].mul(c).order());
        if !ok {
            continue;
        }
        chosen.push(c.clone());
        if search(from, to, gens, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn extends_to_isomorphism(from: &Subgroup, to: &Subgroup, gens: &[Perm], images: &[Perm]) -> bool {
    let mut map: HashMap<Perm, Perm> = HashMap::with_capacity(from.elements().len());
    let mut used: std::collections::HashSet<Perm> = std::collections::HashSet::new();
    let id = from.identity();
    map.insert(id.clone(), to.identity());
    used.insert(to.identity());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let e = queue[i].clone();
        let fe = map[&e].clone();
        for (g, x) in gens.iter().zip(images) {
            let eg = e.mul(g);
            let fx = fe.mul(x);
            match map.get(&eg) {
                Some(v) => {
                    if *v != fx {
                        return false;
                    }
                }
                None => {
                    if !used.insert(fx.clone()) {
                        return false;
                    }
                    map.insert(eg.clone(), fx);
                    queue.push(eg);
                }
            }
        }
        i += 1;
    }
    map.len() as u64 == to.order()
}

/// Matrix group over GF(p) acting on all of GF(p)^n (row vectors).
fn matrix_group(p: u64, n: usize, mats: &[Vec<Vec<u64>>]) -> Subgroup {
    let size = p.pow(n as u32) as usize;
    let decode = |mut i: usize| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let c = i as u64 % p;
                i /= p as usize;
                c
            })
            .collect()
    };
    let encode = |v: &[u64]| -> usize { v.iter().rev().fold(0u64, |a, &c| a * p + c) as usize };
    let gens: Vec<Perm> = mats
        .iter()
        .map(|m| {
            let images = (0..size)
                .map(|i| {
                    let v = decode(i);
                    let w: Vec<u64> = (0..n).map(|j| (0..n).map(|k| v[k] * m[k][j]).sum::<u64>() % p).collect();
                    encode(&w)
                })
                .collect();
            Perm::from_images(images).unwrap()
        })
        .collect();
    Subgroup::generate_capped(size, &gens, u64::MAX).unwrap()
}

/// Affine group of GF(p)^2 generated by the given linear parts and all
/// translations.
fn affine_plane(p: u64, mats: &[Vec<Vec<u64>>]) -> Subgroup {
    let size = (p * p) as usize;
    let pt = |i: usize| [i as u64 % p, i as u64 / p];
    let idx = |v: [u64; 2]| (v[0] + v[1] * p) as usize;
    let mut gens: Vec<Perm> = mats
        .iter()
        .map(|m| {
            let images = (0..size)
                .map(|i| {
                    let v = pt(i);
                    idx([(v[0] * m[0][0] + v[1] * m[1][0]) % p, (v[0] * m[0][1] + v[1] * m[1][1]) % p])
                })
                .collect();
            Perm::from_images(images).unwrap()
        })
        .collect();
    let shift = (0..size).map(|i| {
        let v = pt(i);
        idx([(v[0] + 1) % p, v[1]])
    });
    gens.push(Perm::from_images(shift.collect()).unwrap());
    Subgroup::generate_capped(size, &gens, u64::MAX).unwrap()
}

/// A concrete group of the given type, for the named and small parametric
/// shapes. `None` for shapes without a model.
pub fn model(d: &StructureDescriptor) -> Option<Subgroup> {
    let gen = |n: usize, cycles: &[&[&[usize]]]| {
        let gens: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(n, c).unwrap()).collect();
        Subgroup::generate_capped(n, &gens, u64::MAX).unwrap()
    };
    let m = match d.normalize() {
        D::Trivial => Subgroup::trivial(1),
        D::Cyclic(n) => {
            let c: Vec<usize> = (0..n as usize).collect();
            gen(n as usize, &[&[&c]])
        }
        D::Dihedral(n) => {
            let k = (n / 2) as usize;
            let c: Vec<usize> = (0..k).collect();
            let refl: Vec<Vec<usize>> = (1..k).filter(|&i| i < k - i).map(|i| vec![i, k - i]).collect();
            let refl: Vec<&[usize]> = refl.iter().map(|v| v.as_slice()).collect();
            let gens = [
                Perm::from_cycles(k, &[&c]).unwrap(),
                Perm::from_cycles(k, &refl).unwrap(),
            ];
            Subgroup::generate_capped(k, &gens, u64::MAX).unwrap()
        }
        D::ElemAbelian(p, k) => {
            // Translations of GF(p)^k.
            let size = p.pow(k) as usize;
            let gens: Vec<Perm> = (0..k)
                .map(|j| {
                    let step = p.pow(j) as usize;
                    let images = (0..size)
                        .map(|i| {
                            let digit = (i / step) % p as usize;
                            i - digit * step + ((digit + 1) % p as usize) * step
                        })
                        .collect();
                    Perm::from_images(images).unwrap()
                })
                .collect();
            Subgroup::generate_capped(size, &gens, u64::MAX).unwrap()
        }
        D::Semidihedral(n) => {
            // ⟨x, y⟩ acting on itself: x of order n/2, y an involution with
            // x^y = x^(n/4 − 1), realized on the cosets of ⟨y⟩ via Z/(n/2) ⋊ ⟨y⟩.
            let k = n / 2;
            let e = n / 4 - 1;
            let size = n as usize;
            // Elements (i, s) = x^i y^s, index i + k·s; right multiplication.
            let idx = |i: u64, s: u64| (i % k + k * s) as usize;
            let by_x = (0..size).map(|t| {
                let (i, s) = (t as u64 % k, t as u64 / k);
                // x^i y^s · x = x^{i + e^s} y^s
                idx(i + if s == 0 { 1 } else { e }, s)
            });
            let by_y = (0..size).map(|t| {
                let (i, s) = (t as u64 % k, t as u64 / k);
                idx(i, 1 - s)
            });
            let gens = [
                Perm::from_images(by_x.collect()).unwrap(),
                Perm::from_images(by_y.collect()).unwrap(),
            ];
            Subgroup::generate_capped(size, &gens, u64::MAX).unwrap()
        }
        D::Alt4 => gen(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]),
        D::Sym4 => gen(4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]]),
        D::Gl2_3 => matrix_group(3, 2, &[vec![vec![1, 1], vec![0, 1]], vec![vec![0, 1], vec![2, 0]], vec![vec![2, 0], vec![0, 1]]]),
        D::Extraspecial27 => matrix_group(
            3,
            3,
            &[
                vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]],
            ],
        ),
        D::Es27ByV4 => matrix_group(
            3,
            3,
            &[
                vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]],
                vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 1]],
                vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 2]],
            ],
        ),
        D::E9Gl23 => affine_plane(3, &[vec![vec![1, 1], vec![0, 1]], vec![vec![0, 1], vec![2, 0]], vec![vec![2, 0], vec![0, 1]]]),
        D::FrobCqCm(q, m) => affine_line(q, m)?,
        D::C13C3 => affine_line(13, 3)?,
        _ => return None,
    };
    Some(m)
}

/// `x ↦ a·x + b` over GF(q), q prime, with `a` of multiplicative order `m`.
fn affine_line(q: u64, m: u64) -> Option<Subgroup> {
    if !is_prime(q) || (q - 1) % m != 0 {
        return None;
    }
    let a = (1..q).find(|&a| (1..=m).find(|&e| mod_pow(a, e, q) == 1) == Some(m))?;
    let shift = (0..q as usize).map(|x| (x + 1) % q as usize).collect();
    let scale = (0..q as usize).map(|x| (x as u64 * a % q) as usize).collect();
    let gens = [Perm::from_images(shift).unwrap(), Perm::from_images(scale).unwrap()];
    Some(Subgroup::generate_capped(q as usize, &gens, u64::MAX).unwrap())
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Convenience: identify a group given by generators.
pub fn identify_group(g: &PermGroup) -> crate::error::Result<StructureDescriptor> {
    Ok(identify(&g.materialize()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_rules() {
        assert_eq!(D::Dihedral(4).normalize(), D::ElemAbelian(2, 2));
        assert_eq!(D::Dihedral(2).normalize(), D::Cyclic(2));
        assert_eq!(D::FrobEqCm(8, 1).normalize(), D::ElemAbelian(2, 3));
        assert_eq!(D::FrobEqCm(4, 3).normalize(), D::Alt4);
        assert_eq!(D::FrobCqCm(7, 2).normalize(), D::Dihedral(14));
        assert_eq!(D::FrobCqCm(13, 3).normalize(), D::C13C3);
        assert_eq!(D::E9Gl23.expected_order(), Some(432));
        assert_eq!(D::SzBorel(8, 7).expected_order(), Some(448));
    }

    #[test]
    fn models_identify_as_themselves() {
        for d in [
            D::Cyclic(9),
            D::Dihedral(8),
            D::Dihedral(18),
            D::ElemAbelian(2, 3),
            D::Semidihedral(16),
            D::Alt4,
            D::Sym4,
            D::Gl2_3,
            D::Extraspecial27,
            D::Es27ByV4,
            D::E9Gl23,
            D::C13C3,
            D::FrobCqCm(7, 3),
        ] {
            let m = model(&d).unwrap();
            assert_eq!(m.order(), d.expected_order().unwrap(), "{d}");
            assert_eq!(identify(&m), d, "{d}");
        }
        let sd = model(&D::Semidihedral(16)).unwrap();
        let hist: Vec<(u64, u64)> = sd.element_order_histogram().into_iter().collect();
        assert_eq!(hist, vec![(1, 1), (2, 5), (4, 6), (8, 4)]);
    }

    #[test]
    fn json_round_trip() {
        for d in [D::Trivial, D::SzBorel(8, 7), D::ElemAbelian(3, 2), D::E9Gl23] {
            assert_eq!(StructureDescriptor::from_json(&d.to_json()), Some(d));
        }
    }
}
