//! Concrete permutation representations of the Thompson-list groups, their
//! automorphism groups, and SL₂(5).

use std::collections::HashMap;

use crate::bsgs::PermGroup;
use crate::error::{Error, Result};
use crate::ffield::{FieldElement, FieldSpec};
use crate::perm::Perm;
use crate::pi_arith::{prime_power, Family, FamilyKey};
use crate::subgroup::Subgroup;

/// A simple group `S` inside a group of automorphisms `S ≤ A ≤ Aut(S)`,
/// both acting on the same points.
#[derive(Debug, Clone)]
pub struct EmbeddedSimple {
    pub key: FamilyKey,
    pub ambient: PermGroup,
    pub socle: PermGroup,
    /// Elements which together with the socle generate the ambient group.
    pub outer_reps: Vec<Perm>,
}

impl EmbeddedSimple {
    pub fn degree(&self) -> usize {
        self.ambient.degree()
    }

    /// Index `|A : S|`.
    pub fn outer_order(&self) -> u64 {
        self.ambient.order() / self.socle.order()
    }

    /// One element from each coset `S·o` of the socle in the ambient group,
    /// identity first.
    pub fn coset_transversal(&self) -> Vec<Perm> {
        let mut reps = vec![self.ambient.identity()];
        let mut i = 0;
        while i < reps.len() && (reps.len() as u64) < self.outer_order() {
            for o in &self.outer_reps {
                let cand = reps[i].mul(o);
                let new = reps
                    .iter()
                    .all(|r| !self.socle.contains(&cand.mul(&r.inverse())));
                if new {
                    reps.push(cand);
                }
            }
            i += 1;
        }
        reps
    }
}

/// `x ↦ (a·x^(p^e) + b) / (c·x^(p^e) + d)` on the projective line; point 0
/// is ∞ and point `1 + i` is the field element of index `i`.
fn mobius(f: &FieldSpec, m: [&FieldElement; 4], frob: u32) -> Perm {
    let [a, b, c, d] = m;
    let q = f.size() as usize;
    let mut images = vec![0usize; q + 1];
    images[0] = if f.is_zero(c) {
        0
    } else {
        1 + f.index(&f.mul(a, &f.inv(c).unwrap()))
    };
    for i in 0..q {
        let x = f.frobenius(&f.element(i), frob);
        let num = f.add(&f.mul(a, &x), b);
        let den = f.add(&f.mul(c, &x), d);
        images[1 + i] = if f.is_zero(&den) {
            0
        } else {
            1 + f.index(&f.mul(&num, &f.inv(&den).unwrap()))
        };
    }
    Perm::from_images(images).expect("Möbius map is a bijection")
}

fn field_of(q: u64) -> Result<FieldSpec> {
    let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
    FieldSpec::new(p, k)
}

fn check_order(name: &str, g: &PermGroup, expected: u64) -> Result<()> {
    if g.order() != expected {
        return Err(Error::Construction(format!(
            "{name}: order {} but expected {expected}",
            g.order()
        )));
    }
    Ok(())
}

struct LineMaps {
    f: FieldSpec,
    translation: Perm,
    square_scaling: Perm,
    inversion: Perm,
    scaling: Perm,
    frobenius: Perm,
}

fn line_maps(q: u64) -> Result<LineMaps> {
    let f = field_of(q)?;
    let (zero, one) = (f.zero(), f.one());
    let lambda = f.generator();
    let lambda2 = f.mul(&lambda, &lambda);
    let minus_one = f.neg(&one);
    Ok(LineMaps {
        translation: mobius(&f, [&one, &one, &zero, &one], 0),
        square_scaling: mobius(&f, [&lambda2, &zero, &zero, &one], 0),
        inversion: mobius(&f, [&zero, &minus_one, &one, &zero], 0),
        scaling: mobius(&f, [&lambda, &zero, &zero, &one], 0),
        frobenius: mobius(&f, [&one, &zero, &zero, &one], 1),
        f,
    })
}

/// PSL₂(q) on the q+1 points of the projective line.
pub fn psl2(q: u64) -> Result<PermGroup> {
    if q < 4 {
        return Err(Error::InvalidInput(format!("psl2 needs q ≥ 4, got {q}")));
    }
    let m = line_maps(q)?;
    let g = PermGroup::from_generators(
        q as usize + 1,
        &[m.translation, m.square_scaling, m.inversion],
    )?;
    let expected = q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 };
    check_order("psl2", &g, expected)?;
    Ok(g)
}

/// The translation `x ↦ x + 1` and the scaling `x ↦ λx` (λ primitive), which
/// generate the stabilizer of ∞ in PGL₂(q).
pub fn borel_generators(q: u64) -> Result<(Perm, Perm)> {
    let m = line_maps(q)?;
    Ok((m.translation, m.scaling))
}

/// PGL₂(q) on the projective line.
pub fn pgl2(q: u64) -> Result<PermGroup> {
    let m = line_maps(q)?;
    let g = PermGroup::from_generators(q as usize + 1, &[m.translation, m.scaling, m.inversion])?;
    check_order("pgl2", &g, q * (q * q - 1))?;
    Ok(g)
}

fn l2_embedding(key: FamilyKey) -> Result<EmbeddedSimple> {
    let q = key.q;
    let m = line_maps(q)?;
    let socle = psl2(q)?;
    let outer_reps = match key.family {
        Family::L2TwoP => vec![m.frobenius.clone()],
        Family::L2ThreeP => vec![m.scaling.clone(), m.frobenius.clone()],
        Family::L2Prime => vec![m.scaling.clone()],
        _ => unreachable!(),
    };
    let _ = &m.f;
    let mut gens = socle.generators().to_vec();
    gens.extend(outer_reps.iter().cloned());
    let ambient = PermGroup::from_generators(q as usize + 1, &gens)?;
    check_order("Aut(L2(q))", &ambient, socle.order() * key.outer_order())?;
    Ok(EmbeddedSimple {
        key,
        ambient,
        socle,
        outer_reps,
    })
}

type Vec4 = [FieldElement; 4];

/// 4×4 matrices over GF(2^k) generating Sz(q) (row vectors, `v ↦ vM`).
fn suzuki_matrices(f: &FieldSpec) -> Result<Vec<Vec<Vec<FieldElement>>>> {
    let k = f.degree();
    let m = (k - 1) / 2;
    let twist = |a: &FieldElement| f.suzuki_twist(a).unwrap();
    let (zero, one) = (f.zero(), f.one());
    let s = |a: &FieldElement, b: &FieldElement| -> Vec<Vec<FieldElement>> {
        let a2 = f.mul(a, a);
        let at = twist(a);
        let r30 = f.add(&f.add(&f.mul(&a2, &at), &f.mul(a, b)), &twist(b));
        let r31 = f.add(&f.mul(a, &at), b);
        vec![
            vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
            vec![a.clone(), one.clone(), zero.clone(), zero.clone()],
            vec![b.clone(), at.clone(), one.clone(), zero.clone()],
            vec![r30, r31, a.clone(), one.clone()],
        ]
    };
    let lambda = f.generator();
    let p2m = 1u64 << m;
    let n = f.size() - 1;
    let lp = |e: u64| f.pow(&lambda, e % n);
    let diag = vec![
        vec![lp(1 + p2m), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), lp(p2m), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), lp(n - p2m % n), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), lp(n - (1 + p2m) % n)],
    ];
    let anti = (0..4)
        .map(|i| (0..4).map(|j| if i + j == 3 { one.clone() } else { zero.clone() }).collect())
        .collect();
    Ok(vec![s(&one, &zero), s(&zero, &one), s(&lambda, &zero), diag, anti])
}

fn row_times(f: &FieldSpec, v: &Vec4, m: &[Vec<FieldElement>]) -> Vec4 {
    std::array::from_fn(|j| {
        (0..4).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&v[i], &m[i][j])))
    })
}

/// Scales so that the first nonzero coordinate is 1.
fn normalize(f: &FieldSpec, v: Vec4) -> Vec4 {
    let lead = v.iter().find(|x| !f.is_zero(x)).expect("nonzero vector").clone();
    let inv = f.inv(&lead).unwrap();
    v.map(|x| f.mul(&x, &inv))
}

/// Sz(q) on the ovoid, together with the field automorphism x ↦ x² acting
/// on coordinates.
fn suzuki_pair(q: u64) -> Result<(PermGroup, Perm)> {
    let f = field_of(q)?;
    if f.characteristic() != 2 || f.degree() % 2 == 0 || f.degree() < 3 {
        return Err(Error::InvalidInput(format!("Sz(q) needs q = 2^p with p odd prime, got {q}")));
    }
    let mats = suzuki_matrices(&f)?;
    let (zero, one) = (f.zero(), f.one());
    let base: Vec4 = [zero.clone(), zero.clone(), zero, one];
    let mut points = vec![base.clone()];
    let mut index: HashMap<Vec4, usize> = HashMap::new();
    index.insert(base, 0);
    let mut i = 0;
    while i < points.len() {
        for m in &mats {
            let w = normalize(&f, row_times(&f, &points[i], m));
            if !index.contains_key(&w) {
                index.insert(w.clone(), points.len());
                points.push(w);
            }
        }
        i += 1;
    }
    if points.len() as u64 != q * q + 1 {
        return Err(Error::Construction(format!(
            "Suzuki ovoid has {} points, expected {}",
            points.len(),
            q * q + 1
        )));
    }
    let act = |map: &dyn Fn(&Vec4) -> Vec4| -> Perm {
        let images = points.iter().map(|v| index[&normalize(&f, map(v))]).collect();
        Perm::from_images(images).expect("action on the ovoid")
    };
    let gens: Vec<Perm> = mats.iter().map(|m| act(&|v| row_times(&f, v, m))).collect();
    let frob = act(&|v| v.clone().map(|x| f.frobenius(&x, 1)));
    let g = PermGroup::from_generators(points.len(), &gens)?;
    check_order("sz", &g, q * q * (q - 1) * (q * q + 1))?;
    Ok((g, frob))
}

/// Sz(q) on the q²+1 points of the Suzuki ovoid.
pub fn sz(q: u64) -> Result<PermGroup> {
    Ok(suzuki_pair(q)?.0)
}

/// Points and lines of PG(2,3): normalized vectors in lexicographic order,
/// lines as sorted point-index lists sorted lexicographically.
struct Plane {
    points: Vec<[u64; 3]>,
    lines: Vec<Vec<usize>>,
}

fn plane() -> Plane {
    let mut points = Vec::new();
    for x in 0..3u64 {
        for y in 0..3u64 {
            for z in 0..3u64 {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    points.push(v);
                }
            }
        }
    }
    let dot = |u: &[u64; 3], v: &[u64; 3]| (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % 3;
    let mut lines: Vec<Vec<usize>> = points
        .iter()
        .map(|u| (0..points.len()).filter(|&i| dot(u, &points[i]) == 0).collect())
        .collect();
    lines.sort();
    Plane { points, lines }
}

fn plane_point_index(pl: &Plane, v: [u64; 3]) -> usize {
    let lead = *v.iter().find(|&&c| c != 0).expect("nonzero");
    let inv = if lead == 1 { 1 } else { 2 };
    let w = v.map(|c| c * inv % 3);
    pl.points.iter().position(|p| *p == w).unwrap()
}

fn plane_matrix_action(pl: &Plane, m: [[u64; 3]; 3], with_lines: bool) -> Perm {
    let mut images: Vec<usize> = pl
        .points
        .iter()
        .map(|v| {
            let w = std::array::from_fn(|j| (0..3).map(|i| v[i] * m[i][j]).sum::<u64>() % 3);
            plane_point_index(pl, w)
        })
        .collect();
    if with_lines {
        let n = pl.points.len();
        for line in &pl.lines {
            let mut img: Vec<usize> = line.iter().map(|&p| images[p]).collect();
            img.sort();
            images.push(n + pl.lines.iter().position(|l| *l == img).unwrap());
        }
    }
    Perm::from_images(images).expect("collineation")
}

const L3_GENERATORS: [[[u64; 3]; 3]; 2] = [
    [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
];

/// L₃(3) on the 13 points of PG(2,3).
pub fn l3_3() -> Result<PermGroup> {
    let pl = plane();
    let gens: Vec<Perm> = L3_GENERATORS
        .iter()
        .map(|&m| plane_matrix_action(&pl, m, false))
        .collect();
    let g = PermGroup::from_generators(13, &gens)?;
    check_order("l3_3", &g, 5616)?;
    Ok(g)
}

fn l3_3_embedding() -> Result<EmbeddedSimple> {
    let pl = plane();
    let gens: Vec<Perm> = L3_GENERATORS
        .iter()
        .map(|&m| plane_matrix_action(&pl, m, true))
        .collect();
    let socle = PermGroup::from_generators(26, &gens)?;
    check_order("L3(3) on points and lines", &socle, 5616)?;
    // The polarity: point v ↔ line v^⊥.
    let dot = |u: &[u64; 3], v: &[u64; 3]| (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % 3;
    let mut images = vec![0usize; 26];
    for (i, u) in pl.points.iter().enumerate() {
        let perp: Vec<usize> = (0..13).filter(|&j| dot(u, &pl.points[j]) == 0).collect();
        let l = pl.lines.iter().position(|x| *x == perp).unwrap();
        images[i] = 13 + l;
        images[13 + l] = i;
    }
    let gamma = Perm::from_images(images)?;
    let mut all = gens;
    all.push(gamma.clone());
    let ambient = PermGroup::from_generators(26, &all)?;
    check_order("Aut(L3(3))", &ambient, 11232)?;
    Ok(EmbeddedSimple {
        key: FamilyKey::l3_3(),
        ambient,
        socle,
        outer_reps: vec![gamma],
    })
}

/// `S ≤ A ≤ Aut(S)` with `A = Aut(S)` for every family.
pub fn aut_embedding(key: FamilyKey) -> Result<EmbeddedSimple> {
    match key.family {
        Family::L2TwoP | Family::L2ThreeP | Family::L2Prime => l2_embedding(key),
        Family::Sz => {
            let (socle, frob) = suzuki_pair(key.q)?;
            let mut gens = socle.generators().to_vec();
            gens.push(frob.clone());
            let ambient = PermGroup::from_generators(socle.degree(), &gens)?;
            check_order("Aut(Sz(q))", &ambient, socle.order() * key.outer_order())?;
            Ok(EmbeddedSimple {
                key,
                ambient,
                socle,
                outer_reps: vec![frob],
            })
        }
        Family::L3Three => l3_3_embedding(),
    }
}

/// SL₂(5) on the 24 nonzero vectors of GF(5)², listed lexicographically.
pub fn sl2_5() -> Result<PermGroup> {
    let vectors: Vec<[u64; 2]> = (0..5u64)
        .flat_map(|x| (0..5u64).map(move |y| [x, y]))
        .filter(|v| *v != [0, 0])
        .collect();
    let act = |m: [[u64; 2]; 2]| -> Perm {
        let images = vectors
            .iter()
            .map(|v| {
                let w = [(v[0] * m[0][0] + v[1] * m[1][0]) % 5, (v[0] * m[0][1] + v[1] * m[1][1]) % 5];
                vectors.iter().position(|u| *u == w).unwrap()
            })
            .collect();
        Perm::from_images(images).expect("matrix action")
    };
    let g = PermGroup::from_generators(24, &[act([[1, 1], [0, 1]]), act([[0, 4], [1, 0]])])?;
    check_order("sl2_5", &g, 120)?;
    Ok(g)
}

/// Whether a materialized group is simple: the normal closure of every
/// nontrivial element is the whole group. One element per conjugacy class
/// is tested.
pub fn is_simple(g: &PermGroup) -> Result<bool> {
    let all = g.materialize()?;
    if all.order() == 1 {
        return Ok(false);
    }
    let mut seen = vec![false; all.elements().len()];
    for (i, x) in all.elements().iter().enumerate() {
        if seen[i] || x.is_identity() {
            continue;
        }
        // Mark the conjugacy class of x.
        let mut class = vec![x.clone()];
        seen[i] = true;
        let mut j = 0;
        while j < class.len() {
            for s in g.generators() {
                let y = class[j].conj(s);
                let idx = all.index_of(&y).unwrap();
                if !seen[idx] {
                    seen[idx] = true;
                    class.push(y);
                }
            }
            j += 1;
        }
        let closure = PermGroup::from_generators(g.degree(), &class)?;
        if closure.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The socle as an explicit subgroup.
pub fn materialized_socle(emb: &EmbeddedSimple) -> Result<Subgroup> {
    emb.socle.materialize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_lines() {
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(4).unwrap().order(), 60);
        assert_eq!(psl2(27).unwrap().degree(), 28);
        assert_eq!(pgl2(7).unwrap().order(), 336);
        assert!(psl2(7).unwrap().is_transitive());
    }

    #[test]
    fn suzuki_and_plane() {
        let s = sz(8).unwrap();
        assert_eq!(s.degree(), 65);
        assert_eq!(s.order(), 29120);
        let l = l3_3().unwrap();
        assert_eq!(l.order(), 5616);
        assert_eq!(l.degree(), 13);
        assert_eq!(sl2_5().unwrap().order(), 120);
    }

    #[test]
    fn embeddings() {
        for (fam, q, order) in [
            (Family::L2Prime, 7, 336),
            (Family::L2TwoP, 8, 1512),
            (Family::L2ThreeP, 27, 58968),
            (Family::Sz, 8, 87360),
            (Family::L3Three, 3, 11232),
        ] {
            let emb = aut_embedding(FamilyKey::new(fam, q).unwrap()).unwrap();
            assert_eq!(emb.ambient.order(), order);
            assert_eq!(emb.coset_transversal().len() as u64, emb.outer_order());
            for o in &emb.outer_reps {
                assert!(emb.socle.generators().iter().all(|s| emb.socle.contains(&s.conj(o))));
            }
        }
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&psl2(7).unwrap()).unwrap());
        assert!(!is_simple(&sl2_5().unwrap()).unwrap());
    }
}
