//! Base and strong generating set via deterministic Schreier–Sims.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Default cap on explicit element lists.
pub const DEFAULT_ELEMENT_CAP: u64 = 200_000;

/// Reads `SUBMAX_CAP_ELEMENTS`, falling back to [`DEFAULT_ELEMENT_CAP`].
pub fn element_cap() -> u64 {
    std::env::var("SUBMAX_CAP_ELEMENTS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Perm>,
    /// Points of the basic orbit, in discovery order.
    orbit: Vec<usize>,
    /// `transversal[x]` maps `point` to `x`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Level {
        let mut l = Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        l.rebuild(degree);
        l
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Perm::identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            let ux = self.transversal[x].clone().unwrap();
            for s in &self.gens {
                let y = s.image(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.mul(s));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group with a stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// Runs Schreier–Sims. New base points are always the first point moved
    /// by the offending generator, so the result is deterministic.
    pub fn from_generators(degree: usize, gens: &[Perm]) -> Result<PermGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::MalformedPermutation(format!(
                    "generator of degree {} in a group of degree {degree}",
                    g.degree()
                )));
            }
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut group = PermGroup {
            degree,
            gens: gens.clone(),
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return Ok(group);
        }
        for g in &gens {
            if group.levels.iter().all(|l| g.image(l.point) == l.point) {
                let p = g.first_moved_point().unwrap();
                group.levels.push(Level::new(p, degree));
            }
        }
        for g in &gens {
            group.add_strong_generator(g.clone(), 0);
        }
        group.schreier_sims();
        Ok(group)
    }

    fn add_strong_generator(&mut self, g: Perm, from: usize) {
        // g fixes the base points before the first level it moves
        let mut upto = from;
        while upto < self.levels.len() && g.image(self.levels[upto].point) == self.levels[upto].point {
            upto += 1;
        }
        for l in from..=upto.min(self.levels.len() - 1) {
            self.levels[l].gens.push(g.clone());
            self.levels[l].rebuild(self.degree);
        }
    }

    fn schreier_sims(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            let mut restart_at = None;
            'outer: for oi in 0..self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[oi];
                for gi in 0..self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let x = &level.gens[gi];
                    let u_beta = level.transversal[beta].as_ref().unwrap();
                    let img = x.image(beta);
                    let u_img = level.transversal[img].as_ref().unwrap();
                    let h = u_beta.mul(x).mul(&u_img.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.strip(&h, lvl + 1);
                    if j < self.levels.len() || !residue.is_identity() {
                        if j == self.levels.len() {
                            let p = residue.first_moved_point().unwrap();
                            self.levels.push(Level::new(p, degree));
                        }
                        for l in (lvl + 1)..=j {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild(degree);
                        }
                        restart_at = Some(j + 1);
                        break 'outer;
                    }
                }
            }
            match restart_at {
                Some(r) => i = r,
                None => i -= 1,
            }
        }
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.image(level.point);
            match &level.transversal[beta] {
                Some(u) => h = h.mul(&u.inverse()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.strip(g, 0).0.is_identity()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Visits every element exactly once, without storing them.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm)) {
        if self.levels.is_empty() {
            f(&self.identity());
            return;
        }
        let top = self.levels.len() - 1;
        let id = self.identity();
        self.visit(top, &id, &mut f);
    }

    // Elements factor as u_k ⋯ u_1 with u_i in the i-th transversal.
    fn visit(&self, level: usize, prefix: &Perm, f: &mut impl FnMut(&Perm)) {
        let l = &self.levels[level];
        for &x in &l.orbit {
            let u = l.transversal[x].as_ref().unwrap();
            let g = prefix.mul(u);
            if level == 0 {
                f(&g);
            } else {
                self.visit(level - 1, &g, f);
            }
        }
    }

    /// Visits elements until `f` returns `false`; returns whether the walk
    /// finished.
    pub fn try_for_each_element(&self, mut f: impl FnMut(&Perm) -> bool) -> bool {
        if self.levels.is_empty() {
            return f(&self.identity());
        }
        let top = self.levels.len() - 1;
        let id = self.identity();
        self.try_visit(top, &id, &mut f)
    }

    fn try_visit(&self, level: usize, prefix: &Perm, f: &mut impl FnMut(&Perm) -> bool) -> bool {
        let l = &self.levels[level];
        for &x in &l.orbit {
            let u = l.transversal[x].as_ref().unwrap();
            let g = prefix.mul(u);
            let keep_going = if level == 0 {
                f(&g)
            } else {
                self.try_visit(level - 1, &g, f)
            };
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// Sorted element list, subject to `cap`.
    pub fn elements_capped(&self, cap: u64) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded {
                cap: "materialization",
                value: order,
                limit: cap,
            });
        }
        let mut out = Vec::with_capacity(order as usize);
        self.for_each_element(|g| out.push(g.clone()));
        out.sort_unstable();
        Ok(out)
    }

    /// Sorted element list under the configured cap.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        self.elements_capped(element_cap())
    }

    /// The group as an explicit [`Subgroup`] of itself.
    pub fn materialize(&self) -> Result<Subgroup> {
        let elements = self.elements()?;
        Ok(Subgroup::from_sorted_unchecked(self.gens.clone(), elements, self.degree))
    }

    /// Orbit of a point under the generators.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_of(self.degree, &self.gens, point)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }
}

/// Orbit of `point` under `gens`, in discovery order.
pub fn orbit_of(degree: usize, gens: &[Perm], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut i = 0;
    while i < orbit.len() {
        let x = orbit[i];
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit
}

/// Sorted multiset of orbit lengths of `gens` on `0..degree`.
pub fn orbit_lengths(degree: usize, gens: &[Perm]) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if seen[p] {
            continue;
        }
        let orb = orbit_of(degree, gens, p);
        for &x in &orb {
            seen[x] = true;
        }
        out.push(orb.len());
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let cycle: Vec<usize> = (0..n).collect();
        let gens = vec![
            Perm::from_cycles(n, &[&cycle]).unwrap(),
            Perm::from_cycles(n, &[&[0, 1]]).unwrap(),
        ];
        PermGroup::from_generators(n, &gens).unwrap()
    }

    #[test]
    fn small_orders() {
        let c3 = PermGroup::from_generators(3, &[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(PermGroup::from_generators(4, &[]).unwrap().order(), 1);
        for n in 2..=7 {
            let expected: u64 = (1..=n as u64).product();
            assert_eq!(sym(n).order(), expected);
        }
    }

    #[test]
    fn membership_and_enumeration() {
        let s5 = sym(5);
        let a5 = PermGroup::from_generators(
            5,
            &[
                Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
                Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        let t = Perm::from_cycles(5, &[&[0, 1]]).unwrap();
        assert!(s5.contains(&t));
        assert!(!a5.contains(&t));
        let els = a5.elements().unwrap();
        assert_eq!(els.len(), 60);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        assert!(els.iter().all(|g| a5.contains(g)));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(sym(6).elements_capped(100).is_err());
    }

    #[test]
    fn malformed_degree() {
        let g = Perm::identity(4);
        assert!(PermGroup::from_generators(5, &[g]).is_err());
    }
}
