//! Permutation utilities and a stabilizer chain (Schreier-Sims) for exact
//! group orders from a generator set.

use std::collections::HashMap;

pub(crate) type Perm = Vec<usize>;

pub(crate) fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub(crate) fn is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// (a o b)(v) = a[b[v]].
pub(crate) fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&v| a[v]).collect()
}

pub(crate) fn invert(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

struct Level {
    base_point: usize,
    /// Generators fixing all earlier base points.
    gens: Vec<Perm>,
    /// Orbit transversal: point -> perm mapping base_point to point.
    transversal: HashMap<usize, Perm>,
}

/// Stabilizer chain built incrementally from generators; yields the exact
/// group order. Deterministic.
pub(crate) struct StabilizerChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn from_generators(n: usize, gens: &[Perm]) -> Self {
        let mut chain = StabilizerChain { n, levels: Vec::new() };
        for g in gens {
            chain.insert(g.clone());
        }
        chain
    }

    pub fn order(&self) -> Option<u128> {
        let mut order: u128 = 1;
        for level in &self.levels {
            order = order.checked_mul(level.transversal.len() as u128)?;
        }
        Some(order)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (residue, _) = self.sift(g, 0);
        is_identity(&residue)
    }

    fn insert(&mut self, g: Perm) {
        let (residue, level) = self.sift(&g, 0);
        if is_identity(&residue) {
            return;
        }
        self.place(level, residue);
        self.close();
    }

    /// Adds a residue at a level, creating the level if needed.
    fn place(&mut self, level: usize, residue: Perm) {
        if level == self.levels.len() {
            let base_point = residue
                .iter()
                .enumerate()
                .find(|&(i, &v)| i != v)
                .map(|(i, _)| i)
                .expect("residue is not the identity");
            let mut transversal = HashMap::new();
            transversal.insert(base_point, identity(self.n));
            self.levels.push(Level { base_point, gens: Vec::new(), transversal });
        }
        self.levels[level].gens.push(residue);
    }

    /// Rebuilds all orbits and processes Schreier generators until the
    /// chain is closed (every Schreier generator sifts to the identity).
    fn close(&mut self) {
        loop {
            for i in 0..self.levels.len() {
                self.rebuild_orbit(i);
            }
            match self.find_violation() {
                Some((residue, level)) => self.place(level, residue),
                None => return,
            }
        }
    }

    /// Generators available at level `i`: those stored at levels >= i (all
    /// of which fix base points 0..i).
    fn gens_from(&self, i: usize) -> Vec<Perm> {
        self.levels[i..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let gens = self.gens_from(i);
        let base = self.levels[i].base_point;
        let mut transversal = HashMap::new();
        transversal.insert(base, identity(self.n));
        let mut queue = vec![base];
        while let Some(p) = queue.pop() {
            let u_p = transversal[&p].clone();
            for s in &gens {
                let q = s[p];
                if !transversal.contains_key(&q) {
                    transversal.insert(q, compose(s, &u_p));
                    queue.push(q);
                }
            }
        }
        self.levels[i].transversal = transversal;
    }

    fn find_violation(&self) -> Option<(Perm, usize)> {
        for i in 0..self.levels.len() {
            let gens = self.gens_from(i);
            let points: Vec<usize> = self.levels[i].transversal.keys().copied().collect();
            for &p in &points {
                let u_p = &self.levels[i].transversal[&p];
                for s in &gens {
                    let q = s[p];
                    let u_q = self
                        .levels[i]
                        .transversal
                        .get(&q)
                        .expect("orbit is closed under generators");
                    let schreier = compose(&invert(u_q), &compose(s, u_p));
                    let (residue, level) = self.sift(&schreier, i + 1);
                    if !is_identity(&residue) {
                        return Some((residue, level));
                    }
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped.
    fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let p = h[self.levels[i].base_point];
            match self.levels[i].transversal.get(&p) {
                None => return (h, i),
                Some(u) => h = compose(&invert(u), &h),
            }
        }
        let level = self.levels.len();
        (h, level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_order() {
        let n = 6;
        let rotation: Perm = (0..n).map(|i| (i + 1) % n).collect();
        let chain = StabilizerChain::from_generators(n, &[rotation]);
        assert_eq!(chain.order(), Some(6));
    }

    #[test]
    fn symmetric_group_from_two_generators() {
        let n = 5;
        let rotation: Perm = (0..n).map(|i| (i + 1) % n).collect();
        let swap: Perm = vec![1, 0, 2, 3, 4];
        let chain = StabilizerChain::from_generators(n, &[rotation, swap]);
        assert_eq!(chain.order(), Some(120));
        assert!(chain.contains(&vec![4, 3, 2, 1, 0]));
    }

    #[test]
    fn dihedral_group() {
        let n = 8;
        let rotation: Perm = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Perm = (0..n).map(|i| (n - i) % n).collect();
        let chain = StabilizerChain::from_generators(n, &[rotation, reflection]);
        assert_eq!(chain.order(), Some(16));
        assert!(!chain.contains(&vec![1, 0, 2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn trivial_group() {
        let chain = StabilizerChain::from_generators(4, &[]);
        assert_eq!(chain.order(), Some(1));
        assert!(chain.contains(&identity(4)));
    }
}
