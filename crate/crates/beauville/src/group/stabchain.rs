//! Deterministic stabilizer chain (Schreier-Sims) for exact group order
//! and membership testing. No randomization: certificates built on top of
//! this must be bit-for-bit reproducible.

use crate::perm::Permutation;
use num_bigint::BigUint;
use num_traits::One;

struct Level {
    base: usize, // 1-based
    gens: Vec<Permutation>,
    /// transversal[pt-1] = Some(u) with u(base) = pt.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() {
                chain.store(0, g.clone());
            }
        }
        chain.complete();
        chain
    }

    pub fn order(&self) -> BigUint {
        let mut ord = BigUint::one();
        for level in &self.levels {
            ord *= BigUint::from(level.orbit.len());
        }
        ord
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift(0, g.clone()).is_none()
    }

    /// Strips `g` through levels `from..`; returns the level and residue at
    /// which sifting stuck, or None if `g` sifts to the identity.
    fn sift(&self, from: usize, mut g: Permutation) -> Option<(usize, Permutation)> {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            if g.is_identity() {
                return None;
            }
            let image = g.apply(level.base);
            match &level.transversal[image - 1] {
                Some(u) => {
                    g = g.compose(&u.inverse()).expect("equal degrees");
                }
                None => return Some((i, g)),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some((self.levels.len(), g))
        }
    }

    /// Stores a generator at `level`, creating the level if needed. The
    /// permutation must fix the base points of all earlier levels.
    fn store(&mut self, level: usize, g: Permutation) {
        debug_assert!(!g.is_identity());
        if level == self.levels.len() {
            let base = (1..=self.degree)
                .find(|&i| g.apply(i) != i)
                .expect("non-identity moves a point");
            let mut transversal = vec![None; self.degree];
            transversal[base - 1] = Some(Permutation::identity(self.degree));
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal,
                orbit: vec![base],
            });
        }
        self.levels[level].gens.push(g);
    }

    /// The group at `level` is generated by the generators stored at this
    /// level and every deeper one (all of which fix the earlier base points).
    fn gens_from(&self, level: usize) -> Vec<Permutation> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// Runs Schreier-Sims to a fixpoint: rebuild every orbit, look for a
    /// Schreier generator that fails to sift through the chain below its
    /// level, store its residue where it stuck, repeat. Each insertion
    /// strictly grows an orbit (or adds a level), so this terminates; on
    /// exit every level's stabilizer is generated below it.
    fn complete(&mut self) {
        loop {
            for i in 0..self.levels.len() {
                self.rebuild_orbit(i);
            }
            match self.find_failure() {
                Some((stuck, residue)) => self.store(stuck, residue),
                None => break,
            }
        }
    }

    fn find_failure(&self) -> Option<(usize, Permutation)> {
        for level in (0..self.levels.len()).rev() {
            let gens = self.gens_from(level);
            let lvl = &self.levels[level];
            for &beta in &lvl.orbit {
                let u = lvl.transversal[beta - 1].as_ref().expect("orbit point has rep");
                for s in &gens {
                    let target = s.apply(beta);
                    let u2 = lvl.transversal[target - 1]
                        .as_ref()
                        .expect("orbit closed under generators");
                    let schreier = u
                        .compose(s)
                        .and_then(|p| p.compose(&u2.inverse()))
                        .expect("equal degrees");
                    if schreier.is_identity() {
                        continue;
                    }
                    if let Some((stuck, residue)) = self.sift(level + 1, schreier) {
                        return Some((stuck, residue));
                    }
                }
            }
        }
        None
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let gens = self.gens_from(level);
        let lvl = &mut self.levels[level];
        let base = lvl.base;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base - 1] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![base];
        let mut head = 0;
        while head < orbit.len() {
            let pt = orbit[head];
            head += 1;
            let u = transversal[pt - 1].clone().expect("visited point has rep");
            for s in &gens {
                let img = s.apply(pt);
                if transversal[img - 1].is_none() {
                    transversal[img - 1] = Some(u.compose(s).expect("equal degrees"));
                    orbit.push(img);
                }
            }
        }
        lvl.transversal = transversal;
        lvl.orbit = orbit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycles;

    #[test]
    fn orders_of_known_groups() {
        // <(1,2,3,4,5), (3,4,5)> = A5.
        let chain = StabChain::new(5, &[cycles("(1,2,3,4,5)", 5), cycles("(3,4,5)", 5)]);
        assert_eq!(chain.order(), BigUint::from(60u32));

        // Standard generators of S_n.
        for n in [3usize, 5, 7] {
            let long: Vec<usize> = (1..=n).collect();
            let chain = StabChain::new(
                n,
                &[
                    Permutation::from_cycles(&[vec![1, 2]], n).unwrap(),
                    Permutation::from_cycles(&[long], n).unwrap(),
                ],
            );
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), BigUint::from(fact));
        }

        // Cyclic group.
        let chain = StabChain::new(6, &[cycles("(1,2,3,4,5,6)", 6)]);
        assert_eq!(chain.order(), BigUint::from(6u32));
    }

    #[test]
    fn membership() {
        let chain = StabChain::new(5, &[cycles("(1,2,3,4,5)", 5), cycles("(3,4,5)", 5)]);
        assert!(chain.contains(&cycles("(1,2)(3,4)", 5)));
        assert!(chain.contains(&Permutation::identity(5)));
        // Odd permutations are not in A5.
        assert!(!chain.contains(&cycles("(1,2)", 5)));
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(4, &[]);
        assert_eq!(chain.order(), BigUint::one());
        assert!(chain.contains(&Permutation::identity(4)));
        assert!(!chain.contains(&cycles("(1,2)", 4)));
    }
}
