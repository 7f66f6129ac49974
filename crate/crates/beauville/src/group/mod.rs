//! Orbits, block systems, primitivity, and exact group order for permutation
//! groups at desk degrees (n <= 64 or so).

mod jordan;
mod stabchain;

pub use jordan::{
    is_alternating, jordan_certificates, AlternatingCheck, Criterion, GenerationProof,
    JordanCertificate, PrimitivityEvidence,
};
pub use stabchain::StabChain;

use crate::perm::Permutation;
use num_bigint::BigUint;
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// A permutation group given by generators, with lazily computed structure.
/// All caches are filled at most once; queries after construction are
/// read-only, so handles can be shared freely across threads.
pub struct GroupHandle {
    degree: usize,
    gens: Vec<Permutation>,
    orbits: OnceLock<Vec<Vec<usize>>>,
    blocks: OnceLock<Vec<Vec<Vec<usize>>>>,
    chain: OnceLock<StabChain>,
}

impl GroupHandle {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> GroupHandle {
        assert!(!gens.is_empty(), "generator list must be nonempty");
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        GroupHandle {
            degree,
            gens,
            orbits: OnceLock::new(),
            blocks: OnceLock::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// The finest partition of {1..n} closed under all generators.
    pub fn orbits(&self) -> &Vec<Vec<usize>> {
        self.orbits.get_or_init(|| point_orbits(self.degree, &self.gens))
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// All minimal nontrivial block systems, found by minimal-block closure
    /// from the point pairs {1, b}. Requires transitivity.
    pub fn block_systems(&self) -> &Vec<Vec<Vec<usize>>> {
        assert!(self.is_transitive(), "block systems require a transitive group");
        self.blocks.get_or_init(|| {
            let mut seen = BTreeSet::new();
            let mut systems = Vec::new();
            for b in 2..=self.degree {
                let partition = minimal_block_partition(self.degree, &self.gens, 1, b);
                let nontrivial = partition.len() > 1 && partition.iter().any(|c| c.len() > 1);
                if nontrivial && seen.insert(partition.clone()) {
                    systems.push(partition);
                }
            }
            systems
        })
    }

    pub fn is_primitive(&self) -> bool {
        self.is_transitive() && self.block_systems().is_empty()
    }

    pub fn stab_chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.gens))
    }

    /// Exact order of the generated group.
    pub fn order(&self) -> BigUint {
        self.stab_chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.stab_chain().contains(g)
    }
}

/// Orbit partition of {1..n} under a generator list, each orbit ascending,
/// orbits ordered by least point.
pub fn point_orbits(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for start in 1..=degree {
        if seen[start - 1] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start - 1] = true;
        let mut head = 0;
        while head < orbit.len() {
            let pt = orbit[head];
            head += 1;
            for g in gens {
                let img = g.apply(pt);
                if !seen[img - 1] {
                    seen[img - 1] = true;
                    orbit.push(img);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// n!/2 as a big integer.
pub fn alternating_order(n: usize) -> BigUint {
    let mut fact = BigUint::from(1u32);
    for i in 2..=n {
        fact *= BigUint::from(i);
    }
    fact / BigUint::from(2u32)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb.max(ra)] = rb.min(ra);
        true
    }
}

/// The finest G-congruence in which `a` and `b` share a class (Atkinson's
/// minimal block algorithm). Returned as a sorted partition of {1..n}.
fn minimal_block_partition(
    degree: usize,
    gens: &[Permutation],
    a: usize,
    b: usize,
) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(degree);
    uf.union(a - 1, b - 1);
    let mut queue = vec![(a - 1, b - 1)];
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let gx = g.apply(x + 1) - 1;
            let gy = g.apply(y + 1) - 1;
            if uf.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for pt in 0..degree {
        let root = uf.find(pt);
        classes.entry(root).or_default().push(pt + 1);
    }
    classes.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycles;

    #[test]
    fn orbit_partition() {
        let h = GroupHandle::new(4, vec![cycles("(1,2)(3,4)", 4)]);
        assert_eq!(h.orbits(), &vec![vec![1, 2], vec![3, 4]]);
        assert!(!h.is_transitive());

        let h = GroupHandle::new(6, vec![cycles("(1,2,3,4,5,6)", 6)]);
        assert!(h.is_transitive());
    }

    #[test]
    fn double_transitive_pair_is_transitive() {
        // Degree-6 triple of type (4,4,5): the generated group is doubly
        // transitive, in particular transitive.
        let x = cycles("(1,2,3,4)(5,6)", 6);
        let y = cycles("(1,3)(2,5,6,4)", 6);
        let h = GroupHandle::new(6, vec![x, y]);
        assert!(h.is_transitive());
        assert!(h.is_primitive());
    }

    #[test]
    fn block_systems_of_hexagon_rotation() {
        let h = GroupHandle::new(6, vec![cycles("(1,2,3,4,5,6)", 6)]);
        let systems = h.block_systems();
        assert!(systems.contains(&vec![vec![1, 3, 5], vec![2, 4, 6]]));
        assert!(systems.contains(&vec![vec![1, 4], vec![2, 5], vec![3, 6]]));
        assert_eq!(systems.len(), 2);
        assert!(!h.is_primitive());
    }

    #[test]
    fn transitive_with_coprime_long_cycle_is_primitive() {
        // Transitive group of degree n with an m-cycle, gcd(m,n) = 1 and
        // m > n/2, must be primitive.
        let x = cycles("(1,2,3,4,5,6,7)", 12);
        let y = cycles("(1,8,9)(2,10,11)(3,12,7)", 12);
        let h = GroupHandle::new(12, vec![x, y]);
        assert!(h.is_transitive());
        assert!(h.is_primitive());
    }

    #[test]
    fn group_orders() {
        let h = GroupHandle::new(5, vec![cycles("(1,2,3,4,5)", 5), cycles("(3,4,5)", 5)]);
        assert_eq!(h.order(), BigUint::from(60u32));

        let h = GroupHandle::new(7, vec![cycles("(1,2)", 7), cycles("(1,2,3,4,5,6,7)", 7)]);
        assert_eq!(h.order(), BigUint::from(5040u32));

        // The type-(3,5,7) triple generates all of A7 (order 2520).
        let h = GroupHandle::new(7, vec![cycles("(1,2,3)", 7), cycles("(3,4,5,6,7)", 7)]);
        assert_eq!(h.order(), BigUint::from(2520u32));
    }
}
