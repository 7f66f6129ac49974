//! Full subgroup lattice of A_n for n in {5,6}, Moebius values, and the
//! lattice-inversion count of 2-bases: phi_2(H) = sum mu(K) |K|^2 over all
//! subgroups K, where mu is defined by sum_{L >= K} mu(L) = delta_{K,H}.

use super::{enumerate_alternating, CountMethod, CountReport};
use crate::error::BuildError;
use crate::perm::Permutation;
use std::collections::BTreeMap;

/// One subgroup in the lattice. Elements are indices into the sorted element
/// list of A_n (the sorted index vector is the canonical key).
#[derive(Clone, Debug)]
pub struct SubgroupNode {
    pub elements: Vec<u16>,
    pub order: usize,
    pub mu: i64,
    /// Indices of all strictly larger subgroups containing this one.
    pub supers: Vec<usize>,
}

/// Bitset over element indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    fn new(m: usize) -> ElemSet {
        ElemSet {
            words: vec![0; m.div_ceil(64)],
        }
    }
    fn insert(&mut self, i: u16) -> bool {
        let w = &mut self.words[i as usize / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }
    fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn indices(&self) -> Vec<u16> {
        let mut out = Vec::with_capacity(self.count());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros();
                out.push((wi * 64) as u16 + b as u16);
                bits &= bits - 1;
            }
        }
        out
    }
}

struct MultTable {
    m: usize,
    table: Vec<u16>,
}

impl MultTable {
    fn build(elems: &[Permutation]) -> MultTable {
        let m = elems.len();
        let index: BTreeMap<&Permutation, u16> =
            elems.iter().enumerate().map(|(i, g)| (g, i as u16)).collect();
        let mut table = vec![0u16; m * m];
        for (i, g) in elems.iter().enumerate() {
            for (j, h) in elems.iter().enumerate() {
                table[i * m + j] = index[&g.compose(h).expect("equal degrees")];
            }
        }
        MultTable { m, table }
    }
    #[inline]
    fn mul(&self, i: u16, j: u16) -> u16 {
        self.table[i as usize * self.m + j as usize]
    }
}

/// Closure of a set of generators (by index) into a subgroup bitset.
fn close_indices(gens: &[u16], mult: &MultTable, m: usize) -> ElemSet {
    let mut set = ElemSet::new(m);
    let identity = {
        // index of identity: it is the least element in lexicographic image
        // order, i.e. index 0 of the sorted enumeration.
        0u16
    };
    set.insert(identity);
    let mut queue = vec![identity];
    while let Some(g) = queue.pop() {
        for &s in gens {
            let gs = mult.mul(g, s);
            if set.insert(gs) {
                queue.push(gs);
            }
        }
    }
    set
}

/// Enumerates every subgroup of A_n by closing the cyclic subgroups under
/// pairwise joins, then computes Moebius values top-down.
pub fn subgroup_lattice(n: usize) -> Result<Vec<SubgroupNode>, BuildError> {
    if !(5..=6).contains(&n) {
        return Err(BuildError::DegreeOutOfRange(n, 5, 6));
    }
    let elems = enumerate_alternating(n);
    let m = elems.len();
    let mult = MultTable::build(&elems);

    // Seed with all cyclic subgroups; keep one generating set per subgroup.
    let mut sets: Vec<ElemSet> = Vec::new();
    let mut gens: Vec<Vec<u16>> = Vec::new();
    let mut seen: BTreeMap<ElemSet, usize> = BTreeMap::new();
    let mut cyclic: Vec<usize> = Vec::new();
    for i in 0..m as u16 {
        let set = close_indices(&[i], &mult, m);
        if !seen.contains_key(&set) {
            seen.insert(set.clone(), sets.len());
            cyclic.push(sets.len());
            sets.push(set);
            gens.push(vec![i]);
        }
    }

    // Worklist closure: every subgroup is a join of cyclic subgroups.
    let mut head = 0;
    while head < sets.len() {
        let current = head;
        head += 1;
        for &c in &cyclic {
            if sets[c].is_subset(&sets[current]) {
                continue;
            }
            let mut joined_gens = gens[current].clone();
            joined_gens.extend_from_slice(&gens[c]);
            let join = close_indices(&joined_gens, &mult, m);
            if !seen.contains_key(&join) {
                seen.insert(join.clone(), sets.len());
                sets.push(join);
                gens.push(joined_gens);
            }
        }
    }

    // Order nodes by descending subgroup order, canonical key as tiebreak.
    let mut order_index: Vec<usize> = (0..sets.len()).collect();
    order_index.sort_by_key(|&i| (std::cmp::Reverse(sets[i].count()), sets[i].indices()));
    let sets: Vec<ElemSet> = order_index.iter().map(|&i| sets[i].clone()).collect();

    let count = sets.len();
    let mut nodes: Vec<SubgroupNode> = sets
        .iter()
        .map(|s| SubgroupNode {
            elements: s.indices(),
            order: s.count(),
            mu: 0,
            supers: Vec::new(),
        })
        .collect();

    for k in 0..count {
        for l in 0..count {
            if l != k && sets[k].is_subset(&sets[l]) {
                nodes[k].supers.push(l);
            }
        }
    }

    // mu(A_n) = 1; mu(K) = -sum of mu over strict supergroups.
    nodes[0].mu = 1;
    debug_assert_eq!(nodes[0].order, m);
    for k in 1..count {
        let s: i64 = nodes[k].supers.iter().map(|&l| nodes[l].mu).sum();
        nodes[k].mu = -s;
    }
    Ok(nodes)
}

/// phi_2(A_n) via the subgroup-lattice inversion, with the cross-checkable
/// d_2 report.
pub fn phi2_moebius(n: usize) -> Result<CountReport, BuildError> {
    let nodes = subgroup_lattice(n)?;
    let phi2: i64 = nodes
        .iter()
        .map(|node| node.mu * (node.order as i64) * (node.order as i64))
        .sum();
    assert!(phi2 > 0, "phi2 must be positive");
    Ok(CountReport::from_phi2_pub(n, phi2 as u64, CountMethod::Moebius))
}

impl CountReport {
    pub(crate) fn from_phi2_pub(n: usize, phi2: u64, method: CountMethod) -> CountReport {
        let aut = super::aut_order(n);
        assert!(phi2 % aut == 0, "|Aut A_n| must divide phi2");
        CountReport {
            n,
            phi2,
            aut_order: aut,
            d2: phi2 / aut,
            method,
        }
    }
}

/// Re-verifies the defining recursion sum_{L >= K} mu(L) = delta_{K,top} for
/// every node of the lattice.
pub fn verify_moebius_recursion(nodes: &[SubgroupNode]) -> bool {
    for (k, node) in nodes.iter().enumerate() {
        let total: i64 = node.mu + node.supers.iter().map(|&l| nodes[l].mu).sum::<i64>();
        let expected = if k == 0 { 1 } else { 0 };
        if total != expected {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_lattice_counts_and_mu() {
        let nodes = subgroup_lattice(5).unwrap();
        // A5 has 59 subgroups: 1, 15 C2, 10 C3, 5 V4, 6 C5, 10 S3, 6 D5,
        // 5 A4 and A5 itself.
        assert_eq!(nodes.len(), 59);
        assert_eq!(nodes[0].order, 60);
        assert_eq!(nodes[0].mu, 1);
        // Every maximal subgroup has mu = -1.
        for node in nodes.iter().filter(|nd| [10, 12].contains(&nd.order)) {
            assert_eq!(node.mu, -1, "maximal subgroup of order {}", node.order);
        }
        for node in nodes.iter().filter(|nd| nd.order == 6) {
            assert_eq!(node.mu, -1);
        }
        assert!(verify_moebius_recursion(&nodes));
    }

    #[test]
    fn a5_phi2_by_moebius() {
        let report = phi2_moebius(5).unwrap();
        assert_eq!(report.phi2, 2280);
        assert_eq!(report.d2, 19);
    }

    #[test]
    fn degree_cap() {
        assert!(subgroup_lattice(7).is_err());
    }
}
