//! Conjugacy in S_n and A_n with explicit witnesses, simultaneous conjugacy
//! of pairs by centralizer backtracking, triple equivalence under Aut A_n,
//! and the exceptional automorphism of A_6.

use crate::error::PermError;
use crate::perm::{Parity, Permutation};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Ambient group for a conjugacy search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    Symmetric,
    Alternating,
}

/// A conjugator h with x^h = y, if the cycle types match. The witness is
/// verified before it is returned.
pub fn conjugator_in_sn(x: &Permutation, y: &Permutation) -> Result<Option<Permutation>, PermError> {
    if x.degree() != y.degree() {
        return Err(PermError::DegreeMismatch(x.degree(), y.degree()));
    }
    if x.cycle_type() != y.cycle_type() {
        return Ok(None);
    }
    let n = x.degree();
    // Map cycles of x onto cycles of y, longest first, pointwise.
    let mut cx = x.cycle_data().cycles;
    let mut cy = y.cycle_data().cycles;
    cx.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    cy.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    let mut images = vec![0usize; n];
    for (a, b) in cx.iter().zip(cy.iter()) {
        debug_assert_eq!(a.len(), b.len());
        for (pa, pb) in a.iter().zip(b.iter()) {
            images[pa - 1] = *pb;
        }
    }
    let h = Permutation::from_images(&images)?;
    debug_assert_eq!(&x.conjugate(&h)?, y);
    Ok(Some(h))
}

/// An odd element of the centralizer of `x`, when one exists: either an
/// even-length cycle of `x` itself, or the pointwise swap of two cycles of
/// equal odd length. Exists exactly when the S_n-class does not split.
fn odd_centralizer_element(x: &Permutation) -> Option<Permutation> {
    let n = x.degree();
    let data = x.cycle_data();
    for cycle in &data.cycles {
        if cycle.len() % 2 == 0 {
            return Some(Permutation::from_cycles(&[cycle.clone()], n).expect("valid cycle"));
        }
    }
    let mut by_len: BTreeMap<usize, Vec<&Vec<usize>>> = BTreeMap::new();
    for cycle in &data.cycles {
        by_len.entry(cycle.len()).or_default().push(cycle);
    }
    for (len, group) in by_len {
        if group.len() >= 2 && len % 2 == 1 {
            let swap: Vec<Vec<usize>> = group[0]
                .iter()
                .zip(group[1].iter())
                .map(|(&a, &b)| vec![a, b])
                .collect();
            return Some(Permutation::from_cycles(&swap, n).expect("disjoint transpositions"));
        }
    }
    None
}

/// Whether two even permutations are conjugate by an *even* permutation.
pub fn conjugate_in_an(x: &Permutation, y: &Permutation) -> Result<bool, PermError> {
    Ok(conjugator_in_an(x, y)?.is_some())
}

/// An even conjugator witness, when one exists.
pub fn conjugator_in_an(
    x: &Permutation,
    y: &Permutation,
) -> Result<Option<Permutation>, PermError> {
    if !x.is_even() || !y.is_even() {
        return Err(PermError::OddPermutation);
    }
    let h = match conjugator_in_sn(x, y)? {
        Some(h) => h,
        None => return Ok(None),
    };
    if h.parity() == Parity::Even {
        return Ok(Some(h));
    }
    // Fix parity with an odd centralizer element of x; impossible exactly
    // when the class splits.
    match odd_centralizer_element(x) {
        Some(c) => {
            let fixed = c.compose(&h)?;
            debug_assert_eq!(fixed.parity(), Parity::Even);
            debug_assert_eq!(&x.conjugate(&fixed)?, y);
            Ok(Some(fixed))
        }
        None => Ok(None),
    }
}

/// Searches for h with x1^h = x2 and y1^h = y2 (h even when the ambient is
/// the alternating group). Backtracks over the centralizer of x2, generated
/// cycle-wise: cycle-to-cycle alignment within each length class plus
/// per-cycle rotations, pruning on the first mismatch.
pub fn simultaneous_conjugacy(
    x1: &Permutation,
    y1: &Permutation,
    x2: &Permutation,
    y2: &Permutation,
    ambient: Ambient,
) -> Result<Option<Permutation>, PermError> {
    if x1.degree() != y1.degree() || x1.degree() != x2.degree() || x1.degree() != y2.degree() {
        return Err(PermError::DegreeMismatch(x1.degree(), x2.degree()));
    }
    let h0 = match conjugator_in_sn(x1, x2)? {
        Some(h) => h,
        None => return Ok(None),
    };
    if y1.cycle_type() != y2.cycle_type() {
        return Ok(None);
    }
    let y0 = y1.conjugate(&h0)?;
    let n = x1.degree();

    let mut by_len: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for cycle in x2.cycle_data().cycles {
        by_len.entry(cycle.len()).or_default().push(cycle);
    }
    let groups: Vec<Vec<Vec<usize>>> = by_len.into_values().collect();

    let target_parity = match ambient {
        Ambient::Symmetric => None,
        // h = h0 * c must be even.
        Ambient::Alternating => Some(h0.parity()),
    };

    let inv_y0 = y0.inverse();
    let search = PairSearch {
        groups,
        y0: &y0,
        inv_y0: &inv_y0,
        y2,
        map: vec![0; n],
        target_parity,
        result: None,
    };
    match search.run() {
        Some(c) => {
            let h = h0.compose(&c)?;
            debug_assert_eq!(&x1.conjugate(&h)?, x2);
            debug_assert_eq!(&y1.conjugate(&h)?, y2);
            if ambient == Ambient::Alternating {
                debug_assert_eq!(h.parity(), Parity::Even);
            }
            Ok(Some(h))
        }
        None => Ok(None),
    }
}

/// Backtracking state: find c centralizing x2 with y0^c = y2 and the
/// required parity. `map` is the partial point map of c (1-based images,
/// 0 = unset).
struct PairSearch<'a> {
    groups: Vec<Vec<Vec<usize>>>,
    y0: &'a Permutation,
    inv_y0: &'a Permutation,
    y2: &'a Permutation,
    map: Vec<usize>,
    target_parity: Option<Parity>,
    result: Option<Permutation>,
}

impl<'a> PairSearch<'a> {
    fn run(mut self) -> Option<Permutation> {
        let mut used = Vec::new();
        self.descend(0, 0, &mut used);
        self.result
    }

    fn descend(&mut self, gi: usize, ci: usize, used: &mut Vec<(usize, usize)>) {
        if self.result.is_some() {
            return;
        }
        if gi == self.groups.len() {
            self.finish();
            return;
        }
        if ci == self.groups[gi].len() {
            self.descend(gi + 1, 0, used);
            return;
        }
        let source = self.groups[gi][ci].clone();
        for ti in 0..self.groups[gi].len() {
            if used.contains(&(gi, ti)) {
                continue;
            }
            let target = self.groups[gi][ti].clone();
            for offset in 0..target.len() {
                if self.assign(&source, &target, offset) {
                    used.push((gi, ti));
                    self.descend(gi, ci + 1, used);
                    used.pop();
                }
                self.unassign(&source);
                if self.result.is_some() {
                    return;
                }
            }
        }
    }

    /// Maps source[t] -> target[(t+offset) mod len] and checks every
    /// conjugation constraint that becomes decidable; undone by `unassign`.
    fn assign(&mut self, source: &[usize], target: &[usize], offset: usize) -> bool {
        let len = source.len();
        for t in 0..len {
            self.map[source[t] - 1] = target[(t + offset) % len];
        }
        // c(y0(p)) must equal y2(c(p)) whenever both sides are determined.
        for t in 0..len {
            let p = source[t];
            let q = self.y0.apply(p);
            if self.map[q - 1] != 0 && self.map[q - 1] != self.y2.apply(self.map[p - 1]) {
                return false;
            }
            let pre = self.inv_y0.apply(p);
            if self.map[pre - 1] != 0 && self.map[p - 1] != self.y2.apply(self.map[pre - 1]) {
                return false;
            }
        }
        true
    }

    fn unassign(&mut self, source: &[usize]) {
        for &p in source {
            self.map[p - 1] = 0;
        }
    }

    fn finish(&mut self) {
        if self.map.iter().any(|&i| i == 0) {
            return;
        }
        let c = match Permutation::from_images(&self.map) {
            Ok(c) => c,
            Err(_) => return,
        };
        if let Some(parity) = self.target_parity {
            if c.parity() != parity {
                return;
            }
        }
        if &self.y0.conjugate(&c).expect("equal degrees") == self.y2 {
            self.result = Some(c);
        }
    }
}

/// Ordered triples (x,y,z) with xyz = 1 are equivalent when an automorphism
/// of A_n maps one to the other componentwise; z is determined by (x,y), so
/// only the pair is compared. For n = 6 the automorphisms outside S_6 are
/// reached through the exceptional automorphism.
pub fn triple_equivalent(
    x1: &Permutation,
    y1: &Permutation,
    x2: &Permutation,
    y2: &Permutation,
    n: usize,
) -> Result<bool, PermError> {
    if x1.degree() != n || x2.degree() != n {
        return Err(PermError::DegreeMismatch(x1.degree(), n));
    }
    if simultaneous_conjugacy(x1, y1, x2, y2, Ambient::Symmetric)?.is_some() {
        return Ok(true);
    }
    if n == 6 {
        let aut = exceptional_aut();
        let tx = aut.apply(x1);
        let ty = aut.apply(y1);
        return Ok(simultaneous_conjugacy(&tx, &ty, x2, y2, Ambient::Symmetric)?.is_some());
    }
    Ok(false)
}

/// The outer automorphism of A_6 not induced by S_6, stored as its action on
/// all 360 elements and machine-verified at construction.
pub struct ExceptionalAut {
    elems: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
    image: Vec<usize>,
}

impl ExceptionalAut {
    pub fn apply(&self, g: &Permutation) -> Permutation {
        let idx = *self.index.get(g).expect("element of A6");
        self.elems[self.image[idx]].clone()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    /// Builds the automorphism from the action of A_6 on the six cosets of a
    /// transitive A_5-subgroup, then verifies it is a bijective,
    /// multiplicative map sending the 3-cycle class to the (3,3) class.
    pub fn build() -> ExceptionalAut {
        let elems = crate::count::enumerate_alternating(6);
        let index: BTreeMap<Permutation, usize> =
            elems.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();

        let subgroup = find_transitive_a5(&elems).expect("A6 contains a transitive A5");

        // Right cosets Kg, labelled in order of discovery over the sorted
        // element list.
        let mut coset_of = vec![usize::MAX; elems.len()];
        let mut reps: Vec<usize> = Vec::new();
        for (i, g) in elems.iter().enumerate() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let cid = reps.len();
            reps.push(i);
            for k in &subgroup {
                let kg = k.compose(g).expect("equal degrees");
                coset_of[index[&kg]] = cid;
            }
        }
        assert_eq!(reps.len(), 6, "index-6 subgroup yields six cosets");

        let mut image = vec![0usize; elems.len()];
        for (i, g) in elems.iter().enumerate() {
            let mut images = vec![0usize; 6];
            for (cid, &rep) in reps.iter().enumerate() {
                let moved = elems[rep].compose(g).expect("equal degrees");
                images[cid] = coset_of[index[&moved]] + 1;
            }
            let sigma = Permutation::from_images(&images).expect("coset action is a bijection");
            image[i] = *index
                .get(&sigma)
                .expect("coset action of a perfect group lands in A6");
        }

        let aut = ExceptionalAut { elems, index, image };
        aut.verify();
        aut
    }

    fn verify(&self) {
        // Bijective.
        let mut seen = vec![false; self.elems.len()];
        for &img in &self.image {
            assert!(!seen[img], "exceptional automorphism must be injective");
            seen[img] = true;
        }
        // Multiplicative over a deterministic grid of pairs.
        let m = self.elems.len();
        for i in (0..m).step_by(7) {
            for j in (0..m).step_by(11) {
                let g = &self.elems[i];
                let h = &self.elems[j];
                let gh = g.compose(h).expect("equal degrees");
                let lhs = &self.elems[self.image[self.index[&gh]]];
                let rhs = self.elems[self.image[i]]
                    .compose(&self.elems[self.image[j]])
                    .expect("equal degrees");
                assert_eq!(lhs, &rhs, "exceptional automorphism must be multiplicative");
            }
        }
        // Outer: the 3-cycle class maps to the (3,3) class.
        let three_cycle = self
            .elems
            .iter()
            .find(|g| g.cycle_type().0.as_slice() == [3, 1, 1, 1])
            .expect("A6 contains 3-cycles");
        let img = self.apply(three_cycle);
        assert_eq!(
            img.cycle_type().0.as_slice(),
            [3, 3],
            "exceptional automorphism must swap the order-3 classes"
        );
    }
}

fn find_transitive_a5(elems: &[Permutation]) -> Option<Vec<Permutation>> {
    // Deterministic search: a 5-cycle together with some second element
    // generating a transitive subgroup of order 60.
    let five_cycles: Vec<&Permutation> = elems
        .iter()
        .filter(|g| g.cycle_type().0.as_slice() == [5, 1])
        .collect();
    for a in &five_cycles {
        for b in elems {
            if b.is_identity() {
                continue;
            }
            if let Some(group) = closure_capped(&[(*a).clone(), b.clone()], 60) {
                if group.len() == 60 {
                    let handle = crate::group::GroupHandle::new(6, vec![(*a).clone(), b.clone()]);
                    if handle.is_transitive() {
                        return Some(group);
                    }
                }
            }
        }
    }
    None
}

/// Closure of a generator set under composition, or None once it exceeds
/// `cap` elements.
pub fn closure_capped(gens: &[Permutation], cap: usize) -> Option<Vec<Permutation>> {
    let n = gens.first().map(|g| g.degree()).unwrap_or(0);
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = vec![Permutation::identity(n)];
    seen.insert(Permutation::identity(n));
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head].clone();
        head += 1;
        for s in gens {
            let gs = g.compose(s).expect("equal degrees");
            if seen.insert(gs.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push(gs);
            }
        }
    }
    Some(queue)
}

static EXCEPTIONAL_AUT: OnceLock<ExceptionalAut> = OnceLock::new();

/// The cached exceptional automorphism of A_6.
pub fn exceptional_aut() -> &'static ExceptionalAut {
    EXCEPTIONAL_AUT.get_or_init(ExceptionalAut::build)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycles;

    #[test]
    fn sn_conjugation_by_type() {
        let a = cycles("(1,2,3)", 4);
        let b = cycles("(2,3,4)", 4);
        let h = conjugator_in_sn(&a, &b).unwrap().expect("same type");
        assert_eq!(a.conjugate(&h).unwrap(), b);
        assert!(conjugator_in_sn(&cycles("(1,2,3)", 4), &cycles("(1,2)(3,4)", 4))
            .unwrap()
            .is_none());
    }

    #[test]
    fn five_cycle_and_square_fused_in_s5_but_not_a5() {
        let g = cycles("(1,2,3,4,5)", 5);
        let g2 = g.power(2);
        assert!(conjugator_in_sn(&g, &g2).unwrap().is_some());
        assert!(!conjugate_in_an(&g, &g2).unwrap());
        // Brute force over all 60 even conjugators agrees.
        let brute = crate::count::enumerate_alternating(5)
            .iter()
            .any(|h| g.conjugate(h).unwrap() == g2);
        assert!(!brute);
    }

    #[test]
    fn double_transpositions_conjugate_in_a5() {
        let a = cycles("(1,2)(3,4)", 5);
        let b = cycles("(1,3)(2,4)", 5);
        assert!(conjugate_in_an(&a, &b).unwrap());
        let brute = crate::count::enumerate_alternating(5)
            .iter()
            .any(|h| a.conjugate(h).unwrap() == b);
        assert!(brute);
        assert!(conjugate_in_an(&a, &a).unwrap());
    }

    #[test]
    fn odd_input_rejected() {
        let a = cycles("(1,2)", 4);
        assert!(matches!(
            conjugate_in_an(&a, &a),
            Err(PermError::OddPermutation)
        ));
    }

    #[test]
    fn simultaneous_pair_witness() {
        let x = cycles("(1,2,3)", 6);
        let y1 = cycles("(4,5,6)", 6);
        let y2 = cycles("(4,6,5)", 6);
        let h = simultaneous_conjugacy(&x, &y1, &x, &y2, Ambient::Symmetric)
            .unwrap()
            .expect("conjugate pairs");
        assert_eq!(x.conjugate(&h).unwrap(), x);
        assert_eq!(y1.conjugate(&h).unwrap(), y2);
        // The transposition (5,6) is one valid witness.
        let w = cycles("(5,6)", 6);
        assert_eq!(x.conjugate(&w).unwrap(), x);
        assert_eq!(y1.conjugate(&w).unwrap(), y2);

        // Identity case.
        let h = simultaneous_conjugacy(&x, &y1, &x, &y1, Ambient::Symmetric)
            .unwrap()
            .expect("pair conjugate to itself");
        assert_eq!(x.conjugate(&h).unwrap(), x);
        assert_eq!(y1.conjugate(&h).unwrap(), y1);
    }

    #[test]
    fn degree_eleven_pairs_inequivalent() {
        // x an 11-cycle with y = (1,4,2) vs y' = (1,10,2): no simultaneous
        // conjugator exists in S_11.
        let x = cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11);
        let y = cycles("(1,4,2)", 11);
        let yp = cycles("(1,10,2)", 11);
        assert!(simultaneous_conjugacy(&x, &y, &x, &yp, Ambient::Symmetric)
            .unwrap()
            .is_none());
    }

    #[test]
    fn exceptional_aut_swaps_order_three_classes() {
        let aut = exceptional_aut();
        let g = cycles("(1,2,3)", 6);
        assert_eq!(aut.apply(&g).cycle_type().0.as_slice(), [3, 3]);
        let h = cycles("(1,2,3)(4,5,6)", 6);
        assert_eq!(aut.apply(&h).cycle_type().0.as_slice(), [3, 1, 1, 1]);
    }

    #[test]
    fn exceptional_aut_square_is_inner_by_s6() {
        let aut = exceptional_aut();
        // theta^2 agrees with conjugation by some element of S6: find a
        // candidate on a generating pair and check it everywhere.
        let a = cycles("(1,2,3,4,5)", 6);
        let b = cycles("(4,5,6)", 6);
        let ta = aut.apply(&aut.apply(&a));
        let tb = aut.apply(&aut.apply(&b));
        let s = simultaneous_conjugacy(&a, &b, &ta, &tb, Ambient::Symmetric)
            .unwrap()
            .expect("theta^2 is inner by S6");
        for g in aut.elements() {
            assert_eq!(
                aut.apply(&aut.apply(g)),
                g.conjugate(&s).unwrap(),
                "theta^2 must equal conjugation by {s}"
            );
        }
    }

    #[test]
    fn triple_equivalence_respects_exceptional_aut() {
        let aut = exceptional_aut();
        // A (3,5,5)-type generating triple of A6.
        let x = cycles("(1,2,3)", 6);
        let y = cycles("(1,3,4,5,6)", 6);
        let tx = aut.apply(&x);
        let ty = aut.apply(&y);
        // Image is equivalent under Aut A6 but not under S6 alone (the first
        // components have different cycle types).
        assert!(simultaneous_conjugacy(&x, &y, &tx, &ty, Ambient::Symmetric)
            .unwrap()
            .is_none());
        assert!(triple_equivalent(&x, &y, &tx, &ty, 6).unwrap());
    }
}
