//! Generating triples of A_n: the explicit small-degree catalog, the
//! parametric families for n >= 12, and the pool of mutually inequivalent
//! triples used to fill product coordinates.

mod catalog;
mod families;
mod pool;

pub use catalog::{
    a6_aut_inequivalent_345, catalog_small, coprime_pair, strong_pair, CatalogDiagnostic,
    CatalogEntry,
};
pub use families::{
    coprime_family, coprime_family_class_count, coprime_family_representatives,
    p_avoiding_triple, p_full_triple, CoprimeParams,
};
pub use pool::pool_inequivalent;

use crate::conjugacy::triple_equivalent;
use crate::error::PermError;
use crate::group::{is_alternating, AlternatingCheck};
use crate::perm::{CycleType, Permutation};

/// An ordered triple (x, y, z) of even permutations with x*y*z = 1; z is
/// always stored as the computed (xy)^-1. The type is the ordered tuple of
/// element orders.
#[derive(Clone, Debug)]
pub struct GeneratingTriple {
    x: Permutation,
    y: Permutation,
    z: Permutation,
    triple_type: (u64, u64, u64),
    provenance: String,
}

impl GeneratingTriple {
    pub fn from_xy(
        x: Permutation,
        y: Permutation,
        provenance: impl Into<String>,
    ) -> Result<GeneratingTriple, PermError> {
        if x.degree() != y.degree() {
            return Err(PermError::DegreeMismatch(x.degree(), y.degree()));
        }
        if !x.is_even() || !y.is_even() {
            return Err(PermError::OddPermutation);
        }
        let z = x.compose(&y)?.inverse();
        let triple_type = (x.order(), y.order(), z.order());
        Ok(GeneratingTriple {
            x,
            y,
            z,
            triple_type,
            provenance: provenance.into(),
        })
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn x(&self) -> &Permutation {
        &self.x
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn z(&self) -> &Permutation {
        &self.z
    }

    pub fn triple_type(&self) -> (u64, u64, u64) {
        self.triple_type
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Product of all three entries; the identity by construction.
    pub fn product(&self) -> Permutation {
        self.x
            .compose(&self.y)
            .and_then(|p| p.compose(&self.z))
            .expect("equal degrees")
    }

    pub fn verify_generates(&self) -> AlternatingCheck {
        is_alternating(&[self.x.clone(), self.y.clone()], self.degree())
    }

    /// Cyclic rotation (x,y,z) -> (y,z,x); still a triple of the same group.
    pub fn rotated(&self) -> GeneratingTriple {
        GeneratingTriple {
            x: self.y.clone(),
            y: self.z.clone(),
            z: self.x.clone(),
            triple_type: (self.triple_type.1, self.triple_type.2, self.triple_type.0),
            provenance: format!("{}/rot", self.provenance),
        }
    }

    pub fn rotations(&self) -> [GeneratingTriple; 3] {
        let r1 = self.rotated();
        let r2 = r1.rotated();
        [self.clone(), r1, r2]
    }

    /// (x,y,z) -> (z^-1, y^-1, x^-1); product is again the identity.
    pub fn inverted_reversed(&self) -> GeneratingTriple {
        GeneratingTriple {
            x: self.z.inverse(),
            y: self.y.inverse(),
            z: self.x.inverse(),
            triple_type: (self.triple_type.2, self.triple_type.1, self.triple_type.0),
            provenance: format!("{}/inv", self.provenance),
        }
    }

    /// The six variants used by the coprime-type assembly: three rotations
    /// of the triple and three of its inverted reversal.
    pub fn six_variants(&self) -> Vec<GeneratingTriple> {
        let mut out = self.rotations().to_vec();
        out.extend(self.inverted_reversed().rotations());
        out
    }

    /// Conjugates all three entries (stays a triple since conjugation is an
    /// automorphism).
    pub fn conjugated(&self, h: &Permutation) -> Result<GeneratingTriple, PermError> {
        Ok(GeneratingTriple {
            x: self.x.conjugate(h)?,
            y: self.y.conjugate(h)?,
            z: self.z.conjugate(h)?,
            triple_type: self.triple_type,
            provenance: format!("{}^({})", self.provenance, h.cycle_string()),
        })
    }

    /// Cheap invariant separating inequivalent triples: ordered type plus
    /// the ordered cycle types. Equal keys are a necessary condition for
    /// S_n-equivalence (not for the exceptional A_6 coset, which is handled
    /// by the exact test).
    pub fn invariant_key(&self) -> ((u64, u64, u64), CycleType, CycleType, CycleType) {
        (
            self.triple_type,
            self.x.cycle_type(),
            self.y.cycle_type(),
            self.z.cycle_type(),
        )
    }

    /// Exact equivalence under Aut A_n.
    pub fn equivalent_to(&self, other: &GeneratingTriple) -> Result<bool, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        if self.triple_type != other.triple_type {
            return Ok(false);
        }
        triple_equivalent(&self.x, &self.y, &other.x, &other.y, self.degree())
    }

    /// Inequivalent to `other` and to all of its cyclic rotations.
    pub fn avoids_rotations_of(&self, other: &GeneratingTriple) -> Result<bool, PermError> {
        for rot in other.rotations() {
            if self.equivalent_to(&rot)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Exact pairwise-inequivalence check over a slice, bucketing by invariants
/// first so the quadratic exact search only runs within colliding buckets.
/// For n = 6 the bucket shortcut is skipped (the exceptional automorphism
/// moves cycle types), and every pair is tested exactly.
pub fn pairwise_inequivalent(ts: &[GeneratingTriple]) -> Result<bool, PermError> {
    if ts.is_empty() {
        return Ok(true);
    }
    let n = ts[0].degree();
    for i in 0..ts.len() {
        for j in i + 1..ts.len() {
            if n != 6 && ts[i].invariant_key() != ts[j].invariant_key() {
                continue;
            }
            if ts[i].equivalent_to(&ts[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycles;

    fn t255() -> GeneratingTriple {
        GeneratingTriple::from_xy(cycles("(1,2)(3,4)", 5), cycles("(1,4,2,3,5)", 5), "t255")
            .unwrap()
    }

    #[test]
    fn triple_basics() {
        let t = t255();
        assert_eq!(t.triple_type(), (2, 5, 5));
        assert!(t.product().is_identity());
        assert!(t.verify_generates().generates);
    }

    #[test]
    fn rotations_and_inversion_preserve_structure() {
        let t = t255();
        for v in t.six_variants() {
            assert!(v.product().is_identity());
            assert!(v.verify_generates().generates);
            // Period multiset is preserved.
            let mut a = [t.triple_type.0, t.triple_type.1, t.triple_type.2];
            let mut b = [v.triple_type.0, v.triple_type.1, v.triple_type.2];
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn equivalence_distinguishes_types() {
        let t = t255();
        let u = GeneratingTriple::from_xy(cycles("(1,2,3)", 5), cycles("(3,4,5)", 5), "t335")
            .unwrap();
        assert!(!t.equivalent_to(&u).unwrap());
        assert!(t.equivalent_to(&t).unwrap());
    }

    #[test]
    fn odd_entries_rejected() {
        assert!(GeneratingTriple::from_xy(cycles("(1,2)", 5), cycles("(3,4,5)", 5), "bad").is_err());
    }
}
