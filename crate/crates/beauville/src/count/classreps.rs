//! One representative per automorphism orbit of generating triples of A_n,
//! n <= 7, by exhaustive orbit marking over the pair space.

use super::{enumerate_alternating, enumerate_symmetric};
use crate::error::BuildError;
use crate::group::is_alternating;
use crate::perm::Permutation;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceLevel {
    /// Conjugacy in S_n only.
    SnConjugacy,
    /// The full automorphism group (adds the exceptional coset for n = 6).
    FullAut,
}

/// A generating triple representative: x, y and the determined z = (xy)^-1.
#[derive(Clone, Debug)]
pub struct ClassRep {
    pub x: Permutation,
    pub y: Permutation,
    pub z: Permutation,
    pub triple_type: (u64, u64, u64),
}

fn pack(g: &Permutation) -> u64 {
    let mut key = 0u64;
    for (i, img) in g.images().iter().enumerate() {
        key |= (*img as u64) << (4 * i);
    }
    key
}

/// Enumerates one representative (x, y) per orbit of the chosen equivalence
/// on ordered generating pairs of A_n, in lexicographic first-visit order.
/// Unfiltered, the count equals d_2(A_n) at the FullAut level. An optional
/// type filter keeps only triples whose ordered type matches.
pub fn class_representatives(
    n: usize,
    level: EquivalenceLevel,
    type_filter: Option<(u64, u64, u64)>,
) -> Result<Vec<ClassRep>, BuildError> {
    if !(5..=7).contains(&n) {
        return Err(BuildError::DegreeOutOfRange(n, 5, 7));
    }
    let elems = enumerate_alternating(n);
    let m = elems.len();
    let index: HashMap<u64, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, g)| (pack(g), i as u32))
        .collect();
    let idx_of = |g: &Permutation| -> u32 { index[&pack(g)] };

    // Conjugation tables: conj[s][g] = index of g^s, for every s in S_n.
    let sn = enumerate_symmetric(n);
    let mut conj: Vec<Vec<u16>> = Vec::with_capacity(sn.len());
    for s in &sn {
        let mut row = vec![0u16; m];
        for (i, g) in elems.iter().enumerate() {
            row[i] = idx_of(&g.conjugate(s).expect("equal degrees")) as u16;
        }
        conj.push(row);
    }
    // Table of the exceptional automorphism for n = 6 at the FullAut level.
    let theta: Option<Vec<u16>> = if n == 6 && level == EquivalenceLevel::FullAut {
        let aut = crate::conjugacy::exceptional_aut();
        Some(
            elems
                .iter()
                .map(|g| idx_of(&aut.apply(g)) as u16)
                .collect(),
        )
    } else {
        None
    };

    let mut visited = vec![false; m * m];
    let mut reps = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if visited[i * m + j] {
                continue;
            }
            // Mark the whole orbit of the pair before deciding generation,
            // so each orbit is tested exactly once.
            for row in &conj {
                let (a, b) = (row[i] as usize, row[j] as usize);
                visited[a * m + b] = true;
            }
            if let Some(theta) = &theta {
                let (ti, tj) = (theta[i] as usize, theta[j] as usize);
                for row in &conj {
                    let (a, b) = (row[ti] as usize, row[tj] as usize);
                    visited[a * m + b] = true;
                }
            }
            let x = &elems[i];
            let y = &elems[j];
            if !is_alternating(&[x.clone(), y.clone()], n).generates {
                continue;
            }
            let z = x.compose(y).expect("equal degrees").inverse();
            let triple_type = (x.order(), y.order(), z.order());
            if let Some(filter) = type_filter {
                if triple_type != filter {
                    continue;
                }
            }
            reps.push(ClassRep {
                x: x.clone(),
                y: y.clone(),
                z,
                triple_type,
            });
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_has_nineteen_classes() {
        let reps = class_representatives(5, EquivalenceLevel::FullAut, None).unwrap();
        assert_eq!(reps.len(), 19);
        // Every generating triple of A5 contains an element of order 5.
        for rep in &reps {
            let (l, m, n) = rep.triple_type;
            assert!(l == 5 || m == 5 || n == 5, "type {:?}", rep.triple_type);
        }
    }

    #[test]
    fn a5_aut_and_sn_levels_agree() {
        // Aut A5 = S5, so the two levels coincide at n = 5.
        let full = class_representatives(5, EquivalenceLevel::FullAut, None).unwrap();
        let sn = class_representatives(5, EquivalenceLevel::SnConjugacy, None).unwrap();
        assert_eq!(full.len(), sn.len());
    }

    #[test]
    fn degree_out_of_range() {
        assert!(class_representatives(8, EquivalenceLevel::FullAut, None).is_err());
    }
}
