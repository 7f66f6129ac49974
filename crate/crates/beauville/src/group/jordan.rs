//! Cycle-structure criteria that force a primitive (or transitive) group to
//! contain A_n, with explicit witness elements. Used as fast paths before
//! the stabilizer-chain order computation, and recorded in certificates.

use super::{alternating_order, GroupHandle};
use crate::perm::{Parity, Permutation};
use num_integer::gcd;

/// A criterion that, together with its hypothesis (transitivity or
/// primitivity), forces the group to contain A_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criterion {
    /// Witness is a single m-cycle with 1 < m < n/2 fixing the rest, so the
    /// cyclic subgroup it generates has an orbit of length m. Needs
    /// primitivity.
    SubOrbitWitness { m: usize },
    /// Witness is an m-cycle with 2 <= m <= n-3. Needs primitivity.
    MCycle { m: usize },
    /// Witness is a double transposition and n >= 9. Needs primitivity.
    DoubleTransposition,
    /// Witness is an m-cycle with gcd(m,n) = 1 and n/2 < m < n-2. Needs only
    /// transitivity (the cycle itself forces primitivity).
    CoprimeCycle { m: usize },
    /// Witness has cycle structure {c,d} with c,d > 1 coprime. Needs only
    /// transitivity.
    TwoCoprimeCycles { c: usize, d: usize },
    /// Witness has cycle structure {1,c,d} with c,d > 1 coprime and neither
    /// 1+c nor 1+d dividing n. Needs only transitivity.
    TwoCoprimeCyclesWithFixedPoint { c: usize, d: usize },
}

impl Criterion {
    pub fn needs_primitivity(&self) -> bool {
        matches!(
            self,
            Criterion::SubOrbitWitness { .. }
                | Criterion::MCycle { .. }
                | Criterion::DoubleTransposition
        )
    }

    pub fn label(&self) -> String {
        match self {
            Criterion::SubOrbitWitness { m } => format!("sub-orbit-witness(m={m})"),
            Criterion::MCycle { m } => format!("m-cycle(m={m})"),
            Criterion::DoubleTransposition => "double-transposition".into(),
            Criterion::CoprimeCycle { m } => format!("coprime-long-cycle(m={m})"),
            Criterion::TwoCoprimeCycles { c, d } => format!("two-coprime-cycles({c},{d})"),
            Criterion::TwoCoprimeCyclesWithFixedPoint { c, d } => {
                format!("two-coprime-cycles-with-fixed-point({c},{d})")
            }
        }
    }
}

/// How primitivity (when required) was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimitivityEvidence {
    /// Transitivity alone suffices for this criterion.
    NotRequired,
    /// Exhaustive minimal-block search found no nontrivial system.
    BlockSearch,
    /// The group contains an m-cycle with gcd(m,n) = 1 and m > n/2.
    LongCoprimeCycle { m: usize },
    /// The group contains a cycle of prime length p, and every generator
    /// maps some point of its support back into its support.
    PrimeCycleOverlap { p: usize },
}

#[derive(Clone, Debug)]
pub struct JordanCertificate {
    pub criterion: Criterion,
    pub witness: Permutation,
    pub primitivity: PrimitivityEvidence,
}

impl JordanCertificate {
    pub fn label(&self) -> String {
        format!("{}|{}", self.criterion.label(), self.witness.cycle_string())
    }
}

/// Proof tag for an `is_alternating` decision.
#[derive(Clone, Debug)]
pub enum GenerationProof {
    OddGenerator,
    NotTransitive,
    Jordan(JordanCertificate),
    OrderMatch,
    OrderShort(num_bigint::BigUint),
}

impl GenerationProof {
    pub fn label(&self) -> String {
        match self {
            GenerationProof::OddGenerator => "odd-generator".into(),
            GenerationProof::NotTransitive => "not-transitive".into(),
            GenerationProof::Jordan(cert) => format!("jordan:{}", cert.label()),
            GenerationProof::OrderMatch => "order-check".into(),
            GenerationProof::OrderShort(ord) => format!("order-short:{ord}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AlternatingCheck {
    pub generates: bool,
    pub proof: GenerationProof,
}

/// Nontrivial cycle lengths of a permutation, descending.
fn nontrivial_lengths(g: &Permutation) -> Vec<usize> {
    g.cycle_type().0.iter().filter(|&&l| l > 1).map(|&l| l as usize).collect()
}

/// Classifies a candidate witness element against the cycle criteria.
/// Hypotheses (transitivity/primitivity) are not checked here.
fn classify_witness(g: &Permutation, n: usize) -> Vec<Criterion> {
    let lengths = nontrivial_lengths(g);
    let mut out = Vec::new();
    match lengths.as_slice() {
        [m] => {
            let m = *m;
            if gcd(m, n) == 1 && 2 * m > n && m < n - 2 {
                out.push(Criterion::CoprimeCycle { m });
            }
            if (2..=n.saturating_sub(3)).contains(&m) {
                out.push(Criterion::MCycle { m });
            }
            if m > 1 && 2 * m < n {
                out.push(Criterion::SubOrbitWitness { m });
            }
            if lengths == [2] {
                // handled by MCycle when n >= 5; nothing extra
            }
        }
        [2, 2] => {
            if n >= 9 {
                out.push(Criterion::DoubleTransposition);
            }
        }
        [d, c] => {
            let (c, d) = (*c, *d);
            if c > 1 && gcd(c, d) == 1 {
                if c + d == n {
                    out.push(Criterion::TwoCoprimeCycles { c, d });
                } else if c + d == n - 1 && n % (1 + c) != 0 && n % (1 + d) != 0 {
                    out.push(Criterion::TwoCoprimeCyclesWithFixedPoint { c, d });
                }
            }
        }
        _ => {}
    }
    out
}

/// Does the group satisfy the prime-cycle overlap primitivity test with
/// witness cycle `h`? `h` must be a single cycle of prime length.
fn prime_cycle_overlap(h: &Permutation, gens: &[Permutation]) -> bool {
    let support = h.support();
    gens.iter().all(|g| {
        support
            .iter()
            .any(|&pt| support.binary_search(&g.apply(pt)).is_ok())
    })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Candidate witness elements: generators, their powers, and products of up
/// to `word_bound` generator-powers, capped to keep scans bounded.
fn candidate_witnesses(gens: &[Permutation], word_bound: usize, cap: usize) -> Vec<Permutation> {
    let mut atoms: Vec<Permutation> = Vec::new();
    for g in gens {
        let ord = g.order();
        for e in 1..ord {
            let p = g.power(e as i128);
            if !p.is_identity() {
                atoms.push(p);
            }
            if atoms.len() >= cap {
                return atoms;
            }
        }
    }
    let mut words = atoms.clone();
    let mut layer = atoms.clone();
    for _ in 2..=word_bound {
        let mut next = Vec::new();
        for w in &layer {
            for a in &atoms {
                let prod = w.compose(a).expect("equal degrees");
                if !prod.is_identity() {
                    next.push(prod);
                }
                if words.len() + next.len() >= cap {
                    words.extend(next);
                    return words;
                }
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}

/// Scans for criteria that apply to the generated group, with hypotheses
/// checked and recorded. Empty when no criterion fires (in particular, when
/// the group is intransitive).
pub fn jordan_certificates(handle: &GroupHandle, word_bound: usize) -> Vec<JordanCertificate> {
    let n = handle.degree();
    if !handle.is_transitive() {
        return Vec::new();
    }
    let candidates = candidate_witnesses(handle.generators(), word_bound, 4096);

    // Primitivity evidence shared by every certificate that needs it.
    let mut prim_evidence: Option<PrimitivityEvidence> = None;
    for w in &candidates {
        let lengths = nontrivial_lengths(w);
        if let [m] = lengths.as_slice() {
            if gcd(*m, n) == 1 && 2 * m > n {
                prim_evidence = Some(PrimitivityEvidence::LongCoprimeCycle { m: *m });
                break;
            }
        }
    }
    if prim_evidence.is_none() {
        for w in &candidates {
            let lengths = nontrivial_lengths(w);
            if let [p] = lengths.as_slice() {
                if is_prime(*p) && prime_cycle_overlap(w, handle.generators()) {
                    prim_evidence = Some(PrimitivityEvidence::PrimeCycleOverlap { p: *p });
                    break;
                }
            }
        }
    }
    let primitive = match prim_evidence {
        Some(_) => true,
        None => {
            if handle.is_primitive() {
                prim_evidence = Some(PrimitivityEvidence::BlockSearch);
                true
            } else {
                false
            }
        }
    };

    let mut certs = Vec::new();
    for w in &candidates {
        for criterion in classify_witness(w, n) {
            if criterion.needs_primitivity() && !primitive {
                continue;
            }
            let primitivity = if criterion.needs_primitivity() {
                prim_evidence.clone().expect("primitive implies evidence")
            } else {
                PrimitivityEvidence::NotRequired
            };
            certs.push(JordanCertificate {
                criterion,
                witness: w.clone(),
                primitivity,
            });
        }
    }
    certs
}

/// Decides whether even generators generate all of A_n, using the cycle
/// criteria as fast paths and the stabilizer-chain order as the definitive
/// oracle. An odd generator is reported as `generates = false`.
pub fn is_alternating(gens: &[Permutation], n: usize) -> AlternatingCheck {
    if gens.iter().any(|g| g.parity() == Parity::Odd) {
        return AlternatingCheck {
            generates: false,
            proof: GenerationProof::OddGenerator,
        };
    }
    let handle = GroupHandle::new(n, gens.to_vec());
    if n >= 3 && !handle.is_transitive() {
        return AlternatingCheck {
            generates: false,
            proof: GenerationProof::NotTransitive,
        };
    }

    // Cheap witness scan: generator powers and products of two of them.
    if n >= 5 {
        let candidates = candidate_witnesses(gens, 2, 512);
        let mut transitive_only: Option<(Criterion, Permutation)> = None;
        let mut needs_prim: Option<(Criterion, Permutation)> = None;
        for w in &candidates {
            for criterion in classify_witness(w, n) {
                if criterion.needs_primitivity() {
                    if needs_prim.is_none() {
                        needs_prim = Some((criterion, w.clone()));
                    }
                } else if transitive_only.is_none() {
                    transitive_only = Some((criterion, w.clone()));
                }
            }
            if transitive_only.is_some() {
                break;
            }
        }
        if let Some((criterion, witness)) = transitive_only {
            return AlternatingCheck {
                generates: true,
                proof: GenerationProof::Jordan(JordanCertificate {
                    criterion,
                    witness,
                    primitivity: PrimitivityEvidence::NotRequired,
                }),
            };
        }
        if let Some((criterion, witness)) = needs_prim {
            if handle.is_primitive() {
                return AlternatingCheck {
                    generates: true,
                    proof: GenerationProof::Jordan(JordanCertificate {
                        criterion,
                        witness,
                        primitivity: PrimitivityEvidence::BlockSearch,
                    }),
                };
            }
        }
    }

    let order = handle.order();
    if order == alternating_order(n) {
        AlternatingCheck {
            generates: true,
            proof: GenerationProof::OrderMatch,
        }
    } else {
        AlternatingCheck {
            generates: false,
            proof: GenerationProof::OrderShort(order),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycles;

    #[test]
    fn two_coprime_cycles_fires() {
        // Transitive degree-9 group with an element of cycle structure {4,5}.
        // That element is odd, so the group is all of S9; the certificate
        // proves containment of A9.
        let h = cycles("(1,2,3,4)(5,6,7,8,9)", 9);
        let k = cycles("(1,5)(2,6)", 9);
        let handle = GroupHandle::new(9, vec![h.clone(), k]);
        assert!(handle.is_transitive());
        let certs = jordan_certificates(&handle, 2);
        assert!(certs
            .iter()
            .any(|c| c.criterion == Criterion::TwoCoprimeCycles { c: 4, d: 5 }));
        assert_eq!(handle.order(), alternating_order(9) * 2u32);
    }

    #[test]
    fn coprime_cycles_with_fixed_point_fires() {
        // Even witness of structure {1,3,5} at degree 9: 4 and 6 do not
        // divide 9, so the fixed-point criterion applies and the even
        // generators give exactly A9.
        let h = cycles("(1,2,3)(4,5,6,7,8)", 9);
        let k = cycles("(1,9)(2,4)", 9);
        let handle = GroupHandle::new(9, vec![h, k]);
        assert!(handle.is_transitive());
        let certs = jordan_certificates(&handle, 2);
        assert!(certs
            .iter()
            .any(|c| c.criterion == Criterion::TwoCoprimeCyclesWithFixedPoint { c: 3, d: 5 }));
        assert_eq!(handle.order(), alternating_order(9));
    }

    #[test]
    fn double_transposition_fires_at_degree_nine() {
        let x = cycles("(1,2,3,4,5,6,7,8,9)", 9);
        let y = cycles("(1,2)(3,4)", 9);
        let handle = GroupHandle::new(9, vec![x, y]);
        let certs = jordan_certificates(&handle, 2);
        assert!(certs
            .iter()
            .any(|c| c.criterion == Criterion::DoubleTransposition));
    }

    #[test]
    fn intransitive_group_has_no_certificates() {
        let handle = GroupHandle::new(8, vec![cycles("(1,2,3,4)", 8)]);
        assert!(jordan_certificates(&handle, 3).is_empty());
    }

    #[test]
    fn alternating_decisions() {
        // Type (2,5,5) pair generates A5.
        let check = is_alternating(&[cycles("(1,2)(3,4)", 5), cycles("(1,4,2,3,5)", 5)], 5);
        assert!(check.generates, "proof: {:?}", check.proof);

        // A 3-cycle alone does not generate A5.
        let check = is_alternating(&[cycles("(1,2,3)", 5)], 5);
        assert!(!check.generates);

        // Odd generator is reported, not panicked on.
        let check = is_alternating(&[cycles("(1,2)", 5)], 5);
        assert!(!check.generates);
        assert!(matches!(check.proof, GenerationProof::OddGenerator));
    }

    #[test]
    fn odd_degree_family_instance_generates() {
        // n = 13: x = (1..9), y a product of four transpositions meeting the
        // support of x; the product is a 13-cycle, so the pair generates A13.
        let x = cycles("(1,2,3,4,5,6,7,8,9)", 13);
        let y = cycles("(1,10)(2,11)(3,12)(4,13)", 13);
        let check = is_alternating(&[x.clone(), y.clone()], 13);
        assert!(check.generates, "proof: {:?}", check.proof);
        let z = x.compose(&y).unwrap().inverse();
        assert_eq!(z.order(), 13);
    }
}
