//! Counting: 2-bases and their automorphism classes, the subgroup-lattice
//! Moebius computation, exponents of alternating groups, and primes.

mod classreps;
mod lattice;

pub use classreps::{class_representatives, ClassRep, EquivalenceLevel};
pub use lattice::{phi2_moebius, subgroup_lattice, verify_moebius_recursion, SubgroupNode};

use crate::error::BuildError;
use crate::group::is_alternating;
use crate::perm::Permutation;
use num_integer::lcm;
use rayon::prelude::*;
use serde::Serialize;

/// All permutations of {1..n} in lexicographic image order.
pub fn enumerate_symmetric(n: usize) -> Vec<Permutation> {
    assert!(n <= 8, "full enumeration is desk-scale only");
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        if images.len() == n {
            out.push(Permutation::from_images(images).expect("bijection by construction"));
            return;
        }
        for i in 1..=n {
            if !used[i - 1] {
                used[i - 1] = true;
                images.push(i);
                rec(n, images, used, out);
                images.pop();
                used[i - 1] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

/// All even permutations of {1..n} in lexicographic image order.
pub fn enumerate_alternating(n: usize) -> Vec<Permutation> {
    enumerate_symmetric(n)
        .into_iter()
        .filter(|g| g.is_even())
        .collect()
}

/// Exact list of primes up to n (inclusive) by sieve.
pub fn primes_upto(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).collect()
}

pub fn prime_pi(n: usize) -> usize {
    primes_upto(n).len()
}

/// Exponent of A_n: the lcm of lcm(parts) over all partitions of n whose
/// sign is even, i.e. with n - (number of parts) even.
pub fn exponent_alternating(n: usize) -> u128 {
    assert!(n >= 1 && n <= 64, "exponent supported for 1 <= n <= 64");
    fn rec(remaining: usize, max_part: usize, parts: usize, cur_lcm: u128, n: usize, acc: &mut u128) {
        if remaining == 0 {
            if (n - parts) % 2 == 0 {
                *acc = lcm(*acc, cur_lcm);
            }
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            rec(
                remaining - part,
                part,
                parts + 1,
                lcm(cur_lcm, part as u128),
                n,
                acc,
            );
        }
    }
    let mut acc = 1u128;
    rec(n, n, 0, 1, n, &mut acc);
    acc
}

/// The largest power of p dividing `value`.
pub fn p_part(value: u128, p: u128) -> u128 {
    assert!(p >= 2);
    let mut part = 1u128;
    let mut v = value;
    while v % p == 0 {
        part *= p;
        v /= p;
    }
    part
}

/// An element of A_n is p-full when its order is divisible by the full
/// p-part of the exponent of A_n.
pub fn is_p_full(order: u64, n: usize, p: u64) -> bool {
    let part = p_part(exponent_alternating(n), p as u128);
    (order as u128) % part == 0
}

/// |Aut A_n|: n! for n != 6, and 2 * 6! = 1440 for n = 6. The exceptional
/// factor of two is realized and machine-verified in `conjugacy`.
pub fn aut_order(n: usize) -> u64 {
    assert!((5..=20).contains(&n));
    let fact: u64 = (1..=n as u64).product();
    if n == 6 {
        2 * fact
    } else {
        fact
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CountMethod {
    Brute,
    Moebius,
}

/// phi_2, |Aut|, and d_2 = phi_2 / |Aut| for A_n.
#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub phi2: u64,
    pub aut_order: u64,
    pub d2: u64,
    pub method: CountMethod,
}

impl CountReport {
    fn from_phi2(n: usize, phi2: u64, method: CountMethod) -> CountReport {
        let aut = aut_order(n);
        assert!(
            phi2 % aut == 0,
            "Aut A_{n} acts semiregularly on 2-bases, so |Aut| = {aut} must divide phi2 = {phi2}"
        );
        CountReport {
            n,
            phi2,
            aut_order: aut,
            d2: phi2 / aut,
            method,
        }
    }
}

/// Counts ordered generating pairs of A_n by scanning all |A_n|^2 pairs.
/// The per-pair test uses the cycle-criteria fast paths before falling back
/// to the stabilizer-chain order; the pair space is partitioned for
/// data-parallel counting (the sum is associative, so the partition does not
/// affect the result).
pub fn phi2_bruteforce(n: usize, max_group_order: u64) -> Result<CountReport, BuildError> {
    if !(5..=7).contains(&n) {
        return Err(BuildError::DegreeOutOfRange(n, 5, 7));
    }
    let order: u64 = (1..=n as u64).product::<u64>() / 2;
    if order > max_group_order {
        return Err(BuildError::InfeasibleK {
            k: order as usize,
            cap: max_group_order as usize,
        });
    }
    let elems = enumerate_alternating(n);
    let phi2: u64 = elems
        .par_iter()
        .map(|x| {
            elems
                .iter()
                .filter(|y| is_alternating(&[x.clone(), (*y).clone()], n).generates)
                .count() as u64
        })
        .sum();
    Ok(CountReport::from_phi2(n, phi2, CountMethod::Brute))
}

/// d_2(A_n) for n in {5, 6}, computed once per process by brute force and
/// cached; used as the hard upper bound on k when building structures.
pub fn class_count_small(n: usize) -> Result<usize, BuildError> {
    use std::sync::OnceLock;
    static D2_5: OnceLock<usize> = OnceLock::new();
    static D2_6: OnceLock<usize> = OnceLock::new();
    match n {
        5 => Ok(*D2_5.get_or_init(|| {
            phi2_bruteforce(5, 2520).expect("degree in range").d2 as usize
        })),
        6 => Ok(*D2_6.get_or_init(|| {
            phi2_bruteforce(6, 2520).expect("degree in range").d2 as usize
        })),
        _ => Err(BuildError::DegreeOutOfRange(n, 5, 6)),
    }
}

/// Spot-check that only the identity of S_n (extended by the exceptional
/// automorphism for n = 6) fixes a generating pair, i.e. the Aut-action on
/// 2-bases is semiregular.
pub fn semiregularity_spot_check(n: usize, pairs: &[(Permutation, Permutation)]) -> bool {
    let sn = enumerate_symmetric(n);
    for (x, y) in pairs {
        for s in &sn {
            if s.is_identity() {
                continue;
            }
            if &x.conjugate(s).expect("equal degrees") == x
                && &y.conjugate(s).expect("equal degrees") == y
            {
                return false;
            }
        }
        if n == 6 {
            let aut = crate::conjugacy::exceptional_aut();
            for s in &sn {
                let tx = aut.apply(x).conjugate(s).expect("equal degrees");
                let ty = aut.apply(y).conjugate(s).expect("equal degrees");
                if &tx == x && &ty == y {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_symmetric(4).len(), 24);
        assert_eq!(enumerate_alternating(5).len(), 60);
        assert_eq!(enumerate_alternating(6).len(), 360);
    }

    #[test]
    fn primes() {
        assert_eq!(primes_upto(12), vec![2, 3, 5, 7, 11]);
        assert_eq!(prime_pi(12), 5);
        assert_eq!(prime_pi(2), 1);
        assert_eq!(prime_pi(1), 0);
        // pi(n) stays within the linear bound used by the dispatcher.
        assert!(6 * prime_pi(12) <= 3 * 13);
    }

    #[test]
    fn exponents_of_small_alternating_groups() {
        assert_eq!(exponent_alternating(5), 30);
        assert_eq!(exponent_alternating(6), 60);
        assert_eq!(exponent_alternating(7), 420);
        assert_eq!(exponent_alternating(8), 420);
        assert_eq!(exponent_alternating(9), 1260);
        assert_eq!(exponent_alternating(10), 2520);
        assert_eq!(exponent_alternating(11), 27720);
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(30, 2), 2);
        assert_eq!(p_part(30, 5), 5);
        assert_eq!(p_part(420, 2), 4);
        assert_eq!(p_part(2520, 2), 8);
        assert_eq!(p_part(2520, 3), 9);
        assert_eq!(p_part(7, 2), 1);
    }

    #[test]
    fn phi2_of_a5() {
        let report = phi2_bruteforce(5, 2520).unwrap();
        assert_eq!(report.phi2, 2280);
        assert_eq!(report.aut_order, 120);
        assert_eq!(report.d2, 19);
    }

    #[test]
    fn phi2_cap() {
        assert!(matches!(
            phi2_bruteforce(9, 2520),
            Err(BuildError::DegreeOutOfRange(9, 5, 7))
        ));
    }
}
