//! Parametric families of generating triples for n >= 12: the
//! mutually-coprime-type family (an (n-4)- or (n-3)-cycle against four
//! transpositions), one p-full triple per prime p <= n, and one p-avoiding
//! triple per prime. Every construction is verified before it is returned.

use super::GeneratingTriple;
use crate::count::{is_p_full, primes_upto};
use crate::error::BuildError;
use crate::perm::Permutation;

/// Free parameters of the coprime-type family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoprimeParams {
    /// Odd n: a 4-subset {s,t,u,v} of {1..n-4}; the triple is
    /// x = (1..n-4), y = (s,n-3)(t,n-2)(u,n-1)(v,n), of type (n-4, 2, n).
    Odd { subset: [usize; 4] },
    /// Even n: s with s+1 <= n-3 and distinct t,u,v, all in {1..n-3} and
    /// avoiding {s, s+1}; the triple is x = (1..n-3),
    /// y = (s,s+1)(t,n-2)(u,n-1)(v,n), of type (n-3, 2, n-1).
    Even { s: usize, t: usize, u: usize, v: usize },
}

impl CoprimeParams {
    fn describe(&self) -> String {
        match self {
            CoprimeParams::Odd { subset } => format!("odd{:?}", subset),
            CoprimeParams::Even { s, t, u, v } => format!("even[s={s},{t},{u},{v}]"),
        }
    }
}

fn run_cycle(from: usize, to: usize) -> Vec<usize> {
    (from..=to).collect()
}

fn expect_type(
    t: &GeneratingTriple,
    want: (u64, u64, u64),
    what: &str,
) -> Result<(), BuildError> {
    if t.triple_type() != want {
        return Err(BuildError::VerificationFailed(format!(
            "{what}: expected type {want:?}, computed {:?}",
            t.triple_type()
        )));
    }
    Ok(())
}

fn expect_generates(t: &GeneratingTriple, what: &str) -> Result<(), BuildError> {
    let check = t.verify_generates();
    if !check.generates {
        return Err(BuildError::VerificationFailed(format!(
            "{what}: does not generate (proof {})",
            check.proof.label()
        )));
    }
    Ok(())
}

/// Builds one coprime-type triple from explicit parameters and verifies the
/// type and generation.
pub fn coprime_family(n: usize, params: &CoprimeParams) -> Result<GeneratingTriple, BuildError> {
    if n < 12 {
        return Err(BuildError::DegreeOutOfRange(n, 12, usize::MAX));
    }
    let triple = match params {
        CoprimeParams::Odd { subset } => {
            if n % 2 == 0 {
                return Err(BuildError::IllegalParams("odd-form parameters for even n".into()));
            }
            let mut sorted = *subset;
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[0] < 1 || sorted[3] > n - 4 {
                return Err(BuildError::IllegalParams(format!(
                    "subset {subset:?} must be 4 distinct points of 1..={}",
                    n - 4
                )));
            }
            let x = Permutation::from_cycles(&[run_cycle(1, n - 4)], n).expect("valid cycle");
            let y = Permutation::from_cycles(
                &[
                    vec![sorted[0], n - 3],
                    vec![sorted[1], n - 2],
                    vec![sorted[2], n - 1],
                    vec![sorted[3], n],
                ],
                n,
            )
            .expect("disjoint transpositions");
            let t = GeneratingTriple::from_xy(
                x,
                y,
                format!("coprime[n={n},{}]", params.describe()),
            )?;
            expect_type(&t, (n as u64 - 4, 2, n as u64), "coprime family (odd)")?;
            if t.z().cycle_type().0.as_slice() != [n as u32] {
                return Err(BuildError::VerificationFailed(
                    "coprime family (odd): z must be an n-cycle".into(),
                ));
            }
            t
        }
        CoprimeParams::Even { s, t, u, v } => {
            if n % 2 == 1 {
                return Err(BuildError::IllegalParams("even-form parameters for odd n".into()));
            }
            let (s, t_, u, v) = (*s, *t, *u, *v);
            let mut all = vec![s, s + 1, t_, u, v];
            all.sort_unstable();
            if all.windows(2).any(|w| w[0] == w[1]) || all[0] < 1 || all[4] > n - 3 {
                return Err(BuildError::IllegalParams(format!(
                    "parameters (s={s}, t={t_}, u={u}, v={v}) must give 5 distinct points of 1..={}",
                    n - 3
                )));
            }
            let x = Permutation::from_cycles(&[run_cycle(1, n - 3)], n).expect("valid cycle");
            let y = Permutation::from_cycles(
                &[
                    vec![s, s + 1],
                    vec![t_, n - 2],
                    vec![u, n - 1],
                    vec![v, n],
                ],
                n,
            )
            .expect("disjoint transpositions");
            let tr = GeneratingTriple::from_xy(
                x,
                y,
                format!("coprime[n={n},{}]", params.describe()),
            )?;
            expect_type(&tr, (n as u64 - 3, 2, n as u64 - 1), "coprime family (even)")?;
            if tr.z().apply(s) != s {
                return Err(BuildError::VerificationFailed(
                    "coprime family (even): z must fix s".into(),
                ));
            }
            tr
        }
    };
    expect_generates(&triple, "coprime family")?;
    Ok(triple)
}

/// Lexicographically least representative of a 4-subset of Z_{n-4} under
/// cyclic shifts (1-based points).
fn shift_canonical(subset: [usize; 4], modulus: usize) -> [usize; 4] {
    let mut best: Option<[usize; 4]> = None;
    for delta in 0..modulus {
        let mut shifted = subset.map(|p| (p - 1 + delta) % modulus + 1);
        shifted.sort_unstable();
        if best.is_none() || shifted < best.unwrap() {
            best = Some(shifted);
        }
    }
    best.unwrap()
}

/// One triple per equivalence class of the coprime-type family.
/// Odd n: one 4-subset per orbit of the shift action, canonicalized as the
/// lexicographically least shift; the count is (n-5)(n-6)(n-7)/24.
/// Even n: s = 1 with all {t,u,v} in {3..n-3}; the count is
/// (n-5)(n-6)(n-7)/6.
pub fn coprime_family_representatives(n: usize) -> Result<Vec<GeneratingTriple>, BuildError> {
    if n < 12 {
        return Err(BuildError::DegreeOutOfRange(n, 12, usize::MAX));
    }
    let mut out = Vec::new();
    if n % 2 == 1 {
        let modulus = n - 4;
        for s in 1..=modulus - 3 {
            for t in s + 1..=modulus - 2 {
                for u in t + 1..=modulus - 1 {
                    for v in u + 1..=modulus {
                        let subset = [s, t, u, v];
                        if shift_canonical(subset, modulus) == subset {
                            out.push(coprime_family(n, &CoprimeParams::Odd { subset })?);
                        }
                    }
                }
            }
        }
    } else {
        for t in 3..=n - 5 {
            for u in t + 1..=n - 4 {
                for v in u + 1..=n - 3 {
                    out.push(coprime_family(n, &CoprimeParams::Even { s: 1, t, u, v })?);
                }
            }
        }
    }
    Ok(out)
}

/// Closed-form class count of the coprime-type family.
pub fn coprime_family_class_count(n: usize) -> usize {
    let product = (n - 5) * (n - 6) * (n - 7);
    if n % 2 == 1 {
        product / 24
    } else {
        product / 6
    }
}

/// One generating triple per prime p <= n with a p-full first element:
/// x is a p-power cycle (plus a transposition for p = 2), y consists of two
/// coprime cycles near n/2 (plus a fixed point for odd n), and placements
/// are searched deterministically until z has at least two nontrivial
/// cycles and the whole triple verifies.
pub fn p_full_triple(n: usize, p: usize) -> Result<GeneratingTriple, BuildError> {
    if n < 12 {
        return Err(BuildError::DegreeOutOfRange(n, 12, usize::MAX));
    }
    if !primes_upto(n).contains(&p) {
        return Err(BuildError::IllegalParams(format!("p = {p} must be a prime <= {n}")));
    }
    let m = n / 2;
    let (c, d) = if m % 2 == 0 { (m - 1, m + 1) } else { (m - 2, m + 2) };

    // x and its support size.
    let (x, support) = if p % 2 == 1 {
        let mut power = p;
        while power * p <= n {
            power *= p;
        }
        (
            Permutation::from_cycles(&[run_cycle(1, power)], n).expect("valid cycle"),
            power,
        )
    } else {
        let mut power = 4;
        while power * 2 + 2 <= n {
            power *= 2;
        }
        (
            Permutation::from_cycles(&[run_cycle(1, power), vec![power + 1, power + 2]], n)
                .expect("disjoint cycles"),
            power + 2,
        )
    };
    let two_power = if p % 2 == 1 { 0 } else { support - 2 };

    let fixed_choices: Vec<Option<usize>> = if n % 2 == 1 {
        vec![Some(support), Some(support - 1), Some(support - 2)]
    } else {
        vec![None]
    };

    let mut attempts = Vec::new();
    for fixed in &fixed_choices {
        let inside: Vec<usize> = (1..=support).filter(|pt| Some(*pt) != *fixed).collect();
        let outside: Vec<usize> = (support + 1..=n).collect();
        let a_min = c.saturating_sub(outside.len()).max(1);
        let a_max = c.min(inside.len().saturating_sub(1));
        for a in a_min..=a_max {
            for reverse_d in [false, true] {
                for reverse_c in [false, true] {
                    let mut cycle_c: Vec<usize> = inside[..a].to_vec();
                    cycle_c.extend_from_slice(&outside[..c - a]);
                    let mut cycle_d: Vec<usize> = inside[a..].to_vec();
                    cycle_d.extend_from_slice(&outside[c - a..]);
                    if reverse_c {
                        cycle_c.reverse();
                    }
                    if reverse_d {
                        cycle_d.reverse();
                    }
                    debug_assert_eq!(cycle_d.len(), d);
                    // For p = 2 the long cycle of x must meet both cycles of y.
                    if p == 2 {
                        let meets = |cycle: &[usize]| cycle.iter().any(|&pt| pt <= two_power);
                        if !meets(&cycle_c) || !meets(&cycle_d) {
                            attempts.push(format!("a={a} skipped: long cycle does not meet both"));
                            continue;
                        }
                    }
                    let y = Permutation::from_cycles(&[cycle_c.clone(), cycle_d.clone()], n)
                        .expect("disjoint cycles");
                    let label = format!(
                        "p-full[n={n},p={p},a={a},revc={reverse_c},revd={reverse_d},fix={fixed:?}]"
                    );
                    let t = GeneratingTriple::from_xy(x.clone(), y, label.clone())?;
                    // z needs at least two nontrivial cycles so that x stays
                    // the only cycle in the triple.
                    let z_cycles = t.z().cycle_type().0.iter().filter(|&&l| l > 1).count();
                    if z_cycles < 2 {
                        attempts.push(format!("{label}: z has {z_cycles} nontrivial cycles"));
                        continue;
                    }
                    if !is_p_full(t.x().order(), n, p as u64) {
                        attempts.push(format!("{label}: x not p-full"));
                        continue;
                    }
                    if t.verify_generates().generates {
                        return Ok(t);
                    }
                    attempts.push(format!("{label}: generation failed"));
                }
            }
        }
    }
    Err(BuildError::SearchExhausted(format!(
        "p-full triple n={n} p={p}; attempted {:?}",
        attempts
    )))
}

/// One generating triple per prime p <= n in which no element is p-full.
/// Deterministic case analysis on p and n mod p; verified before return.
pub fn p_avoiding_triple(n: usize, p: usize) -> Result<GeneratingTriple, BuildError> {
    if n < 12 {
        return Err(BuildError::DegreeOutOfRange(n, 12, usize::MAX));
    }
    if !primes_upto(n).contains(&p) {
        return Err(BuildError::IllegalParams(format!("p = {p} must be a prime <= {n}")));
    }
    let (x, y, case): (Permutation, Permutation, String) = match p {
        2 => {
            if n % 2 == 1 {
                let x = Permutation::from_cycles(&[run_cycle(1, n - 2)], n).expect("cycle");
                let y = Permutation::from_cycles(&[vec![n - 3, n - 1], vec![n - 2, n]], n)
                    .expect("cycles");
                (x, y, "p2-odd".into())
            } else {
                let x = Permutation::from_cycles(&[run_cycle(1, n - 1)], n).expect("cycle");
                let y =
                    Permutation::from_cycles(&[vec![1, 2], vec![n - 1, n]], n).expect("cycles");
                (x, y, "p2-even".into())
            }
        }
        3 => {
            if n % 2 == 1 {
                if n % 9 != 0 {
                    let x = Permutation::from_cycles(&[run_cycle(1, n)], n).expect("cycle");
                    let y = Permutation::from_cycles(&[vec![1, 2, 3]], n).expect("cycle");
                    (x, y, "p3-odd".into())
                } else {
                    let x = Permutation::from_cycles(
                        &[run_cycle(1, n - 4), vec![n - 3, n - 2, n - 1]],
                        n,
                    )
                    .expect("cycles");
                    let y = Permutation::from_cycles(
                        &[vec![1, 3, 2], vec![n - 4, n - 3, n]],
                        n,
                    )
                    .expect("cycles");
                    (x, y, "p3-odd-9div".into())
                }
            } else if n % 9 != 1 {
                let x = Permutation::from_cycles(&[run_cycle(1, n - 1)], n).expect("cycle");
                let y = Permutation::from_cycles(&[vec![1, n, 2]], n).expect("cycle");
                (x, y, "p3-even".into())
            } else {
                let x = Permutation::from_cycles(&[run_cycle(1, n - 3)], n).expect("cycle");
                let y = Permutation::from_cycles(
                    &[vec![1, n, 2], vec![3, 5, 4], vec![n - 3, n - 2, n - 1]],
                    n,
                )
                .expect("cycles");
                (x, y, "p3-even-9cong1".into())
            }
        }
        _ => {
            // p >= 5: x is a q-cycle for a prime q, and y attaches the
            // points outside {1..q} through one or two cycles rooted at the
            // points 3 and 4.
            let q = if p == 5 {
                7
            } else {
                *primes_upto(p - 1)
                    .last()
                    .expect("a prime below any p >= 7 exists")
            };
            let (head, lengths, case): (Vec<Vec<usize>>, Vec<usize>, String) = if p == 5 {
                let lengths = if (n - 6) % 5 != 0 {
                    vec![n - 6]
                } else {
                    vec![2, n - 7]
                };
                if n % 2 == 0 {
                    let head = if n % 5 != 3 { vec![vec![2, 6]] } else { vec![vec![2, 5]] };
                    (head, lengths, format!("p5-even-mod{}", n % 5))
                } else {
                    let head = if n % 5 != 2 {
                        vec![vec![1, 2], vec![6, 7]]
                    } else {
                        vec![vec![1, 2], vec![5, 7]]
                    };
                    (head, lengths, format!("p5-odd-mod{}", n % 5))
                }
            } else if n % 2 == 0 {
                if n % p == 1 {
                    (vec![vec![2, q]], vec![n - q + 1], format!("p{p}-even-cong1"))
                } else if n % p == (q - 1) % p {
                    (vec![vec![1, 2]], vec![2, n - q], format!("p{p}-even-congq1"))
                } else {
                    (vec![vec![1, 2]], vec![n - q + 1], format!("p{p}-even"))
                }
            } else if q == n - 2 {
                (vec![vec![1, q, 2]], vec![2, 2], format!("p{p}-odd-twin"))
            } else if n % p == 2 {
                (vec![vec![1, 2, q]], vec![n - q + 1], format!("p{p}-odd-cong2"))
            } else if n % p == (q - 1) % p {
                (vec![vec![1, q, 2]], vec![2, n - q], format!("p{p}-odd-congq1"))
            } else {
                (vec![vec![1, q, 2]], vec![n - q + 1], format!("p{p}-odd"))
            };
            let x = Permutation::from_cycles(&[run_cycle(1, q)], n).expect("cycle");
            let mut cycles_list = head;
            let mut next_outside = q + 1;
            for (i, len) in lengths.iter().enumerate() {
                let attach = 3 + i;
                let mut cycle = vec![attach];
                for _ in 0..len - 1 {
                    cycle.push(next_outside);
                    next_outside += 1;
                }
                cycles_list.push(cycle);
            }
            debug_assert_eq!(next_outside, n + 1, "all outside points joined");
            let y = Permutation::from_cycles(&cycles_list, n).expect("disjoint cycles");
            (x, y, case)
        }
    };

    let t = GeneratingTriple::from_xy(x, y, format!("p-avoiding[n={n},p={p},{case}]"))?;
    // No element may be p-full.
    for (who, g) in [("x", t.x()), ("y", t.y()), ("z", t.z())] {
        if is_p_full(g.order(), n, p as u64) {
            return Err(BuildError::VerificationFailed(format!(
                "p-avoiding n={n} p={p} case {case}: element {who} is p-full (order {})",
                g.order()
            )));
        }
        if p <= 3 {
            let sq = (p * p) as u32;
            if g.cycle_type().0.iter().any(|&l| l % sq == 0) {
                return Err(BuildError::VerificationFailed(format!(
                    "p-avoiding n={n} p={p} case {case}: element {who} has a cycle divisible by {sq}"
                )));
            }
        } else if g.order() % p as u64 == 0 {
            return Err(BuildError::VerificationFailed(format!(
                "p-avoiding n={n} p={p} case {case}: element {who} has order divisible by {p}"
            )));
        }
    }
    expect_generates(&t, &format!("p-avoiding n={n} p={p} case {case}"))?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprime_counts_for_13_and_12() {
        let reps13 = coprime_family_representatives(13).unwrap();
        assert_eq!(reps13.len(), 14);
        assert_eq!(coprime_family_class_count(13), 14);
        let reps12 = coprime_family_representatives(12).unwrap();
        assert_eq!(reps12.len(), 35);
        assert_eq!(coprime_family_class_count(12), 35);
    }

    #[test]
    fn coprime_instance_13() {
        let t = coprime_family(
            13,
            &CoprimeParams::Odd {
                subset: [1, 2, 3, 4],
            },
        )
        .unwrap();
        assert_eq!(t.triple_type(), (9, 2, 13));
        assert!(t.verify_generates().generates);
    }

    #[test]
    fn coprime_rejects_bad_params() {
        assert!(coprime_family(13, &CoprimeParams::Odd { subset: [1, 1, 2, 3] }).is_err());
        assert!(coprime_family(13, &CoprimeParams::Odd { subset: [1, 2, 3, 10] }).is_err());
        assert!(coprime_family(12, &CoprimeParams::Odd { subset: [1, 2, 3, 4] }).is_err());
    }

    #[test]
    fn p_full_examples_at_12() {
        // p = 3: x must be a 9-cycle (9 <= 12 < 27), which is 3-full; y has
        // cycles of lengths 5 and 7.
        let t = p_full_triple(12, 3).unwrap();
        assert_eq!(t.x().cycle_type().0.as_slice(), &[9, 1, 1, 1]);
        let mut y_lens: Vec<u32> = t.y().cycle_type().0.iter().copied().filter(|&l| l > 1).collect();
        y_lens.sort_unstable();
        assert_eq!(y_lens, vec![5, 7]);

        // p = 2: x has cycles of lengths 8 and 2 (8 + 2 <= 12 < 18).
        let t = p_full_triple(12, 2).unwrap();
        let mut x_lens: Vec<u32> = t.x().cycle_type().0.iter().copied().filter(|&l| l > 1).collect();
        x_lens.sort_unstable();
        assert_eq!(x_lens, vec![2, 8]);
        assert!(is_p_full(t.x().order(), 12, 2));
    }

    #[test]
    fn p_avoiding_examples() {
        // n = 13, p = 2: type (11, 2, 13).
        let t = p_avoiding_triple(13, 2).unwrap();
        assert_eq!(t.triple_type(), (11, 2, 13));
        // n = 12, p = 3: type (11, 3, 11).
        let t = p_avoiding_triple(12, 3).unwrap();
        assert_eq!(t.triple_type(), (11, 3, 11));
        // n = 13, p = 3: type (13, 3, 13).
        let t = p_avoiding_triple(13, 3).unwrap();
        assert_eq!(t.triple_type(), (13, 3, 13));
    }

    #[test]
    fn whole_prime_range_at_12_and_13() {
        for n in [12usize, 13] {
            for p in primes_upto(n) {
                let tp = p_full_triple(n, p).unwrap();
                assert!(tp.verify_generates().generates, "T n={n} p={p}");
                let tq = p_avoiding_triple(n, p).unwrap();
                assert!(tq.verify_generates().generates, "T' n={n} p={p}");
            }
        }
    }
}
