//! Exact arithmetic on permutations of {1..n}.
//!
//! Composition is left-to-right: `(p * q)(i) = q(p(i))`, i.e. apply `p`
//! first. Conjugation is `g^h = h^-1 g h`, which relabels the points of
//! `g` through `h`. Points are 1-based externally and dense; the identity
//! on n points is distinct from the identity on m != n points.

use crate::error::PermError;
use std::fmt;

/// A permutation of {1..n}, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Multiset of cycle lengths (fixed points included as 1s), sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// Full cycle-structure data of a permutation.
#[derive(Clone, Debug)]
pub struct CycleData {
    /// Cycles partitioning {1..n}, each rotated to start at its least point,
    /// sorted by that point. 1-based.
    pub cycles: Vec<Vec<usize>>,
    pub cycle_type: CycleType,
    /// Points not fixed, ascending, 1-based.
    pub support: Vec<usize>,
    pub parity: Parity,
}

impl CycleType {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&l| l as usize).sum()
    }

    pub fn parity(&self) -> Parity {
        let transpositions: u32 = self.0.iter().map(|&l| l - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// An S_n-class of even permutations splits into two A_n-classes exactly
    /// when all cycle lengths are odd and pairwise distinct.
    pub fn splits_in_alternating(&self) -> bool {
        let all_odd = self.0.iter().all(|&l| l % 2 == 1);
        let distinct = self.0.windows(2).all(|w| w[0] != w[1]);
        all_odd && distinct
    }

    pub fn order(&self) -> u64 {
        self.0.iter().fold(1u64, |acc, &l| num_integer::lcm(acc, l as u64))
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Build from a 1-based image list `[p(1), p(2), ..., p(n)]`.
    pub fn from_images(images_1based: &[usize]) -> Result<Self, PermError> {
        let n = images_1based.len();
        let mut images = vec![0u32; n];
        let mut seen = vec![false; n];
        for (i, &img) in images_1based.iter().enumerate() {
            if img < 1 || img > n {
                return Err(PermError::PointOutOfRange(img, n));
            }
            if seen[img - 1] {
                return Err(PermError::NotBijection(n));
            }
            seen[img - 1] = true;
            images[i] = (img - 1) as u32;
        }
        Ok(Permutation { images })
    }

    /// Build from 1-based disjoint cycles on {1..n}.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &pt in cycle {
                if pt < 1 || pt > n {
                    return Err(PermError::PointOutOfRange(pt, n));
                }
                if seen[pt - 1] {
                    return Err(PermError::RepeatedPoint(pt));
                }
                seen[pt - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                images[from] = to as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i as u32)
    }

    /// `(self * other)(i) = other(self(i))`: apply `self` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self^e` for any integer exponent, via per-cycle rotation.
    pub fn power(&self, e: i128) -> Permutation {
        let n = self.degree();
        let mut images = vec![0u32; n];
        let mut done = vec![false; n];
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            let mut cur = self.images[start];
            while cur as usize != start {
                cycle.push(cur);
                cur = self.images[cur as usize];
            }
            let len = cycle.len() as i128;
            let shift = e.rem_euclid(len) as usize;
            for (idx, &pt) in cycle.iter().enumerate() {
                images[pt as usize] = cycle[(idx + shift) % cycle.len()];
                done[pt as usize] = true;
            }
        }
        Permutation { images }
    }

    /// Order = lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths: Vec<u32> = Vec::new();
        let n = self.degree();
        let mut done = vec![false; n];
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut len = 1u32;
            done[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                done[cur] = true;
                cur = self.images[cur] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(lengths)
    }

    /// Cycles, cycle type, support and parity in one pass.
    pub fn cycle_data(&self) -> CycleData {
        let n = self.degree();
        let mut cycles = Vec::new();
        let mut done = vec![false; n];
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            done[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                done[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            cycles.push(cycle);
        }
        let mut lengths: Vec<u32> = cycles.iter().map(|c| c.len() as u32).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let cycle_type = CycleType(lengths);
        let support: Vec<usize> = (1..=n).filter(|&i| self.apply(i) != i).collect();
        let parity = cycle_type.parity();
        CycleData {
            cycles,
            cycle_type,
            support,
            parity,
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    pub fn parity(&self) -> Parity {
        self.cycle_type().parity()
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// `g^h = h^-1 g h`: relabels the points of `g` through `h`.
    pub fn conjugate(&self, h: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != h.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), h.degree()));
        }
        let mut images = vec![0u32; self.degree()];
        for i in 0..self.degree() as u32 {
            // h^-1 g h maps h(i) to h(g(i)).
            images[h.images[i as usize] as usize] = h.images[self.images[i as usize] as usize];
        }
        Ok(Permutation { images })
    }

    /// Commutator-free check that `self` commutes with `other`.
    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && (0..self.degree() as u32)
                .all(|i| other.images[self.images[i as usize] as usize] == self.images[other.images[i as usize] as usize])
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// Cycle notation, fixed points omitted; the identity prints as "()".
    pub fn cycle_string(&self) -> String {
        let data = self.cycle_data();
        let nontrivial: Vec<&Vec<usize>> = data.cycles.iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in nontrivial {
            out.push('(');
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&pt.to_string());
            }
            out.push(')');
        }
        out
    }

    /// Image-array notation "[2,1,4,5,3]".
    pub fn image_string(&self) -> String {
        let imgs: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        format!("[{}]", imgs.join(","))
    }

    /// Parse cycle notation such as "(1,2)(3,4,5)" or "()" on a given degree.
    /// Whitespace is allowed around points.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Permutation, PermError> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut chars = s.chars().peekable();
        if s.is_empty() {
            return Err(PermError::Parse("empty input".into()));
        }
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(PermError::Parse(format!("expected '(', found '{c}'")));
            }
            chars.next();
            let mut cycle = Vec::new();
            let mut num = String::new();
            loop {
                match chars.next() {
                    Some(')') => {
                        if !num.is_empty() {
                            cycle.push(
                                num.parse::<usize>()
                                    .map_err(|e| PermError::Parse(e.to_string()))?,
                            );
                        } else if !cycle.is_empty() {
                            return Err(PermError::Parse("trailing comma in cycle".into()));
                        }
                        break;
                    }
                    Some(',') => {
                        if num.is_empty() {
                            return Err(PermError::Parse("empty entry in cycle".into()));
                        }
                        cycle.push(
                            num.parse::<usize>()
                                .map_err(|e| PermError::Parse(e.to_string()))?,
                        );
                        num.clear();
                    }
                    Some(d) if d.is_ascii_digit() => num.push(d),
                    Some(w) if w.is_whitespace() => {}
                    Some(other) => {
                        return Err(PermError::Parse(format!("unexpected character '{other}'")))
                    }
                    None => return Err(PermError::Parse("unterminated cycle".into())),
                }
            }
            if cycle.len() == 1 {
                // A singleton is a fixed point; accept and ignore.
                let pt = cycle[0];
                if pt < 1 || pt > n {
                    return Err(PermError::PointOutOfRange(pt, n));
                }
            } else if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Permutation::from_cycles(&cycles, n)
    }

    /// Parse image-array notation "[2,1,4,5,3]"; the degree is the length.
    pub fn parse_images(s: &str) -> Result<Permutation, PermError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PermError::Parse("expected [..] image list".into()))?;
        let mut images = Vec::new();
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                images.push(
                    part.trim()
                        .parse::<usize>()
                        .map_err(|e| PermError::Parse(e.to_string()))?,
                );
            }
        }
        Permutation::from_images(&images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm<{}>{}", self.degree(), self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// Parse helper used by the catalog: cycles with an explicit degree.
pub fn cycles(s: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(s, n).expect("catalog cycle notation must parse")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn compose_applies_left_factor_first() {
        // (1,2) then (2,3) sends 1->2->3, so the product is (1,3,2).
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, p("(1,3,2)", 3));
    }

    #[test]
    fn compose_identity_law() {
        let a = p("(1,4,2,3,5)", 5);
        let id = Permutation::identity(5);
        assert_eq!(a.compose(&id).unwrap(), a);
        assert_eq!(id.compose(&a).unwrap(), a);
    }

    #[test]
    fn product_of_first_pair_is_a_five_cycle() {
        // x1 * y1 with x1 = (1,2)(3,4), y1 = (1,4,2,3,5) evaluates to
        // [3,4,2,5,1]; its inverse is the 5-cycle (1,5,4,2,3).
        let x1 = p("(1,2)(3,4)", 5);
        let y1 = p("(1,4,2,3,5)", 5);
        let xy = x1.compose(&y1).unwrap();
        assert_eq!(xy.images(), vec![3, 4, 2, 5, 1]);
        assert_eq!(xy.cycle_type(), CycleType(vec![5]));
        let z = xy.inverse();
        assert_eq!(z, p("(1,5,4,2,3)", 5));
        assert_eq!(z.order(), 5);
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(4);
        let b = Permutation::identity(5);
        assert!(matches!(a.compose(&b), Err(PermError::DegreeMismatch(4, 5))));
    }

    #[test]
    fn orders() {
        assert_eq!(p("(1,2,3,4,5)", 5).order(), 5);
        assert_eq!(p("(1,2)(3,4,5)", 5).order(), 6);
        // Order-15 element used in a degree-9 triple of type (5,15,9).
        assert_eq!(p("(1,2,5)(3,6,7,8,9)", 9).order(), 15);
    }

    #[test]
    fn power_and_inverse() {
        let a = p("(1,2,3,4,5)", 5);
        assert_eq!(a.power(5), Permutation::identity(5));
        assert_eq!(a.power(-1), a.inverse());
        assert_eq!(a.power(7), a.power(2));
        assert_eq!(a.compose(&a.inverse()).unwrap(), Permutation::identity(5));
        let b = p("(1,2)(3,4,5)", 5);
        assert_eq!(b.power(-5), b.power(1));
        assert_eq!(b.power(3), p("(1,2)", 5));
    }

    #[test]
    fn order_is_minimal_exponent() {
        for s in ["(1,2)(3,4,5)", "(1,2,3,4,5,6,7)(8,9)", "(1,2)(3,4)(5,6,7,8,9,10,11,12)"] {
            let g = p(s, 12);
            let ord = g.order();
            let mut acc = g.clone();
            for e in 1..ord {
                assert!(!acc.is_identity(), "{s} had order <= {e}");
                acc = acc.compose(&g).unwrap();
            }
            assert!(acc.is_identity());
        }
    }

    #[test]
    fn cycle_data_basic() {
        let g = p("(1,2)(3,4,5,6)", 8);
        let data = g.cycle_data();
        assert_eq!(data.cycle_type, CycleType(vec![4, 2, 1, 1]));
        assert_eq!(data.parity, Parity::Even);
        assert_eq!(data.support, vec![1, 2, 3, 4, 5, 6]);

        let id = Permutation::identity(6);
        let data = id.cycle_data();
        assert_eq!(data.cycle_type, CycleType(vec![1; 6]));
        assert!(data.support.is_empty());

        // Degree-10 element with cycles of lengths 8 and 2.
        let x = p("(1,2,3,4,5,6,7,8)(9,10)", 10);
        assert_eq!(x.cycle_type(), CycleType(vec![8, 2]));
        assert_eq!(x.order(), 8);
    }

    #[test]
    fn conjugation_relabels() {
        let g = p("(1,2,3)", 3);
        let h = p("(1,2)", 3);
        assert_eq!(g.conjugate(&h).unwrap(), p("(1,3,2)", 3));
        assert_eq!(g.conjugate(&Permutation::identity(3)).unwrap(), g);
    }

    #[test]
    fn conjugation_preserves_cycle_type() {
        let g = p("(1,2,3)(4,5)", 7);
        let h = p("(1,6,2,7)(3,4)", 7);
        assert_eq!(g.conjugate(&h).unwrap().cycle_type(), g.cycle_type());
    }

    #[test]
    fn parity_is_multiplicative() {
        let g = p("(1,2)", 5);
        let h = p("(1,2,3)", 5);
        let gh = g.compose(&h).unwrap();
        assert_eq!(
            gh.parity().sign(),
            g.parity().sign() * h.parity().sign()
        );
    }

    #[test]
    fn split_rule() {
        assert!(CycleType(vec![5]).splits_in_alternating());
        assert!(CycleType(vec![3, 1]).splits_in_alternating());
        // A repeated length (two fixed points here) admits an odd centralizer
        // element, so the class does not split.
        assert!(!CycleType(vec![3, 1, 1]).splits_in_alternating());
        assert!(!CycleType(vec![3, 3]).splits_in_alternating());
        assert!(!CycleType(vec![2, 2, 1]).splits_in_alternating());
        assert!(!CycleType(vec![1, 1, 1]).splits_in_alternating());
    }

    #[test]
    fn parse_and_print_round_trip() {
        for (s, n) in [("(1,2)(3,4,5)", 6), ("()", 4), ("(2,7)(3,5,6)", 8)] {
            let g = p(s, n);
            assert_eq!(Permutation::parse_cycles(&g.cycle_string(), n).unwrap(), g);
            assert_eq!(Permutation::parse_images(&g.image_string()).unwrap(), g);
        }
        // Whitespace as printed in tables is accepted.
        assert_eq!(p("(1, 5, 4, 2, 3)", 5), p("(1,5,4,2,3)", 5));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_cycles("(1,2", 4).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 4).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 4).is_err());
        assert!(Permutation::parse_cycles("(1,5)", 4).is_err());
        assert!(Permutation::parse_cycles("", 4).is_err());
        assert!(Permutation::parse_images("[1,1,3]").is_err());
        assert!(Permutation::parse_images("[1,2,").is_err());
        assert!(Permutation::parse_images("[0,1]").is_err());
    }

    #[test]
    fn identity_degrees_distinct() {
        assert_ne!(Permutation::identity(5), Permutation::identity(6));
    }
}
