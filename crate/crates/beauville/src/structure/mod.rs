//! Beauville structures on G = A_n^k: product triples, hyperbolicity,
//! p-profiles and summits, the distinguishing predicates, the exact
//! condition-3 checker, and the assembly recipes. The verifier, not the
//! constructor, is the authority: every assembled structure is re-checked
//! exactly before it is returned.

mod assemble;
mod verify;

pub use assemble::{
    a5_squared, assemble_coprime, assemble_distinguishing_pairs, assemble_strong_pairs,
    build_beauville, BuildOutcome,
};
pub use verify::{
    condition3_exact, verify_product_generation, verify_structure, BeauvilleStructure,
    Condition3Report, GenerationEvidence, GoursatCheck, PrimeEvidence, VerificationReport,
};

use crate::count::{is_p_full, p_part};
use crate::error::PermError;
use crate::perm::Permutation;
use crate::triples::GeneratingTriple;
use num_bigint::{BigInt, BigUint};
use num_integer::lcm;

/// An element of A_n^k as its k components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductElement {
    n: usize,
    components: Vec<Permutation>,
}

impl ProductElement {
    pub fn new(n: usize, components: Vec<Permutation>) -> Result<ProductElement, PermError> {
        for c in &components {
            if c.degree() != n {
                return Err(PermError::DegreeMismatch(c.degree(), n));
            }
        }
        Ok(ProductElement { n, components })
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Permutation] {
        &self.components
    }

    /// Order = lcm of the component orders.
    pub fn order(&self) -> u128 {
        self.components
            .iter()
            .fold(1u128, |acc, c| lcm(acc, c.order() as u128))
    }

    pub fn power(&self, e: i128) -> ProductElement {
        ProductElement {
            n: self.n,
            components: self.components.iter().map(|c| c.power(e)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(|c| c.is_identity())
    }

    pub fn compose(&self, other: &ProductElement) -> Result<ProductElement, PermError> {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.compose(b))
            .collect::<Result<Vec<_>, _>>()?;
        ProductElement::new(self.n, components)
    }
}

/// A triple (a, b, c) in A_n^k with a*b*c = 1, stored coordinatewise: the
/// j-th coordinates of a, b, c form the j-th coordinate triple.
#[derive(Clone, Debug)]
pub struct ProductTriple {
    n: usize,
    coords: Vec<GeneratingTriple>,
}

impl ProductTriple {
    pub fn new(n: usize, coords: Vec<GeneratingTriple>) -> Result<ProductTriple, PermError> {
        for t in &coords {
            if t.degree() != n {
                return Err(PermError::DegreeMismatch(t.degree(), n));
            }
        }
        Ok(ProductTriple { n, coords })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn coordinates(&self) -> &[GeneratingTriple] {
        &self.coords
    }

    pub fn a(&self) -> ProductElement {
        ProductElement {
            n: self.n,
            components: self.coords.iter().map(|t| t.x().clone()).collect(),
        }
    }

    pub fn b(&self) -> ProductElement {
        ProductElement {
            n: self.n,
            components: self.coords.iter().map(|t| t.y().clone()).collect(),
        }
    }

    pub fn c(&self) -> ProductElement {
        ProductElement {
            n: self.n,
            components: self.coords.iter().map(|t| t.z().clone()).collect(),
        }
    }

    /// Orders of (a, b, c): the componentwise lcms.
    pub fn triple_type(&self) -> (u128, u128, u128) {
        (self.a().order(), self.b().order(), self.c().order())
    }
}

/// p-profile of a product element: the exponent of p in each component
/// order, plus the summit (the coordinates attaining the nonzero maximum;
/// empty when p does not divide the order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileData {
    pub exponents: Vec<u32>,
    pub summit: Vec<usize>,
}

pub fn profile(g: &ProductElement, p: u64) -> ProfileData {
    let exponents: Vec<u32> = g
        .components
        .iter()
        .map(|c| {
            let part = p_part(c.order() as u128, p as u128);
            part.ilog(p as u128)
        })
        .collect();
    let max = exponents.iter().copied().max().unwrap_or(0);
    let summit = if max == 0 {
        Vec::new()
    } else {
        exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == max)
            .map(|(i, _)| i)
            .collect()
    };
    ProfileData { exponents, summit }
}

/// Number of p-full elements among (x, y, z).
pub fn nu_p(t: &GeneratingTriple, p: u64) -> u8 {
    let n = t.degree();
    [t.x(), t.y(), t.z()]
        .iter()
        .filter(|g| is_p_full(g.order(), n, p))
        .count() as u8
}

pub fn is_p_distinguishing(t1: &GeneratingTriple, t2: &GeneratingTriple, p: u64) -> bool {
    nu_p(t1, p) != nu_p(t2, p)
}

/// Distinguishing, and additionally: any side with no p-full element either
/// lives in a group whose exponent p-part is just p, or avoids p in all
/// three periods.
pub fn is_strongly_p_distinguishing(
    t1: &GeneratingTriple,
    t2: &GeneratingTriple,
    p: u64,
) -> bool {
    if !is_p_distinguishing(t1, t2, p) {
        return false;
    }
    let n = t1.degree();
    let exp = crate::count::exponent_alternating(n);
    let p_sq_divides_exp = exp % (p as u128 * p as u128) == 0;
    for t in [t1, t2] {
        if nu_p(t, p) == 0 && p_sq_divides_exp {
            let (l, m, o) = t.triple_type();
            if [l, m, o].iter().any(|period| period % p == 0) {
                return false;
            }
        }
    }
    true
}

/// Hyperbolicity of a period triple: 1/l + 1/m + 1/n < 1, in exact integer
/// arithmetic.
pub fn is_hyperbolic(l: u128, m: u128, n: u128) -> bool {
    assert!(l >= 1 && m >= 1 && n >= 1);
    m * n + l * n + l * m < l * m * n
}

/// Genus of the quotient curve for a group of the given order acting with
/// three branch points of the given periods: g = 1 + |G|(1 - 1/l - 1/m -
/// 1/n)/2. The Riemann-Hurwitz count 2g - 2 = |G|(1 - sum 1/period) is an
/// exact integer and is checked.
pub fn genus(group_order: &BigUint, periods: (u128, u128, u128)) -> BigInt {
    let (l, m, n) = periods;
    let lmn = BigInt::from(l) * BigInt::from(m) * BigInt::from(n);
    let covolume =
        &lmn - BigInt::from(m * n) - BigInt::from(l * n) - BigInt::from(l * m);
    let numerator = BigInt::from(group_order.clone()) * covolume;
    let denominator = BigInt::from(2u32) * &lmn;
    let (q, r) = num_integer::Integer::div_rem(&numerator, &denominator);
    assert!(
        r == BigInt::from(0),
        "2g - 2 = |G|(1 - 1/l - 1/m - 1/n) must be an exact integer"
    );
    q + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::cycles;

    fn gt(x: &str, y: &str, n: usize) -> GeneratingTriple {
        GeneratingTriple::from_xy(cycles(x, n), cycles(y, n), "test").unwrap()
    }

    #[test]
    fn hyperbolicity() {
        assert!(is_hyperbolic(2, 5, 5));
        assert!(!is_hyperbolic(2, 3, 5));
        assert!(!is_hyperbolic(2, 3, 6));
        assert!(is_hyperbolic(15, 5, 5));
    }

    #[test]
    fn genus_of_a5_squared_type() {
        // |G| = 3600, type (15,5,5): 2g - 2 = 3600 * (1 - 1/15 - 2/5) = 1920.
        let g = genus(&BigUint::from(3600u32), (15, 5, 5));
        assert_eq!(g, BigInt::from(961));
        let doubled = (g - 1) * 2;
        assert_eq!(doubled, BigInt::from(1920));
    }

    #[test]
    fn profiles_and_summits() {
        let g = ProductElement::new(
            5,
            vec![
                cycles("(1,2,3)", 5),
                cycles("(1,2,3,4,5)", 5),
                Permutation::identity(5),
            ],
        )
        .unwrap();
        let pr = profile(&g, 3);
        assert_eq!(pr.exponents, vec![1, 0, 0]);
        assert_eq!(pr.summit, vec![0]);
        let pr = profile(&g, 5);
        assert_eq!(pr.summit, vec![1]);
        let pr = profile(&g, 7);
        assert!(pr.summit.is_empty());
        assert_eq!(g.order(), 15);
    }

    #[test]
    fn nu_and_distinguishing_for_the_a5_pair() {
        let t1 = gt("(1,2)(3,4)", "(1,4,2,3,5)", 5); // type (2,5,5)
        let t2 = gt("(1,2,3)", "(3,4,5)", 5); // type (3,3,5)
        // exp(A5) = 30, so p-full means order divisible by 2, 3, 5.
        assert_eq!(nu_p(&t1, 5), 2);
        assert_eq!(nu_p(&t2, 5), 1);
        assert_eq!(nu_p(&t1, 2), 1);
        assert_eq!(nu_p(&t2, 2), 0);
        assert_eq!(nu_p(&t1, 3), 0);
        assert_eq!(nu_p(&t2, 3), 2);
        for p in [2u64, 3, 5] {
            assert!(is_strongly_p_distinguishing(&t1, &t2, p), "p = {p}");
        }
        assert!(!is_p_distinguishing(&t1, &t1, 5));
    }

    #[test]
    fn product_triple_types() {
        let t1 = gt("(1,2,3,4,5)", "(1,4,5,2,3)", 5); // (5,5,5)
        let t2 = gt("(1,2,4)", "(1,2,3,4,5)", 5); // (3,5,5)
        let pt = ProductTriple::new(5, vec![t1, t2]).unwrap();
        assert_eq!(pt.triple_type(), (15, 5, 5));
        let product = pt
            .a()
            .compose(&pt.b())
            .unwrap()
            .compose(&pt.c())
            .unwrap();
        assert!(product.is_identity());
    }
}
