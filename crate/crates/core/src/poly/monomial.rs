use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Exponent vector of a monomial; its length is the ambient variable count.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors,
/// used only for canonical storage. Term orders go through [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    /// `x_i^k` in `nvars` variables.
    pub fn var_power(nvars: usize, i: usize, k: u32) -> Self {
        let mut exps = alloc::vec![0; nvars];
        exps[i] = k;
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A term order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Eliminates the first `k` variables: compares the first `k` exponents
    /// by degrevlex, and only on a tie the remaining ones by degrevlex.
    Block(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Block(k) => {
                let k = k.min(a.0.len());
                degrevlex(&a.0[..k], &b.0[..k]).then_with(|| degrevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }

    pub fn name(&self) -> alloc::string::String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Block(k) => alloc::format!("block({})", k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x^2 y > x y^2 > ... standard textbook comparisons
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 3])), Ordering::Less);
        // x y z^2? deg 4: x^2 y z vs x y^3 -> last var z: 1 vs 0 => x y^3 larger
        assert_eq!(o.cmp(&m(&[2, 1, 1]), &m(&[1, 3, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[0, 0])), Ordering::Equal);
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let b = MonomialOrder::Block(1);
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        let mut monos = vec![];
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    monos.push(m(&[a, b, c]));
                }
            }
        }
        for o in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::Block(1), MonomialOrder::Block(2)] {
            for x in &monos {
                assert!(o.cmp(x, &m(&[0, 0, 0])) != Ordering::Less);
                for y in &monos {
                    assert_eq!(o.cmp(x, y), o.cmp(y, x).reverse());
                    assert_eq!(o.cmp(x, y) == Ordering::Equal, x == y);
                    for z in &monos {
                        assert_eq!(o.cmp(x, y), o.cmp(&x.mul(z), &y.mul(z)));
                    }
                }
            }
        }
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[1, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 3])));
    }
}
