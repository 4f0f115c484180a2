//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! Pairs are processed with the normal strategy (smallest lcm degree first,
//! ties broken by the term order on the lcm, then by pair index) and pruned
//! with the coprime-leading-monomial criterion only. Every new basis element
//! is made monic, and the final basis is minimized, fully interreduced and
//! sorted ascending by leading monomial, so the output is the unique reduced
//! basis of the ideal for the order.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Largest total degree any intermediate polynomial may reach.
pub const MAX_DEGREE: u32 = 64;
/// Largest number of elements the working basis may reach.
pub const MAX_BASIS: usize = 4096;

/// A polynomial as a term list sorted descending by the active order.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Elem)>,
    max_degree: u32,
}

impl Sorted {
    fn from_poly(f: &Polynomial, order: MonomialOrder) -> Self {
        let terms: Vec<(Monomial, Elem)> = f.sorted_terms(order).into_iter().map(|(m, c)| (m.clone(), c)).collect();
        Self::from_terms(terms)
    }

    fn from_terms(terms: Vec<(Monomial, Elem)>) -> Self {
        let max_degree = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        Sorted { terms, max_degree }
    }

    fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_map(ring.clone(), self.terms.iter().cloned().collect())
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> Elem {
        self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn monic(mut self, field: &FieldSpec) -> Self {
        if let Some(&(_, c)) = self.terms.first() {
            if c != 1 {
                let inv = field.inv(c).expect("leading coefficient is nonzero");
                for t in &mut self.terms {
                    t.1 = field.mul(t.1, inv);
                }
            }
        }
        self
    }
}

/// `f - c·m·g` for term lists sorted by `order`.
fn sub_scaled(
    f: &[(Monomial, Elem)],
    c: Elem,
    m: &Monomial,
    g: &[(Monomial, Elem)],
    order: MonomialOrder,
    field: &FieldSpec,
) -> Vec<(Monomial, Elem)> {
    let neg_c = field.neg(c);
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut fi = f.iter().peekable();
    let mut gi = g.iter().map(|(x, d)| (x.mul(m), field.mul(*d, neg_c))).peekable();
    loop {
        let ord = match (fi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
        };
        match ord {
            Ordering::Greater => out.push(fi.next().unwrap().clone()),
            Ordering::Less => out.push(gi.next().unwrap()),
            Ordering::Equal => {
                let (mono, a) = fi.next().unwrap().clone();
                let (_, b) = gi.next().unwrap();
                let s = field.add(a, b);
                if s != 0 {
                    out.push((mono, s));
                }
            }
        }
    }
    out
}

struct Ctx<'a> {
    order: MonomialOrder,
    field: &'a FieldSpec,
}

impl Ctx<'_> {
    /// Full reduction: the largest reducible term is eliminated first, each
    /// time with the first reducer in `basis` whose leading monomial divides it.
    fn reduce(&self, f: Sorted, basis: &[Sorted]) -> Result<Sorted> {
        let mut rest = f.terms;
        let mut start = 0;
        let mut remainder: Vec<(Monomial, Elem)> = Vec::new();
        while start < rest.len() {
            let (lm, lc) = (&rest[start].0, rest[start].1);
            let reducer = basis.iter().find(|g| !g.is_zero() && g.lm().divides(lm));
            match reducer {
                None => {
                    remainder.push(rest[start].clone());
                    start += 1;
                }
                Some(g) => {
                    let shift = lm.div(g.lm()).expect("divisibility was checked");
                    if shift.degree() + g.max_degree > MAX_DEGREE {
                        return Err(Error::DegreeOverflow("intermediate degree above 64"));
                    }
                    let c = self.field.div(lc, g.lc())?;
                    rest = sub_scaled(&rest[start..], c, &shift, &g.terms, self.order, self.field);
                    start = 0;
                }
            }
        }
        Ok(Sorted::from_terms(remainder))
    }

    fn s_polynomial(&self, f: &Sorted, g: &Sorted) -> Result<Sorted> {
        let lcm = f.lm().lcm(g.lm());
        let mf = lcm.div(f.lm()).expect("lcm is a multiple");
        let mg = lcm.div(g.lm()).expect("lcm is a multiple");
        if mf.degree() + f.max_degree > MAX_DEGREE || mg.degree() + g.max_degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow("S-polynomial degree above 64"));
        }
        // both monic: S = mf·f − mg·g, with the leading terms cancelling
        let scaled_f: Vec<_> = f.terms.iter().map(|(m, c)| (m.mul(&mf), *c)).collect();
        let c = self.field.div(f.lc(), g.lc())?;
        let terms = sub_scaled(&scaled_f, c, &mg, &g.terms, self.order, self.field);
        Ok(Sorted::from_terms(terms))
    }
}

/// Lexicographic sort key realizing `order` on monomials.
fn order_key(m: &Monomial, order: MonomialOrder) -> Vec<i64> {
    let e = m.exps();
    let revlex = |block: &[u32], key: &mut Vec<i64>| {
        key.push(block.iter().map(|&x| x as i64).sum());
        key.extend(block.iter().rev().map(|&x| -(x as i64)));
    };
    let mut key = Vec::with_capacity(e.len() + 2);
    match order {
        MonomialOrder::Lex => key.extend(e.iter().map(|&x| x as i64)),
        MonomialOrder::DegRevLex => revlex(e, &mut key),
        MonomialOrder::Block(k) => {
            let k = k.min(e.len());
            revlex(&e[..k], &mut key);
            revlex(&e[k..], &mut key);
        }
    }
    key
}

type PairKey = Reverse<(u32, Vec<i64>, usize, usize)>;

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial under [`order`](Self::order).
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
    sorted: Vec<Sorted>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.gens == other.gens
    }
}

impl Eq for GroebnerBasis {}

impl core::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list()
            .entries(self.gens.iter().map(|g| alloc::format!("{}", g.display_in(self.order))))
            .finish()
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// True for the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.sorted.iter().map(Sorted::lm)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check(f.ring())?;
        let ctx = Ctx {
            order: self.order,
            field: self.ring.field(),
        };
        let r = ctx.reduce(Sorted::from_poly(f, self.order), &self.sorted)?;
        Ok(r.to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Wraps generators that are already a reduced basis for `order`.
    pub(crate) fn from_reduced(ring: &Ring, order: MonomialOrder, gens: Vec<Polynomial>) -> GroebnerBasis {
        let mut sorted: Vec<Sorted> = gens.iter().map(|g| Sorted::from_poly(g, order)).collect();
        sorted.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        let gens = sorted.iter().map(|s| s.to_poly(ring)).collect();
        GroebnerBasis {
            ring: ring.clone(),
            order,
            gens,
            sorted,
        }
    }
}

/// Reduces `f` modulo `basis`, trying reducers in the basis' sorted order and
/// eliminating the largest reducible monomial first.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

/// The reduced Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check(g.ring())?;
    }
    let field = ring.field();
    let ctx = Ctx { order, field };
    let unit = || GroebnerBasis::from_reduced(ring, order, alloc::vec![ring.one()]);

    let mut basis: Vec<Sorted> = Vec::new();
    let mut pairs: BinaryHeap<PairKey> = BinaryHeap::new();

    let add = |h: Sorted, basis: &mut Vec<Sorted>, pairs: &mut BinaryHeap<PairKey>| -> Result<()> {
        let j = basis.len();
        if j >= MAX_BASIS {
            return Err(Error::DegreeOverflow("basis larger than 4096 elements"));
        }
        for (i, g) in basis.iter().enumerate() {
            if g.lm().is_coprime(h.lm()) {
                continue;
            }
            let lcm = g.lm().lcm(h.lm());
            pairs.push(Reverse((lcm.degree(), order_key(&lcm, order), i, j)));
        }
        basis.push(h);
        Ok(())
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.total_degree().unwrap_or(0) > MAX_DEGREE {
            return Err(Error::DegreeOverflow("generator degree above 64"));
        }
        let h = ctx.reduce(Sorted::from_poly(g, order), &basis)?;
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit());
        }
        add(h.monic(field), &mut basis, &mut pairs)?;
    }

    while let Some(Reverse((_, _, i, j))) = pairs.pop() {
        let s = ctx.s_polynomial(&basis[i], &basis[j])?;
        let h = ctx.reduce(s, &basis)?;
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit());
        }
        add(h.monic(field), &mut basis, &mut pairs)?;
    }

    // minimize: drop elements whose leading monomial is a multiple of another's
    let mut keep: Vec<Sorted> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, other)| {
            k != i && other.lm().divides(g.lm()) && (other.lm() != g.lm() || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    // interreduce tails; leading terms are untouched since the set is minimal
    let mut reduced: Vec<Sorted> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let head = keep[i].terms[0].clone();
        let others: Vec<Sorted> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, s)| s.clone())
            .collect();
        let tail = ctx.reduce(Sorted::from_terms(keep[i].terms[1..].to_vec()), &others)?;
        let mut terms = alloc::vec![head];
        terms.extend(tail.terms);
        reduced.push(Sorted::from_terms(terms).monic(field));
    }
    let gens = reduced.iter().map(|s| s.to_poly(ring)).collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order,
        gens,
        sorted: reduced,
    })
}

/// Whether `f` lies in the ideal generated by `gens` (degrevlex basis).
pub fn ideal_membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    buchberger(f.ring(), gens, MonomialOrder::DegRevLex)?.contains(f)
}

/// Whether two generator lists span the same ideal of `ring`.
pub fn ideal_equal(ring: &Ring, a: &[Polynomial], b: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    Ok(buchberger(ring, a, order)? == buchberger(ring, b, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use std::vec;
    use std::vec::Vec;

    fn ring(p: u32, vars: &[&str]) -> Ring {
        Ring::new(FieldSpec::prime(p).unwrap(), vars.iter().copied()).unwrap()
    }

    fn polys(r: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2, &["X1"]);
        let g = buchberger(&r, &polys(&r, &["X1^2 - X1"]), MonomialOrder::DegRevLex).unwrap();
        // X1^3 - X1 = (X1 + 1)(X1^2 - X1)
        let f = r.parse("X1^3 - X1").unwrap();
        assert_eq!(&r.parse("X1 + 1").unwrap() * &r.parse("X1^2 - X1").unwrap(), f);
        assert!(g.normal_form(&f).unwrap().is_zero());
        assert_eq!(g.normal_form(&r.one()).unwrap(), r.one());
        assert!(g.normal_form(&g.generators()[0]).unwrap().is_zero());
        let other = ring(2, &["Y"]);
        assert_eq!(g.normal_form(&other.one()), Err(Error::RingMismatch));
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(2, &["X0", "X1"]);
        let g = buchberger(&r, &polys(&r, &["X0", "X0^2*X1 - X1^2*X0"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(g.generators(), polys(&r, &["X0"]).as_slice());
        let unit = buchberger(&r, &polys(&r, &["1"]), MonomialOrder::DegRevLex).unwrap();
        assert!(unit.is_unit());
        let zero = buchberger(&r, &[], MonomialOrder::DegRevLex).unwrap();
        assert!(zero.is_empty());
        let zero2 = buchberger(&r, &[r.zero()], MonomialOrder::Lex).unwrap();
        assert!(zero2.is_empty());
    }

    #[test]
    fn textbook_basis() {
        // x^2 - y, x^3 - x over GF(7) lex (x > y): basis {y^2 - y, x*y - x, x^2 - y}
        let r = ring(7, &["x", "y"]);
        let g = buchberger(&r, &polys(&r, &["x^3 - x", "x^2 - y"]), MonomialOrder::Lex).unwrap();
        let expect = polys(&r, &["y^2 - y", "x*y - x", "x^2 - y"]);
        assert_eq!(g.generators(), expect.as_slice());
    }

    #[test]
    fn membership_examples() {
        let r = ring(2, &["X1", "X2"]);
        let gens = polys(&r, &["X1", "X2^2 - X2"]);
        assert!(ideal_membership(&r.parse("X2^2 - X2").unwrap(), &gens).unwrap());
        assert!(!ideal_membership(&r.parse("X2").unwrap(), &gens).unwrap());
        assert!(ideal_membership(&r.zero(), &gens).unwrap());
        assert!(ideal_membership(&r.zero(), &[]).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = ring(2, &["X0", "X1"]);
        let o = MonomialOrder::DegRevLex;
        assert!(ideal_equal(&r, &polys(&r, &["X0", "X0*X1"]), &polys(&r, &["X0"]), o).unwrap());
        assert!(!ideal_equal(&r, &polys(&r, &["X0"]), &polys(&r, &["X1"]), o).unwrap());
        let prod = &(&r.var(0) * &r.var(1)) * &r.parse("X0 + X1").unwrap();
        assert!(ideal_equal(&r, &[prod], &polys(&r, &["X0^2*X1 - X0*X1^2"]), o).unwrap());
    }

    #[test]
    fn reduced_basis_is_interreduced_and_monic() {
        let r = ring(3, &["x", "y", "z"]);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::Block(1)] {
            let g = buchberger(&r, &polys(&r, &["x^2*y + 2*z", "x*y^2 - x", "y*z^2 + x*z"]), order).unwrap();
            let lms: Vec<&Monomial> = g.leading_monomials().collect();
            for (i, p) in g.generators().iter().enumerate() {
                assert_eq!(p.leading_term(order).unwrap().1, 1);
                for (m, _) in p.terms() {
                    for (k, lm) in lms.iter().enumerate() {
                        assert!(k == i || !lm.divides(m));
                    }
                }
            }
            for w in lms.windows(2) {
                assert_eq!(order.cmp(w[0], w[1]), Ordering::Less);
            }
        }
    }

    #[test]
    fn s_polynomials_reduce_to_zero() {
        let r = ring(5, &["a", "b", "c"]);
        let g = buchberger(&r, &polys(&r, &["a*b - c^2", "b^2*c + a", "a^2 - 2*b*c"]), MonomialOrder::DegRevLex)
            .unwrap();
        let ctx = Ctx {
            order: g.order,
            field: r.field(),
        };
        for i in 0..g.sorted.len() {
            for j in i + 1..g.sorted.len() {
                let s = ctx.s_polynomial(&g.sorted[i], &g.sorted[j]).unwrap();
                assert!(ctx.reduce(s, &g.sorted).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn degree_guard() {
        let r = ring(2, &["x"]);
        let big = r.var_power(0, 65);
        assert!(matches!(
            buchberger(&r, &[big], MonomialOrder::DegRevLex),
            Err(Error::DegreeOverflow(_))
        ));
    }

    #[test]
    fn order_keys_match_orders() {
        let mut monos = vec![];
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    monos.push(Monomial::new(vec![a, b, c]));
                }
            }
        }
        for o in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::Block(1), MonomialOrder::Block(2)] {
            for x in &monos {
                for y in &monos {
                    assert_eq!(order_key(x, o).cmp(&order_key(y, o)), o.cmp(x, y));
                }
            }
        }
    }
}
