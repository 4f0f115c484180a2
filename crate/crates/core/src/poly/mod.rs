//! Multivariate polynomials over a [`FieldSpec`].
//!
//! A [`Polynomial`] stores its nonzero terms in a map keyed by exponent
//! vector, independent of any term order. Orders only matter when a leading
//! term is requested or a polynomial is printed; printing uses degrevlex
//! unless told otherwise.

mod monomial;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use self::monomial::{Monomial, MonomialOrder};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldElement, FieldSpec};

struct RingInner {
    field: FieldSpec,
    vars: Vec<String>,
}

/// A polynomial ring `F[x_0, …, x_{n-1}]`: a coefficient field plus an
/// ordered list of variable names.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(field: FieldSpec, vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidVariables(alloc::format!("`{}` is not an identifier", v)));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidVariables(alloc::format!("`{}` appears twice", v)));
            }
        }
        Ok(Ring(Arc::new(RingInner { field, vars })))
    }

    /// `F[X0, …, X{n-1}]`.
    pub fn with_indexed_vars(field: FieldSpec, prefix: &str, n: usize) -> Result<Self> {
        Self::new(field, (0..n).map(|i| alloc::format!("{}{}", prefix, i)))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    /// Constant polynomial from an encoded element.
    pub fn constant(&self, c: Elem) -> Polynomial {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: Elem) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars());
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    /// The variable `x_i`.
    pub fn var(&self, i: usize) -> Polynomial {
        self.term(Monomial::var_power(self.nvars(), i, 1), 1)
    }

    pub fn var_power(&self, i: usize, k: u32) -> Polynomial {
        self.term(Monomial::var_power(self.nvars(), i, k), 1)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(text, self)
    }

    /// A name not used by any variable, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| alloc::format!("{}_{}", base, i))
            .find(|n| self.index_of(n).is_none())
            .unwrap_or_default()
    }

    /// Same field, with `name` inserted at `pos`.
    pub fn with_var_inserted(&self, pos: usize, name: &str) -> Result<Ring> {
        if pos > self.nvars() {
            return Err(Error::VariableIndex {
                index: pos,
                nvars: self.nvars(),
            });
        }
        let mut vars = self.0.vars.clone();
        vars.insert(pos, name.to_string());
        Ring::new(self.0.field.clone(), vars)
    }

    /// Same field, without the first `k` variables.
    pub fn without_first(&self, k: usize) -> Ring {
        Ring(Arc::new(RingInner {
            field: self.0.field.clone(),
            vars: self.0.vars[k.min(self.nvars())..].to_vec(),
        }))
    }

    /// Same field, without the variable at `pos`.
    pub fn without_var(&self, pos: usize) -> Result<Ring> {
        if pos >= self.nvars() {
            return Err(Error::VariableIndex {
                index: pos,
                nvars: self.nvars(),
            });
        }
        let mut vars = self.0.vars.clone();
        vars.remove(pos);
        Ring::new(self.0.field.clone(), vars)
    }

    /// Same variables over another coefficient field.
    pub fn with_field(&self, field: FieldSpec) -> Ring {
        Ring(Arc::new(RingInner {
            field,
            vars: self.0.vars.clone(),
        }))
    }

    pub(crate) fn check(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

/// A polynomial in canonical form: no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Elem>,
}

/// Operation selector for [`poly_arith`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    /// Multiply `f` by a scalar; `g` is ignored apart from the ring check.
    Scale(FieldElement),
}

/// Ring arithmetic with explicit ring checking.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    f.ring.check(&g.ring)?;
    Ok(match op {
        PolyOp::Add => f.add_poly(g),
        PolyOp::Sub => f.sub_poly(g),
        PolyOp::Mul => f.mul_poly(g),
        PolyOp::Scale(c) => {
            if c.field() != f.ring.field() {
                return Err(Error::FieldMismatch);
            }
            f.scale(c.value())
        }
    })
}

/// Parses `text` with the grammar described in the crate README; variables
/// must belong to `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    parse::parse_polynomial(text, ring)
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, &c)| m.is_one() && c == 1)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage (plain lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Elem)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.field().wrap(self.terms.get(m).copied().unwrap_or(0))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms sorted descending by `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, Elem)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, Elem)> {
        self.terms().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Scales so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) if c != 1 => {
                let inv = self.field().inv(c).expect("nonzero leading coefficient");
                self.scale(inv)
            }
            _ => self.clone(),
        }
    }

    pub(crate) fn from_map(ring: Ring, terms: BTreeMap<Monomial, Elem>) -> Polynomial {
        debug_assert!(terms.values().all(|&c| c != 0));
        Polynomial { ring, terms }
    }

    fn accumulate(field: &FieldSpec, terms: &mut BTreeMap<Monomial, Elem>, m: Monomial, c: Elem) {
        if c == 0 {
            return;
        }
        match terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn add_poly(&self, g: &Polynomial) -> Polynomial {
        let (mut big, small) = if self.len() >= g.len() { (self.clone(), g) } else { (g.clone(), self) };
        let field = self.field().clone();
        for (m, &c) in &small.terms {
            Self::accumulate(&field, &mut big.terms, m.clone(), c);
        }
        big
    }

    fn sub_poly(&self, g: &Polynomial) -> Polynomial {
        self.add_poly(&g.neg_poly())
    }

    fn neg_poly(&self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    fn mul_poly(&self, g: &Polynomial) -> Polynomial {
        let field = self.field().clone();
        let mut terms = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &g.terms {
                Self::accumulate(&field, &mut terms, a.mul(b), field.mul(ca, cb));
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Multiplies by an encoded scalar.
    pub fn scale(&self, c: Elem) -> Polynomial {
        if c == 0 {
            return self.ring.zero();
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, &x)| (m.clone(), field.mul(x, c))).collect(),
        }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, m: &Monomial, c: Elem) -> Polynomial {
        if c == 0 {
            return self.ring.zero();
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(x, &d)| (x.mul(m), field.mul(d, c))).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Evaluates at a point whose coordinates live in this polynomial's
    /// field, a subfield of it, or an extension of it.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut big = self.field().clone();
        for x in point {
            big = big.join(x.field()).ok_or(Error::FieldMismatch)?;
        }
        let coords: Vec<Elem> = point.iter().map(FieldElement::value).collect();
        Ok(big.wrap(self.eval_in(&big, &coords)))
    }

    /// Evaluation on encodings in `big`, which must contain both the
    /// coefficient field and the coordinates' field.
    pub(crate) fn eval_in(&self, big: &FieldSpec, coords: &[Elem]) -> Elem {
        let mut acc = 0;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (&x, &e) in coords.iter().zip(m.exps()) {
                if e > 0 {
                    t = big.mul(t, big.pow(x, e as u64));
                    if t == 0 {
                        break;
                    }
                }
            }
            acc = big.add(acc, t);
        }
        acc
    }

    /// Substitutes `args[i]` for the `i`-th variable. The result lives in the
    /// ring of the arguments.
    pub fn compose(&self, args: &[Polynomial]) -> Result<Polynomial> {
        if args.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                got: args.len(),
            });
        }
        match args.first() {
            Some(first) => self.compose_into(&first.ring().clone(), args),
            // a polynomial in zero variables is a constant with no target ring to live in
            None => Err(Error::ArityMismatch { expected: 1, got: 0 }),
        }
    }

    /// [`compose`](Self::compose) with an explicit target ring, which also
    /// covers the case of no arguments.
    pub fn compose_into(&self, target: &Ring, args: &[Polynomial]) -> Result<Polynomial> {
        if args.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                got: args.len(),
            });
        }
        let mut powers: Vec<Vec<Polynomial>> = args.iter().map(|a| vec![target.one(), a.clone()]).collect();
        let mut result = target.zero();
        for (m, &c) in &self.terms {
            let mut t = target.constant(c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_poly(&args[i]);
                    powers[i].push(next);
                }
                t = t.mul_poly(&powers[i][e as usize]);
            }
            result = result.add_poly(&t);
        }
        Ok(result)
    }

    /// Homogeneous components as `(degree, component)`, ascending by degree.
    pub fn homogeneous_components(&self) -> Vec<(u32, Polynomial)> {
        let mut by_degree: BTreeMap<u32, BTreeMap<Monomial, Elem>> = BTreeMap::new();
        for (m, &c) in &self.terms {
            by_degree.entry(m.degree()).or_default().insert(m.clone(), c);
        }
        by_degree
            .into_iter()
            .map(|(d, terms)| (d, Polynomial::from_map(self.ring.clone(), terms)))
            .collect()
    }

    /// True iff at most one homogeneous component is nonzero.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Homogenizes with a new variable `name` inserted at `pos`.
    pub fn homogenize(&self, pos: usize, name: &str) -> Result<Polynomial> {
        let ring = self.ring.with_var_inserted(pos, name)?;
        let deg = self.total_degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mut exps = m.exps().to_vec();
                exps.insert(pos, deg - m.degree());
                (Monomial::new(exps), c)
            })
            .collect();
        Ok(Polynomial::from_map(ring, terms))
    }

    /// Sets the variable at `pos` to 1 and drops it from the ring.
    pub fn dehomogenize(&self, pos: usize) -> Result<Polynomial> {
        self.dehomogenize_at(pos, &self.field().one())
    }

    /// Sets the variable at `pos` to `value` and drops it from the ring.
    pub fn dehomogenize_at(&self, pos: usize, value: &FieldElement) -> Result<Polynomial> {
        if value.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let ring = self.ring.without_var(pos)?;
        let field = self.field().clone();
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut exps = m.exps().to_vec();
            let e = exps.remove(pos);
            let c = field.mul(c, field.pow(value.value(), e as u64));
            Self::accumulate(&field, &mut terms, Monomial::new(exps), c);
        }
        Ok(Polynomial::from_map(ring, terms))
    }

    /// Moves the polynomial into `target`. Variable `i` becomes target
    /// variable `var_map[i]`; variables mapped to `None` must not occur.
    /// Coefficients are embedded into a larger target field, or restricted
    /// to a smaller one when they all lie in it.
    pub fn transfer(&self, target: &Ring, var_map: &[Option<usize>]) -> Result<Polynomial> {
        if var_map.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                got: var_map.len(),
            });
        }
        let (src, dst) = (self.field(), target.field());
        if !(dst.contains(src) || src.contains(dst)) {
            return Err(Error::FieldMismatch);
        }
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            if !src.lies_in(c, dst) {
                return Err(Error::MixedCoefficients(dst.order()));
            }
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                match var_map[i] {
                    Some(j) if j < target.nvars() => exps[j] += e,
                    Some(j) => {
                        return Err(Error::VariableIndex {
                            index: j,
                            nvars: target.nvars(),
                        })
                    }
                    None if e == 0 => {}
                    None => return Err(Error::RingMismatch),
                }
            }
            Self::accumulate(dst, &mut terms, Monomial::new(exps), c);
        }
        Ok(Polynomial::from_map(target.clone(), terms))
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let order = MonomialOrder::DegRevLex;
        let (glm, glc) = g.leading_term(order)?;
        let (glm, ginv) = (glm.clone(), self.field().inv(glc).ok()?);
        let field = self.field().clone();
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.leading_term(order) {
            let shift = m.div(&glm)?;
            let coef = field.mul(c, ginv);
            rem = rem.sub_poly(&g.mul_term(&shift, coef));
            quot.insert(shift, coef);
        }
        Some(Polynomial::from_map(self.ring.clone(), quot))
    }

    /// Whether every coefficient lies in the subfield `sub`.
    pub fn coefficients_in(&self, sub: &FieldSpec) -> bool {
        self.terms.values().all(|&c| self.field().lies_in(c, sub))
    }

    /// Printable form with terms sorted by `order`.
    pub fn display_in(&self, order: MonomialOrder) -> impl fmt::Display + '_ {
        DisplayIn { poly: self, order }
    }

    fn write_term(&self, out: &mut String, m: &Monomial, c: Elem) {
        let field = self.field();
        let vars = self.ring.var_names();
        let is_prime_coef = field.is_prime_field() || c < field.characteristic();
        let mut factors: Vec<String> = Vec::new();
        if m.is_one() || c != 1 {
            let mut s = String::new();
            if is_prime_coef {
                field.write_elem(&mut s, c);
            } else {
                s.push('(');
                field.write_elem(&mut s, c);
                s.push(')');
            }
            factors.push(s);
        }
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[i].clone()),
                e => factors.push(alloc::format!("{}^{}", vars[i], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
}

struct DisplayIn<'a> {
    poly: &'a Polynomial,
    order: MonomialOrder,
}

impl fmt::Display for DisplayIn<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.poly.sorted_terms(self.order).into_iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            self.poly.write_term(&mut out, m, c);
        }
        f.write_str(&out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in(MonomialOrder::DegRevLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                assert!(self.ring == rhs.ring, "polynomial ring mismatch");
                self.$inner(rhs)
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_poly);
binop!(Sub, sub, sub_poly);
binop!(Mul, mul, mul_poly);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.neg_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::format;
    use std::vec::Vec;

    fn ring(p: u32, vars: &[&str]) -> Ring {
        Ring::new(FieldSpec::prime(p).unwrap(), vars.iter().copied()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = ring(2, &["X0", "X1"]);
        let f = r.parse("X0^2*X1 + X1^2*X0").unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.is_homogeneous());
        assert_eq!(format!("{}", f), "X0^2*X1 + X0*X1^2");
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse("X0 - X0").unwrap().is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(2, &["X0", "X1"]);
        let s = r.parse("X0 + X1").unwrap();
        assert_eq!(&s * &s, r.parse("X0^2 + X1^2").unwrap());
        assert_eq!(&s + &r.zero(), s);

        let r3 = ring(3, &["X0"]);
        let prod = &r3.parse("X0 + 1").unwrap() * &r3.parse("X0 + 2").unwrap();
        assert_eq!(prod, r3.parse("X0^2 + 2").unwrap());
        // the same product checked pointwise
        let f3 = r3.field().clone();
        for a in f3.elements() {
            let lhs = prod.evaluate(core::slice::from_ref(&a)).unwrap();
            let rhs = a.add(&f3.one()).unwrap().mul(&a.add(&f3.from_int(2)).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn poly_arith_checks_rings() {
        let a = ring(2, &["X0"]).parse("X0").unwrap();
        let b = ring(2, &["Y0"]).parse("Y0").unwrap();
        assert_eq!(poly_arith(&a, &b, PolyOp::Add), Err(Error::RingMismatch));
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(poly_arith(&a, &a, PolyOp::Scale(f3.one())), Err(Error::FieldMismatch));
        let two_a = poly_arith(&a, &a, PolyOp::Add).unwrap();
        assert!(two_a.is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let r = ring(2, &["X1"]);
        let f = r.parse("X1^2 - X1").unwrap();
        for a in r.field().elements() {
            assert!(f.evaluate(&[a]).unwrap().is_zero());
        }
        let f3 = FieldSpec::prime(3).unwrap();
        let r3 = Ring::new(f3.clone(), ["X0", "X1"]).unwrap();
        let one = r3.one();
        let pt = [f3.from_int(2), f3.from_int(2)];
        assert!(one.evaluate(&pt).unwrap().is_one());
        assert!(r3.parse("X0*X1").unwrap().evaluate(&pt).unwrap().is_one());
        assert_eq!(
            one.evaluate(&[f3.one()]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(one.evaluate(&[f5.one(), f5.one()]), Err(Error::FieldMismatch));
    }

    #[test]
    fn evaluate_in_extension() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let r = Ring::new(f2, ["X"]).unwrap();
        let f = r.parse("X^2 + X + 1").unwrap();
        // t is a root of the default modulus of GF(4)
        assert!(f.evaluate(&[f4.generator()]).unwrap().is_zero());
        assert_eq!(f.evaluate(&[f4.one()]).unwrap(), f4.one());
    }

    #[test]
    fn compose_examples() {
        let y = ring(2, &["y0", "y1"]);
        let x = ring(2, &["X1", "X2"]);
        let p = y.parse("y0^2 + y0*y1 + y1^2").unwrap();
        let got = p.compose(&[x.var(0), x.var(1)]).unwrap();
        assert_eq!(got, x.parse("X1^2 + X1*X2 + X2^2").unwrap());

        let y0 = ring(2, &["y0"]);
        let f = x.parse("X1 + X2^2").unwrap();
        assert_eq!(y0.var(0).compose(core::slice::from_ref(&f)).unwrap(), f);

        let p = y.parse("y0*y1").unwrap();
        assert!(p.compose(&[x.var(0), x.zero()]).unwrap().is_zero());
        assert_eq!(p.compose(&[x.var(0)]), Err(Error::ArityMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring(2, &["X0", "X1"]);
        let g = r.parse("X0^2*X1 - X1^2*X0").unwrap();
        let comps = g.homogeneous_components();
        assert!(g.is_homogeneous());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0, 3);

        let r1 = ring(3, &["X1"]);
        let f = r1.parse("X1^2 - X1").unwrap();
        assert!(!f.is_homogeneous());
        let comps = f.homogeneous_components();
        assert_eq!(comps, [(1, r1.parse("-X1").unwrap()), (2, r1.parse("X1^2").unwrap())]);

        assert!(r.zero().is_homogeneous());
        assert!(r.zero().homogeneous_components().is_empty());
    }

    #[test]
    fn homogenize_examples() {
        let r = ring(3, &["X1"]);
        let f = r.parse("X1^2 - X1").unwrap();
        let h = f.homogenize(0, "X0").unwrap();
        assert_eq!(h.ring().var_names(), ["X0", "X1"]);
        assert_eq!(h, h.ring().parse("X1^2 - X0*X1").unwrap());
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(0).unwrap(), f);

        let g = r.parse("2*X1^3").unwrap();
        let hg = g.homogenize(0, "X0").unwrap();
        assert_eq!(hg, hg.ring().parse("2*X1^3").unwrap());
    }

    #[test]
    fn display_forms() {
        let r = ring(3, &["X0", "X1"]);
        let f = r.parse("-X0 + 1 - X1^2").unwrap();
        assert_eq!(format!("{}", f), "2*X1^2 + 2*X0 + 1");
        assert_eq!(format!("{}", f.display_in(MonomialOrder::Lex)), "2*X0 + 2*X1^2 + 1");
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let r4 = Ring::new(f4, ["X0", "X1"]).unwrap();
        let g = r4.parse("(t+1)*X0^2*X1 + (t) + X1").unwrap();
        assert_eq!(format!("{}", g), "(t+1)*X0^2*X1 + X1 + (t)");
        assert_eq!(r4.parse(&format!("{}", g)).unwrap(), g);
    }

    #[test]
    fn exact_division() {
        let r = ring(2, &["X0", "X1"]);
        let g = r.parse("X0 + X1").unwrap();
        let h = r.parse("X0^2*X1 + X0*X1^2").unwrap();
        assert_eq!(h.div_exact(&g), Some(r.parse("X0*X1").unwrap()));
        assert_eq!(r.parse("X0^2 + X1").unwrap().div_exact(&g), None);
        assert_eq!(r.zero().div_exact(&g), Some(r.zero()));
    }

    #[test]
    fn transfer_between_rings() {
        let r = ring(2, &["X0", "X1"]);
        let big = Ring::new(r.field().clone(), ["T", "X0", "X1"]).unwrap();
        let f = r.parse("X0*X1 + 1").unwrap();
        let lifted = f.transfer(&big, &[Some(1), Some(2)]).unwrap();
        assert_eq!(lifted, big.parse("X0*X1 + 1").unwrap());
        let back = lifted.transfer(&r, &[None, Some(0), Some(1)]).unwrap();
        assert_eq!(back, f);
        assert_eq!(big.var(0).transfer(&r, &[None, Some(0), Some(1)]), Err(Error::RingMismatch));

        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let r4 = r.with_field(f4);
        let up = f.transfer(&r4, &[Some(0), Some(1)]).unwrap();
        assert_eq!(up.transfer(&r, &[Some(0), Some(1)]).unwrap(), f);
        let t = r4.parse("(t)*X0").unwrap();
        assert_eq!(t.transfer(&r, &[Some(0), Some(1)]), Err(Error::MixedCoefficients(2)));
    }

    #[test]
    fn ring_validation() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(Ring::new(f2.clone(), ["X0", "X0"]), Err(Error::InvalidVariables(_))));
        assert!(matches!(Ring::new(f2.clone(), ["1X"]), Err(Error::InvalidVariables(_))));
        let r = Ring::new(f2, ["T", "X"]).unwrap();
        assert_eq!(r.fresh_name("T"), "T_1");
        assert_eq!(r.fresh_name("U"), "U");
        let names: Vec<_> = r.without_first(1).var_names().to_vec();
        assert_eq!(names, ["X"]);
    }
}
