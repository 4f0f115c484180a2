//! Finite fields GF(p^e).
//!
//! An element is stored as its canonical encoding: the coefficient vector
//! `(c_0, …, c_{e-1})` of its representative polynomial in the generator `t`
//! read as the base-`p` number `c_0 + c_1 p + … + c_{e-1} p^{e-1}`. Two
//! elements are equal iff their encodings are equal, and the elements of the
//! prime subfield encode as `0..p`, so embedding GF(p) into GF(p^e) is the
//! identity on encodings.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Encoded field element, always `< q` for its field.
pub type Elem = u32;

const MAX_DEGREE: u32 = 8;
const MAX_ORDER: u64 = 1 << 31;
const TABLE_LIMIT: u32 = 1 << 16;

/// Built-in moduli, low coefficient first.
fn default_modulus(p: u32, e: u32) -> Option<&'static [u32]> {
    match (p, e) {
        (2, 2) => Some(&[1, 1, 1]),
        (2, 3) => Some(&[1, 1, 0, 1]),
        (3, 2) => Some(&[1, 0, 1]),
        (2, 4) => Some(&[1, 1, 0, 0, 1]),
        _ => None,
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic, `e + 1` coefficients, low first. Empty for prime fields.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a primitive `g`, doubled so log sums need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The field GF(p^e), cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.e)
        }
    }
}

impl FieldSpec {
    /// Builds GF(p^e). For `e > 1` the modulus is the monic irreducible
    /// polynomial defining the extension, coefficients low first (length
    /// `e + 1`); when absent a built-in default is used for GF(4), GF(8),
    /// GF(9) and GF(16).
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1"));
        }
        if e > MAX_DEGREE || (p as u64).checked_pow(e).map_or(true, |q| q > MAX_ORDER) {
            return Err(Error::FieldTooLarge { p, e });
        }
        let q = p.pow(e);
        if e == 1 {
            if modulus.is_some() {
                return Err(Error::InvalidModulus("prime fields take no modulus"));
            }
            return Ok(FieldSpec(Arc::new(Inner {
                p,
                e,
                q,
                modulus: Vec::new(),
                exp: Vec::new(),
                log: Vec::new(),
            })));
        }
        let modulus = match modulus {
            Some(m) => m.to_vec(),
            None => default_modulus(p, e)
                .ok_or(Error::NoDefaultModulus { p, e })?
                .to_vec(),
        };
        if modulus.len() != e as usize + 1 {
            return Err(Error::InvalidModulus("modulus must have degree equal to the extension degree"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("modulus coefficients must lie in [0, p)"));
        }
        if modulus[e as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic"));
        }
        if let Some(factor_degree) = smallest_factor_degree(p, &modulus) {
            return Err(Error::ReducibleModulus { p, factor_degree });
        }
        let mut inner = Inner {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            build_tables(&mut inner);
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    /// GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// The field with `q` elements and the default modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        let p = (2..=q).find(|d| q % d == 0).ok_or(Error::NotPrime(q))?;
        let (mut rest, mut e) = (q, 0);
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrime(q));
        }
        Self::new(p, e, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    /// The cardinality q = p^e.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        if self.0.e == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.e == 1
    }

    /// Whether the modulus differs from the built-in default.
    pub fn has_custom_modulus(&self) -> bool {
        self.0.e > 1 && default_modulus(self.0.p, self.0.e) != Some(&self.0.modulus[..])
    }

    /// Input-file literal: `GF(p)`, `GF(p^e)` or `GF(p^e; m=<poly in t>)`.
    pub fn literal(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.has_custom_modulus() {
            let _ = write!(s, "GF({}^{}; m=", self.0.p, self.0.e);
            write_t_poly(&mut s, &self.0.modulus);
            s.push(')');
        } else {
            let _ = write!(s, "{}", self);
        }
        s
    }

    /// Whether `sub` is a subfield of `self` in a supported tower: the same
    /// field, or the prime field of the same characteristic.
    pub fn contains(&self, sub: &FieldSpec) -> bool {
        self == sub || (sub.is_prime_field() && sub.0.p == self.0.p)
    }

    /// The larger of two fields when one contains the other.
    pub fn join(&self, other: &FieldSpec) -> Option<FieldSpec> {
        if self.contains(other) {
            Some(self.clone())
        } else if other.contains(self) {
            Some(other.clone())
        } else {
            None
        }
    }

    /// Whether an encoded element of `self` lies in the subfield `sub`.
    pub fn lies_in(&self, x: Elem, sub: &FieldSpec) -> bool {
        sub.contains(self) || (self.contains(sub) && x < sub.0.q)
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// The generator `t` of an extension (or 1 for prime fields, where
    /// there is nothing to generate).
    pub fn generator(&self) -> FieldElement {
        if self.0.e == 1 {
            self.one()
        } else {
            self.wrap(self.0.p)
        }
    }

    /// Element from its coefficient vector in `t`, low first.
    pub fn element(&self, rep: &[u32]) -> Result<FieldElement> {
        if rep.len() != self.0.e as usize || rep.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidElement);
        }
        Ok(self.wrap(self.encode(rep)))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.wrap(self.int(n))
    }

    /// Element from its encoding.
    pub fn from_encoding(&self, x: Elem) -> Result<FieldElement> {
        if x >= self.0.q {
            return Err(Error::InvalidElement);
        }
        Ok(self.wrap(x))
    }

    pub(crate) fn wrap(&self, value: Elem) -> FieldElement {
        debug_assert!(value < self.0.q);
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    /// All q elements, zero first, in increasing encoding order (which is
    /// lexicographic order of the representation read from `t^{e-1}` down).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |x| self.wrap(x))
    }

    /// Reduces an arbitrary coefficient vector in `t` (low first) modulo the
    /// defining polynomial.
    pub fn reduce_t_poly(&self, coeffs: &[i64]) -> Elem {
        let p = self.0.p as i64;
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x.rem_euclid(p) as u32).collect();
        let e = self.0.e as usize;
        if e == 1 {
            return c.first().copied().unwrap_or(0);
        }
        self.reduce_digits(&mut c);
        c.resize(e, 0);
        self.encode(&c[..e])
    }

    // ---- raw arithmetic on encodings ----

    pub(crate) fn int(&self, n: i64) -> Elem {
        n.rem_euclid(self.0.p as i64) as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if self.0.e == 1 {
            let s = a as u64 + b as u64;
            (s % p as u64) as Elem
        } else if p == 2 {
            a ^ b
        } else {
            let (da, db) = (self.digits(a), self.digits(b));
            let mut out = [0u32; MAX_DEGREE as usize];
            for i in 0..self.0.e as usize {
                out[i] = (da[i] + db[i]) % p;
            }
            self.encode(&out[..self.0.e as usize])
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if self.0.e == 1 {
            if a == 0 {
                0
            } else {
                p - a
            }
        } else if p == 2 {
            a
        } else {
            let da = self.digits(a);
            let mut out = [0u32; MAX_DEGREE as usize];
            for i in 0..self.0.e as usize {
                out[i] = (p - da[i]) % p;
            }
            self.encode(&out[..self.0.e as usize])
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.0.e == 1 {
            return ((a as u64 * b as u64) % self.0.p as u64) as Elem;
        }
        if !self.0.log.is_empty() {
            let i = self.0.log[a as usize] + self.0.log[b as usize];
            return self.0.exp[i as usize];
        }
        self.mul_schoolbook(a, b)
    }

    pub fn pow(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if !self.0.log.is_empty() {
            let n = self.0.q - 1;
            return Ok(self.0.exp[((n - self.0.log[a as usize]) % n) as usize]);
        }
        Ok(self.pow(a, self.0.q as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn digits(&self, mut a: Elem) -> [u32; MAX_DEGREE as usize] {
        let mut out = [0u32; MAX_DEGREE as usize];
        for d in out.iter_mut().take(self.0.e as usize) {
            *d = a % self.0.p;
            a /= self.0.p;
        }
        out
    }

    fn encode(&self, digits: &[u32]) -> Elem {
        digits.iter().rev().fold(0u32, |acc, &d| acc * self.0.p + d)
    }

    fn reduce_digits(&self, c: &mut Vec<u32>) {
        reduce_mod(self.0.p, &self.0.modulus, c);
    }

    fn mul_schoolbook(&self, a: Elem, b: Elem) -> Elem {
        let e = self.0.e as usize;
        let p = self.0.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * e - 1];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                let v = prod[i + j] as u64 + da[i] as u64 * db[j] as u64;
                prod[i + j] = (v % p) as u32;
            }
        }
        self.reduce_digits(&mut prod);
        prod.resize(e, 0);
        self.encode(&prod)
    }

    pub(crate) fn write_elem(&self, out: &mut String, x: Elem) {
        use core::fmt::Write;
        if self.0.e == 1 || x < self.0.p {
            let _ = write!(out, "{}", x);
        } else {
            let d = self.digits(x);
            write_t_poly(out, &d[..self.0.e as usize]);
        }
    }
}

/// Reduces `c` (low first, coefficients in [0,p)) modulo the monic `modulus`.
fn reduce_mod(p: u32, modulus: &[u32], c: &mut Vec<u32>) {
    let e = modulus.len() - 1;
    let p = p as u64;
    while c.len() > e {
        let top = c.pop().unwrap_or(0) as u64;
        if top == 0 {
            continue;
        }
        let shift = c.len() - e;
        for i in 0..e {
            // c[shift + i] -= top * modulus[i]
            let sub = top * modulus[i] as u64 % p;
            c[shift + i] = ((c[shift + i] as u64 + p - sub) % p) as u32;
        }
    }
}

/// Degree of the smallest monic factor of `modulus`, by exhaustive search
/// over all monic polynomials of degree at most `e / 2`.
fn smallest_factor_degree(p: u32, modulus: &[u32]) -> Option<u32> {
    let e = modulus.len() - 1;
    for deg in 1..=e / 2 {
        let count = (p as u64).pow(deg as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            let mut rem = modulus.to_vec();
            reduce_mod(p, &divisor, &mut rem);
            if rem.iter().all(|&x| x == 0) {
                return Some(deg as u32);
            }
        }
    }
    None
}

fn build_tables(inner: &mut Inner) {
    let n = (inner.q - 1) as usize;
    let spec = FieldSpec(Arc::new(Inner {
        p: inner.p,
        e: inner.e,
        q: inner.q,
        modulus: inner.modulus.clone(),
        exp: Vec::new(),
        log: Vec::new(),
    }));
    // the multiplicative group is cyclic, so some candidate has order q - 1
    'candidates: for g in 2..inner.q {
        let mut exp = Vec::with_capacity(2 * n);
        let mut x: Elem = 1;
        for i in 0..n {
            if i > 0 && x == 1 {
                continue 'candidates;
            }
            exp.push(x);
            x = spec.mul_schoolbook(x, g);
        }
        let mut log = vec![0u32; inner.q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        exp.extend_from_within(..);
        inner.exp = exp;
        inner.log = log;
        return;
    }
}

fn write_t_poly(out: &mut String, coeffs: &[u32]) {
    use core::fmt::Write;
    let mut first = true;
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            out.push('+');
        }
        first = false;
        match (k, c) {
            (0, c) => {
                let _ = write!(out, "{}", c);
            }
            (1, 1) => out.push('t'),
            (1, c) => {
                let _ = write!(out, "{}*t", c);
            }
            (k, 1) => {
                let _ = write!(out, "t^{}", k);
            }
            (k, c) => {
                let _ = write!(out, "{}*t^{}", c, k);
            }
        }
    }
    if first {
        out.push('0');
    }
}

/// An element of a specific field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    value: Elem,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Canonical encoding.
    pub fn value(&self) -> Elem {
        self.value
    }

    /// Coefficients in `t`, low first, exactly `e` of them.
    pub fn rep(&self) -> Vec<u32> {
        self.field.digits(self.value)[..self.field.0.e as usize].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.field.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.field.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, n: u64) -> FieldElement {
        self.field.wrap(self.field.pow(self.value, n))
    }

    /// The same element viewed in a field containing this one.
    pub fn embed(&self, big: &FieldSpec) -> Result<FieldElement> {
        if big.contains(&self.field) {
            Ok(big.wrap(self.value))
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.field.write_elem(&mut s, self.value);
        f.write_str(&s)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec::Vec;

    fn small_fields() -> Vec<FieldSpec> {
        let mut v: Vec<FieldSpec> = [2, 3, 5, 7].iter().map(|&p| FieldSpec::prime(p).unwrap()).collect();
        v.push(FieldSpec::new(2, 2, None).unwrap());
        v.push(FieldSpec::new(2, 3, None).unwrap());
        v.push(FieldSpec::new(3, 2, None).unwrap());
        v
    }

    #[test]
    fn make_field_examples() {
        let f2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f2.order(), 2);
        let f4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.order(), 4);
        assert_eq!(FieldSpec::new(4, 1, None), Err(Error::NotPrime(4)));
    }

    #[test]
    fn make_field_errors() {
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus { p: 2, factor_degree: 1 })
        );
        // (t^2+t+1)^2 = t^4+t^2+1 has no roots but is reducible
        assert_eq!(
            FieldSpec::new(2, 4, Some(&[1, 0, 1, 0, 1])),
            Err(Error::ReducibleModulus { p: 2, factor_degree: 2 })
        );
        assert_eq!(FieldSpec::new(5, 2, None), Err(Error::NoDefaultModulus { p: 5, e: 2 }));
        assert!(matches!(FieldSpec::new(2, 9, None), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FieldSpec::new(2, 2, Some(&[1, 1])), Err(Error::InvalidModulus(_))));
        assert!(FieldSpec::new(5, 2, Some(&[2, 0, 1])).is_ok());
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for (p, e) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
            let f = FieldSpec::new(p, e, None).unwrap();
            assert_eq!(f.order(), p.pow(e));
            assert!(!f.has_custom_modulus());
        }
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(f2.one().add(&f2.one()).unwrap().is_zero());

        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let t = f4.generator();
        assert_eq!(t.mul(&t).unwrap(), f4.element(&[1, 1]).unwrap());
        assert_eq!(std::format!("{}", t.mul(&t).unwrap()), "t+1");

        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.from_int(2).inv().unwrap(), f5.from_int(3));
        assert_eq!(f5.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f5.one().div(&f5.zero()), Err(Error::DivisionByZero));
        assert_eq!(f5.one().add(&f2.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn enumeration_order() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let show = |f: &FieldSpec| f.elements().map(|x| std::format!("{}", x)).collect::<Vec<_>>();
        assert_eq!(show(&f2), ["0", "1"]);
        assert_eq!(show(&f3), ["0", "1", "2"]);
        assert_eq!(show(&f4), ["0", "1", "t", "t+1"]);
        let reps: Vec<_> = f4.elements().map(|x| x.rep()).collect();
        assert_eq!(reps, [[0, 0], [1, 0], [0, 1], [1, 1]]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            if f.order() > 9 {
                continue;
            }
            let q = f.order();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(f.sub(a, b), b), a);
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_and_frobenius() {
        for f in small_fields() {
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.pow(a, q as u64), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn table_and_schoolbook_agree() {
        let f = FieldSpec::new(2, 4, None).unwrap();
        for a in 0..16 {
            for b in 0..16 {
                assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b));
            }
        }
    }

    #[test]
    fn large_extension_without_tables() {
        // t^2 + 1 is irreducible over GF(46327) since 46327 = 3 mod 4
        let f = FieldSpec::new(46327, 2, Some(&[1, 0, 1])).unwrap();
        assert!(f.0.log.is_empty());
        let t = f.generator();
        assert_eq!(t.mul(&t).unwrap(), f.from_int(-1));
        let x = f.element(&[12345, 678]).unwrap();
        assert!(x.mul(&x.inv().unwrap()).unwrap().is_one());
    }

    #[test]
    fn fields_by_order() {
        assert_eq!(FieldSpec::of_order(9).unwrap(), FieldSpec::new(3, 2, None).unwrap());
        assert_eq!(FieldSpec::of_order(7).unwrap().order(), 7);
        assert_eq!(FieldSpec::of_order(6), Err(Error::NotPrime(6)));
        assert_eq!(FieldSpec::of_order(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::of_order(25), Err(Error::NoDefaultModulus { p: 5, e: 2 }));
    }

    #[test]
    fn subfields() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert!(f4.contains(&f2));
        assert!(!f2.contains(&f4));
        assert!(!f4.contains(&f3));
        assert_eq!(f2.join(&f4), Some(f4.clone()));
        assert!(f4.lies_in(1, &f2));
        assert!(!f4.lies_in(2, &f2));
        assert_eq!(f2.one().embed(&f4).unwrap(), f4.one());
    }

    #[test]
    fn literals() {
        assert_eq!(FieldSpec::prime(7).unwrap().literal(), "GF(7)");
        assert_eq!(FieldSpec::new(2, 3, None).unwrap().literal(), "GF(2^3)");
        assert_eq!(FieldSpec::new(2, 3, Some(&[1, 0, 1, 1])).unwrap().literal(), "GF(2^3; m=t^3+t^2+1)");
        let f9 = FieldSpec::new(3, 2, None).unwrap();
        assert_eq!(f9.reduce_t_poly(&[0, 0, 1]), f9.from_int(-1).value());
    }
}
