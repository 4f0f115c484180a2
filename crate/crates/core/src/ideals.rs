//! Ideals of a polynomial ring and the operations on them: sum,
//! intersection, quotient, saturation, elimination, homogeneity and radical
//! membership.
//!
//! Intersections use an auxiliary variable `T` placed in front of the ring
//! variables: `I ∩ J` is the `T`-free part of the block-order basis of
//! `T·I + (1 − T)·J`. Quotients are computed generator by generator as
//! `I : g = (I ∩ ⟨g⟩) / g` and intersected left to right.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// An ideal given by generators, with lazily computed reduced bases.
///
/// The degrevlex and lex bases are cached once computed. Filling a cache
/// slot twice (e.g. from two threads) stores one of two identical values.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    degrevlex: OnceBox<GroebnerBasis>,
    lex: OnceBox<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let copy = |slot: &OnceBox<GroebnerBasis>| {
            let fresh = OnceBox::new();
            if let Some(gb) = slot.get() {
                let _ = fresh.set(Box::new(gb.clone()));
            }
            fresh
        };
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            degrevlex: copy(&self.degrevlex),
            lex: copy(&self.lex),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, "⟩")
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.check(g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            degrevlex: OnceBox::new(),
            lex: OnceBox::new(),
        })
    }

    /// Parses each generator in `ring`.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_basis(GroebnerBasis::from_reduced(ring, MonomialOrder::DegRevLex, Vec::new()))
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::from_basis(GroebnerBasis::from_reduced(
            ring,
            MonomialOrder::DegRevLex,
            alloc::vec![ring.one()],
        ))
    }

    /// The ideal generated by a basis, with the basis cached.
    pub fn from_basis(gb: GroebnerBasis) -> Ideal {
        let ideal = Ideal {
            ring: gb.ring().clone(),
            gens: gb.generators().to_vec(),
            degrevlex: OnceBox::new(),
            lex: OnceBox::new(),
        };
        let slot = match gb.order() {
            MonomialOrder::DegRevLex => Some(&ideal.degrevlex),
            MonomialOrder::Lex => Some(&ideal.lex),
            MonomialOrder::Block(_) => None,
        };
        if let Some(slot) = slot {
            let _ = slot.set(Box::new(gb));
        }
        ideal
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Generators exactly as given.
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nonzero_generators(&self) -> impl Iterator<Item = &Polynomial> + '_ {
        self.gens.iter().filter(|g| !g.is_zero())
    }

    /// The reduced degrevlex basis.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        self.cached(&self.degrevlex, MonomialOrder::DegRevLex)
    }

    /// The reduced basis for any order (cached for lex and degrevlex).
    pub fn gb_in(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        match order {
            MonomialOrder::DegRevLex => self.gb().cloned(),
            MonomialOrder::Lex => self.cached(&self.lex, order).cloned(),
            MonomialOrder::Block(_) => buchberger(&self.ring, &self.gens, order),
        }
    }

    fn cached<'a>(&'a self, slot: &'a OnceBox<GroebnerBasis>, order: MonomialOrder) -> Result<&'a GroebnerBasis> {
        if let Some(gb) = slot.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.ring, &self.gens, order)?;
        Ok(slot.get_or_init(|| Box::new(gb)))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        self.gb()?.contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.ring.check(&other.ring)?;
        let gb = self.gb()?;
        for g in other.nonzero_generators() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.ring.check(&other.ring)?;
        Ok(self.gb()? == other.gb()?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    /// Generators concatenated.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let (ext, lift) = self.extended_ring()?;
        let t = ext.var(0);
        let one_minus_t = &ext.one() - &t;
        let mut gens = Vec::new();
        for f in self.nonzero_generators() {
            gens.push(&t * &f.transfer(&ext, &lift)?);
        }
        for g in other.nonzero_generators() {
            gens.push(&one_minus_t * &g.transfer(&ext, &lift)?);
        }
        let gb = buchberger(&ext, &gens, MonomialOrder::Block(1))?;
        Ideal::contract(&gb, 1, &self.ring)
    }

    /// `self : other = {f : f·other ⊆ self}`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check(&other.ring)?;
        let divisors: Vec<&Polynomial> = other.nonzero_generators().collect();
        if divisors.is_empty() {
            return Err(Error::ZeroDivisorIdeal);
        }
        let mut acc: Option<Ideal> = None;
        for g in divisors {
            let part = self.quotient_by(g)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part)?,
            });
        }
        Ok(acc.expect("at least one divisor"))
    }

    /// `self : ⟨g⟩` for a nonzero `g`.
    fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, alloc::vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for h in meet.nonzero_generators() {
            let q = h
                .div_exact(g)
                .expect("elements of an intersection with ⟨g⟩ are multiples of g");
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Iterated quotient `S_{k+1} = S_k : other` from `S_0 = self` until two
    /// consecutive terms coincide. Returns the limit and the number of
    /// quotients computed (at least one).
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, usize)> {
        let mut current = self.clone();
        let mut rounds = 0;
        loop {
            let next = current.quotient(other)?;
            rounds += 1;
            if next.equals(&current)? {
                return Ok((next, rounds));
            }
            current = next;
        }
    }

    /// `self ∩ F[x_k, …]`, an ideal of the ring without the first `k`
    /// variables.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        if k > self.ring.nvars() {
            return Err(Error::VariableIndex {
                index: k,
                nvars: self.ring.nvars(),
            });
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let gb = buchberger(&self.ring, &self.gens, MonomialOrder::Block(k))?;
        Ideal::contract(&gb, k, &self.ring.without_first(k))
    }

    /// Keeps the basis elements free of the first `k` variables and moves
    /// them to the remaining ring. For a reduced block-order basis these form
    /// the reduced degrevlex basis of the elimination ideal.
    fn contract(gb: &GroebnerBasis, k: usize, target: &Ring) -> Result<Ideal> {
        let big = gb.ring();
        let map: Vec<Option<usize>> = (0..big.nvars()).map(|i| i.checked_sub(k)).collect();
        let mut kept = Vec::new();
        for g in gb.generators() {
            if g.terms().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)) {
                kept.push(g.transfer(target, &map)?);
            }
        }
        Ok(Ideal::from_basis(GroebnerBasis::from_reduced(
            target,
            MonomialOrder::DegRevLex,
            kept,
        )))
    }

    /// The ring with a fresh variable in front, and the map lifting this
    /// ring's variables into it.
    fn extended_ring(&self) -> Result<(Ring, Vec<Option<usize>>)> {
        let name = self.ring.fresh_name("T");
        let ext = self.ring.with_var_inserted(0, &name)?;
        let lift = (0..self.ring.nvars()).map(|i| Some(i + 1)).collect();
        Ok((ext, lift))
    }

    /// Whether the ideal is homogeneous: every homogeneous component of
    /// every reduced basis element lies in the ideal.
    pub fn is_homogeneous(&self) -> Result<bool> {
        let gb = self.gb()?;
        for g in gb.generators() {
            if g.is_homogeneous() {
                continue;
            }
            for (_, c) in g.homogeneous_components() {
                if !gb.contains(&c)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `f ∈ √self`, decided by `1 ∈ self + ⟨1 − T·f⟩` with a fresh `T`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let (ext, lift) = self.extended_ring()?;
        let mut gens = Vec::with_capacity(self.gens.len() + 1);
        for g in self.nonzero_generators() {
            gens.push(g.transfer(&ext, &lift)?);
        }
        gens.push(&ext.one() - &(&ext.var(0) * &f.transfer(&ext, &lift)?));
        Ok(buchberger(&ext, &gens, MonomialOrder::DegRevLex)?.is_unit())
    }

    /// The same ideal over another ring, generator by generator.
    pub fn transfer(&self, target: &Ring, var_map: &[Option<usize>]) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.transfer(target, var_map))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.sum(j)
}

pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.intersect(j)
}

pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.quotient(j)
}

pub fn ideal_saturate(i: &Ideal, j: &Ideal) -> Result<(Ideal, usize)> {
    i.saturate(j)
}

pub fn eliminate(i: &Ideal, first_k_vars: usize) -> Result<Ideal> {
    i.eliminate(first_k_vars)
}

pub fn is_homogeneous_ideal(i: &Ideal) -> Result<bool> {
    i.is_homogeneous()
}

pub fn radical_membership(f: &Polynomial, i: &Ideal) -> Result<bool> {
    i.radical_contains(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ring(p: u32, vars: &[&str]) -> Ring {
        Ring::new(FieldSpec::prime(p).unwrap(), vars.iter().copied()).unwrap()
    }

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.equals(b).unwrap()
    }

    #[test]
    fn sum_examples() {
        let r = ring(2, &["X1", "X2"]);
        let s = id(&r, &["X1"]).sum(&id(&r, &["X1^2 - X1", "X2^2 - X2"])).unwrap();
        assert_eq!(s.generators().len(), 3);
        assert!(same(&s, &id(&r, &["X1", "X2^2 - X2"])));
        let i = id(&r, &["X1*X2 + 1"]);
        assert!(same(&i.sum(&Ideal::zero(&r)).unwrap(), &i));
        assert!(i.sum(&Ideal::unit(&r)).unwrap().is_unit().unwrap());
        let other = ring(2, &["Y"]);
        assert!(matches!(i.sum(&Ideal::zero(&other)), Err(Error::RingMismatch)));
    }

    #[test]
    fn intersect_examples() {
        let r = ring(2, &["X0", "X1"]);
        let m = id(&r, &["X0"]).intersect(&id(&r, &["X1"])).unwrap();
        assert!(same(&m, &id(&r, &["X0*X1"])));
        assert_eq!(m.gb().unwrap().generators(), &[r.parse("X0*X1").unwrap()]);

        let r1 = ring(2, &["X1"]);
        let m = id(&r1, &["X1"]).intersect(&id(&r1, &["X1 + 1"])).unwrap();
        assert!(same(&m, &id(&r1, &["X1^2 + X1"])));

        let i = id(&r, &["X0^2 + X1", "X0*X1"]);
        assert!(same(&i.intersect(&i).unwrap(), &i));
        assert!(i.intersect(&Ideal::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn quotient_examples() {
        let r = ring(2, &["X0", "X1"]);
        let q = id(&r, &["X0"]).quotient(&id(&r, &["X0^2", "X1^2"])).unwrap();
        assert!(same(&q, &id(&r, &["X0"])));
        let q = id(&r, &["X0^2"]).quotient(&id(&r, &["X0"])).unwrap();
        assert!(same(&q, &id(&r, &["X0"])));
        let i = id(&r, &["X0^2*X1 + X1^3", "X0*X1"]);
        assert!(same(&i.quotient(&Ideal::unit(&r)).unwrap(), &i));
        assert!(matches!(i.quotient(&Ideal::zero(&r)), Err(Error::ZeroDivisorIdeal)));
        assert!(matches!(i.quotient(&id(&r, &["0"])), Err(Error::ZeroDivisorIdeal)));
    }

    #[test]
    fn quotient_generators_multiply_into_ideal() {
        let r = ring(3, &["x", "y", "z"]);
        let i = id(&r, &["x^2*y - z^3", "x*z^2 + y^2"]);
        let j = id(&r, &["x", "y*z"]);
        let q = i.quotient(&j).unwrap();
        assert!(q.contains_ideal(&i).unwrap());
        for f in q.generators() {
            for g in j.generators() {
                assert!(i.contains(&(f * g)).unwrap());
            }
        }
    }

    #[test]
    fn saturate_examples() {
        let r = ring(2, &["X0", "X1"]);
        let m = id(&r, &["X0", "X1"]);
        let (s, rounds) = id(&r, &["X0*X1", "X0^2"]).saturate(&m).unwrap();
        assert!(same(&s, &id(&r, &["X0"])));
        assert_eq!(rounds, 2);
        let (s, rounds) = id(&r, &["X0"]).saturate(&m).unwrap();
        assert!(same(&s, &id(&r, &["X0"])));
        assert_eq!(rounds, 1);
        let (s, _) = Ideal::unit(&r).saturate(&m).unwrap();
        assert!(s.is_unit().unwrap());
        assert!(matches!(m.saturate(&Ideal::zero(&r)), Err(Error::ZeroDivisorIdeal)));
    }

    #[test]
    fn eliminate_examples() {
        let r = ring(3, &["X0", "X1"]);
        let e = id(&r, &["X0 - X1^2", "X1 - 1"]).eliminate(1).unwrap();
        assert_eq!(e.ring().var_names(), ["X1"]);
        assert!(same(&e, &id(e.ring(), &["X1 - 1"])));
        let i = id(&r, &["X0*X1 + 1"]);
        assert!(same(&i.eliminate(0).unwrap(), &i));
        assert!(i.eliminate(1).unwrap().is_zero());
        assert!(matches!(i.eliminate(3), Err(Error::VariableIndex { .. })));
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring(2, &["X1", "X2"]);
        assert!(!id(&r, &["X1", "X2^2 - X2"]).is_homogeneous().unwrap());
        assert!(id(&r, &["X1^2*X2 - X2^2*X1"]).is_homogeneous().unwrap());
        assert!(Ideal::zero(&r).is_homogeneous().unwrap());
        // homogeneous although a generator is not
        assert!(id(&r, &["X1", "X1 + X2^2"]).is_homogeneous().unwrap());
    }

    #[test]
    fn radical_examples() {
        let r = ring(2, &["X0", "X1"]);
        assert!(id(&r, &["X0^2*X1^2"]).radical_contains(&r.parse("X0*X1").unwrap()).unwrap());
        assert!(!id(&r, &["X1"]).radical_contains(&r.parse("X0").unwrap()).unwrap());
        assert!(id(&r, &["X0^2 + X1^2"]).radical_contains(&r.parse("X0 + X1").unwrap()).unwrap());
        assert!(!id(&r, &["X0^2 + X1^2"]).contains(&r.parse("X0 + X1").unwrap()).unwrap());
    }

    #[test]
    fn fresh_variable_avoids_clash() {
        let r = ring(2, &["T", "X"]);
        let m = id(&r, &["T"]).intersect(&id(&r, &["X"])).unwrap();
        assert!(same(&m, &id(&r, &["T*X"])));
    }

    #[test]
    fn cached_basis_survives_clone() {
        let r = ring(2, &["X0", "X1"]);
        let i = id(&r, &["X0*X1", "X0^2"]);
        let g = i.gb().unwrap().clone();
        let j = i.clone();
        assert_eq!(j.gb().unwrap(), &g);
        assert_eq!(i.gb_in(MonomialOrder::Lex).unwrap().order(), MonomialOrder::Lex);
    }
}
