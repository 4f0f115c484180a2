//! Forms with restricted zero sets, bounded searches for compositions of
//! such forms that push a target into an ideal, and the searches behind the
//! counterexample suite and the non-radical instances of `I + Γ_q*`.
//!
//! A form `p(y_0, …, y_m)` is in `P_K(m)` if it is homogeneous and its zeros
//! in `K^{m+1}` all have `y_0 = 0`, and in `P_K^0(m)` if the origin is its
//! only zero. The families searched are
//!
//! * R1: `p(y_0^n, y_1, …, y_m)` with `p ∈ P_K^0(m)` and `n ≥ 1`;
//! * R2: `p(q(y_0, …, y_n), y_{n+1}, …, y_{n+m})` with `p ∈ P_K^0(m)` and
//!   `q ∈ P_K^0(n)`;
//! * R3: chains `p_i(⋯ p_2(p_1(y_0, …, y_{m_1}), …) ⋯, …, y_{m_i})` with
//!   `p_j ∈ P_K^0(m_j − m_{j−1})`.
//!
//! A witness for `f` is a member `p` of a family together with arguments
//! `f_1, …, f_m` such that `p(f, f_1, …, f_m) ∈ I`.
//!
//! # Search order
//!
//! Forms are monic (leading coefficient 1 under degrevlex) of degree
//! `1..=max_deg_p`. Arguments range over all polynomials of degree at most
//! `max_deg_args`, deduplicated by normal form modulo `I`; this loses no
//! witness because `p(f, f_1, …) mod I` only depends on the residues.
//!
//! Candidates are grouped into shapes (the variable count and degree of
//! every component). Shapes are ordered by argument count, then total form
//! degree, then chain length, then the variable counts, the degrees and the
//! inner exponent. Within a shape, form tuples come first in lexicographic
//! order of their enumeration indices, then argument tuples likewise. The
//! first witness in this order is returned.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::groebner::GroebnerBasis;
use crate::ideals::Ideal;
use crate::nullstellensatz::{affine_vanishing, gamma_q_star, projective_vanishing, NullConfig};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::varieties::{enumerate_space, oracle_vanishing_ideal, space_size, zero_set, SpaceKind};

/// Largest number of polynomials an enumeration will produce.
pub const MAX_ENUMERATION: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// Zeros only where `y_0 = 0`.
    PK,
    /// Only the trivial zero.
    PK0,
}

/// Whether `p` is a nonzero homogeneous form of the given kind over the
/// finite field `field`, decided by evaluating at every point of
/// `field^{m+1}`.
pub fn check_form_class(p: &Polynomial, kind: FormKind, field: &FieldSpec) -> Result<bool> {
    if p.is_zero() || !p.is_homogeneous() {
        return Ok(false);
    }
    let big = p.field().join(field).ok_or(Error::FieldMismatch)?;
    let space = enumerate_space(field, p.ring().nvars(), SpaceKind::Affine)?;
    Ok(form_class_on(p, kind, &big, space.raw_points()))
}

fn form_class_on(p: &Polynomial, kind: FormKind, big: &FieldSpec, points: &[Vec<Elem>]) -> bool {
    for a in points {
        if p.eval_in(big, a) != 0 {
            continue;
        }
        let bad = match kind {
            FormKind::PK0 => a.iter().any(|&x| x != 0),
            FormKind::PK => a.first().is_some_and(|&x| x != 0),
        };
        if bad {
            return false;
        }
    }
    match kind {
        // the origin must be a zero, so constants are excluded
        FormKind::PK0 => !p.is_constant(),
        FormKind::PK => true,
    }
}

/// A form checked to belong to `P_K(m)` or `P_K^0(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormClass {
    kind: FormKind,
    form: Polynomial,
}

impl FormClass {
    /// `None` when the form is not in the class.
    pub fn try_new(form: Polynomial, kind: FormKind, field: &FieldSpec) -> Result<Option<FormClass>> {
        Ok(check_form_class(&form, kind, field)?.then_some(FormClass { kind, form }))
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    /// The form has variables `y_0, …, y_m`.
    pub fn m(&self) -> usize {
        self.form.ring().nvars() - 1
    }
}

/// Whether `p ∈ P_K(m)` and `p(f, args…) ∈ I`, which proves `f` lies in the
/// `K`-radical of `I`.
pub fn verify_kradical_witness(
    f: &Polynomial,
    ideal: &Ideal,
    p: &Polynomial,
    args: &[Polynomial],
    field: &FieldSpec,
) -> Result<bool> {
    if p.ring().nvars() != args.len() + 1 {
        return Err(Error::ArityMismatch {
            expected: p.ring().nvars(),
            got: args.len() + 1,
        });
    }
    let ring = ideal.ring();
    ring.check(f.ring())?;
    if p.field() != ring.field() {
        return Err(Error::FieldMismatch);
    }
    if !check_form_class(p, FormKind::PK, field)? {
        return Ok(false);
    }
    let mut all = Vec::with_capacity(args.len() + 1);
    all.push(f.clone());
    all.extend(args.iter().cloned());
    ideal.contains(&p.compose_into(ring, &all)?)
}

/// Monomials of degree `d` in `nvars` variables, largest first under
/// degrevlex.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; nvars], &mut out);
    out.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
    out
}

fn checked_count(q: u32, slots: usize) -> Result<u64> {
    space_size(q, slots, SpaceKind::Affine)
        .filter(|&c| c <= MAX_ENUMERATION)
        .ok_or(Error::SizeOverflow { limit: MAX_ENUMERATION })
}

/// All monic homogeneous forms of degree `d`: for each position of the
/// leading monomial, all tails in lexicographic order (coefficients as
/// encodings).
pub fn forms_of_degree(ring: &Ring, d: u32) -> Result<Vec<Polynomial>> {
    let monos = monomials_of_degree(ring.nvars(), d);
    let q = ring.field().order();
    checked_count(q, monos.len())?;
    let mut out = Vec::new();
    for lead in 0..monos.len() {
        let tail = &monos[lead + 1..];
        let mut digits = vec![0 as Elem; tail.len()];
        loop {
            let mut terms = BTreeMap::new();
            terms.insert(monos[lead].clone(), 1);
            for (m, &c) in tail.iter().zip(&digits) {
                if c != 0 {
                    terms.insert(m.clone(), c);
                }
            }
            out.push(Polynomial::from_map(ring.clone(), terms));
            if !odometer(&mut digits, q) {
                break;
            }
        }
    }
    Ok(out)
}

/// All polynomials of total degree at most `d`, including zero. The `i`-th
/// polynomial has the base-`q` digits of `i` as coefficients of the
/// monomials in ascending degrevlex order.
pub fn polynomials_up_to_degree(ring: &Ring, d: u32) -> Result<Vec<Polynomial>> {
    let mut monos: Vec<Monomial> = (0..=d).flat_map(|k| monomials_of_degree(ring.nvars(), k)).collect();
    monos.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a, b));
    let q = ring.field().order();
    let total = checked_count(q, monos.len())?;
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0 as Elem; monos.len()];
    loop {
        let mut terms = BTreeMap::new();
        for (m, &c) in monos.iter().zip(&digits) {
            if c != 0 {
                terms.insert(m.clone(), c);
            }
        }
        out.push(Polynomial::from_map(ring.clone(), terms));
        // digit 0 is least significant
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Advances a big-endian base-`q` counter; false once it wraps to zero.
fn odometer(digits: &mut [Elem], q: u32) -> bool {
    for x in digits.iter_mut().rev() {
        *x += 1;
        if *x < q {
            return true;
        }
        *x = 0;
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    R1,
    R2,
    R3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::R1, Family::R2, Family::R3];

    pub fn name(self) -> &'static str {
        match self {
            Family::R1 => "R1",
            Family::R2 => "R2",
            Family::R3 => "R3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBounds {
    /// Largest number of arguments `f_1, …, f_m`.
    pub max_m: usize,
    /// Largest degree of each form.
    pub max_deg_p: u32,
    /// Largest total degree of each argument.
    pub max_deg_args: u32,
    /// Longest chain (R3).
    pub max_chain: usize,
    /// Largest inner exponent `n` (R1).
    pub max_inner_exp: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_m: 2,
            max_deg_p: 4,
            max_deg_args: 2,
            max_chain: 2,
            max_inner_exp: 3,
        }
    }
}

impl SearchBounds {
    pub const ZERO: SearchBounds = SearchBounds {
        max_m: 0,
        max_deg_p: 0,
        max_deg_args: 0,
        max_chain: 0,
        max_inner_exp: 0,
    };
}

/// How a family member is composed from forms in `P_K^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    /// `p(y_0^n, y_1, …, y_m)`.
    R1 { p: Polynomial, n: u32 },
    /// `p(q(y_0, …, y_n), y_{n+1}, …)`.
    R2 { p: Polynomial, q: Polynomial },
    /// Innermost form first.
    R3 { chain: Vec<Polynomial> },
}

impl Structure {
    pub fn family(&self) -> Family {
        match self {
            Structure::R1 { .. } => Family::R1,
            Structure::R2 { .. } => Family::R2,
            Structure::R3 { .. } => Family::R3,
        }
    }

    /// The forms applied in order, innermost first.
    pub fn components(&self, field: &FieldSpec) -> Vec<Polynomial> {
        match self {
            Structure::R1 { p, n } => {
                let y = Ring::with_indexed_vars(field.clone(), "y", 1).expect("valid names");
                vec![y.var_power(0, *n), p.clone()]
            }
            Structure::R2 { p, q } => vec![q.clone(), p.clone()],
            Structure::R3 { chain } => chain.clone(),
        }
    }

    /// Breakpoints `m_1 ≤ ⋯ ≤ m_i` of the equivalent chain.
    pub fn breakpoints(&self, field: &FieldSpec) -> Vec<usize> {
        let mut m = 0;
        let mut out = Vec::new();
        for (j, c) in self.components(field).iter().enumerate() {
            let extra = c.ring().nvars() - 1;
            m = if j == 0 { extra } else { m + extra };
            out.push(m);
        }
        out
    }

    /// The number of arguments besides the target.
    pub fn arity(&self, field: &FieldSpec) -> usize {
        self.breakpoints(field).last().copied().unwrap_or(0)
    }

    /// The composite form in `y_0, …, y_m`.
    pub fn composite(&self, field: &FieldSpec) -> Result<Polynomial> {
        let comps = self.components(field);
        let y = Ring::with_indexed_vars(field.clone(), "y", self.arity(field) + 1)?;
        let mut next = 1;
        let mut h = y.var(0);
        for c in &comps {
            let mut args = vec![h];
            for _ in 1..c.ring().nvars() {
                args.push(y.var(next));
                next += 1;
            }
            h = c.compose_into(&y, &args)?;
        }
        Ok(h)
    }
}

/// A verified witness: `composite(f, args…) ∈ ideal`.
#[derive(Clone, Debug)]
pub struct RWitness {
    pub structure: Structure,
    pub args: Vec<Polynomial>,
    pub target: Polynomial,
    pub ideal: Ideal,
}

impl RWitness {
    pub fn family(&self) -> Family {
        self.structure.family()
    }

    /// Re-checks every component form and the membership from scratch.
    pub fn verify(&self, points: &FieldSpec) -> Result<bool> {
        let field = self.ideal.ring().field();
        if let Structure::R1 { n: 0, .. } = self.structure {
            return Ok(false);
        }
        for c in self.structure.components(field) {
            if !check_form_class(&c, FormKind::PK0, points)? {
                return Ok(false);
            }
        }
        let composite = self.structure.composite(field)?;
        if composite.ring().nvars() != self.args.len() + 1 {
            return Ok(false);
        }
        let mut all = vec![self.target.clone()];
        all.extend(self.args.iter().cloned());
        self.ideal.contains(&composite.compose_into(self.ideal.ring(), &all)?)
    }

    /// Every R1 member is an R2 member with inner form `y_0^n`, and every R2
    /// member is a chain of length two.
    pub fn convert(&self, family: Family) -> Option<RWitness> {
        let field = self.ideal.ring().field();
        let structure = match (&self.structure, family) {
            (s, f) if s.family() == f => s.clone(),
            (Structure::R1 { p, n }, Family::R2) => {
                let y = Ring::with_indexed_vars(field.clone(), "y", 1).expect("valid names");
                Structure::R2 {
                    p: p.clone(),
                    q: y.var_power(0, *n),
                }
            }
            (Structure::R1 { .. }, Family::R3) => return self.convert(Family::R2)?.convert(Family::R3),
            (Structure::R2 { p, q }, Family::R3) => Structure::R3 {
                chain: vec![q.clone(), p.clone()],
            },
            _ => return None,
        };
        Some(RWitness {
            structure,
            ..self.clone()
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustedReport {
    pub family: Family,
    pub bounds: SearchBounds,
    /// Candidates evaluated after deduplicating arguments.
    pub candidates: u64,
    /// Distinct argument residues modulo the ideal.
    pub arg_classes: usize,
    /// Raw number of arguments before deduplication.
    pub arg_space: u64,
}

impl ExhaustedReport {
    pub fn is_vacuous(&self) -> bool {
        self.candidates == 0
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found { witness: RWitness, candidates: u64 },
    Exhausted(ExhaustedReport),
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&RWitness> {
        match self {
            SearchOutcome::Found { witness, .. } => Some(witness),
            SearchOutcome::Exhausted(_) => None,
        }
    }

    pub fn candidates(&self) -> u64 {
        match self {
            SearchOutcome::Found { candidates, .. } => *candidates,
            SearchOutcome::Exhausted(r) => r.candidates,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Component {
    /// `y_0^n`.
    Power(u32),
    Forms { vars: usize, deg: u32 },
}

impl Component {
    fn vars(&self) -> usize {
        match self {
            Component::Power(_) => 1,
            Component::Forms { vars, .. } => *vars,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Shape {
    comps: Vec<Component>,
}

impl Shape {
    fn arity(&self) -> usize {
        self.comps.iter().map(|c| c.vars() - 1).sum()
    }

    fn key(&self) -> (usize, u32, usize, Vec<usize>, Vec<u32>, u32) {
        let mut degs = Vec::new();
        let mut inner = 0;
        for c in &self.comps {
            match c {
                Component::Power(n) => inner = *n,
                Component::Forms { deg, .. } => degs.push(*deg),
            }
        }
        (
            self.arity(),
            degs.iter().sum(),
            self.comps.len(),
            self.comps.iter().map(Component::vars).collect(),
            degs,
            inner,
        )
    }
}

fn shapes(family: Family, b: &SearchBounds) -> Vec<Shape> {
    let degs = 1..=b.max_deg_p;
    let mut out = Vec::new();
    match family {
        Family::R1 => {
            for m in 0..=b.max_m {
                for d in degs.clone() {
                    for n in 1..=b.max_inner_exp {
                        out.push(Shape {
                            comps: vec![Component::Power(n), Component::Forms { vars: m + 1, deg: d }],
                        });
                    }
                }
            }
        }
        Family::R2 => {
            for total in 0..=b.max_m {
                for n in 0..=total {
                    for dq in degs.clone() {
                        for dp in degs.clone() {
                            out.push(Shape {
                                comps: vec![
                                    Component::Forms { vars: n + 1, deg: dq },
                                    Component::Forms {
                                        vars: total - n + 1,
                                        deg: dp,
                                    },
                                ],
                            });
                        }
                    }
                }
            }
        }
        Family::R3 => {
            for len in 1..=b.max_chain {
                let mut extras = vec![0usize; len];
                loop {
                    if extras.iter().sum::<usize>() <= b.max_m {
                        let mut ds = vec![1u32; len];
                        if b.max_deg_p >= 1 {
                            loop {
                                out.push(Shape {
                                    comps: extras
                                        .iter()
                                        .zip(&ds)
                                        .map(|(&e, &deg)| Component::Forms { vars: e + 1, deg })
                                        .collect(),
                                });
                                if !bounded_odometer(&mut ds, 1, b.max_deg_p) {
                                    break;
                                }
                            }
                        }
                    }
                    if !bounded_odometer(&mut extras, 0, b.max_m) {
                        break;
                    }
                }
            }
        }
    }
    out.sort_by_key(Shape::key);
    out
}

fn bounded_odometer<T>(digits: &mut [T], lo: T, hi: T) -> bool
where
    T: Copy + PartialOrd + core::ops::AddAssign + From<u8>,
{
    for x in digits.iter_mut().rev() {
        if *x < hi {
            *x += T::from(1u8);
            return true;
        }
        *x = lo;
    }
    false
}

/// Result of searching one shape.
#[derive(Clone, Debug)]
pub struct PartitionOutcome {
    /// Candidates evaluated, up to and including a witness if one was found.
    pub candidates: u64,
    pub witness: Option<RWitness>,
}

/// A bounded search split into independent partitions (one per shape) that
/// may run in any order or concurrently; [`SearchPlan::merge`] combines
/// their outcomes as if they had run in canonical order.
pub struct SearchPlan {
    family: Family,
    bounds: SearchBounds,
    ideal: Ideal,
    target: Polynomial,
    target_residue: Polynomial,
    args: Vec<Polynomial>,
    arg_space: u64,
    shapes: Vec<Shape>,
    forms: BTreeMap<(usize, u32), Vec<Polynomial>>,
    y1: Ring,
}

impl SearchPlan {
    pub fn new(
        target: &Polynomial,
        ideal: &Ideal,
        family: Family,
        bounds: SearchBounds,
        points: &FieldSpec,
    ) -> Result<SearchPlan> {
        let ring = ideal.ring();
        ring.check(target.ring())?;
        let field = ring.field().clone();
        let big = field.join(points).ok_or(Error::FieldMismatch)?;
        let gb = ideal.gb()?;
        let raw = polynomials_up_to_degree(ring, bounds.max_deg_args)?;
        let arg_space = raw.len() as u64;
        let mut args: Vec<Polynomial> = Vec::new();
        let mut seen = alloc::collections::BTreeSet::new();
        for a in raw {
            let r = gb.normal_form(&a)?;
            let key: Vec<(Monomial, Elem)> = r.terms().map(|(m, c)| (m.clone(), c)).collect();
            if seen.insert(key) {
                args.push(r);
            }
        }
        let mut shapes = shapes(family, &bounds);
        let mut forms = BTreeMap::new();
        for s in &shapes {
            for c in &s.comps {
                if let Component::Forms { vars, deg } = *c {
                    if forms.contains_key(&(vars, deg)) {
                        continue;
                    }
                    let y = Ring::with_indexed_vars(field.clone(), "y", vars)?;
                    let space = enumerate_space(points, vars, SpaceKind::Affine)?;
                    let list: Vec<Polynomial> = forms_of_degree(&y, deg)?
                        .into_iter()
                        .filter(|p| form_class_on(p, FormKind::PK0, &big, space.raw_points()))
                        .collect();
                    forms.insert((vars, deg), list);
                }
            }
        }
        shapes.retain(|s| {
            s.comps.iter().all(|c| match *c {
                Component::Power(_) => true,
                Component::Forms { vars, deg } => !forms[&(vars, deg)].is_empty(),
            })
        });
        Ok(SearchPlan {
            family,
            bounds,
            ideal: ideal.clone(),
            target: target.clone(),
            target_residue: gb.normal_form(target)?,
            args,
            arg_space,
            shapes,
            forms,
            y1: Ring::with_indexed_vars(field, "y", 1)?,
        })
    }

    pub fn partition_count(&self) -> usize {
        self.shapes.len()
    }

    pub fn arg_classes(&self) -> usize {
        self.args.len()
    }

    fn gb(&self) -> &GroebnerBasis {
        self.ideal.gb().expect("computed when the plan was built")
    }

    fn candidates_of(&self, comp: &Component) -> Vec<Polynomial> {
        match *comp {
            Component::Power(n) => vec![self.y1.var_power(0, n)],
            Component::Forms { vars, deg } => self.forms[&(vars, deg)].clone(),
        }
    }

    /// Powers `1, r, r^2, …, r^k` reduced modulo the ideal.
    fn powers(&self, r: &Polynomial, k: u32) -> Result<Vec<Polynomial>> {
        let mut out = vec![self.ideal.ring().one(), r.clone()];
        while out.len() <= k as usize {
            let next = self.gb().normal_form(&(out.last().expect("nonempty") * r))?;
            out.push(next);
        }
        Ok(out)
    }

    fn eval_form(&self, p: &Polynomial, tables: &[&[Polynomial]]) -> Result<Polynomial> {
        let ring = self.ideal.ring();
        let mut acc = ring.zero();
        for (m, c) in p.terms() {
            let mut t = ring.constant(c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &tables[i][e as usize];
                }
            }
            acc = &acc + &t;
        }
        self.gb().normal_form(&acc)
    }

    /// Evaluates one shape in canonical order, stopping at its first witness.
    pub fn run_partition(&self, index: usize) -> Result<PartitionOutcome> {
        let shape = &self.shapes[index];
        let lists: Vec<Vec<Polynomial>> = shape.comps.iter().map(|c| self.candidates_of(c)).collect();
        let max_deg = lists
            .iter()
            .flatten()
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(1);
        let arg_tables = self
            .args
            .iter()
            .map(|a| self.powers(a, max_deg))
            .collect::<Result<Vec<_>>>()?;
        let target_table = self.powers(&self.target_residue, max_deg)?;
        let m = shape.arity();
        let mut pick = vec![0usize; lists.len()];
        let mut candidates = 0u64;
        loop {
            let forms: Vec<&Polynomial> = pick.iter().zip(&lists).map(|(&i, l)| &l[i]).collect();
            let mut choice = vec![0usize; m];
            loop {
                candidates += 1;
                if self.evaluate_chain(&forms, &choice, &target_table, &arg_tables)?.is_zero() {
                    let witness = self.witness(shape, &forms, &choice);
                    return Ok(PartitionOutcome {
                        candidates,
                        witness: Some(witness),
                    });
                }
                if !index_odometer(&mut choice, self.args.len()) {
                    break;
                }
            }
            if !mixed_odometer(&mut pick, &lists) {
                break;
            }
        }
        Ok(PartitionOutcome {
            candidates,
            witness: None,
        })
    }

    fn evaluate_chain(
        &self,
        forms: &[&Polynomial],
        choice: &[usize],
        target_table: &[Polynomial],
        arg_tables: &[Vec<Polynomial>],
    ) -> Result<Polynomial> {
        let mut next = 0;
        let mut inner: Option<Vec<Polynomial>> = None;
        let mut value = self.ideal.ring().zero();
        for (j, p) in forms.iter().enumerate() {
            let extra = p.ring().nvars() - 1;
            let mut tables: Vec<&[Polynomial]> = Vec::with_capacity(extra + 1);
            tables.push(inner.as_deref().unwrap_or(target_table));
            for &c in &choice[next..next + extra] {
                tables.push(&arg_tables[c]);
            }
            next += extra;
            value = self.eval_form(p, &tables)?;
            if j + 1 < forms.len() {
                inner = Some(self.powers(&value, max_degree(&forms[j + 1..]))?);
            }
        }
        Ok(value)
    }

    fn witness(&self, shape: &Shape, forms: &[&Polynomial], choice: &[usize]) -> RWitness {
        let structure = match self.family {
            Family::R1 => {
                let n = match shape.comps[0] {
                    Component::Power(n) => n,
                    Component::Forms { .. } => unreachable!("R1 shapes start with a power"),
                };
                Structure::R1 {
                    p: forms[1].clone(),
                    n,
                }
            }
            Family::R2 => Structure::R2 {
                p: forms[1].clone(),
                q: forms[0].clone(),
            },
            Family::R3 => Structure::R3 {
                chain: forms.iter().map(|&p| p.clone()).collect(),
            },
        };
        RWitness {
            structure,
            args: choice.iter().map(|&c| self.args[c].clone()).collect(),
            target: self.target.clone(),
            ideal: self.ideal.clone(),
        }
    }

    /// Combines partition outcomes given in partition order.
    pub fn merge(&self, outcomes: Vec<PartitionOutcome>) -> SearchOutcome {
        let mut before = 0u64;
        for o in outcomes {
            before += o.candidates;
            if let Some(witness) = o.witness {
                return SearchOutcome::Found {
                    witness,
                    candidates: before,
                };
            }
        }
        SearchOutcome::Exhausted(ExhaustedReport {
            family: self.family,
            bounds: self.bounds,
            candidates: before,
            arg_classes: self.args.len(),
            arg_space: self.arg_space,
        })
    }

    /// Runs every partition in order, stopping at the first witness.
    pub fn run(&self) -> Result<SearchOutcome> {
        let mut outcomes = Vec::new();
        for i in 0..self.partition_count() {
            let o = self.run_partition(i)?;
            let found = o.witness.is_some();
            outcomes.push(o);
            if found {
                break;
            }
        }
        Ok(self.merge(outcomes))
    }
}

fn max_degree(forms: &[&Polynomial]) -> u32 {
    forms.iter().filter_map(|p| p.total_degree()).max().unwrap_or(1)
}

fn index_odometer(digits: &mut [usize], base: usize) -> bool {
    for x in digits.iter_mut().rev() {
        *x += 1;
        if *x < base {
            return true;
        }
        *x = 0;
    }
    false
}

fn mixed_odometer(pick: &mut [usize], lists: &[Vec<Polynomial>]) -> bool {
    for (x, l) in pick.iter_mut().zip(lists).rev() {
        *x += 1;
        if *x < l.len() {
            return true;
        }
        *x = 0;
    }
    false
}

/// Searches `family` within `bounds` for a witness that `f` lies in `R_i(I)`.
pub fn search_witness(
    f: &Polynomial,
    ideal: &Ideal,
    family: Family,
    bounds: SearchBounds,
    points: &FieldSpec,
) -> Result<SearchOutcome> {
    SearchPlan::new(f, ideal, family, bounds, points)?.run()
}

/// The ring `GF(2)[X1, X2]` of the counterexample.
pub fn counterexample_ring() -> Ring {
    Ring::new(FieldSpec::prime(2).expect("2 is prime"), ["X1", "X2"]).expect("valid names")
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub bounds: SearchBounds,
    /// Replaces `⟨X1⟩`; must live in [`counterexample_ring`].
    pub ideal: Option<Ideal>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteGroup {
    pub label: &'static str,
    pub claim: &'static str,
    pub passed: bool,
    pub vacuous: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    pub family: Family,
    pub target: String,
    pub exhausted: bool,
    pub candidates: u64,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub ideal: Vec<String>,
    pub vanishing: Vec<String>,
    pub groups: Vec<SuiteGroup>,
    pub searches: Vec<SearchSummary>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(|g| g.passed)
    }

    /// `SuiteFailure` naming the first failed group.
    pub fn into_result(self) -> Result<SuiteReport> {
        match self.groups.iter().find(|g| !g.passed) {
            Some(g) => Err(Error::SuiteFailure(format!("({}) {}: {}", g.label, g.claim, g.detail))),
            None => Ok(self),
        }
    }
}

/// Human-readable description of a witness.
pub fn describe_witness(w: &RWitness) -> String {
    let field = w.ideal.ring().field();
    let comps: Vec<String> = w.structure.components(field).iter().map(|c| c.to_string()).collect();
    let args: Vec<String> = w.args.iter().map(|a| a.to_string()).collect();
    let shape = match &w.structure {
        Structure::R1 { p, n } => format!("p = {}, n = {}", p, n),
        Structure::R2 { p, q } => format!("p = {}, q = {}", p, q),
        Structure::R3 { .. } => format!("chain = [{}]", comps.join("; ")),
    };
    format!("{}: {}, args = [{}]", w.family().name(), shape, args.join(", "))
}

/// The counterexample suite with the sequential search.
pub fn counterexample_suite(options: &SuiteOptions) -> Result<SuiteReport> {
    counterexample_suite_with(options, &|f, i, fam, b, k| search_witness(f, i, fam, b, k))
}

type Searcher<'a> = dyn Fn(&Polynomial, &Ideal, Family, SearchBounds, &FieldSpec) -> Result<SearchOutcome> + 'a;

/// The counterexample suite over `GF(2)[X1, X2]` with `I = ⟨X1⟩`, running
/// searches through `search`:
///
/// * (a) `I + Γ_2 = ⟨X1, X2^2 − X2⟩`, and it equals the vanishing ideal of
///   the enumerated zero set;
/// * (b) that ideal is not homogeneous;
/// * (c) no R1, R2 or R3 witness for `X2^2 − X2` exists within the bounds;
/// * (d) witnesses for `X1` exist in all three families.
pub fn counterexample_suite_with(options: &SuiteOptions, search: &Searcher<'_>) -> Result<SuiteReport> {
    let ring = counterexample_ring();
    let field = ring.field().clone();
    let ideal = match &options.ideal {
        Some(i) => {
            ring.check(i.ring())?;
            i.clone()
        }
        None => Ideal::parse(&ring, &["X1"])?,
    };
    let cfg = NullConfig::over(field.clone());
    let expected = Ideal::parse(&ring, &["X1", "X2^2 - X2"])?;
    let vanishing = affine_vanishing(&ideal, &cfg)?;
    let mut groups = Vec::new();

    let variety = zero_set(&ideal, &field, SpaceKind::Affine)?;
    let (a_ok, a_detail) = if !vanishing.equals(&expected)? {
        (false, "I + Γ_2 differs from ⟨X1, X2^2 − X2⟩".to_string())
    } else {
        match oracle_vanishing_ideal(&variety, &ring) {
            Ok(o) if o.equals(&vanishing)? => (true, format!("oracle over {} points agrees", variety.len())),
            Ok(_) => (false, "oracle differs".to_string()),
            Err(e) => (false, format!("oracle failed: {}", e)),
        }
    };
    groups.push(SuiteGroup {
        label: "a",
        claim: "affine vanishing ideal of ⟨X1⟩ is ⟨X1, X2^2 − X2⟩",
        passed: a_ok,
        vacuous: false,
        detail: a_detail,
    });

    let homogeneous = vanishing.is_homogeneous()?;
    groups.push(SuiteGroup {
        label: "b",
        claim: "the vanishing ideal is not homogeneous",
        passed: !homogeneous,
        vacuous: false,
        detail: format!("is_homogeneous = {}", homogeneous),
    });

    let mut searches = Vec::new();
    let f = ring.parse("X2^2 - X2")?;
    let mut c_ok = true;
    let mut c_total = 0;
    let mut c_detail = Vec::new();
    for fam in Family::ALL {
        let out = search(&f, &ideal, fam, options.bounds, &field)?;
        c_total += out.candidates();
        c_ok &= out.witness().is_none();
        c_detail.push(format!("{} {}", fam.name(), summary_word(&out)));
        searches.push(summarize(fam, &f, &out));
    }
    groups.push(SuiteGroup {
        label: "c",
        claim: "no R1/R2/R3 witness for X2^2 − X2 within bounds",
        passed: c_ok,
        vacuous: c_ok && c_total == 0,
        detail: c_detail.join("; "),
    });

    let x1 = ring.parse("X1")?;
    let mut d_ok = true;
    let mut d_detail = Vec::new();
    for fam in Family::ALL {
        let out = search(&x1, &ideal, fam, options.bounds, &field)?;
        let verified = match out.witness() {
            Some(w) => w.verify(&field)?,
            None => false,
        };
        d_ok &= verified;
        d_detail.push(format!("{} {}", fam.name(), summary_word(&out)));
        searches.push(summarize(fam, &x1, &out));
    }
    groups.push(SuiteGroup {
        label: "d",
        claim: "positive controls: X1 has witnesses in R1, R2 and R3",
        passed: d_ok,
        vacuous: false,
        detail: d_detail.join("; "),
    });

    Ok(SuiteReport {
        ideal: ideal.generators().iter().map(|g| g.to_string()).collect(),
        vanishing: vanishing.gb()?.generators().iter().map(|g| g.to_string()).collect(),
        groups,
        searches,
    })
}

fn summary_word(out: &SearchOutcome) -> String {
    match out {
        SearchOutcome::Found { candidates, .. } => format!("found after {} candidates", candidates),
        SearchOutcome::Exhausted(r) => format!("exhausted after {} candidates", r.candidates),
    }
}

fn summarize(family: Family, target: &Polynomial, out: &SearchOutcome) -> SearchSummary {
    SearchSummary {
        family,
        target: target.to_string(),
        exhausted: out.witness().is_none(),
        candidates: out.candidates(),
        witness: out.witness().map(describe_witness),
    }
}

/// A homogeneous `I` for which `I + Γ_q*` differs from its projective
/// vanishing ideal, with an element of the difference.
#[derive(Clone, Debug)]
pub struct NonradicalInstance {
    pub ideal: Ideal,
    /// `I + Γ_q*`.
    pub sum: Ideal,
    /// `(I + Γ_q*) : ⟨X_0^d, …, X_n^d⟩`.
    pub colon: Ideal,
    /// In the radical of `sum` but not in `sum`.
    pub witness: Polynomial,
    /// Ideals examined, including this one.
    pub examined: usize,
}

/// Homogeneous ideals with at most two monic generators of degree
/// `1..=max_deg` in `n + 1` variables over `GF(q)`, in search order: the
/// zero ideal, then single generators, then pairs `(g_i, g_j)` with `i < j`.
pub fn small_homogeneous_ideals(ring: &Ring, max_deg: u32) -> Result<Vec<Ideal>> {
    let mut forms = Vec::new();
    for d in 1..=max_deg {
        forms.extend(forms_of_degree(ring, d)?);
    }
    let mut out = vec![Ideal::zero(ring)];
    for g in &forms {
        out.push(Ideal::new(ring, vec![g.clone()])?);
    }
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            out.push(Ideal::new(ring, vec![forms[i].clone(), forms[j].clone()])?);
        }
    }
    Ok(out)
}

/// Finds the first ideal in [`small_homogeneous_ideals`] order with a
/// nonempty projective zero set and `I + Γ_q*` not equal to the colon
/// ideal. The witness is the first basis element of the colon ideal outside
/// `I + Γ_q*`, checked to lie in its radical.
pub fn find_nonradical_instance(q: u32, n: usize, max_deg: u32) -> Result<Option<NonradicalInstance>> {
    let field = FieldSpec::of_order(q)?;
    let ring = Ring::with_indexed_vars(field.clone(), "X", n + 1)?;
    let cfg = NullConfig::over(field.clone());
    let star = gamma_q_star(&ring, q);
    for (k, ideal) in small_homogeneous_ideals(&ring, max_deg)?.into_iter().enumerate() {
        if zero_set(&ideal, &field, SpaceKind::Projective)?.is_empty() {
            continue;
        }
        let sum = ideal.sum(&star)?;
        let (colon, _) = projective_vanishing(&ideal, &cfg)?;
        if colon.equals(&sum)? {
            continue;
        }
        let mut witness = None;
        for g in colon.gb()?.generators() {
            if !sum.contains(g)? {
                witness = Some(g.clone());
                break;
            }
        }
        let witness = witness.expect("the colon ideal contains the sum, so unequal bases leave an element outside");
        if !sum.radical_contains(&witness)? {
            return Err(Error::CertificateCheck(format!(
                "{} is in the colon ideal but not in the radical of I + Γ_q*",
                witness
            )));
        }
        return Ok(Some(NonradicalInstance {
            ideal,
            sum,
            colon,
            witness,
            examined: k + 1,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn y(n: usize) -> Ring {
        Ring::with_indexed_vars(gf2(), "y", n).unwrap()
    }

    #[test]
    fn form_class_examples() {
        let k = gf2();
        let y2 = y(2);
        let p = y2.parse("y0^2 + y0*y1 + y1^2").unwrap();
        assert!(check_form_class(&p, FormKind::PK0, &k).unwrap());
        let y0 = y2.var(0);
        assert!(!check_form_class(&y0, FormKind::PK0, &k).unwrap());
        assert!(check_form_class(&y0, FormKind::PK, &k).unwrap());
        let prod = y2.parse("y0*y1").unwrap();
        assert!(!check_form_class(&prod, FormKind::PK, &k).unwrap());
        assert!(!check_form_class(&y2.parse("y0^2 + y1").unwrap(), FormKind::PK, &k).unwrap());
        assert!(check_form_class(&y(1).var(0), FormKind::PK0, &k).unwrap());
        // anisotropic over GF(2) but not over GF(4)
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert!(!check_form_class(&p, FormKind::PK0, &f4).unwrap());
        assert!(FormClass::try_new(p, FormKind::PK0, &k).unwrap().is_some_and(|c| c.m() == 1));
    }

    #[test]
    fn kradical_verification() {
        let r = counterexample_ring();
        let k = gf2();
        let i = Ideal::parse(&r, &["X1"]).unwrap();
        let y1 = y(1);
        let x1 = r.parse("X1").unwrap();
        assert!(verify_kradical_witness(&x1, &i, &y1.var(0), &[], &k).unwrap());
        let f = r.parse("X2^2 - X2").unwrap();
        assert!(!verify_kradical_witness(&f, &i, &y1.var(0), &[], &k).unwrap());
        let nonhom = y(2).parse("y0^2 + y1").unwrap();
        assert!(!verify_kradical_witness(&x1, &i, &nonhom, &[r.zero()], &k).unwrap());
        assert!(matches!(
            verify_kradical_witness(&x1, &i, &y1.var(0), core::slice::from_ref(&x1), &k),
            Err(Error::ArityMismatch { .. })
        ));
        // p(f, f) = 0 in characteristic 2, but p vanishes at (1, 1)
        let p = y(2).parse("y0^2 + y0*y1").unwrap();
        assert!(!check_form_class(&p, FormKind::PK, &k).unwrap());
        assert!(!verify_kradical_witness(&f, &i, &p, core::slice::from_ref(&f), &k).unwrap());
        let q = y(2).parse("y0^2 + y0*y1 + y1^2").unwrap();
        assert!(verify_kradical_witness(&x1, &i, &q, core::slice::from_ref(&x1), &k).unwrap());
    }

    #[test]
    fn enumerations() {
        let r = counterexample_ring();
        assert_eq!(polynomials_up_to_degree(&r, 2).unwrap().len(), 64);
        assert_eq!(polynomials_up_to_degree(&r, 0).unwrap().len(), 2);
        let y3 = y(3);
        assert_eq!(forms_of_degree(&y3, 2).unwrap().len(), 63);
        let f3 = Ring::with_indexed_vars(FieldSpec::prime(3).unwrap(), "y", 2).unwrap();
        let forms = forms_of_degree(&f3, 1).unwrap();
        assert_eq!(forms.len(), 4);
        assert!(forms.iter().all(|p| p.leading_term(MonomialOrder::DegRevLex).unwrap().1 == 1));
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(0, 1).is_empty());
    }

    #[test]
    fn positive_controls() {
        let r = counterexample_ring();
        let k = gf2();
        let i = Ideal::parse(&r, &["X1"]).unwrap();
        let x1 = r.parse("X1").unwrap();
        for fam in Family::ALL {
            let out = search_witness(&x1, &i, fam, SearchBounds::default(), &k).unwrap();
            let w = out.witness().expect("witness");
            assert!(w.verify(&k).unwrap());
            assert_eq!(w.family(), fam);
            if fam == Family::R1 {
                assert_eq!(out.candidates(), 1);
                assert_eq!(w.structure, Structure::R1 { p: y(1).var(0), n: 1 });
            }
        }
        let both = Ideal::parse(&r, &["X1", "X2^2 - X2"]).unwrap();
        let f = r.parse("X2^2 - X2").unwrap();
        let out = search_witness(&f, &both, Family::R1, SearchBounds::default(), &k).unwrap();
        assert!(out.witness().is_some());
    }

    #[test]
    fn conversions_preserve_composite() {
        let k = gf2();
        let r = counterexample_ring();
        let i = Ideal::parse(&r, &["X1"]).unwrap();
        let w = RWitness {
            structure: Structure::R1 {
                p: y(2).parse("y0^2 + y0*y1 + y1^2").unwrap(),
                n: 2,
            },
            args: vec![r.parse("X1").unwrap()],
            target: r.parse("X1").unwrap(),
            ideal: i,
        };
        assert!(w.verify(&k).unwrap());
        let base = w.structure.composite(&k).unwrap();
        assert_eq!(base, y(2).parse("y0^4 + y0^2*y1 + y1^2").unwrap());
        let w2 = w.convert(Family::R2).unwrap();
        let w3 = w.convert(Family::R3).unwrap();
        assert_eq!(w2.structure.composite(&k).unwrap(), base);
        assert_eq!(w3.structure.composite(&k).unwrap(), base);
        assert_eq!(w3.structure.breakpoints(&k), [0, 1]);
        assert!(w2.verify(&k).unwrap() && w3.verify(&k).unwrap());
        assert!(w3.convert(Family::R1).is_none());
    }

    #[test]
    fn small_bounds_exhaust() {
        let r = counterexample_ring();
        let k = gf2();
        let i = Ideal::parse(&r, &["X1"]).unwrap();
        let f = r.parse("X2^2 - X2").unwrap();
        let bounds = SearchBounds {
            max_m: 1,
            max_deg_p: 2,
            max_deg_args: 1,
            max_chain: 2,
            max_inner_exp: 2,
        };
        for fam in Family::ALL {
            match search_witness(&f, &i, fam, bounds, &k).unwrap() {
                SearchOutcome::Exhausted(rep) => {
                    assert!(rep.candidates > 0);
                    assert_eq!(rep.arg_space, 8);
                    assert_eq!(rep.arg_classes, 4);
                }
                SearchOutcome::Found { witness, .. } => panic!("{}", describe_witness(&witness)),
            }
        }
        let zero = search_witness(&f, &i, Family::R3, SearchBounds::ZERO, &k).unwrap();
        assert!(matches!(zero, SearchOutcome::Exhausted(ref r) if r.is_vacuous()));
    }

    #[test]
    fn partitions_merge_like_sequential_run() {
        let r = counterexample_ring();
        let k = gf2();
        let i = Ideal::parse(&r, &["X1*X2 + X2", "X1^2"]).unwrap();
        let f = r.parse("X1").unwrap();
        let bounds = SearchBounds {
            max_m: 1,
            max_deg_p: 3,
            max_deg_args: 1,
            max_chain: 2,
            max_inner_exp: 2,
        };
        for fam in Family::ALL {
            let plan = SearchPlan::new(&f, &i, fam, bounds, &k).unwrap();
            let all: Vec<_> = (0..plan.partition_count()).rev().map(|p| plan.run_partition(p).unwrap()).collect();
            let merged = plan.merge(all.into_iter().rev().collect());
            let seq = plan.run().unwrap();
            assert_eq!(merged.candidates(), seq.candidates());
            assert_eq!(
                merged.witness().map(describe_witness),
                seq.witness().map(describe_witness)
            );
            let w = seq.witness().expect("X1^2 ∈ I");
            assert!(w.verify(&k).unwrap());
        }
    }

    #[test]
    fn suite_negative_controls() {
        let ring = counterexample_ring();
        let zeroed = SuiteOptions {
            bounds: SearchBounds::ZERO,
            ideal: None,
        };
        let report = counterexample_suite(&zeroed).unwrap();
        let c = &report.groups[2];
        assert!(c.passed && c.vacuous);
        assert!(!report.groups[3].passed);

        let unit = SuiteOptions {
            bounds: SearchBounds {
                max_m: 0,
                max_deg_p: 1,
                max_deg_args: 0,
                max_chain: 1,
                max_inner_exp: 1,
            },
            ideal: Some(Ideal::unit(&ring)),
        };
        let report = counterexample_suite(&unit).unwrap();
        assert!(!report.groups[0].passed);
        match report.into_result() {
            Err(Error::SuiteFailure(msg)) => assert!(msg.starts_with("(a)")),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn nonradical_search_boundaries() {
        assert!(find_nonradical_instance(2, 0, 2).unwrap().is_none());
        let found = find_nonradical_instance(2, 1, 2).unwrap().expect("instance");
        assert!(!found.sum.contains(&found.witness).unwrap());
        assert!(found.sum.radical_contains(&found.witness).unwrap());
        assert!(found.colon.contains(&found.witness).unwrap());
    }
}
