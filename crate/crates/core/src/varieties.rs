//! Rational points of affine and projective space, zero sets, and the
//! point-enumeration oracle for vanishing ideals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldElement, FieldSpec};
use crate::ideals::Ideal;
use crate::poly::{Polynomial, Ring};

/// Largest number of points a space may have before enumeration refuses.
pub const MAX_POINTS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Affine,
    Projective,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePoint {
    coords: Vec<FieldElement>,
}

impl AffinePoint {
    pub fn new(coords: Vec<FieldElement>) -> AffinePoint {
        AffinePoint { coords }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// `⟨X_1 − a_1, …, X_n − a_n⟩`. Coordinates must lie in the ring's field.
    pub fn ideal(&self, ring: &Ring) -> Result<Ideal> {
        check_arity(ring, self.coords.len())?;
        let field = ring.field();
        let mut gens = Vec::with_capacity(self.coords.len());
        for (i, a) in self.coords.iter().enumerate() {
            let a = a.embed(field)?;
            gens.push(&ring.var(i) - &ring.constant(a.value()));
        }
        Ideal::new(ring, gens)
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.coords, "(", ",", ")")
    }
}

/// A point of projective space, normalized so that its first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoint {
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    /// Normalizes a nonzero coordinate vector.
    pub fn new(coords: Vec<FieldElement>) -> Result<ProjectivePoint> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::InvalidElement)?;
        let inv = lead.inv()?;
        let coords = coords.iter().map(|c| c.mul(&inv)).collect::<Result<Vec<_>>>()?;
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// The 2×2 minors `⟨a_j X_i − a_i X_j : i < j⟩`.
    pub fn ideal(&self, ring: &Ring) -> Result<Ideal> {
        check_arity(ring, self.coords.len())?;
        let field = ring.field();
        let a = self
            .coords
            .iter()
            .map(|c| c.embed(field).map(|c| c.value()))
            .collect::<Result<Vec<Elem>>>()?;
        let mut gens = Vec::new();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                let g = &ring.var(i).scale(a[j]) - &ring.var(j).scale(a[i]);
                if !g.is_zero() {
                    gens.push(g);
                }
            }
        }
        Ideal::new(ring, gens)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.coords, "[", ":", "]")
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, coords: &[FieldElement], open: &str, sep: &str, close: &str) -> fmt::Result {
    f.write_str(open)?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{}", c)?;
    }
    f.write_str(close)
}

fn check_arity(ring: &Ring, len: usize) -> Result<()> {
    if ring.nvars() != len {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            got: len,
        });
    }
    Ok(())
}

/// A finite set of rational points, stored as encoded coordinate vectors in
/// ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variety {
    kind: SpaceKind,
    field: FieldSpec,
    n: usize,
    points: Vec<Vec<Elem>>,
}

impl Variety {
    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Dimension of the ambient space.
    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Number of coordinates per point.
    pub fn coordinate_count(&self) -> usize {
        match self.kind {
            SpaceKind::Affine => self.n,
            SpaceKind::Projective => self.n + 1,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Encoded coordinates of each point.
    pub fn raw_points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn contains(&self, coords: &[Elem]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(coords)).is_ok()
    }

    fn elements(&self, raw: &[Elem]) -> Vec<FieldElement> {
        raw.iter().map(|&x| self.field.from_encoding(x).expect("stored encodings are valid")).collect()
    }

    pub fn affine_points(&self) -> impl Iterator<Item = AffinePoint> + '_ {
        self.points.iter().map(|p| AffinePoint::new(self.elements(p)))
    }

    pub fn projective_points(&self) -> impl Iterator<Item = ProjectivePoint> + '_ {
        self.points.iter().map(|p| ProjectivePoint {
            coords: self.elements(p),
        })
    }

    /// Each point formatted as `(a1,…,an)` or `[a0:…:an]`.
    pub fn point_strings(&self) -> Vec<alloc::string::String> {
        use alloc::string::ToString;
        match self.kind {
            SpaceKind::Affine => self.affine_points().map(|p| p.to_string()).collect(),
            SpaceKind::Projective => self.projective_points().map(|p| p.to_string()).collect(),
        }
    }

    /// Closure under the Frobenius map `x ↦ x^s` applied coordinatewise.
    fn frobenius_closure(&self, s: u32) -> Variety {
        let mut points = self.points.clone();
        let mut frontier = self.points.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                let image: Vec<Elem> = p.iter().map(|&x| self.field.pow(x, s as u64)).collect();
                if let Err(at) = points.binary_search(&image) {
                    points.insert(at, image.clone());
                    next.push(image);
                }
            }
            frontier = next;
        }
        Variety {
            points,
            ..self.clone()
        }
    }
}

/// Number of points of `A^n` or `P^n` over a field with `q` elements.
pub fn space_size(q: u32, n: usize, kind: SpaceKind) -> Option<u64> {
    let q = q as u64;
    let qn = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(q))?;
    match kind {
        SpaceKind::Affine => Some(qn),
        SpaceKind::Projective => Some((qn.checked_mul(q)? - 1) / (q - 1)),
    }
}

/// All rational points of `A^n(F_q)` or `P^n(F_q)` in lexicographic order.
pub fn enumerate_space(field: &FieldSpec, n: usize, kind: SpaceKind) -> Result<Variety> {
    let size = space_size(field.order(), n, kind).filter(|&s| s <= MAX_POINTS);
    if size.is_none() {
        return Err(Error::SizeOverflow { limit: MAX_POINTS });
    }
    let width = match kind {
        SpaceKind::Affine => n,
        SpaceKind::Projective => n + 1,
    };
    let q = field.order();
    let mut points = Vec::with_capacity(size.unwrap_or(0) as usize);
    let mut cur = vec![0 as Elem; width];
    loop {
        let keep = match kind {
            SpaceKind::Affine => true,
            SpaceKind::Projective => cur.iter().find(|&&x| x != 0) == Some(&1),
        };
        if keep {
            points.push(cur.clone());
        }
        // odometer, last coordinate fastest
        let mut i = width;
        loop {
            if i == 0 {
                return Ok(Variety {
                    kind,
                    field: field.clone(),
                    n,
                    points,
                });
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < q {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// The points of the space over `points_field` at which every generator of
/// `ideal` vanishes. Projective zero sets require a homogeneous ideal and
/// test each homogeneous component of each generator.
pub fn zero_set(ideal: &Ideal, points_field: &FieldSpec, kind: SpaceKind) -> Result<Variety> {
    let ring = ideal.ring();
    let big = ring.field().join(points_field).ok_or(Error::FieldMismatch)?;
    let nvars = ring.nvars();
    let mut tests: Vec<Polynomial> = Vec::new();
    match kind {
        SpaceKind::Affine => tests.extend(ideal.nonzero_generators().cloned()),
        SpaceKind::Projective => {
            if !ideal.is_homogeneous()? {
                return Err(Error::NonHomogeneousProjective);
            }
            for g in ideal.nonzero_generators() {
                tests.extend(g.homogeneous_components().into_iter().map(|(_, c)| c));
            }
            if nvars == 0 {
                return Ok(Variety {
                    kind,
                    field: points_field.clone(),
                    n: 0,
                    points: Vec::new(),
                });
            }
        }
    }
    let n = match kind {
        SpaceKind::Affine => nvars,
        SpaceKind::Projective => nvars - 1,
    };
    let mut space = enumerate_space(points_field, n, kind)?;
    space
        .points
        .retain(|p| tests.iter().all(|g| g.eval_in(&big, p) == 0));
    Ok(space)
}

/// The ideal of all polynomials of `ring` vanishing on `variety`, computed as
/// the intersection of the point ideals in the variety's order.
///
/// When the ring's field is a proper subfield of the points' field the
/// variety is first closed under Frobenius; the vanishing ideal of a
/// Frobenius-stable set has a reduced basis with coefficients in the
/// subfield.
pub fn oracle_vanishing_ideal(variety: &Variety, ring: &Ring) -> Result<Ideal> {
    if variety.is_empty() {
        return Err(Error::EmptyVariety);
    }
    check_arity(ring, variety.coordinate_count())?;
    let coeffs = ring.field();
    let points_field = variety.field();
    if coeffs.contains(points_field) {
        return fold_point_ideals(variety, ring);
    }
    if !points_field.contains(coeffs) {
        return Err(Error::FieldMismatch);
    }
    let closed = variety.frobenius_closure(coeffs.order());
    let big_ring = ring.with_field(points_field.clone());
    let big = fold_point_ideals(&closed, &big_ring)?;
    let map: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
    let gb = big.gb()?;
    let gens = gb
        .generators()
        .iter()
        .map(|g| g.transfer(ring, &map))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

fn fold_point_ideals(variety: &Variety, ring: &Ring) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for coords in variety.raw_points() {
        let elems = variety.elements(coords);
        let point_ideal = match variety.kind() {
            SpaceKind::Affine => AffinePoint::new(elems).ideal(ring)?,
            SpaceKind::Projective => ProjectivePoint::new(elems)?.ideal(ring)?,
        };
        acc = Some(match acc {
            None => point_ideal,
            Some(prev) => prev.intersect(&point_ideal)?,
        });
    }
    let acc = acc.ok_or(Error::EmptyVariety)?;
    acc.gb()?;
    Ok(acc)
}

/// Point ideal for either kind of point, given as encoded coordinates over
/// `field`.
pub fn point_ideal(ring: &Ring, field: &FieldSpec, kind: SpaceKind, coords: &[Elem]) -> Result<Ideal> {
    let elems = coords.iter().map(|&x| field.from_encoding(x)).collect::<Result<Vec<_>>>()?;
    match kind {
        SpaceKind::Affine => AffinePoint::new(elems).ideal(ring),
        SpaceKind::Projective => ProjectivePoint::new(elems)?.ideal(ring),
    }
}
