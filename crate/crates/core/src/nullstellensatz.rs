//! Vanishing ideals over finite fields from explicit formulas.
//!
//! Write `q` for the size of the field `K` of points and `k` for the field
//! of coefficients.
//!
//! * `Γ_q = ⟨X_i^q − X_i⟩` is the vanishing ideal of affine space, and
//!   `I + Γ_q` is the vanishing ideal of the affine zero set of `I`.
//! * `Γ_q* = ⟨X_i^q X_j − X_j^q X_i : i < j⟩` is the vanishing ideal of
//!   projective space. For a homogeneous `I = ⟨h_1, …, h_r⟩` with
//!   `d = (deg h_1 + ⋯ + deg h_r)(q − 1) + 1`, the projective vanishing
//!   ideal is the single quotient `(I + Γ_q*) : ⟨X_0^d, …, X_n^d⟩`, which
//!   also equals the saturation of `I + Γ_q*` by `⟨X_0, …, X_n⟩`.
//! * A homogeneous ideal without projective zeros is either the unit ideal
//!   or satisfies `I + Γ_q = ⟨X_0, …, X_n⟩`.
//!
//! Supported towers: `k = K`, `k` the prime field of `K`, or `K` the prime
//! field of `k`. In the last case generators must have coefficients in `K`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::Ideal;
use crate::poly::{Polynomial, Ring};
use crate::varieties::{enumerate_space, oracle_vanishing_ideal, zero_set, SpaceKind, Variety};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    #[default]
    Colon,
    Saturation,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Colon, Method::Saturation, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Colon => "colon",
            Method::Saturation => "saturation",
            Method::Oracle => "oracle",
        }
    }
}

/// Coefficient field, point field and projective method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullConfig {
    coeffs: FieldSpec,
    points: FieldSpec,
    pub method: Method,
}

impl NullConfig {
    /// Fails with `FieldMismatch` unless one field contains the other.
    pub fn new(coeffs: FieldSpec, points: FieldSpec, method: Method) -> Result<NullConfig> {
        if coeffs.join(&points).is_none() {
            return Err(Error::FieldMismatch);
        }
        Ok(NullConfig { coeffs, points, method })
    }

    /// Coefficients and points in the same field.
    pub fn over(field: FieldSpec) -> NullConfig {
        NullConfig {
            coeffs: field.clone(),
            points: field,
            method: Method::Colon,
        }
    }

    pub fn with_method(mut self, method: Method) -> NullConfig {
        self.method = method;
        self
    }

    pub fn coeffs(&self) -> &FieldSpec {
        &self.coeffs
    }

    pub fn points(&self) -> &FieldSpec {
        &self.points
    }

    /// Size of the point field.
    pub fn q(&self) -> u32 {
        self.points.order()
    }

    /// Checks that `ideal` lives over the coefficient field and, when the
    /// coefficients form a proper extension of the point field, that every
    /// generator has coefficients in the point field.
    fn check(&self, ideal: &Ideal) -> Result<()> {
        if ideal.ring().field() != &self.coeffs {
            return Err(Error::FieldMismatch);
        }
        if self.coeffs != self.points && self.coeffs.contains(&self.points) {
            for g in ideal.generators() {
                if !g.coefficients_in(&self.points) {
                    return Err(Error::MixedCoefficients(self.points.order()));
                }
            }
        }
        Ok(())
    }
}

/// `⟨X_i^q − X_i⟩` over the ring's field.
pub fn gamma_q(ring: &Ring, q: u32) -> Ideal {
    let gens = (0..ring.nvars()).map(|i| &ring.var_power(i, q) - &ring.var(i)).collect();
    Ideal::new(ring, gens).expect("generators built in the ring")
}

/// `⟨X_i^q X_j − X_j^q X_i : i < j⟩` over the ring's field.
pub fn gamma_q_star(ring: &Ring, q: u32) -> Ideal {
    let mut gens = Vec::new();
    for i in 0..ring.nvars() {
        for j in i + 1..ring.nvars() {
            let a = &ring.var_power(i, q) * &ring.var(j);
            let b = &ring.var_power(j, q) * &ring.var(i);
            gens.push(&a - &b);
        }
    }
    Ideal::new(ring, gens).expect("generators built in the ring")
}

/// `I + Γ_q`, returned with its reduced basis computed. It is the unit ideal
/// exactly when `I` has no zeros over the point field.
pub fn affine_vanishing(ideal: &Ideal, cfg: &NullConfig) -> Result<Ideal> {
    cfg.check(ideal)?;
    let sum = ideal.sum(&gamma_q(ideal.ring(), cfg.q()))?;
    Ok(Ideal::from_basis(sum.gb()?.clone()))
}

fn check_homogeneous_generators(ideal: &Ideal) -> Result<()> {
    for (index, g) in ideal.generators().iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneousGenerator { index });
        }
    }
    Ok(())
}

/// `(d_1 + ⋯ + d_r)(q − 1) + 1` for the nonzero stored generators. This
/// depends on the presentation of the ideal, not only on the ideal.
pub fn degree_bound(ideal: &Ideal, q: u32) -> Result<u32> {
    check_homogeneous_generators(ideal)?;
    let total: u32 = ideal.nonzero_generators().filter_map(Polynomial::total_degree).sum();
    total
        .checked_mul(q - 1)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::DegreeOverflow("degree bound"))
}

fn power_ideal(ring: &Ring, d: u32) -> Ideal {
    let gens = (0..ring.nvars()).map(|i| ring.var_power(i, d)).collect();
    Ideal::new(ring, gens).expect("generators built in the ring")
}

/// `⟨X_0, …, X_n⟩`.
pub fn irrelevant_ideal(ring: &Ring) -> Ideal {
    power_ideal(ring, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub method: Method,
    /// The exponent of the colon ideal (colon method only).
    pub d: Option<u32>,
    /// Number of ideal quotients computed.
    pub quotient_rounds: usize,
    pub gb_size: usize,
}

/// The vanishing ideal of the projective zero set of a homogeneous ideal,
/// by the configured method. The zero set must be nonempty; empty zero sets
/// are handled by [`classify_empty`].
pub fn projective_vanishing(ideal: &Ideal, cfg: &NullConfig) -> Result<(Ideal, VanishingReport)> {
    cfg.check(ideal)?;
    check_homogeneous_generators(ideal)?;
    let ring = ideal.ring();
    let variety = zero_set(ideal, &cfg.points, SpaceKind::Projective)?;
    if variety.is_empty() {
        return Err(Error::EmptyVariety);
    }
    let (result, d, rounds) = match cfg.method {
        Method::Colon => {
            let d = degree_bound(ideal, cfg.q())?;
            let j = ideal.sum(&gamma_q_star(ring, cfg.q()))?;
            (j.quotient(&power_ideal(ring, d))?, Some(d), 1)
        }
        Method::Saturation => {
            let j = ideal.sum(&gamma_q_star(ring, cfg.q()))?;
            let (s, rounds) = j.saturate(&irrelevant_ideal(ring))?;
            (s, None, rounds)
        }
        Method::Oracle => (oracle_vanishing_ideal(&variety, ring)?, None, 0),
    };
    let result = Ideal::from_basis(result.gb()?.clone());
    let report = VanishingReport {
        method: cfg.method,
        d,
        quotient_rounds: rounds,
        gb_size: result.gb()?.len(),
    };
    Ok((result, report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Emptiness {
    Nonempty,
    /// `1 ∈ I`.
    EmptyUnit,
    /// `I` is proper and `I + Γ_q = ⟨X_0, …, X_n⟩`.
    EmptyIrrelevant,
}

impl Emptiness {
    pub fn name(self) -> &'static str {
        match self {
            Emptiness::Nonempty => "nonempty",
            Emptiness::EmptyUnit => "empty_unit",
            Emptiness::EmptyIrrelevant => "empty_irrelevant",
        }
    }
}

/// Decides whether a homogeneous ideal has projective zeros by enumeration,
/// and for an empty zero set verifies which side of the dichotomy holds.
pub fn classify_empty(ideal: &Ideal, cfg: &NullConfig) -> Result<Emptiness> {
    cfg.check(ideal)?;
    check_homogeneous_generators(ideal)?;
    if !zero_set(ideal, &cfg.points, SpaceKind::Projective)?.is_empty() {
        return Ok(Emptiness::Nonempty);
    }
    if ideal.is_unit()? {
        return Ok(Emptiness::EmptyUnit);
    }
    let ring = ideal.ring();
    let sum = ideal.sum(&gamma_q(ring, cfg.q()))?;
    let gb = sum.gb()?;
    if gb.is_unit() {
        return Err(Error::ClassificationFailure(format!(
            "I is proper but I + Γ_{} is the unit ideal",
            cfg.q()
        )));
    }
    for i in 0..ring.nvars() {
        if !gb.contains(&ring.var(i))? {
            return Err(Error::ClassificationFailure(format!(
                "{} is not in I + Γ_{}",
                ring.var_names()[i],
                cfg.q()
            )));
        }
    }
    Ok(Emptiness::EmptyIrrelevant)
}

/// `X_j^d = g_j + ℓ_j` with `g_j ∈ I` vanishing on the zero set and `ℓ_j`
/// vanishing off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub j: usize,
    pub d: u32,
    pub g: Polynomial,
    pub l: Polynomial,
}

/// `g_j = X_j^d − X_j·∏(X_j^{d_i(q−1)} − h_i^{q−1})` and `ℓ_j = X_j^d − g_j`
/// over the nonzero generators `h_i`, with every claimed property checked.
pub fn make_certificate(ideal: &Ideal, j: usize, cfg: &NullConfig) -> Result<Certificate> {
    cfg.check(ideal)?;
    check_homogeneous_generators(ideal)?;
    let ring = ideal.ring();
    if j >= ring.nvars() {
        return Err(Error::VariableIndex {
            index: j,
            nvars: ring.nvars(),
        });
    }
    let hs: Vec<&Polynomial> = ideal.nonzero_generators().collect();
    if hs.is_empty() {
        return Err(Error::ZeroGeneratorCount);
    }
    let variety = zero_set(ideal, &cfg.points, SpaceKind::Projective)?;
    if variety.is_empty() {
        return Err(Error::EmptyVariety);
    }
    let q = cfg.q();
    let d = degree_bound(ideal, q)?;
    let mut l = ring.var(j);
    for h in &hs {
        let di = h.total_degree().unwrap_or(0);
        l = &l * &(&ring.var_power(j, di * (q - 1)) - &h.pow(q - 1));
    }
    let g = &ring.var_power(j, d) - &l;
    let cert = Certificate { j, d, g, l };
    verify_certificate(ideal, &cert, &variety)?;
    Ok(cert)
}

fn verify_certificate(ideal: &Ideal, cert: &Certificate, variety: &Variety) -> Result<()> {
    let ring = ideal.ring();
    if &cert.g + &cert.l != ring.var_power(cert.j, cert.d) {
        return Err(Error::CertificateCheck(format!("g_{0} + ℓ_{0} ≠ X_{0}^d", cert.j)));
    }
    if !cert.g.is_zero() && cert.g.homogeneous_components().iter().any(|&(deg, _)| deg != cert.d) {
        return Err(Error::CertificateCheck(format!("g_{} is not homogeneous of degree {}", cert.j, cert.d)));
    }
    if !ideal.contains(&cert.g)? {
        return Err(Error::CertificateCheck(format!("g_{} is not in I", cert.j)));
    }
    let big = ring.field().join(variety.field()).ok_or(Error::FieldMismatch)?;
    let space = enumerate_space(variety.field(), variety.dimension(), SpaceKind::Projective)?;
    for a in space.raw_points() {
        let (poly, name) = if variety.contains(a) { (&cert.g, "g") } else { (&cert.l, "ℓ") };
        if poly.eval_in(&big, a) != 0 {
            return Err(Error::CertificateCheck(format!("{}_{} does not vanish where required", name, cert.j)));
        }
    }
    Ok(())
}

/// `X_j^d·f = g_j·f + ℓ_j·f` with `g_j·f ∈ I` and `ℓ_j·f ∈ Γ_q*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub certificate: Certificate,
    pub target: Polynomial,
    pub g_part: Polynomial,
    pub l_part: Polynomial,
}

/// One decomposition per variable for an `f` in the projective vanishing
/// ideal. Without nonzero generators the certificates degenerate to
/// `g_j = 0`, `ℓ_j = X_j` and `d = 1`.
pub fn certify_membership(f: &Polynomial, ideal: &Ideal, cfg: &NullConfig) -> Result<Vec<Decomposition>> {
    let ring = ideal.ring();
    ring.check(f.ring())?;
    let (vanishing, _) = projective_vanishing(ideal, &cfg.clone().with_method(Method::Colon))?;
    if !vanishing.contains(f)? {
        return Err(Error::NotInVanishingIdeal);
    }
    let star = gamma_q_star(ring, cfg.q());
    let degenerate = ideal.nonzero_generators().next().is_none();
    let mut out = Vec::with_capacity(ring.nvars());
    for j in 0..ring.nvars() {
        let certificate = if degenerate {
            Certificate {
                j,
                d: 1,
                g: ring.zero(),
                l: ring.var(j),
            }
        } else {
            make_certificate(ideal, j, cfg)?
        };
        let target = &ring.var_power(j, certificate.d) * f;
        let g_part = &certificate.g * f;
        let l_part = &certificate.l * f;
        if &g_part + &l_part != target {
            return Err(Error::CertificateCheck(format!("decomposition of X_{}^d·f does not add up", j)));
        }
        if !ideal.contains(&g_part)? {
            return Err(Error::CertificateCheck(format!("g_{}·f is not in I", j)));
        }
        if !star.contains(&l_part)? {
            return Err(Error::CertificateCheck(format!("ℓ_{}·f is not in Γ_q*", j)));
        }
        out.push(Decomposition {
            certificate,
            target,
            g_part,
            l_part,
        });
    }
    Ok(out)
}
