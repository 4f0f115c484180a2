//! The acceptance criteria as runnable checks.
//!
//! Each criterion returns deterministic transcript lines (no timings) so
//! that runs can be compared byte for byte across thread counts. Corpus
//! loops run on the current rayon pool and keep corpus order.

use std::time::{Duration, Instant};

use nullkit_core::conjectures::{
    counterexample_suite_with, find_nonradical_instance, forms_of_degree, polynomials_up_to_degree,
    small_homogeneous_ideals, SuiteOptions,
};
use nullkit_core::nullstellensatz::{
    affine_vanishing, certify_membership, classify_empty, degree_bound, gamma_q, gamma_q_star, make_certificate,
    projective_vanishing, Emptiness, Method, NullConfig,
};
use nullkit_core::varieties::{enumerate_space, oracle_vanishing_ideal, zero_set, SpaceKind};
use nullkit_core::{FieldSpec, Ideal, Result, Ring};
use rayon::prelude::*;

use crate::parallel;

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "very weak nullstellensatz: oracle(A^n) = Γ_q, oracle(P^n) = Γ_q*"),
    (2, "affine formula I + Γ_2 equals the affine oracle"),
    (3, "colon, saturation and oracle agree on projective vanishing ideals"),
    (4, "worked example ⟨X0⟩ over GF(2): d, colon result, certificate"),
    (5, "emptiness dichotomy on empty projective zero sets"),
    (6, "colon uses one quotient, saturation needs several somewhere"),
    (7, "a non-radical I + Γ_2* exists for q=2, n=2, degree 2"),
    (8, "counterexample suite passes end to end"),
    (9, "determinism across runs and thread counts"),
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub passed: bool,
    /// Deterministic transcript.
    pub lines: Vec<String>,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn name(&self) -> &'static str {
        CRITERIA[self.id as usize - 1].1
    }

    /// `criterion N: PASS|FAIL <name> (<first transcript line>)`.
    pub fn summary(&self) -> String {
        format!(
            "criterion {}: {} {} ({})",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name(),
            self.lines.first().map_or("", String::as_str)
        )
    }

    pub fn transcript(&self) -> String {
        let mut s = format!("[{}] {}\n", self.id, if self.passed { "pass" } else { "fail" });
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s
    }
}

/// Runs criterion `id` (1 to 8; criterion 9 compares runs of the others).
pub fn run_criterion(id: u8) -> Result<CriterionResult> {
    let start = Instant::now();
    let (passed, lines) = match id {
        1 => criterion_1()?,
        2 => criterion_2()?,
        3 => criterion_3()?,
        4 => criterion_4()?,
        5 => criterion_5()?,
        6 => criterion_6()?,
        7 => criterion_7()?,
        8 => criterion_8()?,
        _ => panic!("criterion {} is not a standalone check", id),
    };
    Ok(CriterionResult {
        id,
        passed,
        lines,
        elapsed: start.elapsed(),
    })
}

/// Runs criteria 1 to 8 in order.
pub fn run_all() -> Result<Vec<CriterionResult>> {
    (1..=8).map(run_criterion).collect()
}

/// Criterion 9 from two or more complete runs of criteria 1 to 8.
pub fn determinism(runs: &[Vec<CriterionResult>]) -> CriterionResult {
    let start = Instant::now();
    let texts: Vec<String> = runs
        .iter()
        .map(|r| r.iter().map(CriterionResult::transcript).collect())
        .collect();
    let mut lines = vec![format!("{} runs compared", texts.len())];
    let mut passed = texts.len() >= 2;
    for (k, t) in texts.iter().enumerate().skip(1) {
        let same = *t == texts[0];
        passed &= same;
        lines.push(format!("run {} vs run 1: {}", k + 1, if same { "identical" } else { "DIFFERENT" }));
    }
    CriterionResult {
        id: 9,
        passed,
        lines,
        elapsed: start.elapsed(),
    }
}

fn gf(q: u32) -> FieldSpec {
    FieldSpec::of_order(q).expect("small prime powers have default moduli")
}

fn affine_ring(q: u32, n: usize) -> Ring {
    let names: Vec<String> = (1..=n).map(|i| format!("X{}", i)).collect();
    Ring::new(gf(q), names).expect("valid names")
}

fn projective_ring(q: u32, n: usize) -> Ring {
    Ring::with_indexed_vars(gf(q), "X", n + 1).expect("valid names")
}

fn basis_text(i: &Ideal) -> Result<String> {
    let gens: Vec<String> = i.gb()?.generators().iter().map(|g| g.to_string()).collect();
    Ok(format!("[{}]", gens.join(", ")))
}

fn same_basis(a: &Ideal, b: &Ideal) -> Result<bool> {
    Ok(a.gb()?.generators() == b.gb()?.generators())
}

fn criterion_1() -> Result<(bool, Vec<String>)> {
    let mut matched = 0;
    let mut lines = Vec::new();
    for q in [2, 3] {
        for n in [1, 2] {
            let ar = affine_ring(q, n);
            let space = enumerate_space(ar.field(), n, SpaceKind::Affine)?;
            let oracle = oracle_vanishing_ideal(&space, &ar)?;
            let a_ok = same_basis(&oracle, &gamma_q(&ar, q))?;
            let pr = projective_ring(q, n);
            let space = enumerate_space(pr.field(), n, SpaceKind::Projective)?;
            let poracle = oracle_vanishing_ideal(&space, &pr)?;
            let p_ok = same_basis(&poracle, &gamma_q_star(&pr, q))?;
            matched += usize::from(a_ok) + usize::from(p_ok);
            lines.push(format!("A^{}(GF({})) {} {}", n, q, mark(a_ok), basis_text(&oracle)?));
            lines.push(format!("P^{}(GF({})) {} {}", n, q, mark(p_ok), basis_text(&poracle)?));
        }
    }
    lines.insert(0, format!("{} of 8 spaces match", matched));
    Ok((matched == 8, lines))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

/// Principal ideals `⟨f⟩`, `f ≠ 0` of degree at most 2 in `GF(2)[X1, X2]`,
/// deduplicated by reduced basis.
pub fn affine_corpus() -> Result<Vec<Ideal>> {
    let ring = affine_ring(2, 2);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for f in polynomials_up_to_degree(&ring, 2)? {
        if f.is_zero() {
            continue;
        }
        let i = Ideal::new(&ring, vec![f])?;
        if seen.insert(basis_text(&i)?) {
            out.push(i);
        }
    }
    Ok(out)
}

fn criterion_2() -> Result<(bool, Vec<String>)> {
    let corpus = affine_corpus()?;
    let cfg = NullConfig::over(gf(2));
    let rows = corpus
        .par_iter()
        .map(|i| -> Result<Option<(bool, String)>> {
            let pts = zero_set(i, cfg.points(), SpaceKind::Affine)?;
            if pts.is_empty() {
                return Ok(None);
            }
            let formula = affine_vanishing(i, &cfg)?;
            let oracle = oracle_vanishing_ideal(&pts, i.ring())?;
            let ok = same_basis(&formula, &oracle)?;
            Ok(Some((ok, format!("{:?} {} {}", i, mark(ok), basis_text(&formula)?))))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<_> = rows.into_iter().flatten().collect();
    let agree = rows.iter().filter(|r| r.0).count();
    let mut lines = vec![format!(
        "{}/{} ideals with nonempty zero set agree ({} generators)",
        agree,
        rows.len(),
        corpus.len()
    )];
    lines.extend(rows.iter().map(|r| r.1.clone()));
    Ok((agree == rows.len() && !rows.is_empty(), lines))
}

/// Principal ideals generated by a monic form of degree 1 or 2 in
/// `GF(2)[X0, X1, X2]`.
pub fn projective_corpus() -> Result<Vec<Ideal>> {
    let ring = projective_ring(2, 2);
    let mut out = Vec::new();
    for d in 1..=2 {
        for f in forms_of_degree(&ring, d)? {
            out.push(Ideal::new(&ring, vec![f])?);
        }
    }
    Ok(out)
}

/// Per ideal with a nonempty zero set: agreement and the quotient rounds
/// of the colon and saturation methods.
struct ProjectiveRow {
    ideal: String,
    agree: bool,
    colon_rounds: usize,
    saturation_rounds: usize,
    basis: String,
}

fn projective_rows() -> Result<(usize, Vec<ProjectiveRow>)> {
    let corpus = projective_corpus()?;
    let rows = corpus
        .par_iter()
        .map(|i| -> Result<Option<ProjectiveRow>> {
            let cfg = NullConfig::over(gf(2));
            if zero_set(i, cfg.points(), SpaceKind::Projective)?.is_empty() {
                return Ok(None);
            }
            let mut results = Vec::new();
            for m in Method::ALL {
                results.push(projective_vanishing(i, &cfg.clone().with_method(m))?);
            }
            let agree = same_basis(&results[0].0, &results[1].0)? && same_basis(&results[0].0, &results[2].0)?;
            Ok(Some(ProjectiveRow {
                ideal: format!("{:?}", i),
                agree,
                colon_rounds: results[0].1.quotient_rounds,
                saturation_rounds: results[1].1.quotient_rounds,
                basis: basis_text(&results[0].0)?,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((corpus.len(), rows.into_iter().flatten().collect()))
}

fn criterion_3() -> Result<(bool, Vec<String>)> {
    let (total, rows) = projective_rows()?;
    let agree = rows.iter().filter(|r| r.agree).count();
    let mut lines = vec![format!(
        "{}/{} ideals with nonempty zero set agree ({} generators)",
        agree,
        rows.len(),
        total
    )];
    lines.extend(rows.iter().map(|r| format!("{} {} {}", r.ideal, mark(r.agree), r.basis)));
    Ok((agree == rows.len() && !rows.is_empty(), lines))
}

fn criterion_4() -> Result<(bool, Vec<String>)> {
    let ring = projective_ring(2, 1);
    let i = Ideal::parse(&ring, &["X0"])?;
    let cfg = NullConfig::over(gf(2));
    let d = degree_bound(&i, 2)?;
    let (colon, _) = projective_vanishing(&i, &cfg)?;
    let cert = make_certificate(&i, 1, &cfg)?;
    let want_g = ring.parse("X0*X1")?;
    let want_l = ring.parse("X1^2 - X0*X1")?;
    let decomps = certify_membership(&ring.var(0), &i, &cfg)?;
    let mut checks = vec![
        ("d = 2", d == 2),
        ("colon result is ⟨X0⟩", same_basis(&colon, &i)?),
        ("g_1 = X0*X1", cert.g == want_g),
        ("ℓ_1 = X1^2 - X0*X1", cert.l == want_l),
        ("g_1 ∈ I", i.contains(&cert.g)?),
        ("one decomposition per variable", decomps.len() == 2),
    ];
    let star = gamma_q_star(&ring, 2);
    let mut all_members = true;
    for dec in &decomps {
        all_members &= i.contains(&dec.g_part)? && star.contains(&dec.l_part)?;
        all_members &= &dec.g_part + &dec.l_part == dec.target;
    }
    checks.push(("decompositions verified", all_members));
    let ok = checks.iter().all(|c| c.1);
    let mut lines = vec![format!(
        "d = {}, g_1 = {}, ℓ_1 = {}, colon = {}",
        d,
        cert.g,
        cert.l,
        basis_text(&colon)?
    )];
    lines.extend(checks.iter().map(|(name, ok)| format!("{} {}", name, mark(*ok))));
    for dec in &decomps {
        lines.push(format!(
            "X{}^{}*X0 = ({}) + ({})",
            dec.certificate.j, dec.certificate.d, dec.g_part, dec.l_part
        ));
    }
    Ok((ok, lines))
}

/// Homogeneous ideals used for the emptiness check: all ideals with at most
/// two monic generators of degree at most 2 in `P^1` over GF(2) and GF(3)
/// and in `P^2` over GF(2), the projective corpus, and the unit ideal.
pub fn emptiness_corpus() -> Result<Vec<(FieldSpec, Ideal)>> {
    let mut out = Vec::new();
    for (q, n) in [(2, 1), (3, 1), (2, 2)] {
        let ring = projective_ring(q, n);
        for i in small_homogeneous_ideals(&ring, 2)? {
            out.push((gf(q), i));
        }
        out.push((gf(q), Ideal::unit(&ring)));
    }
    Ok(out)
}

fn criterion_5() -> Result<(bool, Vec<String>)> {
    let corpus = emptiness_corpus()?;
    let rows = corpus
        .par_iter()
        .map(|(k, i)| -> Result<Option<String>> {
            let cfg = NullConfig::over(k.clone());
            if !zero_set(i, k, SpaceKind::Projective)?.is_empty() {
                return Ok(None);
            }
            Ok(Some(match classify_empty(i, &cfg) {
                Ok(e) => format!("{} {:?} {}", k, i, e.name()),
                Err(e) => format!("{} {:?} FAILED {}", k, i, e),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<String> = rows.into_iter().flatten().collect();
    let failed = rows.iter().filter(|r| r.contains(" FAILED ")).count();
    let count = |tag: &str| rows.iter().filter(|r| r.ends_with(tag)).count();
    let unit = count(Emptiness::EmptyUnit.name());
    let irrelevant = count(Emptiness::EmptyIrrelevant.name());
    let mut lines = vec![format!(
        "{} empty of {} ideals: {} empty_unit, {} empty_irrelevant, {} failures",
        rows.len(),
        corpus.len(),
        unit,
        irrelevant,
        failed
    )];
    lines.extend(rows);
    Ok((failed == 0 && unit > 0 && irrelevant > 0, lines))
}

fn criterion_6() -> Result<(bool, Vec<String>)> {
    let (_, rows) = projective_rows()?;
    let colon_one = rows.iter().all(|r| r.colon_rounds == 1);
    let agree = rows.iter().all(|r| r.agree);
    let max_sat = rows.iter().map(|r| r.saturation_rounds).max().unwrap_or(0);
    let multi = rows.iter().filter(|r| r.saturation_rounds >= 2).count();
    let mut lines = vec![format!(
        "colon rounds always 1: {}; saturation needs >= 2 rounds on {}/{} ideals (max {})",
        colon_one,
        multi,
        rows.len(),
        max_sat
    )];
    lines.extend(
        rows.iter()
            .map(|r| format!("{} colon={} saturation={}", r.ideal, r.colon_rounds, r.saturation_rounds)),
    );
    Ok((colon_one && agree && multi > 0, lines))
}

fn criterion_7() -> Result<(bool, Vec<String>)> {
    let Some(inst) = find_nonradical_instance(2, 2, 2)? else {
        return Ok((false, vec!["no instance found".to_string()]));
    };
    let in_radical = inst.sum.radical_contains(&inst.witness)?;
    let in_sum = inst.sum.contains(&inst.witness)?;
    let lines = vec![
        format!(
            "I = {:?}, witness {} (in radical: {}, in I + Γ_2*: {})",
            inst.ideal, inst.witness, in_radical, in_sum
        ),
        format!("examined {} ideals", inst.examined),
        format!("I + Γ_2* basis {}", basis_text(&inst.sum)?),
        format!("colon basis {}", basis_text(&inst.colon)?),
    ];
    Ok((in_radical && !in_sum, lines))
}

fn criterion_8() -> Result<(bool, Vec<String>)> {
    let report = counterexample_suite_with(&SuiteOptions::default(), &parallel::search_witness)?;
    let mut ok = report.passed();
    let mut lines = vec![format!("vanishing ideal [{}]", report.vanishing.join(", "))];
    for g in &report.groups {
        ok &= !g.vacuous;
        lines.push(format!(
            "({}) {}{} {}: {}",
            g.label,
            if g.passed { "pass" } else { "FAIL" },
            if g.vacuous { " (vacuous)" } else { "" },
            g.claim,
            g.detail
        ));
    }
    for s in &report.searches[..3] {
        ok &= s.exhausted && s.candidates > 0;
    }
    for s in &report.searches {
        lines.push(format!(
            "{} {}: {} candidates{}",
            s.family.name(),
            s.target,
            s.candidates,
            s.witness.as_deref().map(|w| format!(", {}", w)).unwrap_or_default()
        ));
    }
    Ok((ok, lines))
}
