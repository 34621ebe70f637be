use num_bigint::BigUint;
use serde::Serialize;

use super::{make_record, verdict, Detail, Instance, Outcome, Skip, StatementId, VerificationRecord};
use crate::bound::Bound;
use crate::error::{Error, Result};
use crate::group::{p_of_group, subgroup_generated, Group, SizeOrInfinity};
use crate::isoperimetry::{self, CfContext, CfVerdict, IsoperimetricClass, MAX_KAPPA_ORDER};
use crate::matching::{Multiplicity, MAX_PERMANENT_SIZE};
use crate::set::GroupSet;
use crate::setops::{
    adjoin_identity, invert_set, is_chowla, lambda_unchecked, progression_witness, translate, ProgressionWitness,
    Side,
};
use crate::wakeford::{analyze, build_graph, hall_form_check, mu, CountMode};

/// Largest `|B|` for the all-subsets complement-form check.
pub const MAX_KHC_SIZE: usize = 16;

fn same_size(b: &GroupSet, a: &GroupSet) -> std::result::Result<(), Skip> {
    if b.len() != a.len() {
        return Err(Skip::new(format!("|B| = {} but |A| = {}", b.len(), a.len())));
    }
    if b.is_empty() {
        return Err(Skip::new("B is empty"));
    }
    Ok(())
}

fn require_chowla(g: &Group, b: &GroupSet) -> std::result::Result<(), Skip> {
    if b.is_empty() || !is_chowla(g, b).expect("domain checked") {
        return Err(Skip::new("B is not a Chowla subset"));
    }
    Ok(())
}

fn exact_mu(g: &Group, b: &GroupSet, a: &GroupSet) -> std::result::Result<BigUint, Skip> {
    if b.len() > MAX_PERMANENT_SIZE {
        return Err(Skip::new("too large for exact counting"));
    }
    Ok(mu(g, b, a).expect("sizes checked"))
}

fn check_domains(g: &Group, sets: &[&GroupSet]) -> Result<()> {
    sets.iter().try_for_each(|s| s.check_domain(g.order()))
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchDetails {
    pub exists: bool,
    /// Exact count, present when `|B|` is within the counting cap.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_big")]
    pub mu: Option<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hall_violator: Option<Vec<usize>>,
}

impl Detail for MatchDetails {}

fn opt_big<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

fn matchability(g: &Group, b: &GroupSet, a: &GroupSet) -> MatchDetails {
    let graph = build_graph(g, b, a).expect("sizes checked");
    let mode = if b.len() <= MAX_PERMANENT_SIZE {
        CountMode::Exact
    } else {
        CountMode::ExistenceOnly
    };
    let report = analyze(&graph, mode).expect("mode respects cap");
    MatchDetails {
        exists: report.exists,
        mu: report.mu_exact.then_some(report.mu),
        hall_violator: report.hall_violator.map(|x| x.to_vec()),
    }
}

// ---------------------------------------------------------------- K1 / KAROLYI

pub fn check_k1(g: &Group, b: &GroupSet, a: &GroupSet) -> Outcome<MatchDetails> {
    same_size(b, a)?;
    require_chowla(g, b)?;
    let d = matchability(g, b, a);
    Ok((verdict(d.exists), d))
}

/// A Chowla `B` admits a pairing onto every `A` of the same size.
pub fn verify_k1(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[b, a])?;
    let instance = Instance::new(g).with_set("B", b).with_set("A", a);
    Ok(make_record(StatementId::K1, instance, check_k1(g, b, a)))
}

pub fn check_karolyi(g: &Group, b: &GroupSet, a: &GroupSet, p: SizeOrInfinity) -> Outcome<MatchDetails> {
    same_size(b, a)?;
    if b.contains(0) {
        return Err(Skip::new("B contains the identity"));
    }
    if !p.exceeds(b.len()) {
        return Err(Skip::new(format!("|B| = {} is not below p(G) = {p}", b.len())));
    }
    let d = matchability(g, b, a);
    Ok((verdict(d.exists), d))
}

/// `|B| < p(G)` and `1 ∉ B` give a pairing onto every `A` of the same size.
pub fn verify_karolyi(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[b, a])?;
    let p = p_of_group(g)?;
    let instance = Instance::new(g).with_set("B", b).with_set("A", a);
    Ok(make_record(StatementId::Karolyi, instance, check_karolyi(g, b, a, p)))
}

// ------------------------------------------------------------------------ MCP

#[derive(Debug, Clone, Serialize)]
pub struct ProgressionHit {
    pub a: usize,
    pub witness: ProgressionWitness,
}

#[derive(Debug, Clone, Serialize)]
pub struct McpDetails {
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub mu: BigUint,
    pub max_degree: usize,
    pub max_codegree: usize,
    /// `μ >= max(Δ, Δ⁻¹)`
    pub branch_degree: bool,
    /// Smallest `a ∈ A` with `|A·a⁻¹ ∩ B| = |B| - 1`.
    pub branch_near_translate: Option<usize>,
    /// Smallest `a ∈ A` with `A·a⁻¹` a progression.
    pub branch_progression: Option<ProgressionHit>,
    /// Smallest `w ∈ A⁻¹` with `|A·w ∩ B| = |B| - 1`.
    pub near_translate_w_form: Option<usize>,
    pub max_lambda_right: usize,
    pub max_lambda_left: usize,
    pub exploratory: bool,
}

impl Detail for McpDetails {
    fn exploratory(&self) -> bool {
        self.exploratory
    }
}

fn near_translate(g: &Group, a: &GroupSet, b: &GroupSet, shift: usize) -> bool {
    let shifted = translate(g, a, shift, Side::Right).expect("in range");
    shifted.intersection_len(b) + 1 == b.len()
}

fn first_progression_translate(g: &Group, set: &GroupSet) -> Option<ProgressionHit> {
    set.iter().find_map(|x| {
        let shifted = translate(g, set, g.inv(x), Side::Right).expect("in range");
        progression_witness(g, &shifted)
            .expect("non-empty")
            .map(|witness| ProgressionHit { a: x, witness })
    })
}

pub fn check_mcp(g: &Group, b: &GroupSet, a: &GroupSet) -> Outcome<McpDetails> {
    same_size(b, a)?;
    require_chowla(g, b)?;
    let count = exact_mu(g, b, a)?;
    let graph = build_graph(g, b, a).expect("sizes checked");
    let max_degree = graph.max_degree();
    let max_codegree = graph.max_codegree();
    let branch_degree = count >= BigUint::from(max_degree.max(max_codegree));
    let branch_near_translate = a.iter().find(|&x| near_translate(g, a, b, g.inv(x)));
    let branch_progression = first_progression_translate(g, a);
    let a_inv = invert_set(g, a).expect("domain checked");
    let near_translate_w_form = a_inv.iter().find(|&w| near_translate(g, a, b, w));
    let max_lambda = |side| b.iter().map(|x| lambda_unchecked(g, a, x, side)).max().unwrap_or(0);
    let ok = branch_degree || branch_near_translate.is_some() || branch_progression.is_some();
    Ok((
        verdict(ok),
        McpDetails {
            mu: count,
            max_degree,
            max_codegree,
            branch_degree,
            branch_near_translate,
            branch_progression,
            near_translate_w_form,
            max_lambda_right: max_lambda(Side::Right),
            max_lambda_left: max_lambda(Side::Left),
            exploratory: !g.is_abelian(),
        },
    ))
}

/// Trichotomy for a Chowla `B`: enough pairings, a near-translate, or a
/// progression translate.
pub fn verify_mcp(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[b, a])?;
    let instance = Instance::new(g).with_set("B", b).with_set("A", a);
    Ok(make_record(StatementId::Mcp, instance, check_mcp(g, b, a)))
}

// ----------------------------------------------------------------------- MUBB

#[derive(Debug, Clone, Serialize)]
pub struct MubbDetails {
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub mu: BigUint,
    pub q: usize,
    /// `(|B|+1)/3`
    pub bound_first: Bound,
    /// `|B|(q-|B|-1)/(2q-|B|-4)`
    pub bound_second: Bound,
    pub bound: Bound,
    pub first_term_reading: &'static str,
    pub branch_count: bool,
    /// Smallest `a ∈ B` with `B·a⁻¹` a progression.
    pub branch_progression: Option<ProgressionHit>,
    pub branch: &'static str,
    pub exploratory: bool,
}

impl Detail for MubbDetails {
    fn exploratory(&self) -> bool {
        self.exploratory
    }
}

/// The lower bound on `μ(B, B)` for a Chowla `B` of size `n` with `|⟨B⟩| = q`.
pub fn mubb_bound(n: usize, q: usize) -> (Bound, Bound) {
    let (n, q) = (n as i64, q as i64);
    (Bound::term(n + 1, 3), Bound::term(n * (q - n - 1), 2 * q - n - 4))
}

pub fn check_mubb(g: &Group, b: &GroupSet) -> Outcome<MubbDetails> {
    require_chowla(g, b)?;
    let count = exact_mu(g, b, b)?;
    let q = subgroup_generated(g, b).expect("domain checked").len();
    let (first, second) = mubb_bound(b.len(), q);
    let bound = first.min(second);
    let small = u64::try_from(&count).unwrap_or(u64::MAX);
    let branch_count = bound.is_met_by(small);
    let branch_progression = first_progression_translate(g, b);
    let branch = match (branch_count, branch_progression.is_some()) {
        (true, true) => "count+progression",
        (true, false) => "count",
        (false, true) => "progression",
        (false, false) => "none",
    };
    Ok((
        verdict(branch_count || branch_progression.is_some()),
        MubbDetails {
            mu: count,
            q,
            bound_first: first,
            bound_second: second,
            bound,
            first_term_reading: "(|B|+1)/3",
            branch_count,
            branch_progression,
            branch,
            exploratory: !g.is_abelian(),
        },
    ))
}

/// `μ(B, B)` meets the rational lower bound unless some `B·a⁻¹` is a progression.
pub fn verify_mubb(g: &Group, b: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[b])?;
    let instance = Instance::new(g).with_set("B", b);
    Ok(make_record(StatementId::Mubb, instance, check_mubb(g, b)))
}

// ------------------------------------------------------------------ EHO / EHOL

/// `κ₂(S̃)` and `q = |⟨S⟩|`, shared by every `T` checked against one `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EhoContext {
    pub kappa2: usize,
    pub q: usize,
}

pub fn eho_context(g: &Group, s: &GroupSet) -> std::result::Result<EhoContext, Skip> {
    if s.is_empty() {
        return Err(Skip::new("S is empty"));
    }
    if s.contains(0) {
        return Err(Skip::new("S contains the identity"));
    }
    let st = adjoin_identity(s);
    match isoperimetry::kappa(g, &st, 2) {
        Ok(r) => Ok(EhoContext {
            kappa2: r.kappa,
            q: r.ambient_order,
        }),
        Err(Error::Limit { .. }) => Err(Skip::new(format!("|<S>| exceeds {MAX_KAPPA_ORDER}"))),
        Err(e) => Err(Skip::new(e.to_string())),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EhoDetails {
    pub kappa2: usize,
    pub q: usize,
    pub bound_first: Bound,
    pub bound_second: Bound,
    pub bound: Bound,
    pub side: Side,
    pub max_lambda_right: usize,
    pub argmax_right: Option<usize>,
    pub max_lambda_left: usize,
    pub argmax_left: Option<usize>,
    pub holds_right: bool,
    pub holds_left: bool,
    pub exploratory: bool,
}

impl Detail for EhoDetails {
    fn exploratory(&self) -> bool {
        self.exploratory
    }
}

fn max_lambda(g: &Group, t: &GroupSet, s: &GroupSet, side: Side) -> (usize, Option<usize>) {
    let mut best = (0, None);
    for x in s {
        let l = lambda_unchecked(g, t, x, side);
        if best.1.is_none() || l > best.0 {
            best = (l, Some(x));
        }
    }
    best
}

fn eho_details(g: &Group, s: &GroupSet, t: &GroupSet, side: Side, ctx: EhoContext, bounds: (Bound, Bound)) -> Outcome<EhoDetails> {
    let bound = bounds.0.min(bounds.1);
    let (max_lambda_right, argmax_right) = max_lambda(g, t, s, Side::Right);
    let (max_lambda_left, argmax_left) = max_lambda(g, t, s, Side::Left);
    let holds_right = bound.is_met_by(max_lambda_right as u64);
    let holds_left = bound.is_met_by(max_lambda_left as u64);
    let ok = match side {
        Side::Right => holds_right,
        Side::Left => holds_left,
    };
    Ok((
        verdict(ok),
        EhoDetails {
            kappa2: ctx.kappa2,
            q: ctx.q,
            bound_first: bounds.0,
            bound_second: bounds.1,
            bound,
            side,
            max_lambda_right,
            argmax_right,
            max_lambda_left,
            argmax_left,
            holds_right,
            holds_left,
            exploratory: !g.is_abelian(),
        },
    ))
}

pub fn check_eho(g: &Group, s: &GroupSet, t: &GroupSet, side: Side, ctx: EhoContext) -> Outcome<EhoDetails> {
    let (ns, nt, k2, q) = (s.len() as i64, t.len() as i64, ctx.kappa2 as i64, ctx.q as i64);
    let first = Bound::term(nt * (ns + k2 - nt + 1), ns + 2 * k2);
    let second = Bound::term(nt * (q - nt - 1), 2 * q - ns - 4);
    eho_details(g, s, t, side, ctx, (first, second))
}

/// Some `x ∈ S` has `λ_T(x)` at least the isoperimetric averaging bound.
pub fn verify_eho(g: &Group, s: &GroupSet, t: &GroupSet, side: Side) -> Result<VerificationRecord> {
    check_domains(g, &[s, t])?;
    let instance = Instance::new(g).with_set("S", s).with_set("T", t);
    let outcome = eho_context(g, s).and_then(|ctx| check_eho(g, s, t, side, ctx));
    Ok(make_record(StatementId::Eho, instance, outcome))
}

pub fn check_ehol(g: &Group, s: &GroupSet, t: &GroupSet, side: Side, ctx: EhoContext) -> Outcome<EhoDetails> {
    if ctx.kappa2 != s.len() || t.len() != s.len() {
        return Err(Skip::new("specialization needs kappa2 = |S| = |T|"));
    }
    eho_details(g, s, t, side, ctx, mubb_bound(s.len(), ctx.q))
}

/// The averaging bound specialised to `κ₂ = |S| = |T|`.
pub fn verify_ehol(g: &Group, s: &GroupSet, t: &GroupSet, side: Side) -> Result<VerificationRecord> {
    check_domains(g, &[s, t])?;
    let instance = Instance::new(g).with_set("S", s).with_set("T", t);
    let outcome = eho_context(g, s).and_then(|ctx| check_ehol(g, s, t, side, ctx));
    Ok(make_record(StatementId::Ehol, instance, outcome))
}

// -------------------------------------------------------------------- OLSON

#[derive(Debug, Clone, Serialize)]
pub struct OlsonXyDetails {
    pub product: usize,
    pub right: [usize; 3],
    pub left: [usize; 3],
    pub holds_right: bool,
    pub holds_left: bool,
}

impl Detail for OlsonXyDetails {}

pub fn check_olson_xy(g: &Group, t: &GroupSet, x: usize, y: usize) -> Outcome<OlsonXyDetails> {
    if t.is_empty() {
        return Err(Skip::new("T is empty"));
    }
    let xy = g.mul(x, y);
    let l = |z, side| lambda_unchecked(g, t, z, side);
    let right = [l(x, Side::Right), l(y, Side::Right), l(xy, Side::Right)];
    let left = [l(x, Side::Left), l(y, Side::Left), l(xy, Side::Left)];
    let holds_right = right[2] <= right[0] + right[1];
    let holds_left = left[2] <= left[0] + left[1];
    Ok((
        verdict(holds_right && holds_left),
        OlsonXyDetails {
            product: xy,
            right,
            left,
            holds_right,
            holds_left,
        },
    ))
}

/// `λ_T(xy) <= λ_T(x) + λ_T(y)`, on both sides.
pub fn verify_olson_xy(g: &Group, t: &GroupSet, x: usize, y: usize) -> Result<VerificationRecord> {
    check_domains(g, &[t])?;
    g.check_element(x)?;
    g.check_element(y)?;
    let instance = Instance::new(g).with_set("T", t).with_param("x", x).with_param("y", y);
    Ok(make_record(StatementId::OlsonXy, instance, check_olson_xy(g, t, x, y)))
}

#[derive(Debug, Clone, Serialize)]
pub struct OlsonCliqueDetails {
    pub sum_right: usize,
    pub sum_left: usize,
    pub bound: i64,
    pub holds_right: bool,
    pub holds_left: bool,
}

impl Detail for OlsonCliqueDetails {}

pub fn check_olson_clique(g: &Group, b: &GroupSet, c: &GroupSet) -> Outcome<OlsonCliqueDetails> {
    if b.is_empty() || c.is_empty() {
        return Err(Skip::new("B and C must be non-empty"));
    }
    if c.contains(0) {
        return Err(Skip::new("C contains the identity"));
    }
    let sum = |side| c.iter().map(|x| lambda_unchecked(g, b, x, side)).sum::<usize>();
    let (nb, nc) = (b.len() as i64, c.len() as i64);
    let bound = nb * (nc - nb + 1);
    let (sum_right, sum_left) = (sum(Side::Right), sum(Side::Left));
    let holds_right = sum_right as i64 >= bound;
    let holds_left = sum_left as i64 >= bound;
    Ok((
        verdict(holds_right && holds_left),
        OlsonCliqueDetails {
            sum_right,
            sum_left,
            bound,
            holds_right,
            holds_left,
        },
    ))
}

/// `Σ_{x∈C} λ_B(x) >= |B|(|C| - |B| + 1)` for `1 ∉ C`.
pub fn verify_olson_clique(g: &Group, b: &GroupSet, c: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[b, c])?;
    let instance = Instance::new(g).with_set("B", b).with_set("C", c);
    Ok(make_record(StatementId::OlsonClique, instance, check_olson_clique(g, b, c)))
}

// ------------------------------------------------------------ CCHOWLA / VCHOWLA

#[derive(Debug, Clone, Serialize)]
pub struct ChowlaClassDetails {
    pub size: usize,
    pub kappa1: usize,
    pub kappa2: usize,
    pub q: usize,
    pub vosper: bool,
    pub progression: Option<ProgressionWitness>,
}

impl Detail for ChowlaClassDetails {}

fn chowla_class(g: &Group, s: &GroupSet) -> std::result::Result<(IsoperimetricClass, GroupSet), Skip> {
    require_chowla(g, s)?;
    let st = adjoin_identity(s);
    match isoperimetry::classify(g, &st) {
        Ok(c) => Ok((c, st)),
        Err(Error::Limit { .. }) => Err(Skip::new(format!("|<S>| exceeds {MAX_KAPPA_ORDER}"))),
        Err(e) => Err(Skip::new(e.to_string())),
    }
}

pub fn check_cchowla(g: &Group, s: &GroupSet) -> Outcome<ChowlaClassDetails> {
    let (class, _) = chowla_class(g, s)?;
    let d = ChowlaClassDetails {
        size: s.len(),
        kappa1: class.kappa1.kappa,
        kappa2: class.kappa2.kappa,
        q: class.kappa1.ambient_order,
        vosper: class.vosper,
        progression: None,
    };
    Ok((verdict(d.kappa1 == s.len()), d))
}

/// `κ₁(S̃) = |S|` for a Chowla `S`.
pub fn verify_cchowla(g: &Group, s: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[s])?;
    let instance = Instance::new(g).with_set("S", s);
    Ok(make_record(StatementId::Cchowla, instance, check_cchowla(g, s)))
}

pub fn check_vchowla(g: &Group, s: &GroupSet) -> Outcome<ChowlaClassDetails> {
    let (class, st) = chowla_class(g, s)?;
    let progression = progression_witness(g, &st).expect("non-empty");
    let ok = class.vosper || progression.is_some();
    Ok((
        verdict(ok),
        ChowlaClassDetails {
            size: s.len(),
            kappa1: class.kappa1.kappa,
            kappa2: class.kappa2.kappa,
            q: class.kappa1.ambient_order,
            vosper: class.vosper,
            progression,
        },
    ))
}

/// `S̃` is Vosper or a progression for a Chowla `S`.
pub fn verify_vchowla(g: &Group, s: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[s])?;
    let instance = Instance::new(g).with_set("S", s);
    Ok(make_record(StatementId::Vchowla, instance, check_vchowla(g, s)))
}

// ------------------------------------------------------------------------- CF

impl Detail for CfVerdict {}

/// Cached per-`S` state; a non-Cauchy `S` becomes a skip.
pub fn cf_context(g: &Group, s: &GroupSet) -> std::result::Result<CfContext, Skip> {
    CfContext::new(g, s).map_err(|e| match e {
        Error::Precondition(reason) => Skip::new(reason),
        e => Skip::new(e.to_string()),
    })
}

pub fn check_cf(g: &Group, ctx: &CfContext, t: &GroupSet) -> Outcome<CfVerdict> {
    match ctx.check(g, t) {
        Ok(v) => Ok((verdict(v.all_pass()), v)),
        Err(Error::Precondition(reason)) => Err(Skip::new(reason)),
        Err(e) => Err(Skip::new(e.to_string())),
    }
}

/// The cofinite inverse theorem on one `(S, T)`.
pub fn verify_cf(g: &Group, s: &GroupSet, t: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[s, t])?;
    let instance = Instance::new(g).with_set("S", s).with_set("T", t);
    let outcome = cf_context(g, s).and_then(|ctx| check_cf(g, &ctx, t));
    Ok(make_record(StatementId::Cf, instance, outcome))
}

// ----------------------------------------------------------- TRANS / DEG / KHC

#[derive(Debug, Clone, Serialize)]
pub struct TransDetails {
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub mu: BigUint,
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub mu_translated: BigUint,
    pub translated: Vec<usize>,
}

impl Detail for TransDetails {}

pub fn check_trans(g: &Group, b: &GroupSet, a: &GroupSet, x: usize) -> Outcome<TransDetails> {
    same_size(b, a)?;
    let ax = translate(g, a, x, Side::Right).expect("in range");
    let m1 = exact_mu(g, b, a)?;
    let m2 = exact_mu(g, b, &ax)?;
    Ok((
        verdict(m1 == m2),
        TransDetails {
            mu: m1,
            mu_translated: m2,
            translated: ax.to_vec(),
        },
    ))
}

/// `μ(B, A) = μ(B, A·x)`.
pub fn verify_trans(g: &Group, b: &GroupSet, a: &GroupSet, x: usize) -> Result<VerificationRecord> {
    check_domains(g, &[b, a])?;
    g.check_element(x)?;
    let instance = Instance::new(g).with_set("B", b).with_set("A", a).with_param("x", x);
    Ok(make_record(StatementId::Trans, instance, check_trans(g, b, a, x)))
}

#[derive(Debug, Clone, Serialize)]
pub struct DegDetails {
    pub degrees: Vec<usize>,
    pub lambda_left: Vec<usize>,
    pub lambda_right: Vec<usize>,
    pub matches_left: bool,
    pub matches_right: bool,
}

impl Detail for DegDetails {}

pub fn check_deg(g: &Group, b: &GroupSet, a: &GroupSet) -> Outcome<DegDetails> {
    same_size(b, a)?;
    let graph = build_graph(g, b, a).expect("sizes checked");
    let degrees: Vec<usize> = graph.rows.iter().map(GroupSet::len).collect();
    let lambda_left: Vec<usize> = b.iter().map(|x| lambda_unchecked(g, a, x, Side::Left)).collect();
    let lambda_right: Vec<usize> = b.iter().map(|x| lambda_unchecked(g, a, x, Side::Right)).collect();
    let matches_left = degrees == lambda_left;
    let matches_right = degrees == lambda_right;
    Ok((
        verdict(matches_left),
        DegDetails {
            degrees,
            lambda_left,
            lambda_right,
            matches_left,
            matches_right,
        },
    ))
}

/// Row degrees of the Wakeford graph equal `|x·A \ A|`.
pub fn verify_deg(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[b, a])?;
    let instance = Instance::new(g).with_set("B", b).with_set("A", a);
    Ok(make_record(StatementId::Deg, instance, check_deg(g, b, a)))
}

#[derive(Debug, Clone, Serialize)]
pub struct KhcDetails {
    pub subsets_checked: usize,
    /// First `X` (in mask order) where the two forms disagree, with both values.
    pub mismatch: Option<(Vec<usize>, usize, usize)>,
}

impl Detail for KhcDetails {}

pub fn check_khc_form(g: &Group, b: &GroupSet, a: &GroupSet) -> Outcome<KhcDetails> {
    same_size(b, a)?;
    if b.len() > MAX_KHC_SIZE {
        return Err(Skip::new(format!("|B| above {MAX_KHC_SIZE}")));
    }
    let elems = b.to_vec();
    let n = elems.len();
    let mut mismatch = None;
    for mask in 0u32..(1 << n) {
        let x = g
            .set((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| elems[i]))
            .expect("in range");
        let (direct, complement_form) = hall_form_check(g, b, a, &x).expect("X ⊆ B");
        if direct != complement_form {
            mismatch = Some((x.to_vec(), direct, complement_form));
            break;
        }
    }
    Ok((
        verdict(mismatch.is_none()),
        KhcDetails {
            subsets_checked: 1 << n,
            mismatch,
        },
    ))
}

/// `|ℛ(X)|` equals its complement form for every `X ⊆ B`.
pub fn verify_khc_form(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<VerificationRecord> {
    check_domains(g, &[b, a])?;
    let instance = Instance::new(g).with_set("B", b).with_set("A", a);
    Ok(make_record(StatementId::KhcForm, instance, check_khc_form(g, b, a)))
}

// ------------------------------------------------------------------ LOSONCZY

/// `B = (H \ {1}) ∪ {a}` and `A = H` for a proper subgroup `H` and `a ∉ H`.
pub fn losonczy_instance(g: &Group, h: &GroupSet, a_elem: usize) -> Result<(GroupSet, GroupSet)> {
    h.check_domain(g.order())?;
    g.check_element(a_elem)?;
    if subgroup_generated(g, h)? != *h {
        return Err(Error::Precondition("H is not a subgroup".into()));
    }
    if h.len() < 2 || h.len() == g.order() {
        return Err(Error::Precondition("H must be a proper subgroup with |H| >= 2".into()));
    }
    if h.contains(a_elem) {
        return Err(Error::Precondition(format!("{a_elem} lies in H")));
    }
    let mut b = h.clone();
    b.remove(0);
    b.insert(a_elem);
    Ok((b, h.clone()))
}

#[derive(Debug, Clone, Serialize)]
pub struct LosonczyDetails {
    pub b: Vec<usize>,
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub mu: BigUint,
    pub hall_violator: Option<Vec<usize>>,
    pub violator_inside_h: bool,
}

impl Detail for LosonczyDetails {}

pub fn check_losonczy(g: &Group, h: &GroupSet, a_elem: usize) -> Outcome<LosonczyDetails> {
    let (b, a) = losonczy_instance(g, h, a_elem).map_err(|e| Skip::new(e.to_string()))?;
    if b.len() > MAX_PERMANENT_SIZE {
        return Err(Skip::new("too large for exact counting"));
    }
    let report = analyze(&build_graph(g, &b, &a).expect("sizes equal"), CountMode::Exact).expect("within cap");
    let mut h_star = h.clone();
    h_star.remove(0);
    let violator_inside_h = report.hall_violator.as_ref().is_some_and(|x| x.is_subset(&h_star));
    let ok = report.mu == BigUint::ZERO && violator_inside_h;
    Ok((
        verdict(ok),
        LosonczyDetails {
            b: b.to_vec(),
            mu: report.mu,
            hall_violator: report.hall_violator.map(|x| x.to_vec()),
            violator_inside_h,
        },
    ))
}

/// The subgroup construction has no pairing, and the deficiency sits in `H \ {1}`.
pub fn verify_losonczy(g: &Group, h: &GroupSet, a_elem: usize) -> Result<VerificationRecord> {
    check_domains(g, &[h])?;
    g.check_element(a_elem)?;
    let instance = Instance::new(g).with_set("H", h).with_param("a", a_elem);
    Ok(make_record(StatementId::Losonczy, instance, check_losonczy(g, h, a_elem)))
}

// ------------------------------------------------------------- PROGRESSIONS

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProgressionVariant {
    /// `(r·P, P)` with `P = {1, r, .., r^j}`
    One,
    /// `(Q, P)` with `P = {1, r², .., r^(j+1)}` and `Q = {r², .., r^(j+1), a}`
    Two,
}

fn powers(g: &Group, r: usize, exps: impl Iterator<Item = usize>) -> GroupSet {
    g.set(exps.map(|e| g.pow(r, e as i64))).expect("in range")
}

fn progression_pair(
    g: &Group,
    r: usize,
    j: usize,
    variant: ProgressionVariant,
    a_elem: Option<usize>,
    order_floor: usize,
) -> Result<(GroupSet, GroupSet)> {
    g.check_element(r)?;
    let ord = g.elem_order(r);
    match variant {
        ProgressionVariant::One => {
            if ord < j + 2 {
                return Err(Error::Precondition(format!("order of r is {ord}, need >= j+2 = {}", j + 2)));
            }
            let p = powers(g, r, 0..=j);
            let rp = powers(g, r, 1..=j + 1);
            Ok((rp, p))
        }
        ProgressionVariant::Two => {
            let a = a_elem.ok_or_else(|| Error::Precondition("variant two needs an element a".into()))?;
            g.check_element(a)?;
            if ord < order_floor {
                return Err(Error::Precondition(format!("order of r is {ord}, need >= {order_floor}")));
            }
            let mut p = powers(g, r, 2..=j + 1);
            let q_part = p.clone();
            p.insert(0);
            if p.contains(a) || a == g.pow(r, j as i64 + 1) || a == g.pow(r, j as i64 + 2) {
                return Err(Error::Precondition(format!("a = {a} lies in P or is r^(j+1), r^(j+2)")));
            }
            let mut q = q_part;
            q.insert(a);
            Ok((q, p))
        }
    }
}

/// Builds the two unique-pairing families. Variant two requires
/// `ord(r) >= 2j + 6`.
pub fn progression_instances(
    g: &Group,
    r: usize,
    j: usize,
    variant: ProgressionVariant,
    a_elem: Option<usize>,
) -> Result<(GroupSet, GroupSet)> {
    progression_pair(g, r, j, variant, a_elem, 2 * j + 6)
}

/// Variant-two instances below the `2j + 6` order floor; only needs the powers
/// of `r` involved to be distinct.
pub fn progression_instances_exploratory(g: &Group, r: usize, j: usize, a_elem: usize) -> Result<(GroupSet, GroupSet)> {
    progression_pair(g, r, j, ProgressionVariant::Two, Some(a_elem), j + 2)
}

#[derive(Debug, Clone, Serialize)]
pub struct ProgressionDetails {
    pub b: Vec<usize>,
    pub a: Vec<usize>,
    /// Exact count, or `">=2"` when only uniqueness was decided.
    pub mu: String,
    pub method: &'static str,
    pub exploratory: bool,
}

impl Detail for ProgressionDetails {
    fn exploratory(&self) -> bool {
        self.exploratory
    }
}

/// `μ` when it fits the exact counter, otherwise "0", "1" or ">=2" from the
/// alternating-cycle test.
pub fn count_or_uniqueness(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<(String, &'static str)> {
    if b.len() <= MAX_PERMANENT_SIZE {
        return Ok((mu(g, b, a)?.to_string(), "permanent"));
    }
    let graph = build_graph(g, b, a)?;
    let text = match graph.multiplicity() {
        Multiplicity::Zero => "0",
        Multiplicity::One => "1",
        Multiplicity::Many => ">=2",
    };
    Ok((text.to_string(), "alternating-cycle"))
}

fn progression_outcome(g: &Group, pair: Result<(GroupSet, GroupSet)>, exploratory: bool) -> Outcome<ProgressionDetails> {
    let (b, a) = pair.map_err(|e| Skip::new(e.to_string()))?;
    let (count, method) = count_or_uniqueness(g, &b, &a).expect("sizes equal");
    Ok((
        verdict(count == "1"),
        ProgressionDetails {
            b: b.to_vec(),
            a: a.to_vec(),
            mu: count,
            method,
            exploratory,
        },
    ))
}

pub fn check_prog_example_1(g: &Group, r: usize, j: usize) -> Outcome<ProgressionDetails> {
    progression_outcome(g, progression_instances(g, r, j, ProgressionVariant::One, None), false)
}

pub fn check_prog_example_2(g: &Group, r: usize, j: usize, a_elem: usize, enforce_floor: bool) -> Outcome<ProgressionDetails> {
    if enforce_floor {
        progression_outcome(g, progression_instances(g, r, j, ProgressionVariant::Two, Some(a_elem)), false)
    } else {
        let in_regime = g.elem_order(r) >= 2 * j + 6;
        progression_outcome(g, progression_instances_exploratory(g, r, j, a_elem), !in_regime)
    }
}

/// `μ(r·P, P) = 1`.
pub fn verify_prog_example_1(g: &Group, r: usize, j: usize) -> Result<VerificationRecord> {
    g.check_element(r)?;
    let instance = Instance::new(g).with_param("r", r).with_param("j", j);
    Ok(make_record(StatementId::ProgExample1, instance, check_prog_example_1(g, r, j)))
}

/// `μ(Q, P) = 1`; with `enforce_floor = false` runs below the order floor are
/// recorded as exploratory.
pub fn verify_prog_example_2(g: &Group, r: usize, j: usize, a_elem: usize, enforce_floor: bool) -> Result<VerificationRecord> {
    g.check_element(r)?;
    g.check_element(a_elem)?;
    let mut instance = Instance::new(g).with_param("r", r).with_param("j", j).with_param("a", a_elem);
    if !enforce_floor {
        instance = instance.with_param("relaxed_floor", 1);
    }
    Ok(make_record(
        StatementId::ProgExample2,
        instance,
        check_prog_example_2(g, r, j, a_elem, enforce_floor),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::theorems::Verdict;

    fn set(g: &Group, xs: &[usize]) -> GroupSet {
        g.set(xs.iter().copied()).unwrap()
    }

    #[test]
    fn k1_examples() {
        let g = make_group("cyclic:7").unwrap();
        let r = verify_k1(&g, &set(&g, &[1, 2]), &set(&g, &[3, 5])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        let c10 = make_group("cyclic:10").unwrap();
        let r = verify_k1(&c10, &set(&c10, &[5, 1]), &set(&c10, &[0, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);

        let c5 = make_group("cyclic:5").unwrap();
        let r = verify_k1(&c5, &set(&c5, &[1, 2]), &set(&c5, &[1, 2])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["mu"], "1");
    }

    #[test]
    fn karolyi_scope() {
        let c12 = make_group("cyclic:12").unwrap();
        let r = verify_karolyi(&c12, &set(&c12, &[5]), &set(&c12, &[7])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let r = verify_karolyi(&c12, &set(&c12, &[5, 6]), &set(&c12, &[0, 7])).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
        let q = make_group("quaternion").unwrap();
        let r = verify_karolyi(&q, &set(&q, &[1]), &set(&q, &[4])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let c7 = make_group("cyclic:7").unwrap();
        let r = verify_karolyi(&c7, &set(&c7, &[1, 2, 3]), &set(&c7, &[0, 3, 6])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn mcp_branches() {
        let g = make_group("cyclic:10").unwrap();
        let b = set(&g, &[1, 2, 3]);
        let r = verify_mcp(&g, &b, &b).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        // A = {0,1,2} + 4 is a translated progression
        let a = set(&g, &[4, 5, 6]);
        let r = verify_mcp(&g, &b, &a).unwrap();
        assert!(!r.details["branch_progression"].is_null());
        // A·a⁻¹ meets B in |B|-1 points: A = {0, 1, 2} with a = 0 gives {0,1,2} ∩ B = {1,2}
        let r = verify_mcp(&g, &b, &set(&g, &[0, 1, 2])).unwrap();
        assert_eq!(r.details["branch_near_translate"], 0);
        assert_eq!(r.details["near_translate_w_form"], 0);
    }

    #[test]
    fn mubb_examples() {
        let g = make_group("cyclic:11").unwrap();
        let r = verify_mubb(&g, &set(&g, &[1, 2, 3])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["bound_first"], "4/3");
        assert_eq!(r.details["bound_second"], "7/5");
        assert_eq!(r.details["bound"], "4/3");
        assert_eq!(r.details["first_term_reading"], "(|B|+1)/3");

        let c5 = make_group("cyclic:5").unwrap();
        let r = verify_mubb(&c5, &set(&c5, &[1, 2])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["branch_progression"]["a"], 1);
    }

    #[test]
    fn eho_examples() {
        let g = make_group("cyclic:11").unwrap();
        let s = set(&g, &[1, 2, 3]);
        let r = verify_eho(&g, &s, &s, Side::Right).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["holds_left"], true);

        // |T| = 1: every x ∈ S moves T
        let r = verify_eho(&g, &s, &set(&g, &[4]), Side::Right).unwrap();
        assert_eq!(r.details["max_lambda_right"], 1);
        assert_eq!(r.verdict, Verdict::Pass);

        // ⟨S⟩ of order 2: second term has a non-positive numerator
        let c6 = make_group("cyclic:6").unwrap();
        let r = verify_eho(&c6, &set(&c6, &[3]), &set(&c6, &[0, 3]), Side::Right).unwrap();
        assert_eq!(r.details["bound_second"], "trivial");
        assert_eq!(r.verdict, Verdict::Pass);

        let r = verify_eho(&c6, &set(&c6, &[0, 3]), &set(&c6, &[1]), Side::Right).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
    }

    #[test]
    fn olson_examples() {
        let g = make_group("symmetric:3").unwrap();
        let t = set(&g, &[0, 1, 3]);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(verify_olson_xy(&g, &t, x, y).unwrap().verdict, Verdict::Pass);
            }
        }
        let r = verify_olson_clique(&g, &t, &set(&g, &[1, 2, 4])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let r = verify_olson_clique(&g, &t, &set(&g, &[0, 2])).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
    }

    #[test]
    fn chowla_corollaries() {
        let g = make_group("cyclic:10").unwrap();
        let s = set(&g, &[1, 3]);
        let r = verify_cchowla(&g, &s).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["kappa1"], 2);
        assert_eq!(verify_vchowla(&g, &s).unwrap().verdict, Verdict::Pass);
        assert_eq!(verify_cchowla(&g, &set(&g, &[5, 1])).unwrap().verdict, Verdict::Skipped);
    }

    #[test]
    fn trans_deg_khc() {
        let g = make_group("dihedral:4").unwrap();
        let b = set(&g, &[1, 5, 6]);
        let a = set(&g, &[0, 2, 7]);
        for x in 0..8 {
            assert_eq!(verify_trans(&g, &b, &a, x).unwrap().verdict, Verdict::Pass);
        }
        assert_eq!(verify_deg(&g, &b, &a).unwrap().verdict, Verdict::Pass);
        assert_eq!(verify_khc_form(&g, &b, &a).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn losonczy_examples() {
        let c4 = make_group("cyclic:4").unwrap();
        let (b, a) = losonczy_instance(&c4, &set(&c4, &[0, 2]), 1).unwrap();
        assert_eq!(b.to_vec(), vec![1, 2]);
        assert_eq!(a.to_vec(), vec![0, 2]);
        let r = verify_losonczy(&c4, &set(&c4, &[0, 2]), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["mu"], "0");

        let c9 = make_group("cyclic:9").unwrap();
        assert_eq!(verify_losonczy(&c9, &set(&c9, &[0, 3, 6]), 1).unwrap().verdict, Verdict::Pass);

        let q = make_group("quaternion").unwrap();
        for a in 2..8 {
            assert_eq!(verify_losonczy(&q, &set(&q, &[0, 1]), a).unwrap().verdict, Verdict::Pass);
        }

        assert!(losonczy_instance(&c4, &set(&c4, &[0, 1]), 2).is_err());
        assert!(losonczy_instance(&c4, &set(&c4, &[0, 2]), 2).is_err());
        assert!(losonczy_instance(&c4, &c4.full_set(), 2).is_err());
    }

    #[test]
    fn progression_example_one() {
        let g = make_group("cyclic:10").unwrap();
        let (b, a) = progression_instances(&g, 1, 3, ProgressionVariant::One, None).unwrap();
        assert_eq!(b.to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(verify_prog_example_1(&g, 1, 3).unwrap().verdict, Verdict::Pass);

        let (b, a) = progression_instances(&g, 3, 0, ProgressionVariant::One, None).unwrap();
        assert_eq!((b.to_vec(), a.to_vec()), (vec![3], vec![0]));
        assert!(progression_instances(&g, 5, 1, ProgressionVariant::One, None).is_err());
    }

    #[test]
    fn progression_example_two_small_j() {
        let g = make_group("cyclic:30").unwrap();
        let (q, p) = progression_instances(&g, 1, 1, ProgressionVariant::Two, Some(20)).unwrap();
        assert_eq!((q.to_vec(), p.to_vec()), (vec![2, 20], vec![0, 2]));
        assert_eq!(verify_prog_example_2(&g, 1, 1, 20, true).unwrap().verdict, Verdict::Pass);
        assert!(progression_instances(&g, 1, 2, ProgressionVariant::Two, Some(3)).is_err());
        assert!(progression_instances(&g, 1, 2, ProgressionVariant::Two, Some(4)).is_err());
        assert!(progression_instances(&g, 1, 2, ProgressionVariant::Two, None).is_err());
    }

    #[test]
    fn progression_example_two_counts_grow_with_j() {
        // Q \ {a} maps onto P \ {1} in 2^(j-1) ways once j >= 1
        let g = make_group("cyclic:30").unwrap();
        let r = verify_prog_example_2(&g, 1, 5, 20, true).unwrap();
        assert_eq!(r.details["mu"], "16");
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn uniqueness_route_beyond_cap() {
        let g = make_group("cyclic:30").unwrap();
        let (b, a) = progression_instances(&g, 1, 25, ProgressionVariant::One, None).unwrap();
        assert_eq!(count_or_uniqueness(&g, &b, &a).unwrap(), ("1".to_string(), "alternating-cycle"));
    }
}
