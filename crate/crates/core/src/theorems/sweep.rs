//! Drives the verifiers over whole instance families.
//!
//! Exhaustive families are visited in a fixed canonical order (group order as
//! given, then subsets by size and lexicographic index order). Sampled runs
//! draw from `ChaCha8Rng::seed_from_u64(seed)`, switched to stream `i` for the
//! `i`-th group, so each group's draws are independent of the others.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::verify::*;
use super::{make_record, Detail, Instance, Outcome, Skip, StatementId, Verdict, VerificationRecord};
use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, make_group, p_of_group, Group};
use crate::set::GroupSet;
use crate::setops::Side;

/// Name of the sampling generator, echoed in reports.
pub const GENERATOR: &str = "ChaCha8Rng (rand_chacha 0.3) seed_from_u64, stream = group index";

/// Largest group order for families that range over every subset of `G`.
pub const MAX_ALL_SUBSETS_ORDER: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum SweepMode {
    Exhaustive,
    /// `count` draws per group.
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Retain {
    All,
    /// Keep only failing records; passes and skips are just counted.
    Failures,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub statement: StatementId,
    pub groups: Vec<String>,
    pub max_set_size: usize,
    pub mode: SweepMode,
    pub retain: Retain,
    /// Side that decides the EHO/EHOL verdict; both are always recorded.
    pub side: Side,
    /// Run the second progression family below its element-order floor.
    pub relax_order_floor: bool,
}

impl SweepSpec {
    pub fn new(statement: StatementId, groups: Vec<String>, max_set_size: usize, mode: SweepMode) -> SweepSpec {
        SweepSpec {
            statement,
            groups,
            max_set_size,
            mode,
            retain: Retain::All,
            side: Side::Right,
            relax_order_floor: false,
        }
    }

    pub fn retain(mut self, retain: Retain) -> SweepSpec {
        self.retain = retain;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    /// Failures flagged as exploratory; included in `fail`.
    pub exploratory_fail: usize,
}

impl Summary {
    /// Failures that count against the statement.
    pub fn binding_failures(&self) -> usize {
        self.fail - self.exploratory_fail
    }

    fn add(&mut self, other: &Summary) {
        self.total += other.total;
        self.pass += other.pass;
        self.fail += other.fail;
        self.skipped += other.skipped;
        self.exploratory_fail += other.exploratory_fail;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub group: String,
    #[serde(flatten)]
    pub summary: Summary,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub spec: SweepSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<&'static str>,
    pub summary: Summary,
    pub groups: Vec<GroupSummary>,
    pub records: Vec<VerificationRecord>,
}

struct Collector {
    id: StatementId,
    retain: Retain,
    summary: Summary,
    records: Vec<VerificationRecord>,
}

impl Collector {
    fn push<D: Detail>(&mut self, outcome: Outcome<D>, instance: impl FnOnce() -> Instance) {
        self.summary.total += 1;
        let keep = match &outcome {
            Ok((Verdict::Pass, _)) => {
                self.summary.pass += 1;
                self.retain == Retain::All
            }
            Ok((_, d)) => {
                self.summary.fail += 1;
                if d.exploratory() {
                    self.summary.exploratory_fail += 1;
                }
                true
            }
            Err(_) => {
                self.summary.skipped += 1;
                self.retain == Retain::All
            }
        };
        if keep {
            self.records.push(make_record(self.id, instance(), outcome));
        }
    }

    fn skip(&mut self, reason: Skip, instance: impl FnOnce() -> Instance) {
        self.push::<NoDetail>(Err(reason), instance);
    }
}

#[derive(Serialize)]
struct NoDetail;

impl Detail for NoDetail {}

// ------------------------------------------------------------ enumeration

/// Visits every subset of `pool` with size in `sizes`, by size then
/// lexicographically by position in `pool`.
fn for_each_subset(g: &Group, pool: &[usize], sizes: RangeInclusive<usize>, mut f: impl FnMut(&GroupSet)) {
    let n = pool.len();
    for k in sizes {
        if k > n {
            break;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let s = g.set(idx.iter().map(|&i| pool[i])).expect("pool in range");
            f(&s);
            // next combination
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for t in i..k {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }
}

fn random_subset(g: &Group, pool: &[usize], k: usize, rng: &mut ChaCha8Rng) -> GroupSet {
    let mut v = pool.to_vec();
    for i in 0..k {
        let j = rng.gen_range(i..v.len());
        v.swap(i, j);
    }
    g.set(v[..k].iter().copied()).expect("pool in range")
}

/// Size uniform over the feasible part of `sizes`, then a uniform subset.
fn random_sized_subset(g: &Group, pool: &[usize], sizes: RangeInclusive<usize>, rng: &mut ChaCha8Rng) -> Option<GroupSet> {
    let hi = (*sizes.end()).min(pool.len());
    let lo = *sizes.start();
    if lo > hi {
        return None;
    }
    let k = rng.gen_range(lo..=hi);
    Some(random_subset(g, pool, k, rng))
}

fn elements(g: &Group) -> Vec<usize> {
    (0..g.order()).collect()
}

fn non_identity(g: &Group) -> Vec<usize> {
    (1..g.order()).collect()
}

/// Elements allowed in a Chowla set of size `k`.
fn chowla_pool(g: &Group, k: usize) -> Vec<usize> {
    (1..g.order()).filter(|&x| g.elem_order(x) > k).collect()
}

fn for_each_chowla(g: &Group, max: usize, mut f: impl FnMut(&GroupSet)) {
    for k in 1..=max {
        let pool = chowla_pool(g, k);
        for_each_subset(g, &pool, k..=k, &mut f);
    }
}

fn random_chowla(g: &Group, max: usize, rng: &mut ChaCha8Rng) -> Option<GroupSet> {
    let sizes: Vec<usize> = (1..=max).filter(|&k| chowla_pool(g, k).len() >= k).collect();
    if sizes.is_empty() {
        return None;
    }
    let k = sizes[rng.gen_range(0..sizes.len())];
    Some(random_subset(g, &chowla_pool(g, k), k, rng))
}

fn all_proper_nonempty(g: &Group, f: impl FnMut(&GroupSet)) -> Result<()> {
    let n = g.order();
    if n > MAX_ALL_SUBSETS_ORDER {
        return Err(Error::Limit {
            what: "group order for an all-subsets family",
            value: n,
            cap: MAX_ALL_SUBSETS_ORDER,
        });
    }
    let mut f = f;
    for mask in 1u64..(1u64 << n) - 1 {
        f(&GroupSet::from_mask(n, mask));
    }
    Ok(())
}

fn random_proper_nonempty(g: &Group, rng: &mut ChaCha8Rng) -> Option<GroupSet> {
    if g.order() < 2 {
        return None;
    }
    loop {
        let s = g.set((0..g.order()).filter(|_| rng.gen_bool(0.5))).expect("in range");
        if !s.is_empty() && s.len() < g.order() {
            return Some(s);
        }
    }
}

// ------------------------------------------------------------ families

enum Source<'a> {
    All,
    Sample { count: usize, rng: &'a mut ChaCha8Rng },
}

fn sizes(max: usize) -> RangeInclusive<usize> {
    1..=max
}

fn pairs_same_size(
    g: &Group,
    src: Source<'_>,
    anchors: impl Fn(&mut dyn FnMut(&GroupSet)),
    random_anchor: impl Fn(&mut ChaCha8Rng) -> Option<GroupSet>,
    mut f: impl FnMut(&GroupSet, &GroupSet),
) {
    let all = elements(g);
    match src {
        Source::All => anchors(&mut |b: &GroupSet| {
            for_each_subset(g, &all, b.len()..=b.len(), |a| f(b, a));
        }),
        Source::Sample { count, rng } => {
            for _ in 0..count {
                let Some(b) = random_anchor(rng) else { return };
                let a = random_subset(g, &all, b.len(), rng);
                f(&b, &a);
            }
        }
    }
}

fn run_group(spec: &SweepSpec, g: &Group, src: Source<'_>, c: &mut Collector) -> Result<()> {
    let m = spec.max_set_size.min(g.order());
    let all = elements(g);
    let nonid = non_identity(g);
    let ba = |b: &GroupSet, a: &GroupSet| Instance::new(g).with_set("B", b).with_set("A", a);
    match spec.statement {
        StatementId::K1 | StatementId::Mcp => {
            let id = spec.statement;
            pairs_same_size(
                g,
                src,
                |f| for_each_chowla(g, m, f),
                |rng| random_chowla(g, m, rng),
                |b, a| {
                    if id == StatementId::K1 {
                        c.push(check_k1(g, b, a), || ba(b, a));
                    } else {
                        c.push(check_mcp(g, b, a), || ba(b, a));
                    }
                },
            );
        }
        StatementId::Karolyi => {
            let p = p_of_group(g)?;
            let cap = (1..=m).take_while(|&k| p.exceeds(k)).last().unwrap_or(0);
            pairs_same_size(
                g,
                src,
                |f| for_each_subset(g, &nonid, sizes(cap), f),
                |rng| random_sized_subset(g, &nonid, sizes(cap), rng),
                |b, a| c.push(check_karolyi(g, b, a, p), || ba(b, a)),
            );
        }
        StatementId::Trans | StatementId::Deg | StatementId::KhcForm => {
            let id = spec.statement;
            pairs_same_size(
                g,
                src,
                |f| for_each_subset(g, &all, sizes(m), f),
                |rng| random_sized_subset(g, &all, sizes(m), rng),
                |b, a| match id {
                    StatementId::Trans => {
                        for x in 0..g.order() {
                            c.push(check_trans(g, b, a, x), || ba(b, a).with_param("x", x));
                        }
                    }
                    StatementId::Deg => c.push(check_deg(g, b, a), || ba(b, a)),
                    _ => c.push(check_khc_form(g, b, a), || ba(b, a)),
                },
            );
        }
        StatementId::Mubb | StatementId::Cchowla | StatementId::Vchowla => {
            let id = spec.statement;
            let mut visit = |b: &GroupSet| match id {
                StatementId::Mubb => c.push(check_mubb(g, b), || Instance::new(g).with_set("B", b)),
                StatementId::Cchowla => c.push(check_cchowla(g, b), || Instance::new(g).with_set("S", b)),
                _ => c.push(check_vchowla(g, b), || Instance::new(g).with_set("S", b)),
            };
            match src {
                Source::All => for_each_chowla(g, m, visit),
                Source::Sample { count, rng } => {
                    for _ in 0..count {
                        match random_chowla(g, m, rng) {
                            Some(b) => visit(&b),
                            None => break,
                        }
                    }
                }
            }
        }
        StatementId::Eho | StatementId::Ehol => eho_family(spec, g, m, src, c),
        StatementId::OlsonXy => {
            let mut visit = |t: &GroupSet, x: usize, y: usize| {
                c.push(check_olson_xy(g, t, x, y), || {
                    Instance::new(g).with_set("T", t).with_param("x", x).with_param("y", y)
                })
            };
            match src {
                Source::All => for_each_subset(g, &all, sizes(m), |t| {
                    for x in 0..g.order() {
                        for y in 0..g.order() {
                            visit(t, x, y);
                        }
                    }
                }),
                Source::Sample { count, rng } => {
                    for _ in 0..count {
                        let t = random_sized_subset(g, &all, sizes(m), rng).expect("non-trivial range");
                        let x = rng.gen_range(0..g.order());
                        let y = rng.gen_range(0..g.order());
                        visit(&t, x, y);
                    }
                }
            }
        }
        StatementId::OlsonClique => {
            let mut visit = |b: &GroupSet, cc: &GroupSet| {
                c.push(check_olson_clique(g, b, cc), || {
                    Instance::new(g).with_set("B", b).with_set("C", cc)
                })
            };
            match src {
                Source::All => for_each_subset(g, &all, sizes(m), |b| {
                    for_each_subset(g, &nonid, sizes(m), |cc| visit(b, cc))
                }),
                Source::Sample { count, rng } => {
                    for _ in 0..count {
                        let b = random_sized_subset(g, &all, sizes(m), rng).expect("non-trivial range");
                        let Some(cc) = random_sized_subset(g, &nonid, sizes(m), rng) else { break };
                        visit(&b, &cc);
                    }
                }
            }
        }
        StatementId::Cf => cf_family(g, m, src, c)?,
        StatementId::Losonczy => {
            let mut list = Vec::new();
            for h in enumerate_subgroups(g)? {
                if h.len() >= 2 && h.len() < g.order() {
                    list.extend((0..g.order()).filter(|&a| !h.contains(a)).map(|a| (h.clone(), a)));
                }
            }
            let mut visit = |(h, a): &(GroupSet, usize)| {
                c.push(check_losonczy(g, h, *a), || {
                    Instance::new(g).with_set("H", h).with_param("a", *a)
                })
            };
            match src {
                Source::All => list.iter().for_each(&mut visit),
                Source::Sample { count, rng } if !list.is_empty() => {
                    for _ in 0..count {
                        visit(&list[rng.gen_range(0..list.len())]);
                    }
                }
                Source::Sample { .. } => {}
            }
        }
        StatementId::ProgExample1 => {
            let list: Vec<(usize, usize)> = (1..g.order())
                .flat_map(|r| (0..=g.elem_order(r).saturating_sub(3)).map(move |j| (r, j)))
                .filter(|&(r, j)| g.elem_order(r) >= 3 && j < m)
                .collect();
            let mut visit = |&(r, j): &(usize, usize)| {
                c.push(check_prog_example_1(g, r, j), || {
                    Instance::new(g).with_param("r", r).with_param("j", j)
                })
            };
            match src {
                Source::All => list.iter().for_each(&mut visit),
                Source::Sample { count, rng } if !list.is_empty() => {
                    for _ in 0..count {
                        visit(&list[rng.gen_range(0..list.len())]);
                    }
                }
                Source::Sample { .. } => {}
            }
        }
        StatementId::ProgExample2 => {
            let relaxed = spec.relax_order_floor;
            let floor = |j: usize| if relaxed { j + 2 } else { 2 * j + 6 };
            let list: Vec<(usize, usize)> = (1..g.order())
                .flat_map(|r| (0..g.elem_order(r)).map(move |j| (r, j)))
                .filter(|&(r, j)| g.elem_order(r) >= floor(j) && j < m)
                .collect();
            let mut visit = |r: usize, j: usize, a: usize| {
                c.push(check_prog_example_2(g, r, j, a, !relaxed), || {
                    let inst = Instance::new(g).with_param("r", r).with_param("j", j).with_param("a", a);
                    if relaxed {
                        inst.with_param("relaxed_floor", 1)
                    } else {
                        inst
                    }
                })
            };
            let valid = |r: usize, j: usize| -> Vec<usize> {
                // P ∪ {r^(j+1), r^(j+2)}
                let mut bad: Vec<usize> = (2..=j + 2).map(|e| g.pow(r, e as i64)).collect();
                bad.extend([0, g.pow(r, j as i64 + 1)]);
                (0..g.order()).filter(|a| !bad.contains(a)).collect()
            };
            match src {
                Source::All => {
                    for &(r, j) in &list {
                        for a in valid(r, j) {
                            visit(r, j, a);
                        }
                    }
                }
                Source::Sample { count, rng } if !list.is_empty() => {
                    for _ in 0..count {
                        let (r, j) = list[rng.gen_range(0..list.len())];
                        let pool = valid(r, j);
                        if pool.is_empty() {
                            continue;
                        }
                        visit(r, j, pool[rng.gen_range(0..pool.len())]);
                    }
                }
                Source::Sample { .. } => {}
            }
        }
    }
    Ok(())
}

/// `S` ranges over non-empty subsets of `G \ {1}`; `κ₂` is computed once per
/// `S`. When it cannot be computed the `S` is recorded as one skip.
fn eho_family(spec: &SweepSpec, g: &Group, m: usize, src: Source<'_>, c: &mut Collector) {
    let all = elements(g);
    let nonid = non_identity(g);
    let ehol = spec.statement == StatementId::Ehol;
    let side = spec.side;
    let st = |s: &GroupSet, t: &GroupSet| Instance::new(g).with_set("S", s).with_set("T", t);
    let visit = |c: &mut Collector, s: &GroupSet, t: &GroupSet, ctx: EhoContext| {
        if ehol {
            c.push(check_ehol(g, s, t, side, ctx), || st(s, t));
        } else {
            c.push(check_eho(g, s, t, side, ctx), || st(s, t));
        }
    };
    match src {
        Source::All => {
            let mut skips = Vec::new();
            for_each_subset(g, &nonid, sizes(m), |s| match eho_context(g, s) {
                Ok(ctx) => {
                    let t_sizes = if ehol { s.len()..=s.len() } else { sizes(m) };
                    for_each_subset(g, &all, t_sizes, |t| visit(c, s, t, ctx));
                }
                Err(skip) => skips.push((s.clone(), skip)),
            });
            for (s, skip) in skips {
                c.skip(skip, || Instance::new(g).with_set("S", &s));
            }
        }
        Source::Sample { count, rng } => {
            let mut cache: BTreeMap<GroupSet, std::result::Result<EhoContext, Skip>> = BTreeMap::new();
            for _ in 0..count {
                let Some(s) = random_sized_subset(g, &nonid, sizes(m), rng) else { break };
                let t = if ehol {
                    random_subset(g, &all, s.len(), rng)
                } else {
                    random_sized_subset(g, &all, sizes(m), rng).expect("non-trivial range")
                };
                let ctx = cache.entry(s.clone()).or_insert_with(|| eho_context(g, &s)).clone();
                match ctx {
                    Ok(ctx) => visit(c, &s, &t, ctx),
                    Err(skip) => c.skip(skip, || st(&s, &t)),
                }
            }
        }
    }
}

/// `S̃ ∋ 1` with `|S̃| <= m`; `T` ranges over every non-empty proper subset of
/// `G`. A non-Cauchy `S̃` is recorded as one skip.
fn cf_family(g: &Group, m: usize, src: Source<'_>, c: &mut Collector) -> Result<()> {
    let nonid = non_identity(g);
    let st = |s: &GroupSet, t: &GroupSet| Instance::new(g).with_set("S", s).with_set("T", t);
    match src {
        Source::All => {
            let mut anchors = Vec::new();
            for_each_subset(g, &nonid, 0..=m.saturating_sub(1), |s| {
                let mut s = s.clone();
                s.insert(0);
                anchors.push(s);
            });
            for s in anchors {
                match cf_context(g, &s) {
                    Ok(ctx) => all_proper_nonempty(g, |t| c.push(check_cf(g, &ctx, t), || st(&s, t)))?,
                    Err(skip) => c.skip(skip, || Instance::new(g).with_set("S", &s)),
                }
            }
        }
        Source::Sample { count, rng } => {
            let mut cache = BTreeMap::new();
            for _ in 0..count {
                let mut s = random_sized_subset(g, &nonid, 0..=m.saturating_sub(1), rng).expect("size 0 always fits");
                s.insert(0);
                let Some(t) = random_proper_nonempty(g, rng) else { break };
                let ctx = cache.entry(s.clone()).or_insert_with(|| cf_context(g, &s));
                match ctx {
                    Ok(ctx) => c.push(check_cf(g, ctx, &t), || st(&s, &t)),
                    Err(skip) => c.skip(skip.clone(), || st(&s, &t)),
                }
            }
        }
    }
    Ok(())
}

/// Runs one statement over every group in the spec. Never stops at a failure.
pub fn sweep(spec: &SweepSpec) -> Result<SweepReport> {
    if spec.max_set_size == 0 {
        return Err(Error::Precondition("max set size must be at least 1".into()));
    }
    if spec.statement == StatementId::KhcForm && spec.max_set_size > MAX_KHC_SIZE {
        return Err(Error::Limit {
            what: "max set size for KHC_FORM",
            value: spec.max_set_size,
            cap: MAX_KHC_SIZE,
        });
    }
    let mut summary = Summary::default();
    let mut groups = Vec::with_capacity(spec.groups.len());
    let mut records = Vec::new();
    for (i, name) in spec.groups.iter().enumerate() {
        let g = make_group(name)?;
        let mut c = Collector {
            id: spec.statement,
            retain: spec.retain,
            summary: Summary::default(),
            records: Vec::new(),
        };
        match spec.mode {
            SweepMode::Exhaustive => run_group(spec, &g, Source::All, &mut c)?,
            SweepMode::Sample { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i as u64);
                run_group(spec, &g, Source::Sample { count, rng: &mut rng }, &mut c)?;
            }
        }
        summary.add(&c.summary);
        groups.push(GroupSummary {
            group: g.spec().to_string(),
            summary: c.summary,
        });
        records.append(&mut c.records);
    }
    Ok(SweepReport {
        spec: spec.clone(),
        generator: matches!(spec.mode, SweepMode::Sample { .. }).then_some(GENERATOR),
        summary,
        groups,
        records,
    })
}

fn missing_t() -> Error {
    Error::Precondition("instance has no set \"T\"".into())
}

/// Re-runs the check behind a record from its embedded instance.
pub fn replay(record: &VerificationRecord) -> Result<VerificationRecord> {
    let inst = &record.instance;
    let g = make_group(&inst.group)?;
    let set = |name| inst.set(&g, name);
    let side = record
        .details
        .get("side")
        .and_then(|v| v.as_str())
        .map(str::parse)
        .transpose()?
        .unwrap_or(Side::Right);
    match record.statement_id {
        StatementId::K1 => verify_k1(&g, &set("B")?, &set("A")?),
        StatementId::Karolyi => verify_karolyi(&g, &set("B")?, &set("A")?),
        StatementId::Mcp => verify_mcp(&g, &set("B")?, &set("A")?),
        StatementId::Mubb => verify_mubb(&g, &set("B")?),
        StatementId::Eho | StatementId::Ehol if !inst.sets.contains_key("T") => {
            let s = set("S")?;
            let skip = eho_context(&g, &s).err().ok_or_else(missing_t)?;
            Ok(make_record::<NoDetail>(record.statement_id, Instance::new(&g).with_set("S", &s), Err(skip)))
        }
        StatementId::Eho => verify_eho(&g, &set("S")?, &set("T")?, side),
        StatementId::Ehol => verify_ehol(&g, &set("S")?, &set("T")?, side),
        StatementId::OlsonXy => verify_olson_xy(&g, &set("T")?, inst.param("x")?, inst.param("y")?),
        StatementId::OlsonClique => verify_olson_clique(&g, &set("B")?, &set("C")?),
        StatementId::Cchowla => verify_cchowla(&g, &set("S")?),
        StatementId::Vchowla => verify_vchowla(&g, &set("S")?),
        StatementId::Cf if !inst.sets.contains_key("T") => {
            let s = set("S")?;
            let skip = cf_context(&g, &s).err().ok_or_else(missing_t)?;
            Ok(make_record::<NoDetail>(StatementId::Cf, Instance::new(&g).with_set("S", &s), Err(skip)))
        }
        StatementId::Cf => verify_cf(&g, &set("S")?, &set("T")?),
        StatementId::Trans => verify_trans(&g, &set("B")?, &set("A")?, inst.param("x")?),
        StatementId::Deg => verify_deg(&g, &set("B")?, &set("A")?),
        StatementId::KhcForm => verify_khc_form(&g, &set("B")?, &set("A")?),
        StatementId::Losonczy => verify_losonczy(&g, &set("H")?, inst.param("a")?),
        StatementId::ProgExample1 => verify_prog_example_1(&g, inst.param("r")?, inst.param("j")?),
        StatementId::ProgExample2 => verify_prog_example_2(
            &g,
            inst.param("r")?,
            inst.param("j")?,
            inst.param("a")?,
            !inst.params.contains_key("relaxed_floor"),
        ),
    }
}
