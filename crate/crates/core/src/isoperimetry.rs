//! Isoperimetric connectivity `κ_k(S)`, boundaries and exteriors, the
//! Cauchy/Vosper classifications, and a checker for the cofinite inverse
//! theorem on concrete instances.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{subgroup_generated, Group};
use crate::set::GroupSet;
use crate::setops::{complement, invert_set, mul_sets, translate, Side};

/// Largest `|⟨S⟩|` for the exhaustive connectivity search.
pub const MAX_KAPPA_ORDER: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `(T·S) \ T`
    Forward,
    /// `(T·S⁻¹) \ T`
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub k: usize,
    pub kappa: usize,
    #[serde(serialize_with = "crate::report::opt_set_as_list")]
    pub fragment: Option<GroupSet>,
    pub empty_range: bool,
    /// `q = |⟨S⟩|`
    pub ambient_order: usize,
}

fn require_identity(s: &GroupSet) -> Result<()> {
    if !s.contains(0) {
        return Err(Error::Precondition("S must contain the identity".into()));
    }
    Ok(())
}

pub fn boundary(g: &Group, t: &GroupSet, s: &GroupSet, direction: Direction) -> Result<GroupSet> {
    t.check_domain(g.order())?;
    s.check_domain(g.order())?;
    require_identity(s)?;
    let s = match direction {
        Direction::Forward => s.clone(),
        Direction::Backward => invert_set(g, s)?,
    };
    Ok(mul_sets(g, t, &s)?.difference(t))
}

/// `T^S = G \ (T·S)`.
pub fn exterior(g: &Group, t: &GroupSet, s: &GroupSet) -> Result<GroupSet> {
    t.check_domain(g.order())?;
    s.check_domain(g.order())?;
    require_identity(s)?;
    complement(g, &mul_sets(g, t, s)?)
}

/// `⟨S⟩` re-indexed to `0..q` in ascending element order, with `x·S` as a local
/// bitmask for each local `x`.
struct LocalView {
    elems: Vec<usize>,
    row: Vec<u32>,
}

impl LocalView {
    fn new(g: &Group, s: &GroupSet) -> Result<LocalView> {
        let h = subgroup_generated(g, s)?;
        if h.len() > MAX_KAPPA_ORDER {
            return Err(Error::Limit {
                what: "|<S>| for connectivity",
                value: h.len(),
                cap: MAX_KAPPA_ORDER,
            });
        }
        let elems = h.to_vec();
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in elems.iter().enumerate() {
            local[x] = i;
        }
        let row = elems
            .iter()
            .map(|&x| s.iter().fold(0u32, |m, y| m | 1 << local[g.mul(x, y)]))
            .collect();
        Ok(LocalView { elems, row })
    }

    fn q(&self) -> usize {
        self.elems.len()
    }

    fn to_global(&self, g: &Group, mask: u32) -> GroupSet {
        g.set((0..self.q()).filter(|&i| mask >> i & 1 == 1).map(|i| self.elems[i]))
            .expect("in range")
    }
}

/// Best `(boundary, |X|, X)` found so far; smaller is better.
struct Search<'a> {
    row: &'a [u32],
    q: usize,
    k: usize,
    best: Option<(u32, u32, u32)>,
}

impl Search<'_> {
    /// Visits every `X` extending `x` by elements `>= next`. `XS` only grows
    /// along the way, so a branch dies once `|XS| > q - k`.
    fn visit(&mut self, x: u32, xs: u32, next: usize) {
        let size = x.count_ones();
        if size as usize >= self.k {
            let cand = ((xs & !x).count_ones(), size, x);
            if self.best.is_none_or(|b| cand < b) {
                self.best = Some(cand);
            }
        }
        for i in next..self.q {
            let grown = xs | self.row[i];
            if grown.count_ones() as usize <= self.q - self.k {
                self.visit(x | 1 << i, grown, i + 1);
            }
        }
    }
}

/// `κ_k(S)`: the least `|XS \ X|` over `X ⊆ ⟨S⟩` with `|X| >= k` and
/// `|XS| <= |⟨S⟩| - k`, or `|⟨S⟩| - k + 1` when no such `X` exists.
///
/// The fragment is the minimiser with the fewest elements, ties broken by the
/// smallest mask.
pub fn kappa(g: &Group, s: &GroupSet, k: usize) -> Result<ConnectivityReport> {
    s.check_domain(g.order())?;
    require_identity(s)?;
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let view = LocalView::new(g, s)?;
    let q = view.q();
    if k > q + 1 {
        return Err(Error::Precondition(format!("k = {k} exceeds |<S>| + 1 = {}", q + 1)));
    }
    let mut search = Search {
        row: &view.row,
        q,
        k,
        best: None,
    };
    if k <= q {
        search.visit(0, 0, 0);
    }
    Ok(match search.best {
        Some((value, _, mask)) => ConnectivityReport {
            k,
            kappa: value as usize,
            fragment: Some(view.to_global(g, mask)),
            empty_range: false,
            ambient_order: q,
        },
        None => ConnectivityReport {
            k,
            kappa: q + 1 - k,
            fragment: None,
            empty_range: true,
            ambient_order: q,
        },
    })
}

/// Cauchy/Vosper classification of a set containing the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoperimetricClass {
    pub kappa1: ConnectivityReport,
    pub kappa2: ConnectivityReport,
    pub cauchy: bool,
    pub vosper: bool,
    /// Set when `S = {1}`, where neither notion says anything useful.
    pub degenerate: bool,
}

pub fn classify(g: &Group, s: &GroupSet) -> Result<IsoperimetricClass> {
    let kappa1 = kappa(g, s, 1)?;
    let kappa2 = kappa(g, s, 2)?;
    let n = s.len();
    Ok(IsoperimetricClass {
        cauchy: kappa1.kappa + 1 == n,
        vosper: kappa2.kappa >= n,
        degenerate: n == 1,
        kappa1,
        kappa2,
    })
}

pub fn is_cauchy(g: &Group, s: &GroupSet) -> Result<bool> {
    Ok(kappa(g, s, 1)?.kappa + 1 == s.len())
}

pub fn is_vosper(g: &Group, s: &GroupSet) -> Result<bool> {
    Ok(kappa(g, s, 2)?.kappa >= s.len())
}

/// Outcome of checking the cofinite inverse theorem on one `(S, T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CfVerdict {
    pub boundary_size: usize,
    /// `|∂_S(T)| >= |S| - 1`
    pub boundary_bound: bool,
    pub exterior_empty: bool,
    /// `T^S·a⁻¹ ⊆ ⟨S⟩` for every `a ∈ T^S` (vacuous when `T^S` is empty).
    pub single_coset: bool,
    /// An `a ∈ T^S` breaking the single-coset claim.
    pub single_coset_offender: Option<usize>,
    pub vosper: bool,
    /// Evaluated only when `S` is Vosper and `|∂_S(T)| = |S| - 1`:
    /// `(T^S)·S⁻¹` equals the complement of `T`.
    pub equality_cover: Option<bool>,
    /// Same condition: `|(T^S)·S⁻¹| = |T^S| + |S| - 1`.
    pub equality_size: Option<bool>,
    #[serde(serialize_with = "crate::report::set_as_list")]
    pub exterior: GroupSet,
}

impl CfVerdict {
    pub fn all_pass(&self) -> bool {
        self.boundary_bound
            && self.single_coset
            && self.equality_cover != Some(false)
            && self.equality_size != Some(false)
    }
}

/// Per-`S` data for the cofinite inverse theorem, shared across many `T`.
#[derive(Debug, Clone)]
pub struct CfContext {
    s: GroupSet,
    s_inv: GroupSet,
    subgroup: GroupSet,
    vosper: bool,
}

impl CfContext {
    /// Fails unless `S ∋ 1` is a Cauchy subset.
    pub fn new(g: &Group, s: &GroupSet) -> Result<CfContext> {
        let class = classify(g, s)?;
        if !class.cauchy {
            return Err(Error::Precondition("S must be a Cauchy subset".into()));
        }
        Ok(CfContext {
            s: s.clone(),
            s_inv: invert_set(g, s)?,
            subgroup: subgroup_generated(g, s)?,
            vosper: class.vosper,
        })
    }

    pub fn check(&self, g: &Group, t: &GroupSet) -> Result<CfVerdict> {
        t.check_domain(g.order())?;
        let q = self.subgroup.len();
        let missing = g.order() - t.len();
        if missing == 0 || missing > q - 1 {
            return Err(Error::Precondition(format!(
                "complement of T has {missing} elements; need 1..={}",
                q - 1
            )));
        }
        let ts = mul_sets(g, t, &self.s)?;
        let boundary_size = ts.len() - t.len();
        let boundary_bound = boundary_size + 1 >= self.s.len();
        let ext = complement(g, &ts)?;

        let mut single_coset_offender = None;
        for a in &ext {
            if !translate(g, &ext, g.inv(a), Side::Right)?.is_subset(&self.subgroup) {
                single_coset_offender = Some(a);
                break;
            }
        }

        let (equality_cover, equality_size) = if self.vosper && boundary_size + 1 == self.s.len() {
            let back = mul_sets(g, &ext, &self.s_inv)?;
            let t_bar = complement(g, t)?;
            (Some(back == t_bar), Some(back.len() + 1 == ext.len() + self.s.len()))
        } else {
            (None, None)
        };

        Ok(CfVerdict {
            boundary_size,
            boundary_bound,
            exterior_empty: ext.is_empty(),
            single_coset: single_coset_offender.is_none(),
            single_coset_offender,
            vosper: self.vosper,
            equality_cover,
            equality_size,
            exterior: ext,
        })
    }
}

/// Checks the cofinite inverse theorem for a Cauchy `S ∋ 1` and a `T` whose
/// complement is non-empty with at most `|⟨S⟩| - 1` elements.
pub fn verify_prop_cf(g: &Group, s: &GroupSet, t: &GroupSet) -> Result<CfVerdict> {
    t.check_domain(g.order())?;
    CfContext::new(g, s)?.check(g, t)
}
