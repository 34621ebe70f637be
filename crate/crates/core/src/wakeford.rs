//! Wakeford graphs and pairings.
//!
//! For `|A| = |B|`, a Wakeford pairing is a bijection `φ: B → A` with
//! `x·φ(x) ∉ A` for every `x ∈ B`. These are exactly the perfect matchings of
//! the relation `ℛ = {(x, y) ∈ B × A : xy ∉ A}`, so `μ(B, A)` is the
//! permanent of its biadjacency matrix.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::matching::{self, Multiplicity, MAX_PERMANENT_SIZE};
use crate::set::GroupSet;
use crate::setops::{adjoin_identity, complement, invert_set, mul_sets};

/// Largest `|B|` accepted by [`mu_naive`].
pub const MAX_NAIVE_SIZE: usize = 8;

#[derive(Debug, Clone)]
pub struct WakefordGraph<'g> {
    pub group: &'g Group,
    /// Elements of `B`, ascending.
    pub b_elems: Vec<usize>,
    /// Elements of `A`, ascending.
    pub a_elems: Vec<usize>,
    /// Row `i` holds the positions `j` (into `a_elems`) with `b_i·a_j ∉ A`.
    pub rows: Vec<GroupSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMode {
    Exact,
    ExistenceOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub exists: bool,
    /// `(b, φ(b))` pairs in ascending order of `b`.
    pub witness: Option<Vec<(usize, usize)>>,
    /// Exact count when `mu_exact`, otherwise 1 or 0 standing in for existence.
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub mu: BigUint,
    pub mu_exact: bool,
    /// A subset `X ⊆ B` with `|ℛ(X)| < |X|` when no pairing exists.
    #[serde(serialize_with = "crate::report::opt_set_as_list")]
    pub hall_violator: Option<GroupSet>,
    pub max_degree: usize,
    pub max_codegree: usize,
}

pub fn build_graph<'g>(g: &'g Group, b: &GroupSet, a: &GroupSet) -> Result<WakefordGraph<'g>> {
    b.check_domain(g.order())?;
    a.check_domain(g.order())?;
    if b.len() != a.len() {
        return Err(Error::SizeMismatch { b: b.len(), a: a.len() });
    }
    if b.is_empty() {
        return Err(Error::EmptySet("B"));
    }
    let b_elems = b.to_vec();
    let a_elems = a.to_vec();
    let m = a_elems.len();
    let rows = b_elems
        .iter()
        .map(|&x| {
            let mut row = GroupSet::empty(m);
            for (j, &y) in a_elems.iter().enumerate() {
                if !a.contains(g.mul(x, y)) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    Ok(WakefordGraph {
        group: g,
        b_elems,
        a_elems,
        rows,
    })
}

impl WakefordGraph<'_> {
    pub fn size(&self) -> usize {
        self.b_elems.len()
    }

    pub fn b_set(&self) -> GroupSet {
        GroupSet::from_indices(self.group.order(), self.b_elems.iter().copied()).expect("in range")
    }

    pub fn a_set(&self) -> GroupSet {
        GroupSet::from_indices(self.group.order(), self.a_elems.iter().copied()).expect("in range")
    }

    /// `ℛ(x)` as a set of group elements.
    pub fn neighbours(&self, i: usize) -> GroupSet {
        GroupSet::from_indices(self.group.order(), self.rows[i].iter().map(|j| self.a_elems[j]))
            .expect("in range")
    }

    /// `ℛ(X)` for `X ⊆ B`.
    pub fn neighbourhood(&self, x: &GroupSet) -> GroupSet {
        let mut out = self.group.empty_set();
        for (i, &b) in self.b_elems.iter().enumerate() {
            if x.contains(b) {
                for j in &self.rows[i] {
                    out.insert(self.a_elems[j]);
                }
            }
        }
        out
    }

    /// `Δ(ℛ)`.
    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(GroupSet::len).max().unwrap_or(0)
    }

    /// `Δ⁻¹(ℛ)`.
    pub fn max_codegree(&self) -> usize {
        (0..self.a_elems.len())
            .map(|j| self.rows.iter().filter(|r| r.contains(j)).count())
            .max()
            .unwrap_or(0)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(GroupSet::to_vec).collect()
    }

    fn row_masks(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.low_word() as u32).collect()
    }

    /// Whether the graph has zero, one or several perfect matchings. Runs in
    /// polynomial time, so it applies beyond the exact-counting cap.
    pub fn multiplicity(&self) -> Multiplicity {
        matching::multiplicity(&self.adjacency(), self.a_elems.len())
    }

    /// True when every non-empty proper `X ⊂ B` has `|ℛ(X)| >= |X| + 1`.
    /// Enumerates all subsets of `B`, so `|B|` must be small.
    pub fn has_strict_hall_surplus(&self) -> bool {
        let n = self.size();
        assert!(n <= MAX_PERMANENT_SIZE);
        let masks = self.row_masks();
        (1u32..(1 << n) - 1).all(|x| {
            let nb = (0..n).filter(|&i| x >> i & 1 == 1).fold(0u32, |acc, i| acc | masks[i]);
            nb.count_ones() > x.count_ones()
        })
    }
}

/// Decides whether a pairing exists (with a witness or a Hall violator) and
/// counts pairings exactly in `CountMode::Exact`.
pub fn analyze(graph: &WakefordGraph<'_>, mode: CountMode) -> Result<MatchingReport> {
    let n = graph.size();
    if mode == CountMode::Exact && n > MAX_PERMANENT_SIZE {
        return Err(Error::Limit {
            what: "|B| for exact counting",
            value: n,
            cap: MAX_PERMANENT_SIZE,
        });
    }
    let adj = graph.adjacency();
    let m = matching::hopcroft_karp(&adj, graph.a_elems.len());
    let exists = m.size == n;
    let (witness, hall_violator) = if exists {
        let pairs = (0..n)
            .map(|i| (graph.b_elems[i], graph.a_elems[m.left_to_right[i].expect("perfect")]))
            .collect();
        (Some(pairs), None)
    } else {
        let reach = matching::alternating_reach(&adj, &m);
        let x = GroupSet::from_indices(graph.group.order(), reach.into_iter().map(|i| graph.b_elems[i]))?;
        (None, Some(x))
    };
    let (mu, mu_exact) = match mode {
        CountMode::Exact => (matching::permanent(&graph.row_masks())?, true),
        CountMode::ExistenceOnly => (BigUint::from(exists as u8), false),
    };
    debug_assert!(!mu_exact || exists == (mu > BigUint::ZERO));
    Ok(MatchingReport {
        exists,
        witness,
        mu,
        mu_exact,
        hall_violator,
        max_degree: graph.max_degree(),
        max_codegree: graph.max_codegree(),
    })
}

/// Number of Wakeford pairings from `B` onto `A`.
pub fn mu(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<BigUint> {
    let graph = build_graph(g, b, a)?;
    if graph.size() > MAX_PERMANENT_SIZE {
        return Err(Error::Limit {
            what: "|B| for exact counting",
            value: graph.size(),
            cap: MAX_PERMANENT_SIZE,
        });
    }
    matching::permanent(&graph.row_masks())
}

/// Counts pairings by trying every bijection against the Cayley table.
pub fn mu_naive(g: &Group, b: &GroupSet, a: &GroupSet) -> Result<BigUint> {
    b.check_domain(g.order())?;
    a.check_domain(g.order())?;
    if b.len() != a.len() {
        return Err(Error::SizeMismatch { b: b.len(), a: a.len() });
    }
    if b.len() > MAX_NAIVE_SIZE {
        return Err(Error::Limit {
            what: "|B| for naive counting",
            value: b.len(),
            cap: MAX_NAIVE_SIZE,
        });
    }
    let bs = b.to_vec();
    let mut image = a.to_vec();
    let mut count = 0u64;
    // Heap's algorithm over the images
    let n = image.len();
    let mut c = vec![0usize; n];
    let valid = |image: &[usize]| bs.iter().zip(image).all(|(&x, &y)| !a.contains(g.mul(x, y)));
    if valid(&image) {
        count += 1;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                image.swap(0, i);
            } else {
                image.swap(c[i], i);
            }
            if valid(&image) {
                count += 1;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Returns `(|ℛ(X)|, |(V·X̃) \ V|)` with `V` the complement of `A⁻¹`; the two
/// agree for every `X ⊆ B`.
pub fn hall_form_check(g: &Group, b: &GroupSet, a: &GroupSet, x: &GroupSet) -> Result<(usize, usize)> {
    b.check_domain(g.order())?;
    a.check_domain(g.order())?;
    x.check_domain(g.order())?;
    if !x.is_subset(b) {
        return Err(Error::Precondition("X must be a subset of B".into()));
    }
    // ℛ(X) = {y ∈ A : some x ∈ X has xy ∉ A}
    let direct = a
        .iter()
        .filter(|&y| x.iter().any(|xx| !a.contains(g.mul(xx, y))))
        .count();
    let v = complement(g, &invert_set(g, a)?)?;
    let vx = mul_sets(g, &v, &adjoin_identity(x))?;
    Ok((direct, vx.difference_len(&v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn set(g: &Group, xs: &[usize]) -> GroupSet {
        g.set(xs.iter().copied()).unwrap()
    }

    #[test]
    fn graph_rows_small_cyclic() {
        let g = make_group("cyclic:5").unwrap();
        let s = set(&g, &[1, 2]);
        let graph = build_graph(&g, &s, &s).unwrap();
        assert_eq!(graph.neighbours(0).to_vec(), vec![2]);
        assert_eq!(graph.neighbours(1).to_vec(), vec![1, 2]);
    }

    #[test]
    fn singleton_row_is_full() {
        let g = make_group("symmetric:3").unwrap();
        for x in 1..6 {
            for y in 0..6 {
                let graph = build_graph(&g, &set(&g, &[x]), &set(&g, &[y])).unwrap();
                assert_eq!(graph.neighbours(0).to_vec(), vec![y]);
                assert_eq!(mu(&g, &set(&g, &[x]), &set(&g, &[y])).unwrap(), BigUint::from(1u8));
            }
        }
    }

    #[test]
    fn identity_row_is_empty() {
        let g = make_group("cyclic:7").unwrap();
        let graph = build_graph(&g, &set(&g, &[0, 3]), &set(&g, &[1, 5])).unwrap();
        assert!(graph.rows[0].is_empty());
        let r = analyze(&graph, CountMode::Exact).unwrap();
        assert!(!r.exists);
        assert_eq!(r.hall_violator.unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn build_graph_errors() {
        let g = make_group("cyclic:5").unwrap();
        assert_eq!(
            build_graph(&g, &set(&g, &[1]), &set(&g, &[1, 2])).unwrap_err(),
            Error::SizeMismatch { b: 1, a: 2 }
        );
        assert_eq!(
            build_graph(&g, &g.empty_set(), &g.empty_set()).unwrap_err(),
            Error::EmptySet("B")
        );
    }

    #[test]
    fn analyze_unique_pairing() {
        let g = make_group("cyclic:5").unwrap();
        let s = set(&g, &[1, 2]);
        let graph = build_graph(&g, &s, &s).unwrap();
        let r = analyze(&graph, CountMode::Exact).unwrap();
        assert!(r.exists);
        assert_eq!(r.mu, BigUint::from(1u8));
        assert_eq!(r.witness.unwrap(), vec![(1, 2), (2, 1)]);
        assert!(r.hall_violator.is_none());
        assert_eq!((r.max_degree, r.max_codegree), (2, 2));
    }

    #[test]
    fn analyze_losonczy_violator() {
        let g = make_group("cyclic:4").unwrap();
        let graph = build_graph(&g, &set(&g, &[1, 2]), &set(&g, &[0, 2])).unwrap();
        let r = analyze(&graph, CountMode::Exact).unwrap();
        assert!(!r.exists);
        assert_eq!(r.mu, BigUint::ZERO);
        assert!(r.witness.is_none());
        assert_eq!(r.hall_violator.unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn complete_graph_counts_factorial() {
        // cyclic:20, A = {0..4}, B = {10..14}: every product lands in {10..18}
        let g = make_group("cyclic:20").unwrap();
        let b = set(&g, &[10, 11, 12, 13, 14]);
        let a = set(&g, &[0, 1, 2, 3, 4]);
        let graph = build_graph(&g, &b, &a).unwrap();
        assert!(graph.rows.iter().all(|r| r.len() == 5));
        assert_eq!(mu(&g, &b, &a).unwrap(), BigUint::from(120u32));
        assert_eq!(mu_naive(&g, &b, &a).unwrap(), BigUint::from(120u32));
    }

    #[test]
    fn existence_only_mode() {
        let g = make_group("cyclic:5").unwrap();
        let s = set(&g, &[1, 2]);
        let r = analyze(&build_graph(&g, &s, &s).unwrap(), CountMode::ExistenceOnly).unwrap();
        assert!(!r.mu_exact);
        assert_eq!(r.mu, BigUint::from(1u8));
    }

    #[test]
    fn exact_cap_enforced() {
        let g = make_group("cyclic:50").unwrap();
        let b = g.set(1..22).unwrap();
        let graph = build_graph(&g, &b, &b).unwrap();
        assert!(matches!(analyze(&graph, CountMode::Exact), Err(Error::Limit { .. })));
        assert!(analyze(&graph, CountMode::ExistenceOnly).unwrap().exists);
        assert!(matches!(mu_naive(&g, &b, &b), Err(Error::Limit { .. })));
    }

    #[test]
    fn naive_counts() {
        let g = make_group("cyclic:5").unwrap();
        let s = set(&g, &[1, 2]);
        assert_eq!(mu_naive(&g, &s, &s).unwrap(), BigUint::from(1u8));
        let c4 = make_group("cyclic:4").unwrap();
        assert_eq!(mu_naive(&c4, &set(&c4, &[1, 2]), &set(&c4, &[0, 2])).unwrap(), BigUint::ZERO);
        // complete 3x3 instance
        let c12 = make_group("cyclic:12").unwrap();
        assert_eq!(
            mu_naive(&c12, &set(&c12, &[6, 7, 8]), &set(&c12, &[0, 1, 2])).unwrap(),
            BigUint::from(6u8)
        );
    }

    #[test]
    fn mu_examples() {
        let g = make_group("cyclic:10").unwrap();
        assert_eq!(mu(&g, &set(&g, &[1, 2, 3, 4]), &set(&g, &[0, 1, 2, 3])).unwrap(), BigUint::from(1u8));
        let c4 = make_group("cyclic:4").unwrap();
        assert_eq!(mu(&c4, &set(&c4, &[1, 2]), &set(&c4, &[0, 2])).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn hall_form_examples() {
        let g = make_group("cyclic:5").unwrap();
        let s = set(&g, &[1, 2]);
        assert_eq!(hall_form_check(&g, &s, &s, &set(&g, &[1])).unwrap(), (1, 1));
        assert_eq!(hall_form_check(&g, &s, &s, &g.empty_set()).unwrap(), (0, 0));
        assert_eq!(hall_form_check(&g, &s, &s, &s).unwrap(), (2, 2));
        assert!(hall_form_check(&g, &s, &s, &set(&g, &[3])).is_err());
    }
}
