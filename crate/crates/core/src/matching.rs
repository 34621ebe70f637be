//! Square bipartite graphs given as bitmask rows: maximum matching with a
//! Hall-violator certificate, uniqueness of perfect matchings, and exact
//! counting through the permanent.

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest side for exact counting.
pub const MAX_PERMANENT_SIZE: usize = 20;

const FREE: usize = usize::MAX;

/// Maximum matching on a bipartite graph with left vertices `0..adj.len()` and
/// right vertices `0..right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxMatching {
    /// Right vertex matched to each left vertex, or `None`.
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
    pub size: usize,
}

/// Hopcroft–Karp. Neighbours are scanned in the order given, so the result
/// is a deterministic function of `adj`.
pub fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> MaxMatching {
    let n = adj.len();
    let mut match_l = vec![FREE; n];
    let mut match_r = vec![FREE; right];
    let mut dist = vec![0usize; n];
    let mut size = 0;

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..n {
            if match_l[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_r[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        let mut cursor = vec![0usize; n];
        for u in 0..n {
            if match_l[u] == FREE && augment(u, adj, &mut match_l, &mut match_r, &mut dist, &mut cursor) {
                size += 1;
            }
        }
    }

    let wrap = |v: usize| (v != FREE).then_some(v);
    MaxMatching {
        left_to_right: match_l.into_iter().map(wrap).collect(),
        right_to_left: match_r.into_iter().map(wrap).collect(),
        size,
    }
}

/// Iterative DFS along the BFS layers.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    let mut stack = vec![root];
    while let Some(&u) = stack.last() {
        if cursor[u] == adj[u].len() {
            dist[u] = usize::MAX;
            stack.pop();
            continue;
        }
        let v = adj[u][cursor[u]];
        let w = match_r[v];
        if w == FREE {
            // flip the path held on the stack
            let mut v = v;
            while let Some(u) = stack.pop() {
                let prev = match_l[u];
                match_l[u] = v;
                match_r[v] = u;
                v = prev;
            }
            return true;
        }
        if dist[w] != usize::MAX && dist[w] == dist[u] + 1 {
            stack.push(w);
        } else {
            cursor[u] += 1;
        }
    }
    false
}

/// Left vertices reachable from free left vertices by alternating paths.
///
/// When the matching is maximum and not perfect, this set `X` has
/// `|N(X)| = |X| - (free vertices in X) < |X|`.
pub fn alternating_reach(adj: &[Vec<usize>], m: &MaxMatching) -> Vec<usize> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| m.left_to_right[u].is_none()).collect();
    for &u in &queue {
        seen[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if let Some(w) = m.right_to_left[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (0..n).filter(|&u| seen[u]).collect()
}

/// How many perfect matchings a graph has, up to "more than one".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Zero,
    One,
    Many,
}

/// Decides between zero, one and several perfect matchings in polynomial time.
///
/// A perfect matching `M` is the only one iff there is no `M`-alternating
/// cycle, i.e. the digraph `u -> match_r[v]` over non-matching edges `(u, v)`
/// is acyclic.
pub fn multiplicity(adj: &[Vec<usize>], right: usize) -> Multiplicity {
    let m = hopcroft_karp(adj, right);
    if m.size < adj.len() || adj.len() != right {
        return Multiplicity::Zero;
    }
    let n = adj.len();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            adj[u]
                .iter()
                .filter(|&&v| m.left_to_right[u] != Some(v))
                .map(|&v| m.right_to_left[v].expect("perfect matching"))
                .collect()
        })
        .collect();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some((u, i)) = stack.pop() {
            if i < succ[u].len() {
                stack.push((u, i + 1));
                let w = succ[u][i];
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return Multiplicity::Many,
                    _ => {}
                }
            } else {
                state[u] = 2;
            }
        }
    }
    Multiplicity::One
}

/// Permanent of a 0/1 matrix whose row `i` is the bitmask `rows[i]`, by
/// inclusion–exclusion over column subsets visited in Gray-code order.
pub fn permanent(rows: &[u32]) -> Result<BigUint> {
    let n = rows.len();
    if n > MAX_PERMANENT_SIZE {
        return Err(Error::Limit {
            what: "matrix size for exact counting",
            value: n,
            cap: MAX_PERMANENT_SIZE,
        });
    }
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    // perm = sum over column sets C of (-1)^(n-|C|) prod_i |row_i ∩ C|.
    // Each product is at most 20^20 < 2^87 and there are at most 2^20 terms.
    let mut total: i128 = 0;
    let mut cols: u32 = 0;
    for k in 1u32..(1u32 << n) {
        cols ^= 1 << k.trailing_zeros();
        let mut prod: i128 = 1;
        for &r in rows {
            let c = (r & cols).count_ones();
            if c == 0 {
                prod = 0;
                break;
            }
            prod *= c as i128;
        }
        if prod != 0 {
            if (n - cols.count_ones() as usize).is_multiple_of(2) {
                total += prod;
            } else {
                total -= prod;
            }
        }
    }
    debug_assert!(total >= 0);
    Ok(BigUint::from(total as u128))
}
