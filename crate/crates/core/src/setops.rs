//! Set algebra over a group and the set classifications used throughout the
//! crate: Chowla subsets, progressions and the Erdős–Heilbronn function.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::set::GroupSet;

/// Which side a group element acts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Right, Side::Left];

    /// `x·a` for `Right`, `a·x` for `Left`.
    #[inline]
    pub fn act(self, g: &Group, x: usize, a: usize) -> usize {
        match self {
            Side::Right => g.mul(x, a),
            Side::Left => g.mul(a, x),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "side must be \"left\" or \"right\"".into(),
            }),
        }
    }
}

/// `{start·ratio^i}` (right) or `{ratio^i·start}` (left) for `0 <= i < length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgressionWitness {
    pub ratio: usize,
    pub start: usize,
    pub length: usize,
    pub side: Side,
}

impl ProgressionWitness {
    pub fn elements(&self, g: &Group) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length);
        let mut x = self.start;
        for _ in 0..self.length {
            out.push(x);
            x = self.side.act(g, x, self.ratio);
        }
        out
    }
}

/// The product set `X·S`.
pub fn mul_sets(g: &Group, x: &GroupSet, s: &GroupSet) -> Result<GroupSet> {
    x.check_domain(g.order())?;
    s.check_domain(g.order())?;
    let mut out = g.empty_set();
    let s_elems = s.to_vec();
    for a in x {
        for &b in &s_elems {
            out.insert(g.mul(a, b));
        }
    }
    Ok(out)
}

pub fn adjoin_identity(s: &GroupSet) -> GroupSet {
    let mut out = s.clone();
    out.insert(0);
    out
}

pub fn invert_set(g: &Group, s: &GroupSet) -> Result<GroupSet> {
    s.check_domain(g.order())?;
    g.set(s.iter().map(|x| g.inv(x)))
}

pub fn complement(g: &Group, s: &GroupSet) -> Result<GroupSet> {
    s.check_domain(g.order())?;
    Ok(g.full_set().difference(s))
}

/// `S·a` (right) or `a·S` (left).
pub fn translate(g: &Group, s: &GroupSet, a: usize, side: Side) -> Result<GroupSet> {
    s.check_domain(g.order())?;
    g.check_element(a)?;
    g.set(s.iter().map(|x| side.act(g, x, a)))
}

/// Chowla subset: non-empty, avoids the identity, and every element has order
/// at least `|S| + 1`.
pub fn is_chowla(g: &Group, s: &GroupSet) -> Result<bool> {
    is_chowla_with_threshold(g, s, s.len() + 1)
}

/// Chowla test with an explicit minimum element order.
pub fn is_chowla_with_threshold(g: &Group, s: &GroupSet, min_order: usize) -> Result<bool> {
    s.check_domain(g.order())?;
    if s.is_empty() {
        return Err(Error::EmptySet("S"));
    }
    Ok(!s.contains(0) && s.iter().all(|x| g.elem_order(x) >= min_order))
}

/// Finds a progression presentation of `s`, preferring right progressions,
/// then the smallest ratio, then the smallest start.
pub fn progression_witness(g: &Group, s: &GroupSet) -> Result<Option<ProgressionWitness>> {
    s.check_domain(g.order())?;
    if s.is_empty() {
        return Err(Error::EmptySet("S"));
    }
    let k = s.len();
    let elems = s.to_vec();
    for side in Side::BOTH {
        for r in 0..g.order() {
            // a·r^i are pairwise distinct for i < k iff ord(r) >= k
            if g.elem_order(r) < k {
                continue;
            }
            'start: for &a in &elems {
                let mut x = a;
                for _ in 1..k {
                    x = side.act(g, x, r);
                    if !s.contains(x) {
                        continue 'start;
                    }
                }
                return Ok(Some(ProgressionWitness {
                    ratio: r,
                    start: a,
                    length: k,
                    side,
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_progression(g: &Group, s: &GroupSet) -> Result<bool> {
    Ok(progression_witness(g, s)?.is_some())
}

/// Erdős–Heilbronn function: `|T·x \ T|` (right) or `|x·T \ T|` (left).
pub fn lambda(g: &Group, t: &GroupSet, x: usize, side: Side) -> Result<usize> {
    t.check_domain(g.order())?;
    g.check_element(x)?;
    Ok(lambda_unchecked(g, t, x, side))
}

/// Translation is injective, so this counts elements leaving `T`.
#[inline]
pub(crate) fn lambda_unchecked(g: &Group, t: &GroupSet, x: usize, side: Side) -> usize {
    t.iter().filter(|&y| !t.contains(side.act(g, y, x))).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn set(g: &Group, xs: &[usize]) -> GroupSet {
        g.set(xs.iter().copied()).unwrap()
    }

    #[test]
    fn product_sets() {
        let g = make_group("cyclic:5").unwrap();
        let s = set(&g, &[0, 1, 2]);
        assert_eq!(mul_sets(&g, &set(&g, &[0]), &s).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(mul_sets(&g, &set(&g, &[1, 2]), &s).unwrap().to_vec(), vec![1, 2, 3, 4]);
        assert!(mul_sets(&g, &g.empty_set(), &s).unwrap().is_empty());
        let other = make_group("cyclic:6").unwrap();
        assert!(matches!(
            mul_sets(&g, &other.full_set(), &s),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn unary_set_ops() {
        let g = make_group("cyclic:5").unwrap();
        let s = set(&g, &[1, 2]);
        assert_eq!(adjoin_identity(&s).to_vec(), vec![0, 1, 2]);
        assert_eq!(invert_set(&g, &s).unwrap().to_vec(), vec![3, 4]);
        assert_eq!(complement(&g, &s).unwrap().to_vec(), vec![0, 3, 4]);
        assert_eq!(translate(&g, &s, 3, Side::Right).unwrap().to_vec(), vec![0, 4]);
    }

    #[test]
    fn translate_sides_differ_in_nonabelian_group() {
        let g = make_group("symmetric:3").unwrap();
        let s = set(&g, &[1]);
        let r = translate(&g, &s, 2, Side::Right).unwrap();
        let l = translate(&g, &s, 2, Side::Left).unwrap();
        assert_eq!(r.to_vec(), vec![g.mul(1, 2)]);
        assert_eq!(l.to_vec(), vec![g.mul(2, 1)]);
    }

    #[test]
    fn chowla_examples() {
        let g = make_group("cyclic:10").unwrap();
        assert!(is_chowla(&g, &set(&g, &[1, 3])).unwrap());
        assert!(!is_chowla(&g, &set(&g, &[5, 1])).unwrap());
        assert!(!is_chowla(&g, &set(&g, &[0])).unwrap());
        assert_eq!(is_chowla(&g, &g.empty_set()), Err(Error::EmptySet("S")));
        // the weaker threshold |S| accepts {5, 1}? order of 5 is 2 = |S|
        assert!(is_chowla_with_threshold(&g, &set(&g, &[5, 1]), 2).unwrap());
    }

    #[test]
    fn progression_examples() {
        let g = make_group("cyclic:12").unwrap();
        let w = progression_witness(&g, &set(&g, &[2, 5, 8])).unwrap().unwrap();
        assert_eq!((w.ratio, w.start, w.length, w.side), (3, 2, 3, Side::Right));

        let c7 = make_group("cyclic:7").unwrap();
        assert_eq!(progression_witness(&c7, &set(&c7, &[0, 1, 3])).unwrap(), None);

        let w = progression_witness(&c7, &set(&c7, &[4])).unwrap().unwrap();
        assert_eq!((w.ratio, w.start, w.length), (0, 4, 1));
        assert_eq!(progression_witness(&c7, &c7.empty_set()), Err(Error::EmptySet("S")));
    }

    #[test]
    fn two_sets_are_progressions() {
        let g = make_group("quaternion").unwrap();
        for a in 0..8 {
            for b in 0..8 {
                if a != b {
                    let w = progression_witness(&g, &set(&g, &[a, b])).unwrap().unwrap();
                    let mut got = w.elements(&g);
                    got.sort();
                    assert_eq!(got, set(&g, &[a, b]).to_vec());
                }
            }
        }
    }

    #[test]
    fn lambda_examples() {
        let g = make_group("cyclic:6").unwrap();
        let t = set(&g, &[0, 1]);
        assert_eq!(lambda(&g, &t, 2, Side::Right).unwrap(), 2);
        assert_eq!(lambda(&g, &t, 1, Side::Right).unwrap(), 1);
        assert_eq!(lambda(&g, &t, 0, Side::Right).unwrap(), 0);
        assert!(lambda(&g, &t, 6, Side::Left).is_err());
    }
}
