//! Finite groups as Cayley tables.
//!
//! Every group is stored as a dense multiplication table over element indices
//! `0..order`, with index 0 the identity. Groups are built from a small
//! descriptor language:
//!
//! ```text
//! spec := "cyclic:" INT | "dihedral:" INT | "symmetric:" INT | "quaternion"
//!       | "product:(" spec "," spec ")"
//! ```

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::set::GroupSet;

/// Largest group order accepted by [`make_group`].
pub const MAX_ORDER: usize = 10_000;
/// Largest group order for subgroup enumeration and `p(G)`.
pub const MAX_SUBGROUP_ORDER: usize = 256;
/// Groups up to this order get an exhaustive associativity check on construction.
pub const ASSOC_CHECK_ORDER: usize = 256;

const QUATERNION_TABLE: [[u16; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 1, 0, 6, 7, 5, 4],
    [3, 2, 0, 1, 7, 6, 4, 5],
    [4, 5, 7, 6, 1, 0, 2, 3],
    [5, 4, 6, 7, 0, 1, 3, 2],
    [6, 7, 4, 5, 3, 2, 1, 0],
    [7, 6, 5, 4, 2, 3, 0, 1],
];

/// Element names for the quaternion group, in index order.
pub const QUATERNION_NAMES: [&str; 8] = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elem_order: Vec<u32>,
    spec: String,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .finish()
    }
}

/// A positive integer or infinity, ordered with infinity last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SizeOrInfinity {
    Finite(usize),
    Infinite,
}

impl SizeOrInfinity {
    pub fn exceeds(self, n: usize) -> bool {
        match self {
            SizeOrInfinity::Finite(p) => n < p,
            SizeOrInfinity::Infinite => true,
        }
    }
}

impl fmt::Display for SizeOrInfinity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeOrInfinity::Finite(n) => write!(f, "{n}"),
            SizeOrInfinity::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Descriptor {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion,
    Product(Box<Descriptor>, Box<Descriptor>),
}

impl Descriptor {
    fn order(&self) -> Option<usize> {
        match self {
            Descriptor::Cyclic(n) => Some(*n),
            Descriptor::Dihedral(n) => n.checked_mul(2),
            Descriptor::Symmetric(n) => Some((1..=*n).product()),
            Descriptor::Quaternion => Some(8),
            Descriptor::Product(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }

    fn canonical(&self) -> String {
        match self {
            Descriptor::Cyclic(n) => format!("cyclic:{n}"),
            Descriptor::Dihedral(n) => format!("dihedral:{n}"),
            Descriptor::Symmetric(n) => format!("symmetric:{n}"),
            Descriptor::Quaternion => "quaternion".to_string(),
            Descriptor::Product(a, b) => format!("product:({},{})", a.canonical(), b.canonical()),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{} (at byte {})", reason.into(), self.pos),
        }
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a positive integer"));
        }
        let text = &self.rest()[..digits];
        let value: usize = text.parse().map_err(|_| self.error("integer too large"))?;
        if value == 0 {
            return Err(self.error("integer must be positive"));
        }
        self.pos += digits;
        Ok(value)
    }

    fn spec(&mut self) -> Result<Descriptor> {
        if self.eat("cyclic:") {
            Ok(Descriptor::Cyclic(self.int()?))
        } else if self.eat("dihedral:") {
            let n = self.int()?;
            if n < 2 {
                return Err(self.error("dihedral:n requires n >= 2"));
            }
            Ok(Descriptor::Dihedral(n))
        } else if self.eat("symmetric:") {
            let n = self.int()?;
            if !(2..=5).contains(&n) {
                return Err(self.error("symmetric:n requires 2 <= n <= 5"));
            }
            Ok(Descriptor::Symmetric(n))
        } else if self.eat("quaternion") {
            Ok(Descriptor::Quaternion)
        } else if self.eat("product:(") {
            let left = self.spec()?;
            self.expect(",")?;
            let right = self.spec()?;
            self.expect(")")?;
            Ok(Descriptor::Product(Box::new(left), Box::new(right)))
        } else {
            Err(self.error("unknown group constructor"))
        }
    }
}

fn parse_descriptor(input: &str) -> Result<Descriptor> {
    let mut parser = Parser { input, pos: 0 };
    let d = parser.spec()?;
    if parser.pos != input.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(d)
}

/// Builds the group described by `spec`.
pub fn make_group(spec: &str) -> Result<Group> {
    let descriptor = parse_descriptor(spec)?;
    match descriptor.order() {
        Some(n) if n <= MAX_ORDER => {}
        other => {
            return Err(Error::Limit {
                what: "group order",
                value: other.unwrap_or(usize::MAX),
                cap: MAX_ORDER,
            })
        }
    }
    let (order, mul) = build_table(&descriptor);
    Group::from_table(descriptor.canonical(), order, mul)
}

fn build_table(d: &Descriptor) -> (usize, Vec<u16>) {
    match d {
        Descriptor::Cyclic(n) => {
            let n = *n;
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    mul.push(((a + b) % n) as u16);
                }
            }
            (n, mul)
        }
        Descriptor::Dihedral(n) => {
            // i < n: r^i; i >= n: s r^(i-n); r^i s = s r^(-i)
            let n = *n;
            let m = 2 * n;
            let mut mul = Vec::with_capacity(m * m);
            for a in 0..m {
                for b in 0..m {
                    let c = match (a < n, b < n) {
                        (true, true) => (a + b) % n,
                        (true, false) => n + (b - n + n - a) % n,
                        (false, true) => n + (a - n + b) % n,
                        (false, false) => (b - n + n - (a - n)) % n,
                    };
                    mul.push(c as u16);
                }
            }
            (m, mul)
        }
        Descriptor::Symmetric(n) => {
            let perms = permutations_lex(*n);
            let index: HashMap<&[u8], usize> =
                perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
            let m = perms.len();
            let mut mul = Vec::with_capacity(m * m);
            let mut buf = vec![0u8; *n];
            for p in &perms {
                for q in &perms {
                    for (i, slot) in buf.iter_mut().enumerate() {
                        *slot = p[q[i] as usize];
                    }
                    mul.push(index[buf.as_slice()] as u16);
                }
            }
            (m, mul)
        }
        Descriptor::Quaternion => (8, QUATERNION_TABLE.iter().flatten().copied().collect()),
        Descriptor::Product(left, right) => {
            let (n1, m1) = build_table(left);
            let (n2, m2) = build_table(right);
            let n = n1 * n2;
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n {
                let (a1, a2) = (a / n2, a % n2);
                for b in 0..n {
                    let (b1, b2) = (b / n2, b % n2);
                    let c1 = m1[a1 * n1 + b1] as usize;
                    let c2 = m2[a2 * n2 + b2] as usize;
                    mul.push((c1 * n2 + c2) as u16);
                }
            }
            (n, mul)
        }
    }
}

fn permutations_lex(n: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

impl Group {
    /// Validates a raw Cayley table and derives inverse and order tables.
    pub fn from_table(spec: String, order: usize, mul: Vec<u16>) -> Result<Group> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::Limit {
                what: "group order",
                value: order,
                cap: MAX_ORDER,
            });
        }
        if mul.len() != order * order || mul.iter().any(|&c| c as usize >= order) {
            return Err(Error::Precondition(format!("malformed Cayley table for {spec}")));
        }
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        for g in 0..order {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::Precondition(format!("{spec}: element 0 is not the identity")));
            }
        }
        let mut inv = vec![0u16; order];
        let mut elem_order = vec![0u32; order];
        for g in 0..order {
            let mut k = 1u32;
            let mut power = g;
            let mut prev = 0;
            while power != 0 {
                prev = power;
                power = at(power, g);
                k += 1;
                if k as usize > order {
                    return Err(Error::Precondition(format!("{spec}: element {g} has no finite order")));
                }
            }
            // g^k = 1 so g^(k-1) is the inverse; for the identity prev stays 0
            elem_order[g] = k;
            inv[g] = prev as u16;
            if at(g, prev) != 0 || at(prev, g) != 0 || !order.is_multiple_of(elem_order[g] as usize) {
                return Err(Error::Precondition(format!("{spec}: inverse law fails at {g}")));
            }
        }
        if order <= ASSOC_CHECK_ORDER {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::Precondition(format!(
                                "{spec}: associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Group {
            order,
            mul,
            inv,
            elem_order,
            spec,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Order of `x`; panics when `x` is out of range. See [`element_order`] for
    /// the checked version.
    #[inline]
    pub fn elem_order(&self, x: usize) -> usize {
        self.elem_order[x] as usize
    }

    /// `x^k`, with negative exponents meaning powers of the inverse.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let m = self.elem_order(x) as i64;
        let e = k.rem_euclid(m);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn empty_set(&self) -> GroupSet {
        GroupSet::empty(self.order)
    }

    pub fn full_set(&self) -> GroupSet {
        GroupSet::full(self.order)
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, items: I) -> Result<GroupSet> {
        GroupSet::from_indices(self.order, items)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::IndexOutOfRange {
                index: x,
                order: self.order,
            });
        }
        Ok(())
    }
}

pub fn element_order(g: &Group, x: usize) -> Result<usize> {
    g.check_element(x)?;
    Ok(g.elem_order(x))
}

/// Closure of `gens` under multiplication, starting from the identity.
fn closure(g: &Group, gens: &[usize]) -> GroupSet {
    let mut result = g.empty_set();
    result.insert(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !result.contains(y) {
                result.insert(y);
                queue.push_back(y);
            }
        }
    }
    result
}

/// The subgroup generated by `xs`; `{identity}` for the empty set.
pub fn subgroup_generated(g: &Group, xs: &GroupSet) -> Result<GroupSet> {
    xs.check_domain(g.order())?;
    let gens: Vec<usize> = xs.iter().filter(|&x| x != 0).collect();
    Ok(closure(g, &gens))
}

/// All subgroups, sorted by size and then by mask value.
pub fn enumerate_subgroups(g: &Group) -> Result<Vec<GroupSet>> {
    if g.order() > MAX_SUBGROUP_ORDER {
        return Err(Error::Limit {
            what: "group order for subgroup enumeration",
            value: g.order(),
            cap: MAX_SUBGROUP_ORDER,
        });
    }
    // every subgroup is reached by adjoining one element at a time to a smaller subgroup
    let trivial = closure(g, &[]);
    let mut seen: HashSet<GroupSet> = HashSet::from([trivial.clone()]);
    let mut queue: VecDeque<(GroupSet, Vec<usize>)> = VecDeque::from([(trivial, Vec::new())]);
    while let Some((h, gens)) = queue.pop_front() {
        for x in 0..g.order() {
            if h.contains(x) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let k = closure(g, &next_gens);
            if seen.insert(k.clone()) {
                queue.push_back((k, next_gens));
            }
        }
    }
    let mut all: Vec<GroupSet> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(all)
}

/// Minimum size of a subgroup `M` with `2 <= |M| < |G|`.
pub fn p_of_group(g: &Group) -> Result<SizeOrInfinity> {
    let n = g.order();
    Ok(enumerate_subgroups(g)?
        .iter()
        .map(GroupSet::len)
        .filter(|&m| m >= 2 && m < n)
        .min()
        .map_or(SizeOrInfinity::Infinite, SizeOrInfinity::Finite))
}

fn atom_specs(max_order: usize) -> Vec<(String, usize)> {
    let mut atoms = Vec::new();
    for n in 2..=max_order {
        atoms.push((format!("cyclic:{n}"), n));
    }
    for n in 2..=max_order / 2 {
        atoms.push((format!("dihedral:{n}"), 2 * n));
    }
    for (n, size) in [(3usize, 6usize), (4, 24), (5, 120)] {
        if size <= max_order {
            atoms.push((format!("symmetric:{n}"), size));
        }
    }
    if max_order >= 8 {
        atoms.push(("quaternion".to_string(), 8));
    }
    atoms
}

/// Descriptor strings for the built-in catalog of groups of order `<= max_order`.
///
/// The catalog holds every cyclic, dihedral, symmetric and quaternion group in
/// range, plus `product:(X,Y)` for each unordered pair of those with
/// `|X|·|Y| <= max_order`. It is ordered by group order, then by descriptor.
/// The trivial group is left out. Isomorphic duplicates are kept.
pub fn catalog(max_order: usize) -> Vec<String> {
    let atoms = atom_specs(max_order / 2);
    let mut out: Vec<(usize, String)> = atom_specs(max_order)
        .into_iter()
        .map(|(s, n)| (n, s))
        .collect();
    for (i, (a, na)) in atoms.iter().enumerate() {
        for (b, nb) in &atoms[i..] {
            if na * nb <= max_order {
                out.push((na * nb, format!("product:({a},{b})")));
            }
        }
    }
    out.sort();
    out.dedup();
    out.into_iter().map(|(_, s)| s).collect()
}
