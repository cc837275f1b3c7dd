//! Root systems of types A, B, C, D, G2 and finite products of them.
//!
//! Classical components are realized in their standard Euclidean
//! coordinates:
//!
//! | family | positive roots                         | heights                 |
//! |--------|----------------------------------------|-------------------------|
//! | A_{n-1}| `N(i,j) = e_j - e_i`                   | `j - i`                 |
//! | B_n    | `N(i,j)`, `O(i) = e_i`, `P(i,j) = e_j + e_i` | `j - i`, `i`, `i + j` |
//! | C_n    | `N(i,j)`, `O(i) = 2e_i`, `P(i,j)`      | `j - i`, `2i - 1`, `i + j - 1` |
//! | D_n    | `N(i,j)`, `P(i,j)`                     | `j - i`, `i + j - 2`    |
//!
//! G2 is stored in simple-root coordinates with the short simple root `a`
//! of squared length 2 and the long simple root `b` of squared length 6,
//! so every inner product is an integer. Its catalog order is
//! `a, b, a+b, 2a+b, 3a+b, 3a+2b` (heights 1, 1, 2, 3, 4, 5).
//!
//! Root ids are assigned in a fixed order: components in the order of the
//! [`FamilySpec`], and within a component by `(height, form, i, j)` with
//! `N < O < P`. This order is part of the output contract.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::Serialize;

use crate::exact::{int, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl Family {
    pub fn is_classical(self) -> bool {
        self != Family::G2
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

/// Largest rank accepted for a single component.
pub const MAX_RANK: usize = 1024;

/// One irreducible component. `rank` is the Lie rank, so `A4` has rank 4
/// and lives in dimension 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let c = Component { family, rank };
        let min = match family {
            Family::A => 1,
            Family::B | Family::C | Family::D => 2,
            Family::G2 => 2,
        };
        if rank < min || (family == Family::G2 && rank != 2) {
            return Err(Error::InvalidSpec {
                component: c.label(),
                reason: match family {
                    Family::G2 => "G2 has rank 2".to_string(),
                    _ => format!("type {family} requires rank >= {min}"),
                },
            });
        }
        // keeps every catalog near or below a million roots
        if rank > MAX_RANK {
            return Err(Error::InvalidSpec {
                component: c.label(),
                reason: format!("rank must be at most {MAX_RANK}"),
            });
        }
        Ok(c)
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::G2 => "G2".to_string(),
            f => format!("{f}{}", self.rank),
        }
    }

    /// Dimension of the ambient coordinate block.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// The `n` used by the classical variance formulas (`A_{n-1}` is keyed
    /// by `n`, the other types by their rank).
    pub fn formula_n(&self) -> usize {
        self.dim()
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.dim();
        match self.family {
            Family::A => n * (n - 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G2 => 6,
        }
    }

    pub fn max_height(&self) -> u32 {
        let n = self.dim() as u32;
        match self.family {
            Family::A => n - 1,
            Family::B | Family::C => 2 * n - 1,
            Family::D => 2 * n - 3,
            Family::G2 => 5,
        }
    }

    /// Order of the Weyl group, saturating at `u128::MAX`.
    pub fn group_order(&self) -> u128 {
        let n = self.dim() as u32;
        let fact = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
        let pow2 = |e: u32| 1u128.checked_shl(e).filter(|_| e < 128);
        let order = match self.family {
            Family::A => fact,
            Family::B | Family::C => fact.zip(pow2(n)).and_then(|(f, p)| f.checked_mul(p)),
            Family::D => fact.zip(pow2(n - 1)).and_then(|(f, p)| f.checked_mul(p)),
            Family::G2 => Some(12),
        };
        order.unwrap_or(u128::MAX)
    }
}

/// Ordered list of irreducible components, e.g. `A3xB4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    components: Vec<Component>,
}

impl FamilySpec {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidSpec {
                component: "<none>".to_string(),
                reason: "at least one component is required".to_string(),
            });
        }
        for c in &components {
            Component::new(c.family, c.rank)?;
        }
        Ok(FamilySpec { components })
    }

    pub fn single(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![Component::new(family, rank)?])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn group_order(&self) -> u128 {
        self.components
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.group_order()))
            .unwrap_or(u128::MAX)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.components.iter().map(Component::label).collect();
        f.write_str(&labels.join("x"))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            what: "root system",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut components = Vec::new();
        for token in s.trim().split(['x', 'X', '×']) {
            let token = token.trim();
            if token.is_empty() {
                return Err(parse_err("empty component"));
            }
            let (letter, digits) = token.split_at(1);
            let rank: usize = digits
                .parse()
                .map_err(|_| parse_err("expected a family letter followed by a rank"))?;
            let family = match letter {
                "A" | "a" => Family::A,
                "B" | "b" => Family::B,
                "C" | "c" => Family::C,
                "D" | "d" => Family::D,
                "G" | "g" => Family::G2,
                _ => return Err(parse_err("unknown family (expected A, B, C, D or G2)")),
            };
            components.push(Component::new(family, rank)?);
        }
        FamilySpec::new(components)
    }
}

/// Classical root forms carry 1-based indices; `G2(k)` is `1..=6` in
/// catalog order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootForm {
    N(u32, u32),
    O(u32),
    P(u32, u32),
    G2(u8),
}

impl fmt::Display for RootForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootForm::N(i, j) => write!(f, "N[{i},{j}]"),
            RootForm::O(i) => write!(f, "O[{i}]"),
            RootForm::P(i, j) => write!(f, "P[{i},{j}]"),
            RootForm::G2(k) => write!(f, "r{k}"),
        }
    }
}

impl FromStr for RootForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse {
            what: "root",
            input: s.to_string(),
            reason: "expected N[i,j], O[i], P[i,j] or r1..r6".to_string(),
        };
        if let Some(k) = s.strip_prefix('r') {
            return k.parse().map(RootForm::G2).map_err(|_| err());
        }
        let (head, rest) = s.split_at(s.find('[').ok_or_else(err)?);
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(err)?;
        let idx: Vec<u32> = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err())?;
        match (head, idx.as_slice()) {
            ("N", &[i, j]) => Ok(RootForm::N(i, j)),
            ("O", &[i]) => Ok(RootForm::O(i)),
            ("P", &[i, j]) => Ok(RootForm::P(i, j)),
            _ => Err(err()),
        }
    }
}

/// A positive root: a component index and its form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub component: usize,
    pub form: RootForm,
}

/// Index of a root in a [`RootSystem`] catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootId(pub u32);

impl RootId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Integer vector with at most two nonzero entries, sorted by coordinate.
///
/// Classical roots use ambient coordinates (0-based); G2 roots use their
/// two simple-root coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Sparse {
    len: u8,
    entries: [(u32, i32); 2],
}

impl Sparse {
    pub(crate) fn from_entries(raw: &[(u32, i32)]) -> Option<Sparse> {
        let mut out = Sparse {
            len: 0,
            entries: [(0, 0); 2],
        };
        let mut buf: Vec<(u32, i32)> = Vec::with_capacity(4);
        for &(c, v) in raw {
            match buf.iter_mut().find(|(bc, _)| *bc == c) {
                Some(e) => e.1 += v,
                None => buf.push((c, v)),
            }
        }
        buf.retain(|&(_, v)| v != 0);
        buf.sort_unstable();
        if buf.len() > 2 {
            return None;
        }
        for (k, e) in buf.into_iter().enumerate() {
            out.entries[k] = e;
            out.len += 1;
        }
        Some(out)
    }

    pub(crate) fn entries(&self) -> &[(u32, i32)] {
        &self.entries[..self.len as usize]
    }

    pub(crate) fn negated(&self) -> Sparse {
        let mut out = *self;
        for e in &mut out.entries[..self.len as usize] {
            e.1 = -e.1;
        }
        out
    }

    pub(crate) fn add(&self, other: &Sparse) -> Option<Sparse> {
        let mut raw: Vec<(u32, i32)> = self.entries().to_vec();
        raw.extend_from_slice(other.entries());
        Sparse::from_entries(&raw)
    }

    fn dense2(&self) -> [i64; 2] {
        let mut v = [0i64; 2];
        for &(c, x) in self.entries() {
            v[c as usize] = x as i64;
        }
        v
    }
}

const G2_GRAM: [[i64; 2]; 2] = [[2, -3], [-3, 6]];

/// Simple-root coefficients of the G2 positive roots in catalog order.
pub(crate) const G2_ROOTS: [[i32; 2]; 6] = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

/// Immutable catalog of positive roots with heights, Gram data and the
/// cover relation of the root poset.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: FamilySpec,
    roots: Vec<Root>,
    vectors: Vec<Sparse>,
    heights: Vec<u32>,
    ranges: Vec<Range<usize>>,
    index: HashMap<Root, RootId>,
    by_vector: HashMap<(usize, Sparse), RootId>,
    covers_up: Vec<Vec<RootId>>,
    covers_down: Vec<Vec<RootId>>,
    simple: Vec<Vec<RootId>>,
    labels: Vec<String>,
}

impl RootSystem {
    pub fn build(spec: &FamilySpec) -> Result<RootSystem> {
        let spec = FamilySpec::new(spec.components().to_vec())?;
        let mut roots = Vec::new();
        let mut vectors = Vec::new();
        let mut heights = Vec::new();
        let mut ranges = Vec::new();

        for (ci, comp) in spec.components().iter().enumerate() {
            let start = roots.len();
            let mut local = component_catalog(comp);
            local.sort_by_key(|(form, _, h)| (*h, *form));
            for (form, vec, h) in local {
                roots.push(Root {
                    component: ci,
                    form,
                });
                vectors.push(vec);
                heights.push(h);
            }
            ranges.push(start..roots.len());
        }

        let index: HashMap<Root, RootId> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (*r, RootId(k as u32)))
            .collect();
        let by_vector: HashMap<(usize, Sparse), RootId> = roots
            .iter()
            .zip(&vectors)
            .enumerate()
            .map(|(k, (r, v))| ((r.component, *v), RootId(k as u32)))
            .collect();

        let simple: Vec<Vec<RootId>> = ranges
            .iter()
            .map(|r| {
                r.clone()
                    .filter(|&k| heights[k] == 1)
                    .map(|k| RootId(k as u32))
                    .collect()
            })
            .collect();

        let mut covers_up = vec![Vec::new(); roots.len()];
        let mut covers_down = vec![Vec::new(); roots.len()];
        for (k, root) in roots.iter().enumerate() {
            for alpha in &simple[root.component] {
                let Some(sum) = vectors[k].add(&vectors[alpha.index()]) else {
                    continue;
                };
                if let Some(&up) = by_vector.get(&(root.component, sum)) {
                    covers_up[k].push(up);
                    covers_down[up.index()].push(RootId(k as u32));
                }
            }
        }
        for list in covers_up.iter_mut().chain(covers_down.iter_mut()) {
            list.sort_unstable();
        }

        let labels = component_labels(&spec);
        let rs = RootSystem {
            spec,
            roots,
            vectors,
            heights,
            ranges,
            index,
            by_vector,
            covers_up,
            covers_down,
            simple,
            labels,
        };
        #[cfg(debug_assertions)]
        rs.check_grading();
        Ok(rs)
    }

    /// Stored heights must equal the length of the longest chain below each
    /// root, and height-1 roots must be exactly the minimal elements.
    #[cfg(debug_assertions)]
    fn check_grading(&self) {
        let mut depth = vec![0u32; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&k| self.heights[k]);
        for k in order {
            let below = self.covers_down[k]
                .iter()
                .map(|b| depth[b.index()])
                .max()
                .unwrap_or(0);
            depth[k] = below + 1;
            assert_eq!(
                depth[k],
                self.heights[k],
                "height mismatch at {}",
                self.render(RootId(k as u32))
            );
            assert_eq!(self.covers_down[k].is_empty(), self.heights[k] == 1);
        }
        for (c, comp) in self.spec.components().iter().enumerate() {
            assert_eq!(self.simple[c].len(), comp.rank);
            assert_eq!(self.ranges[c].len(), comp.num_positive_roots());
        }
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn ids(&self) -> impl ExactSizeIterator<Item = RootId> + '_ {
        (0..self.roots.len() as u32).map(RootId)
    }

    pub fn root(&self, id: RootId) -> Root {
        self.roots[id.index()]
    }

    pub fn height(&self, id: RootId) -> u32 {
        self.heights[id.index()]
    }

    pub fn component_of(&self, id: RootId) -> usize {
        self.roots[id.index()].component
    }

    pub fn component_range(&self, component: usize) -> Range<usize> {
        self.ranges[component].clone()
    }

    pub fn simple_roots(&self, component: usize) -> &[RootId] {
        &self.simple[component]
    }

    pub fn all_simple_roots(&self) -> Vec<RootId> {
        self.simple.iter().flatten().copied().collect()
    }

    /// Roots `γ` with `β ≺ γ`.
    pub fn covers_of(&self, id: RootId) -> &[RootId] {
        &self.covers_up[id.index()]
    }

    /// Roots `β` with `β ≺ γ`.
    pub fn covered_by(&self, id: RootId) -> &[RootId] {
        &self.covers_down[id.index()]
    }

    /// All cover pairs `(β, γ)`, ordered by `β` then `γ`.
    pub fn cover_pairs(&self) -> Vec<(RootId, RootId)> {
        self.ids()
            .flat_map(|b| self.covers_of(b).iter().map(move |&g| (b, g)))
            .collect()
    }

    pub fn max_height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn lookup(&self, root: &Root) -> Result<RootId> {
        self.index
            .get(root)
            .copied()
            .ok_or_else(|| Error::StaleRoot(format!("{}:{}", root.component, root.form)))
    }

    pub(crate) fn vector(&self, id: RootId) -> &Sparse {
        &self.vectors[id.index()]
    }

    pub(crate) fn lookup_vector(&self, component: usize, v: &Sparse) -> Option<RootId> {
        self.by_vector.get(&(component, *v)).copied()
    }

    /// `⟨β, γ⟩` as an integer in the fixed normalization (type C `O(i)` is
    /// `2e_i`; G2 short roots have squared length 2).
    pub fn inner_product_int(&self, a: RootId, b: RootId) -> i64 {
        let ca = self.component_of(a);
        if ca != self.component_of(b) {
            return 0;
        }
        let (va, vb) = (self.vector(a), self.vector(b));
        match self.spec.components()[ca].family {
            Family::G2 => {
                let (x, y) = (va.dense2(), vb.dense2());
                (0..2)
                    .flat_map(|r| (0..2).map(move |c| (r, c)))
                    .map(|(r, c)| x[r] * G2_GRAM[r][c] * y[c])
                    .sum()
            }
            _ => {
                let mut s = 0i64;
                for &(c, x) in va.entries() {
                    for &(d, y) in vb.entries() {
                        if c == d {
                            s += x as i64 * y as i64;
                        }
                    }
                }
                s
            }
        }
    }

    pub fn inner_product(&self, a: RootId, b: RootId) -> Rational {
        int(self.inner_product_int(a, b))
    }

    /// `4 cos²∠(β, γ)`, always one of 0, 1, 2, 3, 4.
    pub(crate) fn four_cos_sq(&self, a: RootId, b: RootId) -> u32 {
        let x = self.inner_product_int(a, b);
        let num = 4 * x * x;
        let den = self.inner_product_int(a, a) * self.inner_product_int(b, b);
        assert!(
            num % den == 0 && num / den <= 4,
            "inconsistent Gram data for {} and {}",
            self.render(a),
            self.render(b)
        );
        (num / den) as u32
    }

    /// Order of `s_β s_γ`, in `{1, 2, 3, 4, 6}`.
    pub fn reflection_order(&self, a: RootId, b: RootId) -> u32 {
        match self.four_cos_sq(a, b) {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            4 => 1,
            _ => unreachable!(),
        }
    }

    /// `Φ_des^d`: roots of height exactly `d`, in catalog order.
    pub fn roots_of_height(&self, d: u32) -> Vec<RootId> {
        self.ids().filter(|&r| self.height(r) == d).collect()
    }

    /// `Φ_inv^d`: roots of height at most `d`, in catalog order.
    pub fn roots_up_to_height(&self, d: u32) -> Vec<RootId> {
        self.ids().filter(|&r| self.height(r) <= d).collect()
    }

    /// `β ≤ γ` in the reflexive-transitive closure of the cover relation.
    pub fn poset_leq(&self, a: RootId, b: RootId) -> bool {
        if a == b {
            return true;
        }
        if self.component_of(a) != self.component_of(b) || self.height(a) >= self.height(b) {
            return false;
        }
        let target_h = self.height(b);
        let mut seen = vec![false; self.len()];
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &y in self.covers_of(x) {
                if y == b {
                    return true;
                }
                if !seen[y.index()] && self.height(y) < target_h {
                    seen[y.index()] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    pub fn is_antichain(&self, roots: &[RootId]) -> bool {
        roots.iter().enumerate().all(|(k, &a)| {
            roots[k + 1..]
                .iter()
                .all(|&b| a != b && !self.poset_leq(a, b) && !self.poset_leq(b, a))
        })
    }

    /// Every antichain of the root poset (including the empty one), each in
    /// catalog order. Fails once more than `cap` antichains are found.
    pub fn antichains(&self, cap: usize) -> Result<Vec<Vec<RootId>>> {
        let n = self.len();
        let words = n.div_ceil(64);
        // up[k] = {γ : β_k ≤ γ}, filled from the top of the poset down.
        let mut up = vec![vec![0u64; words]; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(self.heights[k]));
        for k in order {
            let mut set = vec![0u64; words];
            set[k / 64] |= 1 << (k % 64);
            for g in &self.covers_up[k] {
                for (w, x) in set.iter_mut().zip(&up[g.index()]) {
                    *w |= x;
                }
            }
            up[k] = set;
        }
        let comparable = |a: usize, b: usize| {
            up[a][b / 64] >> (b % 64) & 1 == 1 || up[b][a / 64] >> (a % 64) & 1 == 1
        };

        let mut out = Vec::new();
        let mut current = Vec::new();
        fn dfs(
            start: usize,
            n: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<RootId>>,
            cap: usize,
            comparable: &dyn Fn(usize, usize) -> bool,
        ) -> bool {
            if out.len() >= cap {
                return false;
            }
            out.push(current.iter().map(|&k| RootId(k as u32)).collect());
            for k in start..n {
                if current.iter().all(|&c| !comparable(c, k)) {
                    current.push(k);
                    let ok = dfs(k + 1, n, current, out, cap, comparable);
                    current.pop();
                    if !ok {
                        return false;
                    }
                }
            }
            true
        }
        if !dfs(0, n, &mut current, &mut out, cap, &comparable) {
            return Err(Error::TooLarge {
                order: out.len() as u128 + 1,
                cap: cap as u128,
            });
        }
        Ok(out)
    }

    /// Renders a root in the CLI grammar, e.g. `B4:P[1,2]`; the component
    /// prefix is omitted for irreducible systems.
    pub fn render(&self, id: RootId) -> String {
        let root = self.root(id);
        if self.spec.is_irreducible() {
            root.form.to_string()
        } else {
            format!("{}:{}", self.labels[root.component], root.form)
        }
    }

    pub fn render_list(&self, ids: &[RootId]) -> String {
        ids.iter()
            .map(|&r| self.render(r))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a root in the rendering grammar. The prefix is the component
    /// label (`A3`), a disambiguated label (`A3#2`) or a 1-based index.
    pub fn parse_root(&self, s: &str) -> Result<RootId> {
        let s = s.trim();
        let (component, form_text) = match s.split_once(':') {
            Some((prefix, rest)) => (self.component_by_prefix(prefix, s)?, rest),
            None if self.spec.is_irreducible() => (0, s),
            None => {
                return Err(Error::Parse {
                    what: "root",
                    input: s.to_string(),
                    reason: "a component prefix is required in reducible systems".to_string(),
                })
            }
        };
        let form: RootForm = form_text.parse()?;
        self.lookup(&Root { component, form })
            .map_err(|_| Error::StaleRoot(s.to_string()))
    }

    /// Parses a comma- or whitespace-separated list of roots. Commas inside
    /// brackets belong to the root.
    pub fn parse_root_list(&self, s: &str) -> Result<Vec<RootId>> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut token = String::new();
        for ch in s.chars().chain(std::iter::once(',')) {
            match ch {
                '[' => {
                    depth += 1;
                    token.push(ch)
                }
                ']' => {
                    depth -= 1;
                    token.push(ch)
                }
                ',' | ' ' | ';' | '{' | '}' if depth == 0 => {
                    if !token.trim().is_empty() {
                        out.push(self.parse_root(&token)?);
                    }
                    token.clear();
                }
                _ => token.push(ch),
            }
        }
        Ok(out)
    }

    fn component_by_prefix(&self, prefix: &str, full: &str) -> Result<usize> {
        if let Some(k) = self.labels.iter().position(|l| l == prefix) {
            return Ok(k);
        }
        let bare: Vec<usize> = (0..self.labels.len())
            .filter(|&k| self.spec.components()[k].label() == prefix)
            .collect();
        if bare.len() == 1 {
            return Ok(bare[0]);
        }
        if let Ok(k) = prefix.parse::<usize>() {
            if (1..=self.labels.len()).contains(&k) {
                return Ok(k - 1);
            }
        }
        Err(Error::Parse {
            what: "root",
            input: full.to_string(),
            reason: format!("unknown or ambiguous component {prefix:?}"),
        })
    }
}

fn component_labels(spec: &FamilySpec) -> Vec<String> {
    let comps = spec.components();
    comps
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let label = c.label();
            if comps.iter().filter(|o| o.label() == label).count() > 1 {
                let nth = comps[..=k].iter().filter(|o| o.label() == label).count();
                format!("{label}#{nth}")
            } else {
                label
            }
        })
        .collect()
}

fn component_catalog(comp: &Component) -> Vec<(RootForm, Sparse, u32)> {
    let n = comp.dim() as u32;
    let e =
        |entries: &[(u32, i32)]| Sparse::from_entries(entries).expect("at most two coordinates");
    let mut out = Vec::new();
    if comp.family == Family::G2 {
        for (k, c) in G2_ROOTS.iter().enumerate() {
            let h = (c[0] + c[1]) as u32;
            out.push((RootForm::G2(k as u8 + 1), e(&[(0, c[0]), (1, c[1])]), h));
        }
        return out;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((RootForm::N(i, j), e(&[(j - 1, 1), (i - 1, -1)]), j - i));
        }
    }
    match comp.family {
        Family::B => {
            for i in 1..=n {
                out.push((RootForm::O(i), e(&[(i - 1, 1)]), i));
            }
        }
        Family::C => {
            for i in 1..=n {
                out.push((RootForm::O(i), e(&[(i - 1, 2)]), 2 * i - 1));
            }
        }
        _ => {}
    }
    let p_shift = match comp.family {
        Family::B => Some(0),
        Family::C => Some(1),
        Family::D => Some(2),
        _ => None,
    };
    if let Some(shift) = p_shift {
        for i in 1..=n {
            for j in i + 1..=n {
                out.push((
                    RootForm::P(i, j),
                    e(&[(j - 1, 1), (i - 1, 1)]),
                    i + j - shift,
                ));
            }
        }
    }
    out
}
