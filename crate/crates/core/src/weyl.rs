//! Weyl group elements and their action on roots.
//!
//! A classical component element is a signed permutation `w(e_i) = ε_i e_{π(i)}`
//! (all `ε_i = +` in type A, an even number of `−` in type D). A G2 element
//! is an index into a 12-element group table generated by the two simple
//! reflections acting on simple-root coordinates.
//!
//! Composition is `(u·v)(β) = u(v(β))`.
//!
//! Enumeration order: the first component is the most significant digit of
//! a mixed-radix counter. Inside a classical component, permutations run in
//! lexicographic order of their one-line notation and, for each
//! permutation, sign vectors run lexicographically with `+ < −` and
//! coordinate 1 most significant (type D skips odd sign vectors). G2
//! elements run in table order, which is breadth-first from the identity,
//! multiplying on the right by `s_a` then `s_b`.

use std::fmt;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::rootsys::{Family, RootId, RootSystem, Sparse};
use crate::{Error, Result};

/// `w(e_i) = ±e_{perm[i]}`, 0-based, with `neg[i]` marking a minus sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: Vec<u16>,
    pub neg: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n as u16).collect(),
            neg: vec![false; n],
        }
    }

    fn compose(&self, v: &SignedPerm) -> SignedPerm {
        let mut perm = Vec::with_capacity(v.perm.len());
        let mut neg = Vec::with_capacity(v.perm.len());
        for i in 0..v.perm.len() {
            let mid = v.perm[i] as usize;
            perm.push(self.perm[mid]);
            neg.push(v.neg[i] ^ self.neg[mid]);
        }
        SignedPerm { perm, neg }
    }

    fn inverse(&self) -> SignedPerm {
        let n = self.perm.len();
        let mut perm = vec![0u16; n];
        let mut neg = vec![false; n];
        for i in 0..n {
            let j = self.perm[i] as usize;
            perm[j] = i as u16;
            neg[j] = self.neg[i];
        }
        SignedPerm { perm, neg }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Part {
    Signed(SignedPerm),
    G2(u8),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    parts: Vec<Part>,
}

/// Image of a positive root: a catalog root and whether the image is
/// its negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub root: RootId,
    pub negative: bool,
}

struct G2Table {
    mats: Vec<[[i32; 2]; 2]>,
    mul: [[u8; 12]; 12],
    inv: [u8; 12],
}

/// Reflections in simple-root coordinates, acting on column vectors.
const G2_SA: [[i32; 2]; 2] = [[-1, 3], [0, 1]];
const G2_SB: [[i32; 2]; 2] = [[1, 0], [1, -1]];
const G2_ID: [[i32; 2]; 2] = [[1, 0], [0, 1]];

fn mat_mul(x: &[[i32; 2]; 2], y: &[[i32; 2]; 2]) -> [[i32; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = x[r][0] * y[0][c] + x[r][1] * y[1][c];
        }
    }
    out
}

fn g2_table() -> &'static G2Table {
    static TABLE: OnceLock<G2Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut mats = vec![G2_ID];
        let mut k = 0;
        while k < mats.len() {
            for g in [G2_SA, G2_SB] {
                let m = mat_mul(&mats[k], &g);
                if !mats.contains(&m) {
                    mats.push(m);
                }
            }
            k += 1;
        }
        assert_eq!(mats.len(), 12);
        let pos = |m: &[[i32; 2]; 2]| mats.iter().position(|x| x == m).unwrap() as u8;
        let mut mul = [[0u8; 12]; 12];
        let mut inv = [0u8; 12];
        for a in 0..12 {
            for b in 0..12 {
                mul[a][b] = pos(&mat_mul(&mats[a], &mats[b]));
                if mul[a][b] == 0 {
                    inv[a] = b as u8;
                }
            }
        }
        G2Table { mats, mul, inv }
    })
}

fn g2_index_of(m: &[[i32; 2]; 2]) -> u8 {
    g2_table()
        .mats
        .iter()
        .position(|x| x == m)
        .expect("G2 matrix in table") as u8
}

impl WeylElement {
    pub fn from_parts(parts: Vec<Part>) -> Self {
        WeylElement { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn identity(rs: &RootSystem) -> Self {
        let parts = rs
            .spec()
            .components()
            .iter()
            .map(|c| match c.family {
                Family::G2 => Part::G2(0),
                _ => Part::Signed(SignedPerm::identity(c.dim())),
            })
            .collect();
        WeylElement { parts }
    }

    /// The longest element `w∘`, which maps every positive root to a
    /// negative one.
    pub fn longest(rs: &RootSystem) -> Self {
        let parts = rs
            .spec()
            .components()
            .iter()
            .map(|c| {
                let n = c.dim();
                match c.family {
                    Family::A => Part::Signed(SignedPerm {
                        perm: (0..n as u16).rev().collect(),
                        neg: vec![false; n],
                    }),
                    Family::B | Family::C => Part::Signed(SignedPerm {
                        perm: (0..n as u16).collect(),
                        neg: vec![true; n],
                    }),
                    // odd n: -1 is not in W(D_n); keep e_1 fixed instead
                    Family::D => Part::Signed(SignedPerm {
                        perm: (0..n as u16).collect(),
                        neg: (0..n).map(|i| n % 2 == 0 || i > 0).collect(),
                    }),
                    Family::G2 => Part::G2(g2_index_of(&[[-1, 0], [0, -1]])),
                }
            })
            .collect();
        WeylElement { parts }
    }

    /// The reflection `s_β`.
    pub fn reflection(rs: &RootSystem, beta: RootId) -> Self {
        let mut w = Self::identity(rs);
        let c = rs.component_of(beta);
        let v = rs.vector(beta);
        w.parts[c] = match &w.parts[c] {
            Part::G2(_) => {
                // s_v(x) = x - (2<x,v>/<v,v>) v, applied to the basis a, b
                let vv = dense(v);
                let gram = [[2, -3], [-3, 6]];
                let ip = |x: [i32; 2], y: [i32; 2]| -> i32 {
                    (0..2)
                        .map(|r| (0..2).map(|s| x[r] * gram[r][s] * y[s]).sum::<i32>())
                        .sum()
                };
                let norm = ip(vv, vv);
                let mut m = [[0; 2]; 2];
                for (col, e) in [[1, 0], [0, 1]].into_iter().enumerate() {
                    let k = 2 * ip(e, vv) / norm;
                    m[0][col] = e[0] - k * vv[0];
                    m[1][col] = e[1] - k * vv[1];
                }
                Part::G2(g2_index_of(&m))
            }
            Part::Signed(id) => {
                let mut sp = id.clone();
                match v.entries() {
                    [(i, x)] => {
                        let _ = x;
                        sp.neg[*i as usize] = true;
                    }
                    [(i, x), (j, y)] => {
                        let (i, j) = (*i as usize, *j as usize);
                        sp.perm.swap(i, j);
                        if x == y {
                            sp.neg[i] = true;
                            sp.neg[j] = true;
                        }
                    }
                    _ => unreachable!("roots have one or two coordinates"),
                }
                Part::Signed(sp)
            }
        };
        w
    }

    /// Checks that the element belongs to the Weyl group of `rs`.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let comps = rs.spec().components();
        let mismatch = || Error::ComponentMismatch(rs.spec().to_string());
        if comps.len() != self.parts.len() {
            return Err(mismatch());
        }
        for (c, part) in comps.iter().zip(&self.parts) {
            match (c.family, part) {
                (Family::G2, Part::G2(k)) if *k < 12 => {}
                (Family::G2, _) | (_, Part::G2(_)) => return Err(mismatch()),
                (f, Part::Signed(sp)) => {
                    let n = c.dim();
                    if sp.perm.len() != n || sp.neg.len() != n {
                        return Err(mismatch());
                    }
                    let mut seen = vec![false; n];
                    for &p in &sp.perm {
                        if p as usize >= n || seen[p as usize] {
                            return Err(mismatch());
                        }
                        seen[p as usize] = true;
                    }
                    let minus = sp.neg.iter().filter(|&&b| b).count();
                    if (f == Family::A && minus > 0) || (f == Family::D && minus % 2 == 1) {
                        return Err(mismatch());
                    }
                }
            }
        }
        Ok(())
    }

    /// `u·v`, acting as `u(v(β))`.
    pub fn compose(&self, v: &WeylElement) -> WeylElement {
        assert_eq!(
            self.parts.len(),
            v.parts.len(),
            "elements of different systems"
        );
        let parts = self
            .parts
            .iter()
            .zip(&v.parts)
            .map(|(a, b)| match (a, b) {
                (Part::Signed(x), Part::Signed(y)) => Part::Signed(x.compose(y)),
                (Part::G2(x), Part::G2(y)) => Part::G2(g2_table().mul[*x as usize][*y as usize]),
                _ => panic!("elements of different systems"),
            })
            .collect();
        WeylElement { parts }
    }

    pub fn inverse(&self) -> WeylElement {
        let parts = self
            .parts
            .iter()
            .map(|p| match p {
                Part::Signed(x) => Part::Signed(x.inverse()),
                Part::G2(k) => Part::G2(g2_table().inv[*k as usize]),
            })
            .collect();
        WeylElement { parts }
    }

    /// `w(β)` as a signed catalog root.
    pub fn apply(&self, rs: &RootSystem, beta: RootId) -> Result<SignedRoot> {
        self.validate(rs)?;
        if beta.index() >= rs.len() {
            return Err(Error::StaleRoot(format!("#{}", beta.0)));
        }
        let c = rs.component_of(beta);
        let image = self.image_vector(c, rs.vector(beta));
        let negative = self.image_is_negative(c, rs.vector(beta));
        let positive = if negative { image.negated() } else { image };
        let root = rs
            .lookup_vector(c, &positive)
            .expect("Weyl group permutes the root system");
        Ok(SignedRoot { root, negative })
    }

    pub fn is_inversion(&self, rs: &RootSystem, beta: RootId) -> Result<bool> {
        Ok(self.apply(rs, beta)?.negative)
    }

    /// `Inv(w)` in catalog order.
    pub fn inversion_set(&self, rs: &RootSystem) -> Result<Vec<RootId>> {
        self.validate(rs)?;
        Ok(rs
            .ids()
            .filter(|&b| self.is_inversion_unchecked(rs, b))
            .collect())
    }

    /// `w(β) ∈ Φ⁻` without validating the element; used in the enumeration
    /// hot loops where elements come from this module.
    #[inline]
    pub(crate) fn is_inversion_unchecked(&self, rs: &RootSystem, beta: RootId) -> bool {
        self.image_is_negative(rs.component_of(beta), rs.vector(beta))
    }

    #[inline]
    fn image_is_negative(&self, c: usize, v: &Sparse) -> bool {
        match &self.parts[c] {
            Part::Signed(sp) => {
                // the sign of a root is the sign of its coefficient at the
                // highest coordinate
                let mut best = (0u16, false);
                let mut first = true;
                for &(i, x) in v.entries() {
                    let i = i as usize;
                    let target = sp.perm[i];
                    let neg = (x < 0) ^ sp.neg[i];
                    if first || target > best.0 {
                        best = (target, neg);
                        first = false;
                    }
                }
                best.1
            }
            Part::G2(k) => {
                let m = &g2_table().mats[*k as usize];
                let x = dense(v);
                m[0][0] * x[0] + m[0][1] * x[1] + m[1][0] * x[0] + m[1][1] * x[1] < 0
            }
        }
    }

    fn image_vector(&self, c: usize, v: &Sparse) -> Sparse {
        match &self.parts[c] {
            Part::Signed(sp) => {
                let mapped: Vec<(u32, i32)> = v
                    .entries()
                    .iter()
                    .map(|&(i, x)| {
                        let i = i as usize;
                        (sp.perm[i] as u32, if sp.neg[i] { -x } else { x })
                    })
                    .collect();
                Sparse::from_entries(&mapped).expect("image of a root")
            }
            Part::G2(k) => {
                let m = &g2_table().mats[*k as usize];
                let x = dense(v);
                let y0 = m[0][0] * x[0] + m[0][1] * x[1];
                let y1 = m[1][0] * x[0] + m[1][1] * x[1];
                Sparse::from_entries(&[(0, y0), (1, y1)]).expect("image of a root")
            }
        }
    }

    /// Parabolic decomposition `w = w^Γ · w_Γ` with `w^Γ(α) ∈ Φ⁺` for all
    /// `α ∈ Γ` and `w_Γ` in the subgroup generated by `{s_α : α ∈ Γ}`.
    /// Returns `(w^Γ, w_Γ)`.
    pub fn parabolic_decompose(
        &self,
        rs: &RootSystem,
        gamma: &[RootId],
    ) -> Result<(WeylElement, WeylElement)> {
        self.validate(rs)?;
        for &a in gamma {
            if a.index() >= rs.len() {
                return Err(Error::StaleRoot(format!("#{}", a.0)));
            }
            if rs.height(a) != 1 {
                return Err(Error::NotSimple(rs.render(a)));
            }
        }
        let reflections: Vec<WeylElement> = gamma
            .iter()
            .map(|&a| WeylElement::reflection(rs, a))
            .collect();
        let mut wq = self.clone();
        let mut wp = WeylElement::identity(rs);
        // each step shortens wq by one, so this terminates after at most
        // |Φ+| iterations
        while let Some(k) = gamma.iter().position(|&a| wq.is_inversion_unchecked(rs, a)) {
            wq = wq.compose(&reflections[k]);
            wp = reflections[k].compose(&wp);
        }
        Ok((wq, wp))
    }

    /// Signed one-line notation per component, e.g. `[3,-1,2]`, and `g7`
    /// for G2; components joined with `x`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn parse(rs: &RootSystem, s: &str) -> Result<WeylElement> {
        let err = |reason: &str| Error::Parse {
            what: "Weyl group element",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = Vec::new();
        for token in s.trim().split('x') {
            let token = token.trim();
            if let Some(k) = token.strip_prefix('g') {
                parts.push(Part::G2(k.parse().map_err(|_| err("bad G2 index"))?));
                continue;
            }
            let inner = token
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| err("expected [..] or gK"))?;
            let mut sp = SignedPerm {
                perm: Vec::new(),
                neg: Vec::new(),
            };
            for entry in inner.split(',') {
                let v: i32 = entry.trim().parse().map_err(|_| err("bad entry"))?;
                if v == 0 {
                    return Err(err("entries are 1-based"));
                }
                sp.perm.push((v.unsigned_abs() - 1) as u16);
                sp.neg.push(v < 0);
            }
            parts.push(Part::Signed(sp));
        }
        let w = WeylElement { parts };
        w.validate(rs)?;
        Ok(w)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            match p {
                Part::G2(i) => write!(f, "g{i}")?,
                Part::Signed(sp) => {
                    let entries: Vec<String> = sp
                        .perm
                        .iter()
                        .zip(&sp.neg)
                        .map(|(&p, &n)| {
                            let v = p as i64 + 1;
                            (if n { -v } else { v }).to_string()
                        })
                        .collect();
                    write!(f, "[{}]", entries.join(","))?;
                }
            }
        }
        Ok(())
    }
}

fn dense(v: &Sparse) -> [i32; 2] {
    let mut out = [0; 2];
    for &(c, x) in v.entries() {
        out[c as usize] = x;
    }
    out
}

/// Order of the full group, or a too-large error when it exceeds `cap`.
pub fn checked_order(rs: &RootSystem, cap: u128) -> Result<u128> {
    let order = rs.spec().group_order();
    if order > cap {
        return Err(Error::TooLarge { order, cap });
    }
    Ok(order)
}

/// Random-access decoder for the enumeration order.
#[derive(Debug, Clone)]
pub struct Enumerator {
    radices: Vec<u128>,
    families: Vec<Family>,
    dims: Vec<usize>,
    order: u128,
}

impl Enumerator {
    pub fn new(rs: &RootSystem, cap: u128) -> Result<Self> {
        let order = checked_order(rs, cap)?;
        let comps = rs.spec().components();
        Ok(Enumerator {
            radices: comps.iter().map(|c| c.group_order()).collect(),
            families: comps.iter().map(|c| c.family).collect(),
            dims: comps.iter().map(|c| c.dim()).collect(),
            order,
        })
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// The `index`-th element.
    pub fn element(&self, index: u128) -> WeylElement {
        let mut w = WeylElement { parts: Vec::new() };
        self.fill(index, &mut w);
        w
    }

    /// Decodes `index` into `out`, reusing its buffers.
    pub fn fill(&self, mut index: u128, out: &mut WeylElement) {
        assert!(index < self.order, "enumeration index out of range");
        out.parts.resize_with(self.radices.len(), || Part::G2(0));
        for c in (0..self.radices.len()).rev() {
            let digit = index % self.radices[c];
            index /= self.radices[c];
            let n = self.dims[c];
            let part = &mut out.parts[c];
            match self.families[c] {
                Family::G2 => *part = Part::G2(digit as u8),
                fam => {
                    if !matches!(part, Part::Signed(sp) if sp.perm.len() == n) {
                        *part = Part::Signed(SignedPerm::identity(n));
                    }
                    let Part::Signed(sp) = part else {
                        unreachable!()
                    };
                    let (perm_rank, mask) = match fam {
                        Family::A => (digit, 0u128),
                        Family::B | Family::C => (digit >> n, digit & ((1 << n) - 1)),
                        Family::D => {
                            let k = digit & ((1 << (n - 1)) - 1);
                            let parity = (k.count_ones() & 1) as u128;
                            (digit >> (n - 1), (k << 1) | parity)
                        }
                        Family::G2 => unreachable!(),
                    };
                    unrank_permutation(perm_rank, &mut sp.perm);
                    for (i, neg) in sp.neg.iter_mut().enumerate() {
                        *neg = mask >> (n - 1 - i) & 1 == 1;
                    }
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }
}

/// Lexicographic unranking (Lehmer code) into `perm`, whose length fixes n.
fn unrank_permutation(mut rank: u128, perm: &mut [u16]) {
    let n = perm.len();
    let mut fact = vec![1u128; n.max(1)];
    for k in 1..n {
        fact[k] = fact[k - 1] * k as u128;
    }
    let mut avail: Vec<u16> = (0..n as u16).collect();
    for (pos, slot) in perm.iter_mut().enumerate() {
        let f = fact[n - 1 - pos];
        let q = (rank / f) as usize;
        rank %= f;
        *slot = avail.remove(q);
    }
}

/// Every element of the group in enumeration order.
pub fn enumerate(rs: &RootSystem, cap: u128) -> Result<impl Iterator<Item = WeylElement>> {
    let e = Enumerator::new(rs, cap)?;
    Ok((0..e.order).map(move |i| e.element(i)))
}

/// A uniformly random element.
pub fn sample_uniform<R: Rng + ?Sized>(rs: &RootSystem, rng: &mut R) -> WeylElement {
    let mut w = WeylElement { parts: Vec::new() };
    sample_into(rs, rng, &mut w);
    w
}

/// [`sample_uniform`] reusing the buffers of `out`.
pub fn sample_into<R: Rng + ?Sized>(rs: &RootSystem, rng: &mut R, out: &mut WeylElement) {
    let comps = rs.spec().components();
    out.parts.resize_with(comps.len(), || Part::G2(0));
    for (c, part) in comps.iter().zip(out.parts.iter_mut()) {
        let n = c.dim();
        if c.family == Family::G2 {
            *part = Part::G2(rng.random_range(0..12u8));
            continue;
        }
        if !matches!(part, Part::Signed(sp) if sp.perm.len() == n) {
            *part = Part::Signed(SignedPerm::identity(n));
        }
        let Part::Signed(sp) = part else {
            unreachable!()
        };
        for (k, p) in sp.perm.iter_mut().enumerate() {
            *p = k as u16;
        }
        sp.perm.shuffle(rng);
        match c.family {
            Family::A => sp.neg.fill(false),
            Family::B | Family::C => sp.neg.iter_mut().for_each(|s| *s = rng.random()),
            Family::D => {
                let mut parity = false;
                for s in &mut sp.neg[..n - 1] {
                    *s = rng.random();
                    parity ^= *s;
                }
                sp.neg[n - 1] = parity;
            }
            Family::G2 => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;
    use std::collections::{HashMap, HashSet};

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn identity_and_transposition() {
        let rs = sys("A2");
        let e = WeylElement::identity(&rs);
        for b in rs.ids() {
            assert_eq!(
                e.apply(&rs, b).unwrap(),
                SignedRoot {
                    root: b,
                    negative: false
                }
            );
        }
        let n12 = rs.parse_root("N[1,2]").unwrap();
        let s = WeylElement::reflection(&rs, n12);
        assert_eq!(s.to_string(), "[2,1,3]");
        assert_eq!(
            s.apply(&rs, n12).unwrap(),
            SignedRoot {
                root: n12,
                negative: true
            }
        );
    }

    #[test]
    fn sign_change_maps_p_to_n() {
        let rs = sys("B2");
        let w = WeylElement::parse(&rs, "[-1,2]").unwrap();
        let img = w.apply(&rs, rs.parse_root("P[1,2]").unwrap()).unwrap();
        assert_eq!(rs.render(img.root), "N[1,2]");
        assert!(!img.negative);
    }

    #[test]
    fn longest_element_inverts_everything() {
        for s in ["A4", "B3", "C4", "D4", "D5", "D3", "G2", "A2xD3"] {
            let rs = sys(s);
            let w0 = WeylElement::longest(&rs);
            w0.validate(&rs).unwrap();
            assert_eq!(w0.inversion_set(&rs).unwrap().len(), rs.len(), "{s}");
        }
    }

    #[test]
    fn g2_inversion_sets_follow_the_table() {
        let rs = sys("G2");
        let [a, b] = [RootId(0), RootId(1)];
        let (s, t) = (
            WeylElement::reflection(&rs, a),
            WeylElement::reflection(&rs, b),
        );
        // β1..β6 = r1, r5, r4, r6, r3, r2 and the word `st` acts as t∘s
        let st = t.compose(&s);
        assert_eq!(rs.render_list(&st.inversion_set(&rs).unwrap()), "r1,r5");
        let sts = s.compose(&st);
        assert_eq!(rs.render_list(&sts.inversion_set(&rs).unwrap()), "r1,r4,r5");
        let all: HashSet<Vec<RootId>> = enumerate(&rs, 100)
            .unwrap()
            .map(|w| w.inversion_set(&rs).unwrap())
            .collect();
        assert_eq!(all.len(), 12);
        for r in rs.ids() {
            let s_r = WeylElement::reflection(&rs, r);
            let img = s_r.apply(&rs, r).unwrap();
            assert!(img.negative && img.root == r);
        }
    }

    #[test]
    fn enumeration_sizes_and_order() {
        for (s, n) in [
            ("A2", 6),
            ("D4", 192),
            ("G2", 12),
            ("B3", 48),
            ("A1xG2", 24),
        ] {
            let rs = sys(s);
            let all: Vec<WeylElement> = enumerate(&rs, 1_000).unwrap().collect();
            assert_eq!(all.len(), n, "{s}");
            let set: HashSet<&WeylElement> = all.iter().collect();
            assert_eq!(set.len(), n, "{s}");
            for w in &all {
                w.validate(&rs).unwrap();
            }
        }
        let rs = sys("B2");
        let text: Vec<String> = enumerate(&rs, 100)
            .unwrap()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(
            text,
            ["[1,2]", "[1,-2]", "[-1,2]", "[-1,-2]", "[2,1]", "[2,-1]", "[-2,1]", "[-2,-1]"]
        );
        let rs = sys("D3");
        let first: Vec<String> = enumerate(&rs, 100)
            .unwrap()
            .take(4)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(first, ["[1,2,3]", "[1,-2,-3]", "[-1,2,-3]", "[-1,-2,3]"]);
    }

    #[test]
    fn enumeration_cap_reports_order() {
        let rs = sys("B10");
        match Enumerator::new(&rs, 1000) {
            Err(Error::TooLarge { order, cap }) => {
                assert_eq!(order, 3_715_891_200);
                assert_eq!(cap, 1000);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn composition_is_an_action() {
        let rs = sys("C3");
        let all: Vec<WeylElement> = enumerate(&rs, 100).unwrap().collect();
        for u in all.iter().step_by(5) {
            for v in all.iter().step_by(7) {
                let uv = u.compose(v);
                for b in rs.ids() {
                    let vb = v.apply(&rs, b).unwrap();
                    let uvb = u.apply(&rs, vb.root).unwrap();
                    let direct = uv.apply(&rs, b).unwrap();
                    assert_eq!(direct.root, uvb.root);
                    assert_eq!(direct.negative, vb.negative ^ uvb.negative);
                }
            }
            assert_eq!(u.compose(&u.inverse()), WeylElement::identity(&rs));
        }
    }

    #[test]
    fn parabolic_examples() {
        let rs = sys("A2");
        let (a1, a2) = (RootId(0), RootId(1));
        let w = WeylElement::reflection(&rs, a1).compose(&WeylElement::reflection(&rs, a2));
        let (q, p) = w.parabolic_decompose(&rs, &[a1]).unwrap();
        assert_eq!(q, w);
        assert_eq!(p, WeylElement::identity(&rs));
        let (q, p) = w.parabolic_decompose(&rs, &[]).unwrap();
        assert_eq!((q, p), (w.clone(), WeylElement::identity(&rs)));
        let (q, p) = w.parabolic_decompose(&rs, &[a1, a2]).unwrap();
        assert_eq!(q, WeylElement::identity(&rs));
        assert_eq!(p, w);
        let top = rs.parse_root("N[1,3]").unwrap();
        assert!(matches!(
            w.parabolic_decompose(&rs, &[top]),
            Err(Error::NotSimple(_))
        ));
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let rs = sys("B3");
        let other = sys("A3");
        let w = WeylElement::identity(&other);
        assert!(matches!(
            w.apply(&rs, RootId(0)),
            Err(Error::ComponentMismatch(_))
        ));
        let d = sys("D3");
        assert!(WeylElement::parse(&d, "[-1,2,3]").is_err());
        assert!(WeylElement::parse(&other, "[-1,2,3,4]").is_err());
    }

    #[test]
    fn sampling_covers_d3_and_is_reproducible() {
        let rs = sys("D3");
        let mut rng = stream_rng(11, 0);
        let mut seen: HashMap<String, usize> = HashMap::new();
        for _ in 0..20_000 {
            let w = sample_uniform(&rs, &mut rng);
            w.validate(&rs).unwrap();
            *seen.entry(w.to_string()).or_default() += 1;
        }
        assert_eq!(seen.len(), 24);
        let a = sample_uniform(&rs, &mut stream_rng(5, 2));
        let b = sample_uniform(&rs, &mut stream_rng(5, 2));
        assert_eq!(a, b);
    }
}
