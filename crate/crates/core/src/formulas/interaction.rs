//! Index-match counts between root classes of a fixed height.
//!
//! For a class `X ∈ {N, O, P}` and height `a`, each index position of the
//! roots in `X_a` ranges over an integer interval, and the index value at
//! either position determines the root. The number of pairs in
//! `X_a × Y_b` whose chosen indices coincide is therefore the size of an
//! interval intersection:
//!
//! - `N_a`: `i ∈ [1, n−a]`, `j = i + a ∈ [a+1, n]`.
//! - `O_a`: the single index with `ht(O(i)) = a`.
//! - `P_a`: with `s = i + j` fixed by the height,
//!   `i ∈ [max(1, s−n), ⌊(s−1)/2⌋]` and `j = s − i`.
//!
//! Pairs are ordered (`β ∈ X_a`, `γ ∈ Y_b`). For `N × N` with `i = k` or
//! `j = ℓ` the pair must consist of distinct roots, so `a = b` gives 0.
//! Everywhere else identical pairs count, e.g. `O_a × O_a` gives 1.

use std::str::FromStr;

use serde::Serialize;

use crate::rootsys::Family;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootClass {
    N,
    O,
    P,
}

impl FromStr for RootClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" => Ok(RootClass::N),
            "O" => Ok(RootClass::O),
            "P" => Ok(RootClass::P),
            _ => Err(Error::Parse {
                what: "root class",
                input: s.to_string(),
                reason: "expected N, O or P".to_string(),
            }),
        }
    }
}

/// Which index of the first root (`i`, `j`) equals which index of the
/// second (`k`, `ℓ`). An `O` root has the single index `i` or `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    IK,
    IL,
    JK,
    JL,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::IK, Pattern::IL, Pattern::JK, Pattern::JL];

    fn positions(self) -> (usize, usize) {
        match self {
            Pattern::IK => (0, 0),
            Pattern::IL => (0, 1),
            Pattern::JK => (1, 0),
            Pattern::JL => (1, 1),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('ℓ', "l").as_str() {
            "i=k" => Ok(Pattern::IK),
            "i=l" => Ok(Pattern::IL),
            "j=k" => Ok(Pattern::JK),
            "j=l" => Ok(Pattern::JL),
            // the O×O notation names the two single indices i and j
            "i=j" => Ok(Pattern::IK),
            _ => Err(Error::Parse {
                what: "index pattern",
                input: s.to_string(),
                reason: "expected i=k, i=l, j=k, j=l or i=j".to_string(),
            }),
        }
    }
}

fn arity(class: RootClass) -> usize {
    match class {
        RootClass::O => 1,
        _ => 2,
    }
}

fn check_class(family: Family, class: RootClass) -> Result<()> {
    let ok = match class {
        RootClass::N => family != Family::G2,
        RootClass::O => matches!(family, Family::B | Family::C),
        RootClass::P => matches!(family, Family::B | Family::C | Family::D),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "class {class:?} in type {family}"
        )))
    }
}

/// Range of the index at `pos` over the roots of `class` at height `a`;
/// `lo > hi` when the class is empty.
fn interval(family: Family, n: i64, class: RootClass, a: i64, pos: usize) -> (i64, i64) {
    match class {
        RootClass::N => {
            if pos == 0 {
                (1, n - a)
            } else {
                (a + 1, n)
            }
        }
        RootClass::O => {
            let i = match family {
                Family::B => a,
                _ if a % 2 == 1 => (a + 1) / 2,
                _ => return (1, 0),
            };
            if (1..=n).contains(&i) {
                (i, i)
            } else {
                (1, 0)
            }
        }
        RootClass::P => {
            let s = a + match family {
                Family::B => 0,
                Family::C => 1,
                _ => 2,
            };
            let (lo, hi) = ((s - n).max(1), (s - 1).div_euclid(2));
            if lo > hi {
                (1, 0)
            } else if pos == 0 {
                (lo, hi)
            } else {
                (s - hi, s - lo)
            }
        }
    }
}

/// Number of pairs `(β, γ) ∈ X_a × Y_b` whose indices match `pattern`.
pub fn interaction_count(
    family: Family,
    n: u32,
    class_a: RootClass,
    a: u32,
    class_b: RootClass,
    b: u32,
    pattern: Pattern,
) -> Result<u64> {
    check_class(family, class_a)?;
    check_class(family, class_b)?;
    if a == 0 || b == 0 {
        return Err(Error::Range {
            what: "height",
            detail: "heights start at 1".to_string(),
        });
    }
    let (p, q) = pattern.positions();
    if p >= arity(class_a) || q >= arity(class_b) {
        return Err(Error::Unsupported(format!(
            "pattern {pattern:?} for classes {class_a:?}, {class_b:?}"
        )));
    }
    if class_a == RootClass::N && class_b == RootClass::N && p == q && a == b {
        return Ok(0);
    }
    let n = n as i64;
    let (l1, h1) = interval(family, n, class_a, a as i64, p);
    let (l2, h2) = interval(family, n, class_b, b as i64, q);
    if l1 > h1 || l2 > h2 {
        return Ok(0);
    }
    Ok((h1.min(h2) - l1.max(l2) + 1).max(0) as u64)
}
