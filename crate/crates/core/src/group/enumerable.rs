use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Group, GroupError, Order};

/// Free generator letters, ordered `a < a⁻¹ < b < b⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }
}

/// Canonical encoding of one element of an [`EnumerableGroup`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementCode {
    /// An integer in `ℤ`.
    Int(i64),
    /// A point of `ℤ²`.
    Pair(i64, i64),
    /// A freely reduced word in `F₂`.
    Word(Vec<Letter>),
    /// `t^shift s^flip` in the infinite dihedral group, `s t s = t⁻¹`.
    Dihedral { shift: i64, flip: bool },
    /// `num / p^exp mod 1` in lowest terms (`exp = 0` only for `0`).
    Fraction { num: u128, exp: u32 },
    /// A finitely supported vector over `F₂`, bit `i` = coordinate `i`.
    Mask(u64),
}

/// The catalog of countably infinite groups with decidable element orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumerableGroup {
    Integers,
    IntegerLattice,
    FreeGroup2,
    InfiniteDihedral,
    /// `ℤ(p^∞)`, `p ∈ {2, 3}`.
    Pruefer(u32),
    /// `⊕_ℕ C₂`, restricted to the first 64 coordinates.
    ElementaryAbelian2,
}

impl EnumerableGroup {
    pub const CATALOG: [EnumerableGroup; 7] = [
        EnumerableGroup::Integers,
        EnumerableGroup::IntegerLattice,
        EnumerableGroup::FreeGroup2,
        EnumerableGroup::InfiniteDihedral,
        EnumerableGroup::Pruefer(2),
        EnumerableGroup::Pruefer(3),
        EnumerableGroup::ElementaryAbelian2,
    ];

    pub fn tag(&self) -> String {
        match self {
            EnumerableGroup::Integers => "z".into(),
            EnumerableGroup::IntegerLattice => "z2".into(),
            EnumerableGroup::FreeGroup2 => "free:2".into(),
            EnumerableGroup::InfiniteDihedral => "dinf".into(),
            EnumerableGroup::Pruefer(p) => format!("pruefer:{p}"),
            EnumerableGroup::ElementaryAbelian2 => "eab2inf".into(),
        }
    }

    /// Largest exponent `k` with `p^k` comfortably inside `u128` products.
    fn max_exp(p: u32) -> u32 {
        match p {
            2 => 60,
            _ => 38,
        }
    }

    /// Parses an element label as produced by [`Group::label`].
    pub fn parse_code(&self, s: &str) -> Result<ElementCode, GroupError> {
        let s = s.trim();
        let bad = || GroupError::UnknownElement(s.to_string());
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match self {
            EnumerableGroup::Integers => Ok(ElementCode::Int(int(s)?)),
            EnumerableGroup::IntegerLattice => {
                let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
                let (x, y) = inner.split_once(',').ok_or_else(bad)?;
                Ok(ElementCode::Pair(int(x)?, int(y)?))
            }
            EnumerableGroup::FreeGroup2 => {
                if s == "e" {
                    return Ok(ElementCode::Word(Vec::new()));
                }
                let mut word = Vec::new();
                for c in s.chars() {
                    let l = match c {
                        'a' => Letter::A,
                        'A' => Letter::AInv,
                        'b' => Letter::B,
                        'B' => Letter::BInv,
                        _ => return Err(bad()),
                    };
                    push_reduced(&mut word, l);
                }
                Ok(ElementCode::Word(word))
            }
            EnumerableGroup::InfiniteDihedral => {
                if s == "e" {
                    return Ok(ElementCode::Dihedral { shift: 0, flip: false });
                }
                let (rot, flip) = match s.strip_suffix('s') {
                    Some(r) => (r, true),
                    None => (s, false),
                };
                let shift = if rot.is_empty() {
                    0
                } else if rot == "t" {
                    1
                } else {
                    int(rot.strip_prefix("t^").ok_or_else(bad)?)?
                };
                Ok(ElementCode::Dihedral { shift, flip })
            }
            EnumerableGroup::Pruefer(p) => {
                let p = *p as u128;
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (
                        a.trim().parse::<u128>().map_err(|_| bad())?,
                        b.trim().parse::<u128>().map_err(|_| bad())?,
                    ),
                    None => (s.parse::<u128>().map_err(|_| bad())?, 1),
                };
                let mut exp = 0;
                let mut d = den;
                while d > 1 {
                    if d % p != 0 {
                        return Err(bad());
                    }
                    d /= p;
                    exp += 1;
                }
                if den == 0 || exp > Self::max_exp(p as u32) {
                    return Err(bad());
                }
                Ok(reduce_fraction(p, num % den, exp))
            }
            EnumerableGroup::ElementaryAbelian2 => {
                if s == "e" {
                    return Ok(ElementCode::Mask(0));
                }
                let mut mask = 0u64;
                for part in s.split('+') {
                    let i: u32 = part
                        .trim()
                        .strip_prefix('x')
                        .and_then(|t| t.parse().ok())
                        .filter(|&i| i < 64)
                        .ok_or_else(bad)?;
                    mask ^= 1 << i;
                }
                Ok(ElementCode::Mask(mask))
            }
        }
    }
}

impl fmt::Display for EnumerableGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

fn push_reduced(word: &mut Vec<Letter>, l: Letter) {
    if word.last() == Some(&l.inverse()) {
        word.pop();
    } else {
        word.push(l);
    }
}

fn reduce_fraction(p: u128, mut num: u128, mut exp: u32) -> ElementCode {
    while exp > 0 && num.is_multiple_of(p) {
        num /= p;
        exp -= 1;
    }
    if exp == 0 {
        num = 0;
    }
    ElementCode::Fraction { num, exp }
}

fn zigzag(i: u64) -> i64 {
    // 0, 1, -1, 2, -2, ...
    if i % 2 == 1 {
        i.div_ceil(2) as i64
    } else {
        -((i / 2) as i64)
    }
}

/// Square spiral through `ℤ²` starting at the origin; box `r` is finished
/// at `(r, -r)` before box `r + 1` starts.
struct Spiral {
    pos: (i64, i64),
    dir: usize,
    leg: i64,
    left_in_leg: i64,
    legs_done: u8,
    started: bool,
}

impl Iterator for Spiral {
    type Item = (i64, i64);

    fn next(&mut self) -> Option<(i64, i64)> {
        if !self.started {
            self.started = true;
            return Some(self.pos);
        }
        const DIRS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
        if self.left_in_leg == 0 {
            self.dir = (self.dir + 1) % 4;
            self.legs_done += 1;
            if self.legs_done == 2 {
                self.legs_done = 0;
                self.leg += 1;
            }
            self.left_in_leg = self.leg;
        }
        let (dx, dy) = DIRS[self.dir];
        self.pos = (self.pos.0 + dx, self.pos.1 + dy);
        self.left_in_leg -= 1;
        Some(self.pos)
    }
}

/// Reduced words by length, then lexicographically.
struct Words {
    level: Vec<Vec<Letter>>,
    idx: usize,
}

impl Iterator for Words {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        if self.idx == self.level.len() {
            let mut next = Vec::with_capacity(self.level.len() * 3 + 4);
            for w in &self.level {
                for l in Letter::ALL {
                    if w.last() != Some(&l.inverse()) {
                        let mut v = w.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
            }
            self.level = next;
            self.idx = 0;
        }
        self.idx += 1;
        Some(self.level[self.idx - 1].clone())
    }
}

impl Group for EnumerableGroup {
    type Elem = ElementCode;

    fn identity(&self) -> ElementCode {
        match self {
            EnumerableGroup::Integers => ElementCode::Int(0),
            EnumerableGroup::IntegerLattice => ElementCode::Pair(0, 0),
            EnumerableGroup::FreeGroup2 => ElementCode::Word(Vec::new()),
            EnumerableGroup::InfiniteDihedral => ElementCode::Dihedral { shift: 0, flip: false },
            EnumerableGroup::Pruefer(_) => ElementCode::Fraction { num: 0, exp: 0 },
            EnumerableGroup::ElementaryAbelian2 => ElementCode::Mask(0),
        }
    }

    fn mul(&self, a: &ElementCode, b: &ElementCode) -> ElementCode {
        use ElementCode::*;
        match (self, a, b) {
            (EnumerableGroup::Integers, Int(x), Int(y)) => Int(x + y),
            (EnumerableGroup::IntegerLattice, Pair(x1, y1), Pair(x2, y2)) => Pair(x1 + x2, y1 + y2),
            (EnumerableGroup::FreeGroup2, Word(u), Word(v)) => {
                let mut w = u.clone();
                for &l in v {
                    push_reduced(&mut w, l);
                }
                Word(w)
            }
            (
                EnumerableGroup::InfiniteDihedral,
                Dihedral { shift: i1, flip: f1 },
                Dihedral { shift: i2, flip: f2 },
            ) => {
                // t^i1 s^f1 t^i2 s^f2 = t^(i1 ± i2) s^(f1 + f2)
                let i2 = if *f1 { -i2 } else { *i2 };
                Dihedral { shift: i1 + i2, flip: f1 ^ f2 }
            }
            (EnumerableGroup::Pruefer(p), Fraction { num: n1, exp: e1 }, Fraction { num: n2, exp: e2 }) => {
                let p = *p as u128;
                let k = (*e1).max(*e2);
                let den = p.pow(k);
                let num = (n1 * p.pow(k - e1) + n2 * p.pow(k - e2)) % den;
                reduce_fraction(p, num, k)
            }
            (EnumerableGroup::ElementaryAbelian2, Mask(x), Mask(y)) => Mask(x ^ y),
            _ => panic!("element codes {a:?}, {b:?} do not belong to {self}"),
        }
    }

    fn inv(&self, a: &ElementCode) -> ElementCode {
        use ElementCode::*;
        match (self, a) {
            (EnumerableGroup::Integers, Int(x)) => Int(-x),
            (EnumerableGroup::IntegerLattice, Pair(x, y)) => Pair(-x, -y),
            (EnumerableGroup::FreeGroup2, Word(w)) => Word(w.iter().rev().map(|l| l.inverse()).collect()),
            (EnumerableGroup::InfiniteDihedral, Dihedral { shift, flip }) => {
                if *flip {
                    a.clone()
                } else {
                    Dihedral { shift: -shift, flip: false }
                }
            }
            (EnumerableGroup::Pruefer(p), Fraction { num, exp }) => {
                let den = (*p as u128).pow(*exp);
                Fraction { num: (den - num) % den, exp: *exp }
            }
            (EnumerableGroup::ElementaryAbelian2, Mask(_)) => a.clone(),
            _ => panic!("element code {a:?} does not belong to {self}"),
        }
    }

    fn order_of(&self, a: &ElementCode) -> Order {
        if *a == self.identity() {
            return Order::Finite(1);
        }
        match (self, a) {
            (EnumerableGroup::InfiniteDihedral, ElementCode::Dihedral { flip: true, .. }) => Order::Finite(2),
            (EnumerableGroup::Pruefer(p), ElementCode::Fraction { exp, .. }) => {
                Order::Finite((*p as u64).pow(*exp))
            }
            (EnumerableGroup::ElementaryAbelian2, _) => Order::Finite(2),
            // ℤ, ℤ², F₂ and the rotations of D∞ are torsion-free.
            _ => Order::Infinite,
        }
    }

    fn elements(&self) -> Box<dyn Iterator<Item = ElementCode> + '_> {
        match *self {
            EnumerableGroup::Integers => Box::new((0u64..).map(|i| ElementCode::Int(zigzag(i)))),
            EnumerableGroup::IntegerLattice => Box::new(
                Spiral { pos: (0, 0), dir: 3, leg: 0, left_in_leg: 0, legs_done: 1, started: false }
                    .map(|(x, y)| ElementCode::Pair(x, y)),
            ),
            EnumerableGroup::FreeGroup2 => {
                Box::new(Words { level: vec![Vec::new()], idx: 0 }.map(ElementCode::Word))
            }
            EnumerableGroup::InfiniteDihedral => Box::new((0u64..).flat_map(|i| {
                let shift = zigzag(i);
                [false, true].map(|flip| ElementCode::Dihedral { shift, flip })
            })),
            EnumerableGroup::Pruefer(p) => {
                let p = p as u128;
                let max = Self::max_exp(p as u32);
                Box::new(core::iter::once(ElementCode::Fraction { num: 0, exp: 0 }).chain(
                    (1..=max).flat_map(move |exp| {
                        (1..p.pow(exp))
                            .filter(move |a| a % p != 0)
                            .map(move |num| ElementCode::Fraction { num, exp })
                    }),
                ))
            }
            EnumerableGroup::ElementaryAbelian2 => Box::new((0u64..).map(ElementCode::Mask)),
        }
    }

    fn label(&self, a: &ElementCode) -> String {
        match a {
            ElementCode::Int(x) => x.to_string(),
            ElementCode::Pair(x, y) => format!("({x},{y})"),
            ElementCode::Word(w) if w.is_empty() => "e".into(),
            ElementCode::Word(w) => w.iter().map(|l| l.symbol()).collect(),
            ElementCode::Dihedral { shift, flip } => {
                let rot = match shift {
                    0 => String::new(),
                    1 => "t".into(),
                    k => format!("t^{k}"),
                };
                match (rot.is_empty(), flip) {
                    (true, false) => "e".into(),
                    (_, true) => format!("{rot}s"),
                    (false, false) => rot,
                }
            }
            ElementCode::Fraction { exp: 0, .. } => "0".into(),
            ElementCode::Fraction { num, exp } => {
                let EnumerableGroup::Pruefer(p) = self else {
                    return format!("{num}/?^{exp}");
                };
                format!("{num}/{}", (*p as u128).pow(*exp))
            }
            ElementCode::Mask(0) => "e".into(),
            ElementCode::Mask(m) => {
                let parts: Vec<String> = (0..64)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| format!("x{i}"))
                    .collect();
                parts.join("+")
            }
        }
    }

    fn cardinality(&self) -> Option<usize> {
        None
    }
}
