use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Group, Order};

/// Largest supported finite group order.
pub const MAX_FINITE_ORDER: usize = 4096;

/// Orders up to this bound get the exhaustive associativity check.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("group order must be at least 1")]
    Empty,
    #[error("group order {0} exceeds the supported maximum {MAX_FINITE_ORDER}")]
    TooLarge(usize),
    #[error("row {row} has {len} entries, expected {expected}")]
    RowLength { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("element 0 is not an identity: 0*{a} or {a}*0 differs from {a}")]
    IdentityNotAtZero { a: usize },
    #[error("row {row} repeats element {value}")]
    RowNotPermutation { row: usize, value: usize },
    #[error("column {col} repeats element {value}")]
    ColumnNotPermutation { col: usize, value: usize },
    #[error("associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
}

/// A finite group given by its multiplication table.
///
/// Element `0` is the identity; `product(a, b)` is the index of `ab`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    names: Vec<String>,
}

impl core::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .field("names", &self.names)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a table given as rows and wraps it.
    ///
    /// When `names` is `None` elements are named by their index.
    pub fn from_rows(rows: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Self, TableError> {
        let n = rows.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > MAX_FINITE_ORDER {
            return Err(TableError::TooLarge(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(TableError::RowLength { row, len: r.len(), expected: n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(TableError::OutOfRange { row, col, value });
                }
                table.push(value as u16);
            }
        }
        Self::from_flat(n, table, names)
    }

    /// Builds a group of order `n` from a product closure and validates it.
    pub fn from_fn(
        n: usize,
        mut product: impl FnMut(usize, usize) -> usize,
        names: Vec<String>,
    ) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > MAX_FINITE_ORDER {
            return Err(TableError::TooLarge(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let value = product(a, b);
                if value >= n {
                    return Err(TableError::OutOfRange { row: a, col: b, value });
                }
                table.push(value as u16);
            }
        }
        Self::from_flat(n, table, Some(names))
    }

    fn from_flat(n: usize, table: Vec<u16>, names: Option<Vec<String>>) -> Result<Self, TableError> {
        let names = match names {
            Some(names) => {
                if names.len() != n {
                    return Err(TableError::NameCount { expected: n, got: names.len() });
                }
                let mut sorted: Vec<&String> = names.iter().collect();
                sorted.sort();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    return Err(TableError::DuplicateName(w[0].clone()));
                }
                names
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let at = |a: usize, b: usize| table[a * n + b] as usize;

        for a in 0..n {
            if at(0, a) != a || at(a, 0) != a {
                return Err(TableError::IdentityNotAtZero { a });
            }
        }
        let mut seen = vec![false; n];
        for row in 0..n {
            seen.fill(false);
            for col in 0..n {
                let v = at(row, col);
                if core::mem::replace(&mut seen[v], true) {
                    return Err(TableError::RowNotPermutation { row, value: v });
                }
            }
        }
        for col in 0..n {
            seen.fill(false);
            for row in 0..n {
                let v = at(row, col);
                if core::mem::replace(&mut seen[v], true) {
                    return Err(TableError::ColumnNotPermutation { col, value: v });
                }
            }
        }
        let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(TableError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_d0fa_550c);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(TableError::NotAssociative { a, b, c });
                }
            }
        }

        // Latin rows guarantee exactly one right inverse per element.
        let inverse: Vec<u16> = (0..n)
            .map(|a| (0..n).find(|&b| at(a, b) == 0).expect("Latin row contains identity") as u16)
            .collect();
        Ok(FiniteGroup { n, table, inverse, names })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.product(x, a);
            k += 1;
        }
        k
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// Resolves a token as an exact element name first, then as an index.
    pub fn resolve(&self, token: &str) -> Option<usize> {
        let token = token.trim();
        if let Some(i) = self.names.iter().position(|s| s == token) {
            return Some(i);
        }
        token.parse::<usize>().ok().filter(|&i| i < self.n)
    }

    /// Row-major table, for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.product(a, b)).collect())
            .collect()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, TableError> {
        if names.len() != self.n {
            return Err(TableError::NameCount { expected: self.n, got: names.len() });
        }
        let mut sorted: Vec<&String> = names.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(TableError::DuplicateName(w[0].clone()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn cyclic(n: usize) -> Result<Self, TableError> {
        let names = (0..n).map(|i| power_name("g", i)).collect();
        Self::from_fn(n, |a, b| (a + b) % n, names)
    }

    /// Dihedral group of order `2n`: elements `r^i` (index `i`) and `s r^i`
    /// (index `n + i`) with `r^n = s² = e`, `r s = s r⁻¹`.
    pub fn dihedral(n: usize) -> Result<Self, TableError> {
        let names = (0..2 * n)
            .map(|x| {
                let (k, i) = (x / n, x % n);
                match (k, i) {
                    (0, _) => power_name("r", i),
                    (_, 0) => "s".to_string(),
                    _ => format!("s{}", power_name("r", i)),
                }
            })
            .collect();
        Self::from_fn(
            2 * n,
            |x, y| {
                let (k1, i1) = (x / n, x % n);
                let (k2, i2) = (y / n, y % n);
                // r^i1 s^k2 = s^k2 r^(±i1)
                let i1 = if k2 == 1 { (n - i1) % n } else { i1 };
                ((k1 + k2) % 2) * n + (i1 + i2) % n
            },
            names,
        )
    }

    /// Dicyclic group of order `4n` from `a^{2n} = e`, `b² = aⁿ`,
    /// `b a b⁻¹ = a⁻¹`; elements `a^i` (index `i`) and `a^i b` (index
    /// `2n + i`). For `n` a power of two this is generalized quaternion.
    pub fn generalized_quaternion(order: usize) -> Result<Self, TableError> {
        let n = order / 4;
        let m = 2 * n;
        let names = (0..order)
            .map(|x| {
                let (k, i) = (x / m, x % m);
                match (k, i) {
                    (0, _) => power_name("a", i),
                    (_, 0) => "b".to_string(),
                    _ => format!("{}b", power_name("a", i)),
                }
            })
            .collect();
        Self::from_fn(
            order,
            |x, y| {
                let (k1, i1) = (x / m, x % m);
                let (k2, i2) = (y / m, y % m);
                // b a^i2 = a^(-i2) b
                let i2 = if k1 == 1 { (m - i2) % m } else { i2 };
                let mut i = (i1 + i2) % m;
                let mut k = k1 + k2;
                if k == 2 {
                    i = (i + n) % m;
                    k = 0;
                }
                k * m + i
            },
            names,
        )
    }

    /// `(C_p)^k` as base-`p` digit vectors under digitwise addition.
    pub fn elementary_abelian(p: usize, k: u32) -> Result<Self, TableError> {
        let n = p.pow(k);
        let digits = |mut x: usize| {
            let mut d = Vec::with_capacity(k as usize);
            for _ in 0..k {
                d.push(x % p);
                x /= p;
            }
            d
        };
        let names = (0..n)
            .map(|x| {
                if x == 0 {
                    return "e".to_string();
                }
                let parts: Vec<String> = digits(x).iter().map(|d| d.to_string()).collect();
                format!("({})", parts.join(";"))
            })
            .collect();
        Self::from_fn(
            n,
            |x, y| {
                let (dx, dy) = (digits(x), digits(y));
                let mut z = 0;
                for i in (0..k as usize).rev() {
                    z = z * p + (dx[i] + dy[i]) % p;
                }
                z
            },
            names,
        )
    }

    /// `G × H` with `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, TableError> {
        let m = h.order();
        let n = g.order() * m;
        if n > MAX_FINITE_ORDER {
            return Err(TableError::TooLarge(n));
        }
        let names = (0..n)
            .map(|x| format!("({};{})", g.name(x / m), h.name(x % m)))
            .collect();
        Self::from_fn(
            n,
            |x, y| g.product(x / m, y / m) * m + h.product(x % m, y % m),
            names,
        )
    }

    /// Symmetric group on `n` points, permutations in lexicographic order
    /// (identity first). `στ` applies `τ` first.
    pub fn symmetric(n: usize) -> Result<Self, TableError> {
        let perms = permutations(n);
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        let mut buf = vec![0usize; n];
        Self::from_fn(
            perms.len(),
            |a, b| {
                let (s, t) = (&perms[a], &perms[b]);
                for x in 0..n {
                    buf[x] = s[t[x]];
                }
                index(&buf)
            },
            names,
        )
    }
}

fn power_name(base: &str, i: usize) -> String {
    match i {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{i}"),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Cycle notation with 1-based points, e.g. `(12)(34)`; identity is `e`.
fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        s.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            s.push_str(&(x + 1).to_string());
            x = p[x];
        }
        s.push(')');
    }
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

impl Group for FiniteGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.product(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.inverse(*a)
    }

    fn order_of(&self, a: &usize) -> Order {
        Order::Finite(self.element_order(*a))
    }

    fn elements(&self) -> Box<dyn Iterator<Item = usize> + '_> {
        Box::new(0..self.n)
    }

    fn label(&self, a: &usize) -> String {
        self.names[*a].clone()
    }

    fn cardinality(&self) -> Option<usize> {
        Some(self.n)
    }
}
