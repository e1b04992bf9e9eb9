use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{EnumerableGroup, FiniteGroup, GroupError, MAX_FINITE_ORDER};

/// A request for one group from the built-in catalog.
///
/// The textual form (`cyclic:4`, `product:cyclic:2xsym:3`, `pruefer:3`, …)
/// round-trips through [`FromStr`] and [`fmt::Display`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    /// Generalized quaternion (dicyclic) group of the given order `4n`.
    GeneralizedQuaternion(usize),
    ElementaryAbelian { p: usize, k: u32 },
    DirectProduct(Box<GroupDescriptor>, Box<GroupDescriptor>),
    Symmetric(usize),
    Enumerable(EnumerableGroup),
}

#[derive(Clone, Debug)]
pub enum BuiltGroup {
    Finite(FiniteGroup),
    Enumerable(EnumerableGroup),
}

impl GroupDescriptor {
    pub fn is_finite(&self) -> bool {
        !matches!(self, GroupDescriptor::Enumerable(_))
    }

    /// Order of the finite group this describes, without building it.
    pub fn finite_order(&self) -> Option<usize> {
        match self {
            GroupDescriptor::Cyclic(n) => Some(*n),
            GroupDescriptor::Dihedral(n) => n.checked_mul(2),
            GroupDescriptor::GeneralizedQuaternion(n) => Some(*n),
            GroupDescriptor::ElementaryAbelian { p, k } => p.checked_pow(*k),
            GroupDescriptor::DirectProduct(a, b) => a.finite_order()?.checked_mul(b.finite_order()?),
            GroupDescriptor::Symmetric(n) => Some((1..=*n).product()),
            GroupDescriptor::Enumerable(_) => None,
        }
    }

    pub fn build(&self) -> Result<BuiltGroup, GroupError> {
        build_group(self)
    }

    pub fn build_finite(&self) -> Result<FiniteGroup, GroupError> {
        match build_group(self)? {
            BuiltGroup::Finite(g) => Ok(g),
            BuiltGroup::Enumerable(g) => Err(invalid(format!("{g} is not a finite group"))),
        }
    }
}

fn invalid(msg: String) -> GroupError {
    GroupError::InvalidDescriptor(msg)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Builds and validates the group a descriptor names.
pub fn build_group(d: &GroupDescriptor) -> Result<BuiltGroup, GroupError> {
    if let GroupDescriptor::Enumerable(g) = d {
        if let EnumerableGroup::Pruefer(p) = g {
            if *p != 2 && *p != 3 {
                return Err(invalid(format!("Prüfer group only supported for p in {{2, 3}}, got {p}")));
            }
        }
        return Ok(BuiltGroup::Enumerable(*g));
    }
    match d.finite_order() {
        Some(n) if (1..=MAX_FINITE_ORDER).contains(&n) => {}
        Some(0) => return Err(invalid(format!("{d}: order must be positive"))),
        _ => return Err(invalid(format!("{d}: order exceeds {MAX_FINITE_ORDER}"))),
    }
    let g = match d {
        GroupDescriptor::Cyclic(n) => FiniteGroup::cyclic(*n)?,
        GroupDescriptor::Dihedral(n) => FiniteGroup::dihedral(*n)?,
        GroupDescriptor::GeneralizedQuaternion(n) => {
            if *n % 4 != 0 || *n < 8 {
                return Err(invalid(format!("quaternion order must be a multiple of 4 and at least 8, got {n}")));
            }
            FiniteGroup::generalized_quaternion(*n)?
        }
        GroupDescriptor::ElementaryAbelian { p, k } => {
            if !is_prime(*p) || *k == 0 {
                return Err(invalid(format!("elemabelian needs a prime p and k >= 1, got {p},{k}")));
            }
            FiniteGroup::elementary_abelian(*p, *k)?
        }
        GroupDescriptor::DirectProduct(a, b) => {
            FiniteGroup::direct_product(&a.build_finite()?, &b.build_finite()?)?
        }
        GroupDescriptor::Symmetric(n) => {
            if !(1..=5).contains(n) {
                return Err(invalid(format!("sym:N supports 1 <= N <= 5, got {n}")));
            }
            FiniteGroup::symmetric(*n)?
        }
        GroupDescriptor::Enumerable(_) => unreachable!(),
    };
    Ok(BuiltGroup::Finite(g))
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupDescriptor::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupDescriptor::GeneralizedQuaternion(n) => write!(f, "quaternion:{n}"),
            GroupDescriptor::ElementaryAbelian { p, k } => write!(f, "elemabelian:{p},{k}"),
            GroupDescriptor::DirectProduct(a, b) => write!(f, "product:{a}x{b}"),
            GroupDescriptor::Symmetric(n) => write!(f, "sym:{n}"),
            GroupDescriptor::Enumerable(g) => write!(f, "{g}"),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let s = s.trim();
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("expected a number in `{s}`")))
        };
        let enumerable = match s {
            "z" => Some(EnumerableGroup::Integers),
            "z2" => Some(EnumerableGroup::IntegerLattice),
            "free:2" => Some(EnumerableGroup::FreeGroup2),
            "dinf" => Some(EnumerableGroup::InfiniteDihedral),
            "eab2inf" => Some(EnumerableGroup::ElementaryAbelian2),
            _ => None,
        };
        if let Some(g) = enumerable {
            return Ok(GroupDescriptor::Enumerable(g));
        }
        let (tag, rest) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("unknown group `{s}`")))?;
        match tag {
            "cyclic" => Ok(GroupDescriptor::Cyclic(num(rest)?)),
            "dihedral" => Ok(GroupDescriptor::Dihedral(num(rest)?)),
            "quaternion" => Ok(GroupDescriptor::GeneralizedQuaternion(num(rest)?)),
            "sym" => Ok(GroupDescriptor::Symmetric(num(rest)?)),
            "pruefer" => Ok(GroupDescriptor::Enumerable(EnumerableGroup::Pruefer(num(rest)? as u32))),
            "elemabelian" => {
                let (p, k) = rest
                    .split_once(',')
                    .ok_or_else(|| invalid(format!("expected elemabelian:P,K, got `{s}`")))?;
                Ok(GroupDescriptor::ElementaryAbelian { p: num(p)?, k: num(k)? as u32 })
            }
            "product" => {
                // Try each `x` as the split point; the first that parses on
                // both sides wins, so nested products associate to the left.
                for (i, _) in rest.match_indices('x') {
                    let (l, r) = (&rest[..i], &rest[i + 1..]);
                    if let (Ok(a), Ok(b)) = (l.parse::<GroupDescriptor>(), r.parse::<GroupDescriptor>()) {
                        if a.is_finite() && b.is_finite() {
                            return Ok(GroupDescriptor::DirectProduct(Box::new(a), Box::new(b)));
                        }
                    }
                }
                Err(invalid(format!("expected product:<g1>x<g2> of finite groups, got `{s}`")))
            }
            _ => Err(invalid(format!("unknown group `{s}`"))),
        }
    }
}

/// Built-in finite groups of order at most `max_order`, one descriptor per
/// construction (isomorphic duplicates are kept; e.g. `sym:3` and
/// `dihedral:3`).
pub fn finite_catalog(max_order: usize) -> Vec<GroupDescriptor> {
    use GroupDescriptor::*;
    let mut out = Vec::new();
    let small = |d: &GroupDescriptor| d.finite_order().is_some_and(|n| n <= max_order);
    for n in 1..=max_order.min(MAX_FINITE_ORDER) {
        out.push(Cyclic(n));
    }
    for n in 2..=max_order / 2 {
        out.push(Dihedral(n));
    }
    for n in (8..=max_order).step_by(4) {
        out.push(GeneralizedQuaternion(n));
    }
    for p in [2usize, 3, 5, 7] {
        for k in 2..=12u32 {
            let d = ElementaryAbelian { p, k };
            if small(&d) {
                out.push(d);
            }
        }
    }
    for n in 3..=5 {
        let d = Symmetric(n);
        if small(&d) {
            out.push(d);
        }
    }
    // Abelian and mixed products that are not already cyclic or elementary.
    let factors: Vec<GroupDescriptor> = [Cyclic(2), Cyclic(3), Cyclic(4), Cyclic(6), Dihedral(3), Dihedral(4), GeneralizedQuaternion(8)]
        .into_iter()
        .collect();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            let coprime_cyclic = matches!((a, b), (Cyclic(x), Cyclic(y)) if gcd(*x, *y) == 1);
            let elementary = matches!((a, b), (Cyclic(2), Cyclic(2)) | (Cyclic(3), Cyclic(3)));
            let d = DirectProduct(Box::new(a.clone()), Box::new(b.clone()));
            if !coprime_cyclic && !elementary && small(&d) {
                out.push(d);
            }
        }
    }
    for d in [
        DirectProduct(Box::new(Cyclic(2)), Box::new(ElementaryAbelian { p: 2, k: 2 })),
        DirectProduct(Box::new(Cyclic(4)), Box::new(ElementaryAbelian { p: 2, k: 2 })),
        DirectProduct(Box::new(Cyclic(3)), Box::new(GeneralizedQuaternion(8))),
    ] {
        if small(&d) && !out.contains(&d) {
            out.push(d);
        }
    }
    out.sort_by_key(|d| d.finite_order());
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl BuiltGroup {
    pub fn describe(&self) -> String {
        match self {
            BuiltGroup::Finite(g) => format!("finite group of order {}", g.order()),
            BuiltGroup::Enumerable(g) => g.to_string(),
        }
    }
}
