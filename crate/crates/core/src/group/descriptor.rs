use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{FiniteGroup, MAX_ORDER};
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// A named group construction.
///
/// Grammar: `Z<k>`, `D<2k>`, `Q<4k>` (`k >= 2`), `E<p>^<k>`, `S<k>` (`k <= 6`),
/// `x`-joined products, or `file:<path>` for a Cayley table. Dihedral and
/// quaternion groups are named by their order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    ElementaryAbelian { p: usize, rank: usize },
    Symmetric(usize),
    Product(Vec<GroupDescriptor>),
    File(PathBuf),
}

impl GroupDescriptor {
    pub fn build(&self) -> Result<FiniteGroup> {
        let group = match self {
            GroupDescriptor::Cyclic(k) => cyclic(*k),
            GroupDescriptor::Dihedral(order) => dihedral(order / 2),
            GroupDescriptor::Quaternion(order) => quaternion(order / 4),
            GroupDescriptor::ElementaryAbelian { p, rank } => {
                let base = cyclic(*p);
                let mut g = base.clone();
                for _ in 1..*rank {
                    g = g.direct_product(&base)?;
                }
                g
            }
            GroupDescriptor::Symmetric(k) => symmetric(*k),
            GroupDescriptor::Product(factors) => {
                let mut iter = factors.iter();
                let mut g = iter.next().expect("product has factors").build()?;
                for f in iter {
                    g = g.direct_product(&f.build()?)?;
                }
                g
            }
            GroupDescriptor::File(path) => return FiniteGroup::from_cayley_file(path),
        };
        Ok(group.with_name(self.to_string()))
    }

    /// Order of the group without building it (`None` for files).
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupDescriptor::Cyclic(k)
            | GroupDescriptor::Dihedral(k)
            | GroupDescriptor::Quaternion(k) => Some(*k),
            GroupDescriptor::ElementaryAbelian { p, rank } => Some(p.pow(*rank as u32)),
            GroupDescriptor::Symmetric(k) => Some((1..=*k).product()),
            GroupDescriptor::Product(fs) => fs.iter().map(|f| f.order()).product(),
            GroupDescriptor::File(_) => None,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(k) => write!(f, "Z{k}"),
            GroupDescriptor::Dihedral(k) => write!(f, "D{k}"),
            GroupDescriptor::Quaternion(k) => write!(f, "Q{k}"),
            GroupDescriptor::ElementaryAbelian { p, rank } => write!(f, "E{p}^{rank}"),
            GroupDescriptor::Symmetric(k) => write!(f, "S{k}"),
            GroupDescriptor::Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupDescriptor::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(invalid(s, "empty file path"));
            }
            return Ok(GroupDescriptor::File(PathBuf::from(path)));
        }
        let factors = s
            .split('x')
            .map(|part| parse_atom(s, part))
            .collect::<Result<Vec<_>>>()?;
        let desc = if factors.len() == 1 {
            factors.into_iter().next().unwrap()
        } else {
            GroupDescriptor::Product(factors)
        };
        match desc.order() {
            Some(order) if order <= MAX_ORDER => Ok(desc),
            _ => Err(invalid(
                s,
                &format!("group order exceeds the supported maximum {MAX_ORDER}"),
            )),
        }
    }
}

fn invalid(descriptor: &str, reason: &str) -> Error {
    Error::InvalidDescriptor {
        descriptor: descriptor.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_atom(whole: &str, part: &str) -> Result<GroupDescriptor> {
    let mut chars = part.chars();
    let kind = chars.next().ok_or_else(|| invalid(whole, "empty factor"))?;
    let rest = chars.as_str();
    let number = |text: &str| -> Result<usize> {
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid(
                whole,
                &format!("`{part}` needs a positive integer"),
            ));
        }
        let v: usize = text
            .parse()
            .map_err(|_| invalid(whole, &format!("`{text}` is too large")))?;
        if v == 0 || v > MAX_ORDER {
            return Err(invalid(whole, &format!("`{part}` is out of range")));
        }
        Ok(v)
    };
    match kind {
        'Z' => Ok(GroupDescriptor::Cyclic(number(rest)?)),
        'D' => {
            let order = number(rest)?;
            if order % 2 != 0 {
                return Err(invalid(whole, "dihedral order must be even"));
            }
            Ok(GroupDescriptor::Dihedral(order))
        }
        'Q' => {
            let order = number(rest)?;
            if order % 4 != 0 || order < 8 {
                return Err(invalid(
                    whole,
                    "quaternion order must be a multiple of 4 and at least 8",
                ));
            }
            Ok(GroupDescriptor::Quaternion(order))
        }
        'E' => {
            let (p, k) = rest
                .split_once('^')
                .ok_or_else(|| invalid(whole, "elementary abelian groups are written E<p>^<k>"))?;
            let (p, rank) = (number(p)?, number(k)?);
            if !is_prime(p as u64) {
                return Err(invalid(whole, &format!("{p} is not prime")));
            }
            if (p as f64).powi(rank as i32) > MAX_ORDER as f64 {
                return Err(invalid(whole, "group is too large"));
            }
            Ok(GroupDescriptor::ElementaryAbelian { p, rank })
        }
        'S' => {
            let k = number(rest)?;
            if k > 6 {
                return Err(invalid(whole, "symmetric groups are limited to S6"));
            }
            Ok(GroupDescriptor::Symmetric(k))
        }
        _ => Err(invalid(whole, &format!("unknown group family `{kind}`"))),
    }
}

pub(crate) fn cyclic(k: usize) -> FiniteGroup {
    let mut table = vec![0u32; k * k];
    for a in 0..k {
        for b in 0..k {
            table[a * k + b] = ((a + b) % k) as u32;
        }
    }
    FiniteGroup::from_trusted(format!("Z{k}"), k, table)
}

/// `r^a s^b` is stored at index `b*k + a`, with `s r s = r^-1`.
pub(crate) fn dihedral(k: usize) -> FiniteGroup {
    let n = 2 * k;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (b1, a1) = (x / k, x % k);
        for y in 0..n {
            let (b2, a2) = (y / k, y % k);
            let a = if b1 == 0 { a1 + a2 } else { a1 + k - a2 } % k;
            let b = (b1 + b2) % 2;
            table[x * n + y] = (b * k + a) as u32;
        }
    }
    FiniteGroup::from_trusted(format!("D{n}"), n, table)
}

/// `Q_{4m} = <x, y | x^m = y^2, x^{2m} = y^4 = e, y^-1 x y = x^-1>`, with
/// `x^i y^b` stored at index `b*2m + i`.
pub(crate) fn quaternion(m: usize) -> FiniteGroup {
    let half = 2 * m;
    let n = 4 * m;
    let mut table = vec![0u32; n * n];
    for u in 0..n {
        let (b1, i1) = (u / half, u % half);
        for v in 0..n {
            let (b2, i2) = (v / half, v % half);
            let (i, b) = match (b1, b2) {
                (0, _) => ((i1 + i2) % half, b2),
                // y x^i2 = x^-i2 y
                (_, 0) => ((i1 + half - i2) % half, 1),
                // x^i1 y x^i2 y = x^(i1 - i2) y^2 = x^(i1 - i2 + m)
                _ => ((i1 + half - i2 + m) % half, 0),
            };
            table[u * n + v] = (b * half + i) as u32;
        }
    }
    FiniteGroup::from_trusted(format!("Q{n}"), n, table)
}

/// Permutations of `0..k` in lexicographic order (identity first), composed
/// right to left.
pub(crate) fn symmetric(k: usize) -> FiniteGroup {
    let perms = permutations(k);
    let n = perms.len();
    let index: std::collections::HashMap<&[u8], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut table = vec![0u32; n * n];
    let mut buf = vec![0u8; k];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            for (slot, &qx) in buf.iter_mut().zip(q) {
                *slot = p[qx as usize];
            }
            table[a * n + b] = index[buf.as_slice()] as u32;
        }
    }
    FiniteGroup::from_trusted(format!("S{k}"), n, table)
}

fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..k as u8).collect();
    let mut out = vec![current.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}
