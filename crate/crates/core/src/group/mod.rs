//! Finite groups as dense Cayley tables.
//!
//! Elements are the indices `0..n`, and the identity is always index 0. Tables
//! built from descriptors are trusted; tables read from files go through the
//! full Latin-square and associativity check.

mod descriptor;
mod lattice;
mod profile;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

pub use descriptor::GroupDescriptor;
pub use lattice::{CyclicLattice, CyclicSubgroup};
pub use profile::{ClassFlags, ElementOrderProfile};

use crate::error::{Error, Result};

/// Largest group order the crate will materialise a table for.
pub const MAX_ORDER: usize = 2048;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.n)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Parses a descriptor such as `Z6`, `Q8`, `E2^3` or `Z2xS3` and builds it.
    pub fn from_descriptor(descriptor: &str) -> Result<Self> {
        descriptor.parse::<GroupDescriptor>()?.build()
    }

    /// Builds a group from a table whose rows are already known to form a
    /// group with identity 0.
    pub(crate) fn from_trusted(name: String, n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut inverse = vec![0; n];
        for (a, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&b| table[a * n + b] == 0)
                .expect("trusted table has inverses");
        }
        FiniteGroup {
            name,
            n,
            table,
            inverse,
        }
    }

    /// Validates an arbitrary multiplication table and relabels its identity
    /// to index 0. Diagnostics use the labels as given.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Ingestion("table is empty".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::Ingestion(format!(
                "order {n} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Ingestion(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::Ingestion(format!(
                    "entry ({i},{j}) = {v} is outside 0..{n}"
                )));
            }
        }
        check_latin(rows)?;

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or_else(|| Error::Ingestion("no two-sided identity element".into()))?;

        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(Error::Ingestion(format!(
                            "not associative at triple ({a},{b},{c}): ({a}*{b})*{c} = {} but {a}*({b}*{c}) = {}",
                            rows[ab][c],
                            rows[a][rows[b][c]]
                        )));
                    }
                }
            }
        }

        // swap labels `identity` and 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        Ok(Self::from_trusted(name.into(), n, table))
    }

    /// Reads the plain-text Cayley format: the order on the first line, then
    /// `n` rows of `n` whitespace-separated entries.
    pub fn from_cayley_text(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Ingestion("missing order line".into()))?
            .parse()
            .map_err(|e| Error::Ingestion(format!("bad order: {e}")))?;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Ingestion(format!("unsupported order {n}")));
        }
        let mut rows = vec![Vec::with_capacity(n); n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..n {
                let tok = tokens.next().ok_or_else(|| {
                    Error::Ingestion(format!("table ends early at row {i}, column {j}"))
                })?;
                row.push(
                    tok.parse()
                        .map_err(|e| Error::Ingestion(format!("entry ({i},{j}) = `{tok}`: {e}")))?,
                );
            }
        }
        if tokens.next().is_some() {
            return Err(Error::Ingestion("trailing data after the table".into()));
        }
        Self::from_table(name, &rows)
    }

    pub fn from_cayley_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_cayley_text(format!("file:{}", path.display()), &text)
    }

    /// Renders the table in the plain-text Cayley format.
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = self.row(a).iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let (mut acc, mut base, mut k) = (0, a, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of `a`, by repeated multiplication.
    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Elements of `<a>` in the order `e, a, a^2, ...`.
    pub fn powers(&self, a: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = a;
        while x != 0 {
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// Number of elements of each order.
    pub fn order_counts(&self) -> BTreeMap<u64, usize> {
        let mut counts = BTreeMap::new();
        for a in self.elements() {
            *counts.entry(self.element_order(a)).or_insert(0) += 1;
        }
        counts
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let (n, m) = (self.n, other.n);
        let order = n * m;
        if order > MAX_ORDER {
            return Err(Error::InvalidDescriptor {
                descriptor: format!("{}x{}", self.name, other.name),
                reason: format!("order {order} exceeds the supported maximum {MAX_ORDER}"),
            });
        }
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            let (a1, a2) = (a / m, a % m);
            for b in 0..order {
                let (b1, b2) = (b / m, b % m);
                table[a * order + b] = (self.mul(a1, b1) * m + other.mul(a2, b2)) as u32;
            }
        }
        Ok(Self::from_trusted(
            format!("{}x{}", self.name, other.name),
            order,
            table,
        ))
    }

    pub fn profile(&self) -> ElementOrderProfile {
        ElementOrderProfile::new(self)
    }

    pub fn cyclic_lattice(&self) -> CyclicLattice {
        CyclicLattice::new(self)
    }
}

fn check_latin(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    let mut seen = vec![usize::MAX; n];
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if seen[v] == i {
                return Err(Error::Ingestion(format!(
                    "not a Latin square: row {i} repeats {v} (column {j})"
                )));
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for (i, row) in rows.iter().enumerate() {
            let v = row[j];
            if seen[v] == j {
                return Err(Error::Ingestion(format!(
                    "not a Latin square: column {j} repeats {v} (row {i})"
                )));
            }
            seen[v] = j;
        }
    }
    Ok(())
}
