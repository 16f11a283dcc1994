//! The built-in list of groups used for cross-validation.

use crate::arith::is_prime;
use crate::group::GroupDescriptor;

/// Direct products included beyond the infinite families.
pub const PRODUCTS: &[&str] = &[
    "Z2xZ4",
    "Z2xZ6",
    "Z2xZ8",
    "Z4xZ4",
    "Z2xZ2xZ4",
    "Z2xS3",
    "Z2xZ10",
    "Z3xS3",
    "Z3xZ6",
    "Z2xZ12",
    "Z2xZ2xZ6",
    "Z4xS3",
    "Z2xD8",
    "Z2xQ8",
    "Z3xQ8",
    "Z2xD12",
    "Z2xZ14",
    "Z2xZ16",
    "Z4xZ8",
    "Z2xZ2xZ8",
    "Z2xZ4xZ4",
    "Z2xZ2xZ2xZ4",
    "Z2xQ16",
    "Z2xD16",
    "Z4xD8",
    "Z4xQ8",
    "Z2xZ2xQ8",
    "Z5xS3",
    "Z3xD10",
    "Z2xS4",
    "Z3xZ12",
    "Q8xS3",
    "Z3xS4",
    "Z2xZ2xS3",
    "Z6xZ6",
    "S3xS3",
    "Z2xS5",
    "Z5xS4",
    "Z2xZ2xZ2xS3",
    "Q8xQ8",
];

/// Every catalog group of order at most `max_order`, sorted by order then name.
///
/// Families: all `Z_n`, `D_2k` (`k >= 2`), `Q_4k` (`k >= 2`), elementary
/// abelian groups of rank at least 2, `S_3` to `S_6`, and [`PRODUCTS`].
pub fn catalog(max_order: usize) -> Vec<GroupDescriptor> {
    let mut out: Vec<GroupDescriptor> = Vec::new();
    out.extend((1..=max_order).map(GroupDescriptor::Cyclic));
    out.extend((4..=max_order).step_by(2).map(GroupDescriptor::Dihedral));
    out.extend((8..=max_order).step_by(4).map(GroupDescriptor::Quaternion));
    for p in (2..=max_order).filter(|&p| is_prime(p as u64)) {
        let mut rank = 2;
        while p.checked_pow(rank as u32).is_some_and(|o| o <= max_order) {
            out.push(GroupDescriptor::ElementaryAbelian { p, rank });
            rank += 1;
        }
    }
    out.extend((3..=6).map(GroupDescriptor::Symmetric));
    out.extend(
        PRODUCTS
            .iter()
            .map(|s| s.parse::<GroupDescriptor>().expect("catalog descriptor")),
    );
    out.retain(|d| d.order().is_some_and(|o| o <= max_order));
    out.sort_by_key(|d| (d.order(), d.to_string()));
    out
}
