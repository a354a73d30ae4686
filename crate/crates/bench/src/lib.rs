//! Seed grids shared by the benchmarks.

use apsum_core::ArithmeticSeed;

/// Coprime Γ₅ seeds with `a` in `a` and `d` in `d`, in grid order.
pub fn seeds(
    a: std::ops::RangeInclusive<u64>,
    d: std::ops::RangeInclusive<u64>,
) -> Vec<ArithmeticSeed> {
    a.flat_map(|a| d.clone().map(move |d| (a, d)))
        .filter_map(|(a, d)| ArithmeticSeed::gamma5(a, d).ok())
        .collect()
}

/// One seed per residue of `a` mod 10, at roughly the given size.
pub fn one_per_residue(near: u64, d: u64) -> Vec<ArithmeticSeed> {
    (near..near + 10)
        .filter_map(|a| ArithmeticSeed::gamma5(a, d).ok())
        .collect()
}
