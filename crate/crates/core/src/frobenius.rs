//! Closed-form pseudo-Frobenius numbers, type and Frobenius number of Γ₅.
//!
//! Every value is `ω(n) = φ(n) - a` for a short list of indices `n` that
//! depends only on `a` (and, for the Frobenius number when `a ∈ {11, 12, 17}`,
//! on how `d` compares with `a`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{partial_sum_generators, phi_values, ArithmeticSeed};
use crate::oracle::{frobenius_oracle, pseudo_frobenius_oracle};

/// First `a` handled by the residue tables rather than the per-`a` list.
pub const LARGE_A_MIN: u64 = 20;

/// For `a = 10q + r ≥ 20`, `PF(Γ₅)` is `{ω(a - i) : i ∈ T_r} ∪ {ω(5), ω(8)}`.
///
/// `T_3` has no `7`: `φ(a - 6) - φ(a - 7) = 2a + d = s₂`, so `ω(a - 7)` is
/// not maximal.
pub const RESIDUE_INDEX_SETS: [&[u64]; 10] = [
    &[1, 2, 3, 5, 6],
    &[1, 2, 3, 4, 6, 7],
    &[1, 3, 4, 5, 7, 8],
    &[1, 2, 4, 5, 6, 8, 9],
    &[1, 2, 3, 5, 6, 7, 9, 10],
    &[1, 3, 6, 7, 8, 10],
    &[1, 2, 8, 9],
    &[1, 2, 3, 9, 10],
    &[1, 3, 4, 10],
    &[1, 2, 4, 5],
];

/// Indices `n` with `ω(n) ∈ PF(Γ₅)` for `11 ≤ a ≤ 19`.
fn small_a_indices(a: u64) -> &'static [u64] {
    match a {
        11 => &[9, 10, 5, 8],
        12 => &[9, 11, 5, 8],
        13 => &[9, 11, 12, 5, 8],
        14 => &[9, 11, 12, 13, 5, 8],
        15 => &[9, 12, 14, 5, 8],
        16 => &[14, 15, 5, 8],
        17 => &[14, 15, 16, 5, 8],
        18 => &[14, 15, 17, 5, 8],
        19 => &[14, 15, 17, 18, 5, 8],
        _ => unreachable!("small-a list covers 11..=19 only"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PfSource {
    LargeA,
    SmallA,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PfResult {
    /// Sorted ascending.
    pub pf: Vec<i64>,
    pub frobenius: i64,
    pub type_count: usize,
    pub source_path: PfSource,
    /// The `n` with `ω(n) ∈ PF`, for the closed-form paths.
    pub indices: Vec<u64>,
}

impl PfResult {
    fn from_values(mut pf: Vec<i64>, source_path: PfSource, mut indices: Vec<u64>) -> Self {
        pf.sort_unstable();
        pf.dedup();
        indices.sort_unstable();
        let frobenius = *pf.last().expect("pseudo-Frobenius set is never empty");
        Self {
            type_count: pf.len(),
            frobenius,
            pf,
            source_path,
            indices,
        }
    }
}

fn omega(n: u64, seed: &ArithmeticSeed) -> Result<i64> {
    Ok(phi_values(n, seed)?.omega as i64)
}

/// Indices `n` selected by the closed form for this seed.
pub fn pf_indices(seed: &ArithmeticSeed) -> Result<(Vec<u64>, PfSource)> {
    seed.require_gamma5()?;
    let a = seed.a();
    if a >= LARGE_A_MIN {
        let mut idx: Vec<u64> = RESIDUE_INDEX_SETS[seed.r() as usize]
            .iter()
            .map(|i| a - i)
            .collect();
        idx.extend([5, 8]);
        Ok((idx, PfSource::LargeA))
    } else {
        Ok((small_a_indices(a).to_vec(), PfSource::SmallA))
    }
}

/// Closed-form pseudo-Frobenius set of Γ₅.
pub fn pf_gamma5(seed: &ArithmeticSeed) -> Result<PfResult> {
    let (indices, source) = pf_indices(seed)?;
    let pf = indices
        .iter()
        .map(|&n| omega(n, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(PfResult::from_values(pf, source, indices))
}

/// Brute-force pseudo-Frobenius set, in the same shape as [`pf_gamma5`].
pub fn pf_oracle(seed: &ArithmeticSeed) -> Result<PfResult> {
    let gens = partial_sum_generators(seed)?;
    Ok(PfResult::from_values(
        pseudo_frobenius_oracle(&gens),
        PfSource::Oracle,
        Vec::new(),
    ))
}

/// Index `n` with `F(Γ₅) = ω(n)`.
pub fn frobenius_index(seed: &ArithmeticSeed) -> Result<u64> {
    seed.require_gamma5()?;
    let (a, d) = (seed.a(), seed.d());
    let boundary = || Error::CaseBoundary { a, d };
    let n = match a {
        11 => {
            if a > d {
                8
            } else if 2 * a > d && a < d {
                9
            } else if 2 * a < d {
                10
            } else {
                return Err(boundary());
            }
        }
        12 => {
            if a > 3 * d {
                8
            } else if a < 3 * d {
                11
            } else {
                return Err(boundary());
            }
        }
        13 => 12,
        14 => 13,
        15 => 14,
        16 => 15,
        17 => {
            if 2 * a > d {
                15
            } else if 2 * a < d {
                16
            } else {
                return Err(boundary());
            }
        }
        18 => 17,
        19 => 18,
        // ω(a - 2) - ω(a - 1) = 2a - d for these residues
        _ if matches!(seed.r(), 1 | 7) => {
            if d < 2 * a {
                a - 2
            } else if d > 2 * a {
                a - 1
            } else {
                return Err(boundary());
            }
        }
        _ => a - 1,
    };
    Ok(n)
}

/// Closed-form Frobenius number of Γ₅.
pub fn frobenius_gamma5(seed: &ArithmeticSeed) -> Result<i64> {
    omega(frobenius_index(seed)?, seed)
}

/// Brute-force Frobenius number of Γ_m for the seed.
pub fn frobenius_via_oracle(seed: &ArithmeticSeed) -> Result<i64> {
    Ok(frobenius_oracle(&partial_sum_generators(seed)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seed(a: u64, d: u64) -> ArithmeticSeed {
        ArithmeticSeed::gamma5(a, d).unwrap()
    }

    #[test]
    fn worked_example() {
        let s = seed(11, 2);
        let pf = pf_gamma5(&s).unwrap();
        assert_eq!(pf.pf, vec![64, 76, 84, 93]);
        assert_eq!(pf.type_count, 4);
        assert_eq!(pf.frobenius, 93);
        assert_eq!(pf.source_path, PfSource::SmallA);
        assert_eq!(frobenius_gamma5(&s).unwrap(), 93);
        assert_eq!(pf_oracle(&s).unwrap().pf, pf.pf);
    }

    #[test]
    fn residue_three_table() {
        let s = seed(23, 1);
        let pf = pf_gamma5(&s).unwrap();
        assert_eq!(pf.type_count, 9);
        assert_eq!(pf.source_path, PfSource::LargeA);
        assert_eq!(pf.indices, vec![5, 8, 14, 15, 17, 18, 19, 21, 22]);
        assert_eq!(pf.pf, pf_oracle(&s).unwrap().pf);
        assert_eq!(frobenius_gamma5(&s).unwrap(), 298);
        assert_eq!(frobenius_via_oracle(&s).unwrap(), 298);
    }

    #[test]
    fn printed_residue_three_list_has_a_non_maximal_entry() {
        // the printed T_3 also lists i = 7
        for (a, d) in [(23, 1), (33, 4), (53, 7)] {
            let s = seed(a, d);
            let below = phi_values(a - 7, &s).unwrap().phi;
            let above = phi_values(a - 6, &s).unwrap().phi;
            assert_eq!(above - below, 2 * a + d);
            let w = below as i64 - a as i64;
            assert!(!pf_oracle(&s).unwrap().pf.contains(&w));
        }
    }

    #[test]
    fn residues_one_and_seven_frobenius() {
        for (a, d, n) in [
            (21, 1, 19),
            (27, 5, 25),
            (41, 3, 39),
            (21, 43, 20),
            (27, 55, 26),
        ] {
            let s = seed(a, d);
            assert_eq!(frobenius_index(&s).unwrap(), n, "({a}, {d})");
            assert_eq!(
                frobenius_gamma5(&s).unwrap(),
                frobenius_via_oracle(&s).unwrap()
            );
            assert_eq!(
                frobenius_gamma5(&s).unwrap(),
                pf_gamma5(&s).unwrap().frobenius
            );
        }
    }

    #[test]
    fn residue_six_type() {
        assert_eq!(pf_gamma5(&seed(26, 1)).unwrap().type_count, 6);
    }

    #[test]
    fn seventeen_with_large_d() {
        let s = seed(17, 35);
        assert_eq!(frobenius_index(&s).unwrap(), 16);
        assert_eq!(frobenius_gamma5(&s).unwrap(), 696);
        assert_eq!(frobenius_via_oracle(&s).unwrap(), 696);
    }

    #[test]
    fn eleven_branches() {
        assert_eq!(frobenius_index(&seed(11, 2)).unwrap(), 8);
        assert_eq!(frobenius_index(&seed(11, 13)).unwrap(), 9);
        assert_eq!(frobenius_index(&seed(11, 23)).unwrap(), 10);
        assert_eq!(frobenius_index(&seed(12, 1)).unwrap(), 8);
        assert_eq!(frobenius_index(&seed(12, 5)).unwrap(), 11);
    }

    #[test]
    fn below_threshold() {
        assert_eq!(
            pf_gamma5(&seed(10, 3)),
            Err(Error::BelowMinimalityThreshold { a: 10 })
        );
        assert!(frobenius_gamma5(&seed(7, 2)).is_err());
    }

    #[test]
    fn large_a_type_is_table_size_plus_two() {
        for a in 20..=60 {
            let s = seed(a, 1);
            assert_eq!(
                pf_gamma5(&s).unwrap().type_count,
                RESIDUE_INDEX_SETS[(a % 10) as usize].len() + 2
            );
        }
    }
}
