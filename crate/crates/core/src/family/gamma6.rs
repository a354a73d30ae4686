use super::{radix6, ArithmeticSeed};
use crate::error::{checked_add, checked_mul, Error, Result};

/// Conjectured multiplier `ν(n)` for the Apéry set of Γ₆.
pub fn nu(n: u64) -> u64 {
    let g = radix6(n);
    let base = 2 * g.t1 + 3 * g.s1 + 4 * g.s2 + 5 * g.s3 + 6 * g.s4;
    if !g.in_s {
        base
    } else if !g.in_s20 {
        base - 1
    } else {
        base - 3
    }
}

/// `{ν(n)·a + n·d : 1 ≤ n < a} ∪ {0}`, listed as `0` followed by the value
/// for each `n` in increasing order.
pub fn apery_gamma6_conjectured(seed: &ArithmeticSeed) -> Result<Vec<u64>> {
    if seed.m() != 6 {
        return Err(Error::UnsupportedDimension {
            m: seed.m(),
            required: 6,
        });
    }
    std::iter::once(Ok(0))
        .chain((1..seed.a()).map(|n| {
            checked_add(
                checked_mul(nu(n), seed.a(), "nu")?,
                checked_mul(n, seed.d(), "nu")?,
                "nu",
            )
        }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::partial_sum_generators;
    use crate::oracle::membership;

    #[test]
    fn nu_examples() {
        assert_eq!(nu(1), 2);
        assert_eq!(nu(12), 8);
        assert_eq!(nu(20), 10);
    }

    #[test]
    fn nu_values_are_representable() {
        // 8a + 12d and 10a + 20d must lie in Γ₆ whenever the seed is valid.
        for (a, d) in [(16, 1), (17, 3), (23, 2), (31, 4)] {
            let seed = ArithmeticSeed::new(a, d, 6).unwrap();
            let g = partial_sum_generators(&seed).unwrap();
            assert!(membership(8 * a + 12 * d, &g));
            assert_eq!(10 * a + 20 * d, 2 * seed.partial_sum(5).unwrap());
        }
    }

    #[test]
    fn conjectured_set_shape() {
        let seed = ArithmeticSeed::new(16, 1, 6).unwrap();
        let set = apery_gamma6_conjectured(&seed).unwrap();
        assert_eq!(set.len(), 16);
        assert_eq!(set[0], 0);
        assert_eq!(set[1], 2 * 16 + 1);
        assert!(apery_gamma6_conjectured(&ArithmeticSeed::gamma5(16, 1).unwrap()).is_err());
    }
}
