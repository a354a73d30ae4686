//! The semigroups Γ_m generated by partial sums of an arithmetic progression,
//! and the closed forms for the Apéry set of Γ₅.

mod digits;
mod gamma6;
mod uniqueness;

pub use digits::{radix5, radix6, RadixDigits5, RadixDigits6};
pub use gamma6::{apery_gamma6_conjectured, nu};
pub use uniqueness::{uniqueness_check, ElementExpansions, UniquenessReport};

use serde::{Deserialize, Serialize};

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::oracle::{gcd, is_minimally_generated, GeneratorList};

/// Smallest `a` for which `s₁, …, s₅` minimally generate Γ₅.
pub const GAMMA5_MIN_A: u64 = 11;

/// The data `(a, d, m)` defining `Γ_m = ⟨s₁, …, s_m⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArithmeticSeed {
    a: u64,
    d: u64,
    m: usize,
}

impl ArithmeticSeed {
    pub fn new(a: u64, d: u64, m: usize) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidSeed(format!("a must be at least 2, got {a}")));
        }
        if d == 0 {
            return Err(Error::InvalidSeed("d must be positive".into()));
        }
        if m < 2 {
            return Err(Error::InvalidSeed(format!(
                "embedding dimension must be at least 2, got {m}"
            )));
        }
        let g = gcd(a, d);
        if g != 1 {
            return Err(Error::NotCoprime { a, d, gcd: g });
        }
        Ok(Self { a, d, m })
    }

    /// Shorthand for the embedding-dimension-5 seed.
    pub fn gamma5(a: u64, d: u64) -> Result<Self> {
        Self::new(a, d, 5)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `⌊a/10⌋`
    pub fn q(&self) -> u64 {
        self.a / 10
    }

    /// `a mod 10`
    pub fn r(&self) -> u64 {
        self.a % 10
    }

    /// `s_n = n·a + n(n-1)/2·d`
    pub fn partial_sum(&self, n: u64) -> Result<u64> {
        let tri = checked_mul(n, n.saturating_sub(1), "partial sum")? / 2;
        checked_add(
            checked_mul(n, self.a, "partial sum")?,
            checked_mul(tri, self.d, "partial sum")?,
            "partial sum",
        )
    }

    pub(crate) fn require_gamma5(&self) -> Result<()> {
        if self.m != 5 {
            return Err(Error::UnsupportedDimension {
                m: self.m,
                required: 5,
            });
        }
        if self.a < GAMMA5_MIN_A {
            return Err(Error::BelowMinimalityThreshold { a: self.a });
        }
        Ok(())
    }
}

impl std::fmt::Display for ArithmeticSeed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(a={}, d={}, m={})", self.a, self.d, self.m)
    }
}

/// `[s₁, …, s_m]`.
pub fn partial_sum_generators(seed: &ArithmeticSeed) -> Result<GeneratorList> {
    let gens = (1..=seed.m as u64)
        .map(|n| seed.partial_sum(n))
        .collect::<Result<Vec<_>>>()?;
    GeneratorList::new(gens)
}

/// Whether `s₁, …, s_m` is a minimal generating set.
///
/// For `m = 5` this is the closed form `a ≥ 11`; otherwise it falls back to
/// [`minimality_oracle`].
pub fn minimality_check(seed: &ArithmeticSeed) -> Result<bool> {
    if seed.m == 5 {
        Ok(seed.a >= GAMMA5_MIN_A)
    } else {
        minimality_oracle(seed)
    }
}

/// Brute-force minimality: no generator lies in the semigroup of the others.
pub fn minimality_oracle(seed: &ArithmeticSeed) -> Result<bool> {
    Ok(is_minimally_generated(&partial_sum_generators(seed)?))
}

/// `μ(n)`, `φ(n) = μ(n)·a + n·d` and `ω(n) = φ(n) - a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiValues {
    pub mu: u64,
    pub phi: u64,
    pub omega: u64,
}

pub fn mu(n: u64) -> u64 {
    let g = radix5(n);
    let base = 2 * g.r1 + 3 * g.q1 + 4 * g.q2 + 5 * g.q3;
    if g.needs_rewrite() {
        base - 1
    } else {
        base
    }
}

pub fn phi_values(n: u64, seed: &ArithmeticSeed) -> Result<PhiValues> {
    let max = seed.a - 1;
    if n == 0 || n > max {
        return Err(Error::ResidueOutOfRange { n, max });
    }
    let mu = mu(n);
    let phi = checked_add(
        checked_mul(mu, seed.a, "phi")?,
        checked_mul(n, seed.d, "phi")?,
        "phi",
    )?;
    Ok(PhiValues {
        mu,
        phi,
        omega: phi - seed.a,
    })
}

/// One nonzero Apéry class of Γ₅ together with its unique factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyRecord {
    pub n: u64,
    pub digits: RadixDigits5,
    pub mu: u64,
    pub phi: u64,
    pub omega: u64,
    pub order: u64,
    /// Coefficients `(c₂, c₃, c₄, c₅)` on `(s₂, s₃, s₄, s₅)`.
    pub expansion: [u64; 4],
}

fn canonical_expansion(g: &RadixDigits5) -> [u64; 4] {
    if g.needs_rewrite() {
        // 2·s₂ + s₅ = 2·s₄ + a, which is where μ loses its extra 1.
        [0, g.q1, g.q2 + 2, g.q3 - 1]
    } else {
        [g.r1, g.q1, g.q2, g.q3]
    }
}

/// Closed-form Apéry set of Γ₅ with respect to `a`, one record per
/// `n = 1, …, a-1` (the zero class is implicit).
pub fn apery_gamma5(seed: &ArithmeticSeed) -> Result<Vec<AperyRecord>> {
    seed.require_gamma5()?;
    (1..seed.a)
        .map(|n| {
            let v = phi_values(n, seed)?;
            let digits = radix5(n);
            let expansion = canonical_expansion(&digits);
            Ok(AperyRecord {
                n,
                digits,
                mu: v.mu,
                phi: v.phi,
                omega: v.omega,
                order: expansion.iter().sum(),
                expansion,
            })
        })
        .collect()
}

/// The closed-form Apéry set indexed by residue modulo `a`, the layout
/// returned by [`crate::oracle::apery_oracle`].
pub fn apery_gamma5_by_residue(seed: &ArithmeticSeed) -> Result<Vec<u64>> {
    let records = apery_gamma5(seed)?;
    let mut out = vec![0; seed.a as usize];
    for r in &records {
        out[(r.phi % seed.a) as usize] = r.phi;
    }
    Ok(out)
}

/// Nonzero integer vectors `(c₁, c₂, c₃, c₄)` with `c₁ + 3c₂ + 6c₃ = 10c₄`
/// and `4c₁ + 3c₂ + 5c₄ ≤ 0`, for `c₁ ∈ [-2, 20]`, `c₂ ∈ [-1, 20]`,
/// `c₄ ∈ [0, 6]`; `c₃` is whatever the linear equation forces.
///
/// The only one is `(-2, 0, 2, 1)`, which is what makes the Apéry
/// expansions of Γ₅ unique.
pub fn balanced_relations() -> Vec<[i64; 4]> {
    let mut out = Vec::new();
    for c1 in -2i64..=20 {
        for c2 in -1i64..=20 {
            for c4 in 0i64..=6 {
                let rest = 10 * c4 - c1 - 3 * c2;
                if rest % 6 != 0 {
                    continue;
                }
                let v = [c1, c2, rest / 6, c4];
                if v != [0; 4] && 4 * c1 + 3 * c2 + 5 * c4 <= 0 {
                    out.push(v);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{apery_oracle, membership, order_oracle};

    #[test]
    fn one_balanced_relation() {
        assert_eq!(balanced_relations(), vec![[-2, 0, 2, 1]]);
    }

    #[test]
    fn generators() {
        let g = partial_sum_generators(&ArithmeticSeed::gamma5(11, 2).unwrap()).unwrap();
        assert_eq!(g.as_slice(), &[11, 24, 39, 56, 75]);
        let g = partial_sum_generators(&ArithmeticSeed::gamma5(7, 1).unwrap()).unwrap();
        assert_eq!(g.as_slice(), &[7, 15, 24, 34, 45]);
        assert_eq!(
            ArithmeticSeed::gamma5(12, 2),
            Err(Error::NotCoprime {
                a: 12,
                d: 2,
                gcd: 2
            })
        );
    }

    #[test]
    fn seed_validation() {
        assert!(ArithmeticSeed::new(1, 1, 5).is_err());
        assert!(ArithmeticSeed::new(5, 0, 5).is_err());
        assert!(ArithmeticSeed::new(5, 1, 1).is_err());
        assert!(ArithmeticSeed::new(5, 1, 2).is_ok());
    }

    #[test]
    fn minimality_threshold() {
        for d in 1..=30 {
            if let Ok(seed) = ArithmeticSeed::gamma5(11, d) {
                assert!(minimality_check(&seed).unwrap());
            }
        }
        let seed = ArithmeticSeed::gamma5(10, 3).unwrap();
        assert!(!minimality_check(&seed).unwrap());
        assert!(!minimality_oracle(&seed).unwrap());
        let g = partial_sum_generators(&seed).unwrap();
        let first_four = GeneratorList::new(g.as_slice()[..4].to_vec()).unwrap();
        assert!(membership(80, &first_four));
    }

    #[test]
    fn closed_form_minimality_agrees_with_oracle() {
        for a in 2..=40 {
            for d in 1..=12 {
                let Ok(seed) = ArithmeticSeed::gamma5(a, d) else {
                    continue;
                };
                assert_eq!(
                    minimality_check(&seed).unwrap(),
                    minimality_oracle(&seed).unwrap(),
                    "{seed}"
                );
            }
        }
    }

    #[test]
    fn phi_examples() {
        let s = ArithmeticSeed::gamma5(11, 2).unwrap();
        assert_eq!(
            phi_values(8, &s).unwrap(),
            PhiValues {
                mu: 8,
                phi: 104,
                omega: 93
            }
        );
        assert_eq!(
            phi_values(10, &s).unwrap(),
            PhiValues {
                mu: 5,
                phi: 75,
                omega: 64
            }
        );
        let s = ArithmeticSeed::gamma5(23, 1).unwrap();
        assert_eq!(
            phi_values(22, &s).unwrap(),
            PhiValues {
                mu: 13,
                phi: 321,
                omega: 298
            }
        );
        assert_eq!(
            phi_values(0, &s),
            Err(Error::ResidueOutOfRange { n: 0, max: 22 })
        );
        assert!(phi_values(23, &s).is_err());
    }

    #[test]
    fn worked_example_apery_set() {
        let s = ArithmeticSeed::gamma5(11, 2).unwrap();
        let phis: Vec<u64> = apery_gamma5(&s).unwrap().iter().map(|r| r.phi).collect();
        assert_eq!(phis, vec![24, 48, 39, 63, 87, 56, 80, 104, 95, 75]);
    }

    #[test]
    fn expansions() {
        let s = ArithmeticSeed::gamma5(11, 2).unwrap();
        let rec = &apery_gamma5(&s).unwrap()[7];
        assert_eq!(rec.n, 8);
        assert_eq!(rec.expansion, [2, 0, 1, 0]);
        assert_eq!(rec.order, 3);

        let s = ArithmeticSeed::gamma5(23, 1).unwrap();
        let rec = &apery_gamma5(&s).unwrap()[11];
        assert_eq!(rec.n, 12);
        assert_eq!(rec.expansion, [0, 0, 2, 0]);
        assert_eq!(rec.phi, 196);
        assert_eq!(rec.order, 2);
    }

    #[test]
    fn gating() {
        let s = ArithmeticSeed::gamma5(10, 3).unwrap();
        assert_eq!(
            apery_gamma5(&s),
            Err(Error::BelowMinimalityThreshold { a: 10 })
        );
        let s = ArithmeticSeed::new(13, 1, 6).unwrap();
        assert!(matches!(
            apery_gamma5(&s),
            Err(Error::UnsupportedDimension { m: 6, .. })
        ));
    }

    #[test]
    fn records_are_consistent_with_oracles() {
        for (a, d) in [(11, 1), (11, 2), (12, 1), (19, 4), (23, 1), (37, 5)] {
            let s = ArithmeticSeed::gamma5(a, d).unwrap();
            let g = partial_sum_generators(&s).unwrap();
            let gens = g.as_slice();
            for r in apery_gamma5(&s).unwrap() {
                let sum: u64 = r.expansion.iter().zip(&gens[1..]).map(|(c, s)| c * s).sum();
                assert_eq!(sum, r.phi);
                assert_eq!(r.phi % a, (r.n * d) % a);
                assert_eq!(order_oracle(r.phi, &g).unwrap() as u64, r.order);
            }
            assert_eq!(
                apery_gamma5_by_residue(&s).unwrap(),
                apery_oracle(&g, a).unwrap()
            );
        }
    }
}
