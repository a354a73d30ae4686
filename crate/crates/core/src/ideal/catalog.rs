//! Explicit binomial generators of the defining ideal 𝔭₅ of Γ₅.
//!
//! Three families cover every `a ≥ 11`:
//!
//! * `a ≥ 19` (except `(21, 1)` and `(21, 2)`): the seven fixed binomials
//!   `g1..g7` plus the residue block `h_{r1}, h_{r2}, …` for `r = a mod 10`,
//!   whose exponents depend on `q = ⌊a/10⌋` and `d`.
//! * `11 ≤ a ≤ 18`: a per-`a` block `p_{k1}, …` plus a subset of `g1..g7`
//!   and, for `a ≤ 14`, one extra binomial depending on `d`.
//! * `(21, 1)`, `(21, 2)`: the residue-1 block without `h11`, plus an extra
//!   binomial. Whether `g1..g7` belong to this set is ambiguous, so both
//!   readings are constructible through [`CatalogVariant`].

use serde::{Deserialize, Serialize};

use super::monomial::ExponentVector;
use crate::error::{Error, Result};
use crate::family::{partial_sum_generators, ArithmeticSeed};

/// One generator `x^lhs - x^rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialGenerator {
    pub label: String,
    pub lhs: ExponentVector,
    pub rhs: ExponentVector,
}

impl BinomialGenerator {
    /// Same binomial up to sign.
    pub fn same_as(&self, other: &Self) -> bool {
        (self.lhs == other.lhs && self.rhs == other.rhs)
            || (self.lhs == other.rhs && self.rhs == other.lhs)
    }
}

impl std::fmt::Display for BinomialGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} - {}", self.label, self.lhs, self.rhs)
    }
}

/// How to read the `(21, d)` catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CatalogVariant {
    /// Exactly the printed set: residue-1 block minus `h11`, plus the extra.
    #[default]
    Strict,
    /// The printed set together with `g1..g7`.
    Augmented,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "family")]
pub enum CatalogKind {
    /// `g1..g7 ∪ h_r*`
    Residue { q: u64, r: u64 },
    /// `p_*` block for `11 ≤ a ≤ 18`
    SmallA { a: u64 },
    /// the `(21, d)` exception
    TwentyOne { variant: CatalogVariant },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub kind: CatalogKind,
    pub generators: Vec<BinomialGenerator>,
}

/// Weighted-degree check: `Σ eᵢ(lhs)·sᵢ = Σ eᵢ(rhs)·sᵢ` for every binomial.
pub fn homogeneity_check(bins: &[BinomialGenerator], seed: &ArithmeticSeed) -> Result<bool> {
    let gens = partial_sum_generators(seed)?;
    for b in bins {
        if b.lhs.weight(gens.as_slice())? != b.rhs.weight(gens.as_slice())? {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Builder {
    seed: ArithmeticSeed,
    weights: Vec<u64>,
    out: Vec<BinomialGenerator>,
}

impl Builder {
    fn new(seed: &ArithmeticSeed) -> Result<Self> {
        Ok(Self {
            seed: *seed,
            weights: partial_sum_generators(seed)?.as_slice().to_vec(),
            out: Vec::new(),
        })
    }

    fn invalid(&self, label: &str, reason: String) -> Error {
        Error::CatalogInvalidForSeed {
            label: label.to_string(),
            a: self.seed.a(),
            d: self.seed.d(),
            reason,
        }
    }

    fn monomial(&self, label: &str, e: [i64; 5]) -> Result<ExponentVector> {
        let mut out = [0u32; 5];
        for (i, &x) in e.iter().enumerate() {
            out[i] = u32::try_from(x)
                .map_err(|_| self.invalid(label, format!("exponent of x{} is {x}", i + 1)))?;
        }
        Ok(ExponentVector(out))
    }

    fn add(&mut self, label: &str, lhs: [i64; 5], rhs: [i64; 5]) -> Result<()> {
        let lhs = self.monomial(label, lhs)?;
        let rhs = self.monomial(label, rhs)?;
        if lhs == rhs {
            return Err(self.invalid(label, "both sides are equal".into()));
        }
        let (wl, wr) = (lhs.weight(&self.weights)?, rhs.weight(&self.weights)?);
        if wl != wr {
            return Err(self.invalid(
                label,
                format!("not weighted-homogeneous ({lhs}: {wl}, {rhs}: {wr})"),
            ));
        }
        let b = BinomialGenerator {
            label: label.to_string(),
            lhs,
            rhs,
        };
        if !self.out.iter().any(|o| o.same_as(&b)) {
            self.out.push(b);
        }
        Ok(())
    }

    fn g(&mut self, which: &[usize]) -> Result<()> {
        for &k in which {
            let (lhs, rhs) = match k {
                1 => ([0, 0, 0, 4, 0], [1, 1, 1, 0, 2]),
                2 => ([0, 0, 1, 3, 0], [3, 1, 0, 0, 2]),
                3 => ([0, 0, 2, 0, 0], [2, 0, 0, 1, 0]),
                4 => ([0, 1, 0, 2, 0], [2, 0, 1, 0, 1]),
                5 => ([0, 1, 1, 1, 0], [4, 0, 0, 0, 1]),
                6 => ([0, 3, 0, 0, 0], [3, 0, 1, 0, 0]),
                7 => ([1, 0, 0, 2, 0], [0, 2, 0, 0, 1]),
                _ => unreachable!("g1..g7"),
            };
            self.add(&format!("g{k}"), lhs, rhs)?;
        }
        Ok(())
    }

    /// The residue block `h_{r*}` for `a = 10q + r`. `skip` omits labels.
    fn h(&mut self, skip: &[&str]) -> Result<()> {
        let q = self.seed.q() as i64;
        let b = 5 * q + self.seed.d() as i64;
        let rows: Vec<(&str, [i64; 5], [i64; 5])> = match self.seed.r() {
            0 => vec![
                ("h01", [b, 0, 0, 0, 0], [0, 0, 0, 0, q]),
                ("h02", [b - 1, 2, 0, 0, 0], [0, 0, 0, 2, q - 1]),
            ],
            1 => vec![
                ("h11", [b - 13, 9, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h12", [b - 6, 5, 0, 0, 0], [0, 0, 0, 1, q]),
                ("h13", [b - 1, 2, 0, 0, 0], [0, 0, 1, 0, q]),
                ("h14", [b + 2, 0, 0, 0, 0], [0, 1, 0, 0, q]),
                ("h15", [b + 1, 1, 0, 0, 0], [0, 0, 0, 2, q - 1]),
            ],
            2 => vec![
                ("h21", [b - 11, 8, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h22", [b - 4, 4, 0, 0, 0], [0, 0, 0, 1, q]),
                ("h23", [b + 1, 1, 0, 0, 0], [0, 0, 1, 0, q]),
                ("h24", [b + 3, 0, 0, 0, 0], [0, 0, 0, 2, q - 1]),
            ],
            3 => vec![
                ("h31", [b - 9, 7, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h32", [b - 2, 3, 0, 0, 0], [0, 0, 0, 1, q]),
                ("h33", [b + 3, 0, 0, 0, 0], [0, 0, 1, 0, q]),
                ("h34", [b - 3, 5, 0, 0, 0], [0, 0, 0, 3, q - 1]),
                ("h35", [b + 2, 2, 0, 0, 0], [0, 0, 1, 2, q - 1]),
            ],
            4 => vec![
                ("h41", [b - 7, 6, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h42", [b, 2, 0, 0, 0], [0, 0, 0, 1, q]),
                ("h43", [b + 5, 0, 0, 0, 0], [0, 1, 1, 0, q]),
                ("h44", [b - 1, 4, 0, 0, 0], [0, 0, 0, 3, q - 1]),
                ("h45", [b + 4, 1, 0, 0, 0], [0, 0, 1, 2, q - 1]),
            ],
            5 => vec![
                ("h51", [b - 5, 5, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h52", [b + 2, 1, 0, 0, 0], [0, 0, 0, 1, q]),
                ("h53", [b + 1, 3, 0, 0, 0], [0, 0, 0, 3, q - 1]),
                ("h54", [b + 6, 0, 0, 0, 0], [0, 0, 1, 2, q - 1]),
            ],
            6 => vec![
                ("h61", [b - 3, 4, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h62", [b + 4, 0, 0, 0, 0], [0, 0, 0, 1, q]),
                ("h63", [b + 3, 2, 0, 0, 0], [0, 0, 0, 3, q - 1]),
            ],
            7 => vec![
                ("h71", [b - 1, 3, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h72", [b - 2, 5, 0, 0, 0], [0, 0, 0, 2, q]),
                ("h73", [b + 3, 2, 0, 0, 0], [0, 0, 1, 1, q]),
                ("h74", [b + 6, 0, 0, 0, 0], [0, 1, 0, 1, q]),
                // x4^3, not x4^2: only the cube balances the weights
                ("h75", [b + 5, 1, 0, 0, 0], [0, 0, 0, 3, q - 1]),
            ],
            8 => vec![
                ("h81", [b + 1, 2, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h82", [b + 5, 1, 0, 0, 0], [0, 0, 1, 1, q]),
                ("h83", [b, 4, 0, 0, 0], [0, 0, 0, 2, q]),
                ("h84", [b + 7, 0, 0, 0, 0], [0, 0, 0, 3, q - 1]),
            ],
            9 => vec![
                ("h91", [b + 3, 1, 0, 0, 0], [0, 0, 0, 0, q + 1]),
                ("h92", [b + 7, 0, 0, 0, 0], [0, 0, 1, 1, q]),
                ("h93", [b + 2, 3, 0, 0, 0], [0, 0, 0, 2, q]),
            ],
            _ => unreachable!(),
        };
        for (label, lhs, rhs) in rows {
            if !skip.contains(&label) {
                self.add(label, lhs, rhs)?;
            }
        }
        Ok(())
    }

    /// The `p_{k*}` block for `11 ≤ a ≤ 18`, `k = a - 10`.
    fn p(&mut self) -> Result<()> {
        let d = self.seed.d() as i64;
        let rows: Vec<(&str, [i64; 5], [i64; 5])> = match self.seed.a() {
            11 => vec![
                ("p11", [d - 1, 5, 0, 0, 0], [0, 0, 0, 1, 1]),
                ("p12", [d + 4, 2, 0, 0, 0], [0, 0, 1, 0, 1]),
                ("p13", [d + 7, 0, 0, 0, 0], [0, 1, 0, 0, 1]),
                ("p14", [d + 6, 1, 0, 0, 0], [0, 0, 0, 2, 0]),
            ],
            12 => vec![
                ("p21", [d + 1, 4, 0, 0, 0], [0, 0, 0, 1, 1]),
                ("p22", [d + 6, 1, 0, 0, 0], [0, 0, 1, 0, 1]),
                ("p23", [d + 8, 0, 0, 0, 0], [0, 0, 0, 2, 0]),
            ],
            13 => vec![
                ("p31", [d + 3, 3, 0, 0, 0], [0, 0, 0, 1, 1]),
                ("p32", [d + 8, 0, 0, 0, 0], [0, 0, 1, 0, 1]),
                ("p33", [d + 2, 5, 0, 0, 0], [0, 0, 0, 3, 0]),
                ("p34", [d + 7, 2, 0, 0, 0], [0, 0, 1, 2, 0]),
            ],
            14 => vec![
                ("p41", [d + 5, 2, 0, 0, 0], [0, 0, 0, 1, 1]),
                ("p42", [d + 10, 0, 0, 0, 0], [0, 1, 1, 0, 1]),
                ("p43", [d + 4, 4, 0, 0, 0], [0, 0, 0, 3, 0]),
                ("p44", [d + 9, 1, 0, 0, 0], [0, 0, 1, 2, 0]),
            ],
            15 => vec![
                ("p51", [d, 5, 0, 0, 0], [0, 0, 0, 0, 2]),
                ("p52", [d + 7, 1, 0, 0, 0], [0, 0, 0, 1, 1]),
                ("p53", [d + 6, 3, 0, 0, 0], [0, 0, 0, 3, 0]),
                ("p54", [d + 11, 0, 0, 0, 0], [0, 0, 1, 2, 0]),
            ],
            16 => vec![
                ("p61", [d + 2, 4, 0, 0, 0], [0, 0, 0, 0, 2]),
                ("p62", [d + 9, 0, 0, 0, 0], [0, 0, 0, 1, 1]),
                ("p63", [d + 8, 2, 0, 0, 0], [0, 0, 0, 3, 0]),
            ],
            17 => vec![
                ("p71", [d + 4, 3, 0, 0, 0], [0, 0, 0, 0, 2]),
                ("p72", [d + 3, 5, 0, 0, 0], [0, 0, 0, 2, 1]),
                ("p73", [d + 8, 2, 0, 0, 0], [0, 0, 1, 1, 1]),
                ("p74", [d + 11, 0, 0, 0, 0], [0, 1, 0, 1, 1]),
                ("p75", [d + 10, 1, 0, 0, 0], [0, 0, 0, 3, 0]),
            ],
            18 => vec![
                ("p81", [d + 6, 2, 0, 0, 0], [0, 0, 0, 0, 2]),
                ("p82", [d + 10, 1, 0, 0, 0], [0, 0, 1, 1, 1]),
                ("p83", [d + 5, 4, 0, 0, 0], [0, 0, 0, 2, 1]),
                ("p84", [d + 12, 0, 0, 0, 0], [0, 0, 0, 3, 0]),
            ],
            _ => unreachable!("p blocks cover 11..=18"),
        };
        for (label, lhs, rhs) in rows {
            self.add(label, lhs, rhs)?;
        }
        Ok(())
    }

    /// The `d`-dependent extra binomial `(…) - x5^2` for `11 ≤ a ≤ 14`.
    fn small_a_extra(&mut self) -> Result<()> {
        let d = self.seed.d() as i64;
        let x5sq = [0, 0, 0, 0, 2];
        let (lhs, rhs) = match (self.seed.a(), d) {
            // The printed x2^5 - x4 x5 is p11 again and leaves the quotient
            // infinite. x1^d x2^3 x4 is the d = 2..4 form below after g3.
            (11, 1) => ([1, 3, 0, 1, 0], x5sq),
            (11, 2..=4) => ([d - 2, 3, 2, 0, 0], x5sq),
            // x1^{d-5}: the printed x1 for both d = 6 and d = 7 only
            // balances at d = 6
            (11, 5..=7) => ([d - 5, 6, 1, 0, 0], x5sq),
            (11, _) => ([d - 8, 9, 0, 0, 0], x5sq),
            (12, 1) => ([1, 2, 2, 0, 0], x5sq),
            (12, 5) => ([2, 5, 1, 0, 0], x5sq),
            (12, _) => ([d - 6, 8, 0, 0, 0], x5sq),
            // x2^4 x3, consistent with x1^{d-1} x2^4 x3 for d = 2, 3
            (13, 1..=3) => ([d - 1, 4, 1, 0, 0], x5sq),
            (13, _) => ([d - 4, 7, 0, 0, 0], x5sq),
            // x1^{d-2} x2^6 continued to d = 1 through g6
            (14, 1) => ([2, 3, 1, 0, 0], x5sq),
            (14, _) => ([d - 2, 6, 0, 0, 0], x5sq),
            _ => return Ok(()),
        };
        self.add("extra", lhs, rhs)
    }
}

/// The catalog for `seed`, reading `(21, d)` strictly.
pub fn generator_catalog(seed: &ArithmeticSeed) -> Result<Catalog> {
    generator_catalog_variant(seed, CatalogVariant::Strict)
}

/// The catalog for `seed`; `variant` only matters for `(21, 1)`, `(21, 2)`.
pub fn generator_catalog_variant(
    seed: &ArithmeticSeed,
    variant: CatalogVariant,
) -> Result<Catalog> {
    seed.require_gamma5()?;
    let mut b = Builder::new(seed)?;
    let (a, d) = (seed.a(), seed.d());
    let kind = if a <= 18 {
        b.p()?;
        match a {
            11 | 12 => b.g(&[3, 5, 6])?,
            _ => b.g(&[3, 4, 5, 6])?,
        }
        if a >= 12 {
            b.g(&[7])?;
        }
        b.small_a_extra()?;
        CatalogKind::SmallA { a }
    } else if a == 21 && d <= 2 {
        b.h(&["h11"])?;
        // x1^d x2^6 x3 - x5^3; the d = 1 form is the printed one
        b.add("extra", [d as i64, 6, 1, 0, 0], [0, 0, 0, 0, 3])?;
        if variant == CatalogVariant::Augmented {
            b.g(&[1, 2, 3, 4, 5, 6, 7])?;
        }
        CatalogKind::TwentyOne { variant }
    } else {
        b.g(&[1, 2, 3, 4, 5, 6, 7])?;
        b.h(&[])?;
        CatalogKind::Residue {
            q: seed.q(),
            r: seed.r(),
        }
    };
    Ok(Catalog {
        kind,
        generators: b.out,
    })
}
