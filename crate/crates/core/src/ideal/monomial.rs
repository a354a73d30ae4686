use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of variables `x₁, …, x₅`.
pub const NVARS: usize = 5;

/// Exponents of a monomial `x₁^e₁ ⋯ x₅^e₅`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct ExponentVector(pub [u32; NVARS]);

impl ExponentVector {
    pub const ONE: Self = Self([0; NVARS]);

    pub fn new(e: [u32; NVARS]) -> Self {
        Self(e)
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Self(e)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(&other.0) {
            *x = (*x).max(*y);
        }
        Self(e)
    }

    /// No variable appears in both.
    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self / div * mul`, which must be a monomial (`div` divides `self`).
    pub fn exchange(&self, div: &Self, mul: &Self) -> Result<Self> {
        let mut e = [0; NVARS];
        for (i, out) in e.iter_mut().enumerate() {
            let q = self.0[i]
                .checked_sub(div.0[i])
                .expect("divisor must divide the monomial");
            *out = q.checked_add(mul.0[i]).ok_or(Error::Overflow("exponent"))?;
        }
        Ok(Self(e))
    }

    /// `Σ eᵢ·wᵢ`, the weighted degree under `xᵢ ↦ t^{wᵢ}`.
    pub fn weight(&self, weights: &[u64]) -> Result<u64> {
        self.0.iter().zip(weights).try_fold(0u64, |acc, (&e, &w)| {
            (e as u64)
                .checked_mul(w)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("weighted degree"))
        })
    }

    /// `Some(i)` if the monomial is a positive power of `x_{i+1}` alone.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (support.next(), support.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                f.write_str("*")?;
            }
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Monomial orders with `x₁ > x₂ > ⋯ > x₅`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                // the last differing variable decides, smaller exponent wins
                for i in (0..NVARS).rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Dimension of a monomial quotient: a count, or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl Dimension {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Dimension::Finite(n) => Some(*n),
            Dimension::Infinite => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => f.write_str("INFINITE"),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(n) => s.serialize_u64(*n),
            Dimension::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Dimension::Finite(n)),
            Raw::S(s) if s == "INFINITE" => Ok(Dimension::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad dimension {s:?}"))),
        }
    }
}

/// Minimal monomial generators of a monomial ideal: an antichain under
/// divisibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialIdealBasis(Vec<ExponentVector>);

impl MonomialIdealBasis {
    /// Minimalize `monomials`; the result is sorted.
    pub fn new(mut monomials: Vec<ExponentVector>) -> Self {
        monomials.sort_by_key(|m| (m.degree(), *m));
        monomials.dedup();
        let mut kept: Vec<ExponentVector> = Vec::with_capacity(monomials.len());
        for m in monomials {
            // sorted by degree, so a divisor of m is already in `kept`
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort();
        Self(kept)
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.0
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.0.iter().any(|g| g.divides(m))
    }

    /// Number of monomials in the variables `vars` (zero-based indices, all
    /// other exponents fixed at 0) that lie outside the ideal.
    pub fn count_standard_monomials(&self, vars: &[usize]) -> Dimension {
        let relevant: Vec<ExponentVector> = self
            .0
            .iter()
            .filter(|g| (0..NVARS).all(|i| g.0[i] == 0 || vars.contains(&i)))
            .copied()
            .collect();
        let bounded = vars
            .iter()
            .all(|&v| relevant.iter().any(|g| g.pure_power_of() == Some(v)));
        if !bounded {
            return Dimension::Infinite;
        }
        let inside = |m: &ExponentVector| relevant.iter().any(|g| g.divides(m));
        let mut count = 0u64;
        let mut current = ExponentVector::ONE;
        // Divisibility is monotone, so each coordinate can stop at the first
        // exponent that lands in the ideal.
        fn walk(
            k: usize,
            vars: &[usize],
            current: &mut ExponentVector,
            count: &mut u64,
            inside: &dyn Fn(&ExponentVector) -> bool,
        ) {
            if k == vars.len() {
                *count += 1;
                return;
            }
            let v = vars[k];
            loop {
                if inside(current) {
                    break;
                }
                walk(k + 1, vars, current, count, inside);
                current.0[v] += 1;
            }
            current.0[v] = 0;
        }
        walk(0, vars, &mut current, &mut count, &inside);
        Dimension::Finite(count)
    }

    /// Standard monomial count in `x₂, …, x₅`, i.e. with `x₁` already
    /// divided out.
    pub fn standard_monomial_count(&self) -> Dimension {
        self.count_standard_monomials(&[1, 2, 3, 4])
    }
}
