//! Brute-force reference engine for arbitrary numerical semigroups.
//!
//! Everything here works from the generators alone through dynamic
//! programming sieves over `0..=bound`. None of it knows about the
//! partial-sum family, which is what makes it usable as ground truth for the
//! closed forms elsewhere in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing list of positive generators with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct GeneratorList(Vec<u64>);

impl GeneratorList {
    pub fn new(gens: Vec<u64>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        if gens[0] == 0 {
            return Err(Error::InvalidGenerators(
                "generators must be positive".into(),
            ));
        }
        if gens.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGenerators(format!(
                "{gens:?} is not strictly increasing"
            )));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::InvalidGenerators(format!(
                "{gens:?} has gcd {g}, expected 1"
            )));
        }
        Ok(Self(gens))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Smallest generator, m(Γ) when the list is minimal.
    pub fn multiplicity(&self) -> u64 {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn largest(&self) -> u64 {
        *self.0.last().expect("nonempty by construction")
    }
}

impl TryFrom<Vec<u64>> for GeneratorList {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<GeneratorList> for Vec<u64> {
    fn from(g: GeneratorList) -> Self {
        g.0
    }
}

pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

const NOT_MEMBER: u32 = u32::MAX;

/// Maximal factorization length for every integer in `0..=bound`.
///
/// `order(s)` is the largest `n` with `s ∈ nM`, or `None` when `s ∉ Γ`.
#[derive(Debug, Clone)]
pub struct OrderTable {
    gens: Vec<u64>,
    orders: Vec<u32>,
}

impl OrderTable {
    pub fn new(gens: &GeneratorList, bound: u64) -> Result<Self> {
        let mut table = Self {
            gens: gens.as_slice().to_vec(),
            orders: vec![0],
        };
        table.extend_to(bound)?;
        Ok(table)
    }

    /// Grow the table so that it covers `0..=bound`.
    pub fn extend_to(&mut self, bound: u64) -> Result<()> {
        let len = usize::try_from(bound)
            .ok()
            .and_then(|b| b.checked_add(1))
            .ok_or(Error::Overflow("order table bound"))?;
        let start = self.orders.len();
        if len <= start {
            return Ok(());
        }
        self.orders.resize(len, NOT_MEMBER);
        for x in start..len {
            let mut best = NOT_MEMBER;
            for &g in &self.gens {
                let g = g as usize;
                if g > x {
                    break;
                }
                let prev = self.orders[x - g];
                if prev != NOT_MEMBER && (best == NOT_MEMBER || prev + 1 > best) {
                    best = prev + 1;
                }
            }
            self.orders[x] = best;
        }
        Ok(())
    }

    pub fn bound(&self) -> u64 {
        (self.orders.len() - 1) as u64
    }

    /// Order of `s`, `None` if `s` is not in the semigroup.
    ///
    /// Panics if `s` exceeds the table bound.
    pub fn order(&self, s: u64) -> Option<u32> {
        let o = self.orders[usize::try_from(s).expect("index fits usize")];
        (o != NOT_MEMBER).then_some(o)
    }

    pub fn contains(&self, s: u64) -> bool {
        self.order(s).is_some()
    }

    /// Order of `s`, extending the table on demand.
    pub fn order_of(&mut self, s: u64) -> Result<Option<u32>> {
        if s > self.bound() {
            self.extend_to(s.max(self.bound().saturating_mul(2)))?;
        }
        Ok(self.order(s))
    }
}

/// Boolean membership sieve over `0..=bound`.
fn sieve(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut member = vec![false; bound + 1];
    member[0] = true;
    for x in 1..=bound {
        member[x] = gens
            .iter()
            .take_while(|&&g| g as usize <= x)
            .any(|&g| member[x - g as usize]);
    }
    member
}

/// True iff `s` is a nonnegative integer combination of the generators.
pub fn membership(s: u64, gens: &GeneratorList) -> bool {
    let Ok(bound) = usize::try_from(s) else {
        return false;
    };
    sieve(gens.as_slice(), bound)[bound]
}

/// Least element of Γ in every residue class modulo `base`.
///
/// Entry `i` of the result is the Apéry element congruent to `i`; entry 0
/// is 0.
pub fn apery_oracle(gens: &GeneratorList, base: u64) -> Result<Vec<u64>> {
    if base == 0 || !membership(base, gens) {
        return Err(Error::AperyBaseNotInSemigroup { base });
    }
    let c = usize::try_from(base).map_err(|_| Error::Overflow("Apéry base"))?;
    // Every residue class meets Γ below (c - 1) * largest + c, so the
    // doubling below terminates.
    let mut bound = c.max(4 * gens.largest() as usize);
    loop {
        let member = sieve(gens.as_slice(), bound);
        let mut apery = vec![u64::MAX; c];
        let mut missing = c;
        for (x, _) in member.iter().enumerate().filter(|(_, &m)| m) {
            let slot = &mut apery[x % c];
            if *slot == u64::MAX {
                *slot = x as u64;
                missing -= 1;
                if missing == 0 {
                    return Ok(apery);
                }
            }
        }
        bound = bound.checked_mul(2).ok_or(Error::Overflow("Apéry sieve"))?;
    }
}

/// Largest integer outside Γ, or -1 when Γ = ℕ.
pub fn frobenius_oracle(gens: &GeneratorList) -> i64 {
    let a1 = gens.multiplicity();
    let apery = apery_oracle(gens, a1).expect("multiplicity is a member");
    *apery.iter().max().expect("nonempty") as i64 - a1 as i64
}

/// Order of `s`: the largest total coefficient sum over all factorizations.
pub fn order_oracle(s: u64, gens: &GeneratorList) -> Result<u32> {
    let table = OrderTable::new(gens, s)?;
    table.order(s).ok_or(Error::NotMember { value: s })
}

/// Pseudo-Frobenius numbers, sorted ascending.
///
/// Computed as the maximals of `Ap(Γ, a₁)` under `w ≤_Γ w'` iff `w' - w ∈ Γ`,
/// shifted down by `a₁`.
pub fn pseudo_frobenius_oracle(gens: &GeneratorList) -> Vec<i64> {
    let a1 = gens.multiplicity();
    let apery = apery_oracle(gens, a1).expect("multiplicity is a member");
    let top = *apery.iter().max().expect("nonempty") as usize;
    let member = sieve(gens.as_slice(), top);
    let mut pf: Vec<i64> = apery
        .iter()
        .filter(|&&w| !apery.iter().any(|&v| v > w && member[(v - w) as usize]))
        .map(|&w| w as i64 - a1 as i64)
        .collect();
    pf.sort_unstable();
    pf
}

/// True iff no generator lies in the semigroup spanned by the others.
pub fn is_minimally_generated(gens: &GeneratorList) -> bool {
    let g = gens.as_slice();
    (0..g.len()).all(|i| {
        let others: Vec<u64> = g.iter().copied().take(i).collect();
        // Larger generators cannot contribute to a smaller target.
        !sieve(&others, g[i] as usize)[g[i] as usize]
    })
}
