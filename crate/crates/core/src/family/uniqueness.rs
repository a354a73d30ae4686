use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{apery_oracle, GeneratorList};

/// At most this many distinct factorizations are kept per element.
const MAX_KEPT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementExpansions {
    pub element: u64,
    /// Number of distinct factorizations over the generators other than the
    /// base.
    pub count: u64,
    /// Coefficient vectors aligned with the full generator list (the base
    /// position is always 0). Truncated to the first few when `count` is large.
    pub expansions: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub base: u64,
    pub all_unique: bool,
    /// One entry per Apéry element, in residue order.
    pub elements: Vec<ElementExpansions>,
    /// The entries of `elements` whose count is not exactly one.
    pub violations: Vec<ElementExpansions>,
}

struct Enumerator<'a> {
    gens: &'a [(usize, u64)],
    width: usize,
    coeffs: Vec<u64>,
    count: u64,
    kept: Vec<Vec<u64>>,
}

impl Enumerator<'_> {
    fn run(&mut self, target: u64, idx: usize) {
        let (slot, g) = self.gens[idx];
        if idx + 1 == self.gens.len() {
            if target % g == 0 {
                self.coeffs[slot] = target / g;
                self.record();
                self.coeffs[slot] = 0;
            }
            return;
        }
        for c in 0..=target / g {
            self.coeffs[slot] = c;
            self.run(target - c * g, idx + 1);
        }
        self.coeffs[slot] = 0;
    }

    fn record(&mut self) {
        self.count += 1;
        if self.kept.len() < MAX_KEPT {
            debug_assert_eq!(self.coeffs.len(), self.width);
            self.kept.push(self.coeffs.clone());
        }
    }
}

/// Enumerate every factorization of every element of `Ap(Γ, base)` and
/// report the elements that do not have exactly one.
///
/// Factorizations of an Apéry element never use `base` itself, so the
/// enumeration runs over the remaining generators only.
pub fn uniqueness_check(gens: &GeneratorList, base: u64) -> Result<UniquenessReport> {
    let apery = apery_oracle(gens, base)?;
    let mut others: Vec<(usize, u64)> = gens
        .as_slice()
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, g)| g != base)
        .collect();
    // Largest first keeps the branching factor of the outer loops small.
    others.sort_by_key(|&(_, g)| std::cmp::Reverse(g));

    let width = gens.len();
    let elements: Vec<ElementExpansions> = apery
        .iter()
        .map(|&w| {
            if w == 0 {
                return ElementExpansions {
                    element: 0,
                    count: 1,
                    expansions: vec![vec![0; width]],
                };
            }
            let mut e = Enumerator {
                gens: &others,
                width,
                coeffs: vec![0; width],
                count: 0,
                kept: Vec::new(),
            };
            if !others.is_empty() {
                e.run(w, 0);
            }
            ElementExpansions {
                element: w,
                count: e.count,
                expansions: e.kept,
            }
        })
        .collect();
    let violations: Vec<ElementExpansions> =
        elements.iter().filter(|e| e.count != 1).cloned().collect();
    Ok(UniquenessReport {
        base,
        all_unique: violations.is_empty(),
        elements,
        violations,
    })
}
