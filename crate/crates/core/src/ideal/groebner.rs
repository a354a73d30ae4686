//! Buchberger completion for ideals generated by monomials and pure
//! binomials `x^u - x^v`.
//!
//! Such ideals stay in that shape under S-pairs and reduction, so
//! coefficients never appear: a reduction step either exchanges a monomial
//! (`x^w·x^u ↦ x^w·x^v`) or deletes a term. The results do not depend on the
//! coefficient field.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::{ExponentVector, MonomialIdealBasis, MonomialOrder};
use crate::error::Result;

/// A monomial `x^lead`, or a binomial `x^lead - x^trail` with
/// `lead > trail` in the ambient order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Polynomial {
    Monomial {
        lead: ExponentVector,
    },
    Binomial {
        lead: ExponentVector,
        trail: ExponentVector,
    },
}

impl Polynomial {
    pub fn monomial(m: ExponentVector) -> Self {
        Polynomial::Monomial { lead: m }
    }

    /// `x^u - x^v` oriented by `order`; `None` when the terms cancel.
    pub fn binomial(u: ExponentVector, v: ExponentVector, order: MonomialOrder) -> Option<Self> {
        match order.cmp(&u, &v) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Polynomial::Binomial { lead: u, trail: v }),
            Ordering::Less => Some(Polynomial::Binomial { lead: v, trail: u }),
        }
    }

    pub fn lead(&self) -> &ExponentVector {
        match self {
            Polynomial::Monomial { lead } | Polynomial::Binomial { lead, .. } => lead,
        }
    }

    pub fn trail(&self) -> Option<&ExponentVector> {
        match self {
            Polynomial::Monomial { .. } => None,
            Polynomial::Binomial { trail, .. } => Some(trail),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polynomial::Monomial { lead } => write!(f, "{lead}"),
            Polynomial::Binomial { lead, trail } => write!(f, "{lead} - {trail}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    pub elements: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> MonomialIdealBasis {
        MonomialIdealBasis::new(self.elements.iter().map(|p| *p.lead()).collect())
    }

    /// Full normal form of `p` modulo the basis; `None` means zero.
    pub fn normal_form(&self, p: Polynomial) -> Result<Option<Polynomial>> {
        let Some(p) = top_reduce(p, &self.elements, self.order)? else {
            return Ok(None);
        };
        match p {
            Polynomial::Monomial { .. } => Ok(Some(p)),
            Polynomial::Binomial { lead, trail } => {
                Ok(Some(match reduce_term(trail, &self.elements)? {
                    Some(t) => Polynomial::binomial(lead, t, self.order)
                        .expect("trail stays below an irreducible lead"),
                    None => Polynomial::monomial(lead),
                }))
            }
        }
    }

    /// Whether every S-pair of the basis reduces to zero.
    pub fn is_complete(&self) -> Result<bool> {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if let Some(s) = s_polynomial(&self.elements[i], &self.elements[j], self.order)? {
                    if top_reduce(s, &self.elements, self.order)?.is_some() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Normal form of a single term: `None` when some monomial element kills it.
fn reduce_term(mut m: ExponentVector, basis: &[Polynomial]) -> Result<Option<ExponentVector>> {
    while let Some(q) = basis.iter().find(|q| q.lead().divides(&m)) {
        match q {
            Polynomial::Monomial { .. } => return Ok(None),
            Polynomial::Binomial { lead, trail } => m = m.exchange(lead, trail)?,
        }
    }
    Ok(Some(m))
}

/// Reduce the leading term until no basis lead divides it.
fn top_reduce(
    mut p: Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
) -> Result<Option<Polynomial>> {
    loop {
        let Some(q) = basis.iter().find(|q| q.lead().divides(p.lead())) else {
            return Ok(Some(p));
        };
        p = match (p, q) {
            (Polynomial::Monomial { .. }, Polynomial::Monomial { .. }) => return Ok(None),
            (Polynomial::Monomial { lead: m }, Polynomial::Binomial { lead, trail }) => {
                Polynomial::monomial(m.exchange(lead, trail)?)
            }
            (Polynomial::Binomial { trail: t, .. }, Polynomial::Monomial { .. }) => {
                Polynomial::monomial(t)
            }
            (Polynomial::Binomial { lead: l, trail: t }, Polynomial::Binomial { lead, trail }) => {
                match Polynomial::binomial(l.exchange(lead, trail)?, t, order) {
                    Some(b) => b,
                    None => return Ok(None),
                }
            }
        };
    }
}

fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    order: MonomialOrder,
) -> Result<Option<Polynomial>> {
    let l = f.lead().lcm(g.lead());
    Ok(match (f.trail(), g.trail()) {
        (None, None) => None,
        (Some(t), None) => Some(Polynomial::monomial(l.exchange(f.lead(), t)?)),
        (None, Some(t)) => Some(Polynomial::monomial(l.exchange(g.lead(), t)?)),
        (Some(tf), Some(tg)) => {
            Polynomial::binomial(l.exchange(f.lead(), tf)?, l.exchange(g.lead(), tg)?, order)
        }
    })
}

/// Complete `generators` to the reduced Gröbner basis under `order`.
pub fn buchberger(generators: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();

    let push = |p: Polynomial, basis: &mut Vec<Polynomial>, pairs: &mut VecDeque<_>| {
        let k = basis.len();
        basis.push(p);
        pairs.extend((0..k).map(|i| (i, k)));
    };

    for g in generators {
        let g = match *g {
            Polynomial::Binomial { lead, trail } => Polynomial::binomial(lead, trail, order),
            m => Some(m),
        };
        if let Some(g) = g {
            if let Some(r) = top_reduce(g, &basis, order)? {
                push(r, &mut basis, &mut pairs);
            }
        }
    }

    while let Some((i, j)) = pairs.pop_front() {
        let (f, g) = (basis[i], basis[j]);
        // Buchberger's first criterion
        if f.lead().is_coprime(g.lead()) {
            continue;
        }
        if let Some(s) = s_polynomial(&f, &g, order)? {
            if let Some(r) = top_reduce(s, &basis, order)? {
                push(r, &mut basis, &mut pairs);
            }
        }
    }

    interreduce(basis, order)
}

fn interreduce(basis: Vec<Polynomial>, order: MonomialOrder) -> Result<GroebnerBasis> {
    // Minimal basis: drop elements whose lead is divisible by another lead,
    // keeping the first of any tie.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && q.lead().divides(p.lead()) && (q.lead() != p.lead() || j < i));
        if !redundant {
            minimal.push(*p);
        }
    }
    // Tail-reduce; leads are untouched so the leading ideal is unchanged.
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| *q)
            .collect();
        reduced.push(match *p {
            Polynomial::Monomial { .. } => *p,
            Polynomial::Binomial { lead, trail } => match reduce_term(trail, &others)? {
                Some(t) => Polynomial::binomial(lead, t, order).expect("trail below lead"),
                None => Polynomial::monomial(lead),
            },
        });
    }
    reduced.sort_by(|x, y| order.cmp(y.lead(), x.lead()));
    Ok(GroebnerBasis {
        elements: reduced,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [u32; 5]) -> ExponentVector {
        ExponentVector(e)
    }

    fn bin(u: [u32; 5], v: [u32; 5]) -> Polynomial {
        Polynomial::binomial(m(u), m(v), MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn monomial_kills_binomial_lead() {
        // {x2^3, x2^3 x3^2 - x5^2}
        let gb = buchberger(
            &[
                Polynomial::monomial(m([0, 3, 0, 0, 0])),
                bin([0, 3, 2, 0, 0], [0, 0, 0, 0, 2]),
            ],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        assert!(gb
            .elements
            .contains(&Polynomial::monomial(m([0, 0, 0, 0, 2]))));
        assert!(gb.is_complete().unwrap());
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let g = bin([0, 0, 2, 0, 0], [2, 0, 0, 1, 0]);
        let gb = buchberger(&[g], MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.elements, vec![g]);
    }

    #[test]
    fn twisted_cubic() {
        // ⟨t^3, t^4, t^5⟩: x2^2 - x1 x3, x1^3 - x2 x3, x1^2 x2 - x3^2
        let gens = [
            bin([0, 2, 0, 0, 0], [1, 0, 1, 0, 0]),
            bin([3, 0, 0, 0, 0], [0, 1, 1, 0, 0]),
            bin([2, 1, 0, 0, 0], [0, 0, 2, 0, 0]),
        ];
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = buchberger(&gens, order).unwrap();
            assert!(gb.is_complete().unwrap());
            for g in &gens {
                let g = match *g {
                    Polynomial::Binomial { lead, trail } => {
                        Polynomial::binomial(lead, trail, order).unwrap()
                    }
                    p => p,
                };
                assert_eq!(gb.normal_form(g).unwrap(), None);
            }
            // adding x1 leaves k[x2,x3]/(x2^2, x2 x3, x3^2): dimension 3 = multiplicity
            let mut with_x1 = gens.to_vec();
            with_x1.push(Polynomial::monomial(ExponentVector::var(0)));
            let lt = buchberger(&with_x1, order).unwrap().leading_monomials();
            assert_eq!(
                lt.count_standard_monomials(&[1, 2]),
                super::super::monomial::Dimension::Finite(3)
            );
        }
    }

    #[test]
    fn cancelling_binomial_vanishes() {
        assert_eq!(
            Polynomial::binomial(m([1, 0, 0, 0, 0]), m([1, 0, 0, 0, 0]), MonomialOrder::Lex),
            None
        );
        let gb = buchberger(
            &[
                bin([0, 1, 0, 0, 0], [0, 0, 1, 0, 0]),
                bin([0, 0, 1, 0, 0], [0, 1, 0, 0, 0]),
            ],
            MonomialOrder::Lex,
        )
        .unwrap();
        assert_eq!(gb.elements.len(), 1);
    }
}
