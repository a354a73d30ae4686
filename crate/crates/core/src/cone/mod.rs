//! Apéry table of Γ₅ and the structure of its tangent cone over the fibre
//! cone of `(t^a)`.

mod table;

use serde::{Deserialize, Serialize};

pub use table::{
    apery_table, ladder_landings, landings, AperyTable, ColumnLadder, LadderAnalysis, Landing,
};

use crate::error::{Error, Result};
use crate::family::ArithmeticSeed;
use crate::frobenius::pf_gamma5;

/// `ψ(2) = -1`, `ψ(3) = 2`, zero elsewhere.
pub fn psi(k: u64) -> i64 {
    match k {
        2 => -1,
        3 => 2,
        _ => 0,
    }
}

/// `t_k` for `k ≥ 2` from `a = 10q + r`, before adding `ψ(k)`.
fn t_base(k: u64, q: u64, r: u64) -> i64 {
    if k < q {
        10
    } else if k == q {
        if r > 0 {
            10
        } else {
            9
        }
    } else if k == q + 1 {
        match r {
            0 | 1 => 5,
            2 => 6,
            3 => 7,
            4..=6 => 8,
            _ => 9,
        }
    } else if k == q + 2 {
        match r {
            0..=4 => 0,
            5 => 1,
            6 | 7 => 2,
            8 => 3,
            _ => 4,
        }
    } else {
        0
    }
}

/// Closed-form `t_0, t_1, …` (number of Apéry elements of each order),
/// trailing zeros removed.
pub fn t_counts_closed_form(seed: &ArithmeticSeed) -> Result<Vec<u64>> {
    seed.require_gamma5()?;
    let (q, r) = (seed.q(), seed.r());
    let mut t = vec![1u64, 4];
    for k in 2..=q + 2 {
        let v = t_base(k, q, r) + psi(k);
        t.push(u64::try_from(v).map_err(|_| Error::Overflow("negative t_k"))?);
    }
    while t.last() == Some(&0) {
        t.pop();
    }
    Ok(t)
}

/// Histogram of the orders of the Apéry elements.
pub fn t_counts_direct(table: &AperyTable) -> Vec<u64> {
    let mut t = vec![0u64; table.top + 1];
    for &o in &table.orders {
        t[o as usize] += 1;
    }
    t
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TorsionSummand {
    pub column: usize,
    pub shift: usize,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionNumber {
    /// `⌊a/10⌋ + 1`
    pub formula: u64,
    /// Largest order of an Apéry element.
    pub computed: u64,
}

impl ReductionNumber {
    pub fn agrees(&self) -> bool {
        self.formula == self.computed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConeDecomposition {
    pub t_counts: Vec<u64>,
    pub free: bool,
    /// Shift of the free summand of each column, column 0 included; sorted.
    pub shifts: Vec<usize>,
    pub torsion: Vec<TorsionSummand>,
    pub reduction_number_formula: u64,
    pub reduction_number_computed: u64,
    /// The fibre cone of a principal ideal has dimension 1.
    pub analytic_spread: u32,
}

/// Decompose the tangent cone from the Apéry table, checking the order
/// histogram against its closed form.
pub fn cone_decomposition(seed: &ArithmeticSeed) -> Result<ConeDecomposition> {
    let table = apery_table(seed)?;
    decompose(seed, &table)
}

fn decompose(seed: &ArithmeticSeed, table: &AperyTable) -> Result<ConeDecomposition> {
    let ladders = landings(table);
    let direct = t_counts_direct(table);
    let closed_form = t_counts_closed_form(seed)?;
    if direct != closed_form {
        return Err(Error::TCountMismatch {
            direct,
            closed_form,
        });
    }
    let mut shifts: Vec<usize> = ladders.columns.iter().map(|c| c.d).collect();
    shifts.sort_unstable();
    let torsion = ladders
        .columns
        .iter()
        .flat_map(|c| {
            c.torsion
                .iter()
                .map(move |&(shift, length)| TorsionSummand {
                    column: c.column,
                    shift,
                    length,
                })
        })
        .collect();
    Ok(ConeDecomposition {
        t_counts: direct,
        free: ladders.is_free(),
        shifts,
        torsion,
        reduction_number_formula: seed.q() + 1,
        reduction_number_computed: table.top as u64,
        analytic_spread: 1,
    })
}

/// `(⌊a/10⌋ + 1, max Apéry order)`; the second is the reduction number only
/// when the cone is free.
pub fn reduction_number(seed: &ArithmeticSeed) -> Result<ReductionNumber> {
    let table = apery_table(seed)?;
    let ladders = landings(&table);
    if let Some((column, l)) = ladders.true_landings().next() {
        return Err(Error::UnsupportedNonFreeCone(format!(
            "column {column} has a landing at rows {}..={}",
            l.start, l.end
        )));
    }
    Ok(ReductionNumber {
        formula: seed.q() + 1,
        computed: table.top as u64,
    })
}

/// Numerator of the Hilbert series `H(x) = (Σ t_k x^k) / (1 - x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HilbertNumerator {
    pub coefficients: Vec<u64>,
    pub denominator: String,
}

impl std::fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{k}"),
            })
            .collect();
        write!(f, "({}) / {}", terms.join(" + "), self.denominator)
    }
}

pub fn hilbert_numerator(seed: &ArithmeticSeed) -> Result<HilbertNumerator> {
    Ok(HilbertNumerator {
        coefficients: cone_decomposition(seed)?.t_counts,
        denominator: "(1 - x)".into(),
    })
}

/// Buchsbaum is only decided here through Cohen–Macaulayness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Buchsbaum {
    Yes,
    NotDetermined,
}

impl Serialize for Buchsbaum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Buchsbaum::Yes => s.serialize_bool(true),
            Buchsbaum::NotDetermined => s.serialize_str("notDetermined"),
        }
    }
}

impl<'de> Deserialize<'de> for Buchsbaum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Bool(true) => Ok(Buchsbaum::Yes),
            serde_json::Value::String(s) if s == "notDetermined" => Ok(Buchsbaum::NotDetermined),
            other => Err(serde::de::Error::custom(format!(
                "bad buchsbaum flag {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RingProperties {
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub buchsbaum: Buchsbaum,
    pub type_count: usize,
}

pub fn ring_properties(seed: &ArithmeticSeed) -> Result<RingProperties> {
    let cone = cone_decomposition(seed)?;
    let type_count = pf_gamma5(seed)?.type_count;
    Ok(RingProperties {
        cohen_macaulay: cone.free,
        gorenstein: cone.free && type_count == 1,
        buchsbaum: if cone.free {
            Buchsbaum::Yes
        } else {
            Buchsbaum::NotDetermined
        },
        type_count,
    })
}

/// The table together with its cone data, as exported by `table --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConeExport {
    pub rows: Vec<Vec<u64>>,
    pub t_counts: Vec<u64>,
    pub free: bool,
    pub shifts: Vec<usize>,
    pub reduction_number: ReductionNumber,
}

pub fn cone_export(seed: &ArithmeticSeed) -> Result<ConeExport> {
    let table = apery_table(seed)?;
    let cone = decompose(seed, &table)?;
    Ok(ConeExport {
        rows: table.rows,
        t_counts: cone.t_counts,
        free: cone.free,
        shifts: cone.shifts,
        reduction_number: ReductionNumber {
            formula: cone.reduction_number_formula,
            computed: cone.reduction_number_computed,
        },
    })
}
