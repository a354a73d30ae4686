use serde::{Deserialize, Serialize};

use crate::error::{checked_add, checked_mul, Result};
use crate::family::{apery_gamma5, partial_sum_generators, ArithmeticSeed};
use crate::oracle::OrderTable;

/// `rows[s][n] = ω_{s,n}` for `s = 0..=top`, where column `n` starts at the
/// Apéry element `φ(n)` (column 0 at 0).
///
/// `guard` is row `top + 1`; it is not part of the table but lets the ladder
/// analysis see where the last landing of each column ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AperyTable {
    pub a: u64,
    pub top: usize,
    pub rows: Vec<Vec<u64>>,
    pub guard: Vec<u64>,
    /// Order of each Apéry element, by column.
    pub orders: Vec<u32>,
}

impl AperyTable {
    pub fn column(&self, n: usize) -> Vec<u64> {
        self.rows.iter().map(|r| r[n]).collect()
    }

    /// Column `n` with the guard row appended.
    pub fn ladder(&self, n: usize) -> Vec<u64> {
        let mut c = self.column(n);
        c.push(self.guard[n]);
        c
    }

    /// One line per row, comma separated, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Build the Apéry table of Γ₅ with respect to `a`: row 0 is the Apéry set,
/// row 1 replaces 0 by `a`, and each later entry stays put while it lies in
/// `(s+1)M` and otherwise moves up by `a`.
pub fn apery_table(seed: &ArithmeticSeed) -> Result<AperyTable> {
    let records = apery_gamma5(seed)?;
    let a = seed.a();
    let mut row0 = vec![0u64];
    row0.extend(records.iter().map(|r| r.phi));
    let gens = partial_sum_generators(seed)?;

    let largest = *row0.iter().max().expect("a >= 11");
    let mut ot = OrderTable::new(&gens, largest)?;
    let orders: Vec<u32> = row0
        .iter()
        .map(|&w| ot.order(w).expect("Apéry elements are members"))
        .collect();
    let top = *orders.iter().max().expect("nonempty") as usize;
    ot.extend_to(checked_add(
        largest,
        checked_mul(a, top as u64 + 1, "table bound")?,
        "table bound",
    )?)?;

    let mut rows = Vec::with_capacity(top + 1);
    rows.push(row0.clone());
    let mut current = row0;
    current[0] = a;
    let mut s = 1usize;
    let guard = loop {
        if s > top {
            break current;
        }
        rows.push(current.clone());
        let next: Vec<u64> = current
            .iter()
            .map(|&w| {
                let o = ot.order(w).expect("table entries are members");
                if o as usize > s {
                    w
                } else {
                    w + a
                }
            })
            .collect();
        current = next;
        s += 1;
    };
    Ok(AperyTable {
        a,
        top,
        rows,
        guard,
        orders,
    })
}

/// A maximal flat stretch `start..=end` (with `end > start`) of a ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Landing {
    pub start: usize,
    pub end: usize,
}

impl Landing {
    pub fn length(&self) -> usize {
        self.end - self.start
    }

    pub fn is_true(&self) -> bool {
        self.start >= 1
    }
}

/// Landings of a nondecreasing sequence.
pub fn ladder_landings(values: &[u64]) -> Vec<Landing> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        while j + 1 < values.len() && values[j + 1] == values[i] {
            j += 1;
        }
        if j > i {
            out.push(Landing { start: i, end: j });
        }
        i = j + 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ColumnLadder {
    pub column: usize,
    pub landings: Vec<Landing>,
    /// One less than the number of landings (0 when there are none).
    pub p: usize,
    /// End of the last landing (0 when there are none).
    pub d: usize,
    /// `(b_j, c_j)` for `j = 1..=p`: `b_j = e_{j-1}`, `c_j = s_j - e_{j-1}`.
    pub torsion: Vec<(usize, usize)>,
}

impl ColumnLadder {
    /// One landing starting at row 0, or no landings at all (column 0).
    pub fn is_free_shaped(&self) -> bool {
        match self.landings.as_slice() {
            [] => true,
            [only] => only.start == 0,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LadderAnalysis {
    pub columns: Vec<ColumnLadder>,
}

impl LadderAnalysis {
    pub fn true_landings(&self) -> impl Iterator<Item = (usize, &Landing)> {
        self.columns.iter().flat_map(|c| {
            c.landings
                .iter()
                .filter(|l| l.is_true())
                .map(move |l| (c.column, l))
        })
    }

    pub fn is_free(&self) -> bool {
        self.true_landings().next().is_none()
    }
}

pub fn landings(table: &AperyTable) -> LadderAnalysis {
    let columns = (0..table.a as usize)
        .map(|n| {
            let landings = ladder_landings(&table.ladder(n));
            let p = landings.len().saturating_sub(1);
            let d = landings.last().map_or(0, |l| l.end);
            let torsion = landings
                .windows(2)
                .map(|w| (w[0].end, w[1].start - w[0].end))
                .collect();
            ColumnLadder {
                column: n,
                landings,
                p,
                d,
                torsion,
            }
        })
        .collect();
    LadderAnalysis { columns }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_table() {
        let t = apery_table(&ArithmeticSeed::gamma5(11, 2).unwrap()).unwrap();
        assert_eq!(t.top, 3);
        assert_eq!(
            t.rows,
            vec![
                vec![0, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75],
                vec![11, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75],
                vec![22, 35, 48, 50, 63, 87, 67, 80, 104, 95, 86],
                vec![33, 46, 59, 61, 74, 87, 78, 91, 104, 106, 97],
            ]
        );
        assert_eq!(t.guard[8], 115);
        assert_eq!(
            t.to_csv().lines().next().unwrap(),
            "0,24,48,39,63,87,56,80,104,95,75"
        );
    }

    #[test]
    fn entries_stay_while_their_order_allows() {
        // 80 = s2 + s4 has order 2 and 87 = 2 s2 + s3 has order 3, so
        // neither moves before the row after its order.
        let t = apery_table(&ArithmeticSeed::gamma5(11, 2).unwrap()).unwrap();
        assert_eq!((t.orders[7], t.orders[5]), (2, 3));
        assert_eq!(t.column(7), vec![80, 80, 80, 91]);
        assert_eq!(t.column(5), vec![87, 87, 87, 87]);
        assert_eq!(t.guard[5], 98);
    }

    #[test]
    fn landing_examples() {
        let t = apery_table(&ArithmeticSeed::gamma5(11, 2).unwrap()).unwrap();
        let l = landings(&t);
        let c104 = &l.columns[8];
        assert_eq!(c104.landings, vec![Landing { start: 0, end: 3 }]);
        assert_eq!((c104.p, c104.d), (0, 3));
        let c48 = &l.columns[2];
        assert_eq!(c48.landings, vec![Landing { start: 0, end: 2 }]);
        assert_eq!(c48.d, 2);
        let c0 = &l.columns[0];
        assert!(c0.landings.is_empty());
        assert_eq!((c0.p, c0.d), (0, 0));
        assert!(l.is_free());
    }

    #[test]
    fn landings_of_a_ladder() {
        assert_eq!(
            ladder_landings(&[1, 1, 2, 3, 3, 3, 4]),
            vec![Landing { start: 0, end: 1 }, Landing { start: 3, end: 5 }]
        );
        assert!(ladder_landings(&[1, 2, 3]).is_empty());
        assert_eq!(ladder_landings(&[5, 5]), vec![Landing { start: 0, end: 1 }]);
    }

    #[test]
    fn torsion_from_true_landing() {
        // a ladder that stays, climbs twice, then stays again
        let t = AperyTable {
            a: 2,
            top: 4,
            rows: vec![vec![0, 7], vec![2, 7], vec![4, 9], vec![6, 11], vec![8, 11]],
            guard: vec![10, 13],
            orders: vec![0, 1],
        };
        let l = landings(&t);
        let c = &l.columns[1];
        assert_eq!(c.p, 1);
        assert_eq!(c.d, 4);
        assert_eq!(c.torsion, vec![(1, 2)]);
        assert!(!c.is_free_shaped());
        assert!(!l.is_free());
    }
}
