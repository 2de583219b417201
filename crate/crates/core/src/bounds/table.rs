//! The two published bound grids (rows 3..=13, degrees 3..=11) with text
//! and CSV emitters, plus the published attainability markup as metadata.

use super::{ac_upper_bound, BoundConstraint};
use std::fmt::Write as _;

/// Published attainability status of a table entry. This is metadata as
/// printed in the source tables; the library does not decide open cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attainability {
    Attained,
    Unattainable,
    Open,
}

const DEGREES: std::ops::RangeInclusive<usize> = 3..=11;
const ROWS: std::ops::RangeInclusive<usize> = 3..=13;

// One char per degree column 3..=11: A = attained, U = unattainable, O = open.
const GIRTH_STATUS: [&str; 11] = [
    "AAAAAAAAA", // g=3
    "AAAAAAAAA", // g=4
    "AUUUUUUUU", // g=5
    "AAAAUAAAO", // g=6
    "UUUUUUUUU", // g=7
    "AOOOOOOOO", // g=8
    "UUUUUUUUU", // g=9
    "UUUUUUUUU", // g=10
    "UUUUUUUUU", // g=11
    "AOOOOOOOO", // g=12
    "UUUUUUUUU", // g=13
];

const DIAMETER_STATUS: [&str; 11] = [
    "AAAAAAAAA", // D=3
    "AAAAAAAAO", // D=4
    "AAOOOOOOO", // D=5
    "AOOOOOOOO", // D=6
    "AOOOOOOOO", // D=7
    "AOOOOOOOO", // D=8
    "AOOOOOOOO", // D=9
    "OOOOOOOOO", // D=10
    "OOOOOOOOO", // D=11
    "OOOOOOOOO", // D=12
    "OOOOOOOOO", // D=13
];

/// One of the two bound grids: rows are diameters or girths 3..=13,
/// columns are degrees 3..=11.
#[derive(Debug, Clone)]
pub struct BoundTable {
    pub is_diameter: bool,
    pub rows: Vec<usize>,
    pub degrees: Vec<usize>,
    pub values: Vec<Vec<f64>>,
}

impl BoundTable {
    pub fn value(&self, row: usize, degree: usize) -> Option<f64> {
        let i = self.rows.iter().position(|&r| r == row)?;
        let j = self.degrees.iter().position(|&d| d == degree)?;
        Some(self.values[i][j])
    }

    fn row_label(&self) -> &'static str {
        if self.is_diameter {
            "D"
        } else {
            "g"
        }
    }

    /// Aligned text grid, 4 decimals per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let what = if self.is_diameter { "diameter" } else { "girth" };
        let _ = writeln!(out, "Upper bound for AC in terms of {what}");
        let _ = write!(out, "{:>4}", format!("{}\\d", self.row_label()));
        for d in &self.degrees {
            let _ = write!(out, "{d:>9}");
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "{row:>4}");
            for v in &self.values[i] {
                let _ = write!(out, "{v:>9.4}");
            }
            out.push('\n');
        }
        out
    }

    /// CSV with a `row/d` header column.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{}/d", self.row_label());
        for d in &self.degrees {
            let _ = write!(out, ",{d}");
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "{row}");
            for v in &self.values[i] {
                let _ = write!(out, ",{v:.4}");
            }
            out.push('\n');
        }
        out
    }
}

fn build(is_diameter: bool) -> BoundTable {
    let rows: Vec<usize> = ROWS.collect();
    let degrees: Vec<usize> = DEGREES.collect();
    let values = rows
        .iter()
        .map(|&row| {
            degrees
                .iter()
                .map(|&d| {
                    let c = if is_diameter {
                        BoundConstraint::diameter(d, row)
                    } else {
                        BoundConstraint::girth(d, row)
                    };
                    ac_upper_bound(&c.expect("in-range constraint"))
                        .expect("table entries computable")
                        .lambda
                })
                .collect()
        })
        .collect();
    BoundTable {
        is_diameter,
        rows,
        degrees,
        values,
    }
}

/// The diameter grid (rows D = 3..=13, degrees 3..=11).
pub fn diameter_table() -> BoundTable {
    build(true)
}

/// The girth grid (rows g = 3..=13, degrees 3..=11).
pub fn girth_table() -> BoundTable {
    build(false)
}

/// Published attainability markup for a grid entry, `None` outside the
/// printed range.
pub fn attainability(is_diameter: bool, row: usize, degree: usize) -> Option<Attainability> {
    if !ROWS.contains(&row) || !DEGREES.contains(&degree) {
        return None;
    }
    let grid = if is_diameter { &DIAMETER_STATUS } else { &GIRTH_STATUS };
    let ch = grid[row - 3].as_bytes()[degree - 3];
    Some(match ch {
        b'A' => Attainability::Attained,
        b'U' => Attainability::Unattainable,
        _ => Attainability::Open,
    })
}
