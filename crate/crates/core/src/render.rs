//! Plain-text drawings: hives as pyramids, t-arrays as reversed pyramids and
//! tableaux as indented rows.

use crate::tableaux::SkewTableau;
use crate::types::{Entry, HArray, TArray};

/// Lays out rows of a triangle on a grid of half-cells. `row_offsets[r]` is the
/// indentation of row `r` in half-cells; neighbouring entries are two half-cells apart.
fn triangle(rows: &[&[Entry]], row_offsets: &[usize]) -> String {
    let width = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let half = width / 2 + 1;
    let mut out = String::new();
    for (row, &offset) in rows.iter().zip(row_offsets) {
        let mut line = " ".repeat(offset * half);
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                line.push_str(&" ".repeat(2 * half - width));
            }
            line.push_str(&format!("{v:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// `h_{0,0}` at the apex, row `b` holding `h_{0,b} .. h_{b,b}` from left to right.
pub fn render_hive(h: &HArray) -> String {
    let n = h.n();
    let rows: Vec<&[Entry]> = h.rows().iter().map(Vec::as_slice).collect();
    let offsets: Vec<usize> = (0..=n).map(|b| n - b).collect();
    triangle(&rows, &offsets)
}

/// The type row on top, row 1 at the bottom; entries decrease along both diagonals.
pub fn render_tarray(t: &TArray) -> String {
    let n = t.n();
    let rows: Vec<&[Entry]> = t.rows().iter().rev().map(Vec::as_slice).collect();
    let offsets: Vec<usize> = (0..n).collect();
    triangle(&rows, &offsets)
}

/// Rows of the tableau from the top, each shifted right by the inner shape.
pub fn render_tableau(y: &SkewTableau) -> String {
    let width = y.n().to_string().len();
    let inner = y.shape().inner();
    let mut out = String::new();
    for (j, row) in y.rows().iter().enumerate() {
        let indent = inner.part(j + 1) as usize * (width + 1);
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let line = format!("{}{}", " ".repeat(indent), cells.join(" "));
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::DominantWeight;

    #[test]
    fn hive_pyramid() {
        let h = HArray::from_rows(vec![vec![0], vec![5, 11], vec![8, 15, 18]]).unwrap();
        let expected = concat!("     0\n", "   5  11\n", " 8  15  18\n",);
        assert_eq!(render_hive(&h), expected);
    }

    #[test]
    fn tarray_reversed_pyramid() {
        let t = TArray::from_rows(vec![vec![6], vec![7, 3], vec![7, 4, 3]]).unwrap();
        assert_eq!(render_tarray(&t), "7 4 3\n 7 3\n  6\n");
    }

    #[test]
    fn tableau_rows() {
        let inner = DominantWeight::polynomial(vec![2, 1, 0]).unwrap();
        let y = SkewTableau::from_row_entries(inner, &[vec![1, 1], vec![1, 2], vec![2]]).unwrap();
        assert_eq!(render_tableau(&y), "    1 1\n  1 2\n2\n");
    }
}
