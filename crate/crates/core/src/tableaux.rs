//! Skew semistandard tableaux stored as (shape, content matrix).
//!
//! `a[i][j]` counts the entries `i` in row `j`. With the convention that rows
//! weakly increase left to right, the matrix and the inner shape determine the
//! filling, so no cell grid is ever stored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gt::is_gt_pattern;
use crate::types::{DominantWeight, Entry, Shape, TArray};

/// Conditions on raw content matrices. These take arbitrary integer matrices so
/// that they can be evaluated on perturbed data as well as on valid tableaux.
pub mod symbolic {
    use crate::types::Entry;

    /// Prefix sum `sum_{k=1}^{upto} a_{k,col}` (1-based, `upto` may be 0).
    fn column_prefix(a: &[Vec<Entry>], col: usize, upto: usize) -> Entry {
        (1..=upto).map(|k| a[k - 1][col - 1]).sum()
    }

    /// `sum_{k=1}^{upto} a_{row,k}`.
    fn row_prefix(a: &[Vec<Entry>], row: usize, upto: usize) -> Entry {
        (1..=upto).map(|k| a[row - 1][k - 1]).sum()
    }

    /// First `(l, m)` violating
    /// `inner_{m+1} + sum_{k<=l} a_{k,m+1} <= inner_m + sum_{k<=l-1} a_{k,m}`.
    pub fn semistandard_violation(inner: &[Entry], a: &[Vec<Entry>]) -> Option<(usize, usize)> {
        let n = a.len();
        for m in 1..n {
            for l in 1..=n {
                let lhs = inner[m] + column_prefix(a, m + 1, l);
                let rhs = inner[m - 1] + column_prefix(a, m, l - 1);
                if lhs > rhs {
                    return Some((l, m));
                }
            }
        }
        None
    }

    /// First `(i, j)` violating `sum_{k<=j} a_{i+1,k} <= sum_{k<=j-1} a_{i,k}`.
    pub fn yamanouchi_violation(a: &[Vec<Entry>]) -> Option<(usize, usize)> {
        let n = a.len();
        for i in 1..n {
            for j in 1..=n {
                if row_prefix(a, i + 1, j) > row_prefix(a, i, j - 1) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_semistandard(inner: &[Entry], a: &[Vec<Entry>]) -> bool {
        semistandard_violation(inner, a).is_none()
    }

    pub fn is_yamanouchi(a: &[Vec<Entry>]) -> bool {
        yamanouchi_violation(a).is_none()
    }

    pub fn is_nonnegative(a: &[Vec<Entry>]) -> bool {
        a.iter().flatten().all(|&v| v >= 0)
    }

    pub fn transpose(a: &[Vec<Entry>]) -> Vec<Vec<Entry>> {
        let n = a.len();
        (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
    }
}

/// Square matrix of non-negative counts, `a[i][j]` = number of `i`'s in row `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Entry>>", into = "Vec<Vec<Entry>>")]
pub struct ContentMatrix {
    a: Vec<Vec<Entry>>,
}

impl TryFrom<Vec<Vec<Entry>>> for ContentMatrix {
    type Error = Error;

    fn try_from(a: Vec<Vec<Entry>>) -> Result<Self> {
        ContentMatrix::new(a)
    }
}

impl From<ContentMatrix> for Vec<Vec<Entry>> {
    fn from(m: ContentMatrix) -> Self {
        m.a
    }
}

impl ContentMatrix {
    pub fn new(a: Vec<Vec<Entry>>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::Invariant(
                "content matrix must be at least 1x1".into(),
            ));
        }
        if let Some(r) = a.iter().position(|row| row.len() != n) {
            return Err(Error::Invariant(format!(
                "content matrix must be {n}x{n}; row {} has {} entries",
                r + 1,
                a[r].len()
            )));
        }
        for (i, row) in a.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v < 0) {
                return Err(Error::Invariant(format!(
                    "content matrix entry a[{}][{}] = {} is negative",
                    i + 1,
                    j + 1,
                    row[j]
                )));
            }
        }
        Ok(ContentMatrix { a })
    }

    pub fn zero(n: usize) -> Self {
        ContentMatrix {
            a: vec![vec![0; n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// `a_{i,j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.a[i - 1][j - 1]
    }

    pub fn as_rows(&self) -> &[Vec<Entry>] {
        &self.a
    }

    pub fn transpose(&self) -> ContentMatrix {
        ContentMatrix {
            a: symbolic::transpose(&self.a),
        }
    }
}

/// A filling of `outer / inner` with entries `1..=n`, rows weakly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct SkewTableau {
    shape: Shape,
    matrix: ContentMatrix,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: Shape,
    matrix: ContentMatrix,
}

impl TryFrom<RawTableau> for SkewTableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        SkewTableau::new(raw.shape, raw.matrix)
    }
}

impl From<SkewTableau> for RawTableau {
    fn from(t: SkewTableau) -> Self {
        RawTableau {
            shape: t.shape,
            matrix: t.matrix,
        }
    }
}

impl SkewTableau {
    /// Requires a contained shape and `inner_j + sum_i a[i][j] = outer_j` for every row.
    pub fn new(shape: Shape, matrix: ContentMatrix) -> Result<Self> {
        if shape.n() != matrix.n() {
            return Err(Error::RankMismatch {
                expected: shape.n(),
                found: matrix.n(),
            });
        }
        if !shape.is_contained() {
            return Err(Error::Invariant(format!(
                "inner shape {:?} is not contained in {:?}",
                shape.inner().parts(),
                shape.outer().parts()
            )));
        }
        let n = shape.n();
        for j in 1..=n {
            let filled: Entry = (1..=n).map(|i| matrix.get(i, j)).sum();
            if filled != shape.row_length(j) {
                return Err(Error::Invariant(format!(
                    "row {j} holds {filled} entries but the shape leaves {} boxes",
                    shape.row_length(j)
                )));
            }
        }
        Ok(SkewTableau { shape, matrix })
    }

    /// Builds from explicit row contents (entries in any order, 1-based values),
    /// e.g. `[[1,1,2],[2,3],[3]]` for a straight tableau.
    pub fn from_row_entries(inner: DominantWeight, rows: &[Vec<usize>]) -> Result<Self> {
        let n = inner.n();
        if rows.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let mut a = vec![vec![0; n]; n];
        let mut outer = Vec::with_capacity(n);
        for (j, row) in rows.iter().enumerate() {
            for &v in row {
                if v == 0 || v > n {
                    return Err(Error::Domain(format!("entry {v} outside 1..={n}")));
                }
                a[v - 1][j] += 1;
            }
            outer.push(inner.part(j + 1) + row.len() as Entry);
        }
        let shape = Shape::new(DominantWeight::polynomial(outer)?, inner)?;
        SkewTableau::new(shape, ContentMatrix::new(a)?)
    }

    /// The empty filling of `inner / inner`.
    pub fn empty(inner: DominantWeight) -> Result<Self> {
        let n = inner.n();
        SkewTableau::new(Shape::new(inner.clone(), inner)?, ContentMatrix::zero(n))
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn matrix(&self) -> &ContentMatrix {
        &self.matrix
    }

    /// Canonical rows, top row first; each row lists its entries in weakly increasing order.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (1..=n)
            .map(|j| {
                (1..=n)
                    .flat_map(|i| std::iter::repeat_n(i, self.matrix.get(i, j) as usize))
                    .collect()
            })
            .collect()
    }

    pub fn is_semistandard(&self) -> bool {
        symbolic::is_semistandard(self.shape.inner().parts(), self.matrix.as_rows())
    }

    pub fn is_yamanouchi_symbolic(&self) -> bool {
        symbolic::is_yamanouchi(self.matrix.as_rows())
    }

    pub fn is_lr_tableau(&self) -> bool {
        self.is_semistandard() && self.is_yamanouchi_symbolic()
    }

    /// `nu_k = sum_j a[k][j]`.
    pub fn content(&self) -> Vec<Entry> {
        self.matrix
            .as_rows()
            .iter()
            .map(|r| r.iter().sum())
            .collect()
    }

    /// Rows read left to right, bottom row first.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        self.rows().into_iter().rev().flatten().collect()
    }
}

pub fn is_semistandard(y: &SkewTableau) -> bool {
    y.is_semistandard()
}

pub fn is_yamanouchi_symbolic(y: &SkewTableau) -> bool {
    y.is_yamanouchi_symbolic()
}

pub fn is_lr_tableau(y: &SkewTableau) -> bool {
    y.is_lr_tableau()
}

pub fn content_of(y: &SkewTableau) -> Vec<Entry> {
    y.content()
}

pub fn reverse_reading_word(y: &SkewTableau) -> Vec<usize> {
    y.reverse_reading_word()
}

/// Reading the word `x_1 ... x_r` backwards, every suffix `x_r ... x_s` holds at
/// least as many `a`'s as `(a+1)`'s.
pub fn is_yamanouchi_word(w: &[usize]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 2];
    for &x in w.iter().rev() {
        if x == 0 {
            return false;
        }
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// `t_j^(i) = sum_{k=j}^{i} a_{k,j}` for a straight semistandard tableau.
pub fn tableau_to_gt(y: &SkewTableau) -> Result<TArray> {
    if !y.shape().is_straight() {
        return Err(Error::Precondition(
            "tableau_to_gt needs a straight shape (inner = 0)".into(),
        ));
    }
    if !y.is_semistandard() {
        return Err(Error::Precondition("tableau is not semistandard".into()));
    }
    let m = y.matrix();
    Ok(TArray::from_fn(y.n(), |i, j| {
        (j..=i).map(|k| m.get(k, j)).sum()
    }))
}

/// Inverse of [`tableau_to_gt`]: `a_{i,j} = t_j^(i) - t_j^(i-1)` with `t_j^(i) = 0` for `j > i`.
pub fn gt_to_tableau(t: &TArray) -> Result<SkewTableau> {
    if !is_gt_pattern(t) {
        return Err(Error::Precondition("t-array is not a GT pattern".into()));
    }
    if let Some(v) = t.entries().find(|&v| v < 0) {
        return Err(Error::Domain(format!(
            "GT pattern has negative entry {v}; tableaux need non-negative patterns"
        )));
    }
    let shape = Shape::straight(DominantWeight::polynomial(t.type_row().to_vec())?)?;
    SkewTableau::new(shape, ContentMatrix::new(pattern_content_matrix(t))?)
}

/// `a_{i,j} = t_j^(i) - t_j^(i-1)` (with `t_j^(i) = 0` for `j > i`) on any t-array.
///
/// IC(1) of `t` is exactly `a_{i,j} >= 0` for `i > j`, and IC(2) is exactly the
/// straight-shape semistandard condition on this matrix.
pub fn pattern_content_matrix(t: &TArray) -> Vec<Vec<Entry>> {
    let n = t.n();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| t.get_or_zero(i, j) - t.get_or_zero(i - 1, j))
                .collect()
        })
        .collect()
}

/// Rows `n..=2n` of the `GL_2n` pattern attached to a skew tableau.
/// `rows()[k]` is row `n + k` and has `n + k` entries; the bottom row is the inner
/// shape and the top row is `(outer, 0^n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedPattern {
    n: usize,
    rows: Vec<Vec<Entry>>,
}

impl TruncatedPattern {
    pub fn from_rows(n: usize, rows: Vec<Vec<Entry>>) -> Result<Self> {
        if n == 0 || rows.len() != n + 1 {
            return Err(Error::Invariant(format!(
                "truncated pattern for n={n} needs {} rows, found {}",
                n + 1,
                rows.len()
            )));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n + k {
                return Err(Error::Invariant(format!(
                    "truncated pattern row {} must have {} entries, found {}",
                    n + k,
                    n + k,
                    row.len()
                )));
            }
        }
        Ok(TruncatedPattern { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `t_j^(level)` for `n <= level <= 2n`, `1 <= j <= level`.
    pub fn get(&self, level: usize, j: usize) -> Entry {
        self.rows[level - self.n][j - 1]
    }

    /// Bottom-up: row n first.
    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    /// Top-down, as the pattern is usually drawn.
    pub fn rows_top_down(&self) -> Vec<Vec<Entry>> {
        self.rows.iter().rev().cloned().collect()
    }

    /// Interlacing between consecutive retained rows.
    pub fn interlacing_violation(&self) -> Option<(usize, usize)> {
        let n = self.n;
        for level in n..2 * n {
            for j in 1..=level {
                let upper_same = self.get(level + 1, j);
                let upper_next = self.get(level + 1, j + 1);
                let v = self.get(level, j);
                if !(upper_same >= v && v >= upper_next) {
                    return Some((level, j));
                }
            }
        }
        None
    }
}

/// Replaces entry `i` by `n+i` and fills the inner boxes of row `l` with `l`, then
/// records the successive shapes. Row `n+k` holds `inner_j + sum_{i<=k} a_{i,j}` for
/// `j <= n` and zeros beyond.
pub fn skew_to_truncated_gt(y: &SkewTableau) -> Result<TruncatedPattern> {
    if !y.is_semistandard() {
        return Err(Error::Precondition("tableau is not semistandard".into()));
    }
    let n = y.n();
    let inner = y.shape().inner();
    let m = y.matrix();
    let rows = (0..=n)
        .map(|k| {
            (1..=n + k)
                .map(|j| {
                    if j > n {
                        0
                    } else {
                        inner.part(j) + (1..=k).map(|i| m.get(i, j)).sum::<Entry>()
                    }
                })
                .collect()
        })
        .collect();
    TruncatedPattern::from_rows(n, rows)
}

/// Inverse of [`skew_to_truncated_gt`].
pub fn truncated_gt_to_skew(f: &TruncatedPattern, inner: &DominantWeight) -> Result<SkewTableau> {
    let n = f.n();
    if inner.n() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: inner.n(),
        });
    }
    if f.rows()[0] != inner.parts() {
        return Err(Error::Domain(format!(
            "bottom row {:?} differs from inner shape {:?}",
            f.rows()[0],
            inner.parts()
        )));
    }
    if let Some((level, j)) = f.interlacing_violation() {
        return Err(Error::Domain(format!(
            "truncated pattern fails interlacing between rows {level} and {} at position {j}",
            level + 1
        )));
    }
    let top = &f.rows()[n];
    if top[n..].iter().any(|&v| v != 0) {
        return Err(Error::Domain(
            "top row must vanish beyond position n".into(),
        ));
    }
    let outer = DominantWeight::polynomial(top[..n].to_vec())?;
    let a: Vec<Vec<Entry>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| f.get(n + i, j) - f.get(n + i - 1, j))
                .collect()
        })
        .collect();
    let y = SkewTableau::new(Shape::new(outer, inner.clone())?, ContentMatrix::new(a)?)?;
    debug_assert!(y.is_semistandard());
    Ok(y)
}

/// The straight tableau with transposed content matrix, `a_{i,j}(Y^c) = a_{j,i}(Y)`.
/// Its shape is the content of `Y`; the call fails when that is not a partition.
pub fn companion(y: &SkewTableau) -> Result<SkewTableau> {
    let content = y.content();
    let shape_wt = DominantWeight::polynomial(content.clone()).map_err(|_| {
        Error::Domain(format!(
            "companion would have row lengths {content:?}, which are not weakly decreasing"
        ))
    })?;
    SkewTableau::new(Shape::straight(shape_wt)?, y.matrix().transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[Entry]) -> DominantWeight {
        DominantWeight::polynomial(p.to_vec()).unwrap()
    }

    /// The LR tableau of shape (11,7,5,3)/(5,3,1,0) and content (7,5,3,2).
    fn golden_tableau() -> SkewTableau {
        let shape = Shape::new(w(&[11, 7, 5, 3]), w(&[5, 3, 1, 0])).unwrap();
        let m = ContentMatrix::new(vec![
            vec![6, 1, 0, 0],
            vec![0, 3, 1, 1],
            vec![0, 0, 3, 0],
            vec![0, 0, 0, 2],
        ])
        .unwrap();
        SkewTableau::new(shape, m).unwrap()
    }

    fn small_straight() -> SkewTableau {
        SkewTableau::from_row_entries(w(&[0, 0, 0]), &[vec![1, 1, 2], vec![2, 3], vec![3]]).unwrap()
    }

    #[test]
    fn semistandard_examples() {
        assert!(golden_tableau().is_semistandard());
        assert!(SkewTableau::empty(w(&[3, 1, 0])).unwrap().is_semistandard());
        let col = SkewTableau::from_row_entries(w(&[0, 0]), &[vec![1], vec![1]]).unwrap();
        assert!(!col.is_semistandard());
    }

    #[test]
    fn reading_words() {
        let word: String = golden_tableau()
            .reverse_reading_word()
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(word, "24423331222111111");
        assert!(SkewTableau::empty(w(&[2, 0]))
            .unwrap()
            .reverse_reading_word()
            .is_empty());
        let one_row =
            SkewTableau::from_row_entries(w(&[0, 0, 0]), &[vec![2, 1, 1], vec![], vec![]]).unwrap();
        assert_eq!(one_row.reverse_reading_word(), vec![1, 1, 2]);
    }

    #[test]
    fn yamanouchi_examples() {
        let word: Vec<usize> = "24423331222111111"
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        assert!(is_yamanouchi_word(&word));
        assert!(is_yamanouchi_word(&[]));
        assert!(!is_yamanouchi_word(&[2]));
        assert!(golden_tableau().is_yamanouchi_symbolic());
        let mut a = vec![vec![0; 3]; 3];
        a[1][0] = 1;
        assert!(!symbolic::is_yamanouchi(&a));
        assert!(symbolic::is_yamanouchi(&vec![vec![0; 3]; 3]));
    }

    #[test]
    fn lr_predicate() {
        assert!(golden_tableau().is_lr_tableau());
        assert!(SkewTableau::empty(w(&[2, 1])).unwrap().is_lr_tableau());
        let col = SkewTableau::from_row_entries(w(&[0, 0]), &[vec![1], vec![1]]).unwrap();
        assert!(!col.is_lr_tableau());
    }

    #[test]
    fn content_examples() {
        assert_eq!(golden_tableau().content(), vec![7, 5, 3, 2]);
        assert_eq!(
            SkewTableau::empty(w(&[1, 0])).unwrap().content(),
            vec![0, 0]
        );
        assert_eq!(
            companion(&golden_tableau()).unwrap().content(),
            vec![6, 4, 4, 3]
        );
    }

    #[test]
    fn straight_tableau_and_gt() {
        // successive shapes of 112/23/3: (2), (3,1), (3,2,1)
        let t = tableau_to_gt(&small_straight()).unwrap();
        assert_eq!(t.rows(), &[vec![2], vec![3, 1], vec![3, 2, 1]]);
        assert_eq!(t.weight(), small_straight().content());
        assert_eq!(gt_to_tableau(&t).unwrap(), small_straight());

        let e = SkewTableau::empty(w(&[0, 0, 0])).unwrap();
        assert_eq!(tableau_to_gt(&e).unwrap(), TArray::zero(3));
        assert_eq!(gt_to_tableau(&TArray::zero(3)).unwrap(), e);

        let yc = companion(&golden_tableau()).unwrap();
        let tyc = tableau_to_gt(&yc).unwrap();
        assert_eq!(
            tyc.rows(),
            &[vec![6], vec![7, 3], vec![7, 4, 3], vec![7, 5, 3, 2]]
        );
        assert_eq!(gt_to_tableau(&tyc).unwrap(), yc);
        assert_eq!(tyc.weight(), yc.content());

        assert!(matches!(
            tableau_to_gt(&golden_tableau()),
            Err(Error::Precondition(_))
        ));
        let neg = TArray::from_fn(2, |_, _| -1);
        assert!(matches!(gt_to_tableau(&neg), Err(Error::Domain(_))));
    }

    #[test]
    fn truncated_pattern_of_golden_tableau() {
        let f = skew_to_truncated_gt(&golden_tableau()).unwrap();
        assert_eq!(
            f.rows_top_down(),
            vec![
                vec![11, 7, 5, 3, 0, 0, 0, 0],
                vec![11, 7, 5, 1, 0, 0, 0],
                vec![11, 7, 2, 1, 0, 0],
                vec![11, 4, 1, 0, 0],
                vec![5, 3, 1, 0],
            ]
        );
        assert_eq!(
            truncated_gt_to_skew(&f, &w(&[5, 3, 1, 0])).unwrap(),
            golden_tableau()
        );

        let mu = w(&[3, 1, 0]);
        let e = SkewTableau::empty(mu.clone()).unwrap();
        let fe = skew_to_truncated_gt(&e).unwrap();
        for (k, row) in fe.rows().iter().enumerate() {
            let mut expect = mu.parts().to_vec();
            expect.extend(std::iter::repeat_n(0, k));
            assert_eq!(row, &expect);
        }
        assert_eq!(truncated_gt_to_skew(&fe, &mu).unwrap(), e);
    }

    #[test]
    fn truncated_inverse_rejects_bad_patterns() {
        let f = skew_to_truncated_gt(&golden_tableau()).unwrap();
        let mut rows = f.rows().to_vec();
        rows[1][1] = 9; // 11,9,1,0,0 breaks interlacing with row n+2
        let bad = TruncatedPattern::from_rows(4, rows).unwrap();
        assert!(matches!(
            truncated_gt_to_skew(&bad, &w(&[5, 3, 1, 0])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            truncated_gt_to_skew(&f, &w(&[5, 3, 0, 0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn companion_example() {
        let yc = companion(&golden_tableau()).unwrap();
        assert_eq!(yc.shape().outer().parts(), &[7, 5, 3, 2]);
        assert_eq!(
            yc.rows(),
            vec![
                vec![1, 1, 1, 1, 1, 1, 2],
                vec![2, 2, 2, 3, 4],
                vec![3, 3, 3],
                vec![4, 4]
            ]
        );
        let e = SkewTableau::empty(w(&[0, 0])).unwrap();
        assert_eq!(companion(&e).unwrap(), e);
        // content (1,2) is not a partition
        let y = SkewTableau::from_row_entries(w(&[0, 0]), &[vec![1, 2], vec![2]]).unwrap();
        assert!(matches!(companion(&y), Err(Error::Domain(_))));
    }

    #[test]
    fn tableau_json_round_trip() {
        let y = golden_tableau();
        let s = serde_json::to_string(&y).unwrap();
        assert!(s.starts_with(r#"{"shape":{"n":4,"outer":[11,7,5,3],"inner":[5,3,1,0]},"matrix":"#));
        let back: SkewTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, y);
        let bad = r#"{"shape":{"n":1,"outer":[2],"inner":[0]},"matrix":[[1]]}"#;
        assert!(serde_json::from_str::<SkewTableau>(bad).is_err());
    }
}
