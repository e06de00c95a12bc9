//! Value types shared by every model: dominant weights, triangular arrays and skew shapes.
//!
//! All objects carry their rank `n` explicitly. Nothing is padded implicitly: a
//! weight with trailing zeros must be written out in full.
//!
//! Indices in the public accessors follow the mathematical convention. For a
//! [`TArray`] the entry `t_j^(i)` lives at `get(i, j)` with `1 <= j <= i <= n`;
//! for an [`HArray`] the entry `h_{a,b}` lives at `get(a, b)` with `0 <= a <= b <= n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer entry type. Constructors that form partial sums use checked arithmetic.
pub type Entry = i64;

pub(crate) fn checked_sum<'a>(values: impl IntoIterator<Item = &'a Entry>) -> Result<Entry> {
    values
        .into_iter()
        .try_fold(0 as Entry, |acc, &v| acc.checked_add(v))
        .ok_or(Error::Overflow("a partial sum"))
}

/// Prefix sums `[0, w1, w1+w2, ...]` of length `len + 1`.
pub(crate) fn prefix_sums(parts: &[Entry]) -> Result<Vec<Entry>> {
    let mut out = Vec::with_capacity(parts.len() + 1);
    let mut acc: Entry = 0;
    out.push(acc);
    for &p in parts {
        acc = acc.checked_add(p).ok_or(Error::Overflow("a prefix sum"))?;
        out.push(acc);
    }
    Ok(out)
}

/// A weakly decreasing integer sequence of fixed length `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWeight", into = "RawWeight")]
pub struct DominantWeight {
    parts: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
struct RawWeight {
    n: usize,
    parts: Vec<Entry>,
}

impl TryFrom<RawWeight> for DominantWeight {
    type Error = Error;

    fn try_from(raw: RawWeight) -> Result<Self> {
        if raw.parts.len() != raw.n {
            return Err(Error::Invariant(format!(
                "weight has {} parts but n={}",
                raw.parts.len(),
                raw.n
            )));
        }
        DominantWeight::new(raw.parts)
    }
}

impl From<DominantWeight> for RawWeight {
    fn from(w: DominantWeight) -> Self {
        RawWeight {
            n: w.parts.len(),
            parts: w.parts,
        }
    }
}

impl DominantWeight {
    /// Any weakly decreasing sequence; entries may be negative.
    pub fn new(parts: Vec<Entry>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invariant("weight must have rank n >= 1".into()));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Invariant(format!(
                "weight {parts:?} is not weakly decreasing at position {}",
                i + 1
            )));
        }
        Ok(DominantWeight { parts })
    }

    /// A weakly decreasing sequence with non-negative entries (a partition padded to length n).
    pub fn polynomial(parts: Vec<Entry>) -> Result<Self> {
        let w = Self::new(parts)?;
        if !w.is_polynomial() {
            return Err(Error::Invariant(format!(
                "polynomial weight {:?} has a negative part",
                w.parts
            )));
        }
        Ok(w)
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        DominantWeight { parts: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Entry] {
        &self.parts
    }

    /// 1-based access, matching the usual `w_i` notation.
    pub fn part(&self, i: usize) -> Entry {
        self.parts[i - 1]
    }

    pub fn is_polynomial(&self) -> bool {
        self.parts.last().is_none_or(|&p| p >= 0)
    }

    pub fn size(&self) -> Result<Entry> {
        checked_sum(&self.parts)
    }

    /// `w* = (-w_n, ..., -w_1)`.
    pub fn dual(&self) -> DominantWeight {
        DominantWeight {
            parts: self.parts.iter().rev().map(|&p| -p).collect(),
        }
    }

    /// Containment of Young diagrams: `other[i] <= self[i]` for every i.
    pub fn contains(&self, other: &DominantWeight) -> bool {
        self.n() == other.n() && self.parts.iter().zip(&other.parts).all(|(a, b)| b <= a)
    }
}

/// `dual_weight(w) = (-w_n, ..., -w_1)`.
pub fn dual_weight(w: &DominantWeight) -> DominantWeight {
    w.dual()
}

/// Triangular array `(t_j^(i))`, `1 <= j <= i <= n`. Rows are stored bottom-up:
/// `rows[0]` is the single-entry row 1 and `rows[n-1]` is the type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawArray", into = "RawArray")]
pub struct TArray {
    rows: Vec<Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
struct RawArray {
    n: usize,
    rows: Vec<Vec<Entry>>,
}

impl TryFrom<RawArray> for TArray {
    type Error = Error;

    fn try_from(raw: RawArray) -> Result<Self> {
        if raw.rows.len() != raw.n {
            return Err(Error::Invariant(format!(
                "t-array has {} rows but n={}",
                raw.rows.len(),
                raw.n
            )));
        }
        TArray::from_rows(raw.rows)
    }
}

impl From<TArray> for RawArray {
    fn from(t: TArray) -> Self {
        RawArray {
            n: t.rows.len(),
            rows: t.rows,
        }
    }
}

impl TArray {
    /// Builds from rows listed bottom-up; row i (1-based) must have exactly i entries.
    pub fn from_rows(rows: Vec<Vec<Entry>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Invariant("t-array must have rank n >= 1".into()));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
                return Err(Error::Invariant(format!(
                    "t-array row {} must have {} entries; row lengths are {lens:?}",
                    k + 1,
                    k + 1
                )));
            }
        }
        Ok(TArray { rows })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    /// `f(i, j)` gives `t_j^(i)` with 1-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Entry) -> Self {
        assert!(n >= 1, "rank must be positive");
        TArray {
            rows: (1..=n)
                .map(|i| (1..=i).map(|j| f(i, j)).collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `t_j^(i)`, 1-based. Panics outside `1 <= j <= i <= n`.
    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.rows[i - 1][j - 1]
    }

    /// `t_j^(i)` with the convention `t_j^(i) = 0` when `i = 0` or `j > i`.
    pub(crate) fn get_or_zero(&self, i: usize, j: usize) -> Entry {
        if i == 0 || j == 0 || j > i {
            0
        } else {
            self.get(i, j)
        }
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> Result<&[Entry]> {
        if k == 0 || k > self.n() {
            return Err(Error::Range(format!(
                "row {k} requested from a t-array with n={}",
                self.n()
            )));
        }
        Ok(&self.rows[k - 1])
    }

    /// The n-th row, not validated as dominant.
    pub fn type_row(&self) -> &[Entry] {
        &self.rows[self.n() - 1]
    }

    /// `w_1 = t_1^(1)`, `w_i = sum t^(i) - sum t^(i-1)`.
    pub fn weight(&self) -> Vec<Entry> {
        let sums: Vec<Entry> = self.rows.iter().map(|r| r.iter().sum()).collect();
        let mut prev = 0;
        sums.into_iter()
            .map(|s| {
                let w = s - prev;
                prev = s;
                w
            })
            .collect()
    }

    /// `s_j^(i) = -t_{i+1-j}^(i)`.
    pub fn dual(&self) -> TArray {
        TArray {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().rev().map(|&v| -v).collect())
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &TArray) -> Result<TArray> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(r, s)| {
                r.iter()
                    .zip(s)
                    .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("an array sum")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TArray { rows })
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().copied()
    }
}

pub fn dual_tarray(t: &TArray) -> TArray {
    t.dual()
}

pub fn row_of(t: &TArray, k: usize) -> Result<Vec<Entry>> {
    t.row(k).map(<[Entry]>::to_vec)
}

pub fn type_of(t: &TArray) -> Vec<Entry> {
    t.type_row().to_vec()
}

pub fn weight_of(t: &TArray) -> Vec<Entry> {
    t.weight()
}

/// Triangular array `(h_{a,b})`, `0 <= a <= b <= n`, with `h_{0,0} = 0`.
/// `rows[b]` holds `h_{0,b}, ..., h_{b,b}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawArray", into = "RawArray")]
pub struct HArray {
    rows: Vec<Vec<Entry>>,
}

impl TryFrom<RawArray> for HArray {
    type Error = Error;

    fn try_from(raw: RawArray) -> Result<Self> {
        if raw.rows.len() != raw.n + 1 {
            return Err(Error::Invariant(format!(
                "h-array has {} rows but n={} requires {}",
                raw.rows.len(),
                raw.n,
                raw.n + 1
            )));
        }
        HArray::from_rows(raw.rows)
    }
}

impl From<HArray> for RawArray {
    fn from(h: HArray) -> Self {
        RawArray {
            n: h.n(),
            rows: h.rows,
        }
    }
}

impl HArray {
    /// Builds from rows `b = 0..=n`; row b must have `b + 1` entries and `h_{0,0}` must be 0.
    pub fn from_rows(rows: Vec<Vec<Entry>>) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::Invariant("h-array must have rank n >= 1".into()));
        }
        for (b, row) in rows.iter().enumerate() {
            if row.len() != b + 1 {
                return Err(Error::Invariant(format!(
                    "h-array row {b} must have {} entries, found {}",
                    b + 1,
                    row.len()
                )));
            }
        }
        if rows[0][0] != 0 {
            return Err(Error::Invariant(format!(
                "h-array requires h[0,0] = 0, found {}",
                rows[0][0]
            )));
        }
        Ok(HArray { rows })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    /// `f(a, b)` gives `h_{a,b}`; the value returned for `(0, 0)` is ignored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Entry) -> Self {
        assert!(n >= 1, "rank must be positive");
        let mut rows: Vec<Vec<Entry>> = (0..=n)
            .map(|b| (0..=b).map(|a| f(a, b)).collect())
            .collect();
        rows[0][0] = 0;
        HArray { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `h_{a,b}`. Panics outside `0 <= a <= b <= n`.
    pub fn get(&self, a: usize, b: usize) -> Entry {
        self.rows[b][a]
    }

    pub(crate) fn set(&mut self, a: usize, b: usize, v: Entry) {
        assert!(a + b > 0, "h[0,0] is fixed to 0");
        self.rows[b][a] = v;
    }

    /// Copy with `h_{a,b}` replaced. `(a, b) = (0, 0)` is rejected.
    pub fn with_entry(&self, a: usize, b: usize, v: Entry) -> Result<HArray> {
        if a > b || b > self.n() {
            return Err(Error::Range(format!(
                "h[{a},{b}] is outside an h-array with n={}",
                self.n()
            )));
        }
        if a == 0 && b == 0 {
            return Err(Error::Invariant("h[0,0] is fixed to 0".into()));
        }
        let mut out = self.clone();
        out.set(a, b, v);
        Ok(out)
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn checked_add(&self, other: &HArray) -> Result<HArray> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(r, s)| {
                r.iter()
                    .zip(s)
                    .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("an array sum")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HArray { rows })
    }

    /// Interior positions `(a, b)` with `0 < a < b < n`, i.e. everything off the three borders.
    pub fn interior_positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (1..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
    }
}

/// Skew shape `outer / inner`. A pair that is not contained is kept as a valid
/// value flagged as empty; every family indexed by it is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShape", into = "RawShape")]
pub struct Shape {
    outer: DominantWeight,
    inner: DominantWeight,
}

#[derive(Serialize, Deserialize)]
struct RawShape {
    n: usize,
    outer: Vec<Entry>,
    inner: Vec<Entry>,
}

impl TryFrom<RawShape> for Shape {
    type Error = Error;

    fn try_from(raw: RawShape) -> Result<Self> {
        if raw.outer.len() != raw.n || raw.inner.len() != raw.n {
            return Err(Error::Invariant(format!(
                "shape with n={} has outer length {} and inner length {}",
                raw.n,
                raw.outer.len(),
                raw.inner.len()
            )));
        }
        Shape::new(
            DominantWeight::polynomial(raw.outer)?,
            DominantWeight::polynomial(raw.inner)?,
        )
    }
}

impl From<Shape> for RawShape {
    fn from(s: Shape) -> Self {
        RawShape {
            n: s.n(),
            outer: s.outer.parts,
            inner: s.inner.parts,
        }
    }
}

impl Shape {
    /// Both weights must be polynomial and of equal rank. Containment is not required.
    pub fn new(outer: DominantWeight, inner: DominantWeight) -> Result<Self> {
        if outer.n() != inner.n() {
            return Err(Error::RankMismatch {
                expected: outer.n(),
                found: inner.n(),
            });
        }
        if !outer.is_polynomial() || !inner.is_polynomial() {
            return Err(Error::Invariant(
                "shape boundaries must be polynomial weights".into(),
            ));
        }
        Ok(Shape { outer, inner })
    }

    /// Straight (non-skew) shape `outer / 0`.
    pub fn straight(outer: DominantWeight) -> Result<Self> {
        let n = outer.n();
        Self::new(outer, DominantWeight::zero(n))
    }

    pub fn n(&self) -> usize {
        self.outer.n()
    }

    pub fn outer(&self) -> &DominantWeight {
        &self.outer
    }

    pub fn inner(&self) -> &DominantWeight {
        &self.inner
    }

    /// False when `inner` is not contained in `outer`: the shape is the empty-family marker.
    pub fn is_contained(&self) -> bool {
        self.outer.contains(&self.inner)
    }

    pub fn is_straight(&self) -> bool {
        self.inner.parts().iter().all(|&p| p == 0)
    }

    /// Number of boxes in row j (1-based), `outer_j - inner_j`.
    pub fn row_length(&self, j: usize) -> Entry {
        self.outer.part(j) - self.inner.part(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tz() -> TArray {
        TArray::from_rows(vec![vec![1], vec![2, 1], vec![4, 1, 0], vec![5, 3, 1, 0]]).unwrap()
    }

    #[test]
    fn dual_weight_examples() {
        let l = DominantWeight::new(vec![11, 7, 5, 3]).unwrap();
        assert_eq!(dual_weight(&l).parts(), &[-3, -5, -7, -11]);
        let z = DominantWeight::zero(3);
        assert_eq!(dual_weight(&z), z);
        let w = DominantWeight::new(vec![7, 5, 3, 2]).unwrap();
        assert_eq!(dual_weight(&dual_weight(&w)), w);
    }

    #[test]
    fn dual_tarray_examples() {
        let d = dual_tarray(&tz());
        assert_eq!(
            d.rows(),
            &[vec![-1], vec![-1, -2], vec![0, -1, -4], vec![0, -1, -3, -5]]
        );
        assert_eq!(dual_tarray(&TArray::zero(4)), TArray::zero(4));
        let tyc =
            TArray::from_rows(vec![vec![6], vec![7, 3], vec![7, 4, 3], vec![7, 5, 3, 2]]).unwrap();
        assert_eq!(dual_tarray(&dual_tarray(&tyc)), tyc);
    }

    #[test]
    fn rows_type_and_weight() {
        let t = tz();
        assert_eq!(type_of(&t), vec![5, 3, 1, 0]);
        assert_eq!(row_of(&t, 1).unwrap(), vec![1]);
        assert!(matches!(row_of(&t, 0), Err(Error::Range(_))));
        assert!(matches!(row_of(&t, 5), Err(Error::Range(_))));
        assert_eq!(type_of(&dual_tarray(&t)), vec![0, -1, -3, -5]);
        assert_eq!(weight_of(&t), vec![1, 2, 2, 4]);
        assert_eq!(weight_of(&TArray::zero(3)), vec![0, 0, 0]);
        assert_eq!(weight_of(&dual_tarray(&t)), vec![-1, -2, -2, -4]);
    }

    #[test]
    fn weight_json_round_trip() {
        let w = DominantWeight::polynomial(vec![5, 3, 1, 0]).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"n":4,"parts":[5,3,1,0]}"#);
        let back: DominantWeight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn invariant_violations_rejected() {
        let e = serde_json::from_str::<HArray>(r#"{"n":1,"rows":[[1],[0,0]]}"#).unwrap_err();
        assert!(e.to_string().contains("h[0,0] = 0"), "{e}");
        let e =
            serde_json::from_str::<TArray>(r#"{"n":3,"rows":[[0],[0,0],[0,0,0,0]]}"#).unwrap_err();
        assert!(e.to_string().contains("row 3"), "{e}");
        assert!(serde_json::from_str::<DominantWeight>(r#"{"n":2,"parts":[1,2]}"#).is_err());
        assert!(DominantWeight::polynomial(vec![1, -1]).is_err());
    }

    #[test]
    fn uncontained_shape_is_marked_not_rejected() {
        let s = Shape::new(
            DominantWeight::polynomial(vec![2, 0]).unwrap(),
            DominantWeight::polynomial(vec![1, 1]).unwrap(),
        )
        .unwrap();
        assert!(!s.is_contained());
    }

    #[test]
    fn interior_positions_of_rank_four() {
        let v: Vec<_> = HArray::interior_positions(4).collect();
        assert_eq!(v, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(HArray::interior_positions(2).count(), 0);
    }
}
