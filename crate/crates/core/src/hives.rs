//! Hives: rhombus conditions, boundaries, derived t-arrays and reconstruction.
//!
//! For a fundamental triangle with apex `h_{a,b}` and base `h_{a,b+1}`, `h_{a+1,b+1}`
//! (`0 <= a <= b <= n-1`) the three derived arrays take the differences
//!
//! ```text
//! x_{b+1-a}^(n-a)   = h_{a,b+1}   - h_{a,b}      (T1, SW-NE)
//! y_{a+1}^(b+1)     = h_{a+1,b+1} - h_{a,b+1}    (T2, E-W)
//! z_{a+1}^(n+a-b)   = h_{a+1,b+1} - h_{a,b}      (T3, SE-NW)
//! ```
//!
//! Every predicate here is defined on arbitrary integer arrays, not only on
//! non-negative ones.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{prefix_sums, DominantWeight, Entry, HArray, TArray};

/// Which rhombus family failed, and where.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhombusViolation {
    pub family: u8,
    pub a: usize,
    pub b: usize,
}

impl std::fmt::Display for RhombusViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RC({}) fails at (a,b)=({},{})",
            self.family, self.a, self.b
        )
    }
}

/// RC(1): `h_{a,b} + h_{a-1,b-1} >= h_{a-1,b} + h_{a,b-1}` for `1 <= a < b <= n`.
pub fn rc1_violation(h: &HArray) -> Option<RhombusViolation> {
    let n = h.n();
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .find(|&(a, b)| h.get(a, b) + h.get(a - 1, b - 1) < h.get(a - 1, b) + h.get(a, b - 1))
        .map(|(a, b)| RhombusViolation { family: 1, a, b })
}

/// RC(2): `h_{a-1,b} + h_{a,b} >= h_{a,b+1} + h_{a-1,b-1}` for `1 <= a <= b < n`.
pub fn rc2_violation(h: &HArray) -> Option<RhombusViolation> {
    let n = h.n();
    (1..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .find(|&(a, b)| h.get(a - 1, b) + h.get(a, b) < h.get(a, b + 1) + h.get(a - 1, b - 1))
        .map(|(a, b)| RhombusViolation { family: 2, a, b })
}

/// RC(3): `h_{a,b} + h_{a,b+1} >= h_{a+1,b+1} + h_{a-1,b}` for `1 <= a <= b < n`.
pub fn rc3_violation(h: &HArray) -> Option<RhombusViolation> {
    let n = h.n();
    (1..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .find(|&(a, b)| h.get(a, b) + h.get(a, b + 1) < h.get(a + 1, b + 1) + h.get(a - 1, b))
        .map(|(a, b)| RhombusViolation { family: 3, a, b })
}

/// Flags for RC(1), RC(2), RC(3).
pub fn check_rc(h: &HArray) -> (bool, bool, bool) {
    (
        rc1_violation(h).is_none(),
        rc2_violation(h).is_none(),
        rc3_violation(h).is_none(),
    )
}

pub fn hive_violation(h: &HArray) -> Option<RhombusViolation> {
    rc1_violation(h)
        .or_else(|| rc2_violation(h))
        .or_else(|| rc3_violation(h))
}

pub fn is_hive(h: &HArray) -> bool {
    hive_violation(h).is_none()
}

/// The three fixed sides of a hive in `H(mu, nu, lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBoundary", into = "RawBoundary")]
pub struct HiveBoundary {
    mu: DominantWeight,
    nu: DominantWeight,
    lambda: DominantWeight,
}

#[derive(Serialize, Deserialize)]
struct RawBoundary {
    mu: Vec<Entry>,
    nu: Vec<Entry>,
    lambda: Vec<Entry>,
}

impl TryFrom<RawBoundary> for HiveBoundary {
    type Error = Error;

    fn try_from(raw: RawBoundary) -> Result<Self> {
        HiveBoundary::new(
            DominantWeight::polynomial(raw.mu)?,
            DominantWeight::polynomial(raw.nu)?,
            DominantWeight::polynomial(raw.lambda)?,
        )
    }
}

impl From<HiveBoundary> for RawBoundary {
    fn from(b: HiveBoundary) -> Self {
        RawBoundary {
            mu: b.mu.parts().to_vec(),
            nu: b.nu.parts().to_vec(),
            lambda: b.lambda.parts().to_vec(),
        }
    }
}

impl HiveBoundary {
    /// Polynomial weights of one rank with `|lambda| = |mu| + |nu|`.
    pub fn new(mu: DominantWeight, nu: DominantWeight, lambda: DominantWeight) -> Result<Self> {
        let n = mu.n();
        for w in [&nu, &lambda] {
            if w.n() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    found: w.n(),
                });
            }
        }
        if !(mu.is_polynomial() && nu.is_polynomial() && lambda.is_polynomial()) {
            return Err(Error::Invariant(
                "hive boundary weights must be polynomial".into(),
            ));
        }
        let (sm, sn, sl) = (mu.size()?, nu.size()?, lambda.size()?);
        if sm.checked_add(sn).ok_or(Error::Overflow("|mu| + |nu|"))? != sl {
            return Err(Error::Inconsistent(format!(
                "|lambda| = {sl} but |mu| + |nu| = {}",
                sm + sn
            )));
        }
        Ok(HiveBoundary { mu, nu, lambda })
    }

    pub fn n(&self) -> usize {
        self.mu.n()
    }

    pub fn mu(&self) -> &DominantWeight {
        &self.mu
    }

    pub fn nu(&self) -> &DominantWeight {
        &self.nu
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    /// Border values `h_{0,i}`, `h_{i,n}`, `h_{i,i}` for `i = 0..=n`.
    pub(crate) fn border_values(&self) -> Result<(Vec<Entry>, Vec<Entry>, Vec<Entry>)> {
        let left = prefix_sums(self.mu.parts())?;
        let total_mu = *left.last().unwrap();
        let bottom = prefix_sums(self.nu.parts())?
            .into_iter()
            .map(|v| {
                v.checked_add(total_mu)
                    .ok_or(Error::Overflow("a hive border"))
            })
            .collect::<Result<Vec<_>>>()?;
        let right = prefix_sums(self.lambda.parts())?;
        Ok((left, bottom, right))
    }

    /// Whether `(a, b)` lies on one of the three borders.
    pub fn on_border(n: usize, a: usize, b: usize) -> bool {
        a == 0 || a == b || b == n
    }

    /// The prescribed border value at `(a, b)`, if it is a border position.
    pub fn border_value(&self, a: usize, b: usize) -> Result<Option<Entry>> {
        let n = self.n();
        if !Self::on_border(n, a, b) {
            return Ok(None);
        }
        let (left, bottom, right) = self.border_values()?;
        Ok(Some(if a == 0 {
            left[b]
        } else if b == n {
            bottom[a]
        } else {
            right[a]
        }))
    }
}

/// Raw border differences `(mu, nu, lambda)` of an arbitrary h-array.
pub fn border_weights(h: &HArray) -> (Vec<Entry>, Vec<Entry>, Vec<Entry>) {
    let n = h.n();
    let mu = (1..=n).map(|i| h.get(0, i) - h.get(0, i - 1)).collect();
    let nu = (1..=n).map(|i| h.get(i, n) - h.get(i - 1, n)).collect();
    let lambda = (1..=n).map(|i| h.get(i, i) - h.get(i - 1, i - 1)).collect();
    (mu, nu, lambda)
}

/// Reads `(mu, nu, lambda)` from the borders; fails if they are not polynomial dominant weights.
pub fn boundary_of(h: &HArray) -> Result<HiveBoundary> {
    let (mu, nu, lambda) = border_weights(h);
    HiveBoundary::new(
        DominantWeight::polynomial(mu)?,
        DominantWeight::polynomial(nu)?,
        DominantWeight::polynomial(lambda)?,
    )
}

/// An h-array whose interior entries `0 < a < b < n` are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiveFrame {
    boundary: HiveBoundary,
    cells: Vec<Vec<Option<Entry>>>,
}

impl HiveFrame {
    pub fn boundary(&self) -> &HiveBoundary {
        &self.boundary
    }

    pub fn n(&self) -> usize {
        self.boundary.n()
    }

    /// `None` marks a hole.
    pub fn get(&self, a: usize, b: usize) -> Option<Entry> {
        self.cells[b][a]
    }

    pub fn rows(&self) -> &[Vec<Option<Entry>>] {
        &self.cells
    }

    pub fn holes(&self) -> Vec<(usize, usize)> {
        HArray::interior_positions(self.n()).collect()
    }

    /// Fills the holes with `values`, listed in [`HArray::interior_positions`] order.
    pub fn fill(&self, values: &[Entry]) -> Result<HArray> {
        let holes = self.holes();
        if values.len() != holes.len() {
            return Err(Error::Invariant(format!(
                "frame has {} holes but {} values were supplied",
                holes.len(),
                values.len()
            )));
        }
        let mut h = HArray::from_fn(self.n(), |a, b| self.cells[b][a].unwrap_or(0));
        for (&(a, b), &v) in holes.iter().zip(values) {
            h.set(a, b, v);
        }
        Ok(h)
    }
}

/// Fills the three borders from prefix sums and leaves every interior entry as a hole.
pub fn make_boundary_frame(b: &HiveBoundary) -> Result<HiveFrame> {
    let n = b.n();
    let (left, bottom, right) = b.border_values()?;
    let cells = (0..=n)
        .map(|row| {
            (0..=row)
                .map(|a| {
                    if a == 0 {
                        Some(left[row])
                    } else if row == n {
                        Some(bottom[a])
                    } else if a == row {
                        Some(right[a])
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    Ok(HiveFrame {
        boundary: b.clone(),
        cells,
    })
}

/// `x_j^(i) = h_{n-i, j+n-i} - h_{n-i, j+n-i-1}`.
pub fn derived_t1(h: &HArray) -> TArray {
    let n = h.n();
    TArray::from_fn(n, |i, j| {
        let a = n - i;
        let b = j + a - 1;
        h.get(a, b + 1) - h.get(a, b)
    })
}

/// `y_j^(i) = h_{j,i} - h_{j-1,i}`.
pub fn derived_t2(h: &HArray) -> TArray {
    TArray::from_fn(h.n(), |i, j| h.get(j, i) - h.get(j - 1, i))
}

/// `z_j^(i) = h_{j, n+j-i} - h_{j-1, n+j-i-1}`.
pub fn derived_t3(h: &HArray) -> TArray {
    let n = h.n();
    TArray::from_fn(n, |i, j| {
        let a = j - 1;
        let b = n + a - i;
        h.get(a + 1, b + 1) - h.get(a, b)
    })
}

fn check_against_border(
    b: &HiveBoundary,
    h: &HArray,
    positions: impl IntoIterator<Item = (usize, usize)>,
) -> Result<()> {
    for (a, c) in positions {
        let expected = b.border_value(a, c)?.expect("border position");
        let found = h.get(a, c);
        if expected != found {
            return Err(Error::Reconstruction {
                a,
                b: c,
                expected,
                found,
            });
        }
    }
    Ok(())
}

/// Integrates `T1` along each line of constant `a`, starting from `h_{a,a}` on the
/// lambda side; the mu side (`a = 0`) and the nu side (`b = n`) are then compared
/// with the boundary.
pub fn reconstruct_from_t1(b: &HiveBoundary, t1: &TArray) -> Result<HArray> {
    let n = b.n();
    if t1.n() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: t1.n(),
        });
    }
    let (_, _, right) = b.border_values()?;
    let mut h = HArray::zero(n);
    for (a, &start) in right.iter().enumerate() {
        let mut acc = start;
        if a > 0 {
            h.set(a, a, acc);
        }
        for c in a..n {
            acc = acc
                .checked_add(t1.get(n - a, c + 1 - a))
                .ok_or(Error::Overflow("hive reconstruction"))?;
            h.set(a, c + 1, acc);
        }
    }
    check_against_border(b, &h, (1..=n).map(|c| (0, c)))?;
    check_against_border(b, &h, (1..n).map(|a| (a, n)))?;
    Ok(h)
}

/// Integrates `T2` along each row `b`, starting from `h_{0,b}` on the mu side; the
/// lambda side (`a = b`) and the nu row (`b = n`) are then compared with the boundary.
pub fn reconstruct_from_t2(b: &HiveBoundary, t2: &TArray) -> Result<HArray> {
    let n = b.n();
    if t2.n() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: t2.n(),
        });
    }
    let (left, _, _) = b.border_values()?;
    let mut h = HArray::zero(n);
    for (row, &start) in left.iter().enumerate().skip(1) {
        let mut acc = start;
        h.set(0, row, acc);
        for a in 0..row {
            acc = acc
                .checked_add(t2.get(row, a + 1))
                .ok_or(Error::Overflow("hive reconstruction"))?;
            h.set(a + 1, row, acc);
        }
    }
    check_against_border(b, &h, (1..=n).map(|a| (a, a)))?;
    check_against_border(b, &h, (1..n).map(|a| (a, n)))?;
    Ok(h)
}

/// `(phi1(T1(H)), phi2(T2(H)))` over `0 <= a < b < n`, ordered by `a` then `b`:
/// `phi1 = x_{b-a}^(n-a-1) - x_{b+1-a}^(n-a)` and `phi2 = y_{a+1}^(b+1) - y_{a+1}^(b)`.
pub fn fiber_coordinates(h: &HArray) -> (Vec<Entry>, Vec<Entry>) {
    let n = h.n();
    let x = derived_t1(h);
    let y = derived_t2(h);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let phi1 = pairs
        .iter()
        .map(|&(a, b)| x.get(n - a - 1, b - a) - x.get(n - a, b + 1 - a))
        .collect();
    let phi2 = pairs
        .iter()
        .map(|&(a, b)| y.get(b + 1, a + 1) - y.get(b, a + 1))
        .collect();
    (phi1, phi2)
}
