//! Interlacing conditions, Gelfand-Tsetlin patterns and GZ schemes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{DominantWeight, Entry, TArray};

/// First `(i, j)` with `t_j^(i+1) < t_j^(i)`, over `1 <= j <= i <= n-1`.
pub fn ic1_violation(t: &TArray) -> Option<(usize, usize)> {
    let n = t.n();
    (1..n)
        .flat_map(|i| (1..=i).map(move |j| (i, j)))
        .find(|&(i, j)| t.get(i + 1, j) < t.get(i, j))
}

/// First `(i, j)` with `t_j^(i) < t_{j+1}^(i+1)`, over `1 <= j <= i <= n-1`.
pub fn ic2_violation(t: &TArray) -> Option<(usize, usize)> {
    let n = t.n();
    (1..n)
        .flat_map(|i| (1..=i).map(move |j| (i, j)))
        .find(|&(i, j)| t.get(i, j) < t.get(i + 1, j + 1))
}

/// IC(1): `t_j^(i+1) >= t_j^(i)`.
pub fn check_ic1(t: &TArray) -> bool {
    ic1_violation(t).is_none()
}

/// IC(2): `t_j^(i) >= t_{j+1}^(i+1)`.
pub fn check_ic2(t: &TArray) -> bool {
    ic2_violation(t).is_none()
}

pub fn is_gt_pattern(t: &TArray) -> bool {
    check_ic1(t) && check_ic2(t)
}

/// The GZ exponent
/// `eps_j^(i) = sum_{h<j} (t_h^(i+1) - 2 t_h^(i) + t_h^(i-1)) + (t_j^(i+1) - t_j^(i))`,
/// defined for `1 <= j <= i <= n-1`.
pub fn exponent(t: &TArray, i: usize, j: usize) -> Result<Entry> {
    let n = t.n();
    if !(1 <= j && j <= i && i < n) {
        return Err(Error::Range(format!(
            "exponent index (i,j)=({i},{j}) outside 1 <= j <= i <= {}",
            n.saturating_sub(1)
        )));
    }
    Ok(exponent_unchecked(t, i, j))
}

// h < j <= i guarantees t_h^(i-1) exists whenever the sum is non-empty.
pub(crate) fn exponent_unchecked(t: &TArray, i: usize, j: usize) -> Entry {
    let mut e = t.get(i + 1, j) - t.get(i, j);
    for h in 1..j {
        e += t.get(i + 1, h) - 2 * t.get(i, h) + t.get(i - 1, h);
    }
    e
}

/// First `(i, j)` where `eps_j^(i)(t) > bound_i - bound_{i+1}`.
pub fn exponent_violation(t: &TArray, bound: &[Entry]) -> Option<(usize, usize)> {
    let n = t.n();
    (1..n)
        .flat_map(|i| (1..=i).map(move |j| (i, j)))
        .find(|&(i, j)| exponent_unchecked(t, i, j) > bound[i - 1] - bound[i])
}

pub fn check_exponents(t: &TArray, bound: &[Entry]) -> bool {
    exponent_violation(t, bound).is_none()
}

/// Names the family `GZ(type, weight, bound)`: GT patterns of the given type and
/// weight whose exponents satisfy `eps_j^(i) <= bound_i - bound_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GZTriple {
    pub type_wt: DominantWeight,
    pub weight: Vec<Entry>,
    pub bound_wt: DominantWeight,
}

impl GZTriple {
    pub fn new(
        type_wt: DominantWeight,
        weight: Vec<Entry>,
        bound_wt: DominantWeight,
    ) -> Result<Self> {
        let n = type_wt.n();
        if weight.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: weight.len(),
            });
        }
        if bound_wt.n() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: bound_wt.n(),
            });
        }
        Ok(GZTriple {
            type_wt,
            weight,
            bound_wt,
        })
    }

    pub fn n(&self) -> usize {
        self.type_wt.n()
    }
}

/// Why a t-array fails to be a member of a GZ family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GzFailure {
    Ic1 { i: usize, j: usize },
    Ic2 { i: usize, j: usize },
    Type,
    Weight,
    Exponent { i: usize, j: usize },
}

impl std::fmt::Display for GzFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GzFailure::Ic1 { i, j } => write!(f, "IC(1) fails at (i,j)=({i},{j})"),
            GzFailure::Ic2 { i, j } => write!(f, "IC(2) fails at (i,j)=({i},{j})"),
            GzFailure::Type => write!(f, "type differs from the family's type"),
            GzFailure::Weight => write!(f, "weight differs from the family's weight"),
            GzFailure::Exponent { i, j } => write!(f, "exponent bound fails at (i,j)=({i},{j})"),
        }
    }
}

/// Membership check with a reason on failure.
pub fn gz_membership(t: &TArray, spec: &GZTriple) -> Result<std::result::Result<(), GzFailure>> {
    if t.n() != spec.n() {
        return Err(Error::RankMismatch {
            expected: spec.n(),
            found: t.n(),
        });
    }
    if let Some((i, j)) = ic1_violation(t) {
        return Ok(Err(GzFailure::Ic1 { i, j }));
    }
    if let Some((i, j)) = ic2_violation(t) {
        return Ok(Err(GzFailure::Ic2 { i, j }));
    }
    if t.type_row() != spec.type_wt.parts() {
        return Ok(Err(GzFailure::Type));
    }
    if t.weight() != spec.weight {
        return Ok(Err(GzFailure::Weight));
    }
    if let Some((i, j)) = exponent_violation(t, spec.bound_wt.parts()) {
        return Ok(Err(GzFailure::Exponent { i, j }));
    }
    Ok(Ok(()))
}

pub fn is_gz_scheme(t: &TArray, spec: &GZTriple) -> Result<bool> {
    Ok(gz_membership(t, spec)?.is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::dual_tarray;

    fn tz() -> TArray {
        TArray::from_rows(vec![vec![1], vec![2, 1], vec![4, 1, 0], vec![5, 3, 1, 0]]).unwrap()
    }

    fn tyc() -> TArray {
        TArray::from_rows(vec![vec![6], vec![7, 3], vec![7, 4, 3], vec![7, 5, 3, 2]]).unwrap()
    }

    fn w(p: &[Entry]) -> DominantWeight {
        DominantWeight::new(p.to_vec()).unwrap()
    }

    #[test]
    fn interlacing_examples() {
        assert!(check_ic1(&tz()) && check_ic2(&tz()));
        let bad = TArray::from_rows(vec![vec![1], vec![0, 0]]).unwrap();
        assert!(!check_ic1(&bad));
        assert_eq!(ic1_violation(&bad), Some((1, 1)));
        let small = TArray::from_rows(vec![vec![2], vec![2, 1], vec![3, 2, 1]]).unwrap();
        assert!(is_gt_pattern(&small));
        assert!(is_gt_pattern(&TArray::from_fn(5, |_, _| 5)));
        assert!(is_gt_pattern(&tyc()));
    }

    #[test]
    fn exponent_examples() {
        let d = dual_tarray(&tz());
        assert_eq!(exponent(&d, 2, 2).unwrap(), 2);
        assert_eq!(exponent(&d, 1, 1).unwrap(), 0);
        let c = TArray::from_fn(4, |_, _| 7);
        for i in 1..4 {
            for j in 1..=i {
                assert_eq!(exponent(&c, i, j).unwrap(), 0);
            }
        }
        assert!(matches!(exponent(&d, 4, 1), Err(Error::Range(_))));
        assert!(matches!(exponent(&d, 2, 3), Err(Error::Range(_))));
        assert!(matches!(exponent(&d, 1, 0), Err(Error::Range(_))));
    }

    #[test]
    fn gz_membership_examples() {
        let lambda = w(&[11, 7, 5, 3]);
        let mu = w(&[5, 3, 1, 0]);
        let nu = w(&[7, 5, 3, 2]);
        let weight1: Vec<Entry> = lambda
            .dual()
            .parts()
            .iter()
            .zip(nu.dual().parts())
            .map(|(a, b)| a - b)
            .collect();
        let gz1 = GZTriple::new(mu.dual(), weight1, nu.dual()).unwrap();
        assert!(is_gz_scheme(&dual_tarray(&tz()), &gz1).unwrap());

        let weight2: Vec<Entry> = lambda
            .parts()
            .iter()
            .zip(mu.parts())
            .map(|(a, b)| a - b)
            .collect();
        let gz2 = GZTriple::new(nu.clone(), weight2, mu.clone()).unwrap();
        assert!(is_gz_scheme(&tyc(), &gz2).unwrap());

        let zero =
            GZTriple::new(DominantWeight::zero(3), vec![0; 3], DominantWeight::zero(3)).unwrap();
        assert!(is_gz_scheme(&TArray::zero(3), &zero).unwrap());
        assert!(is_gz_scheme(&TArray::zero(4), &zero).is_err());
        // wrong family: T_Z itself has the wrong type for gz1
        assert_eq!(gz_membership(&tz(), &gz1).unwrap(), Err(GzFailure::Type));
    }
}
