//! Bijections between the four families counted by `c^lambda_{mu,nu}`:
//!
//! * `LR(lambda/mu, nu)`: LR tableaux,
//! * `H(mu, nu, lambda)`: hives with the given boundary,
//! * `GZ(mu*, lambda* - nu*, nu*)`: reached from a tableau through its truncated pattern,
//! * `GZ(nu, lambda - mu, mu)`: reached through the companion tableau.
//!
//! Every map takes the triple explicitly since family membership depends on it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gt::{gz_membership, GZTriple};
use crate::hives::{
    boundary_of, derived_t1, derived_t2, hive_violation, reconstruct_from_t1, reconstruct_from_t2,
    HiveBoundary,
};
use crate::tableaux::{
    companion, gt_to_tableau, skew_to_truncated_gt, symbolic, tableau_to_gt, truncated_gt_to_skew,
    ContentMatrix, SkewTableau, TruncatedPattern,
};
use crate::types::{DominantWeight, Entry, HArray, Shape, TArray};

/// `(mu, nu, lambda)` of one rank. Any polynomial weights are accepted; when the
/// sizes disagree or `mu` is not inside `lambda` every family is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple", into = "RawTriple")]
pub struct LRTriple {
    mu: DominantWeight,
    nu: DominantWeight,
    lambda: DominantWeight,
}

#[derive(Serialize, Deserialize)]
struct RawTriple {
    mu: Vec<Entry>,
    nu: Vec<Entry>,
    lambda: Vec<Entry>,
}

impl TryFrom<RawTriple> for LRTriple {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self> {
        LRTriple::new(
            DominantWeight::polynomial(raw.mu)?,
            DominantWeight::polynomial(raw.nu)?,
            DominantWeight::polynomial(raw.lambda)?,
        )
    }
}

impl From<LRTriple> for RawTriple {
    fn from(t: LRTriple) -> Self {
        RawTriple {
            mu: t.mu.parts().to_vec(),
            nu: t.nu.parts().to_vec(),
            lambda: t.lambda.parts().to_vec(),
        }
    }
}

impl LRTriple {
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
                "LR triple weights must be polynomial".into(),
            ));
        }
        Ok(LRTriple { mu, nu, lambda })
    }

    /// Convenience constructor from plain slices.
    pub fn from_parts(mu: &[Entry], nu: &[Entry], lambda: &[Entry]) -> Result<Self> {
        Self::new(
            DominantWeight::polynomial(mu.to_vec())?,
            DominantWeight::polynomial(nu.to_vec())?,
            DominantWeight::polynomial(lambda.to_vec())?,
        )
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

    /// `|lambda| = |mu| + |nu|` and `mu`, `nu` both inside `lambda`. When false all
    /// four families are empty.
    pub fn is_feasible(&self) -> bool {
        let sizes = match (self.mu.size(), self.nu.size(), self.lambda.size()) {
            (Ok(m), Ok(v), Ok(l)) => m.checked_add(v) == Some(l),
            _ => false,
        };
        sizes && self.lambda.contains(&self.mu) && self.lambda.contains(&self.nu)
    }

    pub fn boundary(&self) -> Result<HiveBoundary> {
        HiveBoundary::new(self.mu.clone(), self.nu.clone(), self.lambda.clone())
    }

    /// `lambda / mu`; flagged empty when not contained.
    pub fn shape(&self) -> Shape {
        Shape::new(self.lambda.clone(), self.mu.clone())
            .expect("weights share rank and are polynomial")
    }

    /// `GZ(mu*, lambda* - nu*, nu*)`.
    pub fn gz1(&self) -> GZTriple {
        let weight = self
            .lambda
            .dual()
            .parts()
            .iter()
            .zip(self.nu.dual().parts())
            .map(|(l, v)| l - v)
            .collect();
        GZTriple::new(self.mu.dual(), weight, self.nu.dual()).expect("same rank")
    }

    /// `GZ(nu, lambda - mu, mu)`.
    pub fn gz2(&self) -> GZTriple {
        let weight = self
            .lambda
            .parts()
            .iter()
            .zip(self.mu.parts())
            .map(|(l, m)| l - m)
            .collect();
        GZTriple::new(self.nu.clone(), weight, self.mu.clone()).expect("same rank")
    }
}

fn check_rank(t: &LRTriple, found: usize) -> Result<()> {
    if t.n() != found {
        return Err(Error::RankMismatch {
            expected: t.n(),
            found,
        });
    }
    Ok(())
}

/// Checks that `y` is an LR tableau of shape `lambda/mu` and content `nu`.
pub fn check_lr_member(y: &SkewTableau, t: &LRTriple) -> Result<()> {
    check_rank(t, y.n())?;
    if y.shape().outer() != t.lambda() || y.shape().inner() != t.mu() {
        return Err(Error::Precondition(format!(
            "tableau shape {:?}/{:?} does not match lambda/mu = {:?}/{:?}",
            y.shape().outer().parts(),
            y.shape().inner().parts(),
            t.lambda().parts(),
            t.mu().parts()
        )));
    }
    if y.content() != t.nu().parts() {
        return Err(Error::Precondition(format!(
            "tableau content {:?} does not match nu = {:?}",
            y.content(),
            t.nu().parts()
        )));
    }
    let a = y.matrix().as_rows();
    if let Some((l, m)) = symbolic::semistandard_violation(t.mu().parts(), a) {
        return Err(Error::Precondition(format!(
            "tableau is not semistandard: column condition fails at (l,m)=({l},{m})"
        )));
    }
    if let Some((i, j)) = symbolic::yamanouchi_violation(a) {
        return Err(Error::Precondition(format!(
            "tableau is not Yamanouchi: condition fails at (i,j)=({i},{j})"
        )));
    }
    Ok(())
}

fn check_gz_member(s: &TArray, spec: &GZTriple, family: &str) -> Result<()> {
    match gz_membership(s, spec)? {
        Ok(()) => Ok(()),
        Err(why) => Err(Error::Domain(format!("t-array is not in {family}: {why}"))),
    }
}

fn check_hive_member(h: &HArray, t: &LRTriple) -> Result<HiveBoundary> {
    check_rank(t, h.n())?;
    if let Some(v) = hive_violation(h) {
        return Err(Error::Domain(format!("h-array is not a hive: {v}")));
    }
    let b = t.boundary()?;
    let found = boundary_of(h)?;
    if found != b {
        return Err(Error::Precondition(format!(
            "hive boundary (mu,nu,lambda) = ({:?},{:?},{:?}) does not match the triple",
            found.mu().parts(),
            found.nu().parts(),
            found.lambda().parts()
        )));
    }
    Ok(b)
}

/// The middle subarray `T_Z` of a truncated pattern, as a t-array of rank n.
///
/// Row `n+k` of the truncated pattern splits into `T_X` (positions `1..=k`, all
/// equal to `lambda_j` for an LR tableau), `T_Z` (positions `k+1..=n`) and `T_Y`
/// (positions beyond n, all zero). Reflecting `T_Z` top to bottom puts row `n`
/// (the inner shape) on top, so `T_Z` row `i` is pattern row `2n-i` read from
/// position `n-i+1`: `T_Z[i][j] = t_{n-i+j}^(2n-i)`.
fn middle_subarray(f: &TruncatedPattern) -> TArray {
    let n = f.n();
    TArray::from_fn(n, |i, j| f.get(2 * n - i, n - i + j))
}

/// Reassembles the truncated pattern from `T_Z`, with `T_X` filled from `lambda` and `T_Y` zero.
fn assemble_truncated(tz: &TArray, lambda: &DominantWeight) -> Result<TruncatedPattern> {
    let n = tz.n();
    let rows = (0..=n)
        .map(|k| {
            (1..=n + k)
                .map(|j| {
                    if j <= k {
                        lambda.part(j)
                    } else if j <= n {
                        tz.get(n - k, j - k)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    TruncatedPattern::from_rows(n, rows)
}

/// `phi`: LR tableau to `GZ(mu*, lambda* - nu*, nu*)`, sending `Y` to the dual of the
/// middle subarray of its truncated pattern.
pub fn phi_lr_to_gz(y: &SkewTableau, t: &LRTriple) -> Result<TArray> {
    check_lr_member(y, t)?;
    let f = skew_to_truncated_gt(y)?;
    Ok(middle_subarray(&f).dual())
}

/// Inverse of [`phi_lr_to_gz`].
pub fn phi_gz_to_lr(s: &TArray, t: &LRTriple) -> Result<SkewTableau> {
    check_rank(t, s.n())?;
    check_gz_member(s, &t.gz1(), "GZ(mu*, lambda*-nu*, nu*)")?;
    let f = assemble_truncated(&s.dual(), t.lambda())?;
    let y = truncated_gt_to_skew(&f, t.mu())?;
    check_lr_member(&y, t)?;
    Ok(y)
}

/// `psi(Y) = T_{Y^c}`, into `GZ(nu, lambda - mu, mu)`.
pub fn psi_lr_to_gz2(y: &SkewTableau, t: &LRTriple) -> Result<TArray> {
    check_lr_member(y, t)?;
    tableau_to_gt(&companion(y)?)
}

/// Inverse of [`psi_lr_to_gz2`]: read the companion tableau off the pattern and transpose.
pub fn psi_gz2_to_lr(s: &TArray, t: &LRTriple) -> Result<SkewTableau> {
    check_rank(t, s.n())?;
    check_gz_member(s, &t.gz2(), "GZ(nu, lambda-mu, mu)")?;
    let yc = gt_to_tableau(s)?;
    let a = ContentMatrix::new(yc.matrix().transpose().as_rows().to_vec())?;
    let y = SkewTableau::new(t.shape(), a)?;
    check_lr_member(&y, t)?;
    Ok(y)
}

/// LR tableau to hive, by gluing `phi(Y)* = T_Z` onto the boundary as `T1`.
pub fn lr_to_hive(y: &SkewTableau, t: &LRTriple) -> Result<HArray> {
    let s = phi_lr_to_gz(y, t)?;
    reconstruct_from_t1(&t.boundary()?, &s.dual())
}

/// Direct count: `h_{l,m}` is the number of empty boxes plus entries `<= l` in the
/// first `m` rows.
pub fn lr_to_hive_direct(y: &SkewTableau, t: &LRTriple) -> Result<HArray> {
    check_lr_member(y, t)?;
    let a = y.matrix();
    let mu = t.mu();
    Ok(HArray::from_fn(t.n(), |l, m| {
        (1..=m)
            .map(|j| mu.part(j) + (1..=l).map(|k| a.get(k, j)).sum::<Entry>())
            .sum()
    }))
}

/// Inverts the counting formula on an arbitrary h-array:
/// `a_{l,m} = h_{l,m} - h_{l,m-1} - h_{l-1,m} + h_{l-1,m-1}` for `l < m`,
/// `a_{m,m} = h_{m,m} - h_{m-1,m}` and zero below the diagonal.
///
/// On a hive this is the content matrix of the LR tableau; elsewhere the entries
/// may be negative, which is what the condition-by-condition comparison needs.
pub fn hive_content_matrix(h: &HArray) -> Vec<Vec<Entry>> {
    let n = h.n();
    (1..=n)
        .map(|l| {
            (1..=n)
                .map(|m| match l.cmp(&m) {
                    std::cmp::Ordering::Less => {
                        h.get(l, m) - h.get(l, m - 1) - h.get(l - 1, m) + h.get(l - 1, m - 1)
                    }
                    std::cmp::Ordering::Equal => h.get(m, m) - h.get(m - 1, m),
                    std::cmp::Ordering::Greater => 0,
                })
                .collect()
        })
        .collect()
}

/// Hive to LR tableau: `phi^{-1}(T1(H)*)`.
pub fn hive_to_lr(h: &HArray, t: &LRTriple) -> Result<SkewTableau> {
    check_hive_member(h, t)?;
    phi_gz_to_lr(&derived_t1(h).dual(), t)
}

/// `H -> (T1(H)*, T2(H))`, landing in `GZ(mu*, lambda*-nu*, nu*)` and `GZ(nu, lambda-mu, mu)`.
pub fn hive_gz_maps(h: &HArray) -> Result<(TArray, TArray)> {
    if let Some(v) = hive_violation(h) {
        return Err(Error::Domain(format!("h-array is not a hive: {v}")));
    }
    Ok((derived_t1(h).dual(), derived_t2(h)))
}

/// Inverse of the first component of [`hive_gz_maps`].
pub fn gz1_to_hive(s: &TArray, t: &LRTriple) -> Result<HArray> {
    check_rank(t, s.n())?;
    check_gz_member(s, &t.gz1(), "GZ(mu*, lambda*-nu*, nu*)")?;
    reconstruct_from_t1(&t.boundary()?, &s.dual())
}

/// Inverse of the second component of [`hive_gz_maps`].
pub fn gz2_to_hive(s: &TArray, t: &LRTriple) -> Result<HArray> {
    check_rank(t, s.n())?;
    check_gz_member(s, &t.gz2(), "GZ(nu, lambda-mu, mu)")?;
    reconstruct_from_t2(&t.boundary()?, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::is_gz_scheme;
    use crate::hives::is_hive;

    fn golden_triple() -> LRTriple {
        LRTriple::from_parts(&[5, 3, 1, 0], &[7, 5, 3, 2], &[11, 7, 5, 3]).unwrap()
    }

    fn golden_tableau() -> SkewTableau {
        SkewTableau::new(
            golden_triple().shape(),
            ContentMatrix::new(vec![
                vec![6, 1, 0, 0],
                vec![0, 3, 1, 1],
                vec![0, 0, 3, 0],
                vec![0, 0, 0, 2],
            ])
            .unwrap(),
        )
        .unwrap()
    }

    fn tz() -> TArray {
        TArray::from_rows(vec![vec![1], vec![2, 1], vec![4, 1, 0], vec![5, 3, 1, 0]]).unwrap()
    }

    fn tyc() -> TArray {
        TArray::from_rows(vec![vec![6], vec![7, 3], vec![7, 4, 3], vec![7, 5, 3, 2]]).unwrap()
    }

    #[test]
    fn phi_on_golden_example() {
        let t = golden_triple();
        let s = phi_lr_to_gz(&golden_tableau(), &t).unwrap();
        assert_eq!(s, tz().dual());
        assert!(is_gz_scheme(&s, &t.gz1()).unwrap());
        assert_eq!(phi_gz_to_lr(&s, &t).unwrap(), golden_tableau());
    }

    #[test]
    fn psi_on_golden_example() {
        let t = golden_triple();
        let s = psi_lr_to_gz2(&golden_tableau(), &t).unwrap();
        assert_eq!(s, tyc());
        assert!(is_gz_scheme(&s, &t.gz2()).unwrap());
        assert_eq!(psi_gz2_to_lr(&s, &t).unwrap(), golden_tableau());
    }

    #[test]
    fn hive_maps_on_golden_example() {
        let t = golden_triple();
        let h = lr_to_hive(&golden_tableau(), &t).unwrap();
        assert!(is_hive(&h));
        assert_eq!((h.get(1, 2), h.get(1, 3), h.get(2, 3)), (15, 16, 20));
        assert_eq!(lr_to_hive_direct(&golden_tableau(), &t).unwrap(), h);
        assert_eq!(hive_to_lr(&h, &t).unwrap(), golden_tableau());
        assert_eq!(hive_content_matrix(&h), golden_tableau().matrix().as_rows());
        let (g1, g2) = hive_gz_maps(&h).unwrap();
        assert_eq!((g1.clone(), g2.clone()), (tz().dual(), tyc()));
        assert_eq!(gz1_to_hive(&g1, &t).unwrap(), h);
        assert_eq!(gz2_to_hive(&g2, &t).unwrap(), h);
    }

    #[test]
    fn empty_tableau_maps() {
        let mu = DominantWeight::polynomial(vec![3, 1, 0]).unwrap();
        let t = LRTriple::new(mu.clone(), DominantWeight::zero(3), mu.clone()).unwrap();
        let y = SkewTableau::empty(mu.clone()).unwrap();
        let s = phi_lr_to_gz(&y, &t).unwrap();
        // the only scheme of type mu* with weight -mu and zero bound: the highest-weight pattern of mu*
        assert_eq!(s.type_row(), mu.dual().parts());
        assert_eq!(phi_gz_to_lr(&s, &t).unwrap(), y);
        assert_eq!(psi_lr_to_gz2(&y, &t).unwrap(), TArray::zero(3));
        let h = lr_to_hive(&y, &t).unwrap();
        assert!(is_hive(&h));
        assert_eq!(lr_to_hive_direct(&y, &t).unwrap(), h);
        assert_eq!(hive_to_lr(&h, &t).unwrap(), y);
    }

    #[test]
    fn direct_formula_corner_entries() {
        let t = golden_triple();
        let h = lr_to_hive_direct(&golden_tableau(), &t).unwrap();
        assert_eq!(h.get(1, 2), 15);
        for m in 0..=4 {
            assert_eq!(h.get(0, m), t.mu().parts()[..m].iter().sum::<Entry>());
        }
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        let t = golden_triple();
        let other = LRTriple::from_parts(&[5, 3, 1, 0], &[7, 5, 4, 1], &[11, 7, 5, 3]).unwrap();
        assert!(matches!(
            phi_lr_to_gz(&golden_tableau(), &other),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(phi_gz_to_lr(&tz(), &t), Err(Error::Domain(_))));
        let h = lr_to_hive(&golden_tableau(), &t).unwrap();
        assert!(matches!(
            hive_to_lr(&h, &other),
            Err(Error::Precondition(_))
        ));
        let not_hive = h.with_entry(1, 2, 13).unwrap();
        assert!(matches!(hive_gz_maps(&not_hive), Err(Error::Domain(_))));
        // semistandard but not Yamanouchi
        let bad =
            SkewTableau::from_row_entries(DominantWeight::zero(2), &[vec![2], vec![]]).unwrap();
        let tb = LRTriple::from_parts(&[0, 0], &[0, 1], &[1, 0]);
        assert!(tb.is_err());
        let tb = LRTriple::from_parts(&[0, 0], &[1, 0], &[1, 0]).unwrap();
        assert!(phi_lr_to_gz(&bad, &tb).is_err());
    }

    #[test]
    fn feasibility() {
        assert!(golden_triple().is_feasible());
        let t = LRTriple::from_parts(&[2, 0], &[1, 0], &[1, 1]).unwrap();
        assert!(!t.is_feasible());
        assert!(!t.shape().is_contained());
    }
}
