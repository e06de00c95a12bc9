//! Schur polynomials as explicit monomial sums.
//!
//! This module is deliberately independent of the enumerators in
//! [`crate::enumeration`]: `s_lambda` is expanded over Gelfand-Tsetlin patterns
//! with top row `lambda` (their weights are the monomial exponents), and products
//! are decomposed back into the Schur basis by leading-term elimination.
//!
//! Coefficients depend on the number of variables `n`; `c^lambda_{mu,nu}` is
//! stable once `n` is at least the number of nonzero parts of `lambda`, but the
//! oracle always works at the rank it is given.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::bijections::LRTriple;
use crate::error::{Error, Result};
use crate::types::{DominantWeight, Entry};

pub type Coefficient = i64;

/// A polynomial in `x_1..x_n` with integer coefficients, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurPoly {
    n: usize,
    terms: BTreeMap<Vec<Entry>, Coefficient>,
}

impl SchurPoly {
    /// Builds a polynomial from raw terms, dropping zero coefficients.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Vec<Entry>, Coefficient)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    found: exp.len(),
                });
            }
            if exp.iter().any(|&e| e < 0) {
                return Err(Error::Domain(format!("negative exponent in {exp:?}")));
            }
            let slot: &mut Coefficient = map.entry(exp).or_insert(0);
            *slot = slot
                .checked_add(c)
                .ok_or(Error::Overflow("a polynomial coefficient"))?;
        }
        map.retain(|_, c| *c != 0);
        Ok(SchurPoly { n, terms: map })
    }

    pub fn zero(n: usize) -> Self {
        SchurPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        SchurPoly {
            n,
            terms: BTreeMap::from([(vec![0; n], 1)]),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Entry>, Coefficient> {
        &self.terms
    }

    pub fn coefficient(&self, exp: &[Entry]) -> Coefficient {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// First exponent whose coefficient changes under an adjacent transposition.
    pub fn symmetry_violation(&self) -> Option<(Vec<Entry>, usize)> {
        for (exp, &c) in &self.terms {
            for k in 0..self.n.saturating_sub(1) {
                let mut swapped = exp.clone();
                swapped.swap(k, k + 1);
                if self.coefficient(&swapped) != c {
                    return Some((exp.clone(), k + 1));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SchurPoly, c: Coefficient) -> Result<SchurPoly> {
        check_rank(self.n, other.n)?;
        let mut terms = self.terms.clone();
        for (exp, &d) in &other.terms {
            let add = d
                .checked_mul(c)
                .ok_or(Error::Overflow("a polynomial coefficient"))?;
            let slot = terms.entry(exp.clone()).or_insert(0);
            *slot = slot
                .checked_add(add)
                .ok_or(Error::Overflow("a polynomial coefficient"))?;
        }
        terms.retain(|_, c| *c != 0);
        Ok(SchurPoly { n: self.n, terms })
    }
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

/// Calls `f` with the weight of every GT pattern with top row `top`.
fn for_each_pattern_weight(top: &[Entry], f: &mut dyn FnMut(&[Entry])) {
    let n = top.len();
    // weight[i-1] = |row i| - |row i-1|; rows are produced from the top down
    let mut weight = vec![0; n];
    fn descend(upper: &[Entry], weight: &mut Vec<Entry>, f: &mut dyn FnMut(&[Entry])) {
        let i = upper.len();
        let upper_sum: Entry = upper.iter().sum();
        if i == 1 {
            weight[0] = upper_sum;
            f(weight);
            return;
        }
        let mut row = vec![0; i - 1];
        fill(upper, &mut row, 0, weight, upper_sum, f);
    }
    fn fill(
        upper: &[Entry],
        row: &mut Vec<Entry>,
        j: usize,
        weight: &mut Vec<Entry>,
        upper_sum: Entry,
        f: &mut dyn FnMut(&[Entry]),
    ) {
        if j == row.len() {
            weight[upper.len() - 1] = upper_sum - row.iter().sum::<Entry>();
            let next = row.clone();
            descend(&next, weight, f);
            return;
        }
        for v in upper[j + 1]..=upper[j] {
            row[j] = v;
            fill(upper, row, j + 1, weight, upper_sum, f);
        }
    }
    descend(top, &mut weight, f);
}

/// The Schur polynomial `s_lambda(x_1..x_n)`: the coefficient of `x^alpha` is the
/// number of GT patterns of type `lambda` and weight `alpha`.
pub fn schur(lambda: &DominantWeight, n: usize) -> Result<SchurPoly> {
    check_rank(n, lambda.n())?;
    if !lambda.is_polynomial() {
        return Err(Error::Domain(format!(
            "{:?} has a negative part",
            lambda.parts()
        )));
    }
    let mut terms: BTreeMap<Vec<Entry>, Coefficient> = BTreeMap::new();
    for_each_pattern_weight(lambda.parts(), &mut |w| {
        *terms.entry(w.to_vec()).or_insert(0) += 1
    });
    Ok(SchurPoly { n, terms })
}

pub fn multiply(p: &SchurPoly, q: &SchurPoly) -> Result<SchurPoly> {
    check_rank(p.n, q.n)?;
    let mut terms: BTreeMap<Vec<Entry>, Coefficient> = BTreeMap::new();
    for (a, &c) in &p.terms {
        for (b, &d) in &q.terms {
            let exp: Vec<Entry> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            let prod = c
                .checked_mul(d)
                .ok_or(Error::Overflow("a product coefficient"))?;
            let slot = terms.entry(exp).or_insert(0);
            *slot = slot
                .checked_add(prod)
                .ok_or(Error::Overflow("a product coefficient"))?;
        }
    }
    terms.retain(|_, c| *c != 0);
    Ok(SchurPoly { n: p.n, terms })
}

/// `sum c_lambda s_lambda`.
pub fn schur_combination(
    n: usize,
    coefficients: &BTreeMap<DominantWeight, Coefficient>,
) -> Result<SchurPoly> {
    let mut p = SchurPoly::zero(n);
    for (lambda, &c) in coefficients {
        p = p.add_scaled(&schur(lambda, n)?, c)?;
    }
    Ok(p)
}

/// Writes a symmetric polynomial in the Schur basis.
///
/// Repeatedly removes `c * s_lambda`, where `x^lambda` is the lexicographically
/// greatest monomial left; every other monomial of `s_lambda` is smaller, so the
/// leading exponent strictly decreases.
pub fn schur_decompose(p: &SchurPoly) -> Result<BTreeMap<DominantWeight, Coefficient>> {
    if let Some((exp, k)) = p.symmetry_violation() {
        return Err(Error::NotSymmetric(format!(
            "coefficient of x^{exp:?} changes when x_{k} and x_{} are swapped",
            k + 1
        )));
    }
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    let mut cache: HashMap<Vec<Entry>, SchurPoly> = HashMap::new();
    while let Some((lead, &c)) = rest.terms.iter().next_back() {
        let lead = lead.clone();
        if c < 0 {
            return Err(Error::NotSchurPositive {
                partition: lead,
                coefficient: c,
            });
        }
        let lambda = DominantWeight::polynomial(lead.clone()).map_err(|_| {
            Error::NotSymmetric(format!("leading exponent {lead:?} is not a partition"))
        })?;
        if !cache.contains_key(&lead) {
            cache.insert(lead.clone(), schur(&lambda, p.n)?);
        }
        rest = rest.add_scaled(&cache[&lead], -c)?;
        out.insert(lambda, c);
    }
    Ok(out)
}

/// The Schur-basis expansion of `s_mu * s_nu` in `n = mu.n()` variables.
pub fn product_decomposition(
    mu: &DominantWeight,
    nu: &DominantWeight,
) -> Result<BTreeMap<DominantWeight, Coefficient>> {
    let n = mu.n();
    schur_decompose(&multiply(&schur(mu, n)?, &schur(nu, n)?)?)
}

/// `c^lambda_{mu,nu}` read off the decomposition of `s_mu * s_nu`.
pub fn lr_coefficient_oracle(t: &LRTriple) -> Result<u64> {
    let d = product_decomposition(t.mu(), t.nu())?;
    Ok(d.get(t.lambda()).map_or(0, |&c| c as u64))
}
