//! Individual verification checks. Each returns `Err` with a one-line reason.

use std::collections::{BTreeMap, BTreeSet};

use lrhive::bijections::{
    gz1_to_hive, gz2_to_hive, hive_content_matrix, hive_gz_maps, hive_to_lr, lr_to_hive,
    lr_to_hive_direct, phi_gz_to_lr, phi_lr_to_gz, psi_gz2_to_lr, psi_lr_to_gz2,
};
use lrhive::enumeration::{
    count, enumerate_gz, enumerate_hives, enumerate_hives_direct, enumerate_lr, kostka, Model,
};
use lrhive::gt::{check_exponents, check_ic1, check_ic2, gz_membership, is_gt_pattern};
use lrhive::hives::{
    boundary_of, check_rc, derived_t1, derived_t2, derived_t3, fiber_coordinates, is_hive,
};
use lrhive::oracle::{
    lr_coefficient_oracle, schur, schur_combination, schur_decompose, Coefficient,
};
use lrhive::tableaux::symbolic;
use lrhive::{DominantWeight, Entry, HArray, LRTriple, TArray};
use rand::Rng;
use serde::Serialize;

pub type Check = Result<(), String>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

/// The four family sizes and the oracle's coefficient for one triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleCounts {
    pub lr: u64,
    pub hive: u64,
    pub gz1: u64,
    pub gz2: u64,
    pub oracle: u64,
}

pub fn triple_counts(t: &LRTriple) -> Result<TripleCounts, String> {
    Ok(TripleCounts {
        lr: count(Model::Lr, t),
        hive: count(Model::Hive, t),
        gz1: count(Model::Gz1, t),
        gz2: count(Model::Gz2, t),
        oracle: lr_coefficient_oracle(t).map_err(|e| e.to_string())?,
    })
}

pub fn check_four_models(c: &TripleCounts) -> Check {
    ensure(
        c.lr == c.oracle && c.hive == c.oracle && c.gz1 == c.oracle && c.gz2 == c.oracle,
        || {
            format!(
                "counts disagree: lr={} hive={} gz1={} gz2={} oracle={}",
                c.lr, c.hive, c.gz1, c.gz2, c.oracle
            )
        },
    )
}

fn step<T>(r: lrhive::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

/// Every map is checked on every member of every family of `t`, and the images of
/// each family are compared with the enumerated target families. Returns the
/// number of objects visited.
pub fn check_round_trips(t: &LRTriple) -> Result<usize, String> {
    let tableaux = enumerate_lr(t);
    let hives = enumerate_hives(t);
    let direct: BTreeSet<HArray> = enumerate_hives_direct(t).into_iter().collect();
    let gz1 = enumerate_gz(&t.gz1());
    let gz2 = enumerate_gz(&t.gz2());

    let mut phi_image = BTreeSet::new();
    let mut psi_image = BTreeSet::new();
    let mut hive_image = BTreeSet::new();
    for y in &tableaux {
        let s1 = step(phi_lr_to_gz(y, t), "phi")?;
        ensure(step(phi_gz_to_lr(&s1, t), "phi inverse")? == *y, || {
            "phi inverse(phi(Y)) != Y".into()
        })?;
        let s2 = step(psi_lr_to_gz2(y, t), "psi")?;
        ensure(step(psi_gz2_to_lr(&s2, t), "psi inverse")? == *y, || {
            "psi inverse(psi(Y)) != Y".into()
        })?;
        let h = step(lr_to_hive(y, t), "lr_to_hive")?;
        ensure(
            step(lr_to_hive_direct(y, t), "lr_to_hive_direct")? == h,
            || "counting formula disagrees with the composed map".into(),
        )?;
        ensure(step(hive_to_lr(&h, t), "hive_to_lr")? == *y, || {
            "hive_to_lr(lr_to_hive(Y)) != Y".into()
        })?;
        phi_image.insert(s1);
        psi_image.insert(s2);
        hive_image.insert(h);
    }
    for h in &hives {
        let (s1, s2) = step(hive_gz_maps(h), "hive_gz_maps")?;
        ensure(step(gz1_to_hive(&s1, t), "gz1_to_hive")? == *h, || {
            "gz1_to_hive(T1*) != H".into()
        })?;
        ensure(step(gz2_to_hive(&s2, t), "gz2_to_hive")? == *h, || {
            "gz2_to_hive(T2) != H".into()
        })?;
        let y = step(hive_to_lr(h, t), "hive_to_lr")?;
        ensure(step(lr_to_hive(&y, t), "lr_to_hive")? == *h, || {
            "lr_to_hive(hive_to_lr(H)) != H".into()
        })?;
    }
    for s in &gz1 {
        let y = step(phi_gz_to_lr(s, t), "phi inverse")?;
        ensure(step(phi_lr_to_gz(&y, t), "phi")? == *s, || {
            "phi(phi inverse(S)) != S".into()
        })?;
        let h = step(gz1_to_hive(s, t), "gz1_to_hive")?;
        ensure(step(hive_gz_maps(&h), "hive_gz_maps")?.0 == *s, || {
            "T1*(gz1_to_hive(S)) != S".into()
        })?;
    }
    for s in &gz2 {
        let y = step(psi_gz2_to_lr(s, t), "psi inverse")?;
        ensure(step(psi_lr_to_gz2(&y, t), "psi")? == *s, || {
            "psi(psi inverse(S)) != S".into()
        })?;
        let h = step(gz2_to_hive(s, t), "gz2_to_hive")?;
        ensure(step(hive_gz_maps(&h), "hive_gz_maps")?.1 == *s, || {
            "T2(gz2_to_hive(S)) != S".into()
        })?;
    }
    ensure(phi_image == gz1.iter().cloned().collect(), || {
        "phi image differs from GZ(mu*, lambda*-nu*, nu*)".into()
    })?;
    ensure(psi_image == gz2.iter().cloned().collect(), || {
        "psi image differs from GZ(nu, lambda-mu, mu)".into()
    })?;
    let hive_set: BTreeSet<HArray> = hives.iter().cloned().collect();
    ensure(hive_image == hive_set, || {
        "lr_to_hive image differs from the enumerated hives".into()
    })?;
    ensure(direct == hive_set, || {
        "direct hive search differs from the GZ-glued hives".into()
    })?;
    Ok(tableaux.len() + hives.len() + gz1.len() + gz2.len())
}

/// IC(1) and IC(2) swap under duality.
pub fn check_dual_swap(t: &TArray) -> Check {
    let d = t.dual();
    ensure(
        check_ic1(t) == check_ic2(&d) && check_ic2(t) == check_ic1(&d),
        || "IC(1)/IC(2) do not swap under duality".into(),
    )
}

/// Rhombus/interlacing equivalences, the hive/GT-pair theorem and the fiber identity
/// on an arbitrary h-array.
pub fn check_array_laws(h: &HArray) -> Check {
    let (t1, t2, t3) = (derived_t1(h), derived_t2(h), derived_t3(h));
    let (rc1, rc2, rc3) = check_rc(h);
    ensure(rc1 == (check_ic2(&t1) && check_ic1(&t2)), || {
        "RC(1) <=> T1 IC(2) and T2 IC(1) fails".into()
    })?;
    ensure(rc2 == (check_ic1(&t1) && check_ic1(&t3)), || {
        "RC(2) <=> T1, T3 IC(1) fails".into()
    })?;
    ensure(rc3 == (check_ic2(&t2) && check_ic2(&t3)), || {
        "RC(3) <=> T2, T3 IC(2) fails".into()
    })?;
    ensure(check_ic1(&t3) == check_ic1(&t1), || {
        "T3 IC(1) <=> T1 IC(1) fails".into()
    })?;
    ensure(check_ic2(&t3) == check_ic2(&t2), || {
        "T3 IC(2) <=> T2 IC(2) fails".into()
    })?;
    ensure(
        is_hive(h) == (is_gt_pattern(&t1) && is_gt_pattern(&t2)),
        || "hive <=> T1, T2 GT patterns fails".into(),
    )?;
    let (f1, f2) = fiber_coordinates(h);
    ensure(f1 == f2, || {
        format!("fiber coordinates differ: {f1:?} vs {f2:?}")
    })?;
    for t in [&t1, &t2, &t3] {
        check_dual_swap(t)?;
    }
    Ok(())
}

fn triple_of(h: &HArray) -> Result<LRTriple, String> {
    let b = boundary_of(h).map_err(|e| e.to_string())?;
    LRTriple::new(b.mu().clone(), b.nu().clone(), b.lambda().clone()).map_err(|e| e.to_string())
}

/// Weight formulas and the three derived-array equivalences for an h-array with a
/// valid border.
pub fn check_boundary_laws(h: &HArray) -> Check {
    let t = triple_of(h)?;
    let n = t.n();
    let (t1, t2) = (derived_t1(h), derived_t2(h));
    let t1s = t1.dual();
    let w1: Vec<Entry> = (1..=n)
        .rev()
        .map(|i| t.lambda().part(i) - t.nu().part(i))
        .collect();
    let w2: Vec<Entry> = (1..=n)
        .map(|i| t.lambda().part(i) - t.mu().part(i))
        .collect();
    ensure(t1.weight() == w1, || {
        format!("weight of T1 is {:?}, expected {w1:?}", t1.weight())
    })?;
    ensure(t2.weight() == w2, || {
        format!("weight of T2 is {:?}, expected {w2:?}", t2.weight())
    })?;
    ensure(
        check_ic1(&t1) == check_exponents(&t2, t.mu().parts()),
        || "T1 IC(1) <=> exponents of T2 bounded by mu fails".into(),
    )?;
    ensure(check_ic2(&t1) == check_ic1(&t2), || {
        "T1 IC(2) <=> T2 IC(1) fails".into()
    })?;
    ensure(
        check_exponents(&t1s, t.nu().dual().parts()) == check_ic2(&t2),
        || "exponents of T1* bounded by nu* <=> T2 IC(2) fails".into(),
    )?;
    let hive = is_hive(h);
    let in1 = gz_membership(&t1s, &t.gz1())
        .map_err(|e| e.to_string())?
        .is_ok();
    let in2 = gz_membership(&t2, &t.gz2())
        .map_err(|e| e.to_string())?
        .is_ok();
    ensure(hive == in1 && hive == in2, || {
        format!("hive={hive} but T1* in gz1={in1}, T2 in gz2={in2}")
    })
}

/// The hive, GZ-scheme and tableau forms of each condition, evaluated on one h-array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionTriple {
    pub hive: [bool; 3],
    pub scheme: [bool; 3],
    pub tableau: [bool; 3],
}

/// Row `k` pairs RC(k+1) with, on the scheme `T1(H)*`, IC(1), IC(2) and the
/// exponent bound, and on the tableau side (content matrix from the counting
/// formula) non-negativity above the diagonal, the semistandard condition and the
/// Yamanouchi condition.
pub fn conditions(h: &HArray, t: &LRTriple) -> ConditionTriple {
    let n = t.n();
    let (rc1, rc2, rc3) = check_rc(h);
    let s = derived_t1(h).dual();
    let a = hive_content_matrix(h);
    ConditionTriple {
        hive: [rc1, rc2, rc3],
        scheme: [
            check_ic1(&s),
            check_ic2(&s),
            check_exponents(&s, t.nu().dual().parts()),
        ],
        tableau: [
            (0..n).all(|l| (l + 1..n).all(|m| a[l][m] >= 0)),
            symbolic::is_semistandard(t.mu().parts(), &a),
            symbolic::is_yamanouchi(&a),
        ],
    }
}

/// Perturbs `h_{a,b}` of the hive `h` by `delta` and checks that each rhombus
/// condition flips exactly when its scheme and tableau counterparts flip. Returns
/// which hive conditions flipped.
pub fn check_perturbation(
    h: &HArray,
    t: &LRTriple,
    a: usize,
    b: usize,
    delta: Entry,
) -> Result<[bool; 3], String> {
    let before = conditions(h, t);
    ensure(before.hive == [true; 3], || {
        "base array is not a hive".into()
    })?;
    let p = h
        .with_entry(a, b, h.get(a, b) + delta)
        .map_err(|e| e.to_string())?;
    let after = conditions(&p, t);
    let mut flipped = [false; 3];
    for (k, flip) in flipped.iter_mut().enumerate() {
        let fh = before.hive[k] != after.hive[k];
        let fs = before.scheme[k] != after.scheme[k];
        let ft = before.tableau[k] != after.tableau[k];
        ensure(fh == fs && fh == ft, || {
            format!(
                "h[{a},{b}] += {delta}: RC({}) flipped={fh}, scheme flipped={fs}, tableau flipped={ft}",
                k + 1
            )
        })?;
        *flip = fh;
    }
    Ok(flipped)
}

pub fn check_semigroup_hives(g: &HArray, h: &HArray) -> Check {
    let s = g.checked_add(h).map_err(|e| e.to_string())?;
    ensure(is_hive(&s), || "sum of hives is not a hive".into())
}

pub fn check_semigroup_patterns(s: &TArray, t: &TArray) -> Check {
    let u = s.checked_add(t).map_err(|e| e.to_string())?;
    ensure(is_gt_pattern(&u), || {
        "sum of GT patterns is not a GT pattern".into()
    })
}

/// All weak compositions of `total` into `n` parts, in lexicographic order.
pub fn compositions(total: Entry, n: usize) -> Vec<Vec<Entry>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Monomial coefficients of `s_lambda` against tableau-enumeration Kostka numbers.
pub fn check_kostka(lambda: &DominantWeight) -> Result<usize, String> {
    let n = lambda.n();
    let s = schur(lambda, n).map_err(|e| e.to_string())?;
    let size = lambda.size().map_err(|e| e.to_string())?;
    let all = compositions(size, n);
    for alpha in &all {
        let expected = kostka(lambda, alpha);
        let got = s.coefficient(alpha);
        ensure(got == expected as Coefficient, || {
            format!(
                "coefficient of x^{alpha:?} in s_{:?} is {got}, Kostka number is {expected}",
                lambda.parts()
            )
        })?;
    }
    Ok(all.len())
}

/// A random non-negative combination of Schur polynomials decomposes back to itself.
pub fn check_decomposition<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_part: Entry,
    terms: usize,
) -> Check {
    let mut coefficients: BTreeMap<DominantWeight, Coefficient> = BTreeMap::new();
    for _ in 0..terms {
        let lambda = lrhive::sample::partition(rng, n, max_part);
        *coefficients.entry(lambda).or_insert(0) += rng.gen_range(1..=5);
    }
    let p = schur_combination(n, &coefficients).map_err(|e| e.to_string())?;
    let back = schur_decompose(&p).map_err(|e| e.to_string())?;
    ensure(back == coefficients, || {
        format!("decomposition {back:?} differs from {coefficients:?}")
    })
}
