//! Random objects for property checks and sampled sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bijections::LRTriple;
use crate::enumeration::{enumerate_hives, enumerate_lr, enumerate_ssyt};
use crate::hives::make_boundary_frame;
use crate::tableaux::SkewTableau;
use crate::types::{DominantWeight, Entry, HArray, Shape, TArray};

/// A partition with `n` parts, each at most `max_part`.
pub fn partition<R: Rng + ?Sized>(rng: &mut R, n: usize, max_part: Entry) -> DominantWeight {
    let mut parts: Vec<Entry> = (0..n).map(|_| rng.gen_range(0..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight::polynomial(parts).expect("sorted and non-negative")
}

/// A t-array with independent entries in `lo..=hi`.
pub fn tarray<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: Entry, hi: Entry) -> TArray {
    TArray::from_fn(n, |_, _| rng.gen_range(lo..=hi))
}

/// An h-array with `h_{0,0} = 0` and other entries independent in `lo..=hi`.
pub fn harray<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: Entry, hi: Entry) -> HArray {
    HArray::from_fn(n, |a, b| {
        if a == 0 && b == 0 {
            0
        } else {
            rng.gen_range(lo..=hi)
        }
    })
}

/// A GT pattern with non-negative entries and type bounded by `max_part`, built
/// row by row with each entry uniform in its interlacing interval.
pub fn gt_pattern<R: Rng + ?Sized>(rng: &mut R, n: usize, max_part: Entry) -> TArray {
    let top = partition(rng, n, max_part);
    let mut rows = vec![top.parts().to_vec()];
    for i in (1..n).rev() {
        let upper = rows.last().expect("non-empty");
        let row = (0..i)
            .map(|j| rng.gen_range(upper[j + 1]..=upper[j]))
            .collect();
        rows.push(row);
    }
    rows.reverse();
    TArray::from_rows(rows).expect("row i has i entries")
}

/// A triple `(mu, nu, sort(mu + w nu))` for a random permutation `w`; such triples
/// always have a positive coefficient.
pub fn positive_triple<R: Rng + ?Sized>(rng: &mut R, n: usize, max_part: Entry) -> LRTriple {
    let mu = partition(rng, n, max_part);
    let nu = partition(rng, n, max_part);
    let mut perm: Vec<Entry> = nu.parts().to_vec();
    perm.shuffle(rng);
    let mut lambda: Vec<Entry> = mu.parts().iter().zip(&perm).map(|(a, b)| a + b).collect();
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    LRTriple::new(
        mu,
        nu,
        DominantWeight::polynomial(lambda).expect("sorted sums"),
    )
    .expect("same rank")
}

/// A uniformly chosen hive of a random positive triple.
pub fn hive<R: Rng + ?Sized>(rng: &mut R, n: usize, max_part: Entry) -> (LRTriple, HArray) {
    loop {
        let t = positive_triple(rng, n, max_part);
        let all = enumerate_hives(&t);
        if let Some(h) = all.choose(rng) {
            return (t, h.clone());
        }
    }
}

/// A uniformly chosen LR tableau of a random positive triple.
pub fn lr_tableau<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_part: Entry,
) -> (LRTriple, SkewTableau) {
    loop {
        let t = positive_triple(rng, n, max_part);
        let all = enumerate_lr(&t);
        if let Some(y) = all.choose(rng) {
            return (t, y.clone());
        }
    }
}

/// A hive of a random positive triple whose interior entries are each shifted,
/// with probability one half, by a value in `-spread..=spread`. The border is
/// untouched, so the result lies in `H(mu, nu, lambda)` but need not be a hive.
pub fn perturbed_hive<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_part: Entry,
    spread: Entry,
) -> (LRTriple, HArray) {
    let (t, mut h) = hive(rng, n, max_part);
    for (a, b) in HArray::interior_positions(n) {
        if rng.gen_bool(0.5) {
            let v = h.get(a, b) + rng.gen_range(-spread..=spread);
            h = h.with_entry(a, b, v).expect("interior position");
        }
    }
    (t, h)
}

/// An h-array on the border of a random positive triple with interior entries
/// uniform in `0..=|lambda|`.
pub fn bordered_harray<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_part: Entry,
) -> (LRTriple, HArray) {
    let t = positive_triple(rng, n, max_part);
    let b = t.boundary().expect("sizes agree");
    let top: Entry = t.lambda().parts().iter().sum();
    let values: Vec<Entry> = HArray::interior_positions(n)
        .map(|_| rng.gen_range(0..=top))
        .collect();
    let h = make_boundary_frame(&b)
        .and_then(|f| f.fill(&values))
        .expect("one value per hole");
    (t, h)
}

/// A semistandard skew tableau with random contained shape and random content.
pub fn skew_tableau<R: Rng + ?Sized>(rng: &mut R, n: usize, max_part: Entry) -> SkewTableau {
    loop {
        let outer = partition(rng, n, max_part);
        let mut inner_parts: Vec<Entry> = outer
            .parts()
            .iter()
            .map(|&p| rng.gen_range(0..=p))
            .collect();
        inner_parts.sort_unstable_by(|a, b| b.cmp(a));
        let inner = DominantWeight::polynomial(inner_parts).expect("sorted");
        if !outer.contains(&inner) {
            continue;
        }
        let shape = Shape::new(outer, inner).expect("same rank");
        let boxes: Entry = (1..=n).map(|j| shape.row_length(j)).sum();
        let mut content = vec![0; n];
        for _ in 0..boxes {
            content[rng.gen_range(0..n)] += 1;
        }
        if let Some(y) = enumerate_ssyt(&shape, &content).choose(rng) {
            return y.clone();
        }
    }
}
