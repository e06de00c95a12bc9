//! Backtracking enumeration of the four families.
//!
//! Each search is a sequence of integer variables. At every variable the search
//! derives an interval from the values already placed, tries the values in
//! increasing order, and rejects a value as soon as a constraint that has become
//! fully determined fails. Output order is therefore lexicographic in the
//! variable order of each search:
//!
//! * GZ schemes: rows `n-1, n-2, ..., 1`, each left to right (row `n` is the type);
//! * LR tableaux: the content matrix read row of the tableau by row, `a_{1,j}..a_{n,j}`;
//! * hives (direct strategy): interior entries `h_{a,b}` ordered by `a`, then `b`.
//!
//! The orders of different models do not correspond under the bijections.
//!
//! Counting and collecting split the tree on the values of the first block of
//! variables (the top free row for GZ schemes, the first tableau row for LR
//! tableaux) and run the subtrees on the rayon pool. Results are merged in
//! subtree order, so output does not depend on the number of workers.

use std::num::NonZeroUsize;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections::LRTriple;
use crate::error::Result;
use crate::gt::GZTriple;
use crate::hives::{make_boundary_frame, reconstruct_from_t1, HiveFrame};
use crate::tableaux::{ContentMatrix, SkewTableau};
use crate::types::{DominantWeight, Entry, HArray, Shape, TArray};

/// An integer search whose variables are assigned in a fixed order.
trait IntervalSearch: Sync {
    type Item: Send;

    fn len(&self) -> usize;

    /// Checks that do not depend on any variable.
    fn feasible(&self) -> bool;

    /// Allowed interval for variable `k`, given `vals[..k]`. `None` means no value fits.
    fn bounds(&self, k: usize, vals: &[Entry]) -> Option<(Entry, Entry)>;

    /// Constraints that became fully determined once `vals[k]` was placed.
    fn accept(&self, k: usize, vals: &[Entry]) -> bool;

    fn build(&self, vals: &[Entry]) -> Self::Item;

    /// Number of leading variables whose joint values partition the work.
    fn split_depth(&self) -> usize;
}

fn walk<S: IntervalSearch + ?Sized>(
    s: &S,
    vals: &mut Vec<Entry>,
    stop: usize,
    f: &mut dyn FnMut(&[Entry]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let k = vals.len();
    if k == stop {
        return f(vals);
    }
    let Some((lo, hi)) = s.bounds(k, vals) else {
        return ControlFlow::Continue(());
    };
    let mut v = lo;
    while v <= hi {
        vals.push(v);
        if s.accept(k, vals) {
            walk(s, vals, stop, f)?;
        }
        vals.pop();
        v += 1;
    }
    ControlFlow::Continue(())
}

fn visit_search<S: IntervalSearch>(s: &S, f: &mut dyn FnMut(S::Item) -> ControlFlow<()>) {
    if !s.feasible() {
        return;
    }
    let mut vals = Vec::with_capacity(s.len());
    let _ = walk(s, &mut vals, s.len(), &mut |v| f(s.build(v)));
}

fn prefixes<S: IntervalSearch>(s: &S) -> Vec<Vec<Entry>> {
    let mut out = Vec::new();
    let depth = s.split_depth().min(s.len());
    let mut vals = Vec::with_capacity(s.len());
    let _ = walk(s, &mut vals, depth, &mut |v| {
        out.push(v.to_vec());
        ControlFlow::Continue(())
    });
    out
}

fn count_search<S: IntervalSearch>(s: &S) -> u64 {
    if !s.feasible() {
        return 0;
    }
    prefixes(s)
        .into_par_iter()
        .map(|mut p| {
            let mut c = 0u64;
            let _ = walk(s, &mut p, s.len(), &mut |_| {
                c += 1;
                ControlFlow::Continue(())
            });
            c
        })
        .sum()
}

fn collect_search<S: IntervalSearch>(s: &S) -> Vec<S::Item> {
    if !s.feasible() {
        return Vec::new();
    }
    let parts: Vec<Vec<S::Item>> = prefixes(s)
        .into_par_iter()
        .map(|mut p| {
            let mut items = Vec::new();
            let _ = walk(s, &mut p, s.len(), &mut |v| {
                items.push(s.build(v));
                ControlFlow::Continue(())
            });
            items
        })
        .collect();
    parts.into_iter().flatten().collect()
}

/// Search over `GZ(type, weight, bound)`.
struct GzSearch<'a> {
    spec: &'a GZTriple,
    n: usize,
    /// `(row, position)` of each variable.
    cells: Vec<(usize, usize)>,
    /// Target row sums `sum_{k<=i} w_k`, indexed by row (1-based).
    row_sums: Vec<Entry>,
}

impl<'a> GzSearch<'a> {
    fn new(spec: &'a GZTriple) -> Self {
        let n = spec.n();
        let cells = (1..n)
            .rev()
            .flat_map(|i| (1..=i).map(move |j| (i, j)))
            .collect();
        let mut row_sums = vec![0; n + 1];
        for i in 1..=n {
            row_sums[i] = row_sums[i - 1] + spec.weight[i - 1];
        }
        GzSearch {
            spec,
            n,
            cells,
            row_sums,
        }
    }

    /// Variable index of `t_j^(i)` for `i < n`.
    fn index(&self, i: usize, j: usize) -> usize {
        // rows n-1 .. i+1 precede row i
        let before: usize = (i + 1..self.n).sum();
        before + j - 1
    }

    fn entry(&self, vals: &[Entry], i: usize, j: usize) -> Entry {
        if i == self.n {
            self.spec.type_wt.part(j)
        } else {
            vals[self.index(i, j)]
        }
    }

    fn exponent_ok(&self, vals: &[Entry], i: usize, j: usize) -> bool {
        let mut e = self.entry(vals, i + 1, j) - self.entry(vals, i, j);
        for h in 1..j {
            e += self.entry(vals, i + 1, h) - 2 * self.entry(vals, i, h)
                + self.entry(vals, i - 1, h);
        }
        e <= self.spec.bound_wt.part(i) - self.spec.bound_wt.part(i + 1)
    }
}

impl IntervalSearch for GzSearch<'_> {
    type Item = TArray;

    fn len(&self) -> usize {
        self.cells.len()
    }

    fn feasible(&self) -> bool {
        let type_sum: Entry = self.spec.type_wt.parts().iter().sum();
        type_sum == self.row_sums[self.n]
    }

    fn bounds(&self, k: usize, vals: &[Entry]) -> Option<(Entry, Entry)> {
        let (i, j) = self.cells[k];
        let upper_row = |p: usize| self.entry(vals, i + 1, p);
        let lo = upper_row(j + 1);
        let hi = upper_row(j);
        let placed: Entry = (1..j).map(|p| self.entry(vals, i, p)).sum();
        let (rest_lo, rest_hi) =
            (j + 1..=i).fold((0, 0), |(l, h), p| (l + upper_row(p + 1), h + upper_row(p)));
        let need = self.row_sums[i] - placed;
        let lo = lo.max(need - rest_hi);
        let hi = hi.min(need - rest_lo);
        (lo <= hi).then_some((lo, hi))
    }

    fn accept(&self, k: usize, vals: &[Entry]) -> bool {
        let (i, j) = self.cells[k];
        if j == 1 && !self.exponent_ok(vals, i, 1) {
            return false;
        }
        // t_j^(i) completes eps_{j+1}^(i+1)
        if i + 1 < self.n && !self.exponent_ok(vals, i + 1, j + 1) {
            return false;
        }
        true
    }

    fn build(&self, vals: &[Entry]) -> TArray {
        TArray::from_fn(self.n, |i, j| self.entry(vals, i, j))
    }

    fn split_depth(&self) -> usize {
        self.n.saturating_sub(1)
    }
}

/// Search over skew semistandard tableaux of a fixed shape and content, optionally
/// restricted to Yamanouchi fillings.
struct TableauSearch<'a> {
    shape: &'a Shape,
    content: &'a [Entry],
    yamanouchi: bool,
    n: usize,
}

impl<'a> TableauSearch<'a> {
    /// Variable `k` is `a_{i,j}` with `j = k / n + 1`, `i = k % n + 1`.
    fn cell(&self, k: usize) -> (usize, usize) {
        (k % self.n + 1, k / self.n + 1)
    }

    fn a(&self, vals: &[Entry], i: usize, j: usize) -> Entry {
        vals[(j - 1) * self.n + (i - 1)]
    }
}

impl IntervalSearch for TableauSearch<'_> {
    type Item = SkewTableau;

    fn len(&self) -> usize {
        self.n * self.n
    }

    fn feasible(&self) -> bool {
        if !self.shape.is_contained() || self.content.len() != self.n {
            return false;
        }
        let boxes: Entry = (1..=self.n).map(|j| self.shape.row_length(j)).sum();
        self.content.iter().all(|&c| c >= 0) && boxes == self.content.iter().sum::<Entry>()
    }

    fn bounds(&self, k: usize, vals: &[Entry]) -> Option<(Entry, Entry)> {
        let n = self.n;
        let (i, j) = self.cell(k);
        let inner = self.shape.inner();
        let row_len = self.shape.row_length(j);
        let placed_in_row: Entry = (1..i).map(|p| self.a(vals, p, j)).sum();
        let used_of_i: Entry = (1..j).map(|q| self.a(vals, i, q)).sum();

        let mut lo: Entry = 0;
        let mut hi = row_len - placed_in_row;
        hi = hi.min(self.content[i - 1] - used_of_i);
        if i == n {
            // the row must be completed by the largest entry
            lo = lo.max(row_len - placed_in_row);
        }
        if j == n {
            // the last row takes every remaining copy of i
            lo = lo.max(self.content[i - 1] - used_of_i);
        }
        if j > 1 {
            // inner_j + sum_{p<=i} a_{p,j} <= inner_{j-1} + sum_{p<=i-1} a_{p,j-1}
            let prev: Entry = (1..i).map(|p| self.a(vals, p, j - 1)).sum();
            hi = hi.min(inner.part(j - 1) + prev - inner.part(j) - placed_in_row);
        }
        if self.yamanouchi && i > 1 {
            // sum_{q<=j} a_{i,q} <= sum_{q<=j-1} a_{i-1,q}
            let prev: Entry = (1..j).map(|q| self.a(vals, i - 1, q)).sum();
            hi = hi.min(prev - used_of_i);
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn accept(&self, _k: usize, _vals: &[Entry]) -> bool {
        true
    }

    fn build(&self, vals: &[Entry]) -> SkewTableau {
        let n = self.n;
        let a = (1..=n)
            .map(|i| (1..=n).map(|j| self.a(vals, i, j)).collect())
            .collect();
        SkewTableau::new(
            self.shape.clone(),
            ContentMatrix::new(a).expect("search keeps entries non-negative"),
        )
        .expect("search fills every row exactly")
    }

    fn split_depth(&self) -> usize {
        self.n
    }
}

/// One rhombus inequality `constant + sum coef * h_pos >= 0` restricted to holes.
#[derive(Debug, Clone)]
struct Inequality {
    constant: Entry,
    terms: Vec<(Entry, usize)>,
}

/// Direct search over hive interiors, bounding each hole by the rhombi it completes.
struct HiveSearch {
    frame: HiveFrame,
    /// Inequalities with no holes; all must hold.
    fixed: Vec<Inequality>,
    /// `attached[k]`: inequalities whose last hole (in fill order) is `k`.
    attached: Vec<Vec<Inequality>>,
}

impl HiveSearch {
    fn new(frame: HiveFrame) -> Self {
        let n = frame.n();
        let holes = frame.holes();
        let hole_index = |a: usize, b: usize| holes.iter().position(|&p| p == (a, b));

        // (obtuse, obtuse, acute, acute) corners of every fundamental rhombus
        let mut rhombi: Vec<[(usize, usize); 4]> = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                rhombi.push([(a, b), (a - 1, b - 1), (a - 1, b), (a, b - 1)]);
            }
        }
        for a in 1..n {
            for b in a..n {
                rhombi.push([(a - 1, b), (a, b), (a, b + 1), (a - 1, b - 1)]);
                rhombi.push([(a, b), (a, b + 1), (a + 1, b + 1), (a - 1, b)]);
            }
        }

        let mut fixed = Vec::new();
        let mut attached = vec![Vec::new(); holes.len()];
        for r in rhombi {
            let mut ineq = Inequality {
                constant: 0,
                terms: Vec::new(),
            };
            for (idx, &(a, b)) in r.iter().enumerate() {
                let coef = if idx < 2 { 1 } else { -1 };
                match hole_index(a, b) {
                    Some(k) => ineq.terms.push((coef, k)),
                    None => ineq.constant += coef * frame.get(a, b).expect("border entry"),
                }
            }
            match ineq.terms.iter().map(|&(_, k)| k).max() {
                None => fixed.push(ineq),
                Some(last) => attached[last].push(ineq),
            }
        }
        HiveSearch {
            frame,
            fixed,
            attached,
        }
    }
}

impl IntervalSearch for HiveSearch {
    type Item = HArray;

    fn len(&self) -> usize {
        self.attached.len()
    }

    fn feasible(&self) -> bool {
        self.fixed.iter().all(|q| q.constant >= 0)
    }

    fn bounds(&self, k: usize, vals: &[Entry]) -> Option<(Entry, Entry)> {
        let mut lo = Entry::MIN;
        let mut hi = Entry::MAX;
        for q in &self.attached[k] {
            let mut rest = q.constant;
            let mut own = 0;
            for &(c, p) in &q.terms {
                if p == k {
                    own = c;
                } else {
                    rest += c * vals[p];
                }
            }
            if own > 0 {
                lo = lo.max(-rest);
            } else {
                hi = hi.min(rest);
            }
        }
        debug_assert!(
            lo > Entry::MIN && hi < Entry::MAX,
            "every hole is bounded on both sides"
        );
        (lo <= hi).then_some((lo, hi))
    }

    fn accept(&self, _k: usize, _vals: &[Entry]) -> bool {
        true
    }

    fn build(&self, vals: &[Entry]) -> HArray {
        self.frame.fill(vals).expect("one value per hole")
    }

    fn split_depth(&self) -> usize {
        let n = self.frame.n();
        n.saturating_sub(2).min(self.len())
    }
}

/// Which family of the triple to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Lr,
    Hive,
    Gz1,
    Gz2,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Lr, Model::Hive, Model::Gz1, Model::Gz2];

    pub fn name(self) -> &'static str {
        match self {
            Model::Lr => "lr",
            Model::Hive => "hive",
            Model::Gz1 => "gz1",
            Model::Gz2 => "gz2",
        }
    }
}

impl std::str::FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lr" => Ok(Model::Lr),
            "hive" => Ok(Model::Hive),
            "gz1" => Ok(Model::Gz1),
            "gz2" => Ok(Model::Gz2),
            other => Err(format!(
                "unknown model `{other}` (expected lr, hive, gz1 or gz2)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Count,
    Stream,
}

/// A request as issued by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRequest {
    pub model: Model,
    pub triple: LRTriple,
    pub mode: Mode,
    pub limit: Option<NonZeroUsize>,
}

/// One member of any family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Member {
    Tableau(SkewTableau),
    Hive(HArray),
    Pattern(TArray),
}

/// Streams `GZ(spec)` in lexicographic order; `f` may stop early.
pub fn visit_gz(spec: &GZTriple, f: &mut dyn FnMut(TArray) -> ControlFlow<()>) {
    visit_search(&GzSearch::new(spec), f)
}

pub fn enumerate_gz(spec: &GZTriple) -> Vec<TArray> {
    collect_search(&GzSearch::new(spec))
}

pub fn count_gz(spec: &GZTriple) -> u64 {
    count_search(&GzSearch::new(spec))
}

fn lr_search<'a>(t: &'a LRTriple, shape: &'a Shape) -> TableauSearch<'a> {
    TableauSearch {
        shape,
        content: t.nu().parts(),
        yamanouchi: true,
        n: t.n(),
    }
}

pub fn visit_lr(t: &LRTriple, f: &mut dyn FnMut(SkewTableau) -> ControlFlow<()>) {
    let shape = t.shape();
    visit_search(&lr_search(t, &shape), f)
}

pub fn enumerate_lr(t: &LRTriple) -> Vec<SkewTableau> {
    let shape = t.shape();
    collect_search(&lr_search(t, &shape))
}

pub fn count_lr(t: &LRTriple) -> u64 {
    let shape = t.shape();
    count_search(&lr_search(t, &shape))
}

/// All semistandard tableaux of `shape` with the given content.
pub fn enumerate_ssyt(shape: &Shape, content: &[Entry]) -> Vec<SkewTableau> {
    collect_search(&TableauSearch {
        shape,
        content,
        yamanouchi: false,
        n: shape.n(),
    })
}

/// Number of semistandard tableaux of straight shape `lambda` and content `alpha`.
pub fn kostka(lambda: &DominantWeight, alpha: &[Entry]) -> u64 {
    let shape = Shape::straight(lambda.clone()).expect("polynomial shape");
    count_search(&TableauSearch {
        shape: &shape,
        content: alpha,
        yamanouchi: false,
        n: shape.n(),
    })
}

fn hive_search(t: &LRTriple) -> Option<HiveSearch> {
    let b = t.boundary().ok()?;
    Some(HiveSearch::new(make_boundary_frame(&b).ok()?))
}

/// Hives through the default strategy: GZ schemes of the first kind glued onto the boundary.
pub fn visit_hives(t: &LRTriple, f: &mut dyn FnMut(HArray) -> ControlFlow<()>) {
    let Ok(b) = t.boundary() else { return };
    visit_gz(&t.gz1(), &mut |s| {
        f(reconstruct_from_t1(&b, &s.dual()).expect("GZ scheme glues onto its boundary"))
    })
}

pub fn enumerate_hives(t: &LRTriple) -> Vec<HArray> {
    let Ok(b) = t.boundary() else {
        return Vec::new();
    };
    enumerate_gz(&t.gz1())
        .into_par_iter()
        .map(|s| reconstruct_from_t1(&b, &s.dual()).expect("GZ scheme glues onto its boundary"))
        .collect()
}

/// Hives through the direct interior backtracker.
pub fn enumerate_hives_direct(t: &LRTriple) -> Vec<HArray> {
    hive_search(t).map_or_else(Vec::new, |s| collect_search(&s))
}

pub fn visit_hives_direct(t: &LRTriple, f: &mut dyn FnMut(HArray) -> ControlFlow<()>) {
    if let Some(s) = hive_search(t) {
        visit_search(&s, f)
    }
}

pub fn count_hives_direct(t: &LRTriple) -> u64 {
    hive_search(t).map_or(0, |s| count_search(&s))
}

/// Cardinality of the model's family. The hive count uses the direct backtracker,
/// so it is computed independently of the GZ search.
pub fn count(model: Model, t: &LRTriple) -> u64 {
    match model {
        Model::Lr => count_lr(t),
        Model::Hive => count_hives_direct(t),
        Model::Gz1 => count_gz(&t.gz1()),
        Model::Gz2 => count_gz(&t.gz2()),
    }
}

/// Streams the model's family, honouring `limit`.
pub fn visit(
    model: Model,
    t: &LRTriple,
    limit: Option<NonZeroUsize>,
    f: &mut dyn FnMut(Member) -> Result<()>,
) -> Result<()> {
    let cap = limit.map_or(usize::MAX, NonZeroUsize::get);
    let mut seen = 0usize;
    let mut err = None;
    let mut sink = |m: Member| {
        if let Err(e) = f(m) {
            err = Some(e);
            return ControlFlow::Break(());
        }
        seen += 1;
        if seen >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };
    match model {
        Model::Lr => visit_lr(t, &mut |y| sink(Member::Tableau(y))),
        Model::Hive => visit_hives(t, &mut |h| sink(Member::Hive(h))),
        Model::Gz1 => visit_gz(&t.gz1(), &mut |s| sink(Member::Pattern(s))),
        Model::Gz2 => visit_gz(&t.gz2(), &mut |s| sink(Member::Pattern(s))),
    }
    err.map_or(Ok(()), Err)
}
