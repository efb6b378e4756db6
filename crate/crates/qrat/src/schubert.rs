//! Brute-force finite geometry over small prime fields: Grassmannian points
//! in reduced echelon form, open Schubert cells indexed by partitions, and
//! the point counts that tie the numerator `R(q)` of a q-rational to a union
//! of cells.
//!
//! Two layers of trust are deliberately kept apart. [`count_union`] relies on
//! the cell decomposition (cells are disjoint because the reduced echelon
//! representative is unique), while [`count_grassmannian_raw`] and
//! [`count_union_raw`] enumerate every matrix over the field, reduce, and
//! deduplicate, trusting nothing. Tests require both layers to agree.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::young_interval;
use crate::qrational::QRationalValue;
use crate::rational::ReducedRational;
use crate::snake::lambda_mu_explicit;

/// Hard cap on full-matrix enumerations: `p^(k*n)` matrices.
pub const RAW_ENUM_BUDGET: u128 = 100_000_000;
/// Cells at most this large are counted by physically streaming their
/// points; larger cells contribute their closed-form size `p^|nu|`.
pub const CELL_STREAM_LIMIT: u128 = 10_000;
/// Caps for the complete-flag chain enumeration.
pub const FLAGS_MAX_N: u64 = 4;
pub const FLAGS_MAX_P: u64 = 3;
/// Cap on the ambient dimension accepted by [`verify_main_theorem`].
pub const VERIFY_MAX_N: u64 = 256;

const SUPPORTED_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// A prime field `F_p` for `p` in {2, 3, 5, 7}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if SUPPORTED_PRIMES.contains(&p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::UnsupportedField(p))
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn p8(&self) -> u8 {
        self.p as u8
    }
}

fn inv_mod(a: u8, p: u8) -> u8 {
    (1..p).find(|&x| a as u16 * x as u16 % p as u16 == 1).expect("unit has an inverse")
}

/// In-place reduced row echelon form; returns the rank.
fn row_reduce(mat: &mut [u8], rows: usize, cols: usize, p: u8) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| mat[r * cols + col] != 0) else {
            continue;
        };
        if pivot_row != rank {
            for c in col..cols {
                mat.swap(pivot_row * cols + c, rank * cols + c);
            }
        }
        let inv = inv_mod(mat[rank * cols + col], p);
        if inv != 1 {
            for c in col..cols {
                mat[rank * cols + c] = (mat[rank * cols + c] as u16 * inv as u16 % p as u16) as u8;
            }
        }
        for r in 0..rows {
            if r == rank || mat[r * cols + col] == 0 {
                continue;
            }
            let f = mat[r * cols + col] as u16;
            for c in col..cols {
                let sub = f * mat[rank * cols + c] as u16 % p as u16;
                mat[r * cols + c] =
                    ((mat[r * cols + c] as u16 + p as u16 - sub) % p as u16) as u8;
            }
        }
        rank += 1;
    }
    rank
}

/// A strictly increasing k-subset of `{1, ..., n}` (1-based column indices).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PivotSet {
    columns: Vec<usize>,
}

impl PivotSet {
    pub fn new(columns: Vec<usize>) -> Self {
        assert!(
            columns.windows(2).all(|w| w[0] < w[1]),
            "pivot columns must be strictly increasing"
        );
        PivotSet { columns }
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }
}

impl fmt::Display for PivotSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Pivot columns of the open cell of `lambda` inside `Gr_k(n)`: traverse the
/// boundary path of the diagram backwards from the box corner, label the
/// steps `1..n`, and keep the vertical ones. In closed form the i-th pivot
/// (1-based) is `(n - k) - lambda_i + i`.
pub fn partition_to_pivots(lam: &Partition, k: usize, n: usize) -> Result<PivotSet> {
    let width = n - k;
    if !lam.fits_in_box(k, width) {
        return Err(Error::Containment(format!(
            "{lam} does not fit in the {k} x {width} box of Gr_{k}({n})"
        )));
    }
    Ok(PivotSet::new(
        (1..=k).map(|i| width - lam.part(i - 1) + i).collect(),
    ))
}

/// Inverse of [`partition_to_pivots`]; panics on a malformed pivot set.
pub fn pivots_to_partition(piv: &PivotSet, k: usize, n: usize) -> Partition {
    assert_eq!(piv.columns().len(), k, "pivot set must have k columns");
    assert!(
        piv.columns().last().is_none_or(|&c| c <= n),
        "pivot columns must lie in 1..=n"
    );
    assert!(piv.columns().first().is_none_or(|&c| c >= 1));
    let width = n - k;
    Partition::new(
        piv.columns()
            .iter()
            .enumerate()
            .map(|(i0, &c)| width + (i0 + 1) - c)
            .collect(),
    )
}

/// `|cell(lambda)| = p^|lambda|` over `F_p`.
pub fn cell_size(lam: &Partition, field: PrimeField) -> BigUint {
    BigUint::from(field.p()).pow(lam.size() as u32)
}

/// A rank-k reduced echelon matrix over `F_p`: the canonical representative
/// of a point of `Gr_k(n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EchelonPoint {
    k: usize,
    n: usize,
    pivots: Vec<usize>,
    entries: Vec<u8>,
}

impl EchelonPoint {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based pivot columns.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    /// The partition indexing this point's open Schubert cell.
    pub fn pivot_partition(&self) -> Partition {
        pivots_to_partition(&PivotSet::new(self.pivots.clone()), self.k, self.n)
    }
}

/// Streaming enumeration of all points of the open cell of `lambda` in
/// `Gr_k(n)` over `F_p`: the pivot columns carry the identity pattern and the
/// free entries (row i, non-pivot columns right of pivot i) range over the
/// field. The stream has exactly `p^|lambda|` elements.
pub fn enumerate_cell_points(
    lam: &Partition,
    k: usize,
    n: usize,
    field: PrimeField,
) -> Result<CellPoints> {
    let pivots = partition_to_pivots(lam, k, n)?.columns().to_vec();
    let mut entries = vec![0u8; k * n];
    for (row, &col) in pivots.iter().enumerate() {
        entries[row * n + (col - 1)] = 1;
    }
    let mut free_positions = Vec::with_capacity(lam.size());
    for (row, &pivot_col) in pivots.iter().enumerate() {
        for col in pivot_col..n {
            if !pivots.contains(&(col + 1)) {
                free_positions.push((row, col));
            }
        }
    }
    debug_assert_eq!(free_positions.len(), lam.size());
    Ok(CellPoints {
        template: EchelonPoint {
            k,
            n,
            pivots,
            entries,
        },
        free_positions,
        p: field.p8(),
        state: Some(Vec::new()),
    })
}

pub struct CellPoints {
    template: EchelonPoint,
    free_positions: Vec<(usize, usize)>,
    p: u8,
    /// Current free-entry values (little-endian odometer); `None` when done.
    state: Option<Vec<u8>>,
}

impl Iterator for CellPoints {
    type Item = EchelonPoint;

    fn next(&mut self) -> Option<EchelonPoint> {
        let state = self.state.take()?;
        let values = if state.is_empty() && !self.free_positions.is_empty() {
            vec![0u8; self.free_positions.len()]
        } else {
            state
        };
        let mut point = self.template.clone();
        for (&(row, col), &v) in self.free_positions.iter().zip(&values) {
            point.entries[row * point.n + col] = v;
        }
        // advance the odometer
        let mut values = values;
        for i in 0..values.len() {
            if values[i] + 1 < self.p {
                values[i] += 1;
                values[..i].fill(0);
                self.state = Some(values);
                return Some(point);
            }
        }
        // all digits at p-1 (or no free entries): stream is exhausted
        Some(point)
    }
}

/// Number of points in the union of the open cells of all `nu` with
/// `mu <= nu <= lambda` in `Gr_k(n)` over `F_p`.
///
/// The interval is streamed cell by cell; disjointness of cells makes the
/// union count a plain sum. Small cells (at most [`CELL_STREAM_LIMIT`]
/// points) are counted by enumerating their echelon points; larger cells
/// contribute `p^|nu|` directly, which the stream-length tests pin to the
/// same value.
pub fn count_union(
    mu: &Partition,
    lam: &Partition,
    k: usize,
    n: usize,
    field: PrimeField,
) -> Result<BigUint> {
    if !lam.fits_in_box(k, n - k) {
        return Err(Error::Containment(format!(
            "{lam} does not fit in the {k} x {} box of Gr_{k}({n})",
            n - k
        )));
    }
    let mut total = BigUint::ZERO;
    for nu in young_interval(mu, lam)? {
        let boxes = nu.size() as u32;
        let streamable = (field.p() as u128)
            .checked_pow(boxes)
            .is_some_and(|size| size <= CELL_STREAM_LIMIT);
        if streamable {
            let streamed = enumerate_cell_points(&nu, k, n, field)?.count();
            total += streamed;
        } else {
            total += cell_size(&nu, field);
        }
    }
    Ok(total)
}

fn raw_budget_check(k: usize, n: usize, field: PrimeField) -> Result<u64> {
    let total = (field.p() as u128).checked_pow((k * n) as u32);
    match total {
        Some(t) if t <= RAW_ENUM_BUDGET => Ok(t as u64),
        _ => Err(Error::Budget(format!(
            "raw enumeration of p^(k*n) = {}^{} matrices exceeds the budget of {RAW_ENUM_BUDGET}",
            field.p(),
            k * n
        ))),
    }
}

/// Maximum matrix byte size handled by the raw enumerators; any `k*n` within
/// [`RAW_ENUM_BUDGET`] fits (2^27 already exceeds the budget).
const RAW_KEY_BYTES: usize = 26;

/// Enumerates every `k x n` matrix over `F_p`, keeps those of rank `k`,
/// reduces each to echelon form and counts distinct results. Deliberately
/// independent of the Schubert cell decomposition.
pub fn count_grassmannian_raw(k: usize, n: usize, field: PrimeField) -> Result<BigUint> {
    let points = raw_scan(k, n, field, |_, _| true)?;
    Ok(BigUint::from(points))
}

/// Full-matrix union count: like [`count_grassmannian_raw`] but keeping only
/// points whose pivot partition lies in `[mu, lambda]`. This is the
/// decomposition-free cross-check for [`count_union`].
pub fn count_union_raw(
    mu: &Partition,
    lam: &Partition,
    k: usize,
    n: usize,
    field: PrimeField,
) -> Result<BigUint> {
    if !lam.contains(mu) {
        return Err(Error::Containment(format!("{mu} is not contained in {lam}")));
    }
    if !lam.fits_in_box(k, n - k) {
        return Err(Error::Containment(format!(
            "{lam} does not fit in the {k} x {} box of Gr_{k}({n})",
            n - k
        )));
    }
    let points = raw_scan(k, n, field, |pivots, width| {
        let nu = Partition::new(
            pivots
                .iter()
                .enumerate()
                .map(|(i0, &c0)| width + (i0 + 1) - (c0 + 1))
                .collect(),
        );
        lam.contains(&nu) && nu.contains(mu)
    })?;
    Ok(BigUint::from(points))
}

/// Shared engine for the raw oracles: scans all matrices (range-partitioned
/// across workers), reduces, filters by 0-based pivot columns, dedupes.
fn raw_scan(
    k: usize,
    n: usize,
    field: PrimeField,
    keep: impl Fn(&[usize], usize) -> bool + Sync,
) -> Result<u64> {
    let total = raw_budget_check(k, n, field)?;
    let p = field.p8();
    let cells = k * n;
    assert!(cells <= RAW_KEY_BYTES);
    let width = n - k;
    let chunks: Vec<(u64, u64)> = {
        let workers = 64u64;
        let step = total.div_ceil(workers).max(1);
        (0..total)
            .step_by(step as usize)
            .map(|start| (start, (start + step).min(total)))
            .collect()
    };
    let sets: Vec<HashSet<[u8; RAW_KEY_BYTES]>> = chunks
        .par_iter()
        .map(|&(start, end)| {
            let mut digits = vec![0u8; cells];
            let mut v = start;
            for d in digits.iter_mut() {
                *d = (v % p as u64) as u8;
                v /= p as u64;
            }
            let mut scratch = vec![0u8; cells];
            let mut pivots = Vec::with_capacity(k);
            let mut set: HashSet<[u8; RAW_KEY_BYTES]> = HashSet::new();
            for _ in start..end {
                scratch.copy_from_slice(&digits);
                if row_reduce(&mut scratch, k, n, p) == k {
                    pivots.clear();
                    for row in 0..k {
                        let col = scratch[row * n..(row + 1) * n]
                            .iter()
                            .position(|&x| x != 0)
                            .expect("rank-k row is nonzero");
                        pivots.push(col);
                    }
                    if keep(&pivots, width) {
                        let mut key = [0u8; RAW_KEY_BYTES];
                        key[..cells].copy_from_slice(&scratch);
                        set.insert(key);
                    }
                }
                // next matrix
                for d in digits.iter_mut() {
                    if *d + 1 < p {
                        *d += 1;
                        break;
                    }
                    *d = 0;
                }
            }
            set
        })
        .collect();
    let mut all: HashSet<[u8; RAW_KEY_BYTES]> = HashSet::new();
    for s in sets {
        all.extend(s);
    }
    Ok(all.len() as u64)
}

/// Counts complete flags `0 < V_1 < ... < V_(n-1) < F_p^n` by enumerating
/// the subspaces of each dimension as echelon points and chaining
/// containments. Budgeted to `n <= 4`, `p <= 3`.
pub fn count_flags(n: usize, field: PrimeField) -> Result<BigUint> {
    if n as u64 > FLAGS_MAX_N || field.p() > FLAGS_MAX_P {
        return Err(Error::Budget(format!(
            "flag enumeration capped at n <= {FLAGS_MAX_N}, p <= {FLAGS_MAX_P} (got n={n}, p={})",
            field.p()
        )));
    }
    if n == 0 {
        return Err(Error::Domain("flag variety needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(BigUint::from(1u32));
    }
    let p = field.p8();
    let grassmannian = |dim: usize| -> Result<Vec<EchelonPoint>> {
        let full = Partition::new(vec![n - dim; dim]);
        let mut points = Vec::new();
        for nu in young_interval(&Partition::empty(), &full)? {
            points.extend(enumerate_cell_points(&nu, dim, n, field)?);
        }
        Ok(points)
    };
    let mut level = grassmannian(1)?;
    let mut counts = vec![BigUint::from(1u32); level.len()];
    for dim in 2..n {
        let next = grassmannian(dim)?;
        let next_counts: Vec<BigUint> = next
            .iter()
            .map(|w| {
                let mut acc = BigUint::ZERO;
                for (v, c) in level.iter().zip(&counts) {
                    if subspace_contains(w, v, p) {
                        acc += c;
                    }
                }
                acc
            })
            .collect();
        level = next;
        counts = next_counts;
    }
    Ok(counts.iter().sum())
}

/// Whether the row space of `v` lies inside the row space of `w` (`w` must be
/// in reduced echelon form).
fn subspace_contains(w: &EchelonPoint, v: &EchelonPoint, p: u8) -> bool {
    let n = w.n;
    for vi in 0..v.k {
        let mut row = v.row(vi).to_vec();
        for (wi, &pivot_col) in w.pivots.iter().enumerate() {
            let c = row[pivot_col - 1] as u16;
            if c != 0 {
                for j in 0..n {
                    let sub = c * w.entry(wi, j) as u16 % p as u16;
                    row[j] = ((row[j] as u16 + p as u16 - sub) % p as u16) as u8;
                }
            }
        }
        if row.iter().any(|&x| x != 0) {
            return false;
        }
    }
    true
}

/// Outcome of checking the identity `p^|mu| R(p) = |union of cells|` for one
/// rational and one prime.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub source: ReducedRational,
    pub p: u64,
    pub k: u64,
    pub n: u64,
    pub mu: Partition,
    pub lambda: Partition,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub ok: bool,
}

/// Computes both sides of the main counting identity for `x` over `F_p`:
/// the left side from the q-rational numerator, the right side from the
/// Schubert cell union, and reports whether they agree.
pub fn verify_main_theorem(x: &ReducedRational, field: PrimeField) -> Result<VerificationReport> {
    let cf = x.continued_fraction()?;
    let (k, n) = cf.grassmannian_params();
    if n > VERIFY_MAX_N {
        return Err(Error::Budget(format!(
            "verification capped at ambient dimension n <= {VERIFY_MAX_N}, got n = {n}"
        )));
    }
    let (lambda, mu) = lambda_mu_explicit(&cf);
    let value = QRationalValue::from_cf(&cf);
    let r_at_p = value
        .numerator()
        .eval(&num_bigint::BigInt::from(field.p()))
        .to_biguint()
        .ok_or_else(|| Error::Internal("R(p) must be positive".into()))?;
    let lhs = BigUint::from(field.p()).pow(mu.size() as u32) * r_at_p;
    let rhs = count_union(&mu, &lambda, k as usize, n as usize, field)?;
    let ok = lhs == rhs;
    Ok(VerificationReport {
        source: x.clone(),
        p: field.p(),
        k,
        n,
        mu,
        lambda,
        lhs,
        rhs,
        ok,
    })
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={}: Gr_{}({}) lambda={} mu={} lhs={} rhs={} {}",
            self.p,
            self.k,
            self.n,
            self.lambda,
            self.mu,
            self.lhs,
            self.rhs,
            if self.ok { "ok" } else { "MISMATCH" }
        )
    }
}
