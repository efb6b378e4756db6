//! Fence posets, their order-ideal lattices, Young-lattice intervals, and
//! the classical permutation/lattice-path generating functions used as
//! cross-checks for the q-analogues.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::IntPolynomial;
use crate::rational::EvenContinuedFraction;

/// Cap for the factorial enumeration in [`inversion_gen_fn`].
pub const INVERSION_MAX_N: u64 = 8;
/// Cap for the path enumeration in [`box_path_gen_fn`].
pub const BOX_PATH_MAX_N: u64 = 20;

/// Relation between consecutive fence elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Up,
    Down,
}

/// A zigzag poset on elements `x_1 ... x_(N-1)` (stored 0-indexed) whose
/// Hasse diagram is a path; consecutive elements are related by the stored
/// direction (`Up` means `x_i < x_(i+1)`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FencePoset {
    dirs: Vec<Direction>,
}

impl FencePoset {
    /// Fence of a continued fraction `[a1, ..., a2m]`: runs of `(a1 - 1)` ups,
    /// `a2` downs, `a3` ups, ..., ending with `(a2m - 1)` downs, on
    /// `sum(a_i) - 1` elements.
    pub fn from_cf(cf: &EvenContinuedFraction) -> Self {
        let terms = cf.terms();
        let mut dirs = Vec::new();
        for (i, &a) in terms.iter().enumerate() {
            let dir = if i % 2 == 0 { Direction::Up } else { Direction::Down };
            let mut count = a;
            if i == 0 || i == terms.len() - 1 {
                count -= 1;
            }
            dirs.extend(std::iter::repeat_n(dir, count as usize));
        }
        FencePoset { dirs }
    }

    pub fn element_count(&self) -> usize {
        self.dirs.len() + 1
    }

    pub fn directions(&self) -> &[Direction] {
        &self.dirs
    }

    /// Cover relations as `(lower, upper)` pairs of 0-based element indices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.dirs
            .iter()
            .enumerate()
            .map(|(i, d)| match d {
                Direction::Up => (i, i + 1),
                Direction::Down => (i + 1, i),
            })
            .collect()
    }

    /// All lower order ideals, as sorted element-index sets, in a fixed
    /// depth-first order (element excluded before included).
    pub fn ideals(&self) -> Vec<OrderIdeal> {
        let n = self.element_count();
        let mut out = Vec::new();
        let mut members = Vec::new();
        // Walking left to right, the only constraints tie neighbours:
        //   x_i < x_(i+1): taking x_(i+1) requires x_i;
        //   x_i > x_(i+1): taking x_i requires x_(i+1).
        fn dfs(
            i: usize,
            n: usize,
            prev_in: bool,
            dirs: &[Direction],
            members: &mut Vec<usize>,
            out: &mut Vec<OrderIdeal>,
        ) {
            if i == n {
                out.push(OrderIdeal {
                    members: members.clone(),
                });
                return;
            }
            let forced_in = i > 0 && prev_in && dirs[i - 1] == Direction::Down;
            let allowed_in = i == 0 || prev_in || dirs[i - 1] == Direction::Down;
            if !forced_in {
                dfs(i + 1, n, false, dirs, members, out);
            }
            if allowed_in {
                members.push(i);
                dfs(i + 1, n, true, dirs, members, out);
                members.pop();
            }
        }
        dfs(0, n, false, &self.dirs, &mut members, &mut out);
        out
    }

    /// Rank generating function of the ideal lattice, graded by cardinality.
    pub fn ideal_rank_gen_fn(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.element_count() + 1];
        for ideal in self.ideals() {
            coeffs[ideal.members.len()] += 1u32;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

/// A downward-closed subset of a fence, by sorted element indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderIdeal {
    members: Vec<usize>,
}

impl OrderIdeal {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Streaming enumeration of the Young-lattice interval `[mu, lambda]` in
/// lexicographic row order. Errors if `mu` is not contained in `lambda`.
pub fn young_interval(mu: &Partition, lam: &Partition) -> Result<YoungIntervalIter> {
    if !lam.contains(mu) {
        return Err(Error::Containment(format!(
            "{mu} is not contained in {lam}"
        )));
    }
    let rows = lam.len();
    Ok(YoungIntervalIter {
        lam: (0..rows).map(|i| lam.part(i)).collect(),
        mu: (0..rows).map(|i| mu.part(i)).collect(),
        current: Some((0..rows).map(|i| mu.part(i)).collect()),
    })
}

pub struct YoungIntervalIter {
    lam: Vec<usize>,
    mu: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Iterator for YoungIntervalIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let emitted = Partition::new(current.clone());
        // Odometer step: bump the lowest row that can still grow, reset the
        // rows below it to their minimum.
        let rows = current.len();
        let mut next = current;
        for i in (0..rows).rev() {
            let cap = if i == 0 {
                self.lam[i]
            } else {
                self.lam[i].min(next[i - 1])
            };
            if next[i] < cap {
                next[i] += 1;
                next[(i + 1)..].copy_from_slice(&self.mu[(i + 1)..]);
                self.current = Some(next);
                return Some(emitted);
            }
        }
        Some(emitted)
    }
}

/// `sum of q^(|nu| - |mu|)` over the interval `[mu, lambda]`; equals the
/// numerator `R(q)` when `mu, lambda` are the boundary partitions of a snake.
pub fn interval_gen_fn(mu: &Partition, lam: &Partition) -> Result<IntPolynomial> {
    let interval = young_interval(mu, lam)?;
    let base = mu.size();
    let mut coeffs = vec![BigInt::zero(); lam.size() - base + 1];
    for nu in interval {
        coeffs[nu.size() - base] += 1u32;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// `sum over permutations of S_n of q^inv`; equals `[n]_q!`. Capped at
/// `n <= 8` since the enumeration is factorial.
pub fn inversion_gen_fn(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Domain("inversion_gen_fn requires n >= 1".into()));
    }
    if n > INVERSION_MAX_N {
        return Err(Error::Budget(format!(
            "inversion enumeration capped at n <= {INVERSION_MAX_N}, got {n}"
        )));
    }
    let n = n as usize;
    let max_inv = n * (n - 1) / 2;
    let mut coeffs = vec![BigInt::zero(); max_inv + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inv = perm
            .iter()
            .enumerate()
            .map(|(i, &pi)| perm[i + 1..].iter().filter(|&&pj| pi > pj).count())
            .sum::<usize>();
        coeffs[inv] += 1u32;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// `sum over monotone paths (0,0) -> (n-k, k) of q^area`, the area taken
/// above the path and below `y = k`; equals the Gaussian binomial. Capped at
/// `n <= 20`.
pub fn box_path_gen_fn(n: u64, k: u64) -> Result<IntPolynomial> {
    if k > n {
        return Err(Error::Domain(format!(
            "box_path_gen_fn requires k <= n, got k={k}, n={n}"
        )));
    }
    if n > BOX_PATH_MAX_N {
        return Err(Error::Budget(format!(
            "path enumeration capped at n <= {BOX_PATH_MAX_N}, got {n}"
        )));
    }
    let width = (n - k) as usize;
    let height = k as usize;
    let mut coeffs = vec![BigInt::zero(); width * height + 1];
    fn walk(x: usize, y: usize, width: usize, height: usize, area: usize, acc: &mut [BigInt]) {
        if x == width && y == height {
            acc[area] += 1u32;
            return;
        }
        if x < width {
            // a right step at height y leaves (height - y) boxes above it
            walk(x + 1, y, width, height, area + (height - y), acc);
        }
        if y < height {
            walk(x, y + 1, width, height, area, acc);
        }
    }
    walk(0, 0, width, height, 0, &mut coeffs);
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// DOT rendering of the fence's Hasse diagram (edges point upward).
pub fn fence_dot(f: &FencePoset) -> String {
    let mut out = String::from("digraph fence {\n  rankdir=BT;\n  node [shape=circle];\n");
    for i in 0..f.element_count() {
        out.push_str(&format!("  x{};\n", i + 1));
    }
    for (lo, hi) in f.covers() {
        out.push_str(&format!("  x{} -> x{};\n", lo + 1, hi + 1));
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the order-ideal lattice, nodes labelled by element sets.
pub fn ideal_lattice_dot(f: &FencePoset) -> String {
    let ideals = f.ideals();
    let label = |ideal: &OrderIdeal| {
        if ideal.is_empty() {
            "{}".to_string()
        } else {
            format!(
                "{{{}}}",
                ideal
                    .members()
                    .iter()
                    .map(|i| format!("x{}", i + 1))
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    };
    let mut out = String::from("digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n");
    for (idx, ideal) in ideals.iter().enumerate() {
        out.push_str(&format!("  i{idx} [label=\"{}\"];\n", label(ideal)));
    }
    // Lattice covers: ideals differing by exactly one element.
    for (ai, a) in ideals.iter().enumerate() {
        for (bi, b) in ideals.iter().enumerate() {
            if b.len() == a.len() + 1 && a.members().iter().all(|m| b.members().contains(m)) {
                out.push_str(&format!("  i{ai} -> i{bi};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q_binomial, q_factorial};
    use crate::rational::{coprime_pairs, ReducedRational};

    fn cf(r: u64, s: u64) -> EvenContinuedFraction {
        ReducedRational::from_u64(r, s)
            .unwrap()
            .continued_fraction()
            .unwrap()
    }

    fn fence(r: u64, s: u64) -> FencePoset {
        FencePoset::from_cf(&cf(r, s))
    }

    #[test]
    fn fence_shapes() {
        let f = fence(7, 3);
        assert_eq!(f.element_count(), 4);
        assert_eq!(f.covers(), vec![(0, 1), (2, 1), (3, 2)]);

        let f = fence(2, 1);
        assert_eq!(f.element_count(), 1);
        assert!(f.covers().is_empty());

        let f = fence(4, 1);
        assert_eq!(f.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(fence(7, 3).ideals().len(), 7);
        assert_eq!(fence(2, 1).ideals().len(), 2);
        assert_eq!(fence(4, 1).ideals().len(), 4);
    }

    #[test]
    fn ideal_gen_fn_examples() {
        assert_eq!(
            fence(7, 3).ideal_rank_gen_fn(),
            IntPolynomial::from_ints(&[1, 2, 2, 1, 1])
        );
        assert_eq!(
            fence(2, 1).ideal_rank_gen_fn(),
            IntPolynomial::from_ints(&[1, 1])
        );
        assert_eq!(
            fence(5, 2).ideal_rank_gen_fn(),
            IntPolynomial::from_ints(&[1, 2, 1, 1])
        );
    }

    /// Brute-force oracle: filter all subsets for downward closure.
    fn ideals_by_filter(f: &FencePoset) -> Vec<Vec<usize>> {
        let n = f.element_count();
        assert!(n <= 20);
        let covers = f.covers();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let has = |i: usize| mask & (1 << i) != 0;
            if covers.iter().all(|&(lo, hi)| !has(hi) || has(lo)) {
                out.push((0..n).filter(|&i| has(i)).collect());
            }
        }
        out
    }

    #[test]
    fn ideal_enumeration_matches_subset_filter() {
        for (r, s) in coprime_pairs(16) {
            let f = fence(r, s);
            let mut fast: Vec<Vec<usize>> =
                f.ideals().into_iter().map(|i| i.members).collect();
            let mut slow = ideals_by_filter(&f);
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "ideals mismatch at {r}/{s}");
        }
    }

    #[test]
    fn ideal_count_equals_r() {
        for (r, s) in coprime_pairs(50) {
            assert_eq!(fence(r, s).ideals().len() as u64, r, "count at {r}/{s}");
        }
    }

    #[test]
    fn young_interval_examples() {
        let mu = Partition::new(vec![1, 1]);
        let lam = Partition::new(vec![2, 2, 2]);
        let interval: Vec<Partition> = young_interval(&mu, &lam).unwrap().collect();
        assert_eq!(interval.len(), 7);
        for nu in [
            vec![1, 1],
            vec![2, 1],
            vec![1, 1, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![2, 2, 1],
            vec![2, 2, 2],
        ] {
            assert!(interval.contains(&Partition::new(nu.clone())), "missing {nu:?}");
        }

        let single: Vec<Partition> = young_interval(&lam, &lam).unwrap().collect();
        assert_eq!(single, vec![lam.clone()]);

        let boxed: Vec<Partition> =
            young_interval(&Partition::empty(), &Partition::new(vec![2, 2])).unwrap().collect();
        assert_eq!(boxed.len(), 6); // binomial(4, 2)

        assert!(young_interval(&lam, &mu).is_err());
    }

    /// Filter-based interval oracle: all partitions in the bounding box,
    /// kept when they contain mu and fit in lambda.
    fn interval_by_filter(mu: &Partition, lam: &Partition) -> Vec<Partition> {
        fn gen(rows: usize, max_part: usize, acc: &mut Vec<Vec<usize>>, stack: &mut Vec<usize>) {
            acc.push(stack.clone());
            if rows == 0 {
                return;
            }
            let cap = stack.last().copied().unwrap_or(max_part);
            for part in 1..=cap {
                stack.push(part);
                gen(rows - 1, max_part, acc, stack);
                stack.pop();
            }
        }
        let mut all = Vec::new();
        gen(lam.len(), lam.part(0), &mut all, &mut Vec::new());
        all.into_iter()
            .map(Partition::new)
            .filter(|nu| lam.contains(nu) && nu.contains(mu))
            .collect()
    }

    #[test]
    fn interval_enumeration_matches_filter_oracle() {
        for (r, s) in coprime_pairs(24) {
            let (lam, mu) = crate::snake::lambda_mu_explicit(&cf(r, s));
            if lam.size() > 20 {
                continue;
            }
            let mut fast: Vec<Vec<usize>> = young_interval(&mu, &lam)
                .unwrap()
                .map(|p| p.parts().to_vec())
                .collect();
            let mut slow: Vec<Vec<usize>> = interval_by_filter(&mu, &lam)
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect();
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "interval mismatch at {r}/{s}");
        }
    }

    #[test]
    fn interval_gen_fn_examples() {
        assert_eq!(
            interval_gen_fn(&Partition::new(vec![1, 1]), &Partition::new(vec![2, 2, 2])).unwrap(),
            IntPolynomial::from_ints(&[1, 2, 2, 1, 1])
        );
        let lam = Partition::new(vec![3, 1]);
        assert_eq!(interval_gen_fn(&lam, &lam).unwrap(), IntPolynomial::one());
        for (n, k) in [(4u64, 2u64), (5, 2), (6, 3)] {
            let boxed = Partition::new(vec![(n - k) as usize; k as usize]);
            assert_eq!(
                interval_gen_fn(&Partition::empty(), &boxed).unwrap(),
                q_binomial(n, k),
                "box interval at ({n},{k})"
            );
        }
    }

    #[test]
    fn inversion_gen_fn_matches_q_factorial() {
        assert_eq!(
            inversion_gen_fn(3).unwrap(),
            IntPolynomial::from_ints(&[1, 2, 2, 1])
        );
        assert_eq!(inversion_gen_fn(1).unwrap(), IntPolynomial::one());
        for n in 1..=6 {
            assert_eq!(inversion_gen_fn(n).unwrap(), q_factorial(n), "at n={n}");
        }
        assert!(matches!(inversion_gen_fn(9), Err(Error::Budget(_))));
    }

    #[test]
    fn box_path_gen_fn_matches_q_binomial() {
        assert_eq!(
            box_path_gen_fn(4, 2).unwrap(),
            IntPolynomial::from_ints(&[1, 1, 2, 1, 1])
        );
        assert_eq!(box_path_gen_fn(7, 0).unwrap(), IntPolynomial::one());
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(box_path_gen_fn(n, k).unwrap(), q_binomial(n, k), "at ({n},{k})");
            }
        }
        assert!(matches!(box_path_gen_fn(21, 3), Err(Error::Budget(_))));
    }

    #[test]
    fn poset_isomorphism_chain() {
        // fence ideals, snake paths, and the Young interval all produce R(q)
        for (r, s) in coprime_pairs(40) {
            let cf = cf(r, s);
            let fence_gen = FencePoset::from_cf(&cf).ideal_rank_gen_fn();
            let snake = crate::snake::SnakeGraph::from_word(&crate::snake::SnakeWord::from_cf(&cf));
            let (lam, mu) = crate::snake::lambda_mu_explicit(&cf);
            let r_poly = crate::qrational::QRationalValue::from_cf(&cf);
            assert_eq!(&fence_gen, r_poly.numerator(), "fence at {r}/{s}");
            assert_eq!(snake.rank_generating_fn(), fence_gen, "snake at {r}/{s}");
            assert_eq!(
                interval_gen_fn(&mu, &lam).unwrap(),
                fence_gen,
                "interval at {r}/{s}"
            );
        }
    }

    #[test]
    fn dot_output_shapes() {
        let f = fence(7, 3);
        let dot = fence_dot(&f);
        assert!(dot.contains("x1 -> x2"));
        assert!(dot.contains("x3 -> x2"));
        let dot = ideal_lattice_dot(&f);
        assert_eq!(dot.matches("->").count(), 8); // covers of L(7/3), cf. its Hasse diagram
    }
}
