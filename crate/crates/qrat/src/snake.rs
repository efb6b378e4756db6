//! Snake graphs: tiled staircase graphs encoded by words over `{R, U}`,
//! their monotone lattice paths, and the boundary partitions that present a
//! snake as a skew Young diagram.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::partition::Partition;
use crate::poly::IntPolynomial;
use crate::rational::EvenContinuedFraction;

/// One step or tile transition: right or up.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Letter {
    R,
    U,
}

impl Letter {
    fn toggled(self) -> Letter {
        match self {
            Letter::R => Letter::U,
            Letter::U => Letter::R,
        }
    }
}

/// The tile-transition word of a snake graph. The empty word is the
/// one-tile snake.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnakeWord {
    letters: Vec<Letter>,
}

impl SnakeWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        SnakeWord { letters }
    }

    /// Block word `R^(a1-1) U^a2 R^a3 ... R^a(2m-1) U^(a2m - 1)` of a
    /// continued fraction (for a single pair `[a1, a2]` this degenerates to
    /// `R^(a1-1) U^(a2-1)`).
    pub fn from_cf(cf: &EvenContinuedFraction) -> Self {
        let terms = cf.terms();
        let mut letters = Vec::new();
        for (i, &a) in terms.iter().enumerate() {
            let letter = if i % 2 == 0 { Letter::R } else { Letter::U };
            let mut count = a;
            if i == 0 || i == terms.len() - 1 {
                count -= 1;
            }
            letters.extend(std::iter::repeat_n(letter, count as usize));
        }
        SnakeWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The dual word: letters at odd positions (1st, 3rd, ... 1-indexed) are
    /// toggled `R <-> U`, even positions are unchanged.
    pub fn dual(&self) -> SnakeWord {
        SnakeWord {
            letters: self
                .letters
                .iter()
                .enumerate()
                .map(|(i, &l)| if i % 2 == 0 { l.toggled() } else { l })
                .collect(),
        }
    }
}

impl fmt::Display for SnakeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", if *l == Letter::R { 'R' } else { 'U' })?;
        }
        Ok(())
    }
}

/// A snake graph as an ordered list of unit-cell positions, starting at the
/// origin, each subsequent cell one step right or up from its predecessor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnakeGraph {
    cells: Vec<(usize, usize)>,
}

impl SnakeGraph {
    pub fn from_word(word: &SnakeWord) -> Self {
        let mut cells = vec![(0usize, 0usize)];
        let (mut x, mut y) = (0usize, 0usize);
        for &l in word.letters() {
            match l {
                Letter::R => x += 1,
                Letter::U => y += 1,
            }
            cells.push((x, y));
        }
        SnakeGraph { cells }
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Position of the last tile; the snake spans `[0, x] x [0, y]`.
    pub fn top_right_cell(&self) -> (usize, usize) {
        *self.cells.last().expect("snake has at least one tile")
    }

    /// Horizontal edges `(x, y) -> (x+1, y)` of the tile boundary grid.
    fn horizontal_edges(&self) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for &(x, y) in &self.cells {
            edges.insert((x, y));
            edges.insert((x, y + 1));
        }
        edges
    }

    /// Vertical edges `(x, y) -> (x, y+1)` of the tile boundary grid.
    fn vertical_edges(&self) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for &(x, y) in &self.cells {
            edges.insert((x, y));
            edges.insert((x + 1, y));
        }
        edges
    }

    /// All monotone corner-to-corner lattice paths on the snake's edge grid,
    /// in lexicographic step order with `R < U`.
    pub fn paths(&self) -> Vec<SnakePath> {
        let h = self.horizontal_edges();
        let v = self.vertical_edges();
        let (cx, cy) = self.top_right_cell();
        let target = (cx + 1, cy + 1);
        let mut out = Vec::new();
        let mut steps = Vec::new();
        fn dfs(
            pos: (usize, usize),
            target: (usize, usize),
            h: &BTreeSet<(usize, usize)>,
            v: &BTreeSet<(usize, usize)>,
            steps: &mut Vec<Letter>,
            out: &mut Vec<SnakePath>,
        ) {
            if pos == target {
                out.push(SnakePath {
                    steps: steps.clone(),
                });
                return;
            }
            if h.contains(&pos) {
                steps.push(Letter::R);
                dfs((pos.0 + 1, pos.1), target, h, v, steps, out);
                steps.pop();
            }
            if v.contains(&pos) {
                steps.push(Letter::U);
                dfs((pos.0, pos.1 + 1), target, h, v, steps, out);
                steps.pop();
            }
        }
        dfs((0, 0), target, &h, &v, &mut steps, &mut out);
        out
    }

    /// Number of snake cells lying above the path: cell `(x, y)` counts when
    /// the path's horizontal step through column `x` sits at height `<= y`.
    pub fn path_rank(&self, path: &SnakePath) -> usize {
        let heights = path.column_heights();
        self.cells
            .iter()
            .filter(|&&(x, y)| y >= heights[x])
            .count()
    }

    /// `sum over paths of q^rank`; equal to the numerator `R(q)` of the
    /// corresponding q-rational.
    pub fn rank_generating_fn(&self) -> IntPolynomial {
        let mut coeffs = vec![num_traits::Zero::zero(); self.cell_count() + 1];
        for path in self.paths() {
            coeffs[self.path_rank(&path)] += 1;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Reads `(lambda, mu)` off the snake geometry: within each row of tiles,
    /// `lambda` extends to the row's rightmost tile and `mu` covers the
    /// columns left of the row's leftmost tile. Rows are reported top-down.
    ///
    /// This is independent of the closed-form expansion in
    /// [`lambda_mu_explicit`] and serves as its oracle.
    pub fn lambda_mu_from_boundary(&self) -> (Partition, Partition) {
        let (_, ymax) = self.top_right_cell();
        let mut lam_rows = vec![0usize; ymax + 1];
        let mut mu_rows = vec![usize::MAX; ymax + 1];
        for &(x, y) in &self.cells {
            lam_rows[y] = lam_rows[y].max(x + 1);
            mu_rows[y] = mu_rows[y].min(x);
        }
        lam_rows.reverse();
        mu_rows.reverse();
        (Partition::new(lam_rows), Partition::new(mu_rows))
    }
}

/// A monotone corner-to-corner lattice path on a snake graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnakePath {
    steps: Vec<Letter>,
}

impl SnakePath {
    pub fn steps(&self) -> &[Letter] {
        &self.steps
    }

    /// For each column crossed, the height of the path's horizontal step.
    fn column_heights(&self) -> Vec<usize> {
        let mut heights = Vec::new();
        let mut y = 0usize;
        for &s in &self.steps {
            match s {
                Letter::R => heights.push(y),
                Letter::U => y += 1,
            }
        }
        heights
    }

    /// Vertex sequence from the origin, for rendering.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        let mut v = vec![(0usize, 0usize)];
        let (mut x, mut y) = (0usize, 0usize);
        for &s in &self.steps {
            match s {
                Letter::R => x += 1,
                Letter::U => y += 1,
            }
            v.push((x, y));
        }
        v
    }
}

impl fmt::Display for SnakePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.steps {
            write!(f, "{}", if *l == Letter::R { 'R' } else { 'U' })?;
        }
        Ok(())
    }
}

/// Closed-form boundary partitions of `G(r/s)` for `r/s = [a1, b1, ..., am, bm]`:
/// `lambda` has parts `lambda_k = a1 + ... + a(m+1-k)` with multiplicities
/// `bm, b(m-1), ..., b1`, and `mu` has parts `lambda_i - 1` with the first
/// multiplicity lowered by one.
pub fn lambda_mu_explicit(cf: &EvenContinuedFraction) -> (Partition, Partition) {
    let terms = cf.terms();
    let m = terms.len() / 2;
    let a: Vec<u64> = terms.iter().step_by(2).copied().collect();
    let b: Vec<u64> = terms.iter().skip(1).step_by(2).copied().collect();
    let mut lam = Vec::new();
    let mut mu = Vec::new();
    for k in 1..=m {
        let part: u64 = a[..=(m - k)].iter().sum();
        let lam_mult = b[m - k];
        let mu_mult = if k == 1 { lam_mult - 1 } else { lam_mult };
        for _ in 0..lam_mult {
            lam.push(part as usize);
        }
        for _ in 0..mu_mult {
            mu.push(part as usize - 1);
        }
    }
    (Partition::new(lam), Partition::new(mu))
}
