//! Exact sparse linear algebra over the rationals.
//!
//! Elimination is fraction-free: every row is scaled to a primitive integer
//! vector, rows are combined by cross-multiplication with the pivot entry and
//! re-normalised by their content. Pivoting is deterministic: the active row
//! with the fewest nonzeros is taken (ties by leading column, then by row
//! index) and its leading column becomes the pivot column.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_dense(rows: &[Vec<Rational>], cols: usize) -> Self {
        let mut m = SparseMatrix::new(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, x) in row.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        if x.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, x: &Rational) {
        let cur = self.get(r, c);
        self.set(r, c, cur + x);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), x)| (r, c, x))
    }

    /// Coordinate-format text dump (`rows cols nnz` header, 1-based indices).
    pub fn to_matrix_market(&self) -> String {
        let mut out = String::from("%%MatrixMarket matrix coordinate rational general\n");
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.entries.len());
        for (&(r, c), x) in &self.entries {
            let _ = writeln!(out, "{} {} {}", r + 1, c + 1, x);
        }
        out
    }

    fn integer_rows(&self) -> Vec<IntRow> {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (&(r, c), x) in &self.entries {
            rows[r].push((c, x.clone()));
        }
        rows.into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let lcm = r.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
                let mut row: IntRow = r.into_iter().map(|(c, x)| (c, x.numer() * (&lcm / x.denom()))).collect();
                make_primitive(&mut row);
                row
            })
            .collect()
    }
}

/// Sparse integer row, sorted by column, no zeros.
type IntRow = Vec<(usize, BigInt)>;

fn make_primitive(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    let flip = row.first().is_some_and(|(_, x)| x.is_negative());
    if g.is_zero() {
        return;
    }
    if g.is_one() && !flip {
        return;
    }
    for (_, x) in row.iter_mut() {
        *x = &*x / &g;
        if flip {
            *x = -&*x;
        }
    }
}

fn entry(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `row ← (a/g)·row − (b/g)·pivot` where `a = pivot[col]`, `b = row[col]`.
fn eliminate_with(row: &IntRow, pivot: &IntRow, col: usize) -> IntRow {
    let a = entry(pivot, col).expect("pivot entry");
    let b = entry(row, col).expect("row entry");
    let g = a.gcd(b);
    let sa = a / &g;
    let sb = b / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (c, x) = if ci < cj {
            i += 1;
            (ci, &sa * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&sb * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &sa * &row[i - 1].1 - &sb * &pivot[j - 1].1)
        };
        if !x.is_zero() {
            out.push((c, x));
        }
    }
    make_primitive(&mut out);
    out
}

/// Pivot rows in the order they were chosen, each with its pivot column.
struct Echelon {
    pivots: Vec<(usize, IntRow)>,
}

fn echelon(rows: Vec<IntRow>, reduce: bool) -> Echelon {
    let mut active: Vec<Option<IntRow>> = rows.into_iter().map(Some).collect();
    let mut pivots: Vec<(usize, IntRow)> = Vec::new();
    loop {
        let best = active.iter().enumerate().filter_map(|(i, r)| r.as_ref().map(|r| (r.len(), r[0].0, i))).min();
        let Some((_, col, idx)) = best else { break };
        let pivot = active[idx].take().expect("chosen row is active");
        for slot in active.iter_mut() {
            if let Some(row) = slot {
                if entry(row, col).is_some() {
                    let reduced = eliminate_with(row, &pivot, col);
                    *slot = if reduced.is_empty() { None } else { Some(reduced) };
                }
            }
        }
        pivots.push((col, pivot));
    }
    if reduce {
        // Later pivot rows never contain earlier pivot columns, so clearing
        // back-to-front leaves every pivot column with a single nonzero.
        for t in (0..pivots.len()).rev() {
            let (col, ref pivot) = pivots[t];
            let pivot = pivot.clone();
            for (_, row) in pivots[..t].iter_mut() {
                if entry(row, col).is_some() {
                    *row = eliminate_with(row, &pivot, col);
                }
            }
        }
    }
    Echelon { pivots }
}

/// Exact rank over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    echelon(m.integer_rows(), false).pivots.len()
}

/// Reduced basis of `{x : Mx = 0}`: one vector per non-pivot column `f`,
/// with `x_f = 1` and zero at every other non-pivot column.
pub fn nullspace(m: &SparseMatrix) -> Basis {
    let ech = echelon(m.integer_rows(), true);
    let mut is_pivot = vec![false; m.cols];
    for (c, _) in &ech.pivots {
        is_pivot[*c] = true;
    }
    let free: Vec<usize> = (0..m.cols).filter(|&c| !is_pivot[c]).collect();
    let mut vectors: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            v
        })
        .collect();
    let free_index: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    for (pc, row) in &ech.pivots {
        let p = entry(row, *pc).expect("pivot entry");
        for (c, x) in row {
            if c == pc {
                continue;
            }
            let k = free_index[c];
            vectors[k][*pc] = -Rational::new(x.clone(), p.clone());
        }
    }
    Basis { ambient: m.cols, vectors, pivots: free }
}

/// A reduced basis of a subspace of `Q^ambient`: vector `i` has a 1 at
/// `pivots[i]` and every other vector is zero there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    ambient: usize,
    vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Basis {
    pub fn zero(ambient: usize) -> Self {
        Basis { ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        let mut axes: Vec<usize> = axes.into_iter().collect();
        axes.sort_unstable();
        axes.dedup();
        let vectors = axes
            .iter()
            .map(|&a| {
                let mut v = vec![Rational::zero(); ambient];
                v[a] = Rational::one();
                v
            })
            .collect();
        Basis { ambient, vectors, pivots: axes }
    }

    /// Reduced row echelon basis of the span of `vectors`.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::IndexMismatch(v.len(), ambient));
        }
        let mut rows = vectors;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ambient {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        Ok(Basis { ambient, vectors: rows, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= c * y;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `Σ coeffs[i] · vectors[i]`.
    pub fn combination(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        out
    }

    /// Matrix whose rows are the basis vectors.
    pub fn to_row_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_dense(&self.vectors, self.ambient)
    }
}

/// Basis of `span(a) ∩ span(b)`, from the nullspace of `[a | -b]`.
pub fn intersect(a: &Basis, b: &Basis) -> Result<Basis> {
    if a.ambient != b.ambient {
        return Err(Error::IndexMismatch(a.ambient, b.ambient));
    }
    let n = a.dim() + b.dim();
    let mut m = SparseMatrix::new(a.ambient, n);
    for (j, v) in a.vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    for (j, v) in b.vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, a.dim() + j, -x);
        }
    }
    let null = nullspace(&m);
    let vectors = null.vectors.iter().map(|z| a.combination(&z[..a.dim()])).collect();
    Basis::from_vectors(a.ambient, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect();
        SparseMatrix::from_dense(&dense, cols)
    }

    fn vecq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn empty_matrix_has_full_nullspace() {
        let b = nullspace(&SparseMatrix::new(0, 4));
        assert_eq!(b.dim(), 4);
        assert_eq!(b, Basis::coordinate(4, 0..4));
    }

    #[test]
    fn single_row() {
        let b = nullspace(&mat(&[&[1, 1]]));
        assert_eq!(b.vectors(), &[vecq(&[-1, 1])]);
        assert_eq!(b.pivots(), &[1]);
    }

    #[test]
    fn rank_examples() {
        let id: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| (i == j) as i64).collect()).collect();
        let id: Vec<&[i64]> = id.iter().map(|r| r.as_slice()).collect();
        assert_eq!(rank(&mat(&id)), 5);
        assert_eq!(rank(&SparseMatrix::new(3, 3)), 0);
        assert_eq!(rank(&mat(&[&[2, 4, 6], &[1, 2, 3], &[-3, -6, -9]])), 1);
    }

    #[test]
    fn nullspace_annihilates() {
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let b = nullspace(&m);
        assert_eq!(b.dim(), 2);
        for v in b.vectors() {
            for r in 0..m.rows() {
                let s: Rational = (0..m.cols()).map(|c| m.get(r, c) * &v[c]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn rational_entries() {
        let mut m = SparseMatrix::new(1, 2);
        m.set(0, 0, Rational::new(1.into(), 3.into()));
        m.set(0, 1, Rational::new(1.into(), 2.into()));
        let b = nullspace(&m);
        assert_eq!(b.vectors(), &[vec![Rational::new((-3).into(), 2.into()), rational(1)]]);
    }

    #[test]
    fn intersect_examples() {
        let a = Basis::from_vectors(3, vec![vecq(&[1, 1, 0]), vecq(&[0, 1, 1])]).unwrap();
        assert_eq!(intersect(&a, &a).unwrap(), a);
        let x = Basis::coordinate(3, [0]);
        let y = Basis::coordinate(3, [1, 2]);
        assert_eq!(intersect(&x, &y).unwrap().dim(), 0);
        let c = Basis::coordinate(3, [0, 1]);
        let i = intersect(&a, &c).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&vecq(&[1, 1, 0])));
        assert_eq!(intersect(&a, &Basis::zero(4)).unwrap_err(), Error::IndexMismatch(3, 4));
    }

    #[test]
    fn from_vectors_is_reduced() {
        let b = Basis::from_vectors(3, vec![vecq(&[2, 4, 2]), vecq(&[1, 2, 1]), vecq(&[0, 3, 3])]).unwrap();
        assert_eq!(b.dim(), 2);
        for (i, &p) in b.pivots().iter().enumerate() {
            for (j, v) in b.vectors().iter().enumerate() {
                assert_eq!(v[p], rational((i == j) as i64));
            }
        }
        assert!(b.contains(&vecq(&[1, 5, 4])));
        assert!(!b.contains(&vecq(&[0, 0, 1])));
    }

    #[test]
    fn matrix_market_dump() {
        let m = mat(&[&[0, 2], &[1, 0]]);
        assert_eq!(m.to_matrix_market(), "%%MatrixMarket matrix coordinate rational general\n2 2 2\n1 2 2\n2 1 1\n");
    }
}
