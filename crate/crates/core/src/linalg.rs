//! Exact integer and rational linear algebra.
//!
//! Vectors are rows and lattices are row spans throughout. Every routine is a
//! pure function on arbitrary-precision values.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An integer vector (a lattice point or covector).
pub type IntVec = Vec<BigInt>;

/// Builds an integer vector from machine integers.
pub fn ivec(coords: &[i64]) -> IntVec {
    coords.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn neg(v: &[BigInt]) -> IntVec {
    v.iter().map(|x| -x).collect()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(k: &BigInt, v: &[BigInt]) -> IntVec {
    v.iter().map(|x| k * x).collect()
}

/// `a*x + b*y`, the workhorse of every elimination step.
pub fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> IntVec {
    x.iter().zip(y).map(|(p, q)| a * p + b * q).collect()
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content. The zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> IntVec {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Rational vector with a length fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVector {
    coords: Vec<BigRational>,
}

impl RatVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(v: &[BigInt]) -> Self {
        Self::new(
            v.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        )
    }

    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(p, q)| BigRational::new(p.into(), q.into()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Pairing with an integer covector.
    pub fn pair(&self, u: &[BigInt]) -> BigRational {
        self.coords
            .iter()
            .zip(u)
            .fold(BigRational::zero(), |acc, (x, c)| {
                acc + x * BigRational::from_integer(c.clone())
            })
    }

    /// The primitive integer vector on the same ray, if any coordinate is nonzero.
    pub fn to_primitive_ray(&self) -> IntVec {
        let lcm = self
            .coords
            .iter()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let scaled: IntVec = self
            .coords
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        primitive(&scaled)
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.row_vectors()).finish()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(rows: &[IntVec], cols: usize) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r.iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<IntVec> = rows.iter().map(|r| ivec(r)).collect();
        Self::from_rows(&rows, cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self[(i, j)].clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &out[(i, j)] + a * &other[(k, j)];
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(BigInt::zero(), |acc, (i, x)| acc + x * &self[(i, j)])
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        rank(&self.row_vectors(), self.cols)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<IntVec> = self.row_vectors();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += k * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(target, j)] + k * &self[(source, j)];
            self.set(target, j, v);
        }
    }

    /// col[target] += k * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, target)] + k * &self[(i, source)];
            self.set(i, target, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self.set(i, j, v);
        }
    }
}

/// Result of [`hermite_normal_form`]: `transform · input = form`.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub form: IntMatrix,
    pub transform: IntMatrix,
    /// Pivot column of each nonzero row of `form`.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of the form: the reduced lattice basis.
    pub fn basis(&self) -> Vec<IntVec> {
        (0..self.rank())
            .map(|i| self.form.row(i).to_vec())
            .collect()
    }
}

/// Row-style Hermite normal form.
///
/// Pivots are positive and move strictly right going down; entries above a
/// pivot are reduced into `[0, pivot)`; zero rows sit at the bottom. The form
/// is unique for a given row lattice.
pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.nrows());
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..m.ncols() {
        if pr == m.nrows() {
            break;
        }
        loop {
            let best = (pr..m.nrows())
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(best, pr);
            u.swap_rows(best, pr);
            let mut clean = true;
            for r in pr + 1..m.nrows() {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let q = -h[(r, col)].div_floor(&h[(pr, col)]);
                h.add_row_multiple(r, pr, &q);
                u.add_row_multiple(r, pr, &q);
                if !h[(r, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(pr, col)].is_zero() {
            continue;
        }
        if h[(pr, col)].is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        for r in 0..pr {
            let q = -h[(r, col)].div_floor(&h[(pr, col)]);
            h.add_row_multiple(r, pr, &q);
            u.add_row_multiple(r, pr, &q);
        }
        pivots.push(col);
        pr += 1;
    }
    HermiteForm {
        form: h,
        transform: u,
        pivots,
    }
}

/// Result of [`smith_normal_form`]: `left · input · right = diagonal`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// The `min(rows, cols)` diagonal entries; nonnegative, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut d = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(t, bi);
            left.swap_rows(t, bi);
            d.swap_cols(t, bj);
            right.swap_cols(t, bj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    left.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }
    let invariant_factors = (0..rows.min(cols)).map(|i| d[(i, i)].clone()).collect();
    SmithForm {
        diagonal: d,
        left,
        right,
        invariant_factors,
    }
}

/// A ℤ-basis (as rows) of the left kernel `{x : x·m = 0}`.
///
/// The basis is saturated and returned in Hermite normal form.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let hnf = hermite_normal_form(m);
    let kernel: Vec<IntVec> = (hnf.rank()..m.nrows())
        .map(|i| hnf.transform.row(i).to_vec())
        .collect();
    let k = IntMatrix::from_rows(&kernel, m.nrows());
    IntMatrix::from_rows(&hermite_normal_form(&k).basis(), m.nrows())
}

/// A ℤ-basis of `(ℚ-span of gens) ∩ ℤⁿ`, in Hermite normal form.
pub fn saturate_sublattice(gens: &IntMatrix, ambient_rank: usize) -> IntMatrix {
    assert_eq!(gens.ncols(), ambient_rank, "generator length mismatch");
    if gens.nrows() == 0 {
        return IntMatrix::zeros(0, ambient_rank);
    }
    // the double orthogonal complement, taken over ℤ
    let annihilator = kernel_basis(&gens.transpose());
    kernel_basis(&annihilator.transpose())
}

/// Saturation of a list of vectors; convenience over [`saturate_sublattice`].
pub fn saturate_rows(rows: &[IntVec], ambient_rank: usize) -> Vec<IntVec> {
    saturate_sublattice(&IntMatrix::from_rows(rows, ambient_rank), ambient_rank).row_vectors()
}

/// Rank of a list of rows over ℚ.
pub fn rank(rows: &[IntVec], cols: usize) -> usize {
    let rat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    rref(rat, cols).1.len()
}

/// Reduced row echelon form over ℚ; returns the reduced rows and pivot columns.
pub fn rref(mut a: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr == a.len() {
            break;
        }
        let Some(p) = (pr..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, pr);
        let inv = a[pr][col].recip();
        for x in a[pr].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[pr].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == pr || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= p * &f;
            }
        }
        pivots.push(col);
        pr += 1;
    }
    (a, pivots)
}

/// Solves `x · m = b` over ℚ, returning one solution if any exists.
pub fn solve_left(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    assert_eq!(b.len(), m.ncols());
    let k = m.nrows();
    // mᵀ xᵀ = bᵀ, augmented
    let aug: Vec<Vec<BigRational>> = (0..m.ncols())
        .map(|j| {
            let mut row: Vec<BigRational> = (0..k)
                .map(|i| BigRational::from_integer(m[(i, j)].clone()))
                .collect();
            row.push(BigRational::from_integer(b[j].clone()));
            row
        })
        .collect();
    let (r, pivots) = rref(aug, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[row][k].clone();
    }
    Some(x)
}

/// Integer coordinates of `v` with respect to the rows of `basis`, if `v` is in
/// their ℤ-span and the rows are linearly independent.
pub fn integer_coordinates(basis: &IntMatrix, v: &[BigInt]) -> Option<IntVec> {
    let x = solve_left(basis, v)?;
    if x.iter().all(|c| c.is_integer()) {
        Some(x.into_iter().map(|c| c.to_integer()).collect())
    } else {
        None
    }
}

/// Inverse of a square integer matrix over ℚ.
pub fn rational_inverse(m: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    if n == 0 {
        return Some(Vec::new());
    }
    let aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n)
                .map(|j| BigRational::from_integer(m[(i, j)].clone()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let (r, pivots) = rref(aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Inverse of a unimodular matrix; `None` if the matrix is not unimodular.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    let inv = rational_inverse(m)?;
    let n = m.nrows();
    let mut out = IntMatrix::zeros(n, n);
    for (i, row) in inv.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_integer() {
                return None;
            }
            out.set(i, j, x.to_integer());
        }
    }
    Some(out)
}

/// Completes a saturated family of independent rows to a ℤ-basis of ℤⁿ.
///
/// Returns a unimodular `n × n` matrix whose first rows are exactly `rows`.
/// The complement comes from the Hermite form of the transposed rows, so the
/// choice is deterministic. `None` if the rows are dependent or not saturated.
pub fn complete_to_basis(rows: &[IntVec], n: usize) -> Option<IntMatrix> {
    let k = rows.len();
    let a = IntMatrix::from_rows(rows, n);
    let hnf = hermite_normal_form(&a.transpose());
    if hnf.rank() != k {
        return None;
    }
    // transform · aᵀ = [h; 0] with h k×k, so a = hᵀ-part · (transformᵀ)⁻¹ restricted
    let v_inv = unimodular_inverse(&hnf.transform.transpose())?;
    let mut out: Vec<IntVec> = rows.to_vec();
    out.extend((k..n).map(|i| v_inv.row(i).to_vec()));
    let b = IntMatrix::from_rows(&out, n);
    if b.determinant().abs().is_one() {
        Some(b)
    } else {
        None
    }
}

/// Orthogonal projection of `v` onto the complement of the span of `basis`,
/// rescaled to a primitive integer vector.
pub fn project_out(v: &[BigInt], basis: &[IntVec]) -> IntVec {
    if basis.is_empty() {
        return primitive(v);
    }
    let k = basis.len();
    let gram: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..k)
                .map(|j| BigRational::from_integer(dot(&basis[i], &basis[j])))
                .collect();
            row.push(BigRational::from_integer(dot(&basis[i], v)));
            row
        })
        .collect();
    let (r, pivots) = rref(gram, k + 1);
    let mut c = vec![BigRational::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        if p < k {
            c[p] = r[row][k].clone();
        }
    }
    let coords: Vec<BigRational> = (0..v.len())
        .map(|j| {
            let mut x = BigRational::from_integer(v[j].clone());
            for (ci, b) in c.iter().zip(basis) {
                x -= ci * BigRational::from_integer(b[j].clone());
            }
            x
        })
        .collect();
    RatVector::new(coords).to_primitive_ray()
}

/// A sublattice of ℤⁿ held by its reduced Hermite basis.
///
/// Two lattices are equal exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_rank: usize,
    basis: Vec<IntVec>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn generated_by(gens: &[IntVec], ambient_rank: usize) -> Self {
        let hnf = hermite_normal_form(&IntMatrix::from_rows(gens, ambient_rank));
        Self {
            ambient_rank,
            basis: hnf.basis(),
            pivots: hnf.pivots,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.basis, self.ambient_rank)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, rem) = r[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return false;
            }
            r = combine(&BigInt::one(), &r, &-q, row);
        }
        is_zero(&r)
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> IntVec {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let q = r[p].div_floor(&row[p]);
            r = combine(&BigInt::one(), &r, &-q, row);
        }
        r
    }

    /// Whether the lattice equals its saturation `span ∩ ℤⁿ`.
    pub fn is_saturated(&self) -> bool {
        saturate_rows(&self.basis, self.ambient_rank) == self.basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn hermite_small_example() {
        let a = m(&[&[2, 4], &[1, 1]]);
        let h = hermite_normal_form(&a);
        assert_eq!(h.form, m(&[&[1, 1], &[0, 2]]));
        assert_eq!(h.transform.mul(&a), h.form);
        assert!(h.transform.determinant().abs().is_one());
    }

    #[test]
    fn hermite_identity_and_zero() {
        let id = IntMatrix::identity(3);
        let h = hermite_normal_form(&id);
        assert_eq!(h.form, id);
        assert_eq!(h.transform, id);
        let z = IntMatrix::zeros(2, 3);
        let h = hermite_normal_form(&z);
        assert_eq!(h.form, z);
        assert_eq!(h.rank(), 0);
    }

    #[test]
    fn smith_examples() {
        let s = smith_normal_form(&m(&[&[1, 0], &[1, 2]]));
        assert_eq!(s.invariant_factors, ivec(&[1, 2]));
        let s = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariant_factors, ivec(&[1, 6]));
        let s = smith_normal_form(&IntMatrix::identity(4));
        assert_eq!(s.invariant_factors, ivec(&[1, 1, 1, 1]));
    }

    #[test]
    fn smith_transforms_reproduce_diagonal() {
        let a = m(&[&[4, 6, 2], &[2, 8, 10], &[0, 3, 9]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal);
        assert!(s.left.determinant().abs().is_one());
        assert!(s.right.determinant().abs().is_one());
    }

    #[test]
    fn kernel_examples() {
        // the column map (a, b) ↦ a + b
        assert_eq!(
            kernel_basis(&m(&[&[1], &[1]])).row_vectors(),
            vec![ivec(&[1, -1])]
        );
        assert_eq!(
            kernel_basis(&m(&[&[2], &[4]])).row_vectors(),
            vec![ivec(&[2, -1])]
        );
        assert_eq!(kernel_basis(&m(&[&[2, 1], &[1, 1]])).nrows(), 0);
        // a row vector has no nonzero left kernel
        assert_eq!(kernel_basis(&m(&[&[1, 1]])).nrows(), 0);
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(
            saturate_sublattice(&m(&[&[2, 0]]), 2).row_vectors(),
            vec![ivec(&[1, 0])]
        );
        assert_eq!(
            saturate_sublattice(&m(&[&[1, 1], &[1, -1]]), 2),
            IntMatrix::identity(2)
        );
        assert_eq!(saturate_sublattice(&IntMatrix::zeros(0, 2), 2).nrows(), 0);
        assert_eq!(
            saturate_sublattice(&m(&[&[2, 4]]), 2).row_vectors(),
            vec![ivec(&[1, 2])]
        );
    }

    #[test]
    fn basis_completion_is_unimodular() {
        let b = complete_to_basis(&[ivec(&[1, 2, 3])], 3).unwrap();
        assert_eq!(b.row(0), ivec(&[1, 2, 3]).as_slice());
        assert!(b.determinant().abs().is_one());
        assert!(complete_to_basis(&[ivec(&[2, 4])], 2).is_none());
        assert_eq!(
            complete_to_basis(&[], 2).unwrap().determinant().abs(),
            BigInt::one()
        );
    }

    #[test]
    fn lattice_membership_and_reduction() {
        let l = Lattice::generated_by(&[ivec(&[2, 0]), ivec(&[0, 3])], 2);
        assert!(l.contains(&ivec(&[4, -3])));
        assert!(!l.contains(&ivec(&[1, 0])));
        assert_eq!(l.reduce(&ivec(&[5, 7])), ivec(&[1, 1]));
        assert!(!l.is_saturated());
        assert!(Lattice::generated_by(&[ivec(&[1, 2])], 2).is_saturated());
    }

    #[test]
    fn determinant_and_projection() {
        assert_eq!(m(&[&[0, 1], &[-1, -1]]).determinant(), BigInt::from(1));
        assert_eq!(m(&[&[1, 0], &[1, 2]]).determinant(), BigInt::from(2));
        assert_eq!(project_out(&ivec(&[1, 5]), &[ivec(&[0, 1])]), ivec(&[1, 0]));
        assert_eq!(
            project_out(&ivec(&[2, 0]), &[ivec(&[1, 1])]),
            ivec(&[1, -1])
        );
    }
}
