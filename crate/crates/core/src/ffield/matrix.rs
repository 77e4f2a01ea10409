//! Dense matrices over GF(2^m).

use std::fmt;
use std::sync::Arc;

use super::{FFElem, FieldError, Gf2m};

#[derive(Clone)]
pub struct FFMatrix {
    field: Arc<Gf2m>,
    rows: usize,
    cols: usize,
    data: Vec<FFElem>,
}

impl PartialEq for FFMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.degree() == other.field.degree()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for FFMatrix {}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FFMatrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// `dst += c * src`, elementwise.
#[inline]
fn axpy(field: &Gf2m, dst: &mut [FFElem], c: FFElem, src: &[FFElem]) {
    if c.is_zero() {
        return;
    }
    if c == FFElem::ONE {
        for (d, s) in dst.iter_mut().zip(src) {
            d.0 ^= s.0;
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            d.0 ^= field.mul(c, s).0;
        }
    }
}

impl FFMatrix {
    pub fn zeros(field: Arc<Gf2m>, rows: usize, cols: usize) -> Self {
        FFMatrix { field, rows, cols, data: vec![FFElem::ZERO; rows * cols] }
    }

    pub fn identity(field: Arc<Gf2m>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FFElem::ONE);
        }
        m
    }

    pub fn from_rows(field: Arc<Gf2m>, rows: Vec<Vec<FFElem>>) -> Result<Self, FieldError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(FieldError::Shape("ragged rows".into()));
        }
        Ok(FFMatrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(
        field: Arc<Gf2m>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FFElem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FFMatrix { field, rows, cols, data }
    }

    pub fn field(&self) -> &Arc<Gf2m> {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FFElem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FFElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FFElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [FFElem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FFElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { FFElem::ONE } else { FFElem::ZERO })
            })
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field.degree(), other.field.degree(), "matrices over different fields");
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        assert_eq!(self.cols, other.rows, "nonconformable product");
        let mut out = Self::zeros(self.field.clone(), self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let dst = &mut out.data[i * oc..(i + 1) * oc];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                axpy(&self.field, dst, a, &other.data[k * oc..(k + 1) * oc]);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| FFElem(a.0 ^ b.0)).collect();
        FFMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: FFElem) -> Self {
        let data = self.data.iter().map(|&a| self.field.mul(a, c)).collect();
        FFMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self + λ·I`, which is also `self - λ·I` in characteristic 2.
    pub fn shift(&self, lambda: FFElem) -> Self {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i);
            m.set(i, i, self.field.add(v, lambda));
        }
        m
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[FFElem]) -> Vec<FFElem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![FFElem::ZERO; self.cols];
        for (k, &a) in v.iter().enumerate() {
            axpy(&self.field, &mut out, a, self.row(k));
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[FFElem]) -> Vec<FFElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(FFElem::ZERO, |acc, (&a, &b)| FFElem(acc.0 ^ self.field.mul(a, b).0))
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let field = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            if inv != FFElem::ONE {
                for x in self.row_mut(r) {
                    *x = field.mul(*x, inv);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            for chunk in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let f = chunk[c];
                axpy(&field, &mut chunk[c..], f, &prow[c..]);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<FFElem>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![FFElem::ZERO; self.cols];
            v[free] = FFElem::ONE;
            for (r, &p) in pivots.iter().enumerate() {
                // char 2: -x = x
                v[p] = m.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{v : v A = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<FFElem>> {
        self.transpose().nullspace()
    }

    /// One solution of `A x = b`.
    pub fn solve(&self, b: &[FFElem]) -> Result<Vec<FFElem>, FieldError> {
        if b.len() != self.rows {
            return Err(FieldError::Shape(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::from_fn(self.field.clone(), self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                b[i]
            }
        });
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(FieldError::Inconsistent);
        }
        let mut x = vec![FFElem::ZERO; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols);
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if !self.is_square() {
            return Err(FieldError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(self.field.clone(), n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                FFElem::ONE
            } else {
                FFElem::ZERO
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(FieldError::Singular);
        }
        Ok(Self::from_fn(self.field.clone(), n, n, |i, j| aug.get(i, n + j)))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field.clone(), self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Characteristic polynomial `det(xI - A)`, constant term first, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(&self) -> Vec<FFElem> {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else { continue };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1)).expect("nonzero");
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u.is_zero() {
                    continue;
                }
                // row_i -= u row_m, then col_m += u col_i
                for j in 0..n {
                    let v = f.add(h.get(i, j), f.mul(u, h.get(m, j)));
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        // p_k = (x + h_kk) p_{k-1} + Σ_{i<k} h_{ik} Π_{j=i+1..k} h_{j,j-1} p_{i-1}
        let mut p: Vec<Vec<FFElem>> = vec![vec![FFElem::ONE]];
        for k in 0..n {
            let prev = &p[k];
            let mut next = vec![FFElem::ZERO; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.add(next[d], f.mul(c, h.get(k, k)));
            }
            let mut t = FFElem::ONE;
            for i in (0..k).rev() {
                t = f.mul(t, h.get(i + 1, i));
                if t.is_zero() {
                    break;
                }
                let coef = f.mul(t, h.get(i, k));
                if coef.is_zero() {
                    continue;
                }
                for (d, &c) in p[i].iter().enumerate() {
                    next[d] = f.add(next[d], f.mul(coef, c));
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// Embeds every entry into a larger field containing this one.
    pub fn extend_to(&self, big: &Arc<Gf2m>) -> Option<Self> {
        let data = self
            .data
            .iter()
            .map(|&x| big.embed_from(&self.field, x))
            .collect::<Option<Vec<_>>>()?;
        Some(FFMatrix { field: big.clone(), rows: self.rows, cols: self.cols, data })
    }
}

/// Evaluates a polynomial (constant term first) at `x`.
pub fn eval_poly(field: &Gf2m, p: &[FFElem], x: FFElem) -> FFElem {
    p.iter().rev().fold(FFElem::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(f: &Arc<Gf2m>, r: usize, c: usize, rng: &mut ChaCha8Rng) -> FFMatrix {
        FFMatrix::from_fn(f.clone(), r, c, |_, _| FFElem(rng.random_range(0..f.size())))
    }

    #[test]
    fn identity_and_zero_nullspaces() {
        let f = Gf2m::get(2).unwrap();
        assert!(FFMatrix::identity(f.clone(), 4).nullspace().is_empty());
        assert_eq!(FFMatrix::zeros(f, 3, 3).nullspace().len(), 3);
    }

    #[test]
    fn planted_rank_seven() {
        let f = Gf2m::get(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        loop {
            let a = random(&f, 10, 7, &mut rng);
            let b = random(&f, 7, 10, &mut rng);
            if a.rank() == 7 && b.rank() == 7 {
                assert_eq!(a.mul(&b).rank(), 7);
                break;
            }
        }
    }

    #[test]
    fn solve_reports_inconsistency() {
        let f = Gf2m::get(1).unwrap();
        let a = FFMatrix::zeros(f, 2, 2);
        assert_eq!(a.solve(&[FFElem::ONE, FFElem::ZERO]), Err(FieldError::Inconsistent));
    }

    #[test]
    fn solve_and_inverse_verify_by_substitution() {
        let f = Gf2m::get(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random(&f, 6, 6, &mut rng);
            let x: Vec<FFElem> = (0..6).map(|_| FFElem(rng.random_range(0..16))).collect();
            let b = a.mul_vec(&x);
            let y = a.solve(&b).unwrap();
            assert_eq!(a.mul_vec(&y), b);
            if let Ok(inv) = a.inverse() {
                assert!(a.mul(&inv).is_identity());
            } else {
                assert!(a.rank() < 6);
            }
        }
    }

    #[test]
    fn charpoly_vanishes_at_matrix() {
        let f = Gf2m::get(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [1usize, 2, 5, 9] {
            let a = random(&f, n, n, &mut rng);
            let p = a.charpoly();
            assert_eq!(p.len(), n + 1);
            assert_eq!(p[n], FFElem::ONE);
            // Cayley–Hamilton
            let mut acc = FFMatrix::zeros(f.clone(), n, n);
            let mut power = FFMatrix::identity(f.clone(), n);
            for &c in &p {
                acc = acc.add(&power.scale(c));
                power = power.mul(&a);
            }
            assert!(acc.is_zero(), "n={n}");
        }
    }

    #[test]
    fn charpoly_of_companion() {
        // companion of x^2 + x + 1 over GF(2)
        let f = Gf2m::get(1).unwrap();
        let c = FFMatrix::from_rows(
            f,
            vec![vec![FFElem::ZERO, FFElem::ONE], vec![FFElem::ONE, FFElem::ONE]],
        )
        .unwrap();
        assert_eq!(c.charpoly(), vec![FFElem::ONE, FFElem::ONE, FFElem::ONE]);
    }

    #[test]
    fn rref_is_idempotent() {
        let f = Gf2m::get(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut a = random(&f, 5, 8, &mut rng);
        let p1 = a.rref();
        let snapshot = a.clone();
        let p2 = a.rref();
        assert_eq!(p1, p2);
        assert_eq!(a, snapshot);
    }
}
