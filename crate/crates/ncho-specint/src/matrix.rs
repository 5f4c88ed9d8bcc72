//! Square matrices over Q(i): the cyclic band matrices, the signed diagonal
//! perturbations, exact determinants and the symmetric LDU factorization.

use ncho_numcore::Rat;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::SpecintError;
use crate::gauss::GaussRat;

/// Dense `dim x dim` matrix of Gaussian rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycMatrix {
    dim: usize,
    entries: Vec<GaussRat>,
}

impl CycMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![GaussRat::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self, SpecintError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(SpecintError::Shape);
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussRat::is_real)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SpecintError> {
        if self.dim != other.dim {
            return Err(SpecintError::Shape);
        }
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SpecintError> {
        if self.dim != other.dim {
            return Err(SpecintError::Shape);
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let p = a * &other[(l, j)];
                    out[(i, j)] += &p;
                }
            }
        }
        Ok(out)
    }

    /// Upper-left `m x m` block.
    pub fn leading(&self, m: usize) -> Self {
        let mut out = Self::zeros(m);
        for i in 0..m {
            for j in 0..m {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Leading principal minors `d_1, ..., d_dim`.
    pub fn leading_minors(&self) -> Vec<GaussRat> {
        (1..=self.dim).map(|m| det_exact(&self.leading(m))).collect()
    }
}

impl std::ops::Index<(usize, usize)> for CycMatrix {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CycMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.entries[i * self.dim + j]
    }
}

pub(crate) fn check_point(k: usize, u: &[Rat]) -> Result<(), SpecintError> {
    if k < 2 {
        return Err(SpecintError::KOutOfRange { k, min: 2, max: usize::MAX });
    }
    if u.len() != k {
        return Err(SpecintError::WrongLength { expected: k, got: u.len() });
    }
    for (index, x) in u.iter().enumerate() {
        if *x <= Rat::zero() || *x >= Rat::one() {
            return Err(SpecintError::UOutOfRange {
                index: index + 1,
                value: x.to_string(),
            });
        }
    }
    Ok(())
}

/// Validates a strictly increasing, even-sized, 1-based index set in `1..=k`.
pub(crate) fn check_index_set(k: usize, iset: &[usize]) -> Result<(), SpecintError> {
    if iset.len() % 2 != 0 {
        return Err(SpecintError::OddIndexSet(iset.len()));
    }
    let increasing = iset.windows(2).all(|w| w[0] < w[1]);
    if !increasing || iset.iter().any(|&i| i == 0 || i > k) {
        return Err(SpecintError::BadIndexSet { k, indices: iset.to_vec() });
    }
    Ok(())
}

/// The cyclic tridiagonal matrix built from `u in (0,1)^k`: each index `i`
/// adds `1/(1-u_i^4) - 1/2` to the diagonal at `i` and `i+1` and
/// `-u_i^2/(1-u_i^4)` to both off-diagonal slots `(i, i+1)`, indices mod `k`.
pub fn delta(k: usize, u: &[Rat]) -> Result<CycMatrix, SpecintError> {
    check_point(k, u)?;
    let half = Rat::new(1.into(), 2.into());
    let mut m = CycMatrix::zeros(k);
    for (i, x) in u.iter().enumerate() {
        let sq = x * x;
        let quartic_gap = Rat::one() - &sq * &sq;
        let diag = GaussRat::real(Rat::one() / &quartic_gap - &half);
        let off = GaussRat::real(-(&sq / &quartic_gap));
        let next = (i + 1) % k;
        m[(i, i)] += &diag;
        m[(next, next)] += &diag;
        m[(i, next)] += &off;
        m[(next, i)] += &off;
    }
    Ok(m)
}

/// Diagonal matrix with `i * (-1)^r` at the `r`-th listed index (1-based).
pub fn xi(k: usize, iset: &[usize]) -> Result<CycMatrix, SpecintError> {
    check_index_set(k, iset)?;
    let mut m = CycMatrix::zeros(k);
    for (r, &idx) in iset.iter().enumerate() {
        let sign = if r % 2 == 0 { -Rat::one() } else { Rat::one() };
        m[(idx - 1, idx - 1)] = GaussRat::imag(sign);
    }
    Ok(m)
}

/// `delta(k, u) + kappa * xi(k, iset)`.
pub fn perturbed(k: usize, u: &[Rat], kappa: &Rat, iset: &[usize]) -> Result<CycMatrix, SpecintError> {
    delta(k, u)?.add(&xi(k, iset)?.scale(&GaussRat::real(kappa.clone())))
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn det_exact(a: &CycMatrix) -> GaussRat {
    let n = a.dim();
    if n == 0 {
        return GaussRat::one();
    }
    let mut m = a.clone();
    let mut sign_flip = false;
    let mut prev = GaussRat::one();
    for p in 0..n - 1 {
        if m[(p, p)].is_zero() {
            let Some(swap) = (p + 1..n).find(|&r| !m[(r, p)].is_zero()) else {
                return GaussRat::zero();
            };
            for c in 0..n {
                let tmp = m[(p, c)].clone();
                m[(p, c)] = m[(swap, c)].clone();
                m[(swap, c)] = tmp;
            }
            sign_flip = !sign_flip;
        }
        let pivot = m[(p, p)].clone();
        for r in p + 1..n {
            for c in p + 1..n {
                let v = &(&pivot * &m[(r, c)]) - &(&m[(r, p)] * &m[(p, c)]);
                m[(r, c)] = &v / &prev;
            }
            m[(r, p)] = GaussRat::zero();
        }
        prev = pivot;
    }
    let d = m[(n - 1, n - 1)].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// Factors `A = L D L^T` with `L` unit lower triangular and `D` diagonal.
#[derive(Debug, Clone, Serialize)]
pub struct LduFactors {
    pub lower: CycMatrix,
    pub diag: Vec<GaussRat>,
    /// Leading principal minors `d_1..d_n`; `diag[j] = d_{j+1} / d_j`.
    pub minors: Vec<GaussRat>,
}

/// Symmetric LDU factorization (plain transpose, so complex symmetric input
/// is allowed). Fails on a vanishing leading minor and re-multiplies the
/// factors to confirm exact reconstruction.
pub fn ldu(a: &CycMatrix) -> Result<LduFactors, SpecintError> {
    if !a.is_symmetric() {
        return Err(SpecintError::NotSymmetric);
    }
    let minors = a.leading_minors();
    if let Some(pos) = minors.iter().position(Zero::is_zero) {
        return Err(SpecintError::SingularMinor(pos + 1));
    }
    let n = a.dim();
    let mut lower = CycMatrix::identity(n);
    let mut diag: Vec<GaussRat> = Vec::with_capacity(n);
    for j in 0..n {
        let mut dj = a[(j, j)].clone();
        for m in 0..j {
            let t = &(&lower[(j, m)] * &lower[(j, m)]) * &diag[m];
            dj -= &t;
        }
        for i in j + 1..n {
            let mut v = a[(i, j)].clone();
            for m in 0..j {
                let t = &(&lower[(i, m)] * &lower[(j, m)]) * &diag[m];
                v -= &t;
            }
            lower[(i, j)] = &v / &dj;
        }
        diag.push(dj);
    }
    let mut dmat = CycMatrix::zeros(n);
    for (i, d) in diag.iter().enumerate() {
        dmat[(i, i)] = d.clone();
    }
    let rebuilt = lower.mul(&dmat)?.mul(&lower.transpose())?;
    if rebuilt != *a {
        return Err(SpecintError::Reconstruction);
    }
    Ok(LduFactors { lower, diag, minors })
}
