//! Sparse matrices of phase-space differential operators in the tensor
//! Hermite-function basis.

use liouville_core::{rescale_coordinates, CoordinateFrame, Monomial, PhasePolyOperator, C64};
use nalgebra::{DMatrix, DVector};
use std::collections::BTreeMap;

use super::basis::{ladder_matrices, BasisConfig};
use super::error::{Result, VerifyError};

pub const MAX_OPERATOR_DEGREE: u32 = 4;

/// Complex matrix in compressed sparse row form.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<C64>,
}

impl OperatorMatrix {
    /// Builds the matrix from `(row, col) → value`; zero values are dropped.
    pub fn from_entries(dim: usize, entries: &BTreeMap<(usize, usize), C64>) -> Self {
        let mut row_ptr = vec![0; dim + 1];
        let mut cols = Vec::new();
        let mut values = Vec::new();
        for (&(i, j), v) in entries {
            if *v != C64::new(0.0, 0.0) {
                row_ptr[i + 1] += 1;
                cols.push(j);
                values.push(*v);
            }
        }
        for i in 0..dim {
            row_ptr[i + 1] += row_ptr[i];
        }
        OperatorMatrix { dim, row_ptr, cols, values }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_entries(dim, &BTreeMap::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Nonzero entries of row `i` as `(col, value)`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, C64)> + '_ {
        (self.row_ptr[i]..self.row_ptr[i + 1]).map(move |p| (self.cols[p], self.values[p]))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        (0..self.dim).flat_map(move |i| self.row(i).map(move |(j, v)| (i, j, v)))
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.row(i).find(|(c, _)| *c == j).map_or(C64::new(0.0, 0.0), |(_, v)| v)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn matvec(&self, x: &DVector<C64>) -> Result<DVector<C64>> {
        if x.len() != self.dim {
            return Err(VerifyError::Dimension { expected: self.dim, got: x.len() });
        }
        Ok(DVector::from_fn(self.dim, |i, _| self.row(i).map(|(j, v)| v * x[j]).sum()))
    }

    /// Dense submatrix on the given (ordered) index set.
    pub fn dense_submatrix(&self, idx: &[usize]) -> DMatrix<C64> {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut out = DMatrix::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (j, v) in self.row(i) {
                if let Some(&b) = pos.get(&j) {
                    out[(a, b)] = v;
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        self.dense_submatrix(&(0..self.dim).collect::<Vec<_>>())
    }
}

/// `e^{iκQr} A e^{-iκQr}`: `∂_Q → ∂_Q - iκr`, `∂_r → ∂_r - iκQ`.
pub fn chirp_conjugate(a: &PhasePolyOperator, kappa: f64) -> PhasePolyOperator {
    if kappa == 0.0 {
        return a.clone();
    }
    let mi_kappa = C64::new(0.0, -kappa);
    let dq = &PhasePolyOperator::d_q() + &PhasePolyOperator::r().scale(mi_kappa);
    let dr = &PhasePolyOperator::d_r() + &PhasePolyOperator::q().scale(mi_kappa);
    let mut out = PhasePolyOperator::zero();
    for (m, c) in a.terms() {
        let mult = PhasePolyOperator::term(Monomial::new(m.q, m.r, 0, 0), *c);
        out = &out + &mult.compose(&dq.pow(m.dq)).compose(&dr.pow(m.dr));
    }
    out
}

/// The operator written in the dimensionless basis variables `(u, v)`.
pub fn basis_operator(a: &PhasePolyOperator, cfg: &BasisConfig) -> PhasePolyOperator {
    let frame = CoordinateFrame { q_scale: cfg.a_q(), r_scale: 1.0 / cfg.a_r() };
    rescale_coordinates(&chirp_conjugate(a, cfg.chirp), &frame)
}

/// `X^a D^c` projected on `ψ_0..ψ_{n-1}`; products are formed in a larger
/// space so the projection is exact.
fn factor(n: usize, a: u32, c: u32, ladders: &(DMatrix<f64>, DMatrix<f64>)) -> DMatrix<f64> {
    let big = ladders.0.nrows();
    let mut m = DMatrix::identity(big, big);
    for _ in 0..a {
        m = &m * &ladders.0;
    }
    for _ in 0..c {
        m = &m * &ladders.1;
    }
    m.view((0, 0), (n, n)).into_owned()
}

/// Matrix of `A` acting on coefficient vectors: each normal-ordered monomial
/// `u^a v^b ∂_u^c ∂_v^d` becomes `(X^a D^c) ⊗ (X^b D^d)`.
pub fn assemble_matrix(a: &PhasePolyOperator, cfg: &BasisConfig) -> Result<OperatorMatrix> {
    let degree = a.degree();
    if degree > MAX_OPERATOR_DEGREE {
        return Err(VerifyError::Degree { degree });
    }
    let op = basis_operator(a, cfg);
    let pad = MAX_OPERATOR_DEGREE as usize;
    let lq = ladder_matrices(cfg.n_q + pad);
    let lr = ladder_matrices(cfg.n_r + pad);
    let mut entries: BTreeMap<(usize, usize), C64> = BTreeMap::new();
    for (m, c) in op.terms() {
        let fq = factor(cfg.n_q, m.q, m.dq, &lq);
        let fr = factor(cfg.n_r, m.r, m.dr, &lr);
        let nz_q: Vec<(usize, usize, f64)> = nonzeros(&fq);
        let nz_r: Vec<(usize, usize, f64)> = nonzeros(&fr);
        for &(j, jp, x) in &nz_q {
            for &(k, kp, y) in &nz_r {
                *entries.entry((cfg.index(j, k), cfg.index(jp, kp))).or_insert(C64::new(0.0, 0.0)) += c * (x * y);
            }
        }
    }
    Ok(OperatorMatrix::from_entries(cfg.dim(), &entries))
}

fn nonzeros(m: &DMatrix<f64>) -> Vec<(usize, usize, f64)> {
    let mut out = Vec::new();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if m[(i, j)] != 0.0 {
                out.push((i, j, m[(i, j)]));
            }
        }
    }
    out
}
