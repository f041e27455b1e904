use crate::error::{Error, Result};
use crate::linalg::matrix::RatMatrix;
use crate::linalg::rat::Rat;
use num::Zero;

/// Linear subspace of `Q^n`, held as a reduced row echelon basis.
///
/// The representation is canonical: two subspaces are equal as sets of
/// vectors exactly when they are structurally equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_matrix(&RatMatrix::identity(ambient_dim))
    }

    /// Span of the rows of `m`, canonicalized.
    pub fn from_matrix(m: &RatMatrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    /// Span of the given vectors in `Q^ambient_dim`.
    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<Rat>>) -> Result<Self> {
        Ok(Subspace::from_matrix(&RatMatrix::from_rows(
            rows,
            ambient_dim,
        )?))
    }

    /// Wraps rows that are already in reduced row echelon form, without
    /// re-eliminating. Used by independent recomputation routes that must
    /// not pass their output through this module's elimination.
    pub(crate) fn from_echelon_rows_unchecked(
        ambient_dim: usize,
        basis: Vec<Vec<Rat>>,
        pivots: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(basis.len(), pivots.len());
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies
    /// outside the subspace. Coordinates are read off the pivot columns.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residue = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residue.iter_mut().zip(row) {
                *r -= c * b;
            }
        }
        residue.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Inclusion into the ambient space: `ambient_dim x dim`, columns are
    /// the basis vectors.
    pub fn inclusion_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.ambient_dim, self.dim(), |i, j| self.basis[j][i].clone())
    }

    /// Basis as a `dim x ambient_dim` matrix of rows.
    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.basis.clone(), self.ambient_dim)
            .expect("echelon basis rows have ambient length")
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::shape(format!(
                "sum of subspaces of Q^{} and Q^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_rows(self.ambient_dim, rows)
    }
}

/// Right kernel `{ v : A v = 0 }` of `a`, canonicalized.
///
/// Gauss-Jordan elimination; the independent fraction-free route lives in
/// the oracle module and shares no code with this one.
pub fn kernel(a: &RatMatrix) -> Subspace {
    let (r, pivots) = a.rref();
    let n = a.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); n];
        v[f] = num::One::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.at(i, f).clone();
        }
        rows.push(v);
    }
    Subspace::from_rows(n, rows).expect("kernel vectors have ambient length")
}

/// Quotient data for `Q^ambient / relations`.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub dim: usize,
    /// `dim x ambient`; sends a vector to the coordinates of its class.
    pub projection: RatMatrix,
    /// `ambient x dim`; a section of the projection, so
    /// `projection * section = identity`.
    pub section: RatMatrix,
}

/// Presents `Q^ambient / relations` on the free coordinates of the
/// relation subspace. The kernel of the projection is exactly
/// `relations`, and the section picks the representative with zeros in
/// the pivot coordinates.
pub fn quotient(ambient_dim: usize, relations: &Subspace) -> Result<QuotientData> {
    if relations.ambient_dim() != ambient_dim {
        return Err(Error::shape(format!(
            "relations live in Q^{}, quotient requested for Q^{ambient_dim}",
            relations.ambient_dim()
        )));
    }
    let pivots = relations.pivots();
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let dim = free.len();
    let mut projection = RatMatrix::zeros(dim, ambient_dim);
    for (t, &f) in free.iter().enumerate() {
        projection.set(t, f, num::One::one());
        for (i, &p) in pivots.iter().enumerate() {
            projection.set(t, p, -relations.basis()[i][f].clone());
        }
    }
    let mut section = RatMatrix::zeros(ambient_dim, dim);
    for (t, &f) in free.iter().enumerate() {
        section.set(f, t, num::One::one());
    }
    Ok(QuotientData {
        dim,
        projection,
        section,
    })
}
