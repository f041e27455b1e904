//! The concrete enrichment bases: finite sets and finite-dimensional
//! rational vector spaces.
//!
//! Hom objects, finite products, and equalizers are what the end formula
//! consumes. Finite-set homs are enumerated lexicographically (a function
//! is encoded by its value table, first argument most significant);
//! vector homs are matrix spaces vectorized row-major, so the hom basis
//! index of entry `(i, j)` is `i * dom_dim + j`.

mod functor;
mod monoid;

pub use functor::{BaseFunctor, BaseFunctorViolation};
pub use monoid::{FreeAction, MonoidObject, MonoidViolation};

use crate::error::{Error, Result};
use crate::linalg::{kernel, Rat, RatMatrix, Subspace};
use num::Zero;

/// Which base a datum lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseTag {
    FinSet,
    QVect,
}

impl std::fmt::Display for BaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseTag::FinSet => write!(f, "finset"),
            BaseTag::QVect => write!(f, "qvect"),
        }
    }
}

/// Object of a base: a named finite set, or `Q^dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BaseObject {
    FinSet { elements: Vec<String> },
    Vect { dim: usize },
}

impl BaseObject {
    pub fn finset(names: &[&str]) -> Self {
        BaseObject::FinSet {
            elements: names.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn finset_of_size(n: usize) -> Self {
        BaseObject::FinSet {
            elements: (0..n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn vect(dim: usize) -> Self {
        BaseObject::Vect { dim }
    }

    pub fn tag(&self) -> BaseTag {
        match self {
            BaseObject::FinSet { .. } => BaseTag::FinSet,
            BaseObject::Vect { .. } => BaseTag::QVect,
        }
    }

    /// Cardinality or dimension.
    pub fn size(&self) -> usize {
        match self {
            BaseObject::FinSet { elements } => elements.len(),
            BaseObject::Vect { dim } => *dim,
        }
    }
}

/// Function between finite sets, by value table on indices.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct FinFunction {
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom {
            return Err(Error::shape(format!(
                "function table has {} entries for a domain of size {dom}",
                table.len()
            )));
        }
        if table.iter().any(|&v| v >= cod) {
            return Err(Error::shape(format!(
                "function value out of range for codomain of size {cod}"
            )));
        }
        Ok(FinFunction { dom, cod, table })
    }

    pub fn identity(n: usize) -> Self {
        FinFunction {
            dom: n,
            cod: n,
            table: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self . before`.
    pub fn compose(&self, before: &FinFunction) -> Result<FinFunction> {
        if before.cod != self.dom {
            return Err(Error::shape(format!(
                "composing {}->{} after {}->{}",
                self.dom, self.cod, before.dom, before.cod
            )));
        }
        Ok(FinFunction {
            dom: before.dom,
            cod: self.cod,
            table: before.table.iter().map(|&x| self.table[x]).collect(),
        })
    }
}

/// Morphism datum in a base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BaseMap {
    Function(FinFunction),
    Linear(RatMatrix),
}

impl BaseMap {
    pub fn tag(&self) -> BaseTag {
        match self {
            BaseMap::Function(_) => BaseTag::FinSet,
            BaseMap::Linear(_) => BaseTag::QVect,
        }
    }

    pub fn identity_of(obj: &BaseObject) -> BaseMap {
        match obj {
            BaseObject::FinSet { elements } => BaseMap::Function(FinFunction::identity(elements.len())),
            BaseObject::Vect { dim } => BaseMap::Linear(RatMatrix::identity(*dim)),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            BaseMap::Function(f) => f.is_identity(),
            BaseMap::Linear(m) => m.is_identity(),
        }
    }

    /// Source size/dimension.
    pub fn dom_size(&self) -> usize {
        match self {
            BaseMap::Function(f) => f.dom,
            BaseMap::Linear(m) => m.cols(),
        }
    }

    /// Target size/dimension.
    pub fn cod_size(&self) -> usize {
        match self {
            BaseMap::Function(f) => f.cod,
            BaseMap::Linear(m) => m.rows(),
        }
    }
}

/// Composition in the base: `after . before`.
pub fn internal_compose(after: &BaseMap, before: &BaseMap) -> Result<BaseMap> {
    match (after, before) {
        (BaseMap::Function(g), BaseMap::Function(f)) => Ok(BaseMap::Function(g.compose(f)?)),
        (BaseMap::Linear(g), BaseMap::Linear(f)) => Ok(BaseMap::Linear(g.matmul(f)?)),
        _ => Err(Error::BaseMismatch(
            "cannot compose a function with a linear map".into(),
        )),
    }
}

/// Hom object `[X, Y]` of a base.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomObject {
    /// All functions `dom -> cod`; there are `cod^dom` of them.
    FinSetHom { dom: usize, cod: usize },
    /// All linear maps `Q^dom -> Q^cod`, a space of dimension `dom * cod`.
    VectHom { dom: usize, cod: usize },
}

impl HomObject {
    /// Number of elements (finite sets) or dimension (vector spaces).
    pub fn size(&self) -> u128 {
        match self {
            HomObject::FinSetHom { dom, cod } => {
                checked_pow(*cod as u128, *dom).unwrap_or(u128::MAX)
            }
            HomObject::VectHom { dom, cod } => (*dom as u128) * (*cod as u128),
        }
    }

    /// Lexicographic index of a function in this hom set: the value table
    /// read as a base-`cod` numeral, first argument most significant.
    pub fn encode(&self, f: &FinFunction) -> Result<u128> {
        let HomObject::FinSetHom { dom, cod } = self else {
            return Err(Error::BaseMismatch("encode applies to finite-set homs".into()));
        };
        if f.dom != *dom || f.cod != *cod {
            return Err(Error::shape("function does not belong to this hom set"));
        }
        let mut idx: u128 = 0;
        for &v in &f.table {
            idx = idx * (*cod as u128) + v as u128;
        }
        Ok(idx)
    }

    /// Inverse of [`HomObject::encode`].
    pub fn decode(&self, index: u128) -> Result<FinFunction> {
        let HomObject::FinSetHom { dom, cod } = self else {
            return Err(Error::BaseMismatch("decode applies to finite-set homs".into()));
        };
        if index >= self.size() {
            return Err(Error::invalid(format!("hom index {index} out of range")));
        }
        let mut table = vec![0usize; *dom];
        let mut rest = index;
        for k in (0..*dom).rev() {
            table[k] = (rest % (*cod as u128)) as usize;
            rest /= *cod as u128;
        }
        Ok(FinFunction {
            dom: *dom,
            cod: *cod,
            table,
        })
    }
}

fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut out: u128 = 1;
    for _ in 0..exp {
        out = out.checked_mul(base)?;
    }
    Some(out)
}

/// Product of `sizes`, or `None` on overflow. The empty product is 1.
pub fn checked_product(sizes: &[u128]) -> Option<u128> {
    sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s))
}

/// Hom object `[x, y]`; the objects must live in the same base.
pub fn hom(x: &BaseObject, y: &BaseObject) -> Result<HomObject> {
    match (x, y) {
        (BaseObject::FinSet { elements: ex }, BaseObject::FinSet { elements: ey }) => {
            Ok(HomObject::FinSetHom {
                dom: ex.len(),
                cod: ey.len(),
            })
        }
        (BaseObject::Vect { dim: dx }, BaseObject::Vect { dim: dy }) => Ok(HomObject::VectHom {
            dom: *dx,
            cod: *dy,
        }),
        _ => Err(Error::BaseMismatch(format!(
            "hom between {} and {} objects",
            x.tag(),
            y.tag()
        ))),
    }
}

/// Finite product of hom objects, with projections.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Product {
    /// Tuples in lexicographic order, first factor most significant.
    FinSet {
        factor_sizes: Vec<u128>,
        total: u128,
    },
    /// Direct sum; factor `k` occupies a contiguous coordinate block.
    Vect {
        factor_dims: Vec<usize>,
        offsets: Vec<usize>,
        total: usize,
    },
}

impl Product {
    /// Tuple of factor indices at a flat index.
    pub fn tuple_of_index(&self, mut index: u128) -> Result<Vec<u128>> {
        let Product::FinSet { factor_sizes, total } = self else {
            return Err(Error::BaseMismatch("tuples live in finite-set products".into()));
        };
        if index >= *total {
            return Err(Error::invalid("product index out of range"));
        }
        let mut tuple = vec![0u128; factor_sizes.len()];
        for k in (0..factor_sizes.len()).rev() {
            tuple[k] = index % factor_sizes[k];
            index /= factor_sizes[k];
        }
        Ok(tuple)
    }

    pub fn index_of_tuple(&self, tuple: &[u128]) -> Result<u128> {
        let Product::FinSet { factor_sizes, .. } = self else {
            return Err(Error::BaseMismatch("tuples live in finite-set products".into()));
        };
        if tuple.len() != factor_sizes.len() || tuple.iter().zip(factor_sizes).any(|(t, s)| t >= s)
        {
            return Err(Error::invalid("tuple does not match the product shape"));
        }
        Ok(tuple
            .iter()
            .zip(factor_sizes)
            .fold(0u128, |acc, (&t, &s)| acc * s + t))
    }

    /// Projection onto factor `k`, as an index map.
    pub fn project(&self, index: u128, k: usize) -> Result<u128> {
        Ok(self.tuple_of_index(index)?[k])
    }

    /// Projection matrix onto factor `k` of a vector-space product.
    pub fn projection_matrix(&self, k: usize) -> Result<RatMatrix> {
        let Product::Vect {
            factor_dims,
            offsets,
            total,
        } = self
        else {
            return Err(Error::BaseMismatch(
                "projection matrices live in vector-space products".into(),
            ));
        };
        let d = factor_dims[k];
        let off = offsets[k];
        Ok(RatMatrix::from_fn(d, *total, |i, j| {
            if j == off + i {
                num::One::one()
            } else {
                Rat::zero()
            }
        }))
    }
}

/// Product of finitely many hom objects of the same base. The empty
/// product is the terminal object: a one-element set, or `Q^0`.
pub fn finite_product(factors: &[HomObject]) -> Result<Product> {
    let mut finset = Vec::new();
    let mut vect = Vec::new();
    for h in factors {
        match h {
            HomObject::FinSetHom { .. } => finset.push(h.size()),
            HomObject::VectHom { dom, cod } => vect.push(dom * cod),
        }
    }
    match (finset.is_empty(), vect.is_empty()) {
        (false, false) => Err(Error::BaseMismatch(
            "product factors must share a base".into(),
        )),
        (true, false) => {
            let mut offsets = Vec::with_capacity(vect.len());
            let mut total = 0usize;
            for &d in &vect {
                offsets.push(total);
                total += d;
            }
            Ok(Product::Vect {
                factor_dims: vect,
                offsets,
                total,
            })
        }
        // the empty product is the finite-set singleton by convention;
        // callers in the vector base pass at least one factor
        (_, true) => {
            let total = checked_product(&finset)
                .ok_or_else(|| Error::invalid("product size overflows"))?;
            Ok(Product::FinSet {
                factor_sizes: finset,
                total,
            })
        }
    }
}

/// Operator on vectorized hom spaces `[X, Y] -> [X, Y']` sending `H` to
/// `B . H`, where `X` has dimension `dom_dim`. In the row-major
/// convention this equals `B (x) I_dom`, which is kept as a test.
pub fn postcompose_operator(b: &RatMatrix, dom_dim: usize) -> RatMatrix {
    let out_rows = b.rows() * dom_dim;
    let out_cols = b.cols() * dom_dim;
    let mut op = RatMatrix::zeros(out_rows, out_cols);
    for k in 0..b.rows() {
        for i in 0..b.cols() {
            if b.at(k, i).is_zero() {
                continue;
            }
            for j in 0..dom_dim {
                op.set(k * dom_dim + j, i * dom_dim + j, b.at(k, i).clone());
            }
        }
    }
    op
}

/// Operator on vectorized hom spaces `[X, Y] -> [X', Y]` sending `H` to
/// `H . A`, where `Y` has dimension `cod_dim`. Equals `I_cod (x) A^T`.
pub fn precompose_operator(a: &RatMatrix, cod_dim: usize) -> RatMatrix {
    let dom_new = a.cols();
    let dom_old = a.rows();
    let mut op = RatMatrix::zeros(cod_dim * dom_new, cod_dim * dom_old);
    for j in 0..dom_old {
        for jp in 0..dom_new {
            if a.at(j, jp).is_zero() {
                continue;
            }
            for i in 0..cod_dim {
                op.set(i * dom_new + jp, i * dom_old + j, a.at(j, jp).clone());
            }
        }
    }
    op
}

/// Equalizer of a parallel pair in a base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equalizer {
    /// Subset of the domain on which the two functions agree, with the
    /// inclusion function.
    FinSet {
        elements: Vec<usize>,
        inclusion: FinFunction,
    },
    /// Kernel of the difference, with its inclusion matrix.
    Vect {
        subspace: Subspace,
        inclusion: RatMatrix,
    },
}

/// Equalizer of `f, g`, which must be parallel maps in the same base.
pub fn equalizer(f: &BaseMap, g: &BaseMap) -> Result<Equalizer> {
    match (f, g) {
        (BaseMap::Function(f), BaseMap::Function(g)) => {
            if f.dom != g.dom || f.cod != g.cod {
                return Err(Error::shape("equalizer of non-parallel functions"));
            }
            let elements: Vec<usize> = (0..f.dom).filter(|&x| f.table[x] == g.table[x]).collect();
            let inclusion = FinFunction {
                dom: elements.len(),
                cod: f.dom,
                table: elements.clone(),
            };
            Ok(Equalizer::FinSet {
                elements,
                inclusion,
            })
        }
        (BaseMap::Linear(f), BaseMap::Linear(g)) => {
            let subspace = kernel(&f.sub(g)?);
            let inclusion = subspace.inclusion_matrix();
            Ok(Equalizer::Vect {
                subspace,
                inclusion,
            })
        }
        _ => Err(Error::BaseMismatch("equalizer of maps in different bases".into())),
    }
}
