//! The end engine: natural transformation objects, endomorphism
//! monoids with their projections, and whiskering along category maps.
//!
//! A natural family lives in the product of the per-object hom objects
//! `[F X, G X]`, cut out by one equation per non-identity morphism
//! `f: X -> Y` of the source: postcomposing `G(f)` on the `X`
//! coordinate agrees with precomposing `F(f)` on the `Y` coordinate.
//! Finite-set carriers are enumerated under a guard; vector carriers
//! come from one stacked kernel with a block row per equation.

mod operadic;

pub use operadic::{coendomorphism_operad, endomorphism_operad, EndCarrier, FunctorOperad};

use num::Zero;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fincat::CatFunctor;
use crate::linalg::{kernel, Rat, RatMatrix, Subspace};
use crate::vbase::{
    checked_product, postcompose_operator, precompose_operator, BaseFunctor, BaseMap, BaseTag,
    FinFunction, HomObject, MonoidObject,
};

/// Shape of one hom-object block `[F X, G X]` inside a stacked vector
/// carrier: the block holds a `rows x cols` matrix vectorized row-major
/// starting at `offset`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomBlock {
    pub offset: usize,
    pub rows: usize,
    pub cols: usize,
}

impl HomBlock {
    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The block slice of a stacked vector, as a matrix.
    pub fn extract(&self, stacked: &[Rat]) -> RatMatrix {
        RatMatrix::from_vec(self.rows, self.cols, &stacked[self.offset..self.offset + self.len()])
            .expect("block bounds are consistent")
    }
}

fn as_fn(map: &BaseMap) -> &FinFunction {
    match map {
        BaseMap::Function(f) => f,
        BaseMap::Linear(_) => unreachable!("tag checked before extraction"),
    }
}

fn as_lin(map: &BaseMap) -> &RatMatrix {
    match map {
        BaseMap::Linear(m) => m,
        BaseMap::Function(_) => unreachable!("tag checked before extraction"),
    }
}

/// The non-identity morphisms of the source, each as
/// `(morphism, dom, cod)`.
fn equations(f: &BaseFunctor) -> Vec<(usize, usize, usize)> {
    let c = f.source();
    (0..c.num_morphisms())
        .filter(|&m| !c.is_identity(m))
        .map(|m| (m, c.dom(m), c.cod(m)))
        .collect()
}

/// The object of natural transformations from `F` to `G`: all natural
/// families over finite sets, or the solution subspace over vectors.
#[derive(Clone, Debug)]
pub enum NatObject {
    FinSet { families: Vec<Vec<FinFunction>> },
    Vect { blocks: Vec<HomBlock>, space: Subspace },
}

impl NatObject {
    /// Cardinality of the carrier (finite sets) or its dimension
    /// (vectors).
    pub fn size(&self) -> usize {
        match self {
            NatObject::FinSet { families } => families.len(),
            NatObject::Vect { space, .. } => space.dim(),
        }
    }
}

fn vect_blocks(f: &BaseFunctor, g: &BaseFunctor) -> Vec<HomBlock> {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for x in 0..f.source().num_objects() {
        let rows = g.object(x).size();
        let cols = f.object(x).size();
        blocks.push(HomBlock { offset, rows, cols });
        offset += rows * cols;
    }
    blocks
}

/// The stacked-kernel matrix whose null space is Nat(F, G) over the
/// vector base: one block row per non-identity morphism.
fn naturality_matrix(f: &BaseFunctor, g: &BaseFunctor, blocks: &[HomBlock]) -> RatMatrix {
    let total: usize = blocks.iter().map(HomBlock::len).sum();
    let eqs = equations(f);
    let row_counts: Vec<usize> = eqs
        .iter()
        .map(|&(_, x, y)| g.object(y).size() * f.object(x).size())
        .collect();
    let mut big = RatMatrix::zeros(row_counts.iter().sum(), total);
    let mut row0 = 0;
    for (&(m, x, y), &rows) in eqs.iter().zip(&row_counts) {
        let post = postcompose_operator(as_lin(g.map(m)), f.object(x).size());
        for r in 0..rows {
            for c in 0..post.cols() {
                if !post.at(r, c).is_zero() {
                    big.set(row0 + r, blocks[x].offset + c, post.at(r, c).clone());
                }
            }
        }
        let pre = precompose_operator(as_lin(f.map(m)), g.object(y).size());
        for r in 0..rows {
            for c in 0..pre.cols() {
                if !pre.at(r, c).is_zero() {
                    let col = blocks[y].offset + c;
                    let v = big.at(row0 + r, col) - pre.at(r, c);
                    big.set(row0 + r, col, v);
                }
            }
        }
        row0 += rows;
    }
    big
}

/// Every family of finite-set components, enumerated by an odometer
/// over the per-object hom encodings, filtered by the naturality
/// equations. Errors when the candidate count exceeds the guard.
fn finset_families(f: &BaseFunctor, g: &BaseFunctor, guard: u128) -> Result<Vec<Vec<FinFunction>>> {
    let n_obj = f.source().num_objects();
    let homs: Vec<HomObject> = (0..n_obj)
        .map(|x| crate::vbase::hom(f.object(x), g.object(x)))
        .collect::<Result<Vec<_>>>()?;
    let sizes: Vec<u128> = homs.iter().map(HomObject::size).collect();
    let total = checked_product(&sizes).ok_or(Error::GuardExceeded { size: u128::MAX, guard })?;
    if total > guard {
        return Err(Error::GuardExceeded { size: total, guard });
    }
    let eqs = equations(f);
    let mut families = Vec::new();
    let mut counters = vec![0u128; n_obj];
    loop {
        let family: Vec<FinFunction> = homs
            .iter()
            .zip(&counters)
            .map(|(h, &i)| h.decode(i))
            .collect::<Result<Vec<_>>>()?;
        let natural = eqs.iter().all(|&(m, x, y)| {
            let lhs = as_fn(g.map(m)).compose(&family[x]);
            let rhs = family[y].compose(as_fn(f.map(m)));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            }
        });
        if natural {
            families.push(family);
        }
        // Odometer step, last object fastest.
        let mut pos = n_obj;
        loop {
            if pos == 0 {
                return Ok(families);
            }
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < sizes[pos] {
                break;
            }
            counters[pos] = 0;
        }
    }
}

/// The natural transformation object `Nat(F, G)`.
pub fn nat_object(f: &BaseFunctor, g: &BaseFunctor, guard: u128) -> Result<NatObject> {
    if f.source() != g.source() {
        return Err(Error::SourceMismatch(
            "the two functors live on different categories".into(),
        ));
    }
    if f.tag() != g.tag() {
        return Err(Error::BaseMismatch("the two functors land in different bases".into()));
    }
    match f.tag() {
        BaseTag::FinSet => Ok(NatObject::FinSet { families: finset_families(f, g, guard)? }),
        BaseTag::QVect => {
            let blocks = vect_blocks(f, g);
            let space = kernel(&naturality_matrix(f, g, &blocks));
            Ok(NatObject::Vect { blocks, space })
        }
    }
}

/// The endomorphism monoid `E(F) = Nat(F, F)` with unit, coordinatewise
/// composition, and per-object projections. Closure of composition on
/// the carrier is established during construction, not assumed: a
/// composite falling outside the carrier is a hard error.
#[derive(Clone, Debug)]
pub struct EndoMonoid {
    pub functor: BaseFunctor,
    pub data: EndoData,
}

#[derive(Clone, Debug)]
pub enum EndoData {
    FinSet {
        elements: Vec<Vec<FinFunction>>,
        unit: usize,
        /// `table[i][j]` is the index of the composite with `e_j`
        /// applied first.
        table: Vec<Vec<usize>>,
    },
    Vect {
        blocks: Vec<HomBlock>,
        carrier: Subspace,
        unit: Vec<Rat>,
        /// `dim x dim^2` structure constants; column `i * dim + j`
        /// holds the coordinates of the composite with `e_j` first.
        mult: RatMatrix,
    },
}

impl EndoMonoid {
    pub fn base(&self) -> BaseTag {
        match &self.data {
            EndoData::FinSet { .. } => BaseTag::FinSet,
            EndoData::Vect { .. } => BaseTag::QVect,
        }
    }

    /// Carrier cardinality (finite sets) or dimension (vectors).
    pub fn size(&self) -> usize {
        match &self.data {
            EndoData::FinSet { elements, .. } => elements.len(),
            EndoData::Vect { carrier, .. } => carrier.dim(),
        }
    }

    /// Forget the end structure, keeping the abstract monoid object.
    pub fn as_monoid_object(&self) -> MonoidObject {
        match &self.data {
            EndoData::FinSet { elements, unit, table } => MonoidObject::FinSet {
                elements: (0..elements.len()).map(|i| format!("t{i}")).collect(),
                table: table.clone(),
                unit: *unit,
            },
            EndoData::Vect { carrier, unit, mult, .. } => MonoidObject::Algebra {
                dim: carrier.dim(),
                mult: mult.clone(),
                unit: unit.clone(),
            },
        }
    }

    /// Component of a finite-set carrier element at an object.
    pub fn component(&self, element: usize, x: usize) -> Result<&FinFunction> {
        match &self.data {
            EndoData::FinSet { elements, .. } => Ok(&elements[element][x]),
            EndoData::Vect { .. } => {
                Err(Error::BaseMismatch("component lookup is for finite sets".into()))
            }
        }
    }

    /// The projection `pi_X` on a vector carrier: the matrix from
    /// carrier coordinates to the vectorized hom `[F X, F X]`.
    pub fn projection_matrix(&self, x: usize) -> Result<RatMatrix> {
        let EndoData::Vect { blocks, carrier, .. } = &self.data else {
            return Err(Error::BaseMismatch("projection matrices are for vectors".into()));
        };
        let block = &blocks[x];
        let incl = carrier.inclusion_matrix();
        let mut proj = RatMatrix::zeros(block.len(), carrier.dim());
        for r in 0..block.len() {
            for c in 0..carrier.dim() {
                proj.set(r, c, incl.at(block.offset + r, c).clone());
            }
        }
        Ok(proj)
    }

    /// Monoid axioms on the carrier, first witness if any.
    pub fn validate(&self) -> std::result::Result<(), crate::vbase::MonoidViolation> {
        self.as_monoid_object().validate()
    }
}

fn identity_family(f: &BaseFunctor) -> Vec<BaseMap> {
    (0..f.source().num_objects())
        .map(|x| BaseMap::identity_of(f.object(x)))
        .collect()
}

/// `E(F)` with its monoid structure.
pub fn endomorphism_monoid(f: &BaseFunctor, guard: u128) -> Result<EndoMonoid> {
    match nat_object(f, f, guard)? {
        NatObject::FinSet { families } => {
            let homs: Vec<HomObject> = (0..f.source().num_objects())
                .map(|x| crate::vbase::hom(f.object(x), f.object(x)))
                .collect::<Result<Vec<_>>>()?;
            let encode = |family: &[FinFunction]| -> Result<Vec<u128>> {
                family.iter().zip(&homs).map(|(c, h)| h.encode(c)).collect()
            };
            let mut index = BTreeMap::new();
            for (i, fam) in families.iter().enumerate() {
                index.insert(encode(fam)?, i);
            }
            let ids: Vec<FinFunction> = identity_family(f)
                .iter()
                .map(|m| as_fn(m).clone())
                .collect();
            let unit = *index
                .get(&encode(&ids)?)
                .ok_or_else(|| Error::Closure("identity family is not natural".into()))?;
            let k = families.len();
            let mut table = vec![vec![0usize; k]; k];
            for i in 0..k {
                for j in 0..k {
                    let composite: Vec<FinFunction> = families[i]
                        .iter()
                        .zip(&families[j])
                        .map(|(a, b)| a.compose(b))
                        .collect::<Result<Vec<_>>>()?;
                    table[i][j] = *index.get(&encode(&composite)?).ok_or_else(|| {
                        Error::Closure(format!("composite of families {i} and {j} is not natural"))
                    })?;
                }
            }
            Ok(EndoMonoid {
                functor: f.clone(),
                data: EndoData::FinSet { elements: families, unit, table },
            })
        }
        NatObject::Vect { blocks, space } => {
            let total: usize = blocks.iter().map(HomBlock::len).sum();
            let mut id_stacked = vec![Rat::zero(); total];
            for (x, block) in blocks.iter().enumerate() {
                let id = as_lin(&BaseMap::identity_of(f.object(x))).clone();
                for (t, v) in id.vectorize().into_iter().enumerate() {
                    id_stacked[block.offset + t] = v;
                }
            }
            let unit = space
                .coords(&id_stacked)
                .ok_or_else(|| Error::Closure("identity family is not natural".into()))?;
            let k = space.dim();
            let mut mult = RatMatrix::zeros(k, k * k);
            for i in 0..k {
                for j in 0..k {
                    let mut composite = vec![Rat::zero(); total];
                    for block in &blocks {
                        let a = block.extract(&space.basis()[i]);
                        let b = block.extract(&space.basis()[j]);
                        let c = a.matmul(&b)?;
                        for (t, v) in c.vectorize().into_iter().enumerate() {
                            composite[block.offset + t] = v;
                        }
                    }
                    let coords = space.coords(&composite).ok_or_else(|| {
                        Error::Closure(format!(
                            "composite of basis elements {i} and {j} leaves the carrier"
                        ))
                    })?;
                    for (r, v) in coords.into_iter().enumerate() {
                        mult.set(r, i * k + j, v);
                    }
                }
            }
            Ok(EndoMonoid {
                functor: f.clone(),
                data: EndoData::Vect { blocks, carrier: space, unit, mult },
            })
        }
    }
}

/// Where a whiskering lands, with the structure checks already run.
#[derive(Clone, Debug)]
pub struct WhiskerReport {
    pub target: EndoMonoid,
    pub map: WhiskerMap,
    pub preserves_unit: bool,
    pub preserves_mult: bool,
    pub injective: bool,
    pub surjective: bool,
}

#[derive(Clone, Debug)]
pub enum WhiskerMap {
    /// Image index per source element.
    FinSet { images: Vec<usize> },
    /// Target coordinates of the source basis.
    Vect { matrix: RatMatrix },
}

impl WhiskerReport {
    pub fn is_iso(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Restriction of `E(F)` along a category map into the source of `F`:
/// the family keeps only the components at image objects. The
/// restricted family is automatically natural, because its equations
/// are a subset of the original ones.
pub fn whisker_map(ef: &EndoMonoid, phi: &CatFunctor, guard: u128) -> Result<WhiskerReport> {
    if phi.target() != ef.functor.source() {
        return Err(Error::SourceMismatch(
            "the category map does not land in the functor's source".into(),
        ));
    }
    let restricted = ef.functor.restrict(phi)?;
    let target = endomorphism_monoid(&restricted, guard)?;
    match (&ef.data, &target.data) {
        (EndoData::FinSet { elements, unit, table }, EndoData::FinSet { .. }) => {
            let EndoData::FinSet { elements: tgt_elements, unit: tgt_unit, table: tgt_table } =
                &target.data
            else {
                unreachable!()
            };
            let homs: Vec<HomObject> = (0..restricted.source().num_objects())
                .map(|x| crate::vbase::hom(restricted.object(x), restricted.object(x)))
                .collect::<Result<Vec<_>>>()?;
            let encode = |family: &[FinFunction]| -> Result<Vec<u128>> {
                family.iter().zip(&homs).map(|(c, h)| h.encode(c)).collect()
            };
            let mut index = BTreeMap::new();
            for (i, fam) in tgt_elements.iter().enumerate() {
                index.insert(encode(fam)?, i);
            }
            let mut images = Vec::with_capacity(elements.len());
            for (i, fam) in elements.iter().enumerate() {
                let restricted_family: Vec<FinFunction> = (0..restricted.source().num_objects())
                    .map(|x| fam[phi.on_object(x)].clone())
                    .collect();
                images.push(*index.get(&encode(&restricted_family)?).ok_or_else(|| {
                    Error::Closure(format!("restriction of family {i} is not natural"))
                })?);
            }
            let preserves_unit = images[*unit] == *tgt_unit;
            let k = elements.len();
            let mut preserves_mult = true;
            for i in 0..k {
                for j in 0..k {
                    if images[table[i][j]] != tgt_table[images[i]][images[j]] {
                        preserves_mult = false;
                    }
                }
            }
            let mut seen = std::collections::BTreeSet::new();
            let injective = images.iter().all(|&im| seen.insert(im));
            let surjective = {
                let image: std::collections::BTreeSet<usize> = images.iter().copied().collect();
                image.len() == tgt_elements.len()
            };
            Ok(WhiskerReport {
                target,
                map: WhiskerMap::FinSet { images },
                preserves_unit,
                preserves_mult,
                injective,
                surjective,
            })
        }
        (
            EndoData::Vect { blocks, carrier, unit, mult },
            EndoData::Vect { blocks: tgt_blocks, carrier: tgt_carrier, .. },
        ) => {
            let tgt_total: usize = tgt_blocks.iter().map(HomBlock::len).sum();
            let k = carrier.dim();
            let kt = tgt_carrier.dim();
            let mut matrix = RatMatrix::zeros(kt, k);
            for (i, basis) in carrier.basis().iter().enumerate() {
                let mut restricted_vec = vec![Rat::zero(); tgt_total];
                for (x, tgt_block) in tgt_blocks.iter().enumerate() {
                    let src_block = &blocks[phi.on_object(x)];
                    for t in 0..tgt_block.len() {
                        restricted_vec[tgt_block.offset + t] = basis[src_block.offset + t].clone();
                    }
                }
                let coords = tgt_carrier.coords(&restricted_vec).ok_or_else(|| {
                    Error::Closure(format!("restriction of basis element {i} is not natural"))
                })?;
                for (r, v) in coords.into_iter().enumerate() {
                    matrix.set(r, i, v);
                }
            }
            let EndoData::Vect { unit: tgt_unit, mult: tgt_mult, .. } = &target.data else {
                unreachable!()
            };
            let preserves_unit = &matrix.mul_vec(unit)? == tgt_unit;
            // phi(a) * phi(b) == phi(a * b) on all basis pairs, as the
            // matrix identity mult_t . (phi (x) phi) == phi . mult.
            let lhs = tgt_mult.matmul(&matrix.kron(&matrix))?;
            let rhs = matrix.matmul(mult)?;
            let preserves_mult = lhs == rhs;
            let injective = matrix.rank() == k;
            let surjective = matrix.rank() == kt;
            Ok(WhiskerReport {
                target,
                map: WhiskerMap::Vect { matrix },
                preserves_unit,
                preserves_mult,
                injective,
                surjective,
            })
        }
        _ => unreachable!("restriction preserves the base"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::linalg::rat_int;
    use crate::vbase::{BaseObject, MonoidObject};
    use crate::DEFAULT_GUARD;

    fn finset_functor(source: &FinCategory, objects: Vec<Vec<&str>>, maps: Vec<(usize, Vec<usize>)>) -> BaseFunctor {
        let obj: Vec<BaseObject> = objects.iter().map(|els| BaseObject::finset(els)).collect();
        let mut morphisms = Vec::new();
        for m in 0..source.num_morphisms() {
            if source.is_identity(m) {
                morphisms.push(BaseMap::identity_of(&obj[source.dom(m)]));
            } else {
                let (_, table) = maps
                    .iter()
                    .find(|(idx, _)| *idx == m)
                    .expect("non-identity morphism image provided");
                morphisms.push(BaseMap::Function(
                    FinFunction::new(
                        obj[source.dom(m)].size(),
                        obj[source.cod(m)].size(),
                        table.clone(),
                    )
                    .unwrap(),
                ));
            }
        }
        BaseFunctor::new(source.clone(), BaseTag::FinSet, obj, morphisms).unwrap()
    }

    fn vect_functor(source: &FinCategory, dims: Vec<usize>, maps: Vec<(usize, RatMatrix)>) -> BaseFunctor {
        let obj: Vec<BaseObject> = dims.iter().map(|&d| BaseObject::vect(d)).collect();
        let mut morphisms = Vec::new();
        for m in 0..source.num_morphisms() {
            if source.is_identity(m) {
                morphisms.push(BaseMap::identity_of(&obj[source.dom(m)]));
            } else {
                let (_, mat) = maps
                    .iter()
                    .find(|(idx, _)| *idx == m)
                    .expect("non-identity morphism image provided");
                morphisms.push(BaseMap::Linear(mat.clone()));
            }
        }
        BaseFunctor::new(source.clone(), BaseTag::QVect, obj, morphisms).unwrap()
    }

    #[test]
    fn terminal_category_has_unconstrained_families() {
        let c = FinCategory::terminal();
        let f = finset_functor(&c, vec![vec!["1", "2"]], vec![]);
        let nat = nat_object(&f, &f, DEFAULT_GUARD).unwrap();
        assert_eq!(nat.size(), 4);
    }

    #[test]
    fn walking_arrow_identity_line_is_diagonal() {
        let c = FinCategory::walking_arrow();
        let u = c.morphism_index("u").unwrap();
        let f = vect_functor(&c, vec![1, 1], vec![(u, RatMatrix::identity(1))]);
        let nat = nat_object(&f, &f, DEFAULT_GUARD).unwrap();
        assert_eq!(nat.size(), 1);
    }

    #[test]
    fn single_object_monoid_is_full_hom() {
        let c = FinCategory::terminal();
        let f = vect_functor(&c, vec![2], vec![]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        assert_eq!(e.size(), 4);
        assert!(e.validate().is_ok());
        // Multiplication is plain matrix composition.
        let a = RatMatrix::from_vec(2, 2, &[1, 2, 3, 4].map(rat_int)).unwrap();
        let b = RatMatrix::from_vec(2, 2, &[0, 1, 1, 0].map(rat_int)).unwrap();
        let m = e.as_monoid_object();
        let prod = m.algebra_mul(&a.vectorize(), &b.vectorize()).unwrap();
        assert_eq!(prod, a.matmul(&b).unwrap().vectorize());
    }

    #[test]
    fn walking_arrow_finset_collapse_is_full_transformation_monoid() {
        // F(a) = {1,2} -> F(b) = {1}: every self-map of {1,2} is
        // natural, and composition is composition.
        let c = FinCategory::walking_arrow();
        let u = c.morphism_index("u").unwrap();
        let f = finset_functor(&c, vec![vec!["1", "2"], vec!["1"]], vec![(u, vec![0, 0])]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        assert_eq!(e.size(), 4);
        assert!(e.validate().is_ok());
        let got = e.as_monoid_object();
        let expected = MonoidObject::full_transformations(2);
        // Equality of tables under the hom encoding order: component at
        // object a is the transformation itself and the encoding is the
        // same lex order as the stock table.
        let MonoidObject::FinSet { table: got_table, unit: got_unit, .. } = &got else {
            panic!("finite-set monoid expected")
        };
        let MonoidObject::FinSet { table: exp_table, unit: exp_unit, .. } = &expected else {
            panic!("finite-set monoid expected")
        };
        assert_eq!(got_table, exp_table);
        assert_eq!(got_unit, exp_unit);
    }

    #[test]
    fn walking_arrow_vect_is_pullback() {
        // E(F) for F on the walking arrow is the fiber product of
        // [X,X] and [Y,Y] over [X,Y]: pairs (s, t) with F(u) s = t F(u).
        // An independent computation through products and equalizers
        // confirms the carrier.
        let c = FinCategory::walking_arrow();
        let u = c.morphism_index("u").unwrap();
        let fu = RatMatrix::from_vec(2, 2, &[1, 0, 0, 0].map(rat_int)).unwrap();
        let f = vect_functor(&c, vec![2, 2], vec![(u, fu.clone())]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let EndoData::Vect { carrier, .. } = &e.data else { panic!("vector carrier") };

        let post = postcompose_operator(&fu, 2);
        let pre = precompose_operator(&fu, 2);
        let mut stacked = RatMatrix::zeros(4, 8);
        for r in 0..4 {
            for c2 in 0..4 {
                stacked.set(r, c2, post.at(r, c2).clone());
                let v = stacked.at(r, 4 + c2) - pre.at(r, c2);
                stacked.set(r, 4 + c2, v);
            }
        }
        assert_eq!(carrier, &kernel(&stacked));
        assert!(e.validate().is_ok());
    }

    #[test]
    fn projections_are_monoid_maps() {
        let c = FinCategory::walking_arrow();
        let u = c.morphism_index("u").unwrap();
        let fu = RatMatrix::from_vec(2, 2, &[0, 1, 0, 0].map(rat_int)).unwrap();
        let f = vect_functor(&c, vec![2, 2], vec![(u, fu)]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let EndoData::Vect { carrier, unit, mult, .. } = &e.data else { panic!() };
        let k = carrier.dim();
        for x in 0..2 {
            let proj = e.projection_matrix(x).unwrap();
            // Unit goes to the identity matrix of the component.
            let d = f.object(x).size();
            assert_eq!(proj.mul_vec(unit).unwrap(), RatMatrix::identity(d).vectorize());
            // Projection of a product is the composite of projections.
            for i in 0..k {
                for j in 0..k {
                    let prod_coords = mult.col(i * k + j);
                    let projected = proj.mul_vec(&prod_coords).unwrap();
                    let a = RatMatrix::from_vec(d, d, &proj.mul_vec(&{
                        let mut ei = vec![Rat::zero(); k];
                        ei[i] = rat_int(1);
                        ei
                    }).unwrap()).unwrap();
                    let b = RatMatrix::from_vec(d, d, &proj.mul_vec(&{
                        let mut ej = vec![Rat::zero(); k];
                        ej[j] = rat_int(1);
                        ej
                    }).unwrap()).unwrap();
                    assert_eq!(projected, a.matmul(&b).unwrap().vectorize());
                }
            }
        }
    }

    #[test]
    fn empty_category_gives_terminal_monoid() {
        let c = FinCategory::empty();
        let f_set = BaseFunctor::new(c.clone(), BaseTag::FinSet, vec![], vec![]).unwrap();
        let e = endomorphism_monoid(&f_set, DEFAULT_GUARD).unwrap();
        assert_eq!(e.size(), 1);
        assert!(e.validate().is_ok());
        let f_vec = BaseFunctor::new(c, BaseTag::QVect, vec![], vec![]).unwrap();
        let e = endomorphism_monoid(&f_vec, DEFAULT_GUARD).unwrap();
        assert_eq!(e.size(), 0);
        assert!(e.validate().is_ok());
    }

    #[test]
    fn guard_aborts_large_finset_search() {
        let c = FinCategory::terminal();
        let f = finset_functor(&c, vec![vec!["1", "2", "3", "4", "5"]], vec![]);
        // 5^5 = 3125 candidate families.
        match nat_object(&f, &f, 100) {
            Err(Error::GuardExceeded { size, guard }) => {
                assert_eq!(size, 3125);
                assert_eq!(guard, 100);
            }
            other => panic!("expected a guard error, got {other:?}"),
        }
        assert!(nat_object(&f, &f, 3125).is_ok());
    }

    #[test]
    fn base_and_source_mismatches_rejected() {
        let c = FinCategory::terminal();
        let f = finset_functor(&c, vec![vec!["1"]], vec![]);
        let g = vect_functor(&c, vec![1], vec![]);
        assert!(matches!(nat_object(&f, &g, DEFAULT_GUARD), Err(Error::BaseMismatch(_))));
        let d = FinCategory::discrete(&["a"]);
        let h = finset_functor(&d, vec![vec!["1"]], vec![]);
        assert!(matches!(nat_object(&f, &h, DEFAULT_GUARD), Err(Error::SourceMismatch(_))));
    }

    #[test]
    fn whisker_along_identity_is_identity() {
        let c = FinCategory::walking_arrow();
        let u = c.morphism_index("u").unwrap();
        let f = vect_functor(&c, vec![1, 2], vec![(u, RatMatrix::from_vec(2, 1, &[1, 0].map(rat_int)).unwrap())]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let phi = CatFunctor::identity(&c);
        let report = whisker_map(&e, &phi, DEFAULT_GUARD).unwrap();
        assert!(report.preserves_unit && report.preserves_mult);
        assert!(report.is_iso());
        let WhiskerMap::Vect { matrix } = &report.map else { panic!() };
        assert_eq!(matrix, &RatMatrix::identity(e.size()));
    }

    #[test]
    fn whisker_from_empty_category_hits_terminal_monoid() {
        let c = FinCategory::walking_arrow();
        let u = c.morphism_index("u").unwrap();
        let f = finset_functor(&c, vec![vec!["1", "2"], vec!["1"]], vec![(u, vec![0, 0])]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let empty = FinCategory::empty();
        let phi = CatFunctor::new(empty, c.clone(), vec![], vec![]).unwrap();
        let report = whisker_map(&e, &phi, DEFAULT_GUARD).unwrap();
        assert_eq!(report.target.size(), 1);
        assert!(report.preserves_unit && report.preserves_mult);
        assert!(report.surjective);
        assert!(!report.injective);
    }

    #[test]
    fn whisker_restriction_forgets_a_component() {
        // The inclusion of the full subcategory on b drops the a
        // coordinate of every family.
        let c = FinCategory::walking_arrow();
        let u = c.morphism_index("u").unwrap();
        // F(u) = 0, so E(F) is the whole product, dim 2.
        let f = vect_functor(&c, vec![1, 1], vec![(u, RatMatrix::zeros(1, 1))]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        assert_eq!(e.size(), 2);
        let (_, incl) = CatFunctor::full_subcategory(&c, &[1]).unwrap();
        let report = whisker_map(&e, &incl, DEFAULT_GUARD).unwrap();
        assert_eq!(report.target.size(), 1);
        assert!(report.preserves_unit && report.preserves_mult);
        assert!(report.surjective);
        assert!(!report.injective);
    }

    #[test]
    fn cyclic_group_functor_has_group_algebra_end() {
        // One object with C2 acting on Q^2 by the swap: natural
        // families are the matrices commuting with the swap, dim 2.
        let c = FinCategory::cyclic(2);
        let g1 = c.morphism_index("g1").unwrap();
        let swap = RatMatrix::from_vec(2, 2, &[0, 1, 1, 0].map(rat_int)).unwrap();
        let f = vect_functor(&c, vec![2], vec![(g1, swap)]);
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        assert_eq!(e.size(), 2);
        assert!(e.validate().is_ok());
    }

    /// The category on `{Q^1, Q^2}` generated by the coordinate
    /// injections and projections: closing under composition forces the
    /// four matrix units and all four zero maps, 14 morphisms in total.
    /// The functor sends each morphism to its defining matrix.
    fn matrix_units_functor() -> BaseFunctor {
        let i1 = RatMatrix::from_vec(2, 1, &[1, 0].map(rat_int)).unwrap();
        let i2 = RatMatrix::from_vec(2, 1, &[0, 1].map(rat_int)).unwrap();
        let p1 = RatMatrix::from_vec(1, 2, &[1, 0].map(rat_int)).unwrap();
        let p2 = RatMatrix::from_vec(1, 2, &[0, 1].map(rat_int)).unwrap();
        let named: Vec<(&str, usize, usize, RatMatrix)> = vec![
            ("i1", 0, 1, i1.clone()),
            ("i2", 0, 1, i2.clone()),
            ("p1", 1, 0, p1.clone()),
            ("p2", 1, 0, p2.clone()),
            ("e11", 1, 1, i1.matmul(&p1).unwrap()),
            ("e12", 1, 1, i1.matmul(&p2).unwrap()),
            ("e21", 1, 1, i2.matmul(&p1).unwrap()),
            ("e22", 1, 1, i2.matmul(&p2).unwrap()),
            ("z11", 0, 0, RatMatrix::zeros(1, 1)),
            ("z12", 0, 1, RatMatrix::zeros(2, 1)),
            ("z21", 1, 0, RatMatrix::zeros(1, 2)),
            ("z22", 1, 1, RatMatrix::zeros(2, 2)),
        ];
        let obj_names = ["v1", "v2"];
        let mut with_ids: Vec<(String, usize, usize, RatMatrix)> = vec![
            ("id_v1".into(), 0, 0, RatMatrix::identity(1)),
            ("id_v2".into(), 1, 1, RatMatrix::identity(2)),
        ];
        with_ids.extend(named.iter().map(|(n, d, c, m)| (n.to_string(), *d, *c, m.clone())));
        let mut comps: Vec<(String, String, String)> = Vec::new();
        for (fname, fdom, fcod, fmat) in &named {
            for (gname, gdom, gcod, gmat) in &named {
                if fcod != gdom {
                    continue;
                }
                let prod = gmat.matmul(fmat).unwrap();
                let hit = with_ids
                    .iter()
                    .find(|(_, d, c, m)| d == fdom && c == gcod && m == &prod)
                    .expect("closed under composition");
                comps.push((fname.to_string(), gname.to_string(), hit.0.clone()));
            }
        }
        let morph_decl: Vec<(&str, &str, &str)> =
            named.iter().map(|(n, d, c, _)| (*n, obj_names[*d], obj_names[*c])).collect();
        let comp_refs: Vec<(&str, &str, &str)> =
            comps.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
        let cat = FinCategory::build(&obj_names, &morph_decl, &comp_refs).unwrap();
        assert!(cat.validate().is_ok());
        assert_eq!(cat.num_morphisms(), 14);
        let objs = vec![BaseObject::vect(1), BaseObject::vect(2)];
        let morphisms: Vec<BaseMap> = (0..cat.num_morphisms())
            .map(|m| {
                let name = cat.morphism_name(m);
                let mat = &with_ids.iter().find(|(n, ..)| n.as_str() == name).unwrap().3;
                BaseMap::Linear(mat.clone())
            })
            .collect();
        let f = BaseFunctor::new(cat, BaseTag::QVect, objs, morphisms).unwrap();
        assert!(f.validate().is_ok());
        f
    }

    #[test]
    fn matrix_units_inclusion_has_scalar_nat() {
        let f = matrix_units_functor();
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        assert_eq!(e.size(), 1);
        let EndoData::Vect { carrier, unit, .. } = &e.data else { panic!() };
        // The one natural family is lambda on v1 paired with lambda I
        // on v2.
        let expected = vec![rat_int(1), rat_int(1), rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(carrier.basis(), std::slice::from_ref(&expected));
        assert_eq!(unit, &vec![rat_int(1)]);

        // Independent route: every naturality equation written with
        // plain Kronecker identities, eliminated by the fraction-free
        // oracle.
        let dims = [1usize, 2];
        let offs = [0usize, 1];
        let total = 5;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let c = f.source().clone();
        for m in 0..c.num_morphisms() {
            if c.is_identity(m) {
                continue;
            }
            let (x, y) = (c.dom(m), c.cod(m));
            let BaseMap::Linear(fm) = f.map(m) else { panic!() };
            let post = fm.kron(&RatMatrix::identity(dims[x]));
            let pre = RatMatrix::identity(dims[y]).kron(&fm.transpose());
            for r in 0..dims[y] * dims[x] {
                let mut row = vec![Rat::zero(); total];
                for cc in 0..post.cols() {
                    row[offs[x] + cc] = post.at(r, cc).clone();
                }
                for cc in 0..pre.cols() {
                    let v = &row[offs[y] + cc] - pre.at(r, cc);
                    row[offs[y] + cc] = v;
                }
                rows.push(row);
            }
        }
        let big = RatMatrix::from_rows(rows, total).unwrap();
        let ker = crate::oracle::bareiss_kernel(&big);
        assert_eq!(ker.dim(), 1);
        assert_eq!(&ker, carrier);
    }

    #[test]
    fn whisker_matrix_units_to_line_is_iso() {
        let f = matrix_units_functor();
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let (_, incl) = CatFunctor::full_subcategory(f.source(), &[0]).unwrap();
        let report = whisker_map(&e, &incl, DEFAULT_GUARD).unwrap();
        assert!(report.preserves_unit && report.preserves_mult);
        assert!(report.is_iso());
        assert_eq!(report.target.size(), 1);
        let WhiskerMap::Vect { matrix } = &report.map else { panic!() };
        assert_eq!(matrix, &RatMatrix::identity(1));
    }

    #[test]
    fn whisker_is_contravariant() {
        // Restricting along Phi then Psi agrees with restricting along
        // the composite, as maps of monoids.
        let c = FinCategory::chain(3);
        let a01 = c.morphism_index("a0_1").unwrap();
        let a12 = c.morphism_index("a1_2").unwrap();
        let a02 = c.morphism_index("a0_2").unwrap();
        let m01 = RatMatrix::from_vec(2, 2, &[1, 1, 0, 1].map(rat_int)).unwrap();
        let m12 = RatMatrix::from_vec(1, 2, &[1, 0].map(rat_int)).unwrap();
        let m02 = m12.matmul(&m01).unwrap();
        let f = vect_functor(&c, vec![2, 2, 1], vec![(a01, m01), (a12, m12), (a02, m02)]);
        assert!(f.validate().is_ok());
        let e = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();

        let (mid, phi) = CatFunctor::full_subcategory(&c, &[0, 1]).unwrap();
        let (_, psi) = CatFunctor::full_subcategory(&mid, &[1]).unwrap();
        let through = whisker_map(&e, &phi, DEFAULT_GUARD).unwrap();
        let second = whisker_map(&through.target, &psi, DEFAULT_GUARD).unwrap();
        let composite =
            whisker_map(&e, &CatFunctor::compose(&phi, &psi).unwrap(), DEFAULT_GUARD).unwrap();
        let WhiskerMap::Vect { matrix: m_phi } = &through.map else { panic!() };
        let WhiskerMap::Vect { matrix: m_psi } = &second.map else { panic!() };
        let WhiskerMap::Vect { matrix: m_both } = &composite.map else { panic!() };
        assert_eq!(&m_psi.matmul(m_phi).unwrap(), m_both);
        assert!(through.preserves_unit && through.preserves_mult);
        assert!(second.preserves_unit && second.preserves_mult);
        assert!(composite.preserves_unit && composite.preserves_mult);
    }
}
