//! Representations of monoid objects, the two directions of the
//! representation adjunction, the module-action transpose, and the
//! regular-representation faithfulness probe.
//!
//! A representation is a monoid map `M -> [X, X]`. The adjunction
//! trades monoid maps into the endomorphism monoid of a functor for
//! families of representations on the functor's values whose structure
//! maps intertwine the actions; both directions are computed and both
//! certificates are replayed, never assumed. The category of all
//! representations is never materialized: every operation consumes and
//! produces finite families.

use num::Zero;

use crate::ends::{EndoData, EndoMonoid};
use crate::error::{Error, Result};
use crate::linalg::{Rat, RatMatrix};
use crate::vbase::{
    hom, tensor_monoid_action, BaseMap, BaseObject, BaseTag, FinFunction, MonoidObject,
};

/// Action data of a representation: one self-map per monoid element,
/// or the `dim^2 x dim(M)` matrix whose column `j` is the vectorized
/// operator by which basis element `e_j` acts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepAction {
    FinSet { maps: Vec<FinFunction> },
    Vect { alpha: RatMatrix },
}

/// A monoid-object representation: `M` acting on a carrier in the same
/// base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub monoid: MonoidObject,
    pub carrier: BaseObject,
    pub action: RepAction,
}

impl Representation {
    /// The operator of basis element `j` on a vector carrier.
    pub fn operator(&self, j: usize) -> Result<RatMatrix> {
        let RepAction::Vect { alpha } = &self.action else {
            return Err(Error::BaseMismatch("operator extraction is for vectors".into()));
        };
        let d = self.carrier.size();
        RatMatrix::from_vec(d, d, &alpha.col(j))
    }

    pub fn validate(&self) -> Result<RepReport> {
        validate_representation(self)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepViolation {
    Unit,
    /// `alpha(e_i * e_j)` differs from `alpha(e_i) . alpha(e_j)`.
    Mult { i: usize, j: usize },
}

impl std::fmt::Display for RepViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepViolation::Unit => write!(f, "the unit does not act as the identity"),
            RepViolation::Mult { i, j } => {
                write!(f, "action of the product ({i}, {j}) differs from the composite")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepReport {
    pub violations: Vec<RepViolation>,
}

impl RepReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the action data defines a monoid map `M -> [X, X]`:
/// shape problems are hard errors, unit and multiplication failures
/// come back as witnesses.
pub fn validate_representation(r: &Representation) -> Result<RepReport> {
    let mut violations = Vec::new();
    match (&r.monoid, &r.action) {
        (MonoidObject::FinSet { table, unit, .. }, RepAction::FinSet { maps }) => {
            if r.carrier.tag() != BaseTag::FinSet {
                return Err(Error::BaseMismatch("finite monoid needs a finite carrier".into()));
            }
            let n = r.carrier.size();
            let k = r.monoid.size();
            if maps.len() != k || maps.iter().any(|m| m.dom != n || m.cod != n) {
                return Err(Error::shape("one self-map of the carrier per monoid element"));
            }
            if !maps[*unit].is_identity() {
                violations.push(RepViolation::Unit);
            }
            for i in 0..k {
                for j in 0..k {
                    if maps[table[i][j]] != maps[i].compose(&maps[j])? {
                        violations.push(RepViolation::Mult { i, j });
                    }
                }
            }
        }
        (MonoidObject::Algebra { dim, mult, unit }, RepAction::Vect { alpha }) => {
            if r.carrier.tag() != BaseTag::QVect {
                return Err(Error::BaseMismatch("an algebra needs a vector carrier".into()));
            }
            let d = r.carrier.size();
            let k = *dim;
            if alpha.rows() != d * d || alpha.cols() != k {
                return Err(Error::shape("action matrix must be dim^2 x dim(M)"));
            }
            if alpha.mul_vec(unit)? != RatMatrix::identity(d).vectorize() {
                violations.push(RepViolation::Unit);
            }
            for i in 0..k {
                for j in 0..k {
                    let lhs = alpha.mul_vec(&mult.col(i * k + j))?;
                    let rhs = r.operator(i)?.matmul(&r.operator(j)?)?.vectorize();
                    if lhs != rhs {
                        violations.push(RepViolation::Mult { i, j });
                    }
                }
            }
        }
        _ => return Err(Error::BaseMismatch("monoid and action live in different bases".into())),
    }
    Ok(RepReport { violations })
}

/// An equivariant map candidate between two representations of the
/// same monoid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepMorphism {
    pub source: Representation,
    pub target: Representation,
    pub map: BaseMap,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepMorphismViolation {
    /// `f . alpha(e) != beta(e) . f` at this monoid element.
    Square { element: usize },
}

impl std::fmt::Display for RepMorphismViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let RepMorphismViolation::Square { element } = self;
        write!(f, "the intertwining square fails at element {element}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepMorphismReport {
    pub violations: Vec<RepMorphismViolation>,
}

impl RepMorphismReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `f . alpha(e) = beta(e) . f` for every monoid element.
pub fn validate_rep_morphism(rm: &RepMorphism) -> Result<RepMorphismReport> {
    if rm.source.monoid != rm.target.monoid {
        return Err(Error::SourceMismatch(
            "the two representations are over different monoids".into(),
        ));
    }
    let k = rm.source.monoid.size();
    let mut violations = Vec::new();
    match (&rm.source.action, &rm.target.action, &rm.map) {
        (RepAction::FinSet { maps: am }, RepAction::FinSet { maps: bm }, BaseMap::Function(f)) => {
            if f.dom != rm.source.carrier.size() || f.cod != rm.target.carrier.size() {
                return Err(Error::shape("map does not match the carriers"));
            }
            for e in 0..k {
                if f.compose(&am[e])? != bm[e].compose(f)? {
                    violations.push(RepMorphismViolation::Square { element: e });
                }
            }
        }
        (RepAction::Vect { .. }, RepAction::Vect { .. }, BaseMap::Linear(f)) => {
            if f.cols() != rm.source.carrier.size() || f.rows() != rm.target.carrier.size() {
                return Err(Error::shape("map does not match the carriers"));
            }
            for e in 0..k {
                if f.matmul(&rm.source.operator(e)?)? != rm.target.operator(e)?.matmul(f)? {
                    violations.push(RepMorphismViolation::Square { element: e });
                }
            }
        }
        _ => return Err(Error::BaseMismatch("representations and map must share a base".into())),
    }
    Ok(RepMorphismReport { violations })
}

/// A map of monoid objects: element images over finite sets, a linear
/// map on coordinates over vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonoidMap {
    pub source: MonoidObject,
    pub target: MonoidObject,
    pub data: MonoidMapData,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonoidMapData {
    FinSet { images: Vec<usize> },
    Algebra { matrix: RatMatrix },
}

impl MonoidMap {
    pub fn identity(m: &MonoidObject) -> MonoidMap {
        let data = match m {
            MonoidObject::FinSet { elements, .. } => {
                MonoidMapData::FinSet { images: (0..elements.len()).collect() }
            }
            MonoidObject::Algebra { dim, .. } => {
                MonoidMapData::Algebra { matrix: RatMatrix::identity(*dim) }
            }
        };
        MonoidMap { source: m.clone(), target: m.clone(), data }
    }

    pub fn validate(&self) -> Result<MonoidMapReport> {
        validate_monoid_map(self)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonoidMapViolation {
    Unit,
    Mult { i: usize, j: usize },
}

impl std::fmt::Display for MonoidMapViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonoidMapViolation::Unit => write!(f, "the unit is not preserved"),
            MonoidMapViolation::Mult { i, j } => {
                write!(f, "the product ({i}, {j}) is not preserved")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonoidMapReport {
    pub violations: Vec<MonoidMapViolation>,
}

impl MonoidMapReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks unit and multiplication preservation on all element or basis
/// pairs.
pub fn validate_monoid_map(psi: &MonoidMap) -> Result<MonoidMapReport> {
    let mut violations = Vec::new();
    match (&psi.source, &psi.target, &psi.data) {
        (
            MonoidObject::FinSet { table, unit, .. },
            MonoidObject::FinSet { table: tt, unit: tu, .. },
            MonoidMapData::FinSet { images },
        ) => {
            let k = psi.source.size();
            let kt = psi.target.size();
            if images.len() != k || images.iter().any(|&im| im >= kt) {
                return Err(Error::shape("image list does not match the monoids"));
            }
            if images[*unit] != *tu {
                violations.push(MonoidMapViolation::Unit);
            }
            for i in 0..k {
                for j in 0..k {
                    if images[table[i][j]] != tt[images[i]][images[j]] {
                        violations.push(MonoidMapViolation::Mult { i, j });
                    }
                }
            }
        }
        (
            MonoidObject::Algebra { dim, mult, unit },
            MonoidObject::Algebra { .. },
            MonoidMapData::Algebra { matrix },
        ) => {
            let k = *dim;
            let kt = psi.target.size();
            if matrix.rows() != kt || matrix.cols() != k {
                return Err(Error::shape("matrix does not match the algebra dimensions"));
            }
            let MonoidObject::Algebra { unit: tu, .. } = &psi.target else { unreachable!() };
            if &matrix.mul_vec(unit)? != tu {
                violations.push(MonoidMapViolation::Unit);
            }
            for i in 0..k {
                for j in 0..k {
                    let lhs = matrix.mul_vec(&mult.col(i * k + j))?;
                    let rhs = psi
                        .target
                        .algebra_mul(&matrix.col(i), &matrix.col(j))?;
                    if lhs != rhs {
                        violations.push(MonoidMapViolation::Mult { i, j });
                    }
                }
            }
        }
        _ => return Err(Error::BaseMismatch("monoid map endpoints live in different bases".into())),
    }
    Ok(MonoidMapReport { violations })
}

/// A family of representations of one monoid, indexed by the objects
/// of a functor's source category.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepFamily {
    pub monoid: MonoidObject,
    pub representations: Vec<Representation>,
}

/// Pushes a monoid map `psi: M -> E(F)` to the family of
/// representations `(F X, pi_X . psi)`, and certifies functoriality:
/// every structure map of the functor intertwines the actions. A
/// failed certificate is an error, not a silent omission.
pub fn adjunction_forward(psi: &MonoidMap, ef: &EndoMonoid) -> Result<RepFamily> {
    if psi.target != ef.as_monoid_object() {
        return Err(Error::SourceMismatch(
            "the map does not land in the endomorphism monoid".into(),
        ));
    }
    if !validate_monoid_map(psi)?.is_ok() {
        return Err(Error::invalid("not a monoid map"));
    }
    let f = &ef.functor;
    let k = psi.source.size();
    let mut representations = Vec::new();
    for x in 0..f.source().num_objects() {
        let action = match (&ef.data, &psi.data) {
            (EndoData::FinSet { .. }, MonoidMapData::FinSet { images }) => {
                let maps = (0..k)
                    .map(|i| Ok(ef.component(images[i], x)?.clone()))
                    .collect::<Result<Vec<_>>>()?;
                RepAction::FinSet { maps }
            }
            (EndoData::Vect { .. }, MonoidMapData::Algebra { matrix }) => {
                RepAction::Vect { alpha: ef.projection_matrix(x)?.matmul(matrix)? }
            }
            _ => unreachable!("target equality pins the base"),
        };
        let rep = Representation {
            monoid: psi.source.clone(),
            carrier: f.object(x).clone(),
            action,
        };
        if !validate_representation(&rep)?.is_ok() {
            return Err(Error::invalid(format!("projection at object {x} is not a monoid map")));
        }
        representations.push(rep);
    }
    for m in 0..f.source().num_morphisms() {
        let square = RepMorphism {
            source: representations[f.source().dom(m)].clone(),
            target: representations[f.source().cod(m)].clone(),
            map: f.map(m).clone(),
        };
        if !validate_rep_morphism(&square)?.is_ok() {
            return Err(Error::invalid(format!(
                "structure map {} does not intertwine the family",
                f.source().morphism_name(m)
            )));
        }
    }
    Ok(RepFamily { monoid: psi.source.clone(), representations })
}

/// Assembles a functorial family of representations back into the
/// monoid map `M -> E(F)` with `pi_X . psi` recovering each action.
/// The functoriality certificate is replayed first; a family that is
/// not over the source category is rejected.
pub fn adjunction_backward(ef: &EndoMonoid, family: &RepFamily) -> Result<MonoidMap> {
    let f = &ef.functor;
    let n_obj = f.source().num_objects();
    if family.representations.len() != n_obj {
        return Err(Error::shape("one representation per source object required"));
    }
    for (x, rep) in family.representations.iter().enumerate() {
        if rep.monoid != family.monoid {
            return Err(Error::invalid("family members disagree on the monoid"));
        }
        if rep.carrier != *f.object(x) {
            return Err(Error::shape(format!("carrier at object {x} is not the functor value")));
        }
        if !validate_representation(rep)?.is_ok() {
            return Err(Error::invalid(format!("family member {x} is not a representation")));
        }
    }
    for m in 0..f.source().num_morphisms() {
        let square = RepMorphism {
            source: family.representations[f.source().dom(m)].clone(),
            target: family.representations[f.source().cod(m)].clone(),
            map: f.map(m).clone(),
        };
        if !validate_rep_morphism(&square)?.is_ok() {
            return Err(Error::invalid(format!(
                "structure map {} is not equivariant; the family is not over the source",
                f.source().morphism_name(m)
            )));
        }
    }
    let k = family.monoid.size();
    let data = match &ef.data {
        EndoData::FinSet { elements, .. } => {
            let homs = (0..n_obj)
                .map(|x| hom(f.object(x), f.object(x)))
                .collect::<Result<Vec<_>>>()?;
            let encode = |fam: &[&FinFunction]| -> Result<Vec<u128>> {
                fam.iter().zip(&homs).map(|(c, h)| h.encode(c)).collect()
            };
            let mut index = std::collections::BTreeMap::new();
            for (i, fam) in elements.iter().enumerate() {
                index.insert(encode(&fam.iter().collect::<Vec<_>>())?, i);
            }
            let mut images = Vec::with_capacity(k);
            for i in 0..k {
                let components: Vec<&FinFunction> = family
                    .representations
                    .iter()
                    .map(|rep| {
                        let RepAction::FinSet { maps } = &rep.action else { unreachable!() };
                        &maps[i]
                    })
                    .collect();
                images.push(*index.get(&encode(&components)?).ok_or_else(|| {
                    Error::Closure(format!("the family of element {i} is not natural"))
                })?);
            }
            MonoidMapData::FinSet { images }
        }
        EndoData::Vect { blocks, carrier, .. } => {
            let total: usize = blocks.iter().map(|b| b.len()).sum();
            let mut matrix = RatMatrix::zeros(carrier.dim(), k);
            for i in 0..k {
                let mut stacked = vec![Rat::zero(); total];
                for (block, rep) in blocks.iter().zip(&family.representations) {
                    let RepAction::Vect { alpha } = &rep.action else { unreachable!() };
                    for (t, v) in alpha.col(i).into_iter().enumerate() {
                        stacked[block.offset + t] = v;
                    }
                }
                let coords = carrier.coords(&stacked).ok_or_else(|| {
                    Error::Closure(format!("the family of basis element {i} is not natural"))
                })?;
                for (r, v) in coords.into_iter().enumerate() {
                    matrix.set(r, i, v);
                }
            }
            MonoidMapData::Algebra { matrix }
        }
    };
    let psi = MonoidMap {
        source: family.monoid.clone(),
        target: ef.as_monoid_object(),
        data,
    };
    if !validate_monoid_map(&psi)?.is_ok() {
        return Err(Error::Closure("the assembled map is not a monoid map".into()));
    }
    Ok(psi)
}

/// Transposes a vector representation to its action map
/// `M (x) X -> X`: the `dim(X) x (dim(M) * dim(X))` matrix whose block
/// `j` is the operator of basis element `e_j`.
pub fn to_module_action(r: &Representation) -> Result<RatMatrix> {
    let RepAction::Vect { .. } = &r.action else {
        return Err(Error::Unsupported("module actions live over the vector base".into()));
    };
    let d = r.carrier.size();
    let k = r.monoid.size();
    let mut action = RatMatrix::zeros(d, k * d);
    for j in 0..k {
        let op = r.operator(j)?;
        for rr in 0..d {
            for cc in 0..d {
                action.set(rr, j * d + cc, op.at(rr, cc).clone());
            }
        }
    }
    Ok(action)
}

/// Rebuilds the representation from an action map `M (x) X -> X`,
/// checking the module axioms on the action side first: the unit acts
/// as the identity and acting twice equals acting by the product.
pub fn from_module_action(
    m: &MonoidObject,
    x_dim: usize,
    action: &RatMatrix,
) -> Result<Representation> {
    let MonoidObject::Algebra { dim, mult, unit } = m else {
        return Err(Error::Unsupported("module actions live over the vector base".into()));
    };
    let k = *dim;
    let d = x_dim;
    if action.rows() != d || action.cols() != k * d {
        return Err(Error::shape("action matrix must be dim(X) x (dim(M) * dim(X))"));
    }
    let unit_col = RatMatrix::from_vec(k, 1, unit)?;
    if action.matmul(&unit_col.kron(&RatMatrix::identity(d)))? != RatMatrix::identity(d) {
        return Err(Error::invalid("the unit does not act as the identity"));
    }
    let lhs = action.matmul(&mult.kron(&RatMatrix::identity(d)))?;
    let rhs = action.matmul(&RatMatrix::identity(k).kron(action))?;
    if lhs != rhs {
        return Err(Error::invalid("acting twice differs from acting by the product"));
    }
    let mut alpha = RatMatrix::zeros(d * d, k);
    for j in 0..k {
        for rr in 0..d {
            for cc in 0..d {
                alpha.set(rr * d + cc, j, action.at(rr, j * d + cc).clone());
            }
        }
    }
    Ok(Representation {
        monoid: m.clone(),
        carrier: BaseObject::vect(d),
        action: RepAction::Vect { alpha },
    })
}

/// The left regular representation of an algebra on itself, built as
/// the free representation on the one-dimensional space.
pub fn regular_representation(m: &MonoidObject) -> Result<Representation> {
    let free = tensor_monoid_action(m, &BaseObject::vect(1))?;
    Ok(Representation {
        monoid: m.clone(),
        carrier: BaseObject::vect(free.carrier_dim),
        action: RepAction::Vect { alpha: free.alpha },
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaithfulnessReport {
    pub dim: usize,
    pub rank: usize,
}

impl FaithfulnessReport {
    pub fn passed(&self) -> bool {
        self.rank == self.dim
    }
}

/// Ranks the map `M -> [M, M]` induced by the regular representation.
/// Full rank certifies that the unit of the adjunction is injective on
/// this algebra; anything less signals an engine bug, since left
/// multiplication by a unital algebra is always faithful.
pub fn faithfulness_probe(m: &MonoidObject) -> Result<FaithfulnessReport> {
    if matches!(m, MonoidObject::FinSet { .. }) {
        return Err(Error::Unsupported("the probe works on algebras".into()));
    }
    if let Err(v) = m.validate() {
        return Err(Error::invalid(format!("not a unital associative algebra: {v}")));
    }
    let reg = regular_representation(m)?;
    let RepAction::Vect { alpha } = &reg.action else { unreachable!() };
    Ok(FaithfulnessReport { dim: m.size(), rank: alpha.rank() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ends::endomorphism_monoid;
    use crate::fincat::FinCategory;
    use crate::linalg::rat_int;
    use crate::vbase::BaseFunctor;
    use crate::DEFAULT_GUARD;

    fn finset_rep(m: MonoidObject, size: usize, tables: Vec<Vec<usize>>) -> Representation {
        let maps = tables
            .into_iter()
            .map(|t| FinFunction::new(size, size, t).unwrap())
            .collect();
        Representation {
            monoid: m,
            carrier: BaseObject::finset_of_size(size),
            action: RepAction::FinSet { maps },
        }
    }

    fn two_point_functor() -> BaseFunctor {
        let c = FinCategory::terminal();
        let obj = BaseObject::finset(&["1", "2"]);
        BaseFunctor::new(
            c,
            BaseTag::FinSet,
            vec![obj.clone()],
            vec![BaseMap::identity_of(&obj)],
        )
        .unwrap()
    }

    #[test]
    fn trivial_representation_validates() {
        let r = finset_rep(MonoidObject::trivial_finset(), 2, vec![vec![0, 1]]);
        assert!(validate_representation(&r).unwrap().is_ok());
    }

    #[test]
    fn dual_numbers_regular_representation_validates() {
        let m = MonoidObject::dual_numbers();
        let reg = regular_representation(&m).unwrap();
        assert!(validate_representation(&reg).unwrap().is_ok());
        // t acts by sending 1 to t and t to 0; squaring gives zero.
        let lt = reg.operator(1).unwrap();
        let expected = RatMatrix::from_vec(2, 2, &[0, 0, 1, 0].map(rat_int)).unwrap();
        assert_eq!(lt, expected);
        assert!(lt.matmul(&lt).unwrap().is_zero());
    }

    #[test]
    fn non_idempotent_action_is_witnessed() {
        // z is idempotent but the swap is not, so (z, z) must fail.
        let r = finset_rep(MonoidObject::idempotent_pair(), 2, vec![vec![0, 1], vec![1, 0]]);
        let report = validate_representation(&r).unwrap();
        assert!(report.violations.contains(&RepViolation::Mult { i: 1, j: 1 }));
    }

    #[test]
    fn identity_and_zero_are_rep_morphisms() {
        let m = MonoidObject::dual_numbers();
        let reg = regular_representation(&m).unwrap();
        let id = RepMorphism {
            source: reg.clone(),
            target: reg.clone(),
            map: BaseMap::Linear(RatMatrix::identity(2)),
        };
        assert!(validate_rep_morphism(&id).unwrap().is_ok());
        let zero = RepMorphism {
            source: reg.clone(),
            target: reg,
            map: BaseMap::Linear(RatMatrix::zeros(2, 2)),
        };
        assert!(validate_rep_morphism(&zero).unwrap().is_ok());
    }

    #[test]
    fn constant_action_morphisms_evaluated_honestly() {
        // Two constant actions with different constants: conjugating by
        // the swap carries one constant to the other, so the swap
        // intertwines them and it is the identity that fails at z.
        let m = MonoidObject::idempotent_pair();
        let const0 = finset_rep(m.clone(), 2, vec![vec![0, 1], vec![0, 0]]);
        let const1 = finset_rep(m.clone(), 2, vec![vec![0, 1], vec![1, 1]]);
        let swap = FinFunction::new(2, 2, vec![1, 0]).unwrap();
        let swapped = RepMorphism {
            source: const0.clone(),
            target: const1.clone(),
            map: BaseMap::Function(swap),
        };
        assert!(validate_rep_morphism(&swapped).unwrap().is_ok());
        let id = RepMorphism {
            source: const0,
            target: const1,
            map: BaseMap::Function(FinFunction::identity(2)),
        };
        let report = validate_rep_morphism(&id).unwrap();
        assert_eq!(report.violations, vec![RepMorphismViolation::Square { element: 1 }]);
    }

    #[test]
    fn monoid_map_validation_finds_witnesses() {
        let t2 = MonoidObject::full_transformations(2);
        let m = MonoidObject::idempotent_pair();
        // z to the swap: the swap squares to the identity, not itself.
        let bad = MonoidMap {
            source: m.clone(),
            target: t2.clone(),
            data: MonoidMapData::FinSet { images: vec![1, 2] },
        };
        let report = validate_monoid_map(&bad).unwrap();
        assert!(report.violations.contains(&MonoidMapViolation::Mult { i: 1, j: 1 }));
        // z to a constant: fine.
        let good = MonoidMap {
            source: m,
            target: t2,
            data: MonoidMapData::FinSet { images: vec![1, 0] },
        };
        assert!(validate_monoid_map(&good).unwrap().is_ok());
    }

    #[test]
    fn counit_of_two_point_functor_is_tautological() {
        let f = two_point_functor();
        let ef = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let psi = MonoidMap::identity(&ef.as_monoid_object());
        let family = adjunction_forward(&psi, &ef).unwrap();
        assert_eq!(family.representations.len(), 1);
        let rep = &family.representations[0];
        assert!(validate_representation(rep).unwrap().is_ok());
        // The counit representation acts tautologically: element i acts
        // by the i-th self-map in the carrier enumeration.
        let RepAction::FinSet { maps } = &rep.action else { panic!() };
        let h = hom(&rep.carrier, &rep.carrier).unwrap();
        for (i, map) in maps.iter().enumerate() {
            assert_eq!(h.encode(map).unwrap(), i as u128);
        }
    }

    #[test]
    fn idempotent_pair_adjunction_is_a_three_way_bijection() {
        // Monoid maps from {e, z | z^2 = z} into T_2 pick an idempotent
        // image for z: both constants and the identity, three maps.
        // Forward then backward is the identity on each.
        let f = two_point_functor();
        let ef = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let t2 = ef.as_monoid_object();
        let m = MonoidObject::idempotent_pair();
        let MonoidObject::FinSet { table, unit, .. } = &t2 else { panic!() };
        let mut found = Vec::new();
        for z_img in 0..4 {
            if table[z_img][z_img] == z_img {
                found.push(MonoidMap {
                    source: m.clone(),
                    target: t2.clone(),
                    data: MonoidMapData::FinSet { images: vec![*unit, z_img] },
                });
            }
        }
        assert_eq!(found.len(), 3);
        for psi in &found {
            assert!(validate_monoid_map(psi).unwrap().is_ok());
            let family = adjunction_forward(psi, &ef).unwrap();
            let back = adjunction_backward(&ef, &family).unwrap();
            assert_eq!(&back, psi);
        }
        // The constant-to-first-point map is the idempotent-action
        // representation.
        let psi = &found[0];
        let MonoidMapData::FinSet { images } = &psi.data else { panic!() };
        assert_eq!(images, &vec![1, 0]);
        let family = adjunction_forward(psi, &ef).unwrap();
        let RepAction::FinSet { maps } = &family.representations[0].action else { panic!() };
        assert_eq!(maps[1].table, vec![0, 0]);
    }

    #[test]
    fn trivial_monoid_has_unique_map() {
        let f = two_point_functor();
        let ef = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let m = MonoidObject::trivial_finset();
        let psi = MonoidMap {
            source: m.clone(),
            target: ef.as_monoid_object(),
            data: MonoidMapData::FinSet { images: vec![1] },
        };
        let family = adjunction_forward(&psi, &ef).unwrap();
        let RepAction::FinSet { maps } = &family.representations[0].action else { panic!() };
        assert!(maps[0].is_identity());
        assert_eq!(adjunction_backward(&ef, &family).unwrap(), psi);
    }

    #[test]
    fn empty_domain_assembles_into_the_terminal_monoid() {
        let c = FinCategory::empty();
        let f = BaseFunctor::new(c, BaseTag::FinSet, vec![], vec![]).unwrap();
        let ef = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        assert_eq!(ef.size(), 1);
        let family = RepFamily {
            monoid: MonoidObject::idempotent_pair(),
            representations: vec![],
        };
        let psi = adjunction_backward(&ef, &family).unwrap();
        let MonoidMapData::FinSet { images } = &psi.data else { panic!() };
        assert_eq!(images, &vec![0, 0]);
        assert!(validate_monoid_map(&psi).unwrap().is_ok());
    }

    #[test]
    fn backward_rejects_non_functorial_families() {
        // F(u) the identity on two points, but the family swaps action
        // only at the target: the square at u fails.
        let c = FinCategory::walking_arrow();
        let obj = BaseObject::finset(&["1", "2"]);
        let mut morphisms = Vec::new();
        for m in 0..c.num_morphisms() {
            let _ = m;
            morphisms.push(BaseMap::identity_of(&obj));
        }
        let f = BaseFunctor::new(c, BaseTag::FinSet, vec![obj.clone(), obj], morphisms).unwrap();
        let ef = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let m = MonoidObject::idempotent_pair();
        let family = RepFamily {
            monoid: m.clone(),
            representations: vec![
                finset_rep(m.clone(), 2, vec![vec![0, 1], vec![0, 0]]),
                finset_rep(m, 2, vec![vec![0, 1], vec![1, 1]]),
            ],
        };
        assert!(matches!(adjunction_backward(&ef, &family), Err(Error::Invalid(_))));
    }

    #[test]
    fn vector_adjunction_round_trips() {
        // Walking arrow with a strictly upper triangular structure map;
        // psi embeds the dual numbers into E(F).
        let c = FinCategory::walking_arrow();
        let fu = RatMatrix::from_vec(2, 2, &[1, 0, 0, 0].map(rat_int)).unwrap();
        let v2 = BaseObject::vect(2);
        let mut morphisms = Vec::new();
        for m in 0..c.num_morphisms() {
            if c.is_identity(m) {
                morphisms.push(BaseMap::identity_of(&v2));
            } else {
                morphisms.push(BaseMap::Linear(fu.clone()));
            }
        }
        let f = BaseFunctor::new(c, BaseTag::QVect, vec![v2.clone(), v2], morphisms).unwrap();
        let ef = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let psi = MonoidMap::identity(&ef.as_monoid_object());
        let family = adjunction_forward(&psi, &ef).unwrap();
        for rep in &family.representations {
            assert!(validate_representation(rep).unwrap().is_ok());
        }
        let back = adjunction_backward(&ef, &family).unwrap();
        assert_eq!(back, psi);
    }

    #[test]
    fn naturality_in_the_monoid_argument() {
        // Precomposing psi with mu matches restricting the family along
        // mu at every object.
        let f = two_point_functor();
        let ef = endomorphism_monoid(&f, DEFAULT_GUARD).unwrap();
        let t2 = ef.as_monoid_object();
        let psi = MonoidMap::identity(&t2);
        let m = MonoidObject::idempotent_pair();
        let mu = MonoidMap {
            source: m.clone(),
            target: t2.clone(),
            data: MonoidMapData::FinSet { images: vec![1, 0] },
        };
        assert!(validate_monoid_map(&mu).unwrap().is_ok());
        let MonoidMapData::FinSet { images: mu_images } = &mu.data else { panic!() };
        let MonoidMapData::FinSet { images: psi_images } = &psi.data else { panic!() };
        let composed = MonoidMap {
            source: m,
            target: t2,
            data: MonoidMapData::FinSet {
                images: mu_images.iter().map(|&i| psi_images[i]).collect(),
            },
        };
        let direct = adjunction_forward(&composed, &ef).unwrap();
        let big = adjunction_forward(&psi, &ef).unwrap();
        for (dr, br) in direct.representations.iter().zip(&big.representations) {
            let RepAction::FinSet { maps: dm } = &dr.action else { panic!() };
            let RepAction::FinSet { maps: bm } = &br.action else { panic!() };
            let restricted: Vec<FinFunction> =
                mu_images.iter().map(|&i| bm[i].clone()).collect();
            assert_eq!(dm, &restricted);
        }
    }

    #[test]
    fn module_action_of_regular_representation_is_multiplication() {
        // For the regular representation the action map M (x) M -> M
        // is literally the structure-constant matrix: two independent
        // computations of the same transpose.
        for m in [
            MonoidObject::rationals(),
            MonoidObject::dual_numbers(),
            MonoidObject::split_pair(),
            MonoidObject::group_algebra_c2(),
            MonoidObject::matrix_algebra_2(),
        ] {
            let reg = regular_representation(&m).unwrap();
            let action = to_module_action(&reg).unwrap();
            let MonoidObject::Algebra { mult, .. } = &m else { panic!() };
            assert_eq!(&action, mult);
            let back = from_module_action(&m, m.size(), &action).unwrap();
            assert_eq!(back, reg);
        }
    }

    #[test]
    fn scalar_action_round_trips() {
        let m = MonoidObject::rationals();
        let r = Representation {
            monoid: m.clone(),
            carrier: BaseObject::vect(2),
            action: RepAction::Vect {
                alpha: RatMatrix::from_vec(4, 1, &[1, 0, 0, 1].map(rat_int)).unwrap(),
            },
        };
        assert!(validate_representation(&r).unwrap().is_ok());
        let action = to_module_action(&r).unwrap();
        assert_eq!(action, RatMatrix::identity(2));
        assert_eq!(from_module_action(&m, 2, &action).unwrap(), r);
    }

    #[test]
    fn zero_dimensional_carrier_has_unique_action() {
        let m = MonoidObject::dual_numbers();
        let r = Representation {
            monoid: m.clone(),
            carrier: BaseObject::vect(0),
            action: RepAction::Vect { alpha: RatMatrix::zeros(0, 2) },
        };
        assert!(validate_representation(&r).unwrap().is_ok());
        let action = to_module_action(&r).unwrap();
        assert_eq!(action.rows(), 0);
        assert_eq!(from_module_action(&m, 0, &action).unwrap(), r);
    }

    #[test]
    fn action_side_violations_match_alpha_side() {
        // t acting as the identity contradicts t^2 = 0 on both sides of
        // the transpose.
        let m = MonoidObject::dual_numbers();
        let mut alpha = RatMatrix::zeros(4, 2);
        for (pos, v) in RatMatrix::identity(2).vectorize().into_iter().enumerate() {
            alpha.set(pos, 0, v.clone());
            alpha.set(pos, 1, v);
        }
        let r = Representation {
            monoid: m.clone(),
            carrier: BaseObject::vect(2),
            action: RepAction::Vect { alpha },
        };
        let report = validate_representation(&r).unwrap();
        assert!(report.violations.contains(&RepViolation::Mult { i: 1, j: 1 }));
        let action = to_module_action(&r).unwrap();
        assert!(matches!(from_module_action(&m, 2, &action), Err(Error::Invalid(_))));
    }

    #[test]
    fn faithfulness_corpus_passes() {
        for (m, dim) in [
            (MonoidObject::rationals(), 1),
            (MonoidObject::split_pair(), 2),
            (MonoidObject::dual_numbers(), 2),
            (MonoidObject::matrix_algebra_2(), 4),
            (MonoidObject::group_algebra_c2(), 2),
        ] {
            let report = faithfulness_probe(&m).unwrap();
            assert_eq!(report.dim, dim);
            assert_eq!(report.rank, dim);
            assert!(report.passed());
        }
    }

    #[test]
    fn faithfulness_probe_rejects_bad_input() {
        assert!(matches!(
            faithfulness_probe(&MonoidObject::trivial_finset()),
            Err(Error::Unsupported(_))
        ));
        let broken = MonoidObject::Algebra {
            dim: 1,
            mult: RatMatrix::from_vec(1, 1, &[1].map(rat_int)).unwrap(),
            unit: vec![rat_int(0)],
        };
        assert!(matches!(faithfulness_probe(&broken), Err(Error::Invalid(_))));
    }
}
