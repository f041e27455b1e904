//! Truncated operads: a symmetric sequence with a unit and partial
//! composition matrices, plus validators that replay every axiom
//! instance admissible under the cap.

use std::collections::BTreeMap;

use super::{block_compose, SymComponent, SymSequence, SymViolation};
use crate::error::{Error, Result};
use crate::linalg::{perm_action_matrix, rat_int, Permutation, Rat, RatMatrix};
use crate::vbase::{postcompose_operator, precompose_operator};

/// An operad truncated at an arity cap: the underlying symmetric
/// sequence, the unit vector in arity 1, and one composition matrix per
/// key `(m, n, i)` with `i` 1-based, mapping coordinates of
/// `P(m) (x) P(n)` (first factor major) to coordinates of `P(m+n-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedOperad {
    pub seq: SymSequence,
    pub unit: Vec<Rat>,
    comps: BTreeMap<(usize, usize, usize), RatMatrix>,
}

/// The composition keys an operad truncated at `cap` must carry.
pub(crate) fn required_keys(cap: usize) -> Vec<(usize, usize, usize)> {
    let mut keys = Vec::new();
    for m in 1..=cap {
        for n in 0..=cap {
            if m + n == 0 || m + n - 1 > cap {
                continue;
            }
            for i in 1..=m {
                keys.push((m, n, i));
            }
        }
    }
    keys
}

impl TruncatedOperad {
    /// Assemble without checking the axioms; `validate` reports what,
    /// if anything, is wrong.
    pub fn new(
        seq: SymSequence,
        unit: Vec<Rat>,
        comps: BTreeMap<(usize, usize, usize), RatMatrix>,
    ) -> Result<Self> {
        if seq.cap() < 1 {
            return Err(Error::invalid("an operad needs arity 1 for its unit, so cap >= 1"));
        }
        Ok(TruncatedOperad { seq, unit, comps })
    }

    pub fn cap(&self) -> usize {
        self.seq.cap()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.seq.dims()
    }

    pub fn comp(&self, m: usize, n: usize, i: usize) -> Result<&RatMatrix> {
        self.comps
            .get(&(m, n, i))
            .ok_or_else(|| Error::shape(format!("no composition matrix for ({m}, {n}, {i})")))
    }

    pub fn comp_keys(&self) -> impl Iterator<Item = &(usize, usize, usize)> {
        self.comps.keys()
    }

    /// Coordinates of `x o_i y` for `x` in arity `m`, `y` in arity `n`.
    pub fn compose_elements(
        &self,
        m: usize,
        n: usize,
        i: usize,
        x: &[Rat],
        y: &[Rat],
    ) -> Result<Vec<Rat>> {
        if x.len() != self.seq.dim(m) || y.len() != self.seq.dim(n) {
            return Err(Error::shape("element coordinate lengths do not match arities"));
        }
        let mut pair = Vec::with_capacity(x.len() * y.len());
        for a in x {
            for b in y {
                pair.push(a * b);
            }
        }
        self.comp(m, n, i)?.mul_vec(&pair)
    }

    pub fn validate(&self) -> OperadReport {
        validate_operad(self)
    }
}

/// One failed axiom instance. Slots are 1-based, generators 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OperadViolation {
    SymmetricSequence(SymViolation),
    UnitShape,
    MissingComposition { m: usize, n: usize, i: usize },
    SpuriousComposition { m: usize, n: usize, i: usize },
    CompositionShape { m: usize, n: usize, i: usize },
    LeftUnit { n: usize },
    RightUnit { m: usize, i: usize },
    Equivariance { m: usize, n: usize, i: usize, outer: bool, generator: usize },
    SequentialAssociativity { m: usize, n: usize, p: usize, i: usize, j: usize },
    ParallelAssociativity { m: usize, n: usize, p: usize, i: usize, k: usize },
}

impl std::fmt::Display for OperadViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperadViolation::SymmetricSequence(v) => write!(f, "symmetric sequence: {v}"),
            OperadViolation::UnitShape => write!(f, "unit vector does not live in arity 1"),
            OperadViolation::MissingComposition { m, n, i } => {
                write!(f, "missing composition matrix ({m}, {n}, {i})")
            }
            OperadViolation::SpuriousComposition { m, n, i } => {
                write!(f, "composition key ({m}, {n}, {i}) is outside the cap")
            }
            OperadViolation::CompositionShape { m, n, i } => {
                write!(f, "composition matrix ({m}, {n}, {i}) has wrong shape")
            }
            OperadViolation::LeftUnit { n } => {
                write!(f, "left unit law fails on arity {n}")
            }
            OperadViolation::RightUnit { m, i } => {
                write!(f, "right unit law fails on arity {m} slot {i}")
            }
            OperadViolation::Equivariance { m, n, i, outer, generator } => write!(
                f,
                "equivariance fails for ({m}, {n}, {i}) under {} generator {generator}",
                if *outer { "outer" } else { "inner" }
            ),
            OperadViolation::SequentialAssociativity { m, n, p, i, j } => write!(
                f,
                "sequential associativity fails for arities ({m}, {n}, {p}) slots ({i}, {j})"
            ),
            OperadViolation::ParallelAssociativity { m, n, p, i, k } => write!(
                f,
                "parallel associativity fails for arities ({m}, {n}, {p}) slots ({i}, {k})"
            ),
        }
    }
}

/// The outcome of replaying the operad axioms: every violated instance,
/// in a deterministic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperadReport {
    pub violations: Vec<OperadViolation>,
}

impl OperadReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The permutation matrix reordering `x (x) y (x) z` to `x (x) z (x) y`
/// for factor dimensions `(a, b, c)`.
fn swap_last_two_factors(a: usize, b: usize, c: usize) -> RatMatrix {
    let total = a * b * c;
    let mut m = RatMatrix::zeros(total, total);
    for alpha in 0..a {
        for beta in 0..b {
            for gamma in 0..c {
                m.set(
                    (alpha * c + gamma) * b + beta,
                    (alpha * b + beta) * c + gamma,
                    rat_int(1),
                );
            }
        }
    }
    m
}

/// Replay every axiom instance under the cap. Shape problems abort the
/// law checks, which could not be stated; otherwise the report lists
/// all failing instances.
pub fn validate_operad(p: &TruncatedOperad) -> OperadReport {
    let mut violations: Vec<OperadViolation> = p
        .seq
        .validate()
        .into_iter()
        .map(OperadViolation::SymmetricSequence)
        .collect();
    if !violations.is_empty() {
        return OperadReport { violations };
    }
    let cap = p.seq.cap();
    if p.unit.len() != p.seq.dim(1) {
        violations.push(OperadViolation::UnitShape);
        return OperadReport { violations };
    }
    let required = required_keys(cap);
    for &(m, n, i) in &required {
        match p.comps.get(&(m, n, i)) {
            None => violations.push(OperadViolation::MissingComposition { m, n, i }),
            Some(c) => {
                if c.rows() != p.seq.dim(m + n - 1) || c.cols() != p.seq.dim(m) * p.seq.dim(n) {
                    violations.push(OperadViolation::CompositionShape { m, n, i });
                }
            }
        }
    }
    for key in p.comps.keys() {
        if !required.contains(key) {
            let (m, n, i) = *key;
            violations.push(OperadViolation::SpuriousComposition { m, n, i });
        }
    }
    if !violations.is_empty() {
        return OperadReport { violations };
    }

    let unit_col = RatMatrix::from_vec(p.seq.dim(1), 1, &p.unit).expect("unit length checked");

    for n in 0..=cap {
        let id_n = RatMatrix::identity(p.seq.dim(n));
        let lhs = p.comps[&(1, n, 1)].matmul(&unit_col.kron(&id_n)).unwrap();
        if lhs != id_n {
            violations.push(OperadViolation::LeftUnit { n });
        }
    }
    for m in 1..=cap {
        let id_m = RatMatrix::identity(p.seq.dim(m));
        for i in 1..=m {
            let lhs = p.comps[&(m, 1, i)].matmul(&id_m.kron(&unit_col)).unwrap();
            if lhs != id_m {
                violations.push(OperadViolation::RightUnit { m, i });
            }
        }
    }

    for &(m, n, i) in &required {
        let comp = &p.comps[&(m, n, i)];
        let id_m = RatMatrix::identity(p.seq.dim(m));
        let id_n = RatMatrix::identity(p.seq.dim(n));
        for k in 0..m.saturating_sub(1) {
            let sk = Permutation::adjacent_transposition(m, k);
            let pi = block_compose(&sk, i, &Permutation::identity(n));
            let moved = sk.apply(i - 1) + 1;
            let g = &p.seq.component(m).generators[k];
            let lhs = comp.matmul(&g.kron(&id_n)).unwrap();
            let rhs = p
                .seq
                .action(m + n - 1, &pi)
                .unwrap()
                .matmul(&p.comps[&(m, n, moved)])
                .unwrap();
            if lhs != rhs {
                violations.push(OperadViolation::Equivariance { m, n, i, outer: true, generator: k });
            }
        }
        for l in 0..n.saturating_sub(1) {
            let sl = Permutation::adjacent_transposition(n, l);
            let pi = block_compose(&Permutation::identity(m), i, &sl);
            let g = &p.seq.component(n).generators[l];
            let lhs = comp.matmul(&id_m.kron(g)).unwrap();
            let rhs = p.seq.action(m + n - 1, &pi).unwrap().matmul(comp).unwrap();
            if lhs != rhs {
                violations.push(OperadViolation::Equivariance { m, n, i, outer: false, generator: l });
            }
        }
    }

    for m in 1..=cap {
        for n in 1..=cap {
            for q in 0..=cap {
                if m + n - 1 > cap || n + q - 1 > cap || m + n + q - 2 > cap {
                    continue;
                }
                let id_p = RatMatrix::identity(p.seq.dim(q));
                let id_m = RatMatrix::identity(p.seq.dim(m));
                for i in 1..=m {
                    for j in 1..=n {
                        let lhs = p.comps[&(m + n - 1, q, i + j - 1)]
                            .matmul(&p.comps[&(m, n, i)].kron(&id_p))
                            .unwrap();
                        let rhs = p.comps[&(m, n + q - 1, i)]
                            .matmul(&id_m.kron(&p.comps[&(n, q, j)]))
                            .unwrap();
                        if lhs != rhs {
                            violations.push(OperadViolation::SequentialAssociativity {
                                m,
                                n,
                                p: q,
                                i,
                                j,
                            });
                        }
                    }
                }
            }
        }
    }

    for m in 2..=cap {
        for n in 0..=cap {
            for q in 0..=cap {
                if m + n - 1 > cap || m + q - 1 > cap || m + n + q - 2 > cap {
                    continue;
                }
                let id_n = RatMatrix::identity(p.seq.dim(n));
                let id_p = RatMatrix::identity(p.seq.dim(q));
                let swap = swap_last_two_factors(p.seq.dim(m), p.seq.dim(n), p.seq.dim(q));
                for i in 1..=m {
                    for k in i + 1..=m {
                        let lhs = p.comps[&(m + n - 1, q, k + n - 1)]
                            .matmul(&p.comps[&(m, n, i)].kron(&id_p))
                            .unwrap();
                        let rhs = p.comps[&(m + q - 1, n, i)]
                            .matmul(&p.comps[&(m, q, k)].kron(&id_n))
                            .unwrap()
                            .matmul(&swap)
                            .unwrap();
                        if lhs != rhs {
                            violations.push(OperadViolation::ParallelAssociativity {
                                m,
                                n,
                                p: q,
                                i,
                                k,
                            });
                        }
                    }
                }
            }
        }
    }

    OperadReport { violations }
}

/// The endomorphism operad of `Q^d` truncated at `cap`: arity `n` is
/// the full vectorized hom `[d^n, d]`, the symmetric groups act by
/// precomposition with the inverse digit permutation, and `o_i` plugs
/// the second map into the `i`-th tensor slot of the first.
pub fn end_operad_of_object(d: usize, cap: usize) -> Result<TruncatedOperad> {
    if cap < 1 {
        return Err(Error::invalid("arity cap must be at least 1"));
    }
    d.checked_pow(cap as u32 + 3)
        .ok_or_else(|| Error::invalid("object dimension overflows at this cap"))?;
    let mut components = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let dim = d.pow(n as u32) * d;
        let generators = (0..n.saturating_sub(1))
            .map(|k| {
                let sk = perm_action_matrix(&Permutation::adjacent_transposition(n, k), d)?;
                Ok(precompose_operator(&sk, d))
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(SymComponent { dim, generators });
    }
    let seq = SymSequence::new(cap, components)?;
    let unit = RatMatrix::identity(d).vectorize();

    let mut comps = BTreeMap::new();
    for (m, n, i) in required_keys(cap) {
        comps.insert((m, n, i), end_comp_matrix(d, m, n, i));
    }
    TruncatedOperad::new(seq, unit, comps)
}

/// The matrix of `o_i` on vectorized homs out of tensor powers of
/// `Q^d`: `[d^m, d] (x) [d^n, d] -> [d^(m+n-1), d]` plugging the second
/// map into tensor slot `i` (1-based) of the first.
pub(crate) fn end_comp_matrix(d: usize, m: usize, n: usize, i: usize) -> RatMatrix {
    let dm = d.pow(m as u32);
    let dn = d.pow(n as u32);
    let dout = d.pow((m + n - 1) as u32);
    let right = d.pow((m - i) as u32);
    let mut cmat = RatMatrix::zeros(d * dout, (d * dm) * (d * dn));
    for a in 0..d * dm {
        let r = a / dm;
        let c = a % dm;
        // The domain digit string of the first map splits around
        // slot i as (alpha, u, beta).
        let alpha = c / (d * right);
        let rem = c % (d * right);
        let u = rem / right;
        let beta = rem % right;
        for b in 0..d * dn {
            let rb = b / dn;
            let cb = b % dn;
            if u == rb {
                let row = r * dout + (alpha * dn + cb) * right + beta;
                cmat.set(row, a * (d * dn) + b, rat_int(1));
            }
        }
    }
    cmat
}

/// The coendomorphism operad of `Q^d`: arity `n` is the vectorized hom
/// `[d, d^n]`, symmetric groups act by postcomposition, and `o_i`
/// expands the `i`-th output slot of the first map by the second.
pub fn coend_operad_of_object(d: usize, cap: usize) -> Result<TruncatedOperad> {
    if cap < 1 {
        return Err(Error::invalid("arity cap must be at least 1"));
    }
    d.checked_pow(cap as u32 + 3)
        .ok_or_else(|| Error::invalid("object dimension overflows at this cap"))?;
    let mut components = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let dim = d.pow(n as u32) * d;
        let generators = (0..n.saturating_sub(1))
            .map(|k| {
                let sk = perm_action_matrix(&Permutation::adjacent_transposition(n, k), d)?;
                Ok(postcompose_operator(&sk, d))
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(SymComponent { dim, generators });
    }
    let seq = SymSequence::new(cap, components)?;
    let unit = RatMatrix::identity(d).vectorize();

    let mut comps = BTreeMap::new();
    for (m, n, i) in required_keys(cap) {
        comps.insert((m, n, i), coend_comp_matrix(d, m, n, i));
    }
    TruncatedOperad::new(seq, unit, comps)
}

/// The matrix of `o_i` on vectorized homs into tensor powers of `Q^d`:
/// `[d, d^m] (x) [d, d^n] -> [d, d^(m+n-1)]` expanding output slot `i`
/// (1-based) of the first map by the second.
pub(crate) fn coend_comp_matrix(d: usize, m: usize, n: usize, i: usize) -> RatMatrix {
    let dm = d.pow(m as u32);
    let dn = d.pow(n as u32);
    let dout = d.pow((m + n - 1) as u32);
    let right = d.pow((m - i) as u32);
    let mut cmat = RatMatrix::zeros(dout * d, (dm * d) * (dn * d));
    for a in 0..dm * d {
        let r = a / d;
        let c = a % d;
        let alpha = r / (d * right);
        let rem = r % (d * right);
        let u = rem / right;
        let beta = rem % right;
        for b in 0..dn * d {
            let rb = b / d;
            let cb = b % d;
            if u == cb {
                let row = ((alpha * dn + rb) * right + beta) * d + c;
                cmat.set(row, a * (dn * d) + b, rat_int(1));
            }
        }
    }
    cmat
}

/// The commutative operad truncated at `cap`: every arity is one
/// dimensional with the trivial action and all compositions are the
/// canonical isomorphism.
pub fn truncated_com(cap: usize) -> Result<TruncatedOperad> {
    if cap < 1 {
        return Err(Error::invalid("arity cap must be at least 1"));
    }
    let components = (0..=cap).map(|n| SymComponent::trivial(1, n)).collect();
    let seq = SymSequence::new(cap, components)?;
    let one = RatMatrix::identity(1);
    let comps = required_keys(cap).into_iter().map(|k| (k, one.clone())).collect();
    TruncatedOperad::new(seq, vec![rat_int(1)], comps)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The associative operad truncated at `cap`: arity `n` has the right
/// regular representation of the symmetric group on the basis of
/// permutations in lexicographic order, and partial composition of
/// basis elements is their block composite.
pub fn truncated_ass(cap: usize) -> Result<TruncatedOperad> {
    if cap < 1 {
        return Err(Error::invalid("arity cap must be at least 1"));
    }
    let mut components = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let dim = factorial(n);
        let perms = Permutation::all(n);
        let generators = (0..n.saturating_sub(1))
            .map(|k| {
                let sk = Permutation::adjacent_transposition(n, k);
                let mut g = RatMatrix::zeros(dim, dim);
                for sigma in &perms {
                    g.set(sigma.compose(&sk).lex_index(), sigma.lex_index(), rat_int(1));
                }
                g
            })
            .collect();
        components.push(SymComponent { dim, generators });
    }
    let seq = SymSequence::new(cap, components)?;

    let mut comps = BTreeMap::new();
    for (m, n, i) in required_keys(cap) {
        let dim_m = factorial(m);
        let dim_n = factorial(n);
        let mut cmat = RatMatrix::zeros(factorial(m + n - 1), dim_m * dim_n);
        for sigma in &Permutation::all(m) {
            for tau in &Permutation::all(n) {
                let row = block_compose(sigma, i, tau).lex_index();
                cmat.set(row, sigma.lex_index() * dim_n + tau.lex_index(), rat_int(1));
            }
        }
        comps.insert((m, n, i), cmat);
    }
    TruncatedOperad::new(seq, vec![rat_int(1)], comps)
}

/// One failed axiom instance for a map from an operad into the
/// endomorphism or coendomorphism operad of an object.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OperadMapViolation {
    ArityCount { expected: usize, got: usize },
    Shape { n: usize },
    Unit,
    Equivariance { n: usize, generator: usize },
    Composition { m: usize, n: usize, i: usize },
}

impl std::fmt::Display for OperadMapViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperadMapViolation::ArityCount { expected, got } => {
                write!(f, "expected {expected} arity matrices, got {got}")
            }
            OperadMapViolation::Shape { n } => write!(f, "arity {n} matrix has wrong shape"),
            OperadMapViolation::Unit => write!(f, "unit is not sent to the identity"),
            OperadMapViolation::Equivariance { n, generator } => {
                write!(f, "arity {n} matrix does not intertwine generator {generator}")
            }
            OperadMapViolation::Composition { m, n, i } => {
                write!(f, "composition ({m}, {n}, {i}) is not preserved")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperadMapReport {
    pub violations: Vec<OperadMapViolation>,
}

impl OperadMapReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check that the arity matrices `alpha` define a map of truncated
/// operads, replaying unit, equivariance, and every composition.
pub fn validate_map(
    p: &TruncatedOperad,
    target: &TruncatedOperad,
    alpha: &[RatMatrix],
) -> Result<OperadMapReport> {
    let cap = p.cap();
    let mut violations = Vec::new();
    if alpha.len() != cap + 1 {
        violations.push(OperadMapViolation::ArityCount { expected: cap + 1, got: alpha.len() });
        return Ok(OperadMapReport { violations });
    }
    for n in 0..=cap {
        if alpha[n].rows() != target.seq.dim(n) || alpha[n].cols() != p.seq.dim(n) {
            violations.push(OperadMapViolation::Shape { n });
        }
    }
    if !violations.is_empty() {
        return Ok(OperadMapReport { violations });
    }
    if alpha[1].mul_vec(&p.unit)? != target.unit {
        violations.push(OperadMapViolation::Unit);
    }
    for n in 0..=cap {
        for k in 0..n.saturating_sub(1) {
            let lhs = alpha[n].matmul(&p.seq.component(n).generators[k])?;
            let rhs = target.seq.component(n).generators[k].matmul(&alpha[n])?;
            if lhs != rhs {
                violations.push(OperadMapViolation::Equivariance { n, generator: k });
            }
        }
    }
    for &(m, n, i) in &required_keys(cap) {
        let lhs = alpha[m + n - 1].matmul(p.comp(m, n, i)?)?;
        let rhs = target.comp(m, n, i)?.matmul(&alpha[m].kron(&alpha[n]))?;
        if lhs != rhs {
            violations.push(OperadMapViolation::Composition { m, n, i });
        }
    }
    Ok(OperadMapReport { violations })
}

/// Check that the arity matrices define a map of truncated operads into
/// the endomorphism operad of `Q^x_dim`, replaying every axiom and
/// reporting all failures.
pub fn validate_algebra(
    p: &TruncatedOperad,
    x_dim: usize,
    alpha: &[RatMatrix],
) -> Result<OperadMapReport> {
    let target = end_operad_of_object(x_dim, p.cap())?;
    validate_map(p, &target, alpha)
}

/// Same check into the coendomorphism operad of `Q^x_dim`.
pub fn validate_cogebra(
    p: &TruncatedOperad,
    x_dim: usize,
    alpha: &[RatMatrix],
) -> Result<OperadMapReport> {
    let target = coend_operad_of_object(x_dim, p.cap())?;
    validate_map(p, &target, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn end_operad_dims_and_axioms() {
        let e = end_operad_of_object(2, 3).unwrap();
        assert_eq!(e.dims(), vec![2, 4, 8, 16]);
        let report = e.validate();
        assert!(report.is_ok(), "violations: {:?}", report.violations);
    }

    #[test]
    fn coend_operad_dims_and_axioms() {
        let e = coend_operad_of_object(2, 3).unwrap();
        assert_eq!(e.dims(), vec![2, 4, 8, 16]);
        let report = e.validate();
        assert!(report.is_ok(), "violations: {:?}", report.violations);
    }

    #[test]
    fn end_operad_of_line_collapses_to_multiplication() {
        // On Q every hom is one dimensional and o_i is plain product.
        let e = end_operad_of_object(1, 3).unwrap();
        assert_eq!(e.dims(), vec![1, 1, 1, 1]);
        assert!(e.validate().is_ok());
        assert_eq!(e.comp(2, 2, 1).unwrap(), &RatMatrix::from_vec(1, 1, &[rat_int(1)]).unwrap());
    }

    #[test]
    fn end_composition_matches_direct_matrix_composition() {
        // o_i of concrete maps: f o_2 g = f . (I (x) g) on Q^2, checked
        // against an explicit matrix computation.
        let e = end_operad_of_object(2, 3).unwrap();
        let f = RatMatrix::from_vec(2, 4, &[1, 2, 3, 4, 5, 6, 7, 8].map(rat_int)).unwrap();
        let g = RatMatrix::from_vec(2, 4, &[1, 0, 0, 1, 2, 0, 1, 3].map(rat_int)).unwrap();
        let direct = f
            .matmul(&RatMatrix::identity(2).kron(&g))
            .unwrap();
        let via_operad = e
            .compose_elements(2, 2, 2, &f.vectorize(), &g.vectorize())
            .unwrap();
        assert_eq!(via_operad, direct.vectorize());
    }

    #[test]
    fn end_equivariance_with_three_cycle() {
        // A full (non-generator) instance pinning the block composite
        // orientation: sigma trivial outer, tau a 3-cycle inner.
        let e = end_operad_of_object(2, 3).unwrap();
        let tau = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let pi = block_compose(&Permutation::identity(1), 1, &tau);
        assert_eq!(pi, tau);
        let act_tau = e.seq.action(3, &tau).unwrap();
        let lhs = e
            .comp(1, 3, 1)
            .unwrap()
            .matmul(&RatMatrix::identity(4).kron(&act_tau))
            .unwrap();
        let rhs = e.seq.action(3, &pi).unwrap().matmul(e.comp(1, 3, 1).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ass_operad_validates() {
        let a = truncated_ass(3).unwrap();
        assert_eq!(a.dims(), vec![1, 1, 2, 6]);
        let report = a.validate();
        assert!(report.is_ok(), "violations: {:?}", report.violations);
    }

    #[test]
    fn com_operad_validates() {
        let c = truncated_com(3).unwrap();
        assert_eq!(c.dims(), vec![1, 1, 1, 1]);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn missing_and_misshapen_compositions_reported() {
        let mut a = truncated_ass(2).unwrap();
        a.comps.remove(&(2, 1, 1));
        a.comps.insert((2, 0, 1), RatMatrix::zeros(3, 3));
        let report = a.validate();
        assert!(report
            .violations
            .contains(&OperadViolation::MissingComposition { m: 2, n: 1, i: 1 }));
        assert!(report
            .violations
            .contains(&OperadViolation::CompositionShape { m: 2, n: 0, i: 1 }));
    }

    #[test]
    fn corrupted_unit_reported_with_slots() {
        let mut c = truncated_com(2).unwrap();
        c.unit = vec![rat_int(2)];
        let report = c.validate();
        for n in 0..=2usize {
            assert!(report.violations.contains(&OperadViolation::LeftUnit { n }));
        }
        assert!(report.violations.contains(&OperadViolation::RightUnit { m: 2, i: 1 }));
        assert!(report.violations.contains(&OperadViolation::RightUnit { m: 2, i: 2 }));
    }

    #[test]
    fn com_algebra_on_line_validates() {
        let c = truncated_com(3).unwrap();
        let alpha: Vec<RatMatrix> = (0..=3).map(|_| RatMatrix::identity(1)).collect();
        let report = validate_algebra(&c, 1, &alpha).unwrap();
        assert!(report.is_ok(), "violations: {:?}", report.violations);
    }

    #[test]
    fn com_cogebra_on_line_validates() {
        let c = truncated_com(3).unwrap();
        let alpha: Vec<RatMatrix> = (0..=3).map(|_| RatMatrix::identity(1)).collect();
        let report = validate_cogebra(&c, 1, &alpha).unwrap();
        assert!(report.is_ok(), "violations: {:?}", report.violations);
    }

    #[test]
    fn sign_collapse_breaks_equivariance() {
        // Sending each permutation to its sign is not a map into the
        // endomorphism operad of Q: the trivial target action cannot
        // see the sign flip, and block composites do not multiply
        // signs. The unit axiom survives.
        let a = truncated_ass(3).unwrap();
        let alpha: Vec<RatMatrix> = (0..=3)
            .map(|n| {
                let perms = Permutation::all(n);
                RatMatrix::from_fn(1, factorial(n), |_, j| rat_int(perms[j].sign()))
            })
            .collect();
        let report = validate_algebra(&a, 1, &alpha).unwrap();
        assert!(!report.is_ok());
        for (n, k) in [(2usize, 0usize), (3, 0), (3, 1)] {
            assert!(report
                .violations
                .contains(&OperadMapViolation::Equivariance { n, generator: k }));
        }
        assert!(!report.violations.contains(&OperadMapViolation::Unit));
    }

    #[test]
    fn zero_collapse_breaks_exactly_the_unit() {
        let a = truncated_ass(3).unwrap();
        let alpha: Vec<RatMatrix> =
            (0..=3).map(|n| RatMatrix::zeros(1, factorial(n))).collect();
        let report = validate_algebra(&a, 1, &alpha).unwrap();
        assert_eq!(report.violations, vec![OperadMapViolation::Unit]);
    }

    #[test]
    fn swap_factors_is_permutation() {
        let s = swap_last_two_factors(2, 3, 2);
        assert_eq!(s.matmul(&swap_last_two_factors(2, 2, 3)).unwrap(), RatMatrix::identity(12));
    }
}
