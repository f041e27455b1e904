//! Symmetric sequences: one rational representation of each symmetric
//! group up to the arity cap, presented by generator matrices.

use crate::error::{Error, Result};
use crate::linalg::{Permutation, RatMatrix};

/// One arity component: a right representation of the symmetric group,
/// given by the action matrices of the adjacent transpositions
/// `s_0, .., s_{n-2}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymComponent {
    pub dim: usize,
    pub generators: Vec<RatMatrix>,
}

impl SymComponent {
    pub fn trivial(dim: usize, arity: usize) -> Self {
        SymComponent {
            dim,
            generators: vec![RatMatrix::identity(dim); arity.saturating_sub(1)],
        }
    }

    pub fn zero(arity: usize) -> Self {
        SymComponent {
            dim: 0,
            generators: vec![RatMatrix::zeros(0, 0); arity.saturating_sub(1)],
        }
    }
}

/// A violation of the symmetric sequence contract: bad shapes, or a
/// Coxeter relation that fails, which means the generator matrices do
/// not assemble into group actions at all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SymViolation {
    GeneratorCount { arity: usize, expected: usize, got: usize },
    GeneratorShape { arity: usize, generator: usize },
    Involution { arity: usize, generator: usize },
    Braid { arity: usize, generator: usize },
    Commutation { arity: usize, first: usize, second: usize },
}

impl std::fmt::Display for SymViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymViolation::GeneratorCount { arity, expected, got } => write!(
                f,
                "arity {arity}: expected {expected} generator matrices, got {got}"
            ),
            SymViolation::GeneratorShape { arity, generator } => write!(
                f,
                "arity {arity}: generator {generator} is not square of the component dimension"
            ),
            SymViolation::Involution { arity, generator } => {
                write!(f, "arity {arity}: generator {generator} squared is not the identity")
            }
            SymViolation::Braid { arity, generator } => write!(
                f,
                "arity {arity}: braid relation fails between generators {generator} and {}",
                generator + 1
            ),
            SymViolation::Commutation { arity, first, second } => write!(
                f,
                "arity {arity}: generators {first} and {second} do not commute"
            ),
        }
    }
}

/// A symmetric sequence truncated at an arity cap, components indexed
/// `0..=cap`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymSequence {
    cap: usize,
    components: Vec<SymComponent>,
}

impl SymSequence {
    pub fn new(cap: usize, components: Vec<SymComponent>) -> Result<Self> {
        if components.len() != cap + 1 {
            return Err(Error::shape("need one component per arity 0..=cap"));
        }
        for (n, c) in components.iter().enumerate() {
            if c.generators.len() != n.saturating_sub(1) {
                return Err(Error::shape(format!(
                    "arity {n} needs {} generator matrices",
                    n.saturating_sub(1)
                )));
            }
            for g in &c.generators {
                if g.rows() != c.dim || g.cols() != c.dim {
                    return Err(Error::shape(format!("arity {n}: generator matrix is not dim x dim")));
                }
            }
        }
        Ok(SymSequence { cap, components })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn component(&self, n: usize) -> &SymComponent {
        &self.components[n]
    }

    pub fn dim(&self, n: usize) -> usize {
        self.components[n].dim
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim).collect()
    }

    /// Action matrix of an arbitrary permutation, assembled from the
    /// generator matrices along an adjacent-transposition word. The
    /// assignment is an anti-homomorphism into matrices, so the factor
    /// for the rightmost word letter (applied first) sits rightmost in
    /// the product.
    pub fn action(&self, n: usize, sigma: &Permutation) -> Result<RatMatrix> {
        if n > self.cap {
            return Err(Error::shape("arity above cap"));
        }
        if sigma.n() != n {
            return Err(Error::shape("permutation arity mismatch"));
        }
        let c = &self.components[n];
        let mut acc = RatMatrix::identity(c.dim);
        for &k in &sigma.adjacent_word() {
            acc = c.generators[k].matmul(&acc)?;
        }
        Ok(acc)
    }

    /// Check the Coxeter relations in every component. Passing means
    /// the generators extend to a genuine right action of each
    /// symmetric group. All violations are reported.
    pub fn validate(&self) -> Vec<SymViolation> {
        let mut out = Vec::new();
        for (n, c) in self.components.iter().enumerate() {
            let expected = n.saturating_sub(1);
            if c.generators.len() != expected {
                out.push(SymViolation::GeneratorCount {
                    arity: n,
                    expected,
                    got: c.generators.len(),
                });
                continue;
            }
            let mut shape_ok = true;
            for (k, g) in c.generators.iter().enumerate() {
                if g.rows() != c.dim || g.cols() != c.dim {
                    out.push(SymViolation::GeneratorShape { arity: n, generator: k });
                    shape_ok = false;
                }
            }
            if !shape_ok {
                continue;
            }
            let id = RatMatrix::identity(c.dim);
            for (k, g) in c.generators.iter().enumerate() {
                if g.matmul(g).unwrap() != id {
                    out.push(SymViolation::Involution { arity: n, generator: k });
                }
            }
            for k in 0..expected.saturating_sub(1) {
                let a = &c.generators[k];
                let b = &c.generators[k + 1];
                let aba = a.matmul(b).unwrap().matmul(a).unwrap();
                let bab = b.matmul(a).unwrap().matmul(b).unwrap();
                if aba != bab {
                    out.push(SymViolation::Braid { arity: n, generator: k });
                }
            }
            for k in 0..expected {
                for l in k + 2..expected {
                    let a = &c.generators[k];
                    let b = &c.generators[l];
                    if a.matmul(b).unwrap() != b.matmul(a).unwrap() {
                        out.push(SymViolation::Commutation { arity: n, first: k, second: l });
                    }
                }
            }
        }
        out
    }
}

/// The monoidal unit for the composition product: one dimension in
/// arity 1, zero elsewhere.
pub fn unit_sym_sequence(cap: usize) -> SymSequence {
    let components = (0..=cap)
        .map(|n| if n == 1 { SymComponent::trivial(1, 1) } else { SymComponent::zero(n) })
        .collect();
    SymSequence::new(cap, components).expect("unit sequence shapes are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{perm_action_matrix, rat_int};

    fn tensor_square_sequence(cap: usize, d: usize) -> SymSequence {
        // Component n is (Q^d)^(x n) with digit permutation, a genuine
        // right action by construction.
        let components = (0..=cap)
            .map(|n| {
                let dim = d.pow(n as u32);
                let generators = (0..n.saturating_sub(1))
                    .map(|k| {
                        perm_action_matrix(&Permutation::adjacent_transposition(n, k), d).unwrap()
                    })
                    .collect();
                SymComponent { dim, generators }
            })
            .collect();
        SymSequence::new(cap, components).unwrap()
    }

    #[test]
    fn tensor_actions_satisfy_coxeter() {
        let seq = tensor_square_sequence(4, 2);
        assert!(seq.validate().is_empty());
    }

    #[test]
    fn action_reconstructs_permutation_matrices() {
        let seq = tensor_square_sequence(3, 2);
        for sigma in Permutation::all(3) {
            let built = seq.action(3, &sigma).unwrap();
            let direct = perm_action_matrix(&sigma, 2).unwrap();
            assert_eq!(built, direct);
        }
    }

    #[test]
    fn action_is_anti_homomorphism() {
        let seq = tensor_square_sequence(3, 2);
        for s in Permutation::all(3) {
            for t in Permutation::all(3) {
                let st = seq.action(3, &s.compose(&t)).unwrap();
                let ts = seq.action(3, &t).unwrap().matmul(&seq.action(3, &s).unwrap()).unwrap();
                assert_eq!(st, ts);
            }
        }
    }

    #[test]
    fn broken_involution_reported() {
        let mut seq = tensor_square_sequence(2, 2);
        seq.components[2].generators[0] =
            RatMatrix::from_vec(4, 4, &{
                let mut v = vec![0i64; 16];
                v[0] = 2;
                v[5] = 1;
                v[10] = 1;
                v[15] = 1;
                v
            }.iter().copied().map(rat_int).collect::<Vec<_>>()).unwrap();
        let violations = seq.validate();
        assert_eq!(violations.len(), 1);
        assert!(matches!(violations[0], SymViolation::Involution { arity: 2, generator: 0 }));
    }

    #[test]
    fn unit_sequence_dims() {
        let u = unit_sym_sequence(3);
        assert_eq!(u.dims(), vec![0, 1, 0, 0]);
        assert!(u.validate().is_empty());
    }
}
