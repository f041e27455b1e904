//! Symmetric sequences and truncated operads over the rational base.
//!
//! Everything here is presented by finite data: a symmetric sequence
//! stores one component per arity up to a cap, with the right action of
//! each symmetric group given by the matrices of the adjacent
//! transpositions. A truncated operad adds a unit vector in arity one
//! and one composition matrix per admissible `(m, n, i)`, and the
//! validators replay every axiom instance that fits under the cap,
//! reporting the full list of failures rather than the first one.

mod products;
mod symseq;
mod truncated;

pub use products::{circ_on_object, circ_product, convolution, CircOnObject, CircProduct, CircSummand};
pub use symseq::{unit_sym_sequence, SymComponent, SymSequence, SymViolation};
pub use truncated::{
    coend_operad_of_object, end_operad_of_object, truncated_ass, truncated_com, validate_algebra,
    validate_cogebra, validate_map, validate_operad, OperadMapReport, OperadMapViolation,
    OperadReport, OperadViolation, TruncatedOperad,
};
pub(crate) use truncated::{coend_comp_matrix, end_comp_matrix, required_keys};

use crate::linalg::Permutation;

/// All size-`k` subsets of `{0, .., n-1}`, each sorted ascending, in
/// lexicographic order of the sorted index vectors.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance to the next combination in lex order.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if current[pos] < n - (k - pos) {
                current[pos] += 1;
                for t in pos + 1..k {
                    current[t] = current[t - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// The operadic composite `sigma o_i tau` of permutations, `slot`
/// 1-based: the permutation of `m + n - 1` letters obtained by blowing
/// up the `slot`-th letter of `sigma` into a block of `n` letters
/// permuted by `tau`.
///
/// The convention matches the right actions used throughout:
/// `(x . sigma) o_i (y . tau) = (x o_{sigma(i)} y) . (sigma o_i tau)`
/// holds in the endomorphism operad of any object.
pub fn block_compose(sigma: &Permutation, slot: usize, tau: &Permutation) -> Permutation {
    let m = sigma.n();
    let n = tau.n();
    assert!(slot >= 1 && slot <= m, "slot out of range");
    let i0 = slot - 1;
    let sizes: Vec<usize> = (0..m).map(|b| if b == i0 { n } else { 1 }).collect();
    let mut start_in = vec![0usize; m];
    for b in 1..m {
        start_in[b] = start_in[b - 1] + sizes[b - 1];
    }
    // Output offset of the block landing in output slot k is the total
    // size of the blocks landing before it.
    let mut start_out = vec![0usize; m];
    for k in 1..m {
        start_out[k] = start_out[k - 1] + sizes[sigma.inverse().apply(k - 1)];
    }
    let total = m + n - 1;
    let mut images = vec![0usize; total];
    for b in 0..m {
        for t in 0..sizes[b] {
            // Inside the blown-up block the letters move by tau, and the
            // whole block moves to its slot under sigma.
            let t_moved = if b == i0 { tau.apply(t) } else { t };
            images[start_in[b] + t] = start_out[sigma.apply(b)] + t_moved;
        }
    }
    Permutation::from_images(images).expect("block composite is a bijection")
}
