//! Convolution and composition products of symmetric sequences.
//!
//! The convolution component at arity `n` is the sum over `p + q = n`
//! of induced representations, presented on the basis of cosets: a
//! size-`p` subset of the inputs together with basis vectors of the two
//! factors. The composition product quotients convolution powers by the
//! diagonal action of the factor-permuting symmetric group.

use std::collections::BTreeMap;

use num::Zero;

use super::{combinations, SymComponent, SymSequence};
use crate::error::{Error, Result};
use crate::linalg::{
    perm_action_matrix, quotient, rat_int, Permutation, QuotientData, RatMatrix, Subspace,
};

/// The coset representative attached to a size-`p` subset `S` of
/// `{0..n-1}`: the `t`-th smallest element of `S` goes to `t`, the
/// `t`-th smallest element of the complement to `p + t`.
fn subset_representative(n: usize, s: &[usize]) -> Permutation {
    let p = s.len();
    let mut images = vec![usize::MAX; n];
    for (t, &e) in s.iter().enumerate() {
        images[e] = t;
    }
    let mut next = p;
    for e in 0..n {
        if images[e] == usize::MAX {
            images[e] = next;
            next += 1;
        }
    }
    Permutation::from_images(images).expect("subset representative is a bijection")
}

/// Day convolution of two symmetric sequences sharing a cap. The arity
/// `n` component is the direct sum over `p + q = n` and size-`p`
/// subsets `S` (lex order) of `A(p) (x) B(q)`, and a permutation acts
/// by moving the subset to its preimage and twisting the factors by
/// the stabilizer part of the coset shift.
pub fn convolution(a: &SymSequence, b: &SymSequence) -> Result<SymSequence> {
    if a.cap() != b.cap() {
        return Err(Error::CapMismatch { expected: a.cap(), got: b.cap() });
    }
    let cap = a.cap();
    let mut components = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        struct Block {
            p: usize,
            subset: Vec<usize>,
            offset: usize,
            size: usize,
        }
        let mut blocks = Vec::new();
        let mut offset = 0;
        for p in 0..=n {
            let q = n - p;
            let size = a.dim(p) * b.dim(q);
            for subset in combinations(n, p) {
                blocks.push(Block { p, subset, offset, size });
                offset += size;
            }
        }
        let dim = offset;
        let lookup: BTreeMap<(usize, Vec<usize>), usize> = blocks
            .iter()
            .enumerate()
            .map(|(i, bl)| ((bl.p, bl.subset.clone()), i))
            .collect();
        let generators = (0..n.saturating_sub(1))
            .map(|k| {
                let sk = Permutation::adjacent_transposition(n, k);
                let mut g = RatMatrix::zeros(dim, dim);
                for bl in &blocks {
                    if bl.size == 0 {
                        continue;
                    }
                    let p = bl.p;
                    let q = n - p;
                    let mut target: Vec<usize> = bl.subset.iter().map(|&e| sk.apply(e)).collect();
                    target.sort_unstable();
                    let tgt = &blocks[lookup[&(p, target.clone())]];
                    let g_s = subset_representative(n, &bl.subset);
                    let g_t = subset_representative(n, &target);
                    // The coset shift g_S . s_k . g_S'^-1 stabilizes the
                    // split and acts on the two factors separately.
                    let h = g_s.compose(&sk).compose(&g_t.inverse());
                    let hp =
                        Permutation::from_images((0..p).map(|t| h.apply(t)).collect())?;
                    let hq =
                        Permutation::from_images((0..q).map(|t| h.apply(p + t) - p).collect())?;
                    let block = a.action(p, &hp)?.kron(&b.action(q, &hq)?);
                    for r in 0..tgt.size {
                        for c in 0..bl.size {
                            if !block.at(r, c).is_zero() {
                                g.set(tgt.offset + r, bl.offset + c, block.at(r, c).clone());
                            }
                        }
                    }
                }
                Ok(g)
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(SymComponent { dim, generators });
    }
    SymSequence::new(cap, components)
}

/// All vectors of `m` nonnegative integers summing to `n`, lex order.
fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for rest in compositions(n - first, m - 1) {
            let mut v = Vec::with_capacity(m);
            v.push(first);
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// All words in letters `0..counts.len()` using each letter `i` exactly
/// `counts[i]` times, lex order.
fn words_with_content(counts: &[usize]) -> Vec<Vec<usize>> {
    fn rec(counts: &mut [usize], word: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for letter in 0..counts.len() {
            if counts[letter] > 0 {
                counts[letter] -= 1;
                word.push(letter);
                rec(counts, word, n, out);
                word.pop();
                counts[letter] += 1;
            }
        }
    }
    let n: usize = counts.iter().sum();
    let mut out = Vec::new();
    rec(&mut counts.to_vec(), &mut Vec::new(), n, &mut out);
    out
}

fn all_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for t in &out {
            for v in 0..d {
                let mut t2 = t.clone();
                t2.push(v);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

fn flat_index(tuple: &[usize], dims: &[usize]) -> usize {
    tuple.iter().zip(dims).fold(0, |acc, (&t, &d)| acc * d + t)
}

/// Basis bookkeeping for the `m`-fold convolution power of a sequence
/// at arity `n`: one block per pair (composition `q` of `n` into `m`
/// parts, assignment word `w` with content `q`), both lex ordered, with
/// mixed-radix factor indices inside a block, first factor major.
struct PowerBasis {
    blocks: Vec<PowerBlock>,
    lookup: BTreeMap<Vec<usize>, usize>,
    dim: usize,
}

struct PowerBlock {
    q: Vec<usize>,
    word: Vec<usize>,
    dims: Vec<usize>,
    offset: usize,
    size: usize,
}

fn power_basis(nseq: &SymSequence, m: usize, n: usize) -> PowerBasis {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for q in compositions(n, m) {
        let dims: Vec<usize> = q.iter().map(|&qi| nseq.dim(qi)).collect();
        let size: usize = dims.iter().product();
        for word in words_with_content(&q) {
            blocks.push(PowerBlock { q: q.clone(), word, dims: dims.clone(), offset, size });
            offset += size;
        }
    }
    let lookup = blocks
        .iter()
        .enumerate()
        .map(|(i, bl)| (bl.word.clone(), i))
        .collect();
    PowerBasis { blocks, lookup, dim: offset }
}

/// Action of the adjacent transposition `s_k` of the inputs on a
/// convolution power: positions `k, k+1` in the same factor hit that
/// factor with the matching adjacent transposition of its arity;
/// positions in different factors just swap the assignment word.
fn power_input_generator(
    nseq: &SymSequence,
    pb: &PowerBasis,
    _n: usize,
    k: usize,
) -> Result<RatMatrix> {
    let mut g = RatMatrix::zeros(pb.dim, pb.dim);
    for bl in &pb.blocks {
        if bl.size == 0 {
            continue;
        }
        if bl.word[k] == bl.word[k + 1] {
            let i = bl.word[k];
            let t = bl.word[..k].iter().filter(|&&l| l == i).count();
            let mut block = RatMatrix::identity(1);
            for (slot, &qi) in bl.q.iter().enumerate() {
                if slot == i {
                    block = block.kron(&nseq.component(qi).generators[t]);
                } else {
                    block = block.kron(&RatMatrix::identity(nseq.dim(qi)));
                }
            }
            for r in 0..bl.size {
                for c in 0..bl.size {
                    if !block.at(r, c).is_zero() {
                        g.set(bl.offset + r, bl.offset + c, block.at(r, c).clone());
                    }
                }
            }
        } else {
            let mut word = bl.word.clone();
            word.swap(k, k + 1);
            let tgt = &pb.blocks[pb.lookup[&word]];
            for idx in 0..bl.size {
                g.set(tgt.offset + idx, bl.offset + idx, rat_int(1));
            }
        }
    }
    Ok(g)
}

/// Action of the adjacent transposition `s_j` of the factors on a
/// convolution power: letters `j, j+1` of the word and the matching
/// factor indices swap.
fn power_factor_generator(pb: &PowerBasis, j: usize) -> RatMatrix {
    let mut g = RatMatrix::zeros(pb.dim, pb.dim);
    for bl in &pb.blocks {
        if bl.size == 0 {
            continue;
        }
        let word: Vec<usize> = bl
            .word
            .iter()
            .map(|&l| if l == j { j + 1 } else if l == j + 1 { j } else { l })
            .collect();
        let tgt = &pb.blocks[pb.lookup[&word]];
        for tuple in all_tuples(&bl.dims) {
            let mut moved = tuple.clone();
            moved.swap(j, j + 1);
            g.set(
                tgt.offset + flat_index(&moved, &tgt.dims),
                bl.offset + flat_index(&tuple, &bl.dims),
                rat_int(1),
            );
        }
    }
    g
}

/// One coinvariant summand of a composition product: the ambient space
/// `M(m) (x) N_power`, its offset inside the component, and the
/// quotient presentation.
#[derive(Clone, Debug)]
pub struct CircSummand {
    pub m: usize,
    pub ambient_dim: usize,
    pub offset: usize,
    pub quotient: QuotientData,
}

/// A composition product `M (<) N`, with the induced symmetric sequence
/// and the per-arity, per-summand quotient data.
#[derive(Clone, Debug)]
pub struct CircProduct {
    pub seq: SymSequence,
    /// Indexed `[n][m]` for `n, m` in `0..=cap`.
    pub summands: Vec<Vec<CircSummand>>,
}

/// The composition product of two symmetric sequences sharing a cap:
/// arity `n` is the sum over `m` of the coinvariants of
/// `M(m) (x) N-power(m, n)` under the diagonal factor permutations.
pub fn circ_product(mseq: &SymSequence, nseq: &SymSequence) -> Result<CircProduct> {
    if mseq.cap() != nseq.cap() {
        return Err(Error::CapMismatch { expected: mseq.cap(), got: nseq.cap() });
    }
    let cap = mseq.cap();
    let mut components = Vec::with_capacity(cap + 1);
    let mut all_summands = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut summands = Vec::new();
        let mut offset = 0;
        let mut gen_blocks: Vec<Vec<RatMatrix>> = vec![Vec::new(); n.saturating_sub(1)];
        for m in 0..=cap {
            let pb = power_basis(nseq, m, n);
            let mdim = mseq.dim(m);
            let ambient = mdim * pb.dim;
            let mut rel_rows = Vec::new();
            for j in 0..m.saturating_sub(1) {
                let diag = mseq.component(m).generators[j].kron(&power_factor_generator(&pb, j));
                let d = diag.sub(&RatMatrix::identity(ambient))?;
                for c in 0..ambient {
                    let col = d.col(c);
                    if col.iter().any(|x| !x.is_zero()) {
                        rel_rows.push(col);
                    }
                }
            }
            let relations = Subspace::from_rows(ambient, rel_rows)?;
            let qd = quotient(ambient, &relations)?;
            for (k, bucket) in gen_blocks.iter_mut().enumerate() {
                let t = power_input_generator(nseq, &pb, n, k)?;
                let full = RatMatrix::identity(mdim).kron(&t);
                debug_assert!(
                    relations
                        .basis()
                        .iter()
                        .all(|r| relations.contains(&full.mul_vec(r).unwrap())),
                    "input action must preserve the diagonal relations"
                );
                bucket.push(qd.projection.matmul(&full)?.matmul(&qd.section)?);
            }
            let dim_here = qd.dim;
            summands.push(CircSummand { m, ambient_dim: ambient, offset, quotient: qd });
            offset += dim_here;
        }
        let generators = gen_blocks
            .into_iter()
            .map(|bucket| {
                bucket
                    .into_iter()
                    .fold(RatMatrix::zeros(0, 0), |acc, b| acc.direct_sum(&b))
            })
            .collect();
        components.push(SymComponent { dim: offset, generators });
        all_summands.push(summands);
    }
    Ok(CircProduct { seq: SymSequence::new(cap, components)?, summands: all_summands })
}

/// A sequence applied to an object: the sum over `m` of the
/// coinvariants of `M(m) (x) X^(x m)` under the diagonal action.
#[derive(Clone, Debug)]
pub struct CircOnObject {
    pub total_dim: usize,
    pub summands: Vec<CircSummand>,
}

pub fn circ_on_object(mseq: &SymSequence, x_dim: usize) -> Result<CircOnObject> {
    let cap = mseq.cap();
    let mut summands = Vec::with_capacity(cap + 1);
    let mut total = 0;
    for m in 0..=cap {
        let power = x_dim
            .checked_pow(m as u32)
            .ok_or_else(|| Error::invalid("object dimension overflows at this cap"))?;
        let mdim = mseq.dim(m);
        let ambient = mdim
            .checked_mul(power)
            .ok_or_else(|| Error::invalid("object dimension overflows at this cap"))?;
        let mut rel_rows = Vec::new();
        for j in 0..m.saturating_sub(1) {
            let t = perm_action_matrix(&Permutation::adjacent_transposition(m, j), x_dim)?;
            let diag = mseq.component(m).generators[j].kron(&t);
            let d = diag.sub(&RatMatrix::identity(ambient))?;
            for c in 0..ambient {
                let col = d.col(c);
                if col.iter().any(|x| !x.is_zero()) {
                    rel_rows.push(col);
                }
            }
        }
        let relations = Subspace::from_rows(ambient, rel_rows)?;
        let qd = quotient(ambient, &relations)?;
        total += qd.dim;
        summands.push(CircSummand { m, ambient_dim: ambient, offset: total - qd.dim, quotient: qd });
    }
    Ok(CircOnObject { total_dim: total, summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{truncated_ass, truncated_com, unit_sym_sequence};

    fn arity_one_sequence(cap: usize, dim: usize) -> SymSequence {
        let components = (0..=cap)
            .map(|n| {
                if n == 1 {
                    SymComponent::trivial(dim, 1)
                } else {
                    SymComponent::zero(n)
                }
            })
            .collect();
        SymSequence::new(cap, components).unwrap()
    }

    #[test]
    fn subset_representative_order() {
        let g = subset_representative(4, &[1, 3]);
        assert_eq!(g.images(), &[2, 0, 3, 1]);
    }

    #[test]
    fn convolution_of_arity_one_concentrates_in_arity_two() {
        let a = arity_one_sequence(3, 2);
        let b = arity_one_sequence(3, 3);
        let c = convolution(&a, &b).unwrap();
        assert_eq!(c.dims(), vec![0, 0, 12, 0]);
        assert!(c.validate().is_empty());
        // Two cosets, trivial stabilizer twist: the generator swaps the
        // two subset blocks and fixes the factor indices.
        let mut expected = RatMatrix::zeros(12, 12);
        for idx in 0..6 {
            expected.set(6 + idx, idx, rat_int(1));
            expected.set(idx, 6 + idx, rat_int(1));
        }
        assert_eq!(c.component(2).generators[0], expected);
    }

    #[test]
    fn convolution_of_trivial_lines_gives_binomial_dims() {
        let com = truncated_com(3).unwrap().seq;
        let c = convolution(&com, &com).unwrap();
        assert_eq!(c.dims(), vec![1, 2, 4, 8]);
        assert!(c.validate().is_empty());
    }

    #[test]
    fn convolution_cap_mismatch_rejected() {
        let a = arity_one_sequence(2, 1);
        let b = arity_one_sequence(3, 1);
        assert!(convolution(&a, &b).is_err());
    }

    #[test]
    fn power_basis_counts_words() {
        let com = truncated_com(3).unwrap().seq;
        let pb = power_basis(&com, 2, 2);
        assert_eq!(pb.dim, 4);
        assert_eq!(pb.blocks.len(), 4);
        let pb3 = power_basis(&com, 3, 2);
        assert_eq!(pb3.dim, 9);
    }

    #[test]
    fn power_input_action_satisfies_coxeter() {
        let ass = truncated_ass(3).unwrap().seq;
        for m in 1..=3usize {
            let n = 3;
            let pb = power_basis(&ass, m, n);
            let generators = (0..n - 1)
                .map(|k| power_input_generator(&ass, &pb, n, k).unwrap())
                .collect();
            let seq = SymSequence::new(
                n,
                (0..n)
                    .map(|a| SymComponent::zero(a))
                    .chain(std::iter::once(SymComponent { dim: pb.dim, generators }))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            assert!(seq.validate().is_empty(), "m = {m}");
        }
    }

    #[test]
    fn power_factor_action_commutes_with_input_action() {
        let ass = truncated_ass(2).unwrap().seq;
        let pb = power_basis(&ass, 2, 2);
        let input = power_input_generator(&ass, &pb, 2, 0).unwrap();
        let factor = power_factor_generator(&pb, 0);
        assert_eq!(factor.matmul(&factor).unwrap(), RatMatrix::identity(pb.dim));
        assert_eq!(
            input.matmul(&factor).unwrap(),
            factor.matmul(&input).unwrap()
        );
    }

    #[test]
    fn circ_with_unit_on_the_left_is_identity() {
        let ass = truncated_ass(3).unwrap().seq;
        let unit = unit_sym_sequence(3);
        let c = circ_product(&unit, &ass).unwrap();
        assert_eq!(c.seq.dims(), ass.dims());
        for n in 0..=3usize {
            for k in 0..n.saturating_sub(1) {
                assert_eq!(
                    c.seq.component(n).generators[k],
                    ass.component(n).generators[k]
                );
            }
        }
    }

    #[test]
    fn circ_with_unit_on_the_right_is_isomorphism() {
        let ass = truncated_ass(3).unwrap().seq;
        let unit = unit_sym_sequence(3);
        let c = circ_product(&ass, &unit).unwrap();
        assert_eq!(c.seq.dims(), ass.dims());
        assert!(c.seq.validate().is_empty());
        // The canonical map sends x to the class of x tensor the
        // identity assignment word; invertibility makes the dims match
        // an actual isomorphism.
        for n in 0..=3usize {
            let summand = &c.summands[n][n];
            let pb = power_basis(&unit, n, n);
            let id_word: Vec<usize> = (0..n).collect();
            let word_offset = pb.blocks[pb.lookup[&id_word]].offset;
            let mdim = ass.dim(n);
            let mut canonical = RatMatrix::zeros(summand.quotient.dim, mdim);
            for x in 0..mdim {
                let mut vec = vec![rat_int(0); summand.ambient_dim];
                vec[x * pb.dim + word_offset] = rat_int(1);
                let class = summand.quotient.projection.mul_vec(&vec).unwrap();
                for (r, val) in class.into_iter().enumerate() {
                    canonical.set(r, x, val);
                }
            }
            assert_eq!(canonical.rank(), mdim, "arity {n}");
        }
    }

    #[test]
    fn circ_of_arity_one_multiplies_dims() {
        let a = arity_one_sequence(2, 2);
        let b = arity_one_sequence(2, 3);
        let c = circ_product(&a, &b).unwrap();
        assert_eq!(c.seq.dims(), vec![0, 6, 0]);
    }

    #[test]
    fn circ_com_com_counts_orbits() {
        // With one-dimensional trivial components every coinvariant
        // space has the orbit count of words as its dimension, which an
        // independent brute-force orbit count confirms.
        let com = truncated_com(3).unwrap().seq;
        let c = circ_product(&com, &com).unwrap();
        for n in 0..=3usize {
            for m in 0..=3usize {
                let expected = words_by_orbit(m, n).len();
                assert_eq!(
                    c.summands[n][m].quotient.dim, expected,
                    "orbit count at m = {m}, n = {n}"
                );
            }
        }

        fn words_by_orbit(m: usize, n: usize) -> Vec<Vec<usize>> {
            let mut reps = Vec::new();
            let mut seen = std::collections::BTreeSet::new();
            for w in all_tuples(&vec![m; n]) {
                if seen.contains(&w) {
                    continue;
                }
                reps.push(w.clone());
                for sigma in Permutation::all(m) {
                    let relabeled: Vec<usize> = w.iter().map(|&l| sigma.apply(l)).collect();
                    seen.insert(relabeled);
                }
            }
            reps
        }
    }

    #[test]
    fn com_on_point_counts_arities() {
        let com = truncated_com(3).unwrap().seq;
        let c = circ_on_object(&com, 1).unwrap();
        assert_eq!(c.total_dim, 4);
        assert_eq!(c.summands.iter().map(|s| s.quotient.dim).collect::<Vec<_>>(), vec![1; 4]);
    }

    #[test]
    fn com_on_plane_counts_symmetric_powers() {
        let com = truncated_com(3).unwrap().seq;
        let c = circ_on_object(&com, 2).unwrap();
        assert_eq!(
            c.summands.iter().map(|s| s.quotient.dim).collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
        assert_eq!(c.total_dim, 10);
    }

    #[test]
    fn ass_on_plane_recovers_tensor_powers() {
        let ass = truncated_ass(3).unwrap().seq;
        let c = circ_on_object(&ass, 2).unwrap();
        assert_eq!(
            c.summands.iter().map(|s| s.quotient.dim).collect::<Vec<_>>(),
            vec![1, 2, 4, 8]
        );
        assert_eq!(c.total_dim, 15);
    }
}
