//! Endomorphism and coendomorphism operads of a vector-valued functor.
//!
//! The arity `n` component is the end of the hom bifunctor between the
//! `n`-th tensor power of `F` and `F` itself: families of operators
//! `F X^(x)n -> F X`, one per object, subject to one equation per
//! non-identity morphism. The symmetric group permutes tensor factors,
//! and substitution plugs one family into a tensor slot of another,
//! objectwise. Closure of every structural map on the end is
//! established during construction; a value leaving the carrier is a
//! hard error, never a silent projection.

use num::Zero;
use std::collections::BTreeMap;

use super::{as_lin, equations, HomBlock};
use crate::error::{Error, Result};
use crate::linalg::{kernel, perm_action_matrix, Permutation, Rat, RatMatrix, Subspace};
use crate::operad::{required_keys, SymComponent, SymSequence, TruncatedOperad};
use crate::operad::{coend_comp_matrix, end_comp_matrix};
use crate::vbase::{postcompose_operator, precompose_operator, BaseFunctor, BaseTag};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    End,
    CoEnd,
}

/// One arity component of the operadic end: the hom-block layout of the
/// ambient product and the solution subspace inside it.
#[derive(Clone, Debug)]
pub struct EndCarrier {
    pub blocks: Vec<HomBlock>,
    pub space: Subspace,
}

impl EndCarrier {
    pub fn total_len(&self) -> usize {
        self.blocks.iter().map(HomBlock::len).sum()
    }
}

/// A truncated operad together with the functor it came from and the
/// per-arity carriers realizing each abstract coordinate as a family of
/// operators.
#[derive(Clone, Debug)]
pub struct FunctorOperad {
    pub functor: BaseFunctor,
    pub operad: TruncatedOperad,
    pub carriers: Vec<EndCarrier>,
}

impl FunctorOperad {
    pub fn cap(&self) -> usize {
        self.operad.cap()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.operad.dims()
    }
}

fn arity_blocks(f: &BaseFunctor, n: usize, dir: Dir) -> Vec<HomBlock> {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for x in 0..f.source().num_objects() {
        let d = f.object(x).size();
        let dn = d.pow(n as u32);
        let (rows, cols) = match dir {
            Dir::End => (d, dn),
            Dir::CoEnd => (dn, d),
        };
        blocks.push(HomBlock { offset, rows, cols });
        offset += rows * cols;
    }
    blocks
}

/// The arity `n` carrier as one stacked kernel: a block row per
/// non-identity morphism `f: X -> Y`, comparing the `X` component
/// pushed forward along `F(f)` with the `Y` component pulled back along
/// `F(f)^(x)n` (roles swapped for the coend).
fn arity_carrier(f: &BaseFunctor, n: usize, dir: Dir) -> EndCarrier {
    let blocks = arity_blocks(f, n, dir);
    let total: usize = blocks.iter().map(HomBlock::len).sum();
    let eqs = equations(f);
    let mut per_eq = Vec::with_capacity(eqs.len());
    for &(m, x, y) in &eqs {
        let dx = f.object(x).size();
        let dy = f.object(y).size();
        let fm = as_lin(f.map(m));
        let fmn = fm.kron_power(n);
        let (l, r) = match dir {
            Dir::End => (
                postcompose_operator(fm, dx.pow(n as u32)),
                precompose_operator(&fmn, dy),
            ),
            Dir::CoEnd => (
                postcompose_operator(&fmn, dx),
                precompose_operator(fm, dy.pow(n as u32)),
            ),
        };
        per_eq.push((x, y, l, r));
    }
    let rows_total: usize = per_eq.iter().map(|(_, _, l, _)| l.rows()).sum();
    let mut big = RatMatrix::zeros(rows_total, total);
    let mut row0 = 0;
    for (x, y, l, r) in per_eq {
        for rr in 0..l.rows() {
            for cc in 0..l.cols() {
                if !l.at(rr, cc).is_zero() {
                    big.set(row0 + rr, blocks[x].offset + cc, l.at(rr, cc).clone());
                }
            }
            for cc in 0..r.cols() {
                if !r.at(rr, cc).is_zero() {
                    let col = blocks[y].offset + cc;
                    let v = big.at(row0 + rr, col) - r.at(rr, cc);
                    big.set(row0 + rr, col, v);
                }
            }
        }
        row0 += l.rows();
    }
    EndCarrier { blocks, space: kernel(&big) }
}

/// A carrier endomorphism induced by per-object block operators,
/// written in carrier coordinates. Errors when the image of a basis
/// vector leaves the carrier.
fn restricted(
    input: &EndCarrier,
    output: &EndCarrier,
    ops: &[RatMatrix],
    context: &str,
) -> Result<RatMatrix> {
    let out_total = output.total_len();
    let mut mat = RatMatrix::zeros(output.space.dim(), input.space.dim());
    for (i, basis) in input.space.basis().iter().enumerate() {
        let mut stacked = vec![Rat::zero(); out_total];
        for ((ib, ob), op) in input.blocks.iter().zip(&output.blocks).zip(ops) {
            let seg = &basis[ib.offset..ib.offset + ib.len()];
            let out = op.mul_vec(seg)?;
            for (t, v) in out.into_iter().enumerate() {
                stacked[ob.offset + t] = v;
            }
        }
        let coords = output
            .space
            .coords(&stacked)
            .ok_or_else(|| Error::Closure(format!("{context} leaves the carrier")))?;
        for (r, v) in coords.into_iter().enumerate() {
            mat.set(r, i, v);
        }
    }
    Ok(mat)
}

/// The substitution matrix on carrier coordinates: objectwise single-
/// object composition of the block pair, re-coordinatized on the output
/// carrier.
fn carrier_comp(
    f: &BaseFunctor,
    carriers: &[EndCarrier],
    m: usize,
    n: usize,
    i: usize,
    dir: Dir,
) -> Result<RatMatrix> {
    let cm = &carriers[m];
    let cn = &carriers[n];
    let co = &carriers[m + n - 1];
    let per_obj: Vec<RatMatrix> = (0..f.source().num_objects())
        .map(|x| {
            let d = f.object(x).size();
            match dir {
                Dir::End => end_comp_matrix(d, m, n, i),
                Dir::CoEnd => coend_comp_matrix(d, m, n, i),
            }
        })
        .collect();
    let out_total = co.total_len();
    let km = cm.space.dim();
    let kn = cn.space.dim();
    let mut mat = RatMatrix::zeros(co.space.dim(), km * kn);
    for i1 in 0..km {
        for j1 in 0..kn {
            let mut stacked = vec![Rat::zero(); out_total];
            for (x, op) in per_obj.iter().enumerate() {
                let bx = &cm.blocks[x];
                let by = &cn.blocks[x];
                let xa = &cm.space.basis()[i1][bx.offset..bx.offset + bx.len()];
                let yb = &cn.space.basis()[j1][by.offset..by.offset + by.len()];
                let mut pair = Vec::with_capacity(xa.len() * yb.len());
                for a in xa {
                    for b in yb {
                        pair.push(a * b);
                    }
                }
                let out = op.mul_vec(&pair)?;
                let ob = &co.blocks[x];
                for (t, v) in out.into_iter().enumerate() {
                    stacked[ob.offset + t] = v;
                }
            }
            let coords = co.space.coords(&stacked).ok_or_else(|| {
                Error::Closure(format!("substitution ({m}, {n}, {i}) leaves the carrier"))
            })?;
            for (r, v) in coords.into_iter().enumerate() {
                mat.set(r, i1 * kn + j1, v);
            }
        }
    }
    Ok(mat)
}

fn functor_operad(f: &BaseFunctor, cap: usize, dir: Dir) -> Result<FunctorOperad> {
    if f.tag() != BaseTag::QVect {
        return Err(Error::Unsupported(
            "operadic ends are computed over the vector base".into(),
        ));
    }
    if cap < 1 {
        return Err(Error::invalid("arity cap must be at least 1"));
    }
    for x in 0..f.source().num_objects() {
        f.object(x)
            .size()
            .checked_pow(cap as u32 + 3)
            .ok_or_else(|| Error::invalid("object dimension overflows at this cap"))?;
    }
    let carriers: Vec<EndCarrier> = (0..=cap).map(|n| arity_carrier(f, n, dir)).collect();

    let mut components = Vec::with_capacity(cap + 1);
    for (n, carrier) in carriers.iter().enumerate() {
        let generators = (0..n.saturating_sub(1))
            .map(|k| {
                let ops: Vec<RatMatrix> = (0..f.source().num_objects())
                    .map(|x| {
                        let d = f.object(x).size();
                        let p =
                            perm_action_matrix(&Permutation::adjacent_transposition(n, k), d)?;
                        Ok(match dir {
                            Dir::End => precompose_operator(&p, d),
                            Dir::CoEnd => postcompose_operator(&p, d),
                        })
                    })
                    .collect::<Result<_>>()?;
                restricted(carrier, carrier, &ops, "the symmetric action")
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(SymComponent { dim: carrier.space.dim(), generators });
    }
    let seq = SymSequence::new(cap, components)?;

    let c1 = &carriers[1];
    let mut id_stacked = vec![Rat::zero(); c1.total_len()];
    for (x, block) in c1.blocks.iter().enumerate() {
        let id = RatMatrix::identity(f.object(x).size());
        for (t, v) in id.vectorize().into_iter().enumerate() {
            id_stacked[block.offset + t] = v;
        }
    }
    let unit = c1
        .space
        .coords(&id_stacked)
        .ok_or_else(|| Error::Closure("the identity family is not natural".into()))?;

    let mut comps = BTreeMap::new();
    for (m, n, i) in required_keys(cap) {
        comps.insert((m, n, i), carrier_comp(f, &carriers, m, n, i, dir)?);
    }
    let operad = TruncatedOperad::new(seq, unit, comps)?;
    Ok(FunctorOperad { functor: f.clone(), operad, carriers })
}

/// The endomorphism operad of `F`: arity `n` holds the natural families
/// of operators `F X^(x)n -> F X`.
pub fn endomorphism_operad(f: &BaseFunctor, cap: usize) -> Result<FunctorOperad> {
    functor_operad(f, cap, Dir::End)
}

/// The coendomorphism operad of `F`: arity `n` holds the natural
/// families of operators `F X -> F X^(x)n`.
pub fn coendomorphism_operad(f: &BaseFunctor, cap: usize) -> Result<FunctorOperad> {
    functor_operad(f, cap, Dir::CoEnd)
}
