use crate::error::{Error, Result};
use crate::linalg::matrix::RatMatrix;
use crate::linalg::rat::Rat;
use num::One;

/// Permutation of `{0, .., n-1}` in one-line notation: `images[k]` is the
/// image of `k`.
///
/// Composition is function composition: `(s.compose(&t))(k) = s(t(k))`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Adjacent transposition swapping `k` and `k + 1` inside `{0,..,n-1}`.
    pub fn adjacent_transposition(n: usize, k: usize) -> Self {
        assert!(k + 1 < n, "transposition index out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(k, k + 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composition of unequal arities");
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn sign(&self) -> i64 {
        let n = self.n();
        let mut inversions = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Writes `self` as a product of adjacent transpositions,
    /// `self = s[w[0]] . s[w[1]] . ... . s[w.last()]` under function
    /// composition (rightmost factor applied first).
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        let mut word = Vec::new();
        loop {
            let Some(k) = (0..v.len().saturating_sub(1)).find(|&k| v[k] > v[k + 1]) else {
                break;
            };
            v.swap(k, k + 1);
            word.push(k);
        }
        word.reverse();
        word
    }

    /// All permutations of `{0,..,n-1}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if images.len() == n {
                out.push(Permutation {
                    images: images.clone(),
                });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    images.push(v);
                    rec(n, images, used, out);
                    images.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut images, &mut used, &mut out);
        out
    }

    /// Lexicographic index of this permutation within [`Permutation::all`].
    pub fn lex_index(&self) -> usize {
        let n = self.n();
        let mut remaining: Vec<usize> = (0..n).collect();
        let mut index = 0usize;
        let mut factorial: usize = (1..n.max(1)).product();
        for (k, &v) in self.images.iter().enumerate() {
            let pos = remaining.iter().position(|&r| r == v).unwrap();
            index += pos * factorial;
            remaining.remove(pos);
            if k + 1 < n {
                factorial /= n - 1 - k;
            }
        }
        index
    }
}

/// Action of `sigma` on the `n`-fold tensor power of `Q^dim` by place
/// permutation: basis vector `e_{i_0} (x) .. (x) e_{i_{n-1}}` maps to the
/// basis vector with digits `i_{sigma(0)}, .., i_{sigma(n-1)}`.
///
/// This is a right action on tensors:
/// `perm_action_matrix(s.compose(&t), d) = perm_action_matrix(t, d) * perm_action_matrix(s, d)`.
pub fn perm_action_matrix(sigma: &Permutation, dim: usize) -> Result<RatMatrix> {
    let n = sigma.n();
    let total = dim
        .checked_pow(u32::try_from(n).map_err(|_| Error::invalid("arity out of range"))?)
        .ok_or_else(|| Error::invalid(format!("tensor power {dim}^{n} overflows")))?;
    let mut m = RatMatrix::zeros(total, total);
    let mut digits = vec![0usize; n];
    for col in 0..total {
        // digits of col, most significant first
        let mut rest = col;
        for k in (0..n).rev() {
            digits[k] = rest % dim.max(1);
            rest /= dim.max(1);
        }
        let mut row = 0usize;
        for k in 0..n {
            row = row * dim + digits[sigma.apply(k)];
        }
        m.set(row, col, Rat::one());
    }
    Ok(m)
}
