//! Exact linear maps between free modules of finite rank.
//!
//! A [`LinMap`] is the matrix of a morphism in the underlying symmetric
//! category: `cod × dom` entries over a [`Ring`]. Tensor products use one
//! fixed basis order, left factor major (`a_i ⊗ b_j` has index
//! `i · rank(B) + j`). With that order the monoidal structure is strict, so
//! associativity and unit laws hold entry for entry.
//!
//! Storage is by sparse columns. String-diagram composites routinely pass
//! through objects of rank `r^6` or more while touching only a handful of
//! entries per column, and the sparse form keeps those cheap.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinMapError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("expected an endomorphism of the unit (1 -> 1), found {cod} x {dom}")]
    NotUnitEndomorphism { cod: usize, dom: usize },
    #[error("entry ({row}, {col}) out of range for a {cod} x {dom} map")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        cod: usize,
        dom: usize,
    },
}

#[derive(Clone, PartialEq, Eq)]
pub struct LinMap<R> {
    dom: usize,
    cod: usize,
    /// `cols[j]` lists the nonzero entries of column `j`, rows ascending.
    cols: Vec<Vec<(usize, R)>>,
}

/// Splits `index` into mixed-radix digits, most significant factor first.
pub fn multi_index(mut index: usize, ranks: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; ranks.len()];
    for (slot, &r) in digits.iter_mut().zip(ranks).rev() {
        *slot = index % r;
        index /= r;
    }
    digits
}

/// Inverse of [`multi_index`].
pub fn flat_index(digits: &[usize], ranks: &[usize]) -> usize {
    digits.iter().zip(ranks).fold(0, |acc, (d, r)| acc * r + d)
}

fn collect_column<R: Ring>(acc: BTreeMap<usize, R>) -> Vec<(usize, R)> {
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

fn accumulate<R: Ring>(acc: &mut BTreeMap<usize, R>, row: usize, value: R) {
    match acc.get_mut(&row) {
        Some(slot) => *slot = slot.add(&value),
        None => {
            acc.insert(row, value);
        }
    }
}

impl<R: Ring> LinMap<R> {
    pub fn zero(cod: usize, dom: usize) -> Self {
        LinMap {
            dom,
            cod,
            cols: vec![Vec::new(); dom],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            dom: n,
            cod: n,
            cols: (0..n).map(|i| vec![(i, R::one())]).collect(),
        }
    }

    /// `c · id_n`.
    pub fn scalar(n: usize, c: R) -> Self {
        Self::identity(n).scale(&c)
    }

    pub fn from_fn<F>(cod: usize, dom: usize, mut entry: F) -> Self
    where
        F: FnMut(usize, usize) -> R,
    {
        let cols = (0..dom)
            .map(|j| {
                (0..cod)
                    .map(|i| (i, entry(i, j)))
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        LinMap { dom, cod, cols }
    }

    /// Builds a map from `(row, col, value)` triples; repeated positions are
    /// summed.
    pub fn from_entries<I>(cod: usize, dom: usize, entries: I) -> Result<Self, LinMapError>
    where
        I: IntoIterator<Item = (usize, usize, R)>,
    {
        let mut acc: Vec<BTreeMap<usize, R>> = vec![BTreeMap::new(); dom];
        for (row, col, value) in entries {
            if row >= cod || col >= dom {
                return Err(LinMapError::IndexOutOfRange { row, col, cod, dom });
            }
            accumulate(&mut acc[col], row, value);
        }
        Ok(LinMap {
            dom,
            cod,
            cols: acc.into_iter().map(collect_column).collect(),
        })
    }

    /// The map sending basis vector `j` to basis vector `image[j]`.
    pub fn from_basis_map(cod: usize, image: &[usize]) -> Self {
        LinMap {
            dom: image.len(),
            cod,
            cols: image.iter().map(|&i| vec![(i, R::one())]).collect(),
        }
    }

    pub fn dom_rank(&self) -> usize {
        self.dom
    }

    pub fn cod_rank(&self) -> usize {
        self.cod
    }

    pub fn get(&self, row: usize, col: usize) -> R {
        self.cols[col]
            .binary_search_by_key(&row, |(i, _)| *i)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_else(|_| R::zero())
    }

    /// Nonzero entries of one column as `(row, value)`, rows ascending.
    pub fn column(&self, col: usize) -> &[(usize, R)] {
        &self.cols[col]
    }

    /// All nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, x)| (*i, j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// `self ∘ f`: apply `f` first.
    pub fn compose(&self, f: &LinMap<R>) -> Result<Self, LinMapError> {
        if f.cod != self.dom {
            return Err(LinMapError::RankMismatch {
                expected: self.dom,
                found: f.cod,
            });
        }
        let cols = f
            .cols
            .iter()
            .map(|fcol| {
                let mut acc = BTreeMap::new();
                for (k, fk) in fcol {
                    for (i, gik) in &self.cols[*k] {
                        accumulate(&mut acc, *i, gik.mul(fk));
                    }
                }
                collect_column(acc)
            })
            .collect();
        Ok(LinMap {
            dom: f.dom,
            cod: self.cod,
            cols,
        })
    }

    /// `g ∘ self`: diagrammatic order, reading a picture top to bottom.
    pub fn then(&self, g: &LinMap<R>) -> Result<Self, LinMapError> {
        g.compose(self)
    }

    /// Kronecker product, `self` as the outer (left) factor.
    pub fn tensor(&self, other: &LinMap<R>) -> Self {
        let mut cols = Vec::with_capacity(self.dom * other.dom);
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i1, x) in a {
                    for (i2, y) in b {
                        col.push((i1 * other.cod + i2, x.mul(y)));
                    }
                }
                col.retain(|(_, z)| !z.is_zero());
                cols.push(col);
            }
        }
        LinMap {
            dom: self.dom * other.dom,
            cod: self.cod * other.cod,
            cols,
        }
    }

    /// Tensor product of a list of maps; the empty list gives `id_1`.
    pub fn tensor_all<'a, I>(maps: I) -> Self
    where
        I: IntoIterator<Item = &'a LinMap<R>>,
    {
        maps.into_iter()
            .fold(Self::identity(1), |acc, m| acc.tensor(m))
    }

    /// The symmetry `P: A ⊗ B → B ⊗ A` for `rank A = m`, `rank B = n`.
    pub fn swap(m: usize, n: usize) -> Self {
        let image: Vec<usize> = (0..m * n).map(|k| (k % n) * m + k / n).collect();
        Self::from_basis_map(m * n, &image)
    }

    /// Reorders tensor factors: output factor `j` is input factor `perm[j]`.
    pub fn permute_factors(ranks: &[usize], perm: &[usize]) -> Self {
        assert_eq!(ranks.len(), perm.len(), "permutation length");
        let total: usize = ranks.iter().product();
        let out_ranks: Vec<usize> = perm.iter().map(|&p| ranks[p]).collect();
        let image: Vec<usize> = (0..total)
            .map(|k| {
                let digits = multi_index(k, ranks);
                let out: Vec<usize> = perm.iter().map(|&p| digits[p]).collect();
                flat_index(&out, &out_ranks)
            })
            .collect();
        Self::from_basis_map(total, &image)
    }

    /// The single entry of an endomorphism of the unit object.
    pub fn scalar_of(&self) -> Result<R, LinMapError> {
        if self.dom != 1 || self.cod != 1 {
            return Err(LinMapError::NotUnitEndomorphism {
                cod: self.cod,
                dom: self.dom,
            });
        }
        Ok(self.get(0, 0))
    }

    pub fn scale(&self, c: &R) -> Self {
        LinMap {
            dom: self.dom,
            cod: self.cod,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|(i, x)| (*i, x.mul(c)))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &LinMap<R>) -> Result<Self, LinMapError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(LinMapError::RankMismatch {
                expected: self.dom * self.cod,
                found: other.dom * other.cod,
            });
        }
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc = BTreeMap::new();
                for (i, x) in a.iter().chain(b) {
                    accumulate(&mut acc, *i, x.clone());
                }
                collect_column(acc)
            })
            .collect();
        Ok(LinMap {
            dom: self.dom,
            cod: self.cod,
            cols,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.cod];
        for (i, j, x) in self.entries() {
            cols[i].push((j, x.clone()));
        }
        LinMap {
            dom: self.cod,
            cod: self.dom,
            cols,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, col)| col.len() == 1 && col[0].0 == j && col[0].1.is_one())
    }

    /// `Some(c)` when the map is `c · id`.
    pub fn as_scalar_multiple(&self) -> Option<R> {
        if self.dom != self.cod {
            return None;
        }
        if self.dom == 0 {
            return Some(R::one());
        }
        let c = self.get(0, 0);
        let all = self
            .cols
            .iter()
            .enumerate()
            .all(|(j, col)| match col.as_slice() {
                [] => c.is_zero(),
                [(i, x)] => *i == j && *x == c,
                _ => false,
            });
        all.then_some(c)
    }

    /// Each column has exactly one entry, equal to one.
    pub fn is_basis_map(&self) -> bool {
        self.cols
            .iter()
            .all(|col| col.len() == 1 && col[0].1.is_one())
    }

    /// First position `(row, col)`, by column then row, where two maps of
    /// equal shape differ.
    pub fn first_difference(&self, other: &LinMap<R>) -> Option<(usize, usize)> {
        if self.dom != other.dom || self.cod != other.cod {
            return Some((0, 0));
        }
        for (j, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a != b {
                let row = a
                    .iter()
                    .zip(b)
                    .find(|(x, y)| x != y)
                    .map(|(x, y)| x.0.min(y.0))
                    .unwrap_or_else(|| {
                        let n = a.len().min(b.len());
                        a.get(n).or(b.get(n)).map(|e| e.0).unwrap_or(0)
                    });
                return Some((row, j));
            }
        }
        None
    }

    /// `(f_1 ⊗ … ⊗ f_k) ∘ state` without materializing the tensor product.
    pub fn apply_tensor(factors: &[&LinMap<R>], state: &LinMap<R>) -> Result<Self, LinMapError> {
        let dom_ranks: Vec<usize> = factors.iter().map(|f| f.dom).collect();
        let cod_ranks: Vec<usize> = factors.iter().map(|f| f.cod).collect();
        let dom: usize = dom_ranks.iter().product();
        if dom != state.cod {
            return Err(LinMapError::RankMismatch {
                expected: dom,
                found: state.cod,
            });
        }
        let cod: usize = cod_ranks.iter().product();
        let cols = state
            .cols
            .iter()
            .map(|col| {
                let mut acc = BTreeMap::new();
                for (idx, val) in col {
                    let digits = multi_index(*idx, &dom_ranks);
                    let mut partial = vec![(0usize, val.clone())];
                    for ((f, d), c) in factors.iter().zip(&digits).zip(&cod_ranks) {
                        let image = f.column(*d);
                        let mut next = Vec::with_capacity(partial.len() * image.len());
                        for (r, x) in &partial {
                            for (i, y) in image {
                                next.push((r * c + i, x.mul(y)));
                            }
                        }
                        partial = next;
                    }
                    for (row, x) in partial {
                        accumulate(&mut acc, row, x);
                    }
                }
                collect_column(acc)
            })
            .collect();
        Ok(LinMap {
            dom: state.dom,
            cod,
            cols,
        })
    }

    /// Entrywise ring change.
    pub fn map_entries<S: Ring, F>(&self, mut f: F) -> LinMap<S>
    where
        F: FnMut(&R) -> S,
    {
        LinMap {
            dom: self.dom,
            cod: self.cod,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|(i, x)| (*i, f(x)))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect(),
        }
    }
}

impl<R: Ring> fmt::Display for LinMap<R> {
    /// Row-major, one bracketed row per line, entries in canonical form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.cod {
            f.write_str("[")?;
            for j in 0..self.dom {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for LinMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{}", self.cod, self.dom)?;
        fmt::Display::fmt(self, f)
    }
}
