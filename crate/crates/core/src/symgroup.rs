//! Symmetric groups: permutations, the involution model, partitions, standard
//! tableaux and Young's natural representation.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalars::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymGroupError {
    #[error("{0:?} is not a permutation of 0..{len}", len = .0.len())]
    NotAPermutation(Vec<usize>),
    #[error("{0} is not an involution")]
    NotAnInvolution(Permutation),
    #[error("permutations of different degree: {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("{0} is not a partition")]
    NotAPartition(String),
    #[error("{perm} does not preserve the blocks of S_{left} x S_{right}")]
    NotInSubgroup { perm: Permutation, left: usize, right: usize },
}

/// A bijection of `{0, ..., k-1}`; displayed one-based in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self { images: (0..k).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SymGroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(SymGroupError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// From one-based images, as in `[2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self, SymGroupError> {
        let zero: Vec<usize> = images.iter().map(|&i| i.wrapping_sub(1)).collect();
        Self::from_images(zero)
    }

    /// The transposition of `i` and `j` (zero-based) in `S_k`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i, j);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p] = i;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| self.images[p] == i)
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, SymGroupError> {
        if self.len() != other.len() {
            return Err(SymGroupError::DegreeMismatch(self.len(), other.len()));
        }
        Ok(Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// All permutations of degree `k` in lexicographic order of their images.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            out.push(Self { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
    }

    /// Whether the permutation maps `0..left` onto itself.
    pub fn preserves_split(&self, left: usize) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| (i < left) == (p < left))
    }

    /// Restriction to positions `range`, shifted down to start at zero.
    pub(crate) fn restrict(&self, start: usize, end: usize) -> Permutation {
        Self {
            images: (start..end).map(|i| self.images[i] - start).collect(),
        }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutations of equal degree")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", one.join(" "))
    }
}

/// Number of pairs `i < j` with `s(i) = j` and `pi(i) > pi(j)`.
pub fn inv_stat(pi: &Permutation, s: &Permutation) -> Result<usize, SymGroupError> {
    if pi.len() != s.len() {
        return Err(SymGroupError::DegreeMismatch(pi.len(), s.len()));
    }
    if !s.is_involution() {
        return Err(SymGroupError::NotAnInvolution(s.clone()));
    }
    Ok((0..s.len())
        .filter(|&i| {
            let j = s.apply(i);
            i < j && pi.apply(i) > pi.apply(j)
        })
        .count())
}

/// `pi · v_s = (-1)^{inv_stat(pi, s)} v_{pi s pi^-1}`; returns the sign and target.
pub fn sym_model_action(pi: &Permutation, s: &Permutation) -> Result<(i8, Permutation), SymGroupError> {
    let count = inv_stat(pi, s)?;
    let target = &(pi * s) * &pi.inverse();
    let sign = if count % 2 == 0 { 1 } else { -1 };
    Ok((sign, target))
}

/// Involutions of degree `k` in lexicographic order.
pub fn involutions(k: usize) -> Vec<Permutation> {
    Permutation::all(k).into_iter().filter(Permutation::is_involution).collect()
}

/// Number of involutions of degree `k`.
pub fn involution_count(k: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64); // I(0), I(1)
    if k == 0 {
        return 1;
    }
    for m in 2..=k as u64 {
        let next = b + (m - 1) * a;
        a = b;
        b = next;
    }
    b
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymGroupError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(SymGroupError::NotAPartition(format!("{parts:?}")))
        }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect()
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

/// Partitions of `k`, largest first part first: `(3), (2,1), (1,1,1)`.
pub fn partitions(k: usize) -> Vec<IntPartition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if rest == 0 {
            out.push(IntPartition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// `f^lambda` by the hook length formula.
pub fn syt_count(lambda: &IntPartition) -> u64 {
    let cols = lambda.conjugate();
    let k = lambda.size() as u64;
    let mut num: u128 = (1..=k as u128).product();
    let mut den: u128 = 1;
    for (r, &len) in lambda.parts.iter().enumerate() {
        for (c, &col_len) in cols.iter().enumerate().take(len) {
            let hook = (len - c - 1) + (col_len - r - 1) + 1;
            den *= hook as u128;
        }
    }
    num /= den;
    num as u64
}

/// A filling of a Young diagram, row by row, with entries `0..k`.
pub type Tableau = Vec<Vec<usize>>;

/// Standard tableaux of shape `lambda`, ordered lexicographically by row reading word.
pub fn standard_tableaux(lambda: &IntPartition) -> Vec<Tableau> {
    let k = lambda.size();
    let mut out = Vec::new();
    let mut rows: Tableau = lambda.parts.iter().map(|_| Vec::new()).collect();
    fn place(x: usize, k: usize, shape: &[usize], rows: &mut Tableau, out: &mut Vec<Tableau>) {
        if x == k {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let above_ok = r == 0 || rows[r - 1].len() > len;
            if len < shape[r] && above_ok {
                rows[r].push(x);
                place(x + 1, k, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    place(0, k, &lambda.parts, &mut rows, &mut out);
    out.sort_by_key(|t| t.concat());
    out
}

/// A finite-dimensional representation of a subgroup of `S_k` given by exact matrices.
pub trait GroupRep {
    /// Degree `k` of the permutations acted on.
    fn degree(&self) -> usize;
    fn dim(&self) -> usize;
    /// Matrix of `g`; `g` must lie in the represented group.
    fn matrix_of(&self, g: &Permutation) -> Result<Matrix, SymGroupError>;
}

/// Young's natural representation of `S_k` on standard polytabloids.
#[derive(Debug, Clone)]
pub struct SymRep {
    pub lambda: IntPartition,
    pub dim: usize,
    pub tableaux: Vec<Tableau>,
    /// Matrix of the adjacent transposition `(i, i+1)` at index `i`.
    pub generator_matrices: Vec<Matrix>,
    tabloid_index: HashMap<Vec<usize>, usize>,
    /// Inverse of the polytabloid coordinates on the rows of the standard tabloids.
    solve: Matrix,
    standard_rows: Vec<usize>,
}

/// Row index of each entry, which identifies the tabloid of a tableau.
fn tabloid_of(t: &Tableau, k: usize) -> Vec<usize> {
    let mut row_of = vec![0; k];
    for (r, row) in t.iter().enumerate() {
        for &x in row {
            row_of[x] = r;
        }
    }
    row_of
}

fn column_group(t: &Tableau, lambda: &IntPartition) -> Vec<(Vec<usize>, bool)> {
    // Each element is a relabeling of the entries together with its sign (true = odd).
    let k = lambda.size();
    let columns: Vec<Vec<usize>> = lambda
        .conjugate()
        .iter()
        .enumerate()
        .map(|(c, &len)| (0..len).map(|r| t[r][c]).collect())
        .collect();
    let mut acc: Vec<(Vec<usize>, bool)> = vec![((0..k).collect(), false)];
    for col in &columns {
        let mut next = Vec::new();
        for perm in Permutation::all(col.len()) {
            let odd = parity_odd(&perm);
            for (base, sign) in &acc {
                let mut m = base.clone();
                for (i, &x) in col.iter().enumerate() {
                    m[x] = base[col[perm.apply(i)]];
                }
                next.push((m, sign ^ odd));
            }
        }
        acc = next;
    }
    acc
}

fn parity_odd(p: &Permutation) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p.apply(j);
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 1
}

impl SymRep {
    pub fn new(lambda: &IntPartition) -> Self {
        let k = lambda.size();
        let tableaux = standard_tableaux(lambda);
        let dim = tableaux.len();
        let mut tabloid_index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut rep = Self {
            lambda: lambda.clone(),
            dim,
            tableaux: tableaux.clone(),
            generator_matrices: Vec::new(),
            tabloid_index: HashMap::new(),
            solve: Matrix::identity(0),
            standard_rows: Vec::new(),
        };
        let columns: Vec<HashMap<usize, Rational>> = tableaux
            .iter()
            .map(|t| rep.polytabloid(t, &mut tabloid_index))
            .collect();
        let standard_rows: Vec<usize> = tableaux.iter().map(|t| tabloid_index[&tabloid_of(t, k)]).collect();
        let mut square = Matrix::zeros(dim, dim);
        for (j, col) in columns.iter().enumerate() {
            for (i, &row) in standard_rows.iter().enumerate() {
                if let Some(v) = col.get(&row) {
                    square[(i, j)] = v.clone();
                }
            }
        }
        rep.solve = square.inverse().expect("standard polytabloids are independent");
        rep.standard_rows = standard_rows;
        rep.tabloid_index = tabloid_index;
        rep.generator_matrices = (0..k.saturating_sub(1))
            .map(|i| rep.matrix_of_perm(&Permutation::transposition(k, i, i + 1)))
            .collect();
        rep
    }

    fn polytabloid(&self, t: &Tableau, index: &mut HashMap<Vec<usize>, usize>) -> HashMap<usize, Rational> {
        let k = self.lambda.size();
        let mut out: HashMap<usize, Rational> = HashMap::new();
        for (relabel, odd) in column_group(t, &self.lambda) {
            let moved: Tableau = t.iter().map(|row| row.iter().map(|&x| relabel[x]).collect()).collect();
            let key = tabloid_of(&moved, k);
            let next = index.len();
            let slot = *index.entry(key).or_insert(next);
            let entry = out.entry(slot).or_insert_with(Rational::zero);
            if odd {
                *entry -= Rational::one();
            } else {
                *entry += Rational::one();
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn matrix_of_perm(&self, g: &Permutation) -> Matrix {
        let mut index = self.tabloid_index.clone();
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (j, t) in self.tableaux.iter().enumerate() {
            let moved: Tableau = t.iter().map(|row| row.iter().map(|&x| g.apply(x)).collect()).collect();
            let coords = self.polytabloid(&moved, &mut index);
            let rhs: Vec<Rational> = self
                .standard_rows
                .iter()
                .map(|r| coords.get(r).cloned().unwrap_or_else(Rational::zero))
                .collect();
            let x = self.solve.mul_vec(&rhs);
            for (i, v) in x.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }
}

impl GroupRep for SymRep {
    fn degree(&self) -> usize {
        self.lambda.size()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn matrix_of(&self, g: &Permutation) -> Result<Matrix, SymGroupError> {
        if g.len() != self.degree() {
            return Err(SymGroupError::DegreeMismatch(g.len(), self.degree()));
        }
        Ok(self.matrix_of_perm(g))
    }
}

pub fn specht_rep(lambda: &IntPartition) -> SymRep {
    SymRep::new(lambda)
}

/// Outer tensor product of representations of `S_k1` and `S_k2`, a representation
/// of the Young subgroup `S_k1 x S_k2` of `S_{k1+k2}`.
#[derive(Debug, Clone)]
pub struct ProductRep {
    pub left: SymRep,
    pub right: SymRep,
}

impl GroupRep for ProductRep {
    fn degree(&self) -> usize {
        self.left.degree() + self.right.degree()
    }

    fn dim(&self) -> usize {
        self.left.dim * self.right.dim
    }

    fn matrix_of(&self, g: &Permutation) -> Result<Matrix, SymGroupError> {
        let k1 = self.left.degree();
        if g.len() != self.degree() {
            return Err(SymGroupError::DegreeMismatch(g.len(), self.degree()));
        }
        if !g.preserves_split(k1) {
            return Err(SymGroupError::NotInSubgroup {
                perm: g.clone(),
                left: k1,
                right: self.right.degree(),
            });
        }
        let a = self.left.matrix_of(&g.restrict(0, k1))?;
        let b = self.right.matrix_of(&g.restrict(k1, g.len()))?;
        Ok(a.kron(&b))
    }
}

pub fn product_rep(r1: &SymRep, r2: &SymRep) -> ProductRep {
    ProductRep {
        left: r1.clone(),
        right: r2.clone(),
    }
}

/// The one-dimensional representation of the trivial group on `degree` points.
#[derive(Debug, Clone)]
pub struct TrivialRep {
    pub degree: usize,
}

impl GroupRep for TrivialRep {
    fn degree(&self) -> usize {
        self.degree
    }

    fn dim(&self) -> usize {
        1
    }

    fn matrix_of(&self, g: &Permutation) -> Result<Matrix, SymGroupError> {
        if g.len() != self.degree || !g.is_identity() {
            return Err(SymGroupError::NotInSubgroup {
                perm: g.clone(),
                left: 0,
                right: 0,
            });
        }
        Ok(Matrix::identity(1))
    }
}

/// Matrix of `v_s -> pi · v_s` on the involution basis of `S_k`.
pub fn sym_model_matrix(pi: &Permutation, basis: &[Permutation]) -> Matrix {
    let index: HashMap<&Permutation, usize> = basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = Matrix::zeros(basis.len(), basis.len());
    for (j, s) in basis.iter().enumerate() {
        let (sign, target) = sym_model_action(pi, s).expect("basis of involutions");
        m[(index[&target], j)] = rat(sign as i64);
    }
    m
}
