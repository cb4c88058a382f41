//! The combinatorial Gelfand model on ⋆-self-dual diagrams.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::algebra::{j_class, j_classes, JClassId};
use crate::diagrams::{compose_unchecked, enumerate, Diagram, Family};
use crate::linalg::PolyMatrix;
use crate::scalars::DeltaPoly;
use crate::specht::RepMatrices;
use crate::symgroup::inv_stat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{0} is not a basis diagram of {1}")]
    NotMember(Diagram, Family),
    #[error("{0} is not self-dual")]
    NotSelfDual(Diagram),
}

/// Self-dual basis diagrams, grouped by J-class (highest rank first) and in
/// canonical order inside each group.
#[derive(Debug, Clone)]
pub struct ModelBasis {
    pub family: Family,
    pub n: usize,
    pub blocks: Vec<(JClassId, Vec<Diagram>)>,
    pub elements: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
}

impl ModelBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, iota: &Diagram) -> Option<usize> {
        self.index.get(iota).copied()
    }
}

pub fn model_basis(fam: &Family, n: usize) -> ModelBasis {
    let blocks: Vec<(JClassId, Vec<Diagram>)> = j_classes(fam, n)
        .into_iter()
        .map(|(j, members)| (j, members.into_iter().filter(Diagram::is_self_dual).collect()))
        .collect();
    let elements: Vec<Diagram> = blocks.iter().flat_map(|(_, b)| b.iter().cloned()).collect();
    let index = elements.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    ModelBasis { family: *fam, n, blocks, elements, index }
}

/// A vector of the model in the basis `v_ι`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModelVector {
    pub coords: BTreeMap<Diagram, DeltaPoly>,
}

impl ModelVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(iota: Diagram) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(iota, DeltaPoly::one());
        Self { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// The single term `±δ^degree v_target` of a nonzero action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelTerm {
    pub negative: bool,
    pub degree: u32,
    pub target: Diagram,
}

impl ModelTerm {
    pub fn coefficient(&self) -> DeltaPoly {
        DeltaPoly::signed_power(self.negative, self.degree)
    }
}

/// `τ · v_ι` as a single signed monomial term, or `None` when it vanishes.
///
/// The action is nonzero only when stacking keeps the rank of `ι` (and its a-rank
/// for the partial walled families). The sign counts the pairs of lines of `ι`
/// that the permutation `π_{τ∘ι} π_ι` reverses.
pub fn model_term(fam: &Family, tau: &Diagram, iota: &Diagram) -> Option<ModelTerm> {
    let r = compose_unchecked(tau, iota);
    if r.product.rank() != iota.rank() {
        return None;
    }
    if fam.tag().is_partial_walled() {
        let a = fam.split().expect("walled");
        if r.product.a_rank_unchecked(a) != iota.a_rank_unchecked(a) {
            return None;
        }
    }
    let pi = iota.line_permutation();
    let moved = &r.product.line_permutation() * &pi;
    let count = inv_stat(&moved, &pi).expect("self-dual diagrams have involutive line permutations");
    let target = compose_unchecked(&r.product, &tau.star()).product;
    Some(ModelTerm { negative: count % 2 == 1, degree: r.closed as u32, target })
}

pub fn model_act(fam: &Family, tau: &Diagram, iota: &Diagram) -> Result<ModelVector, ModelError> {
    if !fam.contains(tau) {
        return Err(ModelError::NotMember(tau.clone(), *fam));
    }
    if !fam.contains(iota) || iota.n() != tau.n() {
        return Err(ModelError::NotMember(iota.clone(), *fam));
    }
    if !iota.is_self_dual() {
        return Err(ModelError::NotSelfDual(iota.clone()));
    }
    Ok(match model_term(fam, tau, iota) {
        None => ModelVector::zero(),
        Some(t) => {
            let mut coords = BTreeMap::new();
            coords.insert(t.target.clone(), t.coefficient());
            ModelVector { coords }
        }
    })
}

/// Matrix of `τ` on the model basis; column `c` is `τ · v_{elements[c]}`.
pub fn model_matrix(basis: &ModelBasis, tau: &Diagram) -> PolyMatrix {
    let dim = basis.len();
    let mut m = PolyMatrix::zeros(dim, dim);
    for (c, iota) in basis.elements.iter().enumerate() {
        if let Some(t) = model_term(&basis.family, tau, iota) {
            let row = basis.index_of(&t.target).expect("targets are self-dual basis diagrams");
            m[(row, c)] = t.coefficient();
        }
    }
    m
}

pub fn model_matrices(fam: &Family, n: usize) -> RepMatrices {
    let basis = model_basis(fam, n);
    let entries = enumerate(fam, n, None)
        .into_iter()
        .map(|tau| {
            let m = model_matrix(&basis, &tau);
            (tau, m)
        })
        .collect();
    RepMatrices { dim: basis.len(), entries }
}

/// Whether `ι` is grouped under its own J-class.
pub fn grouping_is_consistent(basis: &ModelBasis) -> bool {
    basis
        .blocks
        .iter()
        .all(|(j, b)| b.iter().all(|iota| iota.is_self_dual() && j_class(iota, &basis.family) == *j))
}
