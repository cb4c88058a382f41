//! Cell modules and Specht modules as explicit action matrices.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{group_of, j_class, left_class_of, GroupDescriptor, JClassId, SimpleLabel};
use crate::diagrams::{compose_unchecked, enumerate, Diagram, Family, FamilyTag, Node};
use crate::linalg::{Matrix, PolyMatrix};
use crate::scalars::{rat, DeltaPoly, Rational, ScalarError};
use crate::symgroup::{product_rep, specht_rep, GroupRep, Permutation, SymGroupError, TrivialRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpechtError {
    #[error("{0} does not occur in {1}")]
    NoSuchClass(String, Family),
    #[error("label {label} is not a simple module of {group}")]
    BadLabel { label: String, group: GroupDescriptor },
    #[error("{perm} is not in {group}")]
    NotInGroup { perm: Permutation, group: GroupDescriptor },
    #[error(transparent)]
    Group(#[from] SymGroupError),
}

/// Action matrices, one per algebra basis diagram, over `Q[δ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrices {
    pub dim: usize,
    pub entries: Vec<(Diagram, PolyMatrix)>,
}

impl RepMatrices {
    pub fn matrix(&self, d: &Diagram) -> Option<&PolyMatrix> {
        self.entries.iter().find(|(e, _)| e == d).map(|(_, m)| m)
    }

    pub fn evaluate(&self, delta: &Rational) -> Result<Vec<(Diagram, Matrix)>, ScalarError> {
        self.entries
            .iter()
            .map(|(d, m)| Ok((d.clone(), m.evaluate(delta)?)))
            .collect()
    }
}

fn realizable(fam: &Family, j: &JClassId) -> Result<(), SpechtError> {
    let bad = || SpechtError::NoSuchClass(j.to_string(), *fam);
    if j.family != *fam || j.rank > j.n || !fam.accepts_size(j.n) {
        return Err(bad());
    }
    if fam.tag().is_partial_walled() != j.a_rank.is_some() {
        return Err(bad());
    }
    Ok(())
}

/// The self-dual ∘-idempotent of the given class used to pick a left class.
pub fn rank_idempotent(fam: &Family, j: &JClassId) -> Result<Diagram, SpechtError> {
    realizable(fam, j)?;
    let (n, k) = (j.n, j.rank);
    let bad = || SpechtError::NoSuchClass(j.to_string(), *fam);
    let line = |i: usize| vec![Node::top(i), Node::bottom(i)];
    let single = |i: usize| vec![vec![Node::top(i)], vec![Node::bottom(i)]];
    let arc = |i: usize, m: usize| vec![vec![Node::top(i), Node::top(m)], vec![Node::bottom(i), Node::bottom(m)]];
    let mut parts: Vec<Vec<Node>> = Vec::new();
    match fam.tag() {
        FamilyTag::P | FamilyTag::PTL => {
            if k == 0 {
                parts.push((1..=n).map(Node::top).collect());
                parts.push((1..=n).map(Node::bottom).collect());
            } else {
                parts.extend((1..k).map(line));
                parts.push((k..=n).map(Node::top).chain((k..=n).map(Node::bottom)).collect());
            }
        }
        FamilyTag::B | FamilyTag::TL => {
            if (n - k) % 2 != 0 {
                return Err(bad());
            }
            parts.extend((1..=k).map(line));
            for i in (k + 1..=n).step_by(2) {
                parts.extend(arc(i, i + 1));
            }
        }
        FamilyTag::PB | FamilyTag::Motzkin => {
            parts.extend((1..=k).map(line));
            for i in k + 1..=n {
                parts.extend(single(i));
            }
        }
        FamilyTag::WB | FamilyTag::WTL => {
            let a = fam.split().expect("walled");
            if (n - k) % 2 != 0 || (n - k) / 2 > a.min(n - a) {
                return Err(bad());
            }
            let m = (n - k) / 2;
            parts.extend((1..=a - m).map(line));
            for t in 0..m {
                parts.extend(arc(a - t, a + 1 + t));
            }
            parts.extend((a + 1 + m..=n).map(line));
        }
        FamilyTag::WPB | FamilyTag::WPTL => {
            let a = fam.split().expect("walled");
            let r = j.a_rank.expect("checked above");
            if r > a || k < r || k - r > n - a {
                return Err(bad());
            }
            for i in 1..=n {
                let is_line = i <= r || (i > a && i <= a + k - r);
                if is_line {
                    parts.push(line(i));
                } else {
                    parts.extend(single(i));
                }
            }
        }
    }
    let tau = Diagram::from_parts(n, &parts).map_err(|_| bad())?;
    if !fam.contains(&tau) || j_class(&tau, fam) != *j {
        return Err(bad());
    }
    Ok(tau)
}

/// The span of a left class with the truncated left multiplication.
#[derive(Debug, Clone)]
pub struct CellModule {
    pub family: Family,
    pub n: usize,
    pub j: JClassId,
    pub group: GroupDescriptor,
    pub basis: Vec<Diagram>,
    pub action: RepMatrices,
    index: HashMap<Diagram, usize>,
}

impl CellModule {
    pub fn index_of(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).copied()
    }
}

/// Cell module of an arbitrary left class, given by one of its members.
pub fn cell_module_of(fam: &Family, rho: &Diagram) -> CellModule {
    let j = j_class(rho, fam);
    let basis = left_class_of(rho, fam);
    let index: HashMap<Diagram, usize> = basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    let dim = basis.len();
    let entries = enumerate(fam, j.n, None)
        .into_iter()
        .map(|tau| {
            let mut m = PolyMatrix::zeros(dim, dim);
            for (c, r) in basis.iter().enumerate() {
                let res = compose_unchecked(&tau, r);
                if let Some(&row) = index.get(&res.product) {
                    m[(row, c)] = DeltaPoly::monomial(rat(1), res.closed as u32);
                }
            }
            (tau, m)
        })
        .collect();
    CellModule {
        family: *fam,
        n: j.n,
        j,
        group: group_of(&j, rho),
        basis,
        action: RepMatrices { dim, entries },
        index,
    }
}

/// Cell module of the left class containing the rank idempotent of `j`.
pub fn cell_module(fam: &Family, n: usize, j: &JClassId) -> Result<CellModule, SpechtError> {
    if j.n != n {
        return Err(SpechtError::NoSuchClass(j.to_string(), *fam));
    }
    Ok(cell_module_of(fam, &rank_idempotent(fam, j)?))
}

/// The diagram with the same rows as `rho` whose line with the `i`-th unprimed
/// end reaches the `pairing(i)`-th primed end.
fn repair_lines(rho: &Diagram, pairing: &Permutation) -> Diagram {
    let parts = rho.parts();
    let mut tops: Vec<Vec<Node>> = Vec::new();
    let mut bottoms: Vec<Vec<Node>> = Vec::new();
    let mut rest: Vec<Vec<Node>> = Vec::new();
    for p in parts {
        let (t, b): (Vec<Node>, Vec<Node>) = p.iter().partition(|v| !v.primed);
        if t.is_empty() || b.is_empty() {
            rest.push(p);
        } else {
            tops.push(t);
            bottoms.push(b);
        }
    }
    tops.sort();
    bottoms.sort();
    for (i, t) in tops.into_iter().enumerate() {
        let mut p = t;
        p.extend(bottoms[pairing.apply(i)].iter().copied());
        rest.push(p);
    }
    Diagram::from_parts(rho.n(), &rest).expect("re-pairing keeps a partition")
}

fn in_group(group: &GroupDescriptor, g: &Permutation) -> bool {
    match *group {
        GroupDescriptor::Symmetric(k) => g.len() == k,
        GroupDescriptor::Product(k1, k2) => g.len() == k1 + k2 && g.preserves_split(k1),
        GroupDescriptor::Trivial(k) => g.len() == k && g.is_identity(),
    }
}

/// `rho · g`: the lines of `rho` re-paired so that the new line permutation is `π_rho ∘ g`.
pub fn right_act(rho: &Diagram, g: &Permutation) -> Diagram {
    repair_lines(rho, &(&rho.line_permutation() * g))
}

/// Matrix of the right action of `g` on the cell module.
pub fn right_g_action(cm: &CellModule, g: &Permutation) -> Result<Matrix, SpechtError> {
    if !in_group(&cm.group, g) {
        return Err(SpechtError::NotInGroup { perm: g.clone(), group: cm.group });
    }
    let dim = cm.basis.len();
    let mut m = Matrix::zeros(dim, dim);
    for (c, rho) in cm.basis.iter().enumerate() {
        let row = cm.index[&right_act(rho, g)];
        m[(row, c)] = rat(1);
    }
    Ok(m)
}

/// `Δ(N) = C[L] ⊗_{C[G]} N`, realized on right-class representatives tensored with a basis of `N`.
#[derive(Debug, Clone)]
pub struct SpechtModule {
    pub j: JClassId,
    pub label: SimpleLabel,
    pub group: GroupDescriptor,
    pub dim: usize,
    /// One diagram per right class meeting the left class, lexicographically minimal.
    pub representatives: Vec<Diagram>,
    pub action: RepMatrices,
}

fn group_rep(group: &GroupDescriptor, label: &SimpleLabel) -> Result<Box<dyn GroupRep>, SpechtError> {
    if !group.admits(label) {
        return Err(SpechtError::BadLabel { label: label.to_string(), group: *group });
    }
    Ok(match label {
        SimpleLabel::Partition(l) => Box::new(specht_rep(l)),
        SimpleLabel::Pair(l1, l2) => Box::new(product_rep(&specht_rep(l1), &specht_rep(l2))),
        SimpleLabel::Trivial => Box::new(TrivialRep { degree: group.degree() }),
    })
}

/// Specht module built on a given cell module.
pub fn specht_module_on(cm: &CellModule, label: &SimpleLabel) -> Result<SpechtModule, SpechtError> {
    let rep = group_rep(&cm.group, label)?;
    let f = rep.dim();
    // Basis diagrams are in canonical order, so the first member of each right class is minimal.
    let mut class_of: BTreeMap<_, usize> = BTreeMap::new();
    let mut representatives = Vec::new();
    for d in &cm.basis {
        let key = d.bottom_key();
        if !class_of.contains_key(&key) {
            class_of.insert(key, representatives.len());
            representatives.push(d.clone());
        }
    }
    let q = representatives.len();
    let rep_pi_inv: Vec<Permutation> = representatives.iter().map(|r| r.line_permutation().inverse()).collect();
    let mut cache: HashMap<Permutation, Matrix> = HashMap::new();
    let mut entries = Vec::with_capacity(cm.action.entries.len());
    for (tau, _) in &cm.action.entries {
        let mut m = PolyMatrix::zeros(q * f, q * f);
        for (v, r) in representatives.iter().enumerate() {
            let res = compose_unchecked(tau, r);
            if cm.index_of(&res.product).is_none() {
                continue;
            }
            let w = class_of[&res.product.bottom_key()];
            let g = &rep_pi_inv[w] * &res.product.line_permutation();
            if !cache.contains_key(&g) {
                let mat = rep.matrix_of(&g).map_err(|_| SpechtError::NotInGroup { perm: g.clone(), group: cm.group })?;
                cache.insert(g.clone(), mat);
            }
            let block = &cache[&g];
            for a in 0..f {
                for b in 0..f {
                    if !block[(a, b)].is_zero() {
                        m[(w * f + a, v * f + b)] = DeltaPoly::monomial(block[(a, b)].clone(), res.closed as u32);
                    }
                }
            }
        }
        entries.push((tau.clone(), m));
    }
    Ok(SpechtModule {
        j: cm.j,
        label: label.clone(),
        group: cm.group,
        dim: q * f,
        representatives,
        action: RepMatrices { dim: q * f, entries },
    })
}

pub fn specht_module(fam: &Family, n: usize, j: &JClassId, label: &SimpleLabel) -> Result<SpechtModule, SpechtError> {
    specht_module_on(&cell_module(fam, n, j)?, label)
}

/// Every Specht module of the algebra: one per J-class and simple label.
pub fn all_specht_modules(fam: &Family, n: usize) -> Result<Vec<SpechtModule>, SpechtError> {
    let mut out = Vec::new();
    for row in crate::algebra::spec(fam, n) {
        let cm = cell_module(fam, n, &row.id)?;
        for label in row.group.labels() {
            out.push(specht_module_on(&cm, &label)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::spec;
    use crate::diagrams::parse;
    use crate::symgroup::IntPartition;

    fn jid(fam: Family, n: usize, rank: usize, a_rank: Option<usize>) -> JClassId {
        JClassId { family: fam, n, rank, a_rank }
    }

    fn check_multiplicative(rep: &RepMatrices) {
        for (tau, mt) in &rep.entries {
            for (rho, mr) in &rep.entries {
                let r = compose_unchecked(tau, rho);
                let lhs = mt * mr;
                let rhs = rep.matrix(&r.product).unwrap().scale(&DeltaPoly::signed_power(false, r.closed as u32));
                assert_eq!(lhs, rhs, "{tau} * {rho}");
            }
        }
    }

    #[test]
    fn figure_four_idempotents() {
        let pb = Family::plain(FamilyTag::PB);
        let t = rank_idempotent(&pb, &jid(pb, 4, 2, None)).unwrap();
        assert_eq!(t, parse("1 1' | 2 2' | 3 | 4 | 3' | 4'", 4).unwrap());
        let b = Family::plain(FamilyTag::B);
        let t = rank_idempotent(&b, &jid(b, 4, 2, None)).unwrap();
        assert_eq!(t, parse("1 1' | 2 2' | 3 4 | 3' 4'", 4).unwrap());
        let p = Family::plain(FamilyTag::P);
        let t = rank_idempotent(&p, &jid(p, 4, 2, None)).unwrap();
        assert_eq!(t, parse("1 1' | 2 3 4 2' 3' 4'", 4).unwrap());
        assert!(rank_idempotent(&b, &jid(b, 4, 1, None)).is_err());
    }

    #[test]
    fn idempotents_exist_for_every_class() {
        for tag in FamilyTag::ALL {
            let fams = if tag.is_walled() {
                vec![Family::walled(tag, 1, 2), Family::walled(tag, 2, 2), Family::walled(tag, 3, 1)]
            } else {
                vec![Family::plain(tag)]
            };
            for fam in fams {
                let n = fam.wall().map_or(4, |(a, b)| a + b);
                for row in spec(&fam, n) {
                    let t = rank_idempotent(&fam, &row.id).unwrap();
                    assert_eq!(t.star(), t);
                    assert_eq!(compose_unchecked(&t, &t).product, t, "{fam} {}", row.id);
                    assert_eq!(cell_module(&fam, n, &row.id).unwrap().basis.len(), row.size / row.q);
                }
            }
        }
    }

    #[test]
    fn cell_module_examples() {
        let pb = Family::plain(FamilyTag::PB);
        let cm = cell_module(&pb, 2, &jid(pb, 2, 0, None)).unwrap();
        assert_eq!(cm.basis.len(), 2);
        check_multiplicative(&cm.action);
        let b = Family::plain(FamilyTag::B);
        let cm = cell_module(&b, 3, &jid(b, 3, 3, None)).unwrap();
        assert_eq!(cm.basis.len(), 6);
        let tl = Family::plain(FamilyTag::TL);
        check_multiplicative(&cell_module(&tl, 3, &jid(tl, 3, 1, None)).unwrap().action);
    }

    #[test]
    fn right_action_commutes_with_left_action() {
        let pb = Family::plain(FamilyTag::PB);
        for k in 0..=2 {
            let cm = cell_module(&pb, 2, &jid(pb, 2, k, None)).unwrap();
            for g in Permutation::all(k) {
                let r = PolyMatrix::from_rational(&right_g_action(&cm, &g).unwrap());
                for (_, m) in &cm.action.entries {
                    assert_eq!(m * &r, &r * m);
                }
            }
        }
        let b = Family::plain(FamilyTag::B);
        let cm = cell_module(&b, 3, &jid(b, 3, 3, None)).unwrap();
        assert_eq!(right_g_action(&cm, &Permutation::identity(3)).unwrap(), Matrix::identity(6));
        let s = Permutation::transposition(3, 0, 1);
        let m = right_g_action(&cm, &s).unwrap();
        let sd = Diagram::from_permutation(&s);
        for (c, rho) in cm.basis.iter().enumerate() {
            let target = compose_unchecked(rho, &sd).product;
            assert_eq!(m[(cm.index_of(&target).unwrap(), c)], rat(1));
        }
        assert!(right_g_action(&cm, &Permutation::identity(2)).is_err());
    }

    #[test]
    fn specht_dimensions_and_multiplicativity() {
        let pb = Family::plain(FamilyTag::PB);
        let d = specht_module(&pb, 2, &jid(pb, 2, 1, None), &SimpleLabel::Partition(IntPartition::new(vec![1]).unwrap())).unwrap();
        assert_eq!(d.dim, 2);
        let b = Family::plain(FamilyTag::B);
        let d = specht_module(&b, 3, &jid(b, 3, 3, None), &SimpleLabel::Partition(IntPartition::new(vec![2, 1]).unwrap())).unwrap();
        assert_eq!(d.dim, 2);
        let tl = Family::plain(FamilyTag::TL);
        let d = specht_module(&tl, 3, &jid(tl, 3, 1, None), &SimpleLabel::Trivial).unwrap();
        assert_eq!(d.dim, 2);
        assert!(specht_module(&tl, 3, &jid(tl, 3, 1, None), &SimpleLabel::Partition(IntPartition::empty())).is_err());
        for m in all_specht_modules(&pb, 2).unwrap() {
            check_multiplicative(&m.action);
        }
        for m in all_specht_modules(&Family::walled(FamilyTag::WB, 2, 1), 3).unwrap() {
            check_multiplicative(&m.action);
        }
    }
}
