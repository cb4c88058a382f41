//! Linear combinations of diagrams, the δ-twisted product and the
//! left/right/two-sided class structure of a diagram basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::diagrams::{compose_unchecked, enumerate, enumerate_filtered, Diagram, Family, FamilyTag};
use crate::scalars::DeltaPoly;
use crate::symgroup::{involution_count, partitions, syt_count, IntPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements live in different algebras: {0}/{1} and {2}/{3}")]
    Mismatch(Family, usize, Family, usize),
    #[error("{diagram} is not a basis diagram of {family} on {n} points")]
    NotMember { diagram: Diagram, family: Family, n: usize },
    #[error("{family} has no diagrams on {n} points")]
    BadSize { family: Family, n: usize },
}

/// A finite linear combination of basis diagrams with coefficients in `Q[δ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    family: Family,
    n: usize,
    terms: BTreeMap<Diagram, DeltaPoly>,
}

impl AlgebraElement {
    pub fn zero(family: Family, n: usize) -> Self {
        Self { family, n, terms: BTreeMap::new() }
    }

    /// The basis element of a single diagram.
    pub fn basis(family: Family, diagram: Diagram) -> Result<Self, AlgebraError> {
        Self::from_terms(family, diagram.n(), [(diagram, DeltaPoly::one())])
    }

    pub fn from_terms(
        family: Family,
        n: usize,
        terms: impl IntoIterator<Item = (Diagram, DeltaPoly)>,
    ) -> Result<Self, AlgebraError> {
        if !family.accepts_size(n) {
            return Err(AlgebraError::BadSize { family, n });
        }
        let mut out = Self::zero(family, n);
        for (d, c) in terms {
            if d.n() != n || !family.contains(&d) {
                return Err(AlgebraError::NotMember { diagram: d, family, n });
            }
            out.add_term(d, &c);
        }
        Ok(out)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, DeltaPoly> {
        &self.terms
    }

    pub fn coeff(&self, d: &Diagram) -> DeltaPoly {
        self.terms.get(d).cloned().unwrap_or_else(DeltaPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: Diagram, c: &DeltaPoly) {
        let entry = self.terms.entry(d).or_insert_with(DeltaPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.family != other.family || self.n != other.n {
            return Err(AlgebraError::Mismatch(self.family, self.n, other.family, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &DeltaPoly) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(d, v)| (d.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Self { terms, ..self.clone() }
    }

    /// Image under the anti-involution ⋆.
    pub fn star(&self) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.star(), c.clone())).collect();
        Self { terms, ..self.clone() }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c})*[{d}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The basis product `τρ = δ^c(τ,ρ) τ∘ρ` extended bilinearly.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    x.check_same(y)?;
    let mut out = AlgebraElement::zero(x.family, x.n);
    for (tau, a) in &x.terms {
        for (rho, b) in &y.terms {
            let r = compose_unchecked(tau, rho);
            let coeff = (a * b).shift(r.closed as u32);
            out.add_term(r.product, &coeff);
        }
    }
    Ok(out)
}

/// The unit `{1,1'} ∪ … ∪ {n,n'}`.
pub fn identity(fam: &Family, n: usize) -> Result<AlgebraElement, AlgebraError> {
    AlgebraElement::basis(*fam, Diagram::identity(n))
}

/// Same restriction to the unprimed row and the same unprimed-only parts.
pub fn left_equivalent(tau: &Diagram, rho: &Diagram) -> bool {
    tau.n() == rho.n() && tau.top_key() == rho.top_key()
}

pub fn right_equivalent(tau: &Diagram, rho: &Diagram) -> bool {
    tau.n() == rho.n() && tau.bottom_key() == rho.bottom_key()
}

/// A two-sided class, identified by rank and, for the partial walled families, a-rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JClassId {
    pub family: Family,
    pub n: usize,
    pub rank: usize,
    pub a_rank: Option<usize>,
}

impl fmt::Display for JClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a_rank {
            Some(r) => write!(f, "rank {} (a-rank {r})", self.rank),
            None => write!(f, "rank {}", self.rank),
        }
    }
}

pub fn j_class(rho: &Diagram, fam: &Family) -> JClassId {
    let a_rank = match (fam.tag().is_partial_walled(), fam.split()) {
        (true, Some(a)) => Some(rho.a_rank_unchecked(a)),
        _ => None,
    };
    JClassId { family: *fam, n: rho.n(), rank: rho.rank(), a_rank }
}

/// The group acting on the propagating lines of a J-class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Symmetric(usize),
    Product(usize, usize),
    /// The trivial group acting on `k` lines.
    Trivial(usize),
}

/// A label of a simple module of one of the groups above.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleLabel {
    Partition(IntPartition),
    Pair(IntPartition, IntPartition),
    Trivial,
}

impl SimpleLabel {
    pub fn dim(&self) -> usize {
        match self {
            Self::Partition(l) => syt_count(l) as usize,
            Self::Pair(l1, l2) => (syt_count(l1) * syt_count(l2)) as usize,
            Self::Trivial => 1,
        }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Partition(l) => write!(f, "{l}"),
            Self::Pair(l1, l2) => write!(f, "{l1}x{l2}"),
            Self::Trivial => write!(f, "triv"),
        }
    }
}

impl GroupDescriptor {
    /// Number of lines acted on.
    pub fn degree(&self) -> usize {
        match *self {
            Self::Symmetric(k) | Self::Trivial(k) => k,
            Self::Product(k1, k2) => k1 + k2,
        }
    }

    pub fn labels(&self) -> Vec<SimpleLabel> {
        match *self {
            Self::Symmetric(k) => partitions(k).into_iter().map(SimpleLabel::Partition).collect(),
            Self::Product(k1, k2) => {
                let right = partitions(k2);
                partitions(k1)
                    .into_iter()
                    .flat_map(|l1| right.iter().map(move |l2| SimpleLabel::Pair(l1.clone(), l2.clone())))
                    .collect()
            }
            Self::Trivial(_) => vec![SimpleLabel::Trivial],
        }
    }

    pub fn involution_count(&self) -> u64 {
        match *self {
            Self::Symmetric(k) => involution_count(k),
            Self::Product(k1, k2) => involution_count(k1) * involution_count(k2),
            Self::Trivial(_) => 1,
        }
    }

    /// Whether `label` names a simple module of this group.
    pub fn admits(&self, label: &SimpleLabel) -> bool {
        match (*self, label) {
            (Self::Symmetric(k), SimpleLabel::Partition(l)) => l.size() == k,
            (Self::Product(k1, k2), SimpleLabel::Pair(l1, l2)) => l1.size() == k1 && l2.size() == k2,
            (Self::Trivial(_), SimpleLabel::Trivial) => true,
            _ => false,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Symmetric(k) => write!(f, "S_{k}"),
            Self::Product(k1, k2) => write!(f, "S_{k1}xS_{k2}"),
            Self::Trivial(_) => write!(f, "trivial"),
        }
    }
}

/// Group of a J-class; `sample` is any diagram of the class.
pub fn group_of(j: &JClassId, sample: &Diagram) -> GroupDescriptor {
    let fam = j.family;
    match fam.tag() {
        FamilyTag::P | FamilyTag::B | FamilyTag::PB => GroupDescriptor::Symmetric(j.rank),
        FamilyTag::WB | FamilyTag::WPB => {
            let a = fam.split().expect("walled");
            let left = j.a_rank.unwrap_or_else(|| sample.a_rank_unchecked(a));
            GroupDescriptor::Product(left, j.rank - left)
        }
        _ => GroupDescriptor::Trivial(j.rank),
    }
}

/// One row of [`spec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JClassSpec {
    pub id: JClassId,
    pub q: usize,
    pub group: GroupDescriptor,
    /// Number of basis diagrams in the class.
    pub size: usize,
}

/// Basis diagrams grouped into J-classes, highest rank first.
pub fn j_classes(fam: &Family, n: usize) -> Vec<(JClassId, Vec<Diagram>)> {
    let mut groups: BTreeMap<JClassId, Vec<Diagram>> = BTreeMap::new();
    for d in enumerate(fam, n, None) {
        groups.entry(j_class(&d, fam)).or_default().push(d);
    }
    let mut out: Vec<(JClassId, Vec<Diagram>)> = groups.into_iter().collect();
    out.sort_by(|x, y| (y.0.rank, y.0.a_rank).cmp(&(x.0.rank, x.0.a_rank)));
    out
}

/// The J-classes with their number of right classes and their group.
pub fn spec(fam: &Family, n: usize) -> Vec<JClassSpec> {
    j_classes(fam, n)
        .into_iter()
        .map(|(id, members)| {
            let right: BTreeSet<_> = members.iter().map(Diagram::bottom_key).collect();
            JClassSpec {
                id,
                q: right.len(),
                group: group_of(&id, &members[0]),
                size: members.len(),
            }
        })
        .collect()
}

/// All members of the family left equivalent to `rho`, in canonical order.
pub fn left_class_of(rho: &Diagram, fam: &Family) -> Vec<Diagram> {
    let key = rho.top_key();
    let j = j_class(rho, fam);
    enumerate_filtered(fam, rho.n(), Some(j.rank), j.a_rank)
        .into_iter()
        .filter(|d| d.top_key() == key)
        .collect()
}

/// All members of the family right equivalent to `rho`, in canonical order.
pub fn right_class_of(rho: &Diagram, fam: &Family) -> Vec<Diagram> {
    let key = rho.bottom_key();
    let j = j_class(rho, fam);
    enumerate_filtered(fam, rho.n(), Some(j.rank), j.a_rank)
        .into_iter()
        .filter(|d| d.bottom_key() == key)
        .collect()
}

/// `dim A` as predicted by the class structure: `Σ_J q_J² Σ_λ (f^λ)²`.
pub fn predicted_dimension(table: &[JClassSpec]) -> usize {
    table
        .iter()
        .map(|row| row.q * row.q * row.group.labels().iter().map(|l| l.dim() * l.dim()).sum::<usize>())
        .sum()
}
