//! Verification harness: exhaustive structural sweeps and exact linear algebra
//! at sampled values of δ, collected into a serializable report.

mod solve;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::linalg::{rref, Matrix};
pub use solve::{commutant_dim, commutant_dim_of, intertwiner_dim};

use crate::algebra::{j_class, predicted_dimension, spec};
use crate::diagrams::{compose_unchecked, enumerate, Diagram, Family};
use crate::linalg::SparseEchelon;
use crate::model::{model_basis, model_matrices, model_term, ModelTerm};
use crate::scalars::{ratio, DeltaPoly, Rational, ScalarError};
use crate::specht::{all_specht_modules, SpechtError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Specht(#[from] SpechtError),
    #[error("representations are indexed by different diagrams")]
    IncompatibleRepresentations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Pass, details: details.into() }
    }

    pub fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Fail, details: details.into() }
    }

    fn from_result(name: &str, r: Result<String, String>) -> Self {
        match r {
            Ok(d) => Self::pass(name, d),
            Err(d) => Self::fail(name, d),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub family: String,
    pub n: usize,
    pub wall: Option<(usize, usize)>,
    pub delta_samples: Vec<String>,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// `count` distinct non-integral rationals `±p/q` with `2 ≤ p, q ≤ 50`.
pub fn sample_deltas(count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let p: i64 = rng.gen_range(2..=50);
        let q: i64 = rng.gen_range(2..=50);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let d = ratio(sign * p, q);
        if !d.is_integer() && !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

/// How a candidate action is supplied to the module-axiom sweep.
pub type ActionFn<'a> = dyn Fn(&Diagram, &Diagram) -> Option<ModelTerm> + 'a;

/// `(τρ)·v_ι == τ·(ρ·v_ι)` for every pair of basis diagrams and every `ι`, with
/// symbolic δ. Coefficients are signed monomials, compared exactly.
pub fn check_module_axioms_with(fam: &Family, n: usize, act: &ActionFn<'_>) -> Check {
    const NAME: &str = "module_axioms";
    let basis = model_basis(fam, n).elements;
    let all = enumerate(fam, n, None);
    let index: HashMap<&Diagram, usize> = all.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let iota_index: HashMap<&Diagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
    // table[τ][ι] = τ·v_ι as (sign, degree, target index)
    let mut table: Vec<Vec<Option<(bool, u32, usize)>>> = Vec::with_capacity(all.len());
    for tau in &all {
        let mut row = Vec::with_capacity(basis.len());
        for iota in &basis {
            let entry = match act(tau, iota) {
                None => None,
                Some(t) => match iota_index.get(&t.target) {
                    Some(&k) => Some((t.negative, t.degree, k)),
                    None => return Check::fail(NAME, format!("{tau} sends v[{iota}] outside the basis, to {}", t.target)),
                },
            };
            row.push(entry);
        }
        table.push(row);
    }
    let mut count = 0usize;
    for (a, tau) in all.iter().enumerate() {
        for (b, rho) in all.iter().enumerate() {
            let r = compose_unchecked(tau, rho);
            let Some(&c) = index.get(&r.product) else {
                return Check::fail(NAME, format!("{tau} o {rho} = {} leaves the family", r.product));
            };
            for i in 0..basis.len() {
                let lhs = table[c][i].map(|(s, d, k)| (s, d + r.closed as u32, k));
                let rhs = table[b][i].and_then(|(s1, d1, k1)| table[a][k1].map(|(s2, d2, k2)| (s1 ^ s2, d1 + d2, k2)));
                count += 1;
                if lhs != rhs {
                    let show = |x: Option<(bool, u32, usize)>| match x {
                        None => "0".to_string(),
                        Some((s, d, k)) => format!("{}[{}]", DeltaPoly::signed_power(s, d), basis[k]),
                    };
                    return Check::fail(
                        NAME,
                        format!("tau = [{tau}], rho = [{rho}], iota = [{}]: (tau rho).v = {}, tau.(rho.v) = {}", basis[i], show(lhs), show(rhs)),
                    );
                }
            }
        }
    }
    Check::pass(NAME, format!("{count} triples"))
}

pub fn check_module_axioms(fam: &Family, n: usize) -> Check {
    check_module_axioms_with(fam, n, &|tau, iota| model_term(fam, tau, iota))
}

/// Nonzero actions stay inside the J-class of `ι` and land on self-dual diagrams.
pub fn check_model_grading(fam: &Family, n: usize) -> Check {
    const NAME: &str = "model_j_grading";
    let basis = model_basis(fam, n).elements;
    for tau in enumerate(fam, n, None) {
        for iota in &basis {
            if let Some(t) = model_term(fam, &tau, iota) {
                if !t.target.is_self_dual() || j_class(&t.target, fam) != j_class(iota, fam) {
                    return Check::fail(NAME, format!("[{tau}] . v[{iota}] = v[{}]", t.target));
                }
            }
        }
    }
    Check::pass(NAME, format!("{} basis vectors", basis.len()))
}

/// `|I_J| = q_J · #involutions(G_J)` and `dim A = Σ q_J² Σ (f^λ)²`.
pub fn check_dimension_identities(fam: &Family, n: usize) -> Check {
    let table = spec(fam, n);
    let basis = model_basis(fam, n);
    let dim = enumerate(fam, n, None).len();
    let res = (|| {
        for (row, (j, block)) in table.iter().zip(&basis.blocks) {
            let expected = row.q as u64 * row.group.involution_count();
            if row.id != *j || block.len() as u64 != expected {
                return Err(format!("{}: |I_J| = {}, q_J * #inv = {expected}", row.id, block.len()));
            }
        }
        let predicted = predicted_dimension(&table);
        if predicted != dim {
            return Err(format!("dim A = {dim}, sum q^2 f^2 = {predicted}"));
        }
        Ok(format!("dim A = {dim}, |I| = {}, {} J-classes", basis.len(), table.len()))
    })();
    Check::from_result("dimension_identities", res)
}

/// `dim Δ = q_J f^λ` for every Specht module and `Σ (dim Δ)² = dim A`.
pub fn check_specht_dimensions(fam: &Family, n: usize) -> Check {
    let res = (|| {
        let table = spec(fam, n);
        let mut total = 0;
        let modules = all_specht_modules(fam, n).map_err(|e| e.to_string())?;
        for m in &modules {
            let row = table.iter().find(|r| r.id == m.j).ok_or("unknown J-class")?;
            if m.dim != row.q * m.label.dim() {
                return Err(format!("{} label {}: dim {} != {} * {}", m.j, m.label, m.dim, row.q, m.label.dim()));
            }
            total += m.dim * m.dim;
        }
        let dim = enumerate(fam, n, None).len();
        if total != dim {
            return Err(format!("sum of squares {total} != dim A = {dim}"));
        }
        Ok(format!("{} Specht modules", modules.len()))
    })();
    Check::from_result("specht_dimensions", res)
}

/// Two diagrams generate the same two-sided ideal exactly when they have the
/// same rank (and a-rank for the partial walled families). Ideals are spanned by
/// the evaluated products `σ τ σ'` and compared by exact row reduction.
pub fn check_j_classification(fam: &Family, n: usize, delta: &Rational) -> Check {
    const NAME: &str = "j_classification_ideals";
    if delta.is_zero() {
        return Check::fail(NAME, "δ = 0 is excluded");
    }
    let all = enumerate(fam, n, None);
    let index: HashMap<&Diagram, usize> = all.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let dim = all.len();
    let delta_pow = |c: usize| -> Rational {
        let mut x = Rational::from_integer(1.into());
        for _ in 0..c {
            x *= delta;
        }
        x
    };
    let ideals: Vec<SparseEchelon> = all
        .iter()
        .map(|tau| {
            let mut ech = SparseEchelon::new(dim);
            for s in &all {
                let left = compose_unchecked(s, tau);
                for t in &all {
                    let r = compose_unchecked(&left.product, t);
                    let coeff = delta_pow(left.closed + r.closed);
                    ech.insert(vec![(index[&r.product], coeff)]);
                }
            }
            ech
        })
        .collect();
    let contains = |ideal: &SparseEchelon, rho: usize| {
        let mut probe = ideal.clone();
        probe.insert(vec![(rho, Rational::from_integer(1.into()))]);
        probe.rank() == ideal.rank()
    };
    for (a, tau) in all.iter().enumerate() {
        for (b, rho) in all.iter().enumerate() {
            let same_ideal = contains(&ideals[a], b) && contains(&ideals[b], a);
            let same_class = j_class(tau, fam) == j_class(rho, fam);
            if same_ideal != same_class {
                return Check::fail(NAME, format!("[{tau}] and [{rho}]: same ideal {same_ideal}, same class {same_class}"));
            }
        }
    }
    Check::pass(NAME, format!("{dim} diagrams at δ = {delta}"))
}

/// The J-classes are the classes of the equivalence generated by left and right equivalence.
pub fn check_j_join(fam: &Family, n: usize) -> Check {
    let all = enumerate(fam, n, None);
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut by_top: HashMap<_, usize> = HashMap::new();
    let mut by_bottom: HashMap<_, usize> = HashMap::new();
    for (i, d) in all.iter().enumerate() {
        for j in [*by_top.entry(d.top_key()).or_insert(i), *by_bottom.entry(d.bottom_key()).or_insert(i)] {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    let mut class_root: BTreeMap<_, usize> = BTreeMap::new();
    for (i, d) in all.iter().enumerate() {
        let root = find(&mut parent, i);
        let j = j_class(d, fam);
        let expected = *class_root.entry(j).or_insert(root);
        if expected != root {
            return Check::fail("j_join", format!("[{d}] is not linked to the rest of {j}"));
        }
    }
    let roots: BTreeSet<usize> = class_root.values().copied().collect();
    if roots.len() != class_root.len() {
        return Check::fail("j_join", "two J-classes are linked by left/right equivalence");
    }
    Check::pass("j_join", format!("{} classes", roots.len()))
}

/// Commutant, intertwiner and simplicity checks at one value of δ.
pub fn check_at_delta(fam: &Family, n: usize, delta: &Rational) -> Vec<Check> {
    let tag = |name: &str| format!("{name}@{delta}");
    let generic = |msg: String| format!("non-generic candidate δ = {delta}: {msg}");
    let model = model_matrices(fam, n);
    let simples: usize = spec(fam, n).iter().map(|r| r.group.labels().len()).sum();
    let modules = match all_specht_modules(fam, n) {
        Ok(m) => m,
        Err(e) => return vec![Check::fail(tag("specht_modules"), e.to_string())],
    };
    let mut out = Vec::new();
    out.push(Check::from_result(
        &tag("model_commutant"),
        match commutant_dim(&model, delta) {
            Ok(c) if c == simples => Ok(format!("commutant dim {c} = {simples} simples")),
            Ok(c) => Err(generic(format!("commutant dim {c}, expected {simples}"))),
            Err(e) => Err(e.to_string()),
        },
    ));
    let mut simplicity = Ok(format!("{} modules", modules.len()));
    let mut intertwiners = Ok(format!("{} modules", modules.len()));
    for m in &modules {
        if simplicity.is_ok() {
            match commutant_dim(&m.action, delta) {
                Ok(1) => {}
                Ok(c) => simplicity = Err(generic(format!("{} label {}: commutant dim {c}", m.j, m.label))),
                Err(e) => simplicity = Err(e.to_string()),
            }
        }
        if intertwiners.is_ok() {
            match intertwiner_dim(&m.action, &model, delta) {
                Ok(1) => {}
                Ok(c) => intertwiners = Err(generic(format!("{} label {}: Hom dim {c}", m.j, m.label))),
                Err(e) => intertwiners = Err(e.to_string()),
            }
        }
    }
    out.push(Check::from_result(&tag("specht_simplicity"), simplicity));
    out.push(Check::from_result(&tag("specht_in_model"), intertwiners));
    out
}

/// Largest `n` for which the ideal-membership classification oracle is run.
pub const IDEAL_CHECK_MAX_N: usize = 2;

/// Every check for one algebra, at the given values of δ.
pub fn check_gelfand(fam: &Family, n: usize, deltas: &[Rational], seed: u64) -> Report {
    let mut checks = vec![
        check_dimension_identities(fam, n),
        check_specht_dimensions(fam, n),
        check_model_grading(fam, n),
        check_module_axioms(fam, n),
        check_j_join(fam, n),
    ];
    match deltas.first() {
        Some(d) if n <= IDEAL_CHECK_MAX_N => checks.push(check_j_classification(fam, n, d)),
        _ => checks.push(Check::pass("j_classification_ideals", format!("not run for n > {IDEAL_CHECK_MAX_N}"))),
    }
    for d in deltas {
        checks.extend(check_at_delta(fam, n, d));
    }
    Report {
        family: fam.tag().name().to_string(),
        n,
        wall: fam.wall(),
        delta_samples: deltas.iter().map(ToString::to_string).collect(),
        seed,
        checks,
    }
}
