mod common;

use common::d;
use gelfand_core::algebra::{spec, SimpleLabel};
use gelfand_core::diagrams::{Family, FamilyTag};
use gelfand_core::model::{model_basis, model_matrices};
use gelfand_core::scalars::ratio;
use gelfand_core::specht::{all_specht_modules, cell_module, cell_module_of, specht_module_on};
use gelfand_core::verify::{check_gelfand, commutant_dim, intertwiner_dim};

#[test]
fn specht_module_does_not_depend_on_the_left_class() {
    let fam = Family::plain(FamilyTag::PB);
    let j = spec(&fam, 2).into_iter().find(|r| r.id.rank == 1).unwrap().id;
    let chosen = cell_module(&fam, 2, &j).unwrap();
    let other = cell_module_of(&fam, &d("2 2' | 1 | 1'", 2));
    assert_ne!(chosen.basis, other.basis);
    let label = SimpleLabel::Partition(gelfand_core::IntPartition::new(vec![1]).unwrap());
    let a = specht_module_on(&chosen, &label).unwrap();
    let b = specht_module_on(&other, &label).unwrap();
    for delta in [ratio(7, 3), ratio(-5, 2)] {
        assert_eq!(intertwiner_dim(&a.action, &b.action, &delta).unwrap(), 1);
        assert_eq!(intertwiner_dim(&b.action, &a.action, &delta).unwrap(), 1);
    }
}

#[test]
fn brauer_three() {
    let fam = Family::plain(FamilyTag::B);
    let modules = all_specht_modules(&fam, 3).unwrap();
    let dims: Vec<(usize, usize)> = modules.iter().map(|m| (m.j.rank, m.dim)).collect();
    assert_eq!(dims, vec![(3, 1), (3, 2), (3, 1), (1, 3)]);
    assert_eq!(model_basis(&fam, 3).len(), 7);
    let report = check_gelfand(&fam, 3, &[ratio(7, 3), ratio(-5, 2), ratio(11, 4)], 1);
    assert!(report.passed(), "{}", report.to_json());
}

#[test]
fn model_commutant_counts_simples_for_walled_families() {
    for (tag, a, b) in [(FamilyTag::WB, 2, 2), (FamilyTag::WPB, 1, 2), (FamilyTag::WTL, 2, 2), (FamilyTag::WPTL, 2, 1)] {
        let fam = Family::walled(tag, a, b);
        let n = a + b;
        let simples: usize = spec(&fam, n).iter().map(|r| r.group.labels().len()).sum();
        assert_eq!(commutant_dim(&model_matrices(&fam, n), &ratio(13, 5)).unwrap(), simples, "{fam}");
    }
}

#[test]
fn cell_module_zero_rule() {
    let fam = Family::plain(FamilyTag::PB);
    let j = spec(&fam, 2).into_iter().find(|r| r.id.rank == 2).unwrap().id;
    let cm = cell_module(&fam, 2, &j).unwrap();
    for (tau, m) in &cm.action.entries {
        if tau.rank() < 2 {
            assert!(m.is_zero(), "{tau}");
        }
    }
}
