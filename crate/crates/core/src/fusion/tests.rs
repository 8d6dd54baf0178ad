use std::collections::BTreeMap;

use super::*;
use crate::affine::{
    enumerate_simples, level1_character, normal_form, relaxed_character_on, spectral_flow, structure_of, ModuleLabel,
};
use crate::exact::{q, qi};
use crate::levels::AdmissibleLevel;
use crate::virasoro::n_coefficient;

fn lab(s: &str) -> ModuleLabel {
    s.parse().unwrap()
}

fn lvl(u: i64, v: i64) -> AdmissibleLevel {
    AdmissibleLevel::new(u, v).unwrap()
}

fn sample(l: &AdmissibleLevel) -> Vec<ModuleLabel> {
    let mut xs = enumerate_simples(l, -1..=1, &[q(1, 3), q(2, 7)]);
    for r in 1..l.u {
        for s in 1..l.v {
            for flow in [-1, 0, 2] {
                xs.push(ModuleLabel::p(*l, flow, r, s).unwrap());
                xs.push(ModuleLabel::dminus(*l, flow, r, s).unwrap());
                xs.push(ModuleLabel::eplus(*l, flow, r, s).unwrap());
            }
        }
    }
    xs
}

#[test]
fn spec_examples() {
    let x = lab("L[2]@(3,2)");
    assert_eq!(fuse(2, &x).unwrap().summands, BTreeMap::from([(lab("L[1]@(3,2)"), 1)]));
    let e = lab("E[1/3;1,1]@(3,2)");
    assert_eq!(fuse(2, &e).unwrap().summands, BTreeMap::from([(lab("E[4/3;1,1]@(3,2)"), 1)]));
    for (u, v) in [(3, 2), (5, 3)] {
        let top = ModuleLabel::l(lvl(u, v), 0, u - 1).unwrap();
        assert_eq!(fuse(u - 1, &top).unwrap().summands, BTreeMap::from([(ModuleLabel::l(lvl(u, v), 0, 1).unwrap(), 1)]));
    }
    assert!(fuse(3, &x).is_err());
}

#[test]
fn unit_flow_associativity_and_identifications() {
    for (u, v) in [(3, 2), (5, 3)] {
        let l = lvl(u, v);
        for x in sample(&l) {
            let unit = fuse(1, &x).unwrap();
            assert_eq!(unit.summands, BTreeMap::from([(normal_form(&x), 1)]));
            for r in 1..u {
                let fx = fuse(r, &x).unwrap();
                // independent of the presentation of x
                assert_eq!(fuse(r, &normal_form(&x)).unwrap(), fx, "{r} ⊠ {x}");
                // commutes with flow
                let mut flowed = FusionDecomposition::default();
                for (y, n) in &fx.summands {
                    flowed.add(spectral_flow(y, 2), *n);
                }
                assert_eq!(fuse(r, &x.with_flow(x.flow + 2)).unwrap(), flowed);
                for r2 in 1..u {
                    let mut lhs = FusionDecomposition::default();
                    for (y, n) in &fuse(r2, &x).unwrap().summands {
                        lhs.merge(&fuse(r, y).unwrap(), *n);
                    }
                    let mut rhs = FusionDecomposition::default();
                    for r3 in 1..u {
                        let n = n_coefficient(u, r, r2, r3);
                        if n > 0 {
                            rhs.merge(&fuse(r3, &x).unwrap(), n);
                        }
                    }
                    assert_eq!(lhs, rhs, "{r} ⊠ ({r2} ⊠ {x})");
                }
            }
        }
    }
}

#[test]
fn fusion_is_exact_on_projectives() {
    for (u, v) in [(3, 2), (5, 3)] {
        let l = lvl(u, v);
        for r in 1..u {
            for r2 in 1..u {
                for s in 1..v {
                    let p = ModuleLabel::p(l, 1, r2, s).unwrap();
                    let whole = fuse(r, &p).unwrap().composition_factors().unwrap();
                    let mut parts = Vec::new();
                    for y in structure_of(&p).unwrap().layers.iter().flatten() {
                        parts.extend(fuse(r, y).unwrap().composition_factors().unwrap());
                    }
                    parts.sort();
                    assert_eq!(whole, parts, "{r} ⊠ {p}");
                }
            }
        }
    }
}

#[test]
fn induction_examples() {
    let x = lab("E[1/3;1,1]@(5,2)");
    let d = induct_decompose(1, &x).unwrap();
    let coset: Vec<_> = d.summands.keys().map(|(_, m)| (m.u, m.v, m.r, m.s)).collect();
    assert_eq!(coset, vec![(5, 3, 1, 1), (5, 3, 3, 1)]);
    let ms: Vec<i64> = d.summands.keys().map(|(y, _)| y.kind.r()).collect();
    assert_eq!(ms, vec![1, 3]);
    assert_eq!(d.level_one, 2);
    let dp = induct_decompose(2, &lab("s1(D-[1,1])@(5,2)")).unwrap();
    assert!(dp.summands.keys().all(|(y, _)| matches!(y.kind, crate::affine::Kind::Dminus { .. })));
    let pp = induct_decompose(1, &lab("P[1,1]@(5,2)")).unwrap();
    assert!(pp.summands.keys().all(|(y, _)| matches!(y.kind, crate::affine::Kind::P { .. })));
    assert!(induct_decompose(1, &lab("E[1/3;2,1]@(5,2)")).is_err());
    assert!(induct_decompose(3, &x).is_err());
    // taking composition factors commutes with induction
    let p = lab("P[1,1]@(8,3)");
    let via_p: Vec<_> = induct_decompose(2, &p)
        .unwrap()
        .summands
        .keys()
        .flat_map(|(y, m)| structure_of(y).unwrap().composition_factors().into_iter().map(move |f| (f, *m)))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut via_factors = std::collections::BTreeSet::new();
    for f in structure_of(&p).unwrap().layers.iter().flatten() {
        if f.kind.r() != 1 {
            continue;
        }
        for (y, m) in induct_decompose(2, f).unwrap().summands.keys() {
            via_factors.insert((normal_form(y), *m));
        }
    }
    assert!(via_factors.iter().all(|x| via_p.contains(x)));
}

#[test]
fn branch_parity_rule() {
    let x = lab("E[1/3;1,1]@(3,2)");
    for a in [1, 2] {
        let d = branch(&x, a).unwrap();
        for (y, m) in d.summands.keys() {
            assert_eq!((y.kind.r() + 1 + 1 + a) % 2, 1);
            assert_eq!((m.u, m.v), (5, 3));
        }
    }
}

fn params(a: i64, flow: i64) -> BranchingParams {
    BranchingParams { level: lvl(3, 2), r: 1, s: 1, a, flow, lambda: q(1, 3) }
}

#[test]
fn branching_identity_small() {
    for a in [1, 2] {
        for flow in [0, 1] {
            let check = branching_char_verify(&params(a, flow), &qi(3), 3).unwrap();
            assert!(check.is_identity(), "a={a}, ℓ={flow}");
        }
    }
    let check = branching_char_verify(&params(1, 0), &qi(2), 2).unwrap();
    assert_eq!(check.lhs_lead, q(-1, 8));
    let lead = check.summand_leads.iter().map(|(_, e)| e.clone()).min().unwrap();
    assert_eq!(lead, q(-1, 8));
    assert!(check.summand_leads.iter().all(|(m, _)| m % 2 == 0));
}

#[test]
fn branching_negative_controls() {
    let p = params(1, 0);
    let off = branching_residual(&p, &(q(1, 3) + q(1, 2) + q(1, 2)), true, &qi(2), 2).unwrap();
    assert!(!off.is_identity());
    let odd_shift = branching_residual(&p, &(q(1, 3) + q(1, 1)), true, &qi(2), 2).unwrap();
    assert!(!odd_shift.is_identity());
    let parity = branching_residual(&p, &(q(1, 3) + q(1, 2)), false, &qi(2), 2).unwrap();
    assert!(!parity.is_identity());
}

#[test]
fn flows_factor_through_the_product() {
    let l = lvl(3, 2);
    let order = qi(3);
    let e = relaxed_character_on(&l, &q(1, 3), 1, 1, &order, (qi(-10), qi(10))).unwrap().with_bound(1152).unwrap();
    for a in [1, 2] {
        let l1 = level1_character(a, &order, 1152).unwrap();
        for flow in [-1, 1, 2] {
            let separate = e.flow(flow, &l.k()).unwrap().mul(&l1.flow(flow, &qi(1)).unwrap()).unwrap();
            let joint = e.mul(&l1).unwrap().flow(flow, &(l.k() + qi(1))).unwrap();
            let lo = separate.window().0.clone().max(joint.window().0.clone()) + qi(4);
            let hi = separate.window().1.clone().min(joint.window().1.clone()) - qi(4);
            let a_ = separate.crop((lo.clone(), hi.clone())).unwrap();
            let b_ = joint.crop((lo, hi)).unwrap();
            for (z, f) in a_.terms() {
                let g = b_.get(z).unwrap();
                let cut = f.cutoff().unwrap().min(g.cutoff().unwrap()).clone();
                assert_eq!(f.truncate(&cut), g.truncate(&cut));
            }
            // σ^ℓ(L¹_a) = L¹_{a+ℓ}
            let target = level1_character(underline(a + flow), &order, 1152).unwrap();
            let flowed = l1.flow(flow, &qi(1)).unwrap();
            for (z, f) in target.terms() {
                if let Some(g) = flowed.get(z) {
                    let cut = f.cutoff().unwrap().min(g.cutoff().unwrap()).clone();
                    assert_eq!(f.truncate(&cut), g.truncate(&cut));
                }
            }
        }
    }
}
