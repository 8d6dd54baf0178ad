use num_traits::Zero;

use super::*;
use crate::exact::{q, qi, Rational, SparseVec};

fn base() -> (Rational, Rational, Rational) {
    (q(-1, 2), q(2, 7), q(1, 5))
}

fn sys() -> FreeFieldSystem {
    let (l, h, lam) = base();
    FreeFieldSystem::new(FreeFieldSpec::verma(l, h, lam)).unwrap()
}

#[test]
fn gplus_is_psi_plus() {
    let s = sys();
    let v = ff_apply(&s, &N2ModeOp::new(N2Generator::Gplus, q(-1, 2)).unwrap(), &s.top()).unwrap();
    assert_eq!(v, fermion_vacuum());
}

#[test]
fn gminus_on_fermion_vacuum() {
    let (l, h, lam) = base();
    let s = sys();
    let op = from_fermion_grading(N2Generator::Gminus, q(-1, 2)).unwrap();
    let v = ff_apply(&s, &op, &fermion_vacuum()).unwrap().scaled(&gminus_scale(&l));
    let x = &l * &lam / qi(4);
    let p1 = (&l + qi(2)) * &h - &x * &x - (&l + qi(1)) * &x;
    assert_eq!(p1, p_r(&l, &h, &lam, 1));
    assert_eq!(v, s.top().scaled(&p1));
}

#[test]
fn gminus_on_top_gives_second_factor() {
    let (l, h, lam) = base();
    let s = sys();
    let v = ff_apply(&s, &N2ModeOp::new(N2Generator::Gminus, q(-1, 2)).unwrap(), &s.top()).unwrap();
    let expect = SparseVec::term(FfMonomial { bt: vec![1], ..FfMonomial::top() }, p_r(&l, &h, &lam, 2));
    assert_eq!(v.scaled(&gminus_scale(&l)), expect);
}

#[test]
fn j0_is_diagonal() {
    let (l, _, lam) = base();
    let s = sys();
    let engine = s.engine().unwrap();
    let j0 = N2ModeOp::new(N2Generator::J, qi(0)).unwrap();
    let mu = -&l * &lam / (qi(2) * (&l + qi(2))) - qi(1);
    for b in s.module.basis_up_to(&q(5, 2)) {
        let v = s.real.apply(&engine, &j0, &SparseVec::basis(b.clone())).unwrap();
        assert_eq!(v, SparseVec::term(b.clone(), &mu + qi(b.charge())), "{b}");
    }
}

#[test]
fn relations_to_level_two() {
    let (l, h, lam) = base();
    let rep = verify_relations(&l, &h, &lam, &qi(2)).unwrap();
    assert!(rep.checked > 1000);
    assert!(rep.mismatches.is_empty(), "{}", rep.to_json());
}

#[test]
fn central_term_and_current() {
    let (l, h, lam) = base();
    let s = FreeFieldSystem::new(FreeFieldSpec::verma(l.clone(), h, lam)).unwrap();
    let engine = s.engine().unwrap();
    let z = s.top();
    let c = n2_central_charge(&l);
    let gp = s.real.field(N2Generator::Gplus);
    let gm = s.real.field(N2Generator::Gminus);
    // {G⁺_{3/2}, G⁻_{−3/2}} = 2T₀ + 3J₀ + (2/3)c on z
    let lhs = engine.supercommutator(gp, &q(3, 2), gm, &q(-3, 2), &z).unwrap();
    let (delta, mu) = top_eigenvalues(&s.module.spec().ell, &s.module.spec().h, &s.module.spec().lambda).unwrap();
    let central = q(2, 3) * &c;
    assert_eq!(lhs, z.scaled(&(qi(2) * delta + qi(3) * mu + central)));
    let jj = s.real.field(N2Generator::J);
    for b in s.module.basis_up_to(&qi(2)) {
        let v = SparseVec::basis(b);
        for m in -2..=2i64 {
            let got = engine.supercommutator(jj, &qi(m), jj, &qi(-m), &v).unwrap();
            assert_eq!(got, v.scaled(&(qi(m) * &c / qi(3))));
        }
    }
}

#[test]
fn top_matches_closed_form() {
    let (l, h, lam) = base();
    let t = top_data(&l, &h, &lam).unwrap();
    let delta = &h - q(1, 2) - &l * &l * &lam * &lam / (qi(16) * (&l + qi(2))) - &l * &lam / qi(4);
    let mu = -&l * &lam / (qi(2) * (&l + qi(2))) - qi(1);
    assert_eq!(t.delta, delta);
    assert_eq!(t.mu, mu);
    assert!(t.delta_symmetric());
    assert!(t.mu_sum().is_zero());
    assert_eq!(lambda_tau(&l, &t.lambda_tau).unwrap(), lam);
}

#[test]
fn factor_ladders() {
    let (l, h, lam) = base();
    for b in 1..=3 {
        let ladder: Vec<_> = (0..b).map(|i| q(2 * (b - i) - 1, 2)).collect();
        assert!(gminus_factor_check(&l, &h, &lam, &ladder).unwrap());
    }
    assert!(gminus_factor_check(&l, &h, &lam, &[q(3, 2)]).is_err());
}

#[test]
fn factor_at_root_of_p2() {
    // p₂ = 0 ⇔ (ℓ+2)h = (1+x)² + (ℓ+1)(1+x)
    let (l, _, lam) = base();
    let x = qi(1) + &l * &lam / qi(4);
    let h = (&x * &x + (&l + qi(1)) * &x) / (&l + qi(2));
    assert!(p_r(&l, &h, &lam, 2).is_zero());
    let ladder = [q(3, 2), q(1, 2)];
    assert!(gminus_factor_check(&l, &h, &lam, &ladder).unwrap());
    let s = FreeFieldSystem::new(FreeFieldSpec::verma(l.clone(), h, lam)).unwrap();
    let engine = s.engine().unwrap();
    let mut w = fermion_vacuum();
    for d in ladder.iter().rev() {
        w = s.real.apply(&engine, &from_fermion_grading(N2Generator::Gminus, -d.clone()).unwrap(), &w).unwrap();
    }
    assert!(w.is_zero());
}

#[test]
fn generation_generic() {
    let (l, h, lam) = base();
    assert!(is_generic(&l, &h, &lam, 6).unwrap());
    let rows = generation_check(&l, &h, &lam, &qi(2)).unwrap();
    assert_eq!(rows[0], (qi(0), 1, 1));
    for (d, got, full) in rows {
        assert_eq!(got, full, "level {d}");
    }
}

#[test]
fn generation_fails_when_p1_vanishes() {
    let (l, _, lam) = base();
    let x = &l * &lam / qi(4);
    let h = (&x * &x + (&l + qi(1)) * &x) / (&l + qi(2));
    let rows = generation_check(&l, &h, &lam, &q(1, 2)).unwrap();
    assert_eq!(rows[0].1, rows[0].2);
    assert!(rows[1].1 < rows[1].2);
}

#[test]
fn c1_generator_states_are_members() {
    let spec = FreeFieldSpec::verma(q(-1, 2), q(2, 7), q(1, 5));
    let mut c1 = C1Space::new(spec).unwrap();
    let engine = c1.system().engine().unwrap();
    let t2 = N2ModeOp::new(N2Generator::T, qi(-2)).unwrap();
    let w = c1.system().real.apply(&engine, &t2, &fermion_vacuum()).unwrap();
    drop(engine);
    assert!(c1.contains(&w).unwrap());
}

#[test]
fn c1_excludes_t_minus_one_on_verma() {
    let spec = FreeFieldSpec::verma(q(-1, 2), q(2, 7), q(1, 5));
    let mut c1 = C1Space::new(spec).unwrap();
    let engine = c1.system().engine().unwrap();
    let t1 = N2ModeOp::new(N2Generator::T, qi(-1)).unwrap();
    let w = c1.system().real.apply(&engine, &t1, &fermion_vacuum()).unwrap();
    drop(engine);
    assert!(!c1.contains(&w).unwrap());
}

#[test]
fn c1_rejects_inhomogeneous() {
    let spec = FreeFieldSpec::verma(q(-1, 2), q(2, 7), q(1, 5));
    let mut w = fermion_vacuum();
    w.add_term(FfMonomial::top(), qi(1));
    assert!(c1_membership(spec, &w).is_err());
}

#[test]
fn step_one_at_dual_data() {
    let spec = FreeFieldSpec::simple(q(-1, 2), qi(0), q(1, 5));
    let mut c1 = C1Space::new(spec).unwrap();
    let target = step_one_target(c1.system(), 1).unwrap();
    assert!(!target.is_zero());
    assert!(c1.contains(&target).unwrap());
}

#[test]
fn step_three_quotient() {
    let spec = FreeFieldSpec::simple(q(-1, 2), qi(0), q(1, 5));
    let mut c1 = C1Space::new(spec).unwrap();
    let dims = c1.quotient_dims(&qi(3)).unwrap();
    let total: usize = dims.values().sum();
    assert_eq!(total, 4, "{dims:?}");
    let span = step_three_spanning_set(c1.system(), 1).unwrap();
    assert_eq!(span.len(), 5);
    assert!(c1.spans_quotient(&span, &qi(3)).unwrap());
}

#[test]
fn step_two_at_dual_data() {
    let spec = FreeFieldSpec::simple(q(-1, 2), qi(0), q(1, 5));
    let mut c1 = C1Space::new(spec).unwrap();
    let target = step_two_target(c1.system(), 1).unwrap();
    assert!(!target.is_zero());
    assert!(c1.contains(&target).unwrap());
}
