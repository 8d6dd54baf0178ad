use num_traits::Zero;

use super::*;
use crate::exact::{q, qi, Rational, SparseVec};
use crate::n2::{FfMonomial, FreeFieldModule, FreeFieldSpec};
use crate::virasoro::Verma;

fn combo(terms: &[(&str, Rational, Rational)], central: Rational) -> ModeCombination {
    ModeCombination {
        terms: terms.iter().map(|(g, n, c)| (Mode::new(g, n.clone()), c.clone())).collect(),
        central,
    }
    .normalized()
}

#[test]
fn n2_brackets() {
    let c = q(7, 3);
    let a = Algebra::n2(c.clone());
    let got = a.commutator(&Mode::new("G+", q(1, 2)), &Mode::new("G-", q(-1, 2))).unwrap();
    assert_eq!(got, combo(&[("T", qi(0), qi(2)), ("J", qi(0), qi(1))], qi(0)));
    let got = a.commutator(&Mode::new("G+", q(3, 2)), &Mode::new("G-", q(-3, 2))).unwrap();
    assert_eq!(got, combo(&[("T", qi(0), qi(2)), ("J", qi(0), qi(3))], q(2, 3) * &c));
    // odd-odd brackets are symmetric
    let swapped = a.commutator(&Mode::new("G-", q(-3, 2)), &Mode::new("G+", q(3, 2))).unwrap();
    assert_eq!(swapped, got);
}

#[test]
fn virasoro_bracket() {
    let a = Algebra::virasoro(q(1, 2));
    let got = a.commutator(&Mode::new("L", qi(1)), &Mode::new("L", qi(-1))).unwrap();
    assert_eq!(got, combo(&[("L", qi(0), qi(2))], qi(0)));
    let got = a.commutator(&Mode::new("L", qi(2)), &Mode::new("L", qi(-2))).unwrap();
    assert_eq!(got, combo(&[("L", qi(0), qi(4))], q(1, 4)));
}

#[test]
fn bracket_errors() {
    let a = Algebra::virasoro(qi(1));
    assert!(a.commutator(&Mode::new("J", qi(0)), &Mode::new("L", qi(0))).is_err());
    assert!(a.commutator(&Mode::new("L", q(1, 2)), &Mode::new("L", qi(0))).is_err());
}

fn modes_of(a: &Algebra, range: i64) -> Vec<Mode> {
    let mut out = Vec::new();
    for g in a.generators() {
        for n in -range..=range {
            let idx = match g.moding {
                Moding::Integer => qi(n),
                Moding::HalfInteger => qi(n) + q(1, 2),
            };
            out.push(Mode::new(&g.name, idx));
        }
    }
    out
}

fn super_jacobi(a: &Algebra, range: i64) {
    let modes = modes_of(a, range);
    for x in &modes {
        for y in &modes {
            for z in &modes {
                let px = a.parity_of(x).unwrap();
                let py = a.parity_of(y).unwrap();
                let lhs = a.commutator_with(x, &a.commutator(y, z).unwrap()).unwrap();
                let mut rhs = ModeCombination::default();
                let xy = a.commutator(x, y).unwrap();
                for (m, c) in &xy.terms {
                    rhs.add_scaled(&a.commutator(m, z).unwrap(), c);
                }
                let yxz = a.commutator_with(y, &a.commutator(x, z).unwrap()).unwrap();
                rhs.add_scaled(&yxz, &koszul(px, py));
                let rhs = rhs.normalized();
                assert_eq!(lhs.terms, rhs.terms, "{x} {y} {z}");
                assert_eq!(lhs.central, rhs.central, "{x} {y} {z}");
            }
        }
    }
}

#[test]
fn jacobi_virasoro() {
    super_jacobi(&Algebra::virasoro(q(-22, 5)), 3);
}

#[test]
fn jacobi_n2() {
    super_jacobi(&Algebra::n2(q(3, 5)), 2);
}

#[test]
fn jacobi_free_field() {
    super_jacobi(&Algebra::free_field(q(-2, 5), q(-24, 1)), 2);
}

fn ff(lambda: Rational) -> FreeFieldModule {
    FreeFieldModule::new(FreeFieldSpec::verma(q(-1, 2), q(2, 7), lambda)).unwrap()
}

#[test]
fn fermion_bilinear_on_vacuum() {
    let m = ff(q(1, 5));
    let mut arena = FieldArena::new(m.algebra().clone());
    let pp = arena.generator("psi+").unwrap();
    let pm = arena.generator("psi-").unwrap();
    let np = arena.normal(pp, pm);
    let engine = ModeEngine::new(&m, &arena).unwrap();
    let vac = SparseVec::basis(FfMonomial { b: vec![1], ..FfMonomial::top() });
    assert!(engine.mode(np, &qi(0), &vac).unwrap().is_zero());
}

#[test]
fn heisenberg_square_on_top() {
    let lam = q(3, 4);
    let m = ff(lam.clone());
    let mut arena = FieldArena::new(m.algebra().clone());
    let x = arena.generator("X").unwrap();
    let xx = arena.normal(x, x);
    let engine = ModeEngine::new(&m, &arena).unwrap();
    let top = SparseVec::basis(FfMonomial::top());
    assert_eq!(engine.mode(xx, &qi(0), &top).unwrap(), top.scaled(&(&lam * &lam)));
}

#[test]
fn derivative_law() {
    let m = ff(q(1, 5));
    let mut arena = FieldArena::new(m.algebra().clone());
    let x = arena.generator("X").unwrap();
    let pm = arena.generator("psi-").unwrap();
    let a = arena.normal(x, pm);
    let da = arena.deriv(a);
    let wa = arena.weight(a).clone();
    let engine = ModeEngine::new(&m, &arena).unwrap();
    for b in m.basis_up_to(&q(3, 2)) {
        let v = SparseVec::basis(b);
        for k in -3..=3 {
            let n = qi(k) + q(1, 2);
            let lhs = engine.mode(da, &n, &v).unwrap();
            let rhs = engine.mode(a, &n, &v).unwrap().scaled(&-(&n + &wa));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn composite_modes_respect_grading() {
    let m = ff(q(1, 5));
    let mut arena = FieldArena::new(m.algebra().clone());
    let l = arena.generator("L").unwrap();
    let x = arena.generator("X").unwrap();
    let pp = arena.generator("psi+").unwrap();
    let lx = arena.normal(l, x);
    let a = arena.normal(lx, pp);
    let engine = ModeEngine::new(&m, &arena).unwrap();
    for b in m.basis_up_to(&qi(2)) {
        let d = b.depth();
        for k in -2..=2 {
            let n = qi(k) + q(1, 2);
            for (out, _) in engine.mode(a, &n, &SparseVec::basis(b.clone())).unwrap().iter() {
                assert_eq!(out.depth(), &d - &n);
            }
        }
    }
}

#[test]
fn words_on_states() {
    let m = ff(q(1, 5));
    let mut arena = FieldArena::new(m.algebra().clone());
    let pp = arena.generator("psi+").unwrap();
    let engine = ModeEngine::new(&m, &arena).unwrap();
    let v = SparseVec::basis(FfMonomial::top());
    assert_eq!(engine.apply_word(&[], &v).unwrap(), v);
    let w = [(pp, q(-1, 2)), (pp, q(-1, 2))];
    assert!(engine.apply_word(&w, &v).unwrap().is_zero());
}

#[test]
fn words_match_verma() {
    let verma = Verma::new(q(1, 3), q(2, 5));
    let mut arena = FieldArena::new(verma.algebra().clone());
    let l = arena.generator("L").unwrap();
    let engine = ModeEngine::new(&verma, &arena).unwrap();
    let top = SparseVec::basis(vec![]);
    let got = engine.apply_word(&[(l, qi(-1)), (l, qi(-1))], &top).unwrap();
    assert_eq!(got, verma.lower(&[1, 1], &top));
    let got = engine.apply_word(&[(l, qi(1)), (l, qi(-1))], &top).unwrap();
    assert_eq!(got, top.scaled(&q(4, 5)));
}

#[test]
fn mismatched_algebras_rejected() {
    let verma = Verma::new(q(1, 3), q(2, 5));
    let arena = FieldArena::new(Algebra::n2(qi(1)));
    assert!(ModeEngine::new(&verma, &arena).is_err());
    let mut arena = FieldArena::new(Algebra::n2(qi(1)));
    assert!(arena.generator("psi+").is_err());
}

#[test]
fn translation_and_grading_laws() {
    // [L_{−1}, A_n] = (∂A)_{n−1} and [L_0, A_n] = −n A_n for A = :LL:
    let verma = Verma::new(q(1, 3), q(2, 5));
    let mut arena = FieldArena::new(verma.algebra().clone());
    let l = arena.generator("L").unwrap();
    let ll = arena.normal(l, l);
    let dll = arena.deriv(ll);
    let engine = ModeEngine::new(&verma, &arena).unwrap();
    for p in crate::exact::partitions::partitions(3) {
        let v = SparseVec::basis(p);
        for n in -2..=3 {
            let lhs = engine.supercommutator(l, &qi(-1), ll, &qi(n), &v).unwrap();
            assert_eq!(lhs, engine.mode(dll, &qi(n - 1), &v).unwrap());
            let lhs0 = engine.supercommutator(l, &qi(0), ll, &qi(n), &v).unwrap();
            assert_eq!(lhs0, engine.mode(ll, &qi(n), &v).unwrap().scaled(&qi(-n)));
        }
    }
}

#[test]
fn scalar_and_sum() {
    let verma = Verma::new(q(1, 3), q(2, 5));
    let mut arena = FieldArena::new(verma.algebra().clone());
    let l = arena.generator("L").unwrap();
    let l3 = arena.scale(qi(3), l);
    let s = arena.sum(vec![l, l3]).unwrap();
    let engine = ModeEngine::new(&verma, &arena).unwrap();
    let v = SparseVec::basis(vec![2]);
    assert_eq!(engine.mode(s, &qi(-1), &v).unwrap(), engine.mode(l, &qi(-1), &v).unwrap().scaled(&qi(4)));
    assert!(Rational::zero() == engine.mode(s, &qi(5), &v).unwrap().get(&vec![]));
}
