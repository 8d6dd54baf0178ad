use num_traits::Zero;

use super::*;
use crate::exact::partitions::partition_count;
use crate::exact::{q, qi, Rational, SparseVec};
use crate::levels::{c_vir, virasoro_h};

#[test]
fn gram_low_levels() {
    let (c, h) = (q(3, 7), q(2, 5));
    let g1 = gram_matrix(&c, &h, 1);
    assert_eq!(*g1, vec![vec![qi(2) * &h]]);
    let g2 = gram_matrix(&c, &h, 2);
    let expected = vec![
        vec![qi(8) * &h * &h + qi(4) * &h, qi(6) * &h],
        vec![qi(6) * &h, qi(4) * &h + &c / qi(2)],
    ];
    assert_eq!(*g2, expected);
}

#[test]
fn gram_is_symmetric() {
    let g = gram_matrix(&q(1, 3), &q(5, 4), 5);
    for i in 0..g.len() {
        for j in 0..g.len() {
            assert_eq!(g[i][j], g[j][i]);
        }
    }
}

#[test]
fn singular_examples() {
    let sv = find_singular_vectors(&q(7, 9), &qi(0), 1);
    assert_eq!(sv.len(), 1);
    assert_eq!(sv[0].coeffs, SparseVec::basis(vec![1]));
    let sv = find_singular_vectors(&q(1, 2), &q(1, 16), 2);
    assert_eq!(sv.len(), 1);
    assert_eq!(sv[0].coeff(&[1, 1]), qi(1));
    // L_{-1}^2 - (2/3)(2h+1) L_{-2}
    assert_eq!(sv[0].coeff(&[2]), q(-3, 4));
    assert!(find_singular_vectors(&q(3, 11), &q(5, 13), 3).is_empty());
}

#[test]
fn simple_dims_examples() {
    let t = q(3, 2);
    assert_eq!(simple_graded_dims(&c_vir(&t), &qi(0), 5), vec![1, 0, 0, 0, 0, 0]);
    assert_eq!(simple_graded_dims(&q(3, 11), &q(5, 13), 5), vec![1, 1, 2, 3, 5, 7]);
    assert_eq!(simple_graded_dims(&q(3, 11), &qi(0), 5), vec![1, 0, 1, 1, 2, 2]);
}

#[test]
fn minimal_characters() {
    let m11 = MinimalLabel::new(3, 2, 1, 1).unwrap();
    let ch = minimal_character(&m11, &qi(6)).unwrap();
    assert_eq!(ch.len(), 1);
    assert_eq!(ch.coeff(&qi(0)), qi(1));
    let sigma = MinimalLabel::new(4, 3, 2, 2).unwrap();
    let ch = minimal_character(&sigma, &qi(6)).unwrap();
    assert_eq!(ch.leading_exponent(), Some(&q(1, 24)));
    assert_eq!(sigma.h() - sigma.c() / qi(24), q(1, 16) - q(1, 48));
}

#[test]
fn ising_fusion() {
    let s = MinimalLabel::new(4, 3, 2, 2).unwrap();
    let f = minimal_fusion(&s, &s).unwrap();
    let expect: Vec<_> = [MinimalLabel::new(4, 3, 1, 1).unwrap(), MinimalLabel::new(4, 3, 3, 1).unwrap()].to_vec();
    assert_eq!(f.keys().cloned().collect::<Vec<_>>(), expect);
    assert!(f.values().all(|&m| m == 1));
    assert_eq!(MinimalLabel::new(4, 3, 3, 1).unwrap(), MinimalLabel::new(4, 3, 1, 2).unwrap());
}

#[test]
fn c1_examples() {
    let (c, h) = (q(3, 11), q(5, 13));
    let dims = c1_quotient_dims(&HighestWeightSpec::verma(c.clone(), h), 5).unwrap();
    assert_eq!(dims, vec![1, 1, 1, 1, 1, 1]);
    let vac = HighestWeightSpec::modulo_singular(c.clone(), qi(0), 1).unwrap();
    assert_eq!(c1_quotient_dims(&vac, 5).unwrap(), vec![1, 0, 0, 0, 0, 0]);
    let ising = HighestWeightSpec::modulo_singular(q(1, 2), q(1, 16), 2).unwrap();
    let d = c1_quotient_dims(&ising, 5).unwrap();
    assert!(d.iter().sum::<usize>() <= 2, "{d:?}");
}

#[test]
fn determinant_vanishes_on_kac_table() {
    let t = q(5, 3);
    let c = c_vir(&t);
    for (r, s) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)] {
        let h = virasoro_h(r, s, &t).unwrap();
        for n in (r * s) as u32..=4 {
            assert!(gram_determinant(&c, &h, n).is_zero());
        }
    }
    assert!(!gram_determinant(&c, &q(1, 7), 4).is_zero());
    assert_eq!(partition_count(4), gram_matrix(&c, &q(1, 7), 4).len() as u64);
    let _ = Rational::zero();
}
