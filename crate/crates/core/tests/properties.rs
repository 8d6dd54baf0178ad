//! Randomized invariants across the library.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;

use admissible::affine::{block_member, block_of, enumerate_simples, normal_form, spectral_flow, BlockId, Kind, ModuleLabel};
use admissible::exact::{fmt_rational, parse_rational, q, qi, Rational, SparseVec};
use admissible::fusion::fuse;
use admissible::levels::{c_vir, dual_of, level_from_uv, undual_of, virasoro_h, AdmissibleLevel};
use admissible::n2::top_data;
use admissible::virasoro::{find_singular_vectors, minimal_fusion, MinimalLabel, Verma};

const LEVELS: [(i64, i64); 4] = [(3, 2), (5, 3), (5, 2), (7, 4)];

fn rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (-max_num..=max_num, 1..=max_den).prop_map(|(n, d)| q(n, d))
}

fn any_label() -> impl Strategy<Value = ModuleLabel> {
    (0..LEVELS.len(), 0..7u8, 1i64..7, 1i64..4, -6i64..=6, rational(13, 11)).prop_filter_map(
        "indices outside the level",
        |(li, kind, r, s, flow, lambda)| {
            let (u, v) = LEVELS[li];
            let lvl = level_from_uv(u, v).unwrap();
            let kind = match kind {
                0 => Kind::L { r },
                1 => Kind::Dplus { r, s },
                2 => Kind::Dminus { r, s },
                3 => Kind::E { lambda, r, s },
                4 => Kind::Eplus { r, s },
                5 => Kind::Eminus { r, s },
                _ => Kind::P { r, s },
            };
            ModuleLabel::new(lvl, flow, kind).ok()
        },
    )
}

fn simple_label() -> impl Strategy<Value = ModuleLabel> {
    any_label().prop_filter("simple kinds", |x| x.kind.is_simple())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rationals_round_trip(x in rational(1_000_000, 10_000)) {
        prop_assert_eq!(parse_rational(&fmt_rational(&x)).unwrap(), x);
    }

    #[test]
    fn labels_round_trip(x in any_label()) {
        let printed = x.to_string();
        prop_assert_eq!(printed.parse::<ModuleLabel>().unwrap(), x.clone());
        let nf = normal_form(&x);
        prop_assert_eq!(nf.to_string().parse::<ModuleLabel>().unwrap(), nf);
    }

    #[test]
    fn normal_form_is_idempotent_and_flow_equivariant(x in any_label(), n in -5i64..=5) {
        let nf = normal_form(&x);
        prop_assert_eq!(normal_form(&nf), nf.clone());
        prop_assert_eq!(normal_form(&x.with_flow(x.flow + n)), spectral_flow(&nf, n));
        prop_assert_eq!(spectral_flow(&spectral_flow(&x, n), -n), nf);
    }

    #[test]
    fn block_parametrization_inverts(li in 0..LEVELS.len(), r in 1i64..7, n in 0i64..4, pos in -30i64..=30) {
        let (u, v) = LEVELS[li];
        prop_assume!(r < u && n < v);
        let lvl = level_from_uv(u, v).unwrap();
        let x = block_member(&lvl, r, n, pos).unwrap();
        prop_assert_eq!(block_of(&x).unwrap(), (BlockId::C { r, n }, pos));
    }

    #[test]
    fn fusion_unit_and_flow(x in simple_label(), r in 1i64..7, n in -3i64..=3) {
        prop_assume!(r < x.level.u);
        let unit = fuse(1, &x).unwrap();
        prop_assert_eq!(unit.summands, BTreeMap::from([(normal_form(&x), 1)]));
        let plain = fuse(r, &x).unwrap();
        let flowed = fuse(r, &spectral_flow(&x, n)).unwrap();
        let expected: BTreeMap<_, _> = plain.summands.iter().map(|(y, m)| (spectral_flow(y, n), *m)).collect();
        prop_assert_eq!(flowed.summands, expected);
    }

    #[test]
    fn dual_level_inverts(l in rational(40, 17)) {
        prop_assume!(l != qi(-2));
        let k_w = dual_of(&l).unwrap();
        prop_assume!(k_w != qi(-1));
        prop_assert_eq!(undual_of(&k_w).unwrap(), l);
    }

    #[test]
    fn kac_symmetry(u in 2i64..9, v in 1i64..9, r in 1i64..5, s in 1i64..5) {
        let t = q(u, v);
        prop_assume!(r < u && s < v);
        let a = virasoro_h(r, s, &t).unwrap();
        let b = virasoro_h(u - r, v - s, &t).unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn singular_vector_at_kac_weight(num in 1i64..12, den in 1i64..9, r in 1i64..4, s in 1i64..3) {
        prop_assume!(r * s <= 4);
        let t = q(num, den);
        let c = c_vir(&t);
        let h = virasoro_h(r, s, &t).unwrap();
        let n = (r * s) as u32;
        let found = find_singular_vectors(&c, &h, n);
        prop_assert!(!found.is_empty());
        let verma = Verma::new(c.clone(), h.clone());
        for v in &found {
            for k in 1..=2 {
                prop_assert!(verma.act_vec(k, &v.coeffs).is_zero(), "L_{} fails at t = {}", k, t);
            }
        }
        let ones = vec![1u32; n as usize];
        prop_assert!(found.iter().any(|v| v.coeff(&ones).is_one()));
    }

    #[test]
    fn tau_symmetry(ell in rational(9, 7), h in rational(9, 7), lambda in rational(9, 7)) {
        prop_assume!(!ell.is_zero() && ell != qi(-2));
        let d = top_data(&ell, &h, &lambda).unwrap();
        prop_assert!(d.delta_symmetric());
        let d2 = top_data(&ell, &h, &(&lambda + q(1, 3))).unwrap();
        prop_assert_eq!(d.mu_sum(), d2.mu_sum());
    }
}

#[test]
fn enumerable_labels_round_trip() {
    for (u, v) in [(3, 2), (5, 3)] {
        let lvl = AdmissibleLevel::new(u, v).unwrap();
        let xs = enumerate_simples(&lvl, -3..=3, &[q(1, 3), q(2, 7), q(5, 4)]);
        assert!(!xs.is_empty());
        for x in xs {
            assert_eq!(x.to_string().parse::<ModuleLabel>().unwrap(), x);
            assert_eq!(normal_form(&x), x);
        }
    }
}

#[test]
fn minimal_fusion_is_commutative() {
    for (u, v) in [(4, 3), (5, 2), (5, 3)] {
        let all = MinimalLabel::all(u, v).unwrap();
        for a in &all {
            for b in &all {
                assert_eq!(minimal_fusion(a, b).unwrap(), minimal_fusion(b, a).unwrap());
            }
        }
    }
}

#[test]
fn sparse_vectors_cancel() {
    let mut v: SparseVec<u32> = SparseVec::term(3, q(1, 2));
    v.add_scaled(&SparseVec::term(3, qi(1)), &q(-1, 2));
    assert!(v.is_zero());
}
