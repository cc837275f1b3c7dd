use std::collections::BTreeSet;

use proptest::prelude::*;
use weylstat::clt::{antichain_rate_bound_holds, ks_distance, standardize};
use weylstat::depgraph::build_graph;
use weylstat::exact::{int, ratio, to_f64};
use weylstat::formulas::{self, Statistic, VarianceQuery};
use weylstat::rng::stream_rng;
use weylstat::stats::{self, mc_values};
use weylstat::weyl::{enumerate, sample_uniform};
use weylstat::{Family, RootId, RootSystem, WeylElement, DEFAULT_CAP};

fn sys(s: &str) -> RootSystem {
    RootSystem::build(&s.parse().unwrap()).unwrap()
}

const RANK_LE_5: [&str; 18] = [
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D2", "D3", "D4",
    "D5", "G2",
];
const RANK_LE_4: [&str; 14] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "A2xB2",
];

/// Order of `s_β s_γ` found by repeated composition.
fn rotation_order(rs: &RootSystem, b: RootId, g: RootId) -> u32 {
    let r = WeylElement::reflection(rs, b).compose(&WeylElement::reflection(rs, g));
    let id = WeylElement::identity(rs);
    let mut p = r.clone();
    let mut k = 1;
    while p != id {
        p = p.compose(&r);
        k += 1;
        assert!(k <= 6, "rotation order exceeds 6");
    }
    k
}

#[test]
fn grading_and_height_counts() {
    for s in RANK_LE_5 {
        let rs = sys(s);
        let total: usize = (1..=rs.max_height())
            .map(|h| rs.roots_of_height(h).len())
            .sum();
        assert_eq!(total, rs.len(), "{s}");
        for (a, b) in rs.cover_pairs() {
            assert_eq!(rs.height(b), rs.height(a) + 1, "{s}");
        }
    }
}

#[test]
fn reflection_order_matches_rotation_order() {
    for s in RANK_LE_5.iter().copied().chain(["A6"]) {
        let rs = sys(s);
        for a in rs.ids() {
            for b in rs.ids() {
                let ord = rs.reflection_order(a, b);
                assert_eq!(ord, rs.reflection_order(b, a));
                assert_eq!(ord == 2, rs.inner_product_int(a, b) == 0, "{s}");
                if a != b {
                    assert_eq!(
                        ord,
                        rotation_order(&rs, a, b),
                        "{s} {} {}",
                        rs.render(a),
                        rs.render(b)
                    );
                }
            }
        }
    }
}

#[test]
fn distinct_components_are_orthogonal() {
    let rs = sys("A2xB2xG2");
    for a in rs.ids() {
        for b in rs.ids() {
            if rs.component_of(a) != rs.component_of(b) {
                assert_eq!(rs.inner_product_int(a, b), 0);
                assert_eq!(rs.reflection_order(a, b), 2);
            }
        }
    }
}

#[test]
fn longest_element_complements_inversion_sets() {
    for s in RANK_LE_4 {
        let rs = sys(s);
        let w0 = WeylElement::longest(&rs);
        assert_eq!(w0.inversion_set(&rs).unwrap().len(), rs.len());
        for w in enumerate(&rs, DEFAULT_CAP).unwrap() {
            let inv: BTreeSet<RootId> = w.inversion_set(&rs).unwrap().into_iter().collect();
            let comp: BTreeSet<RootId> = w0
                .compose(&w)
                .inversion_set(&rs)
                .unwrap()
                .into_iter()
                .collect();
            let expected: BTreeSet<RootId> = rs.ids().filter(|r| !inv.contains(r)).collect();
            assert_eq!(comp, expected, "{s} {w}");
        }
    }
}

#[test]
fn parabolic_decomposition() {
    for s in ["A4", "B3", "C3", "D4", "G2", "A1xB2"] {
        let rs = sys(s);
        let simple = rs.all_simple_roots();
        let elements: Vec<WeylElement> = enumerate(&rs, DEFAULT_CAP).unwrap().collect();
        for mask in 0u32..1 << simple.len() {
            let gamma: Vec<RootId> = (0..simple.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| simple[i])
                .collect();
            // roots of the parabolic subsystem: those whose support lies in Γ
            let sub: Vec<RootId> = rs
                .ids()
                .filter(|&b| {
                    simple
                        .iter()
                        .all(|&a| gamma.contains(&a) || !rs.poset_leq(a, b))
                })
                .collect();
            for w in &elements {
                let (wq, wp) = w.parabolic_decompose(&rs, &gamma).unwrap();
                assert_eq!(&wq.compose(&wp), w);
                for &a in &gamma {
                    assert!(!wq.is_inversion(&rs, a).unwrap());
                }
                for &b in &sub {
                    assert_eq!(
                        w.is_inversion(&rs, b).unwrap(),
                        wp.is_inversion(&rs, b).unwrap()
                    );
                }
                // w_Γ only inverts roots of the subsystem
                for b in wp.inversion_set(&rs).unwrap() {
                    assert!(sub.contains(&b), "{s}");
                }
            }
        }
    }
}

#[test]
fn covariance_forms_agree_and_graph_edges_are_nonzero_covariances() {
    for s in ["A5", "B4", "C4", "D4", "G2"] {
        let rs = sys(s);
        let all: Vec<RootId> = rs.ids().collect();
        let g = build_graph(&rs, &all);
        for &a in &all {
            for &b in &all {
                if a == b {
                    continue;
                }
                let c = formulas::cov_closed(&rs, a, b);
                assert_eq!(formulas::cov_closed_angle(&rs, a, b), c, "{s}");
                assert_eq!(g.neighbors(a).contains(&b), c != int(0), "{s}");
            }
        }
    }
}

#[test]
fn height_d_root_counts_are_at_most_two_per_rank_and_height() {
    for r in 1..=50usize {
        for fam in ["A", "B", "C", "D"] {
            if fam != "A" && r < 2 {
                continue;
            }
            let rs = sys(&format!("{fam}{r}"));
            for d in 1..=rs.max_height() {
                assert!(
                    rs.roots_up_to_height(d).len() <= 2 * r * d as usize,
                    "{fam}{r} d={d}"
                );
            }
        }
    }
}

#[test]
fn antichain_rate_inequality_and_variance_bounds() {
    for s in RANK_LE_4 {
        let rs = sys(s);
        for psi in rs
            .antichains(1_000_000)
            .unwrap()
            .into_iter()
            .filter(|a| !a.is_empty())
        {
            let var = formulas::variance_by_pairs(&rs, &psi);
            let k = psi.len() as i64;
            assert!(ratio(k, 12) <= var && var <= ratio(k, 4), "{s}");
            let delta = build_graph(&rs, &psi).max_degree();
            assert!(delta <= 3);
            assert!(antichain_rate_bound_holds(psi.len(), delta, &var), "{s}");
        }
    }
}

#[test]
fn standardized_descents_have_mean_near_zero() {
    // A_{49}, Φ_des^1: mean 49/2 and variance 51/12 from the closed form
    let rs = sys("A49");
    let psi = rs.roots_of_height(1);
    let var = formulas::var_descents(&VarianceQuery {
        family: Family::A,
        n: 50,
        d: 1,
        statistic: Statistic::Descents,
    })
    .unwrap()
    .value;
    assert_eq!(var, ratio(51, 12));
    let n = 50_000;
    let z = standardize(
        &mc_values(&rs, &psi, n, 31),
        &formulas::mean(psi.len()),
        &var,
    )
    .unwrap();
    let m = z.iter().sum::<f64>() / n as f64;
    assert!(m.abs() < 4.0 / (n as f64).sqrt(), "{m}");
}

#[test]
fn ks_of_a_fixed_run_is_bit_stable() {
    let rs = sys("B100");
    let psi = rs.roots_up_to_height(5);
    let var = formulas::system_variance(&rs, 5, Statistic::Inversions).unwrap();
    let ks = || {
        let z = standardize(
            &mc_values(&rs, &psi, 100_000, 77),
            &formulas::mean(psi.len()),
            &var,
        )
        .unwrap();
        ks_distance(&z).unwrap().to_bits()
    };
    assert_eq!(ks(), ks());
}

#[test]
fn sampling_is_independent_of_pool_size() {
    let rs = sys("D7");
    let psi = rs.roots_up_to_height(4);
    let run = |k: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .unwrap()
            .install(|| mc_values(&rs, &psi, 9_000, 123))
    };
    assert_eq!(run(1), run(6));
}

fn element(rs: &RootSystem, seed: u64) -> WeylElement {
    sample_uniform(rs, &mut stream_rng(seed, 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn action_is_a_group_action(sys_ix in 0usize..RANK_LE_4.len(), s1: u64, s2: u64, b in 0usize..64) {
        let rs = sys(RANK_LE_4[sys_ix]);
        let beta = RootId((b % rs.len()) as u32);
        let (u, v) = (element(&rs, s1), element(&rs, s2));
        let uv = u.compose(&v).apply(&rs, beta).unwrap();
        let inner = v.apply(&rs, beta).unwrap();
        let outer = u.apply(&rs, inner.root).unwrap();
        prop_assert_eq!(uv.root, outer.root);
        prop_assert_eq!(uv.negative, inner.negative ^ outer.negative);
        prop_assert_eq!(u.compose(&u.inverse()), WeylElement::identity(&rs));
    }

    #[test]
    fn renderings_round_trip(sys_ix in 0usize..RANK_LE_4.len(), seed: u64, mask: u64) {
        let rs = sys(RANK_LE_4[sys_ix]);
        let w = element(&rs, seed);
        prop_assert_eq!(WeylElement::parse(&rs, &w.render()).unwrap(), w);
        let psi: Vec<RootId> = rs.ids().filter(|r| mask >> (r.0 % 64) & 1 == 1).collect();
        prop_assert_eq!(rs.parse_root_list(&rs.render_list(&psi)).unwrap(), psi);
    }

    #[test]
    fn mean_is_half_the_set_size(sys_ix in 0usize..RANK_LE_4.len(), mask: u64) {
        let rs = sys(RANK_LE_4[sys_ix]);
        let psi: Vec<RootId> = rs.ids().filter(|r| mask >> (r.0 % 64) & 1 == 1).collect();
        prop_assert_eq!(stats::exact_mean(&rs, &psi, DEFAULT_CAP).unwrap(), ratio(psi.len() as i64, 2));
    }

    #[test]
    fn pair_sum_matches_enumeration(sys_ix in 0usize..RANK_LE_4.len(), mask: u64) {
        let rs = sys(RANK_LE_4[sys_ix]);
        let psi: Vec<RootId> = rs.ids().filter(|r| mask >> (r.0 % 64) & 1 == 1).collect();
        prop_assert_eq!(
            formulas::variance_by_pairs(&rs, &psi),
            stats::exact_variance(&rs, &psi, DEFAULT_CAP).unwrap()
        );
    }

    #[test]
    fn ks_ignores_order_and_is_positive_on_lattices(values in prop::collection::vec(0u32..40, 1..300), seed: u64) {
        let z = standardize(&values, &int(20), &int(30)).unwrap();
        let mut shuffled = z.clone();
        use rand::seq::SliceRandom;
        shuffled.shuffle(&mut stream_rng(seed, 0));
        let a = ks_distance(&z).unwrap();
        prop_assert_eq!(a, ks_distance(&shuffled).unwrap());
        prop_assert!(a > 0.0 && a <= 1.0);
    }

    #[test]
    fn lower_bound_case_split(r in 1u64..500, d in 1u64..500) {
        let lb = formulas::var_lower_bound(r, d, &formulas::default_epsilon());
        let expected = if r <= d { r.pow(3) } else if r <= d * d { d.pow(3) } else { r * d };
        prop_assert_eq!(to_f64(&lb.bound), expected as f64 / 100.0);
    }
}
