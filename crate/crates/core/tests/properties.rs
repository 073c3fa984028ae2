//! Randomized invariants over small codes and designs.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qrd_core::codes::{macwilliams_transform, weight_distribution, weight_distribution_direct, LinearCode, DEFAULT_BUDGET};
use qrd_core::designs::{
    am_largest_weight, check_t_design, derived_lambdas, jacobi_design_sweep, BlockMultiset, JacobiVerdict,
};
use qrd_core::gf::{construct_field, FieldSpec};
use qrd_core::{codes, Exec};

/// (characteristic, degree) of the fields exercised: F2, F3, F4, F9.
const FIELDS: [(u64, u32); 4] = [(2, 1), (3, 1), (2, 2), (3, 2)];

fn random_code(field: usize, n: usize, k: usize, seed: u64) -> LinearCode {
    let (r, deg) = FIELDS[field];
    let f: FieldSpec = construct_field(r, deg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(0..f.order())).collect())
        .collect();
    LinearCode::from_generators(&f, n, rows).unwrap()
}

fn code_params() -> impl Strategy<Value = (usize, usize, usize, u64)> {
    (0..FIELDS.len(), 1usize..=20)
        .prop_flat_map(|(f, n)| (Just(f), Just(n), 1..=n.min(10), any::<u64>()))
}

/// Parameters with `q^k <= 2^20` and `q^(n-k) <= 2^20`, so both the code
/// and its dual can be enumerated.
fn enumerable_params() -> impl Strategy<Value = (usize, usize, usize, u64)> {
    (0..FIELDS.len())
        .prop_flat_map(|f| {
            let (r, deg) = FIELDS[f];
            let bits = (r as f64).log2() * deg as f64;
            let side = ((20.0 / bits).floor() as usize).min(10);
            (Just(f), 1..=side, 0..=side)
        })
        .prop_flat_map(|(f, k, co)| (Just(f), Just((k + co).min(20)), Just(k), any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn macwilliams_matches_direct_enumeration((field, n, k, seed) in enumerable_params()) {
        let c = random_code(field, n, k, seed);
        let q = c.spec().order();
        let dual = c.dual_euclidean();
        let direct = weight_distribution_direct(&c, DEFAULT_BUDGET, Exec::Sequential).unwrap();
        let dual_direct = weight_distribution_direct(&dual, DEFAULT_BUDGET, Exec::Parallel).unwrap();
        prop_assert_eq!(&macwilliams_transform(&direct, q).unwrap(), &dual_direct);
        prop_assert_eq!(&macwilliams_transform(&dual_direct, q).unwrap(), &direct);
        // the dual fallback path agrees with direct enumeration
        let budget = (c.size() as u64).saturating_sub(1).max(dual.size() as u64);
        if c.size() > dual.size() {
            prop_assert_eq!(weight_distribution(&c, budget, Exec::Sequential).unwrap(), direct);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn duality_involution_and_rank_nullity((field, n, k, seed) in code_params()) {
        let c = random_code(field, n, k, seed);
        let dual = c.dual_euclidean();
        prop_assert_eq!(c.dim() + dual.dim(), n);
        prop_assert_eq!(&dual.dual_euclidean(), &c);
        let f = c.spec();
        for row in dual.generator_matrix() {
            for g in c.generator_matrix() {
                let dot = g.iter().zip(row).fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y)));
                prop_assert_eq!(dot, 0);
            }
        }
        if c.spec().degree().is_multiple_of(2) {
            let h = c.dual_hermitian().unwrap();
            prop_assert_eq!(c.dim() + h.dim(), n);
            prop_assert_eq!(&h.dual_hermitian().unwrap(), &c);
            for x in h.generator_matrix() {
                for y in c.generator_matrix() {
                    prop_assert_eq!(c.hermitian_product(y, x).unwrap(), 0);
                }
            }
        }
        let meet = c.intersect(&dual).unwrap();
        prop_assert!(meet.is_subcode_of(&c) && meet.is_subcode_of(&dual));
        let back = LinearCode::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn design_check_is_permutation_invariant(
        v in 4usize..10,
        seed in any::<u64>(),
        t in 1usize..=3,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut blocks = BlockMultiset::new(v);
        for _ in 0..rng.gen_range(1..12) {
            let b: Vec<usize> = (0..v).filter(|_| rng.gen_bool(0.5)).collect();
            blocks.insert(b, rng.gen_range(1..3)).unwrap();
        }
        let mut perm: Vec<usize> = (0..v).collect();
        for i in (1..v).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let a = check_t_design(&blocks, t).unwrap();
        let b = check_t_design(&blocks.relabel(&perm).unwrap(), t).unwrap();
        prop_assert_eq!(a.is_design, b.is_design);
        prop_assert_eq!(a.lambda, b.lambda);
        prop_assert_eq!(a.blocks, b.blocks);
    }

    #[test]
    fn am_bound_is_maximal(q in prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 16, 25]), d in 1usize..60) {
        let bracket = |w: usize| w - w.div_ceil(q as usize - 1);
        let w0 = am_largest_weight(d, q, 1000);
        prop_assert!(bracket(w0) < d);
        prop_assert!(bracket(w0 + 1) >= d);
    }

    #[test]
    fn shells_of_random_codes((field, n, k, seed) in code_params()) {
        let c = random_code(field, n.min(12), k.min(5).min(n.min(12)), seed);
        let n = c.len();
        for t in 1..=2usize.min(n) {
            let sweep = jacobi_design_sweep(&c, t, DEFAULT_BUDGET, Exec::Sequential).unwrap();
            for (ell, blocks) in codes::shells(&c, DEFAULT_BUDGET, Exec::Sequential).unwrap() {
                if ell < t {
                    continue;
                }
                let rep = check_t_design(&blocks, t).unwrap();
                match sweep[&ell] {
                    JacobiVerdict::Design { lambda } => {
                        prop_assert!(rep.is_design);
                        prop_assert_eq!(rep.lambda, Some(lambda));
                        // every verified design satisfies the λ chain
                        prop_assert!(derived_lambdas(&rep, n, ell).is_ok());
                    }
                    JacobiVerdict::NotDesign { .. } => prop_assert!(!rep.is_design),
                    JacobiVerdict::EmptyShell => prop_assert!(false, "shell {} is not empty", ell),
                }
            }
        }
    }
}
