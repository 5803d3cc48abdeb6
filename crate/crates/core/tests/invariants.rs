use ginlex::groebner::oracle_hilbert_function;
use ginlex::ideal_file::{parse_ideal_file, IdealFile};
use ginlex::monomial::default_names;
use ginlex::partial_elim::decomposition_check;
use ginlex::{
    buchberger, gin, random_change, Field, FieldChoice, Gf32003, GinOptions, Ideal, Monomial, PartialElimLadder,
    Polynomial, TermOrder,
};
use proptest::prelude::*;

type F = Gf32003;

const N: usize = 4;

/// Homogeneous form of degree `deg` with the given coefficients on the
/// monomials of that degree in graded-lex order.
fn form(deg: u32, coeffs: &[i64]) -> Polynomial<F> {
    let mut monos = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            for c in 0..=deg - a - b {
                monos.push(Monomial::from_slice(&[a, b, c, deg - a - b - c]));
            }
        }
    }
    let terms = monos
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(m, &c)| (F::from_i64(c), m))
        .collect();
    Polynomial::from_terms(N, TermOrder::GradedLex, terms)
}

fn ideal_strategy() -> impl Strategy<Value = Ideal<F>> {
    (
        prop::collection::vec(-3i64..=3, 10),
        prop::collection::vec(-3i64..=3, 20),
        1u32..=2,
    )
        .prop_filter_map("zero generator", |(q, c, extra)| {
            let a = form(2, &q);
            let b = form(extra + 1, &c);
            if a.is_zero() || b.is_zero() {
                return None;
            }
            Ideal::new(N, vec![a, b]).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduced_basis_is_canonical(i in ideal_strategy()) {
        for order in [TermOrder::GradedLex, TermOrder::GradedRevLex] {
            let gb = buchberger(&i, order).unwrap();
            prop_assert!(gb.verify_s_pairs().unwrap());
            for g in i.generators() {
                prop_assert!(gb.contains(g).unwrap());
            }
            let mut rev = i.generators().to_vec();
            rev.reverse();
            prop_assert_eq!(buchberger(&Ideal::new(N, rev).unwrap(), order).unwrap(), gb);
        }
    }

    #[test]
    fn hilbert_function_matches_oracle(i in ideal_strategy()) {
        let initial = buchberger(&i, TermOrder::GradedRevLex).unwrap().initial_ideal();
        for m in 0..=5 {
            prop_assert_eq!(initial.hilbert_function(m), oracle_hilbert_function(&i, m));
        }
    }

    #[test]
    fn coordinate_changes_keep_the_hilbert_function(i in ideal_strategy(), seed in 0u64..1000) {
        let moved = i.apply_change(&random_change::<F>(seed, N - 1, 99)).unwrap();
        for m in 0..=5 {
            prop_assert_eq!(oracle_hilbert_function(&moved, m), oracle_hilbert_function(&i, m));
        }
    }

    #[test]
    fn gin_is_borel_fixed_with_the_same_hilbert_function(i in ideal_strategy()) {
        let g = gin(&i, TermOrder::GradedLex, &GinOptions::default()).unwrap();
        prop_assert!(g.gin.is_borel_fixed());
        for m in 0..=5 {
            prop_assert_eq!(g.gin.hilbert_function(m), oracle_hilbert_function(&i, m));
        }
        let again = gin(&i, TermOrder::GradedLex, &GinOptions::default()).unwrap();
        prop_assert_eq!(again.gin, g.gin);
    }

    #[test]
    fn ladder_decomposes_the_hilbert_function(i in ideal_strategy()) {
        let g = gin(&i, TermOrder::GradedLex, &GinOptions::default()).unwrap();
        let ladder = PartialElimLadder::from_basis(&g.basis).unwrap();
        prop_assert!(ladder.chain_holds().unwrap());
        prop_assert!(ladder.certify_generic().is_ok());
        prop_assert!(ladder.all_borel_fixed());
        prop_assert_eq!(ladder.m_via_ladder(), g.gin.regularity_borel().unwrap());
        for m in 0..=6 {
            prop_assert!(decomposition_check(&i, &ladder, m));
        }
    }

    #[test]
    fn ideal_files_round_trip(i in ideal_strategy()) {
        let file = IdealFile::from_ideal(&i, default_names(N), FieldChoice::Prime(32003), TermOrder::GradedLex);
        let back: Ideal<F> = parse_ideal_file(&file.write()).unwrap().ideal().unwrap();
        prop_assert_eq!(back, i);
    }
}
