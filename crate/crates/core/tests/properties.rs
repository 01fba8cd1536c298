use std::sync::OnceLock;

use iwahori::affine_weyl::{AffineWeylGroup, Element};
use iwahori::gln_perm;
use iwahori::notation::{format_element, parse_element};
use iwahori::root_datum::{Dominance, RootDatum};
use iwahori::sigma::SigmaAction;
use iwahori::stembridge::stembridge_chain;
use proptest::prelude::*;

struct Fixture {
    group: AffineWeylGroup,
    sigma: SigmaAction,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        let mut out = Vec::new();
        for (rd, flip) in [
            (RootDatum::gl(3).unwrap(), true),
            (RootDatum::gl(4).unwrap(), true),
            (RootDatum::gsp(4).unwrap(), false),
            (RootDatum::pgl(3).unwrap(), true),
            (RootDatum::sl(3).unwrap(), true),
        ] {
            let group = AffineWeylGroup::new(rd);
            let sigma = if flip {
                SigmaAction::flip(group.datum(), group.weyl()).unwrap()
            } else {
                SigmaAction::identity(group.datum())
            };
            out.push(Fixture { group, sigma });
        }
        out
    })
}

fn element(g: &AffineWeylGroup) -> impl Strategy<Value = Element> + '_ {
    (prop::collection::vec(-3i64..=3, g.rank()), 0..g.weyl().len())
        .prop_map(move |(lambda, u)| g.mul(&g.translation(&lambda), &g.finite_element(u)))
}

fn with_group<S: Strategy>(
    f: impl Fn(&'static AffineWeylGroup) -> S + Clone,
) -> impl Strategy<Value = (usize, S::Value)> {
    (0..fixtures().len()).prop_flat_map(move |i| (Just(i), f(&fixtures()[i].group)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity((i, (x, y, z)) in with_group(|g| (element(g), element(g), element(g)))) {
        let g = &fixtures()[i].group;
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
    }

    #[test]
    fn inverse((i, x) in with_group(element)) {
        let g = &fixtures()[i].group;
        prop_assert_eq!(g.mul(&x, &g.inv(&x)), g.identity());
        prop_assert_eq!(g.length(&g.inv(&x)), g.length(&x));
    }

    #[test]
    fn length_is_subadditive((i, (x, y)) in with_group(|g| (element(g), element(g)))) {
        let g = &fixtures()[i].group;
        prop_assert!(g.length(&g.mul(&x, &y)) <= g.length(&x) + g.length(&y));
    }

    #[test]
    fn reduced_word_has_length_many_letters((i, x) in with_group(element)) {
        let g = &fixtures()[i].group;
        let (word, omega) = g.reduced_word(&x);
        prop_assert_eq!(word.len(), g.length(&x));
        prop_assert_eq!(g.length(&omega), 0);
        let rebuilt = g.mul(&g.product(word.iter().map(|&k| g.generator(k))), &omega);
        prop_assert_eq!(rebuilt, x);
    }

    #[test]
    fn kottwitz_is_a_homomorphism((i, (x, y)) in with_group(|g| (element(g), element(g)))) {
        let g = &fixtures()[i].group;
        let sum = g.pi1().add(&g.kottwitz(&x), &g.kottwitz(&y));
        prop_assert_eq!(g.kottwitz(&g.mul(&x, &y)), sum);
    }

    #[test]
    fn sigma_is_a_length_preserving_homomorphism((i, (x, y)) in with_group(|g| (element(g), element(g)))) {
        let Fixture { group: g, sigma } = &fixtures()[i];
        prop_assert_eq!(
            g.sigma_apply(sigma, &g.mul(&x, &y)),
            g.mul(&g.sigma_apply(sigma, &x), &g.sigma_apply(sigma, &y))
        );
        prop_assert_eq!(g.length(&g.sigma_apply(sigma, &x)), g.length(&x));
        prop_assert_eq!(g.sigma_power_apply(sigma, sigma.order(), &x), x);
    }

    #[test]
    fn parse_print_round_trip((i, x) in with_group(element)) {
        let g = &fixtures()[i].group;
        let s = format_element(g, &x);
        prop_assert_eq!(parse_element(g, &s).unwrap(), x);
    }

    #[test]
    fn bruhat_is_compatible_with_length((i, (x, k)) in with_group(|g| (element(g), 0..g.generators().len()))) {
        let g = &fixtures()[i].group;
        let y = g.mul(&x, g.generator(k));
        let (lo, hi) = if g.length(&y) < g.length(&x) { (y, x) } else { (x, y) };
        prop_assert!(g.bruhat_leq(&lo, &hi));
        prop_assert!(!g.bruhat_leq(&hi, &lo));
        prop_assert!(g.bruhat_leq(&hi, &hi));
    }

    #[test]
    fn affine_permutations_are_a_homomorphism(
        (n, lambda, mu, u, v) in (2usize..=5).prop_flat_map(|n| {
            let fact: usize = (1..=n).product();
            (
                Just(n),
                prop::collection::vec(-2i64..=2, n),
                prop::collection::vec(-2i64..=2, n),
                0..fact,
                0..fact,
            )
        })
    ) {
        let g = AffineWeylGroup::new(RootDatum::gl(n).unwrap());
        let x = g.mul(&g.translation(&lambda), &g.finite_element(u));
        let y = g.mul(&g.translation(&mu), &g.finite_element(v));
        let px = gln_perm::to_affine_perm(&g, &x).unwrap();
        let py = gln_perm::to_affine_perm(&g, &y).unwrap();
        prop_assert_eq!(gln_perm::to_affine_perm(&g, &g.mul(&x, &y)).unwrap(), px.compose(&py));
        prop_assert_eq!(px.inversions(), g.length(&x));
        prop_assert_eq!(gln_perm::from_affine_perm(&g, &px).unwrap(), x);
    }

    #[test]
    fn stembridge_chains_are_valid(
        (i, a, b) in with_group(|g| (
            prop::collection::vec(-3i64..=3, g.rank()),
            prop::collection::vec(-3i64..=3, g.rank()),
        )).prop_map(|(i, (a, b))| (i, a, b))
    ) {
        let rd = fixtures()[i].group.datum();
        let (lambda, _) = rd.dominant_rep(&a);
        let (mu, _) = rd.dominant_rep(&b);
        let pi1 = rd.fundamental_group(None);
        let expected = pi1.project(&lambda) == pi1.project(&mu)
            && rd.dominance_leq(&lambda, &mu, Dominance::Integral).unwrap();
        match stembridge_chain(rd, &lambda, &mu) {
            Ok(chain) => {
                prop_assert!(expected);
                prop_assert!(chain.is_valid(rd));
            }
            Err(_) => prop_assert!(!expected),
        }
    }
}
