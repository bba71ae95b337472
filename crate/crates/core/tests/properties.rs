//! Randomized algebraic laws, plus the fixed-bound kernel checks that go with them.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::Rng;

use superjordan::balgebra::{dmap, tau, Element, Monomial, PolyAz};
use superjordan::expr::{parse_ast, parse_element, print};
use superjordan::field::{FieldElement, FieldSpec};
use superjordan::hopf::{coproduct, g_action, is_primitive, project_l, project_l_tensor, TensorElement};
use superjordan::jordan::{
    decompose_super, eta, eta_inv, homog_product, jordan_embed, nabla, AbstractJordan, Homogeneous, JordanElement,
};
use superjordan::linalg::null_space;
use superjordan::maps::{apply_derivation, apply_omega, exp_derivation, GenDerivation, JordanAut, SuperAut};
use superjordan::poly::Poly;
use superjordan::random::{self, SeededRng};
use superjordan::structure::{brute_annihilator, brute_left_annihilator, semiprime_probe};

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rationals()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
        Just(FieldSpec::prime(7).unwrap()),
    ]
}

fn setup() -> impl Strategy<Value = (FieldSpec, SeededRng)> {
    (fields(), any::<u64>()).prop_map(|(spec, seed)| (spec, random::seeded(seed)))
}

fn az(rng: &mut SeededRng, spec: FieldSpec, max_degree: usize) -> Element {
    PolyAz::new(random::poly(rng, spec, max_degree), random::poly(rng, spec, max_degree)).to_element()
}

fn odd_prime() -> FieldSpec {
    FieldSpec::prime(5).unwrap()
}

fn kernel_dimension<K: Ord + Clone>(spec: FieldSpec, columns: &[BTreeMap<K, FieldElement>]) -> usize {
    null_space(spec, columns).len()
}

fn as_column(u: &Element) -> BTreeMap<Monomial, FieldElement> {
    u.terms().map(|(m, c)| (*m, c.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((spec, mut rng) in setup()) {
        let (a, b, c) = (random::scalar(&mut rng, spec), random::scalar(&mut rng, spec), random::scalar(&mut rng, spec));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert!(spec.int(2).inv().is_ok());
    }

    #[test]
    fn multiplication_is_associative_and_graded((spec, mut rng) in setup()) {
        let u = random::element(&mut rng, spec, 6, 4);
        let v = random::element(&mut rng, spec, 6, 4);
        let w = random::element(&mut rng, spec, 6, 4);
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        let (m, n) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let (f, g) = (random::graded(&mut rng, spec, m, 3), random::graded(&mut rng, spec, n, 3));
        prop_assert!((&f * &g).monomials().all(|mono| mono.degree() == m + n));
    }

    #[test]
    fn ore_laws((spec, mut rng) in setup()) {
        let f = az(&mut rng, spec, 4);
        let g = az(&mut rng, spec, 4);
        let d = |u: &Element| dmap(u).unwrap();
        let t = |u: &Element| tau(u).unwrap();
        prop_assert_eq!(t(&t(&f)), f.clone());
        prop_assert_eq!(t(&d(&f)), -d(&t(&f)));
        let fg = &f * &g;
        prop_assert_eq!(d(&fg), &(&d(&f) * &g) + &(&t(&f) * &d(&g)));
        let d2 = |u: &Element| d(&d(u));
        prop_assert_eq!(d2(&fg), &(&d2(&f) * &g) + &(&f * &d2(&g)));
        let y = Element::y(spec);
        prop_assert_eq!(&y * &f, &(&t(&f) * &y) + &d(&f));
        let y2 = y.pow(2);
        prop_assert_eq!(&(&y2 * &f) - &(&f * &y2), d2(&f));
    }

    #[test]
    fn eta_is_a_bijective_homomorphism((spec, mut rng) in setup()) {
        let f = random::jordan(&mut rng, spec, 10, 3);
        let g = random::jordan(&mut rng, spec, 10, 3);
        prop_assert_eq!(eta(&f.mul(&g)), eta(&f).mul(&eta(&g)));
        prop_assert_eq!(eta_inv(&eta(&f)), f.clone());
        prop_assert_eq!(eta(&eta_inv(&f)), f);
    }

    #[test]
    fn nabla_twisted_leibniz((spec, mut rng) in setup()) {
        let f = random::jordan(&mut rng, spec, 8, 3);
        let g = random::jordan(&mut rng, spec, 8, 3);
        let lhs = nabla(&f.mul(&g));
        let rhs = f.mul(&nabla(&g)).add(&nabla(&f).mul(&eta(&g)));
        prop_assert_eq!(lhs, rhs);
        let p = random::poly(&mut rng, spec, 5);
        prop_assert_eq!(nabla(&JordanElement::from_poly_z(&p)), JordanElement::from_poly_z(&p.euler_d()));
    }

    #[test]
    fn abstract_jordan_embeds((spec, mut rng) in setup()) {
        let gens = [AbstractJordan::gen_x(spec), AbstractJordan::gen_y(spec)];
        let word = |rng: &mut SeededRng| {
            let len = rng.gen_range(0..4);
            (0..len).fold(AbstractJordan::scalar(random::scalar(rng, spec)), |acc, _| acc.mul(&gens[rng.gen_range(0..2)]))
        };
        let (u, v) = (word(&mut rng).add(&word(&mut rng)), word(&mut rng));
        prop_assert_eq!(jordan_embed(&u.mul(&v)), jordan_embed(&u).mul(&jordan_embed(&v)));
    }

    #[test]
    fn super_decomposition_round_trip((spec, mut rng) in setup()) {
        let b = random::element(&mut rng, spec, 8, 6);
        prop_assert_eq!(decompose_super(&b).recompose(), b);
    }

    #[test]
    fn homogeneous_product_formulas((spec, mut rng) in setup()) {
        let pu = rng.gen_range(0..2);
        let pv = rng.gen_range(0..2);
        let u = random::parity_homogeneous(&mut rng, spec, 6, pu, 4);
        let v = random::parity_homogeneous(&mut rng, spec, 6, pv, 4);
        let (hu, hv) = (Homogeneous::from_element(&u).unwrap(), Homogeneous::from_element(&v).unwrap());
        prop_assert_eq!(homog_product(&hu, &hv).to_element(), &u * &v);
    }

    #[test]
    fn coproduct_is_multiplicative((spec, mut rng) in setup()) {
        let u = random::element(&mut rng, spec, 5, 2);
        let v = random::element(&mut rng, spec, 5, 2);
        prop_assert_eq!(coproduct(&(&u * &v)), coproduct(&u).mul(&coproduct(&v)));
    }

    #[test]
    fn parse_print_round_trip((spec, mut rng) in setup()) {
        let u = random::element(&mut rng, spec, 8, 6);
        let text = print(&u);
        let back = parse_element(&text, spec).unwrap();
        prop_assert_eq!(&back, &u);
        prop_assert_eq!(print(&back), text);
    }

    #[test]
    fn annihilators_exist_on_both_sides((spec, mut rng) in setup()) {
        let f = if rng.gen_bool(0.5) {
            random::zero_divisor(&mut rng, spec, 4)
        } else {
            let parity = rng.gen_range(0..2);
            random::parity_homogeneous(&mut rng, spec, 4, parity, 3)
        };
        let bound = f.degree().unwrap_or(0) + 4;
        prop_assert_eq!(brute_annihilator(&f, bound).is_some(), brute_left_annihilator(&f, bound).is_some());
    }

    #[test]
    fn c_lowers_y_degree((spec, mut rng) in setup()) {
        let c = GenDerivation::c(spec);
        let u = random::element(&mut rng, spec, 8, 5);
        let top = u.monomials().map(|m| m.c()).max();
        let image = apply_derivation(&c, &u);
        if let Some(top) = top {
            prop_assert!(image.monomials().all(|m| m.c() < top));
        }
        let mut power = u;
        for _ in 0..=top.unwrap_or(0) {
            power = apply_derivation(&c, &power);
        }
        prop_assert!(power.is_zero());
    }

    #[test]
    fn jordan_aut_composition((spec, mut rng) in setup()) {
        let aut = |rng: &mut SeededRng| JordanAut::new(random::nonzero_scalar(rng, spec), random::poly(rng, spec, 3)).unwrap();
        let (a, b) = (aut(&mut rng), aut(&mut rng));
        let f = random::jordan(&mut rng, spec, 6, 3);
        prop_assert_eq!(a.compose(&b).unwrap().apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn super_aut_inverse((spec, mut rng) in setup()) {
        let sigma = SuperAut::new(random::nonzero_scalar(&mut rng, spec), random::poly(&mut rng, spec, 3)).unwrap();
        let u = random::element(&mut rng, spec, 6, 4);
        prop_assert_eq!(sigma.inverse().apply(&sigma.apply(&u)), u);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn g_action_commutes_with_coproduct((spec, mut rng) in setup()) {
        let u = random::element(&mut rng, spec, 5, 3);
        let g = |v: &Element| g_action(1, v);
        prop_assert_eq!(coproduct(&g(&u)), coproduct(&u).map_factors(&[&g, &g]));
    }

    #[test]
    fn projection_intertwines_coproducts((spec, mut rng) in setup()) {
        let u = random::element(&mut rng, spec, 6, 4);
        prop_assert_eq!(project_l_tensor(&coproduct(&u)), project_l(&u).coproduct());
    }
}

#[test]
fn projection_is_multiplicative() {
    let spec = FieldSpec::rationals();
    let mut rng = random::seeded(3);
    for _ in 0..50 {
        let u = random::element(&mut rng, spec, 6, 4);
        let v = random::element(&mut rng, spec, 6, 4);
        assert_eq!(project_l(&(&u * &v)), project_l(&u).mul(&project_l(&v)));
    }
    assert!(project_l(&Element::z(spec)).poly().is_zero());
}

#[test]
fn precedence_corpus() {
    let q = FieldSpec::rationals();
    let same = |a: &str, b: &str| assert_eq!(parse_element(a, q).unwrap(), parse_element(b, q).unwrap(), "{a} vs {b}");
    same("-y^2", "-(y^2)");
    same("-x*y", "(-x)*y");
    same("x*y^2", "x*(y^2)");
    same("x + y*x", "x + (y*x)");
    same("x - y - z", "(x - y) - z");
    same("2*y^3", "2*(y*y*y)");
    same("z", "x*y + y*x");
    same("(y^2)^2", "y^4");
    assert_ne!(parse_element("(-y)^2", q).unwrap(), parse_element("-y^2", q).unwrap());
    for bad in ["xy", "2x", "x y", "x^", "x +", "(x", "y^-1", "w"] {
        assert!(
            parse_ast(bad).is_err() || parse_element(bad, q).is_err(),
            "{bad} should be rejected"
        );
    }
}

#[test]
fn print_is_idempotent_on_corpus() {
    let corpus = [
        "y*x",
        "x*x",
        "y*z - z*y",
        "(x + y)^3",
        "1/2*y^2 - 3*z",
        "-(x*y)^2",
        "y^2*z*x",
        "0",
        "7",
        "(2/3)*x*y*x",
        "z^2*y - y*z^2",
    ];
    for spec in [FieldSpec::rationals(), FieldSpec::prime(5).unwrap()] {
        for text in corpus {
            let once = print(&parse_element(text, spec).unwrap());
            let twice = print(&parse_element(&once, spec).unwrap());
            assert_eq!(once, twice, "{text} over {spec}");
        }
    }
}

#[test]
fn xy_relations() {
    for spec in [FieldSpec::rationals(), odd_prime()] {
        let xy = &Element::x(spec) * &Element::y(spec);
        let other = &Element::z(spec) - &xy;
        assert!((&other * &xy).is_zero());
        assert!((&xy * &other).is_zero());
    }
}

#[test]
fn kernel_of_d_and_fixed_ring_of_tau() {
    for spec in [FieldSpec::rationals(), FieldSpec::prime(3).unwrap(), odd_prime()] {
        let p = spec.characteristic() as u32;
        let basis: Vec<Element> = (0..12u32)
            .flat_map(|b| {
                [
                    Element::monomial(spec, Monomial::new(0, b, 0)),
                    Element::monomial(spec, Monomial::new(1, b, 0)),
                ]
            })
            .collect();
        let image_columns = |map: &dyn Fn(&Element) -> Element| -> Vec<BTreeMap<Monomial, FieldElement>> {
            basis.iter().map(|m| as_column(&map(m))).collect()
        };
        let d_kernel = kernel_dimension(spec, &image_columns(&|m| dmap(m).unwrap()));
        let expected = if p == 0 {
            1
        } else {
            (0..12).filter(|b| b % p == 0).count()
        };
        assert_eq!(d_kernel, expected, "ker d over {spec}");
        let tau_fixed = kernel_dimension(spec, &image_columns(&|m| &tau(m).unwrap() - m));
        assert_eq!(tau_fixed, 12, "fixed ring of tau over {spec}");
        for v in null_space(spec, &image_columns(&|m| &tau(m).unwrap() - m)) {
            let f = basis
                .iter()
                .zip(&v)
                .fold(Element::zero(spec), |acc, (m, c)| &acc + &m.scale(c));
            assert!(f.monomials().all(|m| m.a() == 0));
        }
    }
}

#[test]
fn fixed_points_of_eta() {
    for spec in [FieldSpec::rationals(), FieldSpec::prime(3).unwrap()] {
        let p = spec.characteristic() as u32;
        let basis: Vec<(u32, u32)> = (0..=8u32).flat_map(|b| (0..=8u32).map(move |k| (b, k))).collect();
        let columns: Vec<BTreeMap<Monomial, FieldElement>> = basis
            .iter()
            .map(|&(b, k)| {
                let f = JordanElement::new(Element::monomial(spec, Monomial::new(0, b, 2 * k))).unwrap();
                as_column(&(eta(&f).as_element() - f.as_element()))
            })
            .collect();
        let expected = basis
            .iter()
            .filter(|(_, k)| if p == 0 { *k == 0 } else { k % p == 0 })
            .count();
        assert_eq!(
            kernel_dimension(spec, &columns),
            expected,
            "fixed points of eta over {spec}"
        );
    }
}

#[test]
fn omega_fixes_jordan_generators() {
    let spec = FieldSpec::rationals();
    let (z, y2) = (Element::z(spec), Element::y(spec).pow(2));
    assert_eq!(apply_omega(&z).unwrap(), z);
    assert_eq!(apply_omega(&y2).unwrap(), y2);
    assert!(apply_omega(&Element::x(spec)).is_err());
}

#[test]
fn exp_derivation_terminates_with_degree_bound() {
    let spec = FieldSpec::rationals();
    let mut rng = random::seeded(9);
    for _ in 0..30 {
        let s = random::poly(&mut rng, spec, 3);
        let u = random::element(&mut rng, spec, 8, 5);
        let image = exp_derivation(&s, &u).unwrap();
        let sigma = SuperAut::new(spec.one(), s).unwrap();
        assert_eq!(image, sigma.apply(&u));
    }
    assert!(exp_derivation(&Poly::from_ints(odd_prime(), &[1]), &Element::y(odd_prime())).is_err());
}

#[test]
fn frobenius_primitives_over_f3() {
    let spec = FieldSpec::prime(3).unwrap();
    for u in [Element::z(spec).pow(3), Element::y(spec).pow(6)] {
        let expected =
            TensorElement::pure(&[&u, &Element::one(spec)]).add(&TensorElement::pure(&[&Element::one(spec), &u]));
        assert_eq!(coproduct(&u), expected);
        assert!(is_primitive(&u));
    }
}

#[test]
fn semiprime_probe_passes() {
    for spec in [FieldSpec::rationals(), odd_prime()] {
        let report = semiprime_probe(spec, 50, 4, 4, 17);
        assert!(report.passed(), "{:?}", report.failures);
    }
}
