use gaudin_duality::cyclotomic::sp2n::{basis_pairs, decompose, e_bar, sign};
use gaudin_duality::cyclotomic::{diagram_automorphism, verify_cyclotomic_duality, CycloInstance, Mu};
use gaudin_duality::gaudin::duality::{verify_classical_bosonic_duality, verify_classical_fermionic_duality};
use gaudin_duality::gaudin::realize::verify_homomorphism;
use gaudin_duality::gaudin::takiff::enumerate_generators;
use gaudin_duality::gaudin::{takiff_bracket, AlgebraSide, Bosonic, Divisor, Fermionic, Quantum, Realization, TakiffGenerator};
use gaudin_duality::{rat, ratio, Matrix, Rational};
use proptest::prelude::*;
use std::collections::BTreeMap;

type Element = BTreeMap<TakiffGenerator, Rational>;

fn bracket(x: &Element, y: &Element, d: &Divisor) -> Element {
    let mut out = Element::new();
    for (g1, c1) in x {
        for (g2, c2) in y {
            for (g, c) in takiff_bracket(g1, g2, d) {
                *out.entry(g).or_insert_with(|| rat(0)) += c * c1 * c2;
            }
        }
    }
    out.retain(|_, c| *c != rat(0));
    out
}

fn add(x: &Element, y: &Element) -> Element {
    let mut out = x.clone();
    for (g, c) in y {
        *out.entry(*g).or_insert_with(|| rat(0)) += c;
    }
    out.retain(|_, c| *c != rat(0));
    out
}

fn single(g: TakiffGenerator) -> Element {
    [(g, rat(1))].into()
}

fn divisor() -> impl Strategy<Value = Divisor> {
    prop::collection::vec(1usize..4, 1..3).prop_map(|degrees| {
        Divisor::new(degrees.into_iter().enumerate().map(|(i, d)| (rat(i as i64 + 1), d)).collect()).unwrap()
    })
}

/// Distinct rational points with the given degrees.
fn points(degrees: Vec<usize>) -> impl Strategy<Value = Vec<(Rational, usize)>> {
    let n = degrees.len();
    prop::collection::btree_set((-9i64..10, 1i64..4), n..=n).prop_filter_map("distinct values", move |set| {
        let mut seen: Vec<Rational> = Vec::new();
        for (p, q) in &set {
            let r = ratio(*p, *q);
            if seen.contains(&r) {
                return None;
            }
            seen.push(r);
        }
        Some(seen.into_iter().zip(degrees.clone()).collect())
    })
}

fn composition(max_total: usize, max_part: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=max_part, 1..=max_total).prop_filter("total", move |v| v.iter().sum::<usize>() <= max_total)
}

fn realization(max_rank: usize, max_degree: usize) -> impl Strategy<Value = Realization> {
    (composition(max_rank, max_degree), composition(max_rank, max_degree))
        .prop_flat_map(|(tau, dual)| (points(tau), points(dual)))
        .prop_map(|(tau, dual)| {
            let n = tau.iter().map(|(_, d)| d).sum();
            let m = dual.iter().map(|(_, d)| d).sum();
            Realization::new(m, n, Divisor::new(tau).unwrap(), Divisor::new(dual).unwrap()).unwrap()
        })
}

fn rational_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..4, n * n).prop_map(move |e| Matrix::new(n, n, e.into_iter().map(rat).collect()))
}

fn commutator(x: &Matrix<Rational>, y: &Matrix<Rational>) -> Matrix<Rational> {
    x.mul(y).unwrap().sub(&y.mul(x).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn takiff_bracket_is_a_lie_bracket(d in divisor(), size in 1usize..3, picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let gens = enumerate_generators(size, &d);
        let pick = |i: &prop::sample::Index| single(gens[i.index(gens.len())]);
        let (x, y, z) = (pick(&picks[0]), pick(&picks[1]), pick(&picks[2]));
        let xy = bracket(&x, &y, &d);
        let yx = bracket(&y, &x, &d);
        prop_assert!(add(&xy, &yx).is_empty());
        let j = add(&add(&bracket(&x, &bracket(&y, &z, &d), &d), &bracket(&y, &bracket(&z, &x, &d), &d)), &bracket(&z, &xy, &d));
        prop_assert!(j.is_empty(), "{:?}", j);
    }

    #[test]
    fn takiff_jacobi_exhaustive_on_small_divisor(d in divisor()) {
        let gens = enumerate_generators(2, &d);
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    let (x, y, z) = (single(*a), single(*b), single(*c));
                    let j = add(
                        &add(&bracket(&x, &bracket(&y, &z, &d), &d), &bracket(&y, &bracket(&z, &x, &d), &d)),
                        &bracket(&z, &bracket(&x, &y, &d), &d),
                    );
                    prop_assert!(j.is_empty());
                }
            }
        }
    }

    #[test]
    fn bosonic_realisations_are_homomorphisms(real in realization(3, 3)) {
        for side in [AlgebraSide::GlM, AlgebraSide::GlN] {
            let r = verify_homomorphism::<Bosonic>(&real, side).unwrap();
            prop_assert!(r.passed(), "{:?}", r.failure);
        }
    }

    #[test]
    fn fermionic_and_quantum_realisations_are_homomorphisms(real in realization(2, 2)) {
        for side in [AlgebraSide::GlM, AlgebraSide::GlN] {
            prop_assert!(verify_homomorphism::<Fermionic>(&real, side).unwrap().passed());
            prop_assert!(verify_homomorphism::<Quantum>(&real, side).unwrap().passed());
        }
    }

    #[test]
    fn bosonic_duality_at_random_rational_points(real in realization(2, 2)) {
        let r = verify_classical_bosonic_duality(&real).unwrap();
        prop_assert!(r.equal, "{:?}", r.witness);
    }

    #[test]
    fn fermionic_duality_at_random_rational_points(real in realization(2, 2)) {
        let r = verify_classical_fermionic_duality::<Fermionic>(&real).unwrap();
        prop_assert!(r.equal, "{:?}", r.witness);
    }

    #[test]
    fn sigma_is_an_involutive_automorphism(x in rational_matrix(3), y in rational_matrix(3)) {
        let s = diagram_automorphism;
        prop_assert_eq!(s(&s(&x)), x.clone());
        prop_assert_eq!(s(&commutator(&x, &y)), commutator(&s(&x), &s(&y)));
    }

    #[test]
    fn sp2n_basis_round_trip(n in 1usize..4, coords in prop::collection::vec(-3i64..4, 21)) {
        let pairs = basis_pairs(n);
        let mut x = Matrix::<Rational>::zeros(2 * n, 2 * n);
        let mut expected = Vec::new();
        for (k, (i, j)) in pairs.iter().enumerate() {
            let c = rat(coords[k % coords.len()]);
            if c != rat(0) {
                expected.push(((*i, *j), c.clone()));
            }
            x = x.add(&e_bar(n, *i, *j).scale(&c)).unwrap();
        }
        prop_assert_eq!(decompose(n, &x), Some(expected));
    }

    #[test]
    fn cyclotomic_duality_at_random_mu(m in 1usize..3, tau0 in 1usize..3, p in -7i64..8, q in 1i64..5, z1 in 2i64..5) {
        let points: Vec<(i64, usize)> = if tau0 == 1 { vec![(z1, 1)] } else { vec![] };
        let inst = CycloInstance::from_ints(m, tau0, &points, &[5, 7][..m], Mu::Value(ratio(p, q))).unwrap();
        let r = verify_cyclotomic_duality(&inst).unwrap();
        prop_assert!(r.equal, "{:?}", r.witness);
    }
}

#[test]
fn e_bar_reflection_identity() {
    for n in 1..=3usize {
        let idx: Vec<i32> = (1..=n as i32).flat_map(|i| [i, -i]).collect();
        for &i in &idx {
            for &j in &idx {
                let lhs = e_bar(n, -j, -i);
                let rhs = e_bar(n, i, j).scale(&rat(-sign(i) * sign(j)));
                assert_eq!(lhs, rhs, "I = {i}, J = {j}");
            }
        }
    }
}

#[test]
fn takiff_generators_at_infinity_are_central() {
    let d = Divisor::from_ints(&[(1, 2), (2, 1)]).unwrap();
    for g in enumerate_generators(2, &d) {
        assert!(takiff_bracket(&TakiffGenerator::infinity(1, 2), &g, &d).is_empty());
    }
}
