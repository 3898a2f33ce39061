use std::collections::BTreeMap;
use std::sync::Arc;

use nimgen_core::builders::{direct_product, GroupSpec};
use nimgen_core::catalog::{verification_set, Q8_SPEC};
use nimgen_core::predict::{factorize, radical};
use nimgen_core::{build, parse_group_spec, ElementSet, FiniteGroup, IntersectionLattice};
use proptest::prelude::*;

fn group(spec: &str) -> FiniteGroup {
    build(&parse_group_spec(spec).unwrap()).unwrap()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn cyclic_order_multiset(m: usize) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for k in 0..m {
        *out.entry(m / gcd(k, m)).or_default() += 1;
    }
    out
}

fn order_multiset(g: &FiniteGroup, set: &ElementSet) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for a in set {
        *out.entry(g.element_order(a)).or_default() += 1;
    }
    out
}

#[test]
fn lagrange_and_maximality() {
    let mut specs: Vec<String> = verification_set(24).iter().map(|e| e.spec.to_string()).collect();
    specs.push("A5".into());
    for spec in specs {
        let g = group(&spec);
        let all = g.all_subgroups().unwrap();
        for h in &all {
            assert_eq!(g.order() % h.order(), 0, "{spec}");
            assert!(g.subgroup(h.as_set().clone()).is_ok());
        }
        if g.order() < 2 {
            continue;
        }
        let max = g.maximal_subgroups().unwrap();
        for (i, a) in max.iter().enumerate() {
            for (j, b) in max.iter().enumerate() {
                assert!(i == j || !a.is_subset(b), "{spec}: maximal subgroups nested");
            }
        }
        for h in &all[..all.len() - 1] {
            assert!(max.iter().any(|m| h.is_subset(m)), "{spec}: proper subgroup outside all maximals");
        }
        if g.is_abelian() {
            for m in max {
                let index = g.order() / m.order();
                assert_eq!(factorize(index).len(), 1, "{spec}: index {index}");
                assert_eq!(factorize(index)[0].1, 1, "{spec}: index {index}");
            }
        }
    }
}

#[test]
fn all_subgroups_matches_exhaustive_closure_for_s3() {
    let g = group("D3");
    let mut brute = std::collections::BTreeSet::new();
    for mask in 0u64..(1 << 6) {
        brute.insert(g.closure(&ElementSet::from_mask(6, mask)).as_set().clone());
    }
    let fast: std::collections::BTreeSet<ElementSet> =
        g.all_subgroups().unwrap().into_iter().map(|s| s.into_set()).collect();
    assert_eq!(fast, brute);
    assert_eq!(fast.len(), 6);
}

#[test]
fn dihedral_maximal_subgroups() {
    for n in 2..=30 {
        let g = group(&format!("D{n}"));
        let primes: Vec<usize> = factorize(n).iter().map(|&(p, _)| p).collect();
        let max = g.maximal_subgroups().unwrap();
        assert_eq!(max.len(), 1 + primes.iter().sum::<usize>(), "D{n}");

        let mut expected: Vec<(usize, BTreeMap<usize, usize>)> = vec![(n, cyclic_order_multiset(n))];
        for &p in &primes {
            let rot = n / p;
            let mut fp = cyclic_order_multiset(rot);
            *fp.entry(2).or_default() += rot;
            for _ in 0..p {
                expected.push((2 * rot, fp.clone()));
            }
        }
        let mut got: Vec<_> = max.iter().map(|m| (m.order(), order_multiset(&g, m))).collect();
        expected.sort();
        got.sort();
        assert_eq!(got, expected, "D{n}");
    }
}

#[test]
fn frattini_orders_of_cyclic_and_dihedral_groups() {
    for n in 2..=64 {
        let z = IntersectionLattice::new(Arc::new(group(&format!("Z{n}")))).unwrap();
        assert_eq!(z.frattini().order(), n / radical(n), "Z{n}");
        let d = IntersectionLattice::new(Arc::new(group(&format!("D{n}")))).unwrap();
        assert_eq!(d.frattini().order(), n / radical(n), "D{n}");
    }
}

#[test]
fn frattini_of_products() {
    let pairs = [
        ("Z4", "Z2"),
        ("Z6", "Z3"),
        ("Z4", "Z6"),
        ("D3", "Z2"),
        ("D4", "Z3"),
        ("Z9", "Z3"),
        ("D3", "Z4"),
        ("Z8", "Z4"),
        ("A4", "Z2"),
        (Q8_SPEC, "Z3"),
        ("Z5", "Z7"),
        ("D4", "Z2"),
    ];
    for (a, b) in pairs {
        let (ga, gb) = (group(a), group(b));
        let prod = direct_product(&ga, &gb).unwrap();
        let fa = IntersectionLattice::new(Arc::new(ga.clone())).unwrap().frattini().as_set().clone();
        let fb = IntersectionLattice::new(Arc::new(gb.clone())).unwrap().frattini().as_set().clone();
        let hb = gb.order();
        let expected = ElementSet::from_elements(
            prod.order(),
            fa.iter().flat_map(|i| fb.iter().map(move |j| i * hb + j)),
        );
        let got = IntersectionLattice::new(Arc::new(prod)).unwrap().frattini().as_set().clone();
        assert_eq!(got, expected, "{a} x {b}");
    }
}

#[test]
fn product_order_multiplies() {
    for (a, b) in [("Z6", "Z3"), ("D4", "S3"), ("A4", "Z2")] {
        let spec = GroupSpec::Product(vec![parse_group_spec(a).unwrap(), parse_group_spec(b).unwrap()]);
        assert_eq!(build(&spec).unwrap().order(), group(a).order() * group(b).order());
    }
    let z6z3 = group("Z6xZ3");
    let l = IntersectionLattice::new(Arc::new(z6z3)).unwrap();
    assert_eq!(l.frattini().order(), 1);
}

fn arb_subset(n: usize) -> impl Strategy<Value = ElementSet> {
    proptest::collection::vec(0..n, 0..4).prop_map(move |v| ElementSet::from_elements(n, v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_idempotent_and_monotone(
        idx in 0usize..4,
        s in arb_subset(24),
        extra in arb_subset(24),
    ) {
        let g = group(["S4", "Z2xZ12", "D12", "Z3xA4"][idx]);
        let n = g.order();
        let s = ElementSet::from_elements(n, s.iter().filter(|&x| x < n));
        let t = s.union(&ElementSet::from_elements(n, extra.iter().filter(|&x| x < n)));
        let cs = g.closure(&s);
        let again = g.closure(cs.as_set());
        prop_assert_eq!(again.as_set(), cs.as_set());
        prop_assert!(cs.is_subset(&g.closure(&t)));
        prop_assert!(s.is_subset(&cs));
        prop_assert_eq!(n % cs.order(), 0);
    }
}
