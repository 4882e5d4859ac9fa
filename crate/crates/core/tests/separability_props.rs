use gcross::corpus::{self, Example};
use gcross::crossed::{coboundary_twist, CrossedProduct, CrossedSystem};
use gcross::scalar::Elem;
use gcross::separability::{
    casimir_construct, casimir_verify, check_center_isomorphism, check_commutation, check_gamma_composition, check_uniqueness,
    check_w_shuttle, exhaustive_casimir_count, separability_of_crossed, separability_of_graded, trace_solution_from_casimir, SectionData,
    Sections,
};
use proptest::prelude::*;
use std::collections::BTreeMap;

const SYSTEMS: &[&str] = &["matrix-2", "matrix-2-gf2", "q-c2", "gf2-c2", "gf3-c3", "ff-skew-2-2", "quaternion"];

fn product(name: &str) -> CrossedProduct {
    match corpus::example(name).unwrap() {
        Example::Crossed(cp) => cp,
        Example::Graded(_) => unreachable!(),
    }
}

fn twisted(sys: &CrossedSystem, raw: &[i64]) -> CrossedProduct {
    let g = sys.groupoid();
    let f = sys.field();
    let mut c = BTreeMap::new();
    for (k, s) in g.arrows().filter(|&s| !g.is_object(s)).enumerate() {
        let a = sys.target_fiber(s);
        let v: Vec<Elem> = (0..a.dim()).map(|i| f.from_i64(raw[(k * 3 + i) % raw.len()])).collect();
        if a.invert(&v).is_some() {
            c.insert(s, v);
        }
    }
    coboundary_twist(sys, &c).unwrap().build().unwrap()
}

fn strategy() -> impl Strategy<Value = CrossedProduct> {
    (prop::sample::select(SYSTEMS), prop::collection::vec(-2i64..3, 12)).prop_map(|(n, raw)| twisted(product(n).system(), &raw))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn gamma_laws_hold(cp in strategy()) {
        let units = cp.object_units();
        let data = SectionData::canonical(&cp);
        prop_assert!(data.verify(cp.graded(), &units).is_ok());
        let sec = Sections::new(cp.graded(), &units, &data);
        prop_assert!(check_gamma_composition(&sec).unwrap().is_ok());
        prop_assert!(check_center_isomorphism(&sec).unwrap().is_ok());
        prop_assert!(check_commutation(&sec).unwrap().is_ok());
        prop_assert!(check_uniqueness(&sec).unwrap().is_ok());
        prop_assert!(check_w_shuttle(&cp).is_ok());
    }

    /// The criterion passes iff the Casimir construction verifies, and the
    /// derivation back recovers trace solutions.
    #[test]
    fn criterion_matches_casimir(cp in strategy()) {
        let rep = separability_of_crossed(&cp).unwrap();
        prop_assert!(rep.fast_paths.as_ref().is_none_or(|f| f.disagreements.is_empty()));
        match casimir_construct(&cp, &rep) {
            Ok(fam) => {
                prop_assert!(rep.verdict.is_pass());
                prop_assert!(casimir_verify(&cp, &fam).is_ok());
                let ds = trace_solution_from_casimir(&cp, &fam).unwrap();
                prop_assert_eq!(ds.len(), cp.groupoid().objects().len());
            }
            Err(_) => prop_assert!(!rep.verdict.is_pass()),
        }
        if let Some(n) = exhaustive_casimir_count(&cp, 1 << 16) {
            prop_assert_eq!(n > 0, rep.verdict.is_pass());
        }
    }

    /// Sections from strong grading give the same verdicts as canonical
    /// sections.
    #[test]
    fn section_choice_does_not_matter(cp in strategy()) {
        let units = cp.object_units();
        let (_, generic) = separability_of_graded(cp.graded(), &units).unwrap();
        let canonical = separability_of_crossed(&cp).unwrap();
        prop_assert_eq!(generic.verdict, canonical.verdict);
        for (a, b) in generic.objects.iter().zip(&canonical.objects) {
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.trace_rank, b.trace_rank);
        }
    }
}
