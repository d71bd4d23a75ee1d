use fellow_core::fellow::bumped_integers;
use fellow_core::transforms::*;
use fellow_core::*;
use proptest::prelude::*;

fn z2(text: &str) -> Word {
    IntegerPlane::new().alphabet().parse(text).unwrap()
}

fn check<P: NormalFormProvider>(p: &P, prop: NfProperty, r: u32) -> PropertyOutcome {
    check_nf_property(p, prop, r, DEFAULT_BUDGET).unwrap()
}

proptest! {
    #[test]
    fn transformed_forms_evaluate_back(x in -6i64..=6, y in -6i64..=6) {
        let plane = IntegerPlane::new();
        let first = first_way(PlaneLex::new(), z2("abAB")).unwrap();
        let second = second_way(PlaneLex::new(), RepeatedLoop::new(&plane, z2("bB")).unwrap());
        let closed = quasiprefix_closure(second_way(PlaneLex::new(), RepeatedLoop::new(&plane, z2("aA")).unwrap()), 0).unwrap();
        let g = (x, y);
        let base = PlaneLex::new().normal_form(&g).unwrap();
        let w1 = first.normal_form(&g).unwrap();
        let w2 = second.normal_form(&g).unwrap();
        prop_assert_eq!(evaluate(&plane, &w1).unwrap(), g);
        prop_assert_eq!(evaluate(&plane, &w2).unwrap(), g);
        prop_assert_eq!(evaluate(&plane, &closed.normal_form(&g).unwrap()).unwrap(), g);
        let l = base.len();
        prop_assert_eq!(w1.len(), 4 * l * l + l);
        prop_assert!(w1.symbols().ends_with(base.symbols()));
        let expected: usize = (1..=l).map(|k| 2 * (k.isqrt() + usize::from(k.isqrt().pow(2) != k))).sum::<usize>() + l;
        prop_assert_eq!(w2.len(), expected);
        let m = l as f64;
        prop_assert!(w2.len() as f64 >= 2.0 * (m / 2.0) * (m / 2.0).sqrt());
    }

    #[test]
    fn closure_evaluates_back_on_bs(w in prop::collection::vec((0u8..2, any::<bool>()), 0..14)) {
        let params = BsParams::new(1, 2).unwrap();
        let model = BaumslagSolitar::new(params);
        let closed = quasiprefix_closure(BsCanonical::new(params), 2).unwrap();
        let w: Word = w.into_iter().map(|(b, i)| GenSymbol::new(b, i)).collect();
        let g = evaluate(&model, &w).unwrap();
        prop_assert_eq!(evaluate(&model, &closed.normal_form(&g).unwrap()).unwrap(), g);
    }
}

#[test]
fn first_way_is_neither_quasigeodesic_nor_quasiregular() {
    let first = first_way(PlaneLex::new(), z2("abAB")).unwrap();
    for c in [1.0, 4.0, 16.0] {
        assert!(!check(&first, NfProperty::Quasigeodesic(c), 6).is_pass());
    }
    for c in 0..=4 {
        assert!(
            !check(&first, NfProperty::Quasiregular(c), 6).is_pass(),
            "c={c}"
        );
    }
}

#[test]
fn closure_upgrades_quasiregular_to_quasiprefix_closed() {
    fn upgrade<P: NormalFormProvider + Clone>(p: &P, c: usize, r: u32) -> bool {
        if !check(p, NfProperty::Quasiregular(c), r + 2).is_pass() {
            return false;
        }
        let closed = quasiprefix_closure(p.clone(), c).unwrap();
        let out = check(&closed, NfProperty::QuasiprefixClosed(4 * c), r);
        assert!(out.is_pass(), "{} c={c}: {out}", p.name());
        true
    }
    let plane = IntegerPlane::new();
    let second = second_way(
        PlaneLex::new(),
        RepeatedLoop::new(&plane, z2("aA")).unwrap(),
    );
    let mut exercised = 0;
    for c in 0..=3 {
        exercised += upgrade(&bumped_integers(), c, 6) as usize;
        exercised += upgrade(&PlaneLex::new(), c, 4) as usize;
        exercised += upgrade(&second, c, 3) as usize;
    }
    exercised += upgrade(&BsCanonical::new(BsParams::new(1, 2).unwrap()), 1, 4) as usize;
    exercised += upgrade(&LampSpiral::new(), 1, 3) as usize;
    assert_eq!(exercised, 9);
}

#[test]
fn closure_keeps_divergence_within_8c() {
    let c = 2;
    let base = s_curve(&bumped_integers(), SCurveOptions::new(8)).unwrap();
    let closed = s_curve(
        &quasiprefix_closure(bumped_integers(), c).unwrap(),
        SCurveOptions::new(8),
    )
    .unwrap();
    for (n, s) in closed.samples() {
        assert!(
            s <= base.at(n) + 8 * c as u32,
            "n={n}: {s} vs {}",
            base.at(n)
        );
    }
}

#[test]
fn second_way_breaks_prefix_closure() {
    let plane = IntegerPlane::new();
    let second = second_way(
        PlaneLex::new(),
        RepeatedLoop::new(&plane, z2("aA")).unwrap(),
    );
    assert!(!check(&second, NfProperty::PrefixClosed, 3).is_pass());
}
