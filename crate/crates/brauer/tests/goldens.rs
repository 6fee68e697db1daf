use brauer::goldens::{
    apply_errata, check, check_erratum, check_transcription, compare, find, transcription, Engine, Failure, ERRATA,
    GOLDENS,
};
use brauer::json::{emit_element, parse_element};
use brauer_core::RationalFunction;

#[test]
fn every_golden_replays() {
    let engine = Engine::new();
    for table in GOLDENS {
        assert_eq!(check(table, table.text, &engine), Ok(()), "{}", table.id);
    }
}

#[test]
fn every_golden_matches_its_transcription() {
    for table in GOLDENS {
        assert_eq!(check_transcription(table, table.text), Ok(()), "{}", table.id);
    }
    let ids: Vec<String> = transcription().into_iter().map(|b| b.id).collect();
    assert_eq!(ids.len(), GOLDENS.len());
    assert!(GOLDENS.iter().all(|g| ids.iter().any(|i| i == g.id)));
}

#[test]
fn a_changed_coefficient_is_reported() {
    let engine = Engine::new();
    let table = find("phi_6_2").unwrap();
    let mut x = parse_element(table.text).unwrap();
    let t = "NSP|NS|P".parse().unwrap();
    let wrong = &x.coeff(&t) + &RationalFunction::delta_pow(-9);
    x.set(t, wrong);
    match check(table, &emit_element(&x), &engine) {
        Err(Failure::Mismatch { class, .. }) => assert_eq!(class, "NSP|NS|P"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn block_sum_only_constrains_low_classes() {
    let engine = Engine::new();
    let table = find("block_sum_4").unwrap();
    let mut x = parse_element(table.text).unwrap();
    x.set("PPPP".parse().unwrap(), RationalFunction::from_int(12345));
    assert_eq!(check(table, &emit_element(&x), &engine), Ok(()));
    assert!(compare(&x, &parse_element(table.text).unwrap(), None).is_err());
}

#[test]
fn errata_are_confirmed_and_needed() {
    let engine = Engine::new();
    for e in ERRATA {
        assert_eq!(check_erratum(e, &engine), Ok(()));
        let table = find(e.id).unwrap();
        let printed = parse_element(table.text).unwrap();
        let mut corrected = printed.clone();
        apply_errata(e.id, &mut corrected).unwrap();
        let actual = engine.split(printed.n(), 0).unwrap();
        assert_eq!(compare(&corrected, &actual, None), Ok(()));
        assert!(compare(&printed, &actual, None).is_err());
    }
}
