use brauer::expr::parse;
use brauer::goldens::{parse_system, Source, GOLDENS};
use brauer::json::{self, emit_element, parse_element, rf_from_json, rf_to_json, RfJson};
use brauer_core::{Polynomial, RationalFunction};

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(Polynomial::from_i64s(num), Polynomial::from_i64s(den)).unwrap()
}

#[test]
fn golden_files_are_in_emitted_form() {
    for table in GOLDENS {
        if let Source::System { .. } = table.source {
            let sys = parse_system(table.text).unwrap();
            assert_eq!(sys.rows.len(), sys.unknowns.len(), "{}", table.id);
            continue;
        }
        let once = emit_element(&parse_element(table.text).unwrap());
        let twice = emit_element(&parse_element(&once).unwrap());
        assert_eq!(once, twice, "{}", table.id);
        assert_eq!(once, table.text, "{} is not in canonical emitted form", table.id);
    }
}

#[test]
fn rational_function_json() {
    let x = rf(&[-3, 0, 1], &[0, -2, 1, 1]);
    let j = rf_to_json(&x);
    assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"num":[-3,0,1],"den":[0,-2,1,1]}"#);
    assert_eq!(rf_from_json(&j).unwrap(), x);
    assert_eq!(serde_json::to_string(&rf_to_json(&RationalFunction::zero())).unwrap(), r#"{"num":[],"den":[1]}"#);
}

#[test]
fn parsing_normalises() {
    let j: RfJson = serde_json::from_str(r#"{"num":[-2,2],"den":[-2,0,2]}"#).unwrap();
    assert_eq!(rf_from_json(&j).unwrap(), rf(&[1], &[1, 1]));
}

#[test]
fn huge_integers_survive() {
    let big = "123456789012345678901234567890123456789";
    let text = format!(r#"{{"num":[{big}],"den":[0,1]}}"#);
    let j: RfJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&rf_to_json(&rf_from_json(&j).unwrap())).unwrap(), text);
}

#[test]
fn malformed_input_is_rejected() {
    for bad in [
        r#"{"num":[1.5],"den":[1]}"#,
        r#"{"num":[1],"den":[]}"#,
        r#"{"num":[1],"den":[0]}"#,
        r#"{"num":[1]}"#,
        r#"{"num":[1],"den":[1],"extra":0}"#,
    ] {
        let parsed =
            serde_json::from_str::<RfJson>(bad).map_err(json::FormatError::from).and_then(|j| rf_from_json(&j));
        assert!(parsed.is_err(), "{bad}");
    }
    assert!(parse_element(r#"{"n":2,"terms":[{"tableau":["NSP"],"coeff":{"num":[1],"den":[1]}}]}"#).is_err());
    assert!(parse_element(r#"{"n":2,"terms":[{"tableau":["NX"],"coeff":{"num":[1],"den":[1]}}]}"#).is_err());
    assert!(parse_element("not json").is_err());
}

#[test]
fn repeated_tableaux_add_up() {
    let x = parse_element(
        r#"{"n":2,"terms":[{"tableau":["NS"],"coeff":{"num":[1],"den":[1]}},{"tableau":["SN"],"coeff":{"num":[2],"den":[1]}}]}"#,
    )
    .unwrap();
    assert_eq!(x.coeff(&"NS".parse().unwrap()), RationalFunction::from_int(3));
}

#[test]
fn expressions() {
    assert_eq!(parse("1/d").unwrap(), RationalFunction::delta_pow(-1));
    assert_eq!(parse("1 + d^-1").unwrap(), parse("(d+1)/d").unwrap());
    assert_eq!(parse("-1/d^2").unwrap(), -RationalFunction::delta_pow(-2));
    assert_eq!(parse("2(d+2)/(8d(d+2))").unwrap(), parse("1/(4δ)").unwrap());
    assert_eq!(parse("(d-1)(d+1)").unwrap(), rf(&[-1, 0, 1], &[1]));
    assert_eq!(parse("-(3d+2)").unwrap(), rf(&[-2, -3], &[1]));
    assert_eq!(parse("+7").unwrap(), RationalFunction::from_int(7));
    assert_eq!(parse("2*d-d").unwrap(), parse("d").unwrap());
    for bad in ["", "1/0", "(d+1", "d+", "x", "d^", "1/(d-d)"] {
        assert!(parse(bad).is_err(), "{bad}");
    }
}
