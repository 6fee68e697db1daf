use brauer_core::symgrp::*;
use num_bigint::BigInt;
use num_traits::One;

fn p(s: &str) -> IntegerPartition {
    s.parse().unwrap()
}

#[test]
fn partition_listing() {
    assert_eq!(partitions(0).len(), 1);
    assert_eq!(partitions(4).len(), 5);
    assert_eq!(partitions(6).len(), 11);
    let four: Vec<String> = partitions(4).iter().map(|x| format!("{x}")).collect();
    assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
}

#[test]
fn characters_of_s4() {
    let lambda = p("3,1");
    let values: Vec<BigInt> =
        ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"].iter().map(|m| character(&lambda, &p(m)).unwrap()).collect();
    assert_eq!(values, [3, 1, -1, 0, -1].map(BigInt::from));
    for mu in partitions(5) {
        assert_eq!(character(&p("5"), &mu).unwrap(), BigInt::one());
        assert_eq!(character(&p("1,1,1,1,1"), &mu).unwrap(), BigInt::from(mu.sign()));
    }
    assert!(character(&p("2"), &p("3")).is_err());
}

#[test]
fn dimensions() {
    assert_eq!(dimension(&p("4")), BigInt::one());
    assert_eq!(dimension(&p("3,1")), BigInt::from(3));
    for n in 1..=8 {
        let total: BigInt = partitions(n).iter().map(|l| dimension(l) * dimension(l)).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn parsing() {
    assert_eq!(p("3,1").parts(), [3, 1]);
    assert_eq!(p("(2,2)").n(), 4);
    assert!("1,3".parse::<IntegerPartition>().is_err());
    assert!("3,0".parse::<IntegerPartition>().is_err());
    assert!(IntegerPartition::new(vec![5], 4).is_err());
}

#[test]
fn cycle_types() {
    assert_eq!(cycle_type(&[2, 3, 1, 5, 4]).parts(), [3, 2]);
    assert_eq!(cycle_type(&[1, 2]).parts(), [1, 1]);
}
