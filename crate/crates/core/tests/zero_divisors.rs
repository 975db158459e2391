use cayley_core::scalar::int;
use cayley_core::tables::find_zero_divisors;
use cayley_core::Element;

fn two_term(a: usize, sa: i64, b: usize, sb: i64) -> Element {
    let mut c = vec![int(0); 16];
    c[a] = int(sa);
    c[b] = int(sb);
    Element::new(4, c).unwrap()
}

#[test]
fn signed_basis_pairs_never_vanish() {
    // All 32 x 32 signed unit pairs over the rationals (the 30 x 30 imaginary
    // block included).
    for a in 0..16 {
        for b in 0..16 {
            for (na, nb) in [(false, false), (false, true), (true, false), (true, true)] {
                let x = Element::signed_basis(4, a, na).unwrap();
                let y = Element::signed_basis(4, b, nb).unwrap();
                assert!(!x.try_mul(&y).unwrap().is_zero());
            }
        }
    }
    assert!(find_zero_divisors(4, 1).unwrap().is_empty());
}

#[test]
fn sedenion_witness_is_found() {
    let certs = find_zero_divisors(4, 2).unwrap();
    assert!(!certs.is_empty());
    let x = two_term(3, 1, 10, 1);
    let y = two_term(6, 1, 15, -1);
    assert!(certs.iter().any(|c| c.x == x && c.y == y));
    assert!(certs.iter().all(|c| c.verify()));
    assert!(certs.iter().all(|c| c.level == 4));
}

#[test]
fn certificates_are_sign_canonical_and_unique() {
    let certs = find_zero_divisors(4, 2).unwrap();
    let first_positive = |e: &Element| {
        e.coeffs()
            .iter()
            .find(|c| *c != &int(0))
            .map(|c| c > &int(0))
            .unwrap()
    };
    for c in &certs {
        assert!(first_positive(&c.x) && first_positive(&c.y));
    }
    let mut pairs: Vec<(String, String)> = certs
        .iter()
        .map(|c| (c.x.to_string(), c.y.to_string()))
        .collect();
    let n = pairs.len();
    pairs.sort();
    pairs.dedup();
    assert_eq!(pairs.len(), n);
}

// Independent count: every two-term product is expanded over the rationals.
#[test]
fn search_agrees_with_rational_brute_force() {
    let mut cands = Vec::new();
    for a in 0..16 {
        cands.push(Element::basis(4, a).unwrap());
    }
    for a in 0..16 {
        for b in a + 1..16 {
            cands.push(two_term(a, 1, b, 1));
            cands.push(two_term(a, 1, b, -1));
        }
    }
    let mut brute = 0;
    for x in &cands {
        for y in &cands {
            if x.try_mul(y).unwrap().is_zero() {
                brute += 1;
            }
        }
    }
    assert_eq!(find_zero_divisors(4, 2).unwrap().len(), brute);
}

#[test]
fn octonions_have_none() {
    assert!(find_zero_divisors(3, 2).unwrap().is_empty());
}
