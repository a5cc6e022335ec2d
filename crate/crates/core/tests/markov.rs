//! Closures of braids related by conjugation or stabilization are the same
//! link, so every invariant must agree on them.

use proptest::prelude::*;

use ribbontangle::eval::{builtin, jones_datum, Builtin, Functor};
use ribbontangle::hopf::FiniteGroup;
use ribbontangle::oracle::{count_meridian_homs, kauffman_bracket};
use ribbontangle::tangle::{braid_closure, BraidWord};

fn braid() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (2usize..=3).prop_flat_map(|n| {
        let letter = (1..n as i64, any::<bool>()).prop_map(|(g, s)| if s { g } else { -g });
        (Just(n), prop::collection::vec(letter, 1..=6))
    })
}

/// Conjugate by the first letter, then stabilize with a new strand.
fn moved(n: usize, letters: &[i64], positive: bool) -> BraidWord {
    let mut w = letters[1..].to_vec();
    w.push(letters[0]);
    w.push(if positive { n as i64 } else { -(n as i64) });
    BraidWord::new(n + 1, w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracles_see_one_link((n, letters) in braid(), positive in any::<bool>()) {
        let a = BraidWord::new(n, letters.clone()).unwrap();
        let b = moved(n, &letters, positive);
        prop_assert_eq!(kauffman_bracket(&a).unwrap().value, kauffman_bracket(&b).unwrap().value);
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.named_class("transpositions").unwrap();
        prop_assert_eq!(
            count_meridian_homs(&s3, &t, &a).unwrap(),
            count_meridian_homs(&s3, &t, &b).unwrap()
        );
    }

    #[test]
    fn normalized_values_see_one_link((n, letters) in braid(), positive in any::<bool>()) {
        let a = braid_closure(&BraidWord::new(n, letters.clone()).unwrap());
        let b = braid_closure(&moved(n, &letters, positive));
        let jones = Functor::new(jones_datum()).unwrap();
        prop_assert_eq!(
            jones.framed_invariant(&a, true).unwrap(),
            jones.framed_invariant(&b, true).unwrap()
        );
        let Builtin::Group(g) = builtin("z3-nontrivial").unwrap() else { unreachable!() };
        let count = Functor::new(g.datum()).unwrap();
        prop_assert_eq!(
            count.framed_invariant(&a, true).unwrap(),
            count.framed_invariant(&b, true).unwrap()
        );
    }
}

#[test]
fn framed_values_change_under_stabilization() {
    let jones = Functor::new(jones_datum()).unwrap();
    let a = braid_closure(&BraidWord::parse("1 1 1", Some(2)).unwrap());
    let b = braid_closure(&BraidWord::parse("1 1 1 2", Some(3)).unwrap());
    assert_ne!(
        jones.framed_invariant(&a, false).unwrap(),
        jones.framed_invariant(&b, false).unwrap()
    );
}
