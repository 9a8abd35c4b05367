use std::cmp::Ordering;

use serde::Serialize;

use crate::poly::Monomial;

/// Monomial orderings used by the standard-basis engine.
///
/// `Local` is the degree-anticompatible order (`ds`): lower total degree is
/// larger, ties broken lexicographically with `x > y > z`. It makes `1` the
/// largest monomial, so standard bases computed with it describe the local
/// ring at the origin. `Global` is degree-lex; it is only used internally
/// for affine (global) quotient dimensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    #[default]
    Local,
    Global,
}

impl MonomialOrder {
    /// `Greater` means `a` is larger than `b` in this order.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Local => b.degree().cmp(&a.degree()).then_with(|| a.cmp_lex(b)),
            MonomialOrder::Global => a.degree().cmp(&b.degree()).then_with(|| a.cmp_lex(b)),
        }
    }

    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::Local)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_is_maximal_locally() {
        let ord = MonomialOrder::Local;
        assert_eq!(
            ord.cmp(&Monomial::ONE, &Monomial::xy(1, 0)),
            Ordering::Greater
        );
        assert_eq!(
            ord.cmp(&Monomial::xy(1, 0), &Monomial::xy(0, 1)),
            Ordering::Greater
        );
        assert_eq!(
            ord.cmp(&Monomial::xy(0, 1), &Monomial::xy(5, 0)),
            Ordering::Greater
        );
        assert_eq!(
            ord.cmp(&Monomial::xy(2, 0), &Monomial::xy(1, 1)),
            Ordering::Greater
        );
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        (0u32..6, 0u32..6).prop_map(|(a, b)| Monomial::xy(a, b))
    }

    proptest! {
        #[test]
        fn local_order_is_multiplicative(a in mono(), b in mono(), n in mono()) {
            let ord = MonomialOrder::Local;
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&n), &b.mul(&n)));
        }

        #[test]
        fn local_order_is_total(a in mono(), b in mono()) {
            let ord = MonomialOrder::Local;
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
        }
    }
}
