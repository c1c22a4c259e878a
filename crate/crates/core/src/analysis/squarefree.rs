//! Squarefree decomposition of univariate integer polynomials (Yun's
//! algorithm).

use core::fmt;

use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::analysis::univariate::UniPoly;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquarefreeError {
    ZeroPolynomial,
    NotUnivariate,
}

impl fmt::Display for SquarefreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquarefreeError::ZeroPolynomial => f.write_str("squarefree decomposition of zero"),
            SquarefreeError::NotUnivariate => {
                f.write_str("squarefree decomposition needs a univariate polynomial")
            }
        }
    }
}

/// Pairwise-coprime squarefree primitive factors with multiplicities, plus
/// the integer content (which carries the sign). The reconstruction
/// `content * prod factor_i^mult_i` is exact.
pub fn squarefree_decompose(
    p: &Polynomial,
) -> Result<(BigInt, Vec<(Polynomial, u32)>), SquarefreeError> {
    if p.is_zero() {
        return Err(SquarefreeError::ZeroPolynomial);
    }
    let (u, var) =
        UniPoly::from_polynomial(p).ok_or(SquarefreeError::NotUnivariate)?;
    let (content, prim) = u.content_and_primitive();
    let ordering = p.ordering();
    let factors = yun(&prim)
        .into_iter()
        .map(|(f, m)| (f.to_polynomial(ordering, var), m))
        .collect();
    Ok((content, factors))
}

/// Yun's algorithm on a primitive polynomial with positive leading
/// coefficient. Constants decompose into nothing.
pub(crate) fn yun(p: &UniPoly) -> Vec<(UniPoly, u32)> {
    debug_assert!(!p.is_zero());
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    if p.deg() == 0 {
        return out;
    }
    let dp = p.derivative();
    let g0 = UniPoly::gcd_primitive(p, &dp);
    let mut c = p.exact_div(&g0).expect("gcd divides");
    let mut d = dp
        .exact_div(&g0)
        .expect("gcd divides the derivative")
        .sub(&c.derivative());
    let mut mult = 1u32;
    loop {
        if c.deg() == 0 {
            break;
        }
        let a = UniPoly::gcd_primitive(&c, &d);
        if a.deg() > 0 {
            out.push((a.clone(), mult));
        }
        c = c.exact_div(&a).expect("factor divides");
        d = d.exact_div(&a).expect("factor divides").sub(&c.derivative());
        mult += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::variable::VariableOrdering;
    use alloc::sync::Arc;
    use num_traits::One;

    fn ord() -> Arc<VariableOrdering> {
        VariableOrdering::from_names(&["x", "y", "z"]).unwrap()
    }

    fn p(text: &str) -> Polynomial {
        parse(text, &ord()).unwrap()
    }

    #[test]
    fn squared_base_is_recovered() {
        let (c, factors) = squarefree_decompose(&p("(z^2-1)^2")).unwrap();
        assert!(c.is_one());
        assert_eq!(factors, alloc::vec![(p("z^2 - 1"), 2)]);
    }

    #[test]
    fn already_squarefree() {
        let (c, factors) = squarefree_decompose(&p("x^2-1")).unwrap();
        assert!(c.is_one());
        assert_eq!(factors, alloc::vec![(p("x^2 - 1"), 1)]);
    }

    #[test]
    fn pure_power() {
        let (c, factors) = squarefree_decompose(&p("x^3")).unwrap();
        assert!(c.is_one());
        assert_eq!(factors, alloc::vec![(p("x"), 3)]);
    }

    #[test]
    fn content_and_mixed_multiplicities() {
        let input = &p("12") * &(&p("(x-1)^2") * &p("(x+2)^3"));
        let (c, factors) = squarefree_decompose(&input).unwrap();
        assert_eq!(c, BigInt::from(12));
        assert_eq!(factors, alloc::vec![(p("x - 1"), 2), (p("x + 2"), 3)]);
        // exact reconstruction
        let mut back = Polynomial::constant(&ord(), c);
        for (f, m) in &factors {
            back = &back * &f.pow(*m);
        }
        assert_eq!(back, input);
    }

    #[test]
    fn negative_leading_coefficient_goes_to_content() {
        let (c, factors) = squarefree_decompose(&p("-2*x^2 - 4*x - 2")).unwrap();
        assert_eq!(c, BigInt::from(-2));
        assert_eq!(factors, alloc::vec![(p("x + 1"), 2)]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            squarefree_decompose(&p("0")),
            Err(SquarefreeError::ZeroPolynomial)
        );
        assert_eq!(
            squarefree_decompose(&p("x*y")),
            Err(SquarefreeError::NotUnivariate)
        );
        // a constant decomposes into content only
        let (c, factors) = squarefree_decompose(&p("-6")).unwrap();
        assert_eq!(c, BigInt::from(-6));
        assert!(factors.is_empty());
    }
}
