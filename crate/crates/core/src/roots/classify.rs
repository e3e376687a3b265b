use std::fmt;

use serde::Serialize;

use super::{discriminant, is_real_rooted, sign, RootsError, SturmChain};
use crate::arith::{int, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CubicClass {
    AllReal,
    OneRealPair,
}

impl fmt::Display for CubicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CubicClass::AllReal => "all real",
            CubicClass::OneRealPair => "one real root and a conjugate pair",
        })
    }
}

fn expect_degree(p: &Poly<Rational>, n: usize) -> Result<(), RootsError> {
    if p.degree() == Some(n) {
        Ok(())
    } else {
        Err(RootsError::WrongDegree {
            expected: n,
            found: p.degree(),
        })
    }
}

/// Root structure of a cubic from the sign of its discriminant; a zero
/// discriminant is settled by Sturm counting.
pub fn classify_cubic(p: &Poly<Rational>) -> Result<CubicClass, RootsError> {
    expect_degree(p, 3)?;
    let class = match sign(&discriminant(p)?) {
        1 => CubicClass::AllReal,
        -1 => CubicClass::OneRealPair,
        _ if is_real_rooted(p)? => CubicClass::AllReal,
        _ => CubicClass::OneRealPair,
    };
    Ok(class)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuarticTag {
    AllReal,
    NoneReal,
    TwoRealTwoComplex,
    /// Zero discriminant; the counts come from the square-free part.
    Degenerate {
        distinct_real: usize,
        real_rooted: bool,
    },
}

/// Classification of a quartic together with its depressed form
/// `z⁴ + q z² + r z + s` (after `x = z − b/(4a)` and division by `a`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticClass {
    pub tag: QuarticTag,
    #[serde(serialize_with = "crate::ser::rational")]
    pub discriminant: Rational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub q: Rational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub r: Rational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub s: Rational,
    /// Distinct real roots by Sturm count, the cross-check on `tag`.
    pub sturm_distinct_real: usize,
}

pub fn classify_quartic(p: &Poly<Rational>) -> Result<QuarticClass, RootsError> {
    expect_degree(p, 4)?;
    let a = &p.coeffs()[4];
    let monic = p.scale_rational(&a.recip());
    let shift = -(&monic.coeffs()[3] / int(4));
    let depressed = monic.compose(&Poly::shift(shift));
    debug_assert!(depressed.coeff(3) == int(0));
    let (q, r, s) = (depressed.coeff(2), depressed.coeff(1), depressed.coeff(0));

    let disc = discriminant(p)?;
    let chain = SturmChain::new(p)?;
    let distinct = chain.count_all();
    let tag = match sign(&disc) {
        1 => {
            if sign(&q) < 0 && sign(&(&q * &q - int(4) * &s)) > 0 {
                QuarticTag::AllReal
            } else {
                QuarticTag::NoneReal
            }
        }
        -1 => QuarticTag::TwoRealTwoComplex,
        _ => QuarticTag::Degenerate {
            distinct_real: distinct,
            real_rooted: chain.base().degree() == Some(distinct),
        },
    };
    let expected = match tag {
        QuarticTag::AllReal => Some(4),
        QuarticTag::NoneReal => Some(0),
        QuarticTag::TwoRealTwoComplex => Some(2),
        QuarticTag::Degenerate { .. } => None,
    };
    assert!(
        expected.is_none_or(|e| e == distinct),
        "discriminant tree disagrees with Sturm count for {p:?}"
    );
    Ok(QuarticClass {
        tag,
        discriminant: disc,
        q,
        r,
        s,
        sturm_distinct_real: distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_poly;

    fn p(s: &str) -> Poly<Rational> {
        parse_poly(s, "x").unwrap()
    }

    #[test]
    fn cubics() {
        assert_eq!(classify_cubic(&p("x^3-x")).unwrap(), CubicClass::AllReal);
        assert_eq!(classify_cubic(&p("x^3+x")).unwrap(), CubicClass::OneRealPair);
        assert_eq!(classify_cubic(&p("(x-1)^2*(x+3)")).unwrap(), CubicClass::AllReal);
        assert!(matches!(
            classify_cubic(&p("x^2")),
            Err(RootsError::WrongDegree { expected: 3, .. })
        ));
    }

    #[test]
    fn quartics() {
        let c = classify_quartic(&p("x^4-5*x^2+4")).unwrap();
        assert_eq!(c.tag, QuarticTag::AllReal);
        assert_eq!(c.q, int(-5));
        assert_eq!(classify_quartic(&p("x^4+1")).unwrap().tag, QuarticTag::NoneReal);
        assert_eq!(
            classify_quartic(&p("(x^2-1)*(x^2+1)")).unwrap().tag,
            QuarticTag::TwoRealTwoComplex
        );
        assert_eq!(
            classify_quartic(&p("(x-1)^2*(x^2+1)")).unwrap().tag,
            QuarticTag::Degenerate {
                distinct_real: 1,
                real_rooted: false
            }
        );
        // shifted copy of the all-real case exercises the depression step
        let shifted = classify_quartic(&p("2*(x-3)^4 - 10*(x-3)^2 + 8")).unwrap();
        assert_eq!(shifted.tag, QuarticTag::AllReal);
        assert_eq!(shifted.q, int(-5));
    }
}
