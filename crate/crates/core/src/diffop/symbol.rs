use std::fmt;

use serde::Serialize;

use super::{DiffOpError, DiffOpRep};
use crate::arith::text::format_poly;
use crate::arith::{GaussianRational, Poly, Rational, Ring};

/// Which exponential the operator is applied to. `T[e^{−xw}]` pairs with
/// roots `w = 1/(x ± 1)` in the quadratic Legendre case; `T[e^{xw}]` is
/// the same test with `w` negated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    #[default]
    NegativeExponent,
    PositiveExponent,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::NegativeExponent => "e^(-xw)",
            Orientation::PositiveExponent => "e^(xw)",
        })
    }
}

/// `F(x, w) = Σ p_k(x) wᵏ`, stored with `w` as the outer variable.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSymbol {
    poly: Poly<Poly<Rational>>,
    orientation: Orientation,
}

pub fn symbol(rep: &DiffOpRep) -> OperatorSymbol {
    OperatorSymbol::new(Poly::new(rep.coeffs.clone()))
}

impl OperatorSymbol {
    pub fn new(poly: Poly<Poly<Rational>>) -> Self {
        OperatorSymbol {
            poly,
            orientation: Orientation::default(),
        }
    }

    pub fn with_orientation(mut self, o: Orientation) -> Self {
        self.orientation = o;
        self
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// `F(x, w)` as written, `w` outermost.
    pub fn poly(&self) -> &Poly<Poly<Rational>> {
        &self.poly
    }

    /// The polynomial whose zeros the stability test examines:
    /// `F(x, −w)` for `e^{−xw}`, `F(x, w)` for `e^{xw}`.
    pub fn test_poly(&self) -> Poly<Poly<Rational>> {
        match self.orientation {
            Orientation::PositiveExponent => self.poly.clone(),
            Orientation::NegativeExponent => Poly::new(
                self.poly
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if k % 2 == 1 { c.negate() } else { c.clone() })
                    .collect(),
            ),
        }
    }

    pub fn degree_in_w(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Coefficients in `w` of the test polynomial at `x = x0`.
    pub fn coeffs_at(&self, x0: &GaussianRational) -> Vec<GaussianRational> {
        self.test_poly()
            .coeffs()
            .iter()
            .map(|c| c.map(|q| GaussianRational::real(q.clone())).eval(x0))
            .collect()
    }

    pub fn eval(&self, x0: &GaussianRational, w0: &GaussianRational) -> GaussianRational {
        Poly::new(self.coeffs_at(x0)).eval(w0)
    }
}

impl fmt::Display for OperatorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.poly, &["w", "x"]))
    }
}

impl Serialize for OperatorSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Roots in `w` of a symbol of degree at most two, at a fixed `x0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum SymbolRoots {
    /// All roots, exactly.
    Exact {
        #[serde(serialize_with = "gaussians")]
        roots: Vec<GaussianRational>,
    },
    /// `a w² + b w + c` whose discriminant is not a square in ℚ(i).
    Quadratic {
        #[serde(serialize_with = "crate::ser::gaussian")]
        a: GaussianRational,
        #[serde(serialize_with = "crate::ser::gaussian")]
        b: GaussianRational,
        #[serde(serialize_with = "crate::ser::gaussian")]
        c: GaussianRational,
        #[serde(serialize_with = "crate::ser::gaussian")]
        discriminant: GaussianRational,
    },
}

fn gaussians<S: serde::Serializer>(v: &[GaussianRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|z| z.to_string()))
}

/// Closed-form roots of the test polynomial `F(x0, ·)` (see
/// [`OperatorSymbol::test_poly`]).
pub fn quadratic_symbol_roots(
    sym: &OperatorSymbol,
    x0: &GaussianRational,
) -> Result<SymbolRoots, DiffOpError> {
    let deg = sym.degree_in_w();
    if deg > 2 {
        return Err(DiffOpError::NotQuadratic(deg));
    }
    let c = sym.coeffs_at(x0);
    let lead = c.get(deg).cloned().unwrap_or_else(GaussianRational::zero);
    if lead.is_zero() {
        return Err(DiffOpError::DegenerateDirection);
    }
    let roots = match deg {
        0 => Vec::new(),
        1 => vec![c[0].negate().try_div(&c[1]).expect("nonzero")],
        _ => {
            let (a, b, cc) = (&c[2], &c[1], &c[0]);
            let disc = b.times(b).minus(&a.times(cc).scale(&Rational::from_int(4)));
            let Some(s) = disc.sqrt() else {
                return Ok(SymbolRoots::Quadratic {
                    a: a.clone(),
                    b: b.clone(),
                    c: cc.clone(),
                    discriminant: disc,
                });
            };
            let two_a = a.scale(&Rational::from_int(2));
            [s.clone(), s.negate()]
                .iter()
                .map(|r| b.negate().plus(r).try_div(&two_a).expect("nonzero"))
                .collect()
        }
    };
    Ok(SymbolRoots::Exact { roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_nested;
    use crate::arith::{int, rat};
    use crate::bases::BasisKind;
    use crate::diffop::to_diffop;
    use crate::multseq::DiagonalOperator;

    fn sym_of(seq: &str) -> OperatorSymbol {
        let op = DiagonalOperator::new(BasisKind::Legendre, seq.parse().unwrap());
        symbol(&to_diffop(&op, 2).unwrap())
    }

    fn g(a: Rational, b: Rational) -> GaussianRational {
        GaussianRational::new(a, b)
    }

    #[test]
    fn quadratic_legendre_symbols() {
        let want: Poly<Poly<Rational>> =
            parse_nested("(x*w)^2 - w^2 + 2*x*w + 1", &["w", "x"]).unwrap();
        assert_eq!(sym_of("k^2+k+1").poly(), &want);
        let want: Poly<Poly<Rational>> = parse_nested("(x^2-1)*w^2 + 2*x*w", &["w", "x"]).unwrap();
        assert_eq!(sym_of("k^2+k").poly(), &want);
        assert_eq!(sym_of("1").to_string(), "1");
    }

    #[test]
    fn roots_at_i() {
        let s = sym_of("k^2+k+1");
        let i = GaussianRational::i();
        let SymbolRoots::Exact { roots } = quadratic_symbol_roots(&s, &i).unwrap() else {
            panic!("expected exact roots");
        };
        let one = GaussianRational::one();
        let want = [
            one.try_div(&i.plus(&one)).unwrap(),
            one.try_div(&i.minus(&one)).unwrap(),
        ];
        assert!(roots.iter().all(|r| want.contains(r)));
        assert!(roots.iter().all(|r| r.im < int(0)));
        assert_eq!(want[0], g(rat(1, 2), rat(-1, 2)));
    }

    #[test]
    fn positive_orientation_flips_roots() {
        let s = sym_of("k^2+k+1").with_orientation(Orientation::PositiveExponent);
        let SymbolRoots::Exact { roots } =
            quadratic_symbol_roots(&s, &GaussianRational::i()).unwrap()
        else {
            panic!("expected exact roots");
        };
        assert!(roots.iter().all(|r| r.im > int(0)));
    }

    #[test]
    fn constant_quadratic() {
        let s = OperatorSymbol::new(parse_nested("w^2 - 1", &["w", "x"]).unwrap());
        let x0 = g(int(3), int(5));
        let SymbolRoots::Exact { roots } = quadratic_symbol_roots(&s, &x0).unwrap() else {
            panic!("expected exact roots");
        };
        assert_eq!(roots, vec![g(int(1), int(0)), g(int(-1), int(0))]);
    }

    #[test]
    fn degenerate_and_cubic() {
        let s = OperatorSymbol::new(parse_nested("(x^2+1)*w^2 + w", &["w", "x"]).unwrap());
        assert_eq!(
            quadratic_symbol_roots(&s, &GaussianRational::i()),
            Err(DiffOpError::DegenerateDirection)
        );
        let s = OperatorSymbol::new(parse_nested("w^3", &["w", "x"]).unwrap());
        assert_eq!(
            quadratic_symbol_roots(&s, &GaussianRational::i()),
            Err(DiffOpError::NotQuadratic(3))
        );
    }
}
