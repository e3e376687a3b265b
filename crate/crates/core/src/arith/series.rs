use super::{ArithError, Poly, Rational};

/// Power series in `t` with coefficients in ℚ[x], truncated after `t^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries2 {
    order: usize,
    coeffs: Vec<Poly<Rational>>,
}

impl TruncatedSeries2 {
    /// Terms past `order` are dropped; missing terms are zero.
    pub fn new(order: usize, mut coeffs: Vec<Poly<Rational>>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        TruncatedSeries2 { order, coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![Poly::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> &Poly<Rational> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly<Rational>] {
        &self.coeffs
    }

    /// Cauchy product truncated at the common order.
    pub fn mul_truncate(&self, rhs: &Self) -> Result<Self, ArithError> {
        if self.order != rhs.order {
            return Err(ArithError::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        let n = self.order;
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(Poly::zero(), |acc, i| {
                    acc.plus(&self.coeffs[i].times(&rhs.coeffs[k - i]))
                })
            })
            .collect();
        Ok(Self::new(n, coeffs))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Poly::one() && self.coeffs[1..].iter().all(Poly::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn identity_and_mismatch() {
        let s = TruncatedSeries2::new(3, vec![Poly::x(), Poly::one()]);
        assert_eq!(s.mul_truncate(&TruncatedSeries2::one(3)).unwrap(), s);
        assert_eq!(
            s.mul_truncate(&TruncatedSeries2::one(2)),
            Err(ArithError::OrderMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn generating_identity_low_order() {
        // S3 = 1 + x t + (3x²−1)/2 t² + (5x³−3x)/2 t³, expanded by hand
        let le = vec![
            Poly::one(),
            Poly::x(),
            Poly::new(vec![rat(-1, 2), int(0), rat(3, 2)]),
            Poly::new(vec![int(0), rat(-3, 2), int(0), rat(5, 2)]),
        ];
        let s = TruncatedSeries2::new(3, le);
        let kernel = TruncatedSeries2::new(
            3,
            vec![Poly::one(), Poly::new(vec![int(0), int(-2)]), Poly::one()],
        );
        let prod = kernel.mul_truncate(&s.mul_truncate(&s).unwrap()).unwrap();
        assert_eq!(prod.coeff(0), &Poly::one());
        assert!(prod.coeff(1).is_zero());
        assert!(prod.is_one());
    }
}
