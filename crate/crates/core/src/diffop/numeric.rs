//! Complex arithmetic on binary floats and simultaneous root finding.
//! Nothing here leaves the falsifier except through exact conversion.

use astro_float::{BigFloat, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::arith::{GaussianRational, Rational};

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Clone, Debug)]
pub(crate) struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

fn int_to_float(n: &BigInt) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_word(0, 64);
    }
    let words = n.magnitude().to_u64_digits();
    let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
    BigFloat::from_words(&words, sign, (64 * words.len()) as i32)
}

pub(crate) fn rational_to_float(q: &Rational, p: usize) -> BigFloat {
    int_to_float(q.numer()).div(&int_to_float(q.denom()), p, RM)
}

/// Exact value of a finite float: the mantissa words `M` (little-endian)
/// encode `M · 2^(e − 64·len)`.
pub(crate) fn float_to_rational(f: &BigFloat) -> Rational {
    let Some((words, _, sign, e, _)) = f.as_raw_parts() else {
        return Rational::zero();
    };
    if f.is_zero() {
        return Rational::zero();
    }
    let digits: Vec<u32> = words
        .iter()
        .flat_map(|w| [*w as u32, (*w >> 32) as u32])
        .collect();
    let m = BigInt::from(BigUint::new(digits));
    let shift = e as i64 - 64 * words.len() as i64;
    let mag = if shift >= 0 {
        Rational::from_integer(m << shift as usize)
    } else {
        Rational::new(m, BigInt::from(1) << (-shift) as usize)
    };
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

impl Complex {
    pub fn zero() -> Self {
        Complex {
            re: BigFloat::from_word(0, 64),
            im: BigFloat::from_word(0, 64),
        }
    }

    pub fn from_gaussian(z: &GaussianRational, p: usize) -> Self {
        Complex {
            re: rational_to_float(&z.re, p),
            im: rational_to_float(&z.im, p),
        }
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        Complex {
            re: BigFloat::from_f64(re, p),
            im: BigFloat::from_f64(im, p),
        }
    }

    pub fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::new(float_to_rational(&self.re), float_to_rational(&self.im))
    }

    pub fn add(&self, o: &Self, p: usize) -> Self {
        Complex {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
        }
    }

    pub fn sub(&self, o: &Self, p: usize) -> Self {
        Complex {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
        }
    }

    pub fn mul(&self, o: &Self, p: usize) -> Self {
        let rr = self.re.mul(&o.re, p, RM);
        let ii = self.im.mul(&o.im, p, RM);
        let ri = self.re.mul(&o.im, p, RM);
        let ir = self.im.mul(&o.re, p, RM);
        Complex {
            re: rr.sub(&ii, p, RM),
            im: ri.add(&ir, p, RM),
        }
    }

    pub fn norm_sqr(&self, p: usize) -> BigFloat {
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `None` on division by zero.
    pub fn div(&self, o: &Self, p: usize) -> Option<Self> {
        let n = o.norm_sqr(p);
        if n.is_zero() {
            return None;
        }
        let conj = Complex {
            re: o.re.clone(),
            im: o.im.neg(),
        };
        let num = self.mul(&conj, p);
        Some(Complex {
            re: num.re.div(&n, p, RM),
            im: num.im.div(&n, p, RM),
        })
    }

    pub fn approx(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

pub(crate) fn to_f64(f: &BigFloat) -> f64 {
    crate::arith::to_f64(&float_to_rational(f))
}

/// `(f(z), f'(z))` by Horner; `c` holds coefficients from the constant up.
fn eval_with_derivative(c: &[Complex], z: &Complex, p: usize) -> (Complex, Complex) {
    let mut f = Complex::zero();
    let mut d = Complex::zero();
    for a in c.iter().rev() {
        d = d.mul(z, p).add(&f, p);
        f = f.mul(z, p).add(a, p);
    }
    (f, d)
}

/// All roots of `Σ c_k wᵏ` (leading coefficient nonzero) by Aberth–Ehrlich
/// iteration followed by a few Newton steps.
pub(crate) fn aberth(c: &[Complex], p: usize, max_iter: usize) -> Vec<Complex> {
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n].approx();
    let lead_abs = lead.0.hypot(lead.1);
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|a| {
                let (x, y) = a.approx();
                x.hypot(y) / lead_abs
            })
            .fold(0.0, f64::max);
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex::from_f64(radius * t.cos(), radius * t.sin(), p)
        })
        .collect();
    let tol = BigFloat::from_f64(2f64.powi(-(p as i32) + 16).max(f64::MIN_POSITIVE), p);
    let tol_sq = tol.mul(&tol, p, RM);
    for _ in 0..max_iter {
        let mut converged = true;
        let snapshot = z.clone();
        for i in 0..n {
            let (f, d) = eval_with_derivative(c, &snapshot[i], p);
            if f.is_zero() {
                continue;
            }
            let Some(ratio) = f.div(&d, p) else {
                // stationary point: nudge and retry next sweep
                z[i] = z[i].add(&Complex::from_f64(1e-3, 1e-3, p), p);
                converged = false;
                continue;
            };
            let mut sum = Complex::zero();
            for (j, zj) in snapshot.iter().enumerate() {
                if j != i {
                    if let Some(r) = Complex::from_f64(1.0, 0.0, p).div(&snapshot[i].sub(zj, p), p) {
                        sum = sum.add(&r, p);
                    }
                }
            }
            let one = Complex::from_f64(1.0, 0.0, p);
            let denom = one.sub(&ratio.mul(&sum, p), p);
            let step = ratio.div(&denom, p).unwrap_or(ratio);
            let scale = snapshot[i].norm_sqr(p).max(&BigFloat::from_word(1, p));
            if step.norm_sqr(p).cmp(&tol_sq.mul(&scale, p, RM)) == Some(1) {
                converged = false;
            }
            z[i] = snapshot[i].sub(&step, p);
        }
        if converged {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (f, d) = eval_with_derivative(c, zi, p);
            match f.div(&d, p) {
                Some(step) if !f.is_zero() => *zi = zi.sub(&step, p),
                _ => break,
            }
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Ring};

    #[test]
    fn exact_round_trip() {
        for q in [rat(3, 8), rat(-5, 1), int(0), rat(1, 1 << 40), rat(12345678901, 4)] {
            assert_eq!(float_to_rational(&rational_to_float(&q, 256)), q);
        }
        let third = float_to_rational(&rational_to_float(&rat(1, 3), 256));
        let err = (third - rat(1, 3)).abs();
        assert!(err < Rational::new(1.into(), BigInt::from(1) << 250));
    }

    #[test]
    fn finds_unit_roots() {
        // w² + 1
        let p = 256;
        let c: Vec<Complex> = [1, 0, 1]
            .iter()
            .map(|&a| Complex::from_gaussian(&GaussianRational::from_int(a), p))
            .collect();
        let mut ims: Vec<f64> = aberth(&c, p, 200).iter().map(|z| z.approx().1).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + 1.0).abs() < 1e-60 && (ims[1] - 1.0).abs() < 1e-60);
    }

    #[test]
    fn multiple_roots_converge() {
        // (w − 2)³ (w + i)
        let p = 256;
        let i = GaussianRational::i();
        let f = crate::arith::Poly::from_roots(&[
            GaussianRational::from_int(2),
            GaussianRational::from_int(2),
            GaussianRational::from_int(2),
            i.negate(),
        ]);
        let c: Vec<Complex> = f.coeffs().iter().map(|a| Complex::from_gaussian(a, p)).collect();
        for z in aberth(&c, p, 500) {
            let r = f.eval(&z.to_gaussian());
            assert!(crate::arith::to_f64(&r.norm_sqr()) < 1e-40);
        }
    }
}
