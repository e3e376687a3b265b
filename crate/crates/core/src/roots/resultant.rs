use super::RootsError;
use crate::arith::{int, transpose, Poly, Rational, Ring};

/// Determinant by fraction-free elimination with row pivoting.
fn bareiss<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = num.try_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.negate()
    } else {
        det
    }
}

fn sylvester<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Vec<Vec<R>> {
    let m = p.coeffs().len() - 1;
    let n = q.coeffs().len() - 1;
    let size = m + n;
    let row = |f: &Poly<R>, shift: usize| {
        let mut r = vec![R::zero(); size];
        for (i, c) in f.coeffs().iter().rev().enumerate() {
            r[shift + i] = c.clone();
        }
        r
    };
    (0..n)
        .map(|s| row(p, s))
        .chain((0..m).map(|s| row(q, s)))
        .collect()
}

/// Determinant of the Sylvester matrix of `p` and `q`, rows of `p` first.
pub fn resultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<R, RootsError> {
    let m = p.degree().ok_or(RootsError::ZeroPolynomial)?;
    let n = q.degree().ok_or(RootsError::ZeroPolynomial)?;
    let cp = p.content();
    let cq = q.content();
    let pp = p.scale_rational(&cp.recip());
    let qq = q.scale_rational(&cq.recip());
    let scale = pow(&cp, n) * pow(&cq, m);
    Ok(bareiss(sylvester(&pp, &qq)).scale(&scale))
}

fn pow(q: &Rational, e: usize) -> Rational {
    (0..e).fold(int(1), |acc, _| acc * q)
}

/// `(−1)^{n(n−1)/2} Res(p, p′) / lc(p)` in the outermost variable.
pub fn discriminant<R: Ring>(p: &Poly<R>) -> Result<R, RootsError> {
    let n = p.degree().ok_or(RootsError::ZeroPolynomial)?;
    if n < 2 {
        return Err(RootsError::DegreeTooSmall);
    }
    let res = resultant(p, &p.derivative())?;
    let lc = p.leading().expect("nonzero");
    let d = res.try_div(lc).expect("leading coefficient divides Res(p, p')");
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        d.negate()
    } else {
        d
    })
}

/// Discriminant in the second variable of a bivariate polynomial, as a
/// polynomial in the first.
pub fn discriminant_inner<R: Ring>(p: &Poly<Poly<R>>) -> Result<Poly<R>, RootsError> {
    discriminant(&transpose(p))
}
