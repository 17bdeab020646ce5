//! Roots in ℚ(i) of polynomials with ℚ(i) coefficients, by the rational
//! root theorem over the Gaussian integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactlin::{Rational, Scalar};

/// Coefficients, lowest degree first.
pub type Poly = Vec<Scalar>;

/// Largest norm we are willing to factor by trial division.
const NORM_BOUND: u128 = 1 << 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    /// Some factor has no root in ℚ(i); carries the leftover degree.
    NonSplit(usize),
    /// A coefficient is too large for divisor enumeration.
    TooLarge,
}

pub fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::ZERO;
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
}

/// Divides by `(t - r)`, assuming `r` is a root.
fn deflate(p: &[Scalar], r: &Scalar) -> Poly {
    let n = p.len() - 1;
    let mut q = vec![Scalar::ZERO; n];
    let mut carry = Scalar::ZERO;
    for k in (0..n).rev() {
        carry = &p[k + 1] + &(&carry * r);
        q[k] = carry.clone();
    }
    q
}

type GInt = (BigInt, BigInt);

fn lcm_denoms(p: &[Scalar]) -> BigInt {
    let mut l = BigInt::one();
    for c in p {
        l = l.lcm(&c.re.denom());
        l = l.lcm(&c.im.denom());
    }
    l
}

fn to_gint(c: &Scalar, l: &BigInt) -> GInt {
    let re = c.re.numer() * (l / c.re.denom());
    let im = c.im.numer() * (l / c.im.denom());
    (re, im)
}

fn isqrt(m: u128) -> u128 {
    if m < 2 {
        return m;
    }
    let mut x = (m as f64).sqrt() as u128;
    while x * x > m {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= m {
        x += 1;
    }
    x
}

/// All Gaussian integers dividing `z` (z ≠ 0), associates included.
fn gaussian_divisors(z: &GInt) -> Result<Vec<GInt>, RootError> {
    let norm = &z.0 * &z.0 + &z.1 * &z.1;
    let n = norm.to_u128().filter(|&n| n <= NORM_BOUND).ok_or(RootError::TooLarge)?;
    let mut divisors = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            divisors.push(d);
            if d * d != n {
                divisors.push(n / d);
            }
        }
        d += 1;
    }
    let mut out = Vec::new();
    for m in divisors {
        let top = isqrt(m);
        for a in 0..=top {
            let rest = m - a * a;
            let b = isqrt(rest);
            if b * b != rest {
                continue;
            }
            for (sa, sb) in [(1i32, 1i32), (1, -1), (-1, 1), (-1, -1)] {
                let da = BigInt::from(a) * sa;
                let db = BigInt::from(b) * sb;
                // z / δ = z·conj(δ) / m must be integral
                let re = &z.0 * &da + &z.1 * &db;
                let im = &z.1 * &da - &z.0 * &db;
                let mm = BigInt::from(m);
                if (&re % &mm).is_zero() && (&im % &mm).is_zero() {
                    out.push((da, db));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn gint_to_scalar(z: &GInt) -> Scalar {
    Scalar::new(big_rat(&z.0), big_rat(&z.1))
}

fn big_rat(n: &BigInt) -> Rational {
    n.to_string().parse().expect("integer literal parses")
}

/// Distinct roots with multiplicities, sorted by (re, im). Fails unless the
/// polynomial splits completely over ℚ(i).
pub fn gaussian_roots(p: &[Scalar]) -> Result<Vec<(Scalar, usize)>, RootError> {
    let mut p: Poly = p.to_vec();
    trim(&mut p);
    if p.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots: Vec<(Scalar, usize)> = Vec::new();
    let mut zero_mult = 0;
    while p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Scalar::ZERO, zero_mult));
    }
    if p.len() > 1 {
        let l = lcm_denoms(&p);
        let c0 = to_gint(&p[0], &l);
        let cn = to_gint(p.last().unwrap(), &l);
        let num = gaussian_divisors(&c0)?;
        let den = gaussian_divisors(&cn)?;
        let mut candidates: Vec<Scalar> = Vec::new();
        for a in &num {
            for b in den.iter().filter(|b| b.0.is_positive() || (b.0.is_zero() && b.1.is_positive())) {
                let r = &gint_to_scalar(a) / &gint_to_scalar(b);
                if !candidates.contains(&r) {
                    candidates.push(r);
                }
            }
        }
        for r in candidates {
            let mut m = 0;
            while p.len() > 1 && eval(&p, &r).is_zero() {
                p = deflate(&p, &r);
                m += 1;
            }
            if m > 0 {
                roots.push((r, m));
            }
        }
    }
    if p.len() > 1 {
        return Err(RootError::NonSplit(p.len() - 1));
    }
    roots.sort_by(|a, b| (&a.0.re, &a.0.im).cmp(&(&b.0.re, &b.0.im)));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Poly {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rational_roots() {
        // t^2 - 1
        let r = gaussian_roots(&ints(&[-1, 0, 1])).unwrap();
        assert_eq!(r, vec![(Scalar::from_int(-1), 1), (Scalar::ONE, 1)]);
        // (2t - 1)^2 t
        let r = gaussian_roots(&ints(&[0, 1, -4, 4])).unwrap();
        assert_eq!(r, vec![(Scalar::ZERO, 1), (Scalar::ratio(1, 2), 2)]);
    }

    #[test]
    fn gaussian_roots_of_t2_plus_1() {
        let r = gaussian_roots(&ints(&[1, 0, 1])).unwrap();
        let vals: Vec<String> = r.iter().map(|(x, _)| x.to_string()).collect();
        assert_eq!(vals, ["-1i", "1i"]);
        // t^3 - 1 has irrational cube roots of unity
        assert_eq!(gaussian_roots(&ints(&[-1, 0, 0, 1])), Err(RootError::NonSplit(2)));
    }

    #[test]
    fn gaussian_coefficients() {
        // (t - (1+2i)/3)(t + i)
        let a: Scalar = "1/3+2/3i".parse().unwrap();
        let b = -Scalar::i();
        let p = vec![&a * &b, -(&a + &b), Scalar::ONE];
        let r = gaussian_roots(&p).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().any(|(x, _)| *x == a));
        assert!(r.iter().any(|(x, _)| *x == b));
    }
}
