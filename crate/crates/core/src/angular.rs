//! Wigner 3-j and 6-j symbols for half-integer angular momenta.
//!
//! Arguments are f64 half-integers (…, 0, 1/2, 1, 3/2, …) and are
//! validated; values violating triangle or projection rules return an
//! exact zero. Everything here is a pure function with no shared state.

use crate::error::{Error, Result};

/// Largest factorial held in the table; enough for j well beyond any
/// hyperfine manifold.
const FACT_LEN: usize = 130;

fn factorials() -> &'static [f64; FACT_LEN] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[f64; FACT_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [1.0_f64; FACT_LEN];
        for k in 1..FACT_LEN {
            t[k] = t[k - 1] * k as f64;
        }
        t
    })
}

#[inline]
fn fact(n: i32) -> f64 {
    factorials()[n as usize]
}

/// Convert a half-integer to its doubled integer representation.
fn doubled(x: f64, what: &str) -> Result<i32> {
    let d = 2.0 * x;
    let r = d.round();
    if (d - r).abs() > 1e-9 || r.abs() > 200.0 {
        return Err(Error::Domain(format!(
            "{what} = {x} is not a half-integer in range"
        )));
    }
    Ok(r as i32)
}

fn check_jm(tj: i32, tm: i32) -> Result<()> {
    if tj < 0 {
        return Err(Error::Domain(format!("negative j: {}", tj as f64 / 2.0)));
    }
    if tm.abs() > tj {
        return Err(Error::Domain(format!(
            "|m| = {} exceeds j = {}",
            tm.abs() as f64 / 2.0,
            tj as f64 / 2.0
        )));
    }
    if (tj - tm) % 2 != 0 {
        return Err(Error::Domain(format!(
            "m = {} is not of the same half-integer class as j = {}",
            tm as f64 / 2.0,
            tj as f64 / 2.0
        )));
    }
    Ok(())
}

#[inline]
fn triangle_ok(ta: i32, tb: i32, tc: i32) -> bool {
    tc >= (ta - tb).abs() && tc <= ta + tb && (ta + tb + tc) % 2 == 0
}

/// sqrt of the triangle coefficient Δ(abc); arguments doubled.
fn sqrt_triangle(ta: i32, tb: i32, tc: i32) -> f64 {
    let n1 = fact((ta + tb - tc) / 2);
    let n2 = fact((ta - tb + tc) / 2);
    let n3 = fact((-ta + tb + tc) / 2);
    let d = fact((ta + tb + tc) / 2 + 1);
    (n1 * n2 * n3 / d).sqrt()
}

/// Wigner 3-j symbol (j1 j2 j3; m1 m2 m3).
///
/// Returns exactly 0 when the triangle rule or m1+m2+m3 = 0 fails.
/// Non-half-integer arguments are a domain error.
pub fn wigner3j(j1: f64, j2: f64, j3: f64, m1: f64, m2: f64, m3: f64) -> Result<f64> {
    let tj1 = doubled(j1, "j1")?;
    let tj2 = doubled(j2, "j2")?;
    let tj3 = doubled(j3, "j3")?;
    let tm1 = doubled(m1, "m1")?;
    let tm2 = doubled(m2, "m2")?;
    let tm3 = doubled(m3, "m3")?;
    check_jm(tj1, tm1)?;
    check_jm(tj2, tm2)?;
    check_jm(tj3, tm3)?;
    Ok(wigner3j_doubled(tj1, tj2, tj3, tm1, tm2, tm3))
}

/// 3-j symbol on doubled-integer arguments (assumed individually valid).
pub(crate) fn wigner3j_doubled(tj1: i32, tj2: i32, tj3: i32, tm1: i32, tm2: i32, tm3: i32) -> f64 {
    if tm1 + tm2 + tm3 != 0 || !triangle_ok(tj1, tj2, tj3) {
        return 0.0;
    }
    // Racah's single-sum form; all indices are exact integers.
    let kmin = 0_i32
        .max((tj2 - tj3 - tm1) / 2)
        .max((tj1 - tj3 + tm2) / 2);
    let kmax = ((tj1 + tj2 - tj3) / 2)
        .min((tj1 - tm1) / 2)
        .min((tj2 + tm2) / 2);
    if kmin > kmax {
        return 0.0;
    }
    let mut sum = 0.0;
    for k in kmin..=kmax {
        let denom = fact(k)
            * fact((tj1 + tj2 - tj3) / 2 - k)
            * fact((tj1 - tm1) / 2 - k)
            * fact((tj2 + tm2) / 2 - k)
            * fact((tj3 - tj2 + tm1) / 2 + k)
            * fact((tj3 - tj1 - tm2) / 2 + k);
        let term = 1.0 / denom;
        sum += if k % 2 == 0 { term } else { -term };
    }
    let prefactor = sqrt_triangle(tj1, tj2, tj3)
        * (fact((tj1 + tm1) / 2)
            * fact((tj1 - tm1) / 2)
            * fact((tj2 + tm2) / 2)
            * fact((tj2 - tm2) / 2)
            * fact((tj3 + tm3) / 2)
            * fact((tj3 - tm3) / 2))
        .sqrt();
    let phase = if ((tj1 - tj2 - tm3) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    phase * prefactor * sum
}

/// Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}.
///
/// Returns 0 when any of the four triads violates the triangle rule.
pub fn wigner6j(j1: f64, j2: f64, j3: f64, j4: f64, j5: f64, j6: f64) -> Result<f64> {
    let t = [
        doubled(j1, "j1")?,
        doubled(j2, "j2")?,
        doubled(j3, "j3")?,
        doubled(j4, "j4")?,
        doubled(j5, "j5")?,
        doubled(j6, "j6")?,
    ];
    if t.iter().any(|&x| x < 0) {
        return Err(Error::Domain("negative j in 6-j symbol".into()));
    }
    Ok(wigner6j_doubled(t[0], t[1], t[2], t[3], t[4], t[5]))
}

/// 6-j symbol on doubled-integer arguments.
pub(crate) fn wigner6j_doubled(tj1: i32, tj2: i32, tj3: i32, tj4: i32, tj5: i32, tj6: i32) -> f64 {
    if !triangle_ok(tj1, tj2, tj3)
        || !triangle_ok(tj1, tj5, tj6)
        || !triangle_ok(tj4, tj2, tj6)
        || !triangle_ok(tj4, tj5, tj3)
    {
        return 0.0;
    }
    let a1 = (tj1 + tj2 + tj3) / 2;
    let a2 = (tj1 + tj5 + tj6) / 2;
    let a3 = (tj4 + tj2 + tj6) / 2;
    let a4 = (tj4 + tj5 + tj3) / 2;
    let b1 = (tj1 + tj2 + tj4 + tj5) / 2;
    let b2 = (tj2 + tj3 + tj5 + tj6) / 2;
    let b3 = (tj3 + tj1 + tj6 + tj4) / 2;
    let kmin = a1.max(a2).max(a3).max(a4);
    let kmax = b1.min(b2).min(b3);
    let mut sum = 0.0;
    for k in kmin..=kmax {
        let term = fact(k + 1)
            / (fact(k - a1)
                * fact(k - a2)
                * fact(k - a3)
                * fact(k - a4)
                * fact(b1 - k)
                * fact(b2 - k)
                * fact(b3 - k));
        sum += if k % 2 == 0 { term } else { -term };
    }
    sqrt_triangle(tj1, tj2, tj3)
        * sqrt_triangle(tj1, tj5, tj6)
        * sqrt_triangle(tj4, tj2, tj6)
        * sqrt_triangle(tj4, tj5, tj3)
        * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn selection_rule_zeros() {
        // m1 + m2 + m3 != 0
        assert_eq!(wigner3j(1.0, 1.0, 1.0, 1.0, 0.0, 0.0).unwrap(), 0.0);
        // odd-sum symmetry zero
        assert_eq!(wigner3j(1.0, 1.0, 1.0, 0.0, 0.0, 0.0).unwrap(), 0.0);
        // triangle violation
        assert_eq!(wigner3j(1.0, 1.0, 3.0, 0.0, 0.0, 0.0).unwrap(), 0.0);
        assert_eq!(wigner6j(1.0, 1.0, 3.0, 1.0, 1.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn known_values() {
        assert_abs_diff_eq!(
            wigner3j(1.0, 1.0, 0.0, 0.0, 0.0, 0.0).unwrap(),
            -1.0 / 3.0_f64.sqrt(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            wigner6j(0.5, 0.5, 1.0, 0.5, 0.5, 1.0).unwrap(),
            1.0 / 6.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn six_j_collapse_closed_form() {
        // {j j 0; j' j' e} = (-1)^(j+j'+e) / sqrt((2j+1)(2j'+1))
        let cases = [
            (1.0, 1.0, 1.0),
            (2.0, 1.0, 2.0),
            (1.5, 0.5, 1.0),
            (2.0, 2.0, 3.0),
            (2.5, 1.5, 2.0),
        ];
        for (j, jp, e) in cases {
            let got = wigner6j(j, j, 0.0, jp, jp, e).unwrap();
            let phase = if ((j + jp + e).round() as i64) % 2 == 0 { 1.0 } else { -1.0 };
            let want = phase / ((2.0 * j + 1.0) * (2.0 * jp + 1.0)).sqrt();
            assert_abs_diff_eq!(got, want, epsilon = 1e-13);
        }
    }

    #[test]
    fn non_half_integer_rejected() {
        assert!(wigner3j(1.2, 1.0, 1.0, 0.0, 0.0, 0.0).is_err());
        assert!(wigner6j(1.0, 1.0, 1.0, 0.3, 1.0, 1.0).is_err());
        // m out of range
        assert!(wigner3j(1.0, 1.0, 1.0, 2.0, -1.0, -1.0).is_err());
        // m not in the same class as j
        assert!(wigner3j(1.5, 1.0, 0.5, 1.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn three_j_orthogonality() {
        // sum over m1,m2 of (2j3+1) 3j(j1 j2 j3; m1 m2 m3) 3j(j1 j2 j3'; m1 m2 m3')
        // = delta over (j3, m3), for j <= 3
        let js = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0];
        for &j1 in &js {
            for &j2 in &js {
                let lo = (j1 - j2).abs();
                let hi = j1 + j2;
                let mut j3s = Vec::new();
                let mut j = lo;
                while j <= hi + 1e-9 {
                    j3s.push(j);
                    j += 1.0;
                }
                for &j3 in &j3s {
                    for &j3p in &j3s {
                        let m3 = -j3.min(1.0);
                        let m3p = -j3p.min(1.0);
                        let mut s = 0.0;
                        let mut m1 = -j1;
                        while m1 <= j1 + 1e-9 {
                            let mut m2 = -j2;
                            while m2 <= j2 + 1e-9 {
                                let a = wigner3j(j1, j2, j3, m1, m2, -(m1 + m2)).unwrap();
                                let b = wigner3j(j1, j2, j3p, m1, m2, -(m1 + m2)).unwrap();
                                if (-(m1 + m2) - m3).abs() < 1e-9 && (-(m1 + m2) - m3p).abs() < 1e-9
                                {
                                    s += (2.0 * j3 + 1.0) * a * b;
                                }
                                m2 += 1.0;
                            }
                            m1 += 1.0;
                        }
                        let want =
                            if (j3 - j3p).abs() < 1e-9 && (m3 - m3p).abs() < 1e-9 { 1.0 } else { 0.0 };
                        assert_abs_diff_eq!(s, want, epsilon = 1e-10);
                    }
                }
            }
        }
    }
}
