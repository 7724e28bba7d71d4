//! Exact infeasibility certificates for admissibility targets.
//!
//! A quasi-admissible set is a weighted point cloud `(a_i, b_i)` with weights
//! `c_i`, mean `(a, b)`, and realized deviation
//! `Σ c_i (a_i − a)(b_i − b)`. Each point must lie in a [`Region`]. A
//! [`Certificate`] proves that no such cloud reaches the requested deviation.

use std::fmt;

use crate::rational::Rational;

/// Where a single entry `(a_i, b_i)` with `d_i = ε + a_i b_i` may lie.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// `a_i, b_i, d_i ∈ (0,1)`.
    Literal,
    /// Additionally `d_i < a_i`, `d_i < b_i` and `1 − a_i − b_i + d_i > 0`,
    /// i.e. every Boolean cell of `(A, B)` inside `C_i` has positive mass.
    CellBounds,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Literal => "0 < a_i, b_i, d_i < 1",
            Region::CellBounds => "all four cells of (A, B) positive in every C_i",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// `ε + ab ≤ 0`: the entry with the smallest `a_i` has `d_i ≤ 0`.
    ProductBound {
        a: Rational,
        b: Rational,
        epsilon: Rational,
    },
    /// `ε + (1−a)(1−b) ≤ 0`: the product bound for `(¬A, ¬B)`, which has the
    /// same correlations.
    ComplementBound {
        a: Rational,
        b: Rational,
        epsilon: Rational,
    },
    /// `(x−a)(y−b) − λ(x−a) − μ(y−b) < Δ` on the closure of the region. The
    /// linear terms average to zero over any cloud with mean `(a, b)`, so the
    /// realized deviation stays below `Δ`.
    CovarianceBound {
        a: Rational,
        b: Rational,
        epsilon: Rational,
        delta: Rational,
        region: Region,
        lambda: Rational,
        mu: Rational,
    },
}

/// ` − k` for the subtracted multiplier `k`, with the sign folded in.
fn signed_term(k: &Rational) -> String {
    if k.is_negative() {
        format!(" + {}", k.abs())
    } else {
        format!(" − {k}")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::ProductBound { a, b, epsilon } => write!(
                f,
                "ε + p(A)p(B) ≤ 0 (ε = {epsilon}, p(A) = {a}, p(B) = {b}, sum {})",
                epsilon + a * b
            ),
            Certificate::ComplementBound { a, b, epsilon } => {
                let one = Rational::one();
                let na = &one - a;
                let nb = &one - b;
                write!(
                    f,
                    "ε + p(¬A)p(¬B) ≤ 0 (ε = {epsilon}, p(¬A) = {na}, p(¬B) = {nb}, sum {})",
                    epsilon + &na * &nb
                )
            }
            Certificate::CovarianceBound {
                a,
                b,
                epsilon,
                delta,
                region,
                lambda,
                mu,
            } => write!(
                f,
                "deviation {delta} unreachable at p(A) = {a}, p(B) = {b}, ε = {epsilon}: \
                 (x−a)(y−b){}(x−a){}(y−b) < {delta} wherever {region}",
                signed_term(lambda),
                signed_term(mu)
            ),
        }
    }
}

impl Certificate {
    /// Re-checks the certificate from scratch with exact arithmetic.
    pub fn verify(&self) -> bool {
        match self {
            Certificate::ProductBound { a, b, epsilon } => !(epsilon + a * b).is_positive(),
            Certificate::ComplementBound { a, b, epsilon } => {
                let one = Rational::one();
                !(epsilon + (&one - a) * (&one - b)).is_positive()
            }
            Certificate::CovarianceBound {
                a,
                b,
                epsilon,
                delta,
                region,
                lambda,
                mu,
            } => {
                let h = Affine { a, b, lambda, mu };
                below_everywhere(&h, epsilon, *region, delta, MAX_DEPTH)
            }
        }
    }
}

/// Searches for a certificate that no set in `region` with mean `(a, b)`
/// realizes deviation `delta`.
pub fn infeasibility_certificate(
    a: &Rational,
    b: &Rational,
    epsilon: &Rational,
    delta: &Rational,
    region: Region,
) -> Option<Certificate> {
    if !(epsilon + a * b).is_positive() {
        return Some(Certificate::ProductBound {
            a: a.clone(),
            b: b.clone(),
            epsilon: epsilon.clone(),
        });
    }
    if region == Region::CellBounds {
        let one = Rational::one();
        if !(epsilon + (&one - a) * (&one - b)).is_positive() {
            return Some(Certificate::ComplementBound {
                a: a.clone(),
                b: b.clone(),
                epsilon: epsilon.clone(),
            });
        }
    }
    let (lambda, mu) = guess_multipliers(a, b, epsilon, region)?;
    let cert = Certificate::CovarianceBound {
        a: a.clone(),
        b: b.clone(),
        epsilon: epsilon.clone(),
        delta: delta.clone(),
        region,
        lambda,
        mu,
    };
    cert.verify().then_some(cert)
}

const MAX_DEPTH: u32 = 14;

struct Affine<'a> {
    a: &'a Rational,
    b: &'a Rational,
    lambda: &'a Rational,
    mu: &'a Rational,
}

impl Affine<'_> {
    fn at(&self, x: &Rational, y: &Rational) -> Rational {
        let u = x - self.a;
        let v = y - self.b;
        &u * &v - self.lambda * &u - self.mu * &v
    }
}

/// True when the box misses the closed region entirely. Every constraint is
/// monotone in each coordinate on the unit square, so one corner decides it.
fn outside(
    x0: &Rational,
    x1: &Rational,
    y0: &Rational,
    y1: &Rational,
    eps: &Rational,
    region: Region,
) -> bool {
    let one = Rational::one();
    if x1 * y1 < -eps || x0 * y0 > &one - eps {
        return true;
    }
    if region == Region::CellBounds {
        if x1 * (&one - y0) < *eps || y1 * (&one - x0) < *eps {
            return true;
        }
        if (&one - x0) * (&one - y0) < -eps {
            return true;
        }
    }
    false
}

/// Proves `h < delta` on the closed region by subdividing the unit square.
/// `h` is bilinear, so its maximum over a box sits at a corner.
fn below_everywhere(
    h: &Affine<'_>,
    eps: &Rational,
    region: Region,
    delta: &Rational,
    max_depth: u32,
) -> bool {
    let mut stack = vec![(
        Rational::zero(),
        Rational::one(),
        Rational::zero(),
        Rational::one(),
        0u32,
    )];
    while let Some((x0, x1, y0, y1, depth)) = stack.pop() {
        if outside(&x0, &x1, &y0, &y1, eps, region) {
            continue;
        }
        let corners = [
            h.at(&x0, &y0),
            h.at(&x0, &y1),
            h.at(&x1, &y0),
            h.at(&x1, &y1),
        ];
        if corners.iter().all(|c| c < delta) {
            continue;
        }
        if depth == max_depth {
            return false;
        }
        let xm = (&x0 + &x1).div_int(2);
        let ym = (&y0 + &y1).div_int(2);
        stack.push((x0.clone(), xm.clone(), y0.clone(), ym.clone(), depth + 1));
        stack.push((x0, xm.clone(), ym.clone(), y1.clone(), depth + 1));
        stack.push((xm.clone(), x1.clone(), y0, ym.clone(), depth + 1));
        stack.push((xm, x1, ym, y1, depth + 1));
    }
    true
}

/// Approximately minimizes `max_region h(λ, μ)` over dyadic `(λ, μ)`.
///
/// Floating point only steers the search; the result is verified exactly.
fn guess_multipliers(
    a: &Rational,
    b: &Rational,
    eps: &Rational,
    region: Region,
) -> Option<(Rational, Rational)> {
    const GRID: i64 = 256;
    const SCALE: i64 = 4096;
    let (af, bf) = (a.to_f64_lossy(), b.to_f64_lossy());
    let mut pts = Vec::new();
    for i in 0..=GRID {
        for j in 0..=GRID {
            let x = Rational::frac(i, GRID);
            let y = Rational::frac(j, GRID);
            if outside(&x, &x, &y, &y, eps, region) {
                continue;
            }
            let (xf, yf) = (i as f64 / GRID as f64, j as f64 / GRID as f64);
            pts.push((xf - af, yf - bf));
        }
    }
    if pts.is_empty() {
        return None;
    }
    let value = |l: i64, m: i64| {
        let (lf, mf) = (l as f64 / SCALE as f64, m as f64 / SCALE as f64);
        pts.iter()
            .map(|(u, v)| u * v - lf * u - mf * v)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let (mut l, mut m) = (0i64, 0i64);
    let mut best = value(l, m);
    let mut step = SCALE / 2;
    while step >= 1 {
        let mut moved = false;
        for (dl, dm) in [
            (1, 0),
            (-1, 0),
            (0, 1),
            (0, -1),
            (1, 1),
            (1, -1),
            (-1, 1),
            (-1, -1),
        ] {
            let (nl, nm) = (l + dl * step, m + dm * step);
            let v = value(nl, nm);
            if v < best {
                best = v;
                l = nl;
                m = nm;
                moved = true;
                break;
            }
        }
        if !moved {
            step /= 2;
        }
    }
    Some((Rational::frac(l, SCALE), Rational::frac(m, SCALE)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn product_bound_at_boundary() {
        let c =
            infeasibility_certificate(&q(1, 2), &q(1, 2), &q(-1, 4), &q(1, 20), Region::Literal)
                .unwrap();
        assert!(matches!(c, Certificate::ProductBound { .. }));
        assert!(c.verify());
        assert!(c.to_string().contains("ε + p(A)p(B) ≤ 0"));
    }

    #[test]
    fn complement_bound_only_for_cell_bounds() {
        let (a, b, e) = (q(7, 10), q(7, 10), q(-1, 10));
        let c = infeasibility_certificate(&a, &b, &e, &q(1, 20), Region::CellBounds).unwrap();
        assert!(matches!(c, Certificate::ComplementBound { .. }));
        assert!(c.verify());
    }

    #[test]
    fn covariance_bound_found_and_checked() {
        let c = infeasibility_certificate(
            &q(1, 2),
            &q(1, 2),
            &q(-1, 10),
            &q(1, 20),
            Region::CellBounds,
        )
        .unwrap();
        assert!(matches!(c, Certificate::CovarianceBound { .. }));
        assert!(c.verify());
    }

    #[test]
    fn no_certificate_for_reachable_targets() {
        assert!(infeasibility_certificate(
            &q(1, 2),
            &q(1, 2),
            &q(0, 1),
            &q(9, 100),
            Region::CellBounds
        )
        .is_none());
    }

    #[test]
    fn tampered_multipliers_fail_verification() {
        let bad = Certificate::CovarianceBound {
            a: q(1, 2),
            b: q(1, 2),
            epsilon: q(0, 1),
            delta: q(9, 100),
            region: Region::CellBounds,
            lambda: q(0, 1),
            mu: q(0, 1),
        };
        assert!(!bad.verify());
    }
}
