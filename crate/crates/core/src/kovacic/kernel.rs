//! Monic polynomial solutions of linear differential operators.

use crate::exactalg::{FieldElem, Poly, RatFunc};

fn lcm(a: &Poly, b: &Poly) -> Poly {
    (a * b).exact_div(&a.gcd(b)).monic()
}

/// Searches a monic `P` of degree `n` with `op(P) = 0`, where `op` is
/// linear over the constants. Equates polynomial coefficients after
/// clearing denominators and solves the exact linear system for the
/// `n` free coefficients; free variables are set to zero.
pub fn find_monic_kernel(n: usize, op: impl Fn(&Poly) -> RatFunc) -> Option<Poly> {
    let images: Vec<RatFunc> = (0..=n)
        .map(|i| op(&Poly::monomial(FieldElem::one(), i)))
        .collect();
    let den = images
        .iter()
        .filter(|f| !f.is_zero())
        .fold(Poly::one(), |acc, f| lcm(&acc, f.den()));
    let cols: Vec<Poly> = images
        .iter()
        .map(|f| {
            if f.is_zero() {
                Poly::zero()
            } else {
                f.num() * &den.exact_div(f.den())
            }
        })
        .collect();
    let rows = cols.iter().filter_map(|c| c.degree()).max().map_or(0, |d| d + 1);
    // augmented matrix [A | −b] with A[k][i] = coeff_k(cols[i]), i < n
    let mut m: Vec<Vec<FieldElem>> = (0..rows)
        .map(|k| {
            let mut row: Vec<FieldElem> = cols[..n].iter().map(|c| c.coeff(k)).collect();
            row.push(-&cols[n].coeff(k));
            row
        })
        .collect();
    let sol = solve_linear(&mut m, n)?;
    let mut coeffs = sol;
    coeffs.push(FieldElem::one());
    Some(Poly::new(coeffs))
}

/// Gauss–Jordan elimination on an augmented `rows × (n+1)` system.
fn solve_linear(m: &mut [Vec<FieldElem>], n: usize) -> Option<Vec<FieldElem>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for k in c..=n {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=n {
                    let t = &f * &m[r][k];
                    m[i][k] = &m[i][k] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![FieldElem::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    Some(x)
}
