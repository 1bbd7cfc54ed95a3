//! Homogeneous polynomial spaces with the 2x2 matrix action, the binomial
//! matrices whose rank counts the independent imaginary parts, and the
//! closed-form period matrix with its determinant and 2-adic valuation
//! checks.

use num_bigint::BigInt;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::qseries::QSeries;
use crate::rational::{binomial, factorial, Ord2, Rational};
use crate::special::bernoulli;

/// Homogeneous rational polynomial of fixed total degree `w` in `(X, Y)`;
/// `coeffs[i]` multiplies `X^i Y^{w-i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogPoly {
    w: usize,
    coeffs: Vec<Rational>,
}

impl HomogPoly {
    pub fn new(w: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), w + 1, "need w+1 coefficients");
        HomogPoly { w, coeffs }
    }

    pub fn zero(w: usize) -> Self {
        HomogPoly { w, coeffs: vec![Rational::zero(); w + 1] }
    }

    /// The monomial `X^i Y^{w-i}`.
    pub fn monomial(w: usize, i: usize) -> Self {
        let mut p = HomogPoly::zero(w);
        p.coeffs[i] = Rational::one();
        p
    }

    pub fn degree(&self) -> usize {
        self.w
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, rhs: &HomogPoly) -> HomogPoly {
        assert_eq!(self.w, rhs.w);
        HomogPoly {
            w: self.w,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &HomogPoly) -> HomogPoly {
        self.add(&rhs.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, s: &Rational) -> HomogPoly {
        HomogPoly {
            w: self.w,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Terms whose degree in `X` is even.
    pub fn even_part(&self) -> HomogPoly {
        let mut p = self.clone();
        for (i, c) in p.coeffs.iter_mut().enumerate() {
            if i % 2 == 1 {
                *c = Rational::zero();
            }
        }
        p
    }

    /// Terms whose degree in `X` is odd.
    pub fn odd_part(&self) -> HomogPoly {
        self.sub(&self.even_part())
    }
}

/// A 2x2 rational matrix acting on [`HomogPoly`] by substitution.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GL2Mat {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl GL2Mat {
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        GL2Mat {
            a: Rational::from(a),
            b: Rational::from(b),
            c: Rational::from(c),
            d: Rational::from(d),
        }
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    /// Sign flip on X.
    pub fn delta() -> Self {
        Self::from_ints(-1, 0, 0, 1)
    }

    /// Swap of X and Y.
    pub fn epsilon() -> Self {
        Self::from_ints(0, 1, 1, 0)
    }

    pub fn u() -> Self {
        Self::from_ints(1, -1, 1, 0)
    }

    pub fn t() -> Self {
        Self::from_ints(1, 1, 0, 1)
    }

    /// Minus the identity.
    pub fn j() -> Self {
        Self::from_ints(-1, 0, 0, -1)
    }

    /// diag(1, 4).
    pub fn a_scale() -> Self {
        Self::from_ints(1, 0, 0, 4)
    }

    pub fn mul(&self, rhs: &GL2Mat) -> GL2Mat {
        GL2Mat {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

/// Substitution action `(P|g)(X, Y) = P(aX + bY, cX + dY)`, exact.
pub fn act(p: &HomogPoly, g: &GL2Mat) -> HomogPoly {
    let w = p.degree();
    // Binomial expansions of (aX + bY)^i and (cX + dY)^{w-i}.
    let expand = |u: &Rational, v: &Rational, e: usize| -> Vec<Rational> {
        (0..=e)
            .map(|t| Rational::from(&binomial(e as u64, t as u64)) * u.pow(t as i64) * v.pow((e - t) as i64))
            .collect()
    };
    let mut out = HomogPoly::zero(w);
    for (i, coeff) in p.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let first = expand(&g.a, &g.b, i);
        let second = expand(&g.c, &g.d, w - i);
        for (t1, c1) in first.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (t2, c2) in second.iter().enumerate() {
                let deg_x = t1 + t2;
                out.coeffs[deg_x] += &(coeff * c1 * c2);
            }
        }
    }
    out
}

/// Formal rational combination of matrices, acting linearly.
#[derive(Debug, Clone, Default)]
pub struct GroupRingElem {
    terms: BTreeMap<GL2Mat, Rational>,
}

impl GroupRingElem {
    pub fn new() -> Self {
        GroupRingElem::default()
    }

    pub fn term(g: GL2Mat, c: Rational) -> Self {
        let mut e = GroupRingElem::new();
        e.push(g, c);
        e
    }

    pub fn push(&mut self, g: GL2Mat, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g.clone()).or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GL2Mat, &Rational)> {
        self.terms.iter()
    }

    /// The element `(1 + delta)/2` projecting on even X-degree.
    pub fn even_projector() -> Self {
        let mut e = GroupRingElem::new();
        e.push(GL2Mat::identity(), Rational::new(1, 2));
        e.push(GL2Mat::delta(), Rational::new(1, 2));
        e
    }

    /// The depth-2 comparison element
    /// `eps ((1+delta)/2 - (-1)^k (1-delta)/2 U - (1+delta)/2 U eps)`.
    pub fn delta_k(k: u32) -> Self {
        let eps = GL2Mat::epsilon();
        let delta = GL2Mat::delta();
        let u = GL2Mat::u();
        let eps_delta = eps.mul(&delta);
        let eps_u = eps.mul(&u);
        let eps_delta_u = eps_delta.mul(&u);
        let eps_u_eps = eps_u.mul(&eps);
        let eps_delta_u_eps = eps_delta_u.mul(&eps);
        let half = Rational::new(1, 2);
        let sgn = if k % 2 == 0 { Rational::one() } else { Rational::from(-1) };
        let mut e = GroupRingElem::new();
        e.push(eps, half.clone());
        e.push(eps_delta, half.clone());
        e.push(eps_u, -&half * &sgn);
        e.push(eps_delta_u, &half * &sgn);
        e.push(eps_u_eps, -half.clone());
        e.push(eps_delta_u_eps, -half);
        e
    }

    /// The kernel element `(1 + delta) + (1 - delta) A (1 + eps)` with
    /// `A = diag(1, 4)`.
    pub fn delta_tilde() -> Self {
        let delta = GL2Mat::delta();
        let a = GL2Mat::a_scale();
        let eps = GL2Mat::epsilon();
        let mut e = GroupRingElem::new();
        e.push(GL2Mat::identity(), Rational::one());
        e.push(delta.clone(), Rational::one());
        e.push(a.clone(), Rational::one());
        e.push(a.mul(&eps), Rational::one());
        e.push(delta.mul(&a), Rational::from(-1));
        e.push(delta.mul(&a).mul(&eps), Rational::from(-1));
        e
    }
}

/// Linear extension of [`act`] over a group-ring element.
pub fn act_ring(p: &HomogPoly, e: &GroupRingElem) -> HomogPoly {
    let mut out = HomogPoly::zero(p.degree());
    for (g, c) in e.iter() {
        out = out.add(&act(p, g).scale(c));
    }
    out
}

/// Representation matrix of a group-ring element on the degree-(k-2)
/// space: column `n` holds the image coefficients of `X^n Y^{k-2-n}`.
pub fn representation_matrix(e: &GroupRingElem, k: u32) -> RationalMatrix {
    let w = (k - 2) as usize;
    let dim = w + 1;
    let mut m = RationalMatrix::zero(dim, dim);
    for n in 0..dim {
        let img = act_ring(&HomogPoly::monomial(w, n), e);
        for i in 0..dim {
            m.set(i, n, img.coeff(i).clone());
        }
    }
    m
}

fn delta_odd(j: u32) -> i64 {
    (j % 2).into()
}

fn delta_even(j: u32) -> i64 {
    (1 - j % 2).into()
}

/// The `(k-2) x (k-1)` integer matrix of binomial coefficients whose rank
/// counts the independent imaginary parts; even and odd weight use the two
/// parity-swapped variants.
pub fn build_mk(k: u32) -> RationalMatrix {
    assert!(k >= 2);
    let rows = (k - 2) as usize;
    let cols = (k - 1) as usize;
    let mut m = RationalMatrix::zero(rows, cols);
    for j in 1..=rows as u32 {
        for r in 1..=cols as u32 {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            let not_diag = if j == k - r { 0 } else { 1 };
            let (d1, d2) = if k % 2 == 0 {
                (delta_odd(j), delta_even(j))
            } else {
                (delta_even(j), delta_odd(j))
            };
            let val = BigInt::from(sign)
                * (BigInt::from(not_diag * d1) * binomial((k - j - 1) as u64, (r - 1) as u64)
                    + BigInt::from(d2) * binomial((k - j - 1) as u64, (k - r - 1) as u64));
            m.set((j - 1) as usize, (r - 1) as usize, Rational::from(&val));
        }
    }
    m
}

/// Dimension of the image of the depth-2 comparison element on the
/// degree-(k-2) space; equals the rank of [`build_mk`].
pub fn im_delta_dim(k: u32) -> usize {
    assert!(k >= 3);
    representation_matrix(&GroupRingElem::delta_k(k), k).rank()
}

/// `c_{m,n} = 4^{n-m} n! (w-m)! (1 - 2^{m-n-1}) B_{n+1-m} / (n+1-m)!`.
pub fn c_coeff(w: u32, m: u32, n: u32) -> Result<Rational> {
    if m == 0 || n == 0 || m >= w || n >= w {
        return Err(Error::Range(format!("c_coeff needs 0 < m, n < w; got w={w} m={m} n={n}")));
    }
    if n + 1 < m {
        return Err(Error::Range(format!("c_coeff needs n+1-m >= 0; got w={w} m={m} n={n}")));
    }
    let idx = (n + 1 - m) as usize;
    let value = Rational::from(4).pow(n as i64 - m as i64)
        * Rational::from(&factorial(n as u64))
        * Rational::from(&factorial((w - m) as u64))
        * (Rational::one() - Rational::pow2(m as i64 - n as i64 - 1))
        * bernoulli(idx)
        / Rational::from(&factorial(idx as u64));
    Ok(value)
}

/// `a_{m,n} = c_{m,n} + (-1)^n c_{m,w-n}`.
pub fn a_coeff(w: u32, m: u32, n: u32) -> Result<Rational> {
    let first = c_coeff(w, m, n)?;
    let second = c_coeff(w, m, w - n)?;
    Ok(if n % 2 == 0 { first + second } else { first - second })
}

/// Normalized period `r_m` of the weight-`w` kernel form indexed by `n`:
/// `(-1)^{m+n} 4^{(w-m)-n} / w! * (a_{m,n} if m < n else a_{n,m})`,
/// on the domain `w-m > n > 0`, `0 < m < w`, `m + n` odd.
pub fn r_period(w: u32, n: u32, m: u32) -> Result<Rational> {
    if (m + n) % 2 == 0 {
        return Err(Error::Parity(format!("r_period needs m+n odd; got m={m} n={n}")));
    }
    if m == 0 || m >= w || n == 0 || w - m <= n {
        return Err(Error::Range(format!("r_period domain violated: w={w} n={n} m={m}")));
    }
    let a = if m < n { a_coeff(w, m, n)? } else { a_coeff(w, n, m)? };
    // (-1)^{m+n} = -1 on the odd-parity domain.
    Ok(-(Rational::from(4).pow((w - m) as i64 - n as i64) * a)
        / Rational::from(&factorial(w as u64)))
}

/// The `[w/4] x [w/4]` period matrix `(a_{2j,2i-1} [i>j] + a_{2i-1,2j} [j>=i])`.
pub fn build_atilde(w: u32) -> Result<RationalMatrix> {
    if w % 2 != 0 || w < 6 {
        return Err(Error::Range(format!("build_atilde needs even w >= 6, got {w}")));
    }
    let d = (w / 4) as usize;
    let mut m = RationalMatrix::zero(d, d);
    for i in 1..=d as u32 {
        for j in 1..=d as u32 {
            let v = if i > j {
                a_coeff(w, 2 * j, 2 * i - 1)?
            } else {
                a_coeff(w, 2 * i - 1, 2 * j)?
            };
            m.set((i - 1) as usize, (j - 1) as usize, v);
        }
    }
    Ok(m)
}

/// Outcome of the determinant valuation check for one even weight.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DetOrd2Report {
    pub w: u32,
    pub det: Rational,
    pub nonzero: bool,
    pub ord2: String,
    pub ord2_formula: i64,
    pub matches: bool,
}

/// Computes `det` of the period matrix exactly, asserts it is nonzero,
/// and compares its 2-adic valuation against the closed form
/// `sum_i ord2((2i)!(w-2i)!) - 2[w/4] + [w = 0 mod 4]`.
pub fn check_det_ord2(w: u32) -> Result<DetOrd2Report> {
    let matrix = build_atilde(w)?;
    let det = matrix.det()?;
    let d = (w / 4) as i64;
    let mut formula = -2 * d + i64::from(w % 4 == 0);
    for i in 1..=w / 4 {
        let f = Rational::from(&factorial(2 * i as u64))
            * Rational::from(&factorial((w - 2 * i) as u64));
        match f.ord2() {
            Ord2::Finite(v) => formula += v,
            Ord2::PlusInfinity => unreachable!("factorials are nonzero"),
        }
    }
    let ord = det.ord2();
    let matches = ord == Ord2::Finite(formula);
    Ok(DetOrd2Report {
        w,
        nonzero: !det.is_zero(),
        ord2: ord.to_string(),
        ord2_formula: formula,
        matches,
        det,
    })
}

/// Exact rational basis of the kernel of the kernel-element
/// representation on the degree-(k-2) space.
pub fn delta_tilde_kernel_basis(k: u32) -> Result<Vec<Vec<Rational>>> {
    if k % 2 != 0 || k < 6 {
        return Err(Error::Range(format!(
            "delta_tilde kernel needs even k >= 6, got {k}"
        )));
    }
    Ok(representation_matrix(&GroupRingElem::delta_tilde(), k).kernel())
}

/// Kernel dimension of the representation of the kernel element on the
/// degree-(k-2) space; the closed form is `[(k-2)/4]`.
pub fn delta_tilde_kernel_dim(k: u32) -> Result<usize> {
    Ok(delta_tilde_kernel_basis(k)?.len())
}

/// Exact rank of the matrix whose rows are the imaginary parts of the
/// depth-2 series of total weight `k`, with columns indexed by pairs
/// (q-power, generator). Generators are treated as algebraically
/// independent formal coordinates.
pub fn im_space_rank_bruteforce(k: u32, trunc: usize) -> usize {
    assert!(k >= 3);
    let series: Vec<QSeries> = (1..k)
        .map(|r| crate::eisenstein::eis_h2(r, k - r, trunc).imag())
        .collect();
    // Collect every generator that appears.
    let mut gens = std::collections::BTreeSet::new();
    for s in &series {
        for n in 1..=trunc {
            for g in s.coeff(n).generators() {
                gens.insert(*g);
            }
        }
    }
    let gens: Vec<_> = gens.into_iter().collect();
    let cols = gens.len() * trunc;
    let mut rows = Vec::with_capacity(series.len());
    for s in &series {
        let mut row = Vec::with_capacity(cols);
        for n in 1..=trunc {
            let c = s.coeff(n);
            for g in &gens {
                let v = c.coeff(*g);
                debug_assert!(v.is_real(), "imaginary parts are real forms");
                row.push(v.re);
            }
        }
        rows.push(row);
    }
    RationalMatrix::from_rows(rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn act_examples() {
        let w = 2;
        let x2 = HomogPoly::monomial(w, 2);
        assert_eq!(act(&x2, &GL2Mat::identity()), x2);
        // X^2 | eps = Y^2.
        assert_eq!(act(&x2, &GL2Mat::epsilon()), HomogPoly::monomial(w, 0));
        // (XY) | U = P(X-Y, X) = X^2 - XY.
        let xy = HomogPoly::monomial(w, 1);
        assert_eq!(
            act(&xy, &GL2Mat::u()),
            HomogPoly::new(w, vec![r(0), r(-1), r(1)])
        );
    }

    #[test]
    fn action_is_right_multiplicative() {
        let p = HomogPoly::new(3, vec![r(1), r(-2), r(0), r(5)]);
        for (g1, g2) in [
            (GL2Mat::u(), GL2Mat::epsilon()),
            (GL2Mat::delta(), GL2Mat::t()),
            (GL2Mat::u(), GL2Mat::u()),
        ] {
            let seq = act(&act(&p, &g1), &g2);
            let prod = act(&p, &g1.mul(&g2));
            assert_eq!(seq, prod);
        }
    }

    #[test]
    fn generator_relations() {
        let eps = GL2Mat::epsilon();
        let u = GL2Mat::u();
        let delta = GL2Mat::delta();
        let j = GL2Mat::j();
        // eps U^2 = J U eps
        assert_eq!(eps.mul(&u).mul(&u), j.mul(&u).mul(&eps));
        // U^3 = J
        assert_eq!(u.mul(&u).mul(&u), j);
        // U eps delta = T
        assert_eq!(u.mul(&eps).mul(&delta), GL2Mat::t());
    }

    #[test]
    fn even_projector_and_j_action() {
        let p = HomogPoly::new(4, vec![r(1), r(2), r(3), r(4), r(5)]);
        let even = act_ring(&p, &GroupRingElem::even_projector());
        assert_eq!(even, p.even_part());
        assert_eq!(even.coeffs(), &[r(1), r(0), r(3), r(0), r(5)]);
        // P | J = (-1)^k P on degree k-2.
        for k in [4u32, 5] {
            let w = (k - 2) as usize;
            let q = HomogPoly::new(w, (0..=w as i64).map(r).collect());
            let img = act(&q, &GL2Mat::j());
            let expect = if k % 2 == 0 { q.clone() } else { q.scale(&r(-1)) };
            assert_eq!(img, expect);
        }
    }

    #[test]
    fn delta_k_action_matches_representation_matrix() {
        let k = 6;
        let p = HomogPoly::new(4, vec![r(0), r(0), r(1), r(0), r(0)]); // X^2 Y^2
        let direct = act_ring(&p, &GroupRingElem::delta_k(k));
        let m = representation_matrix(&GroupRingElem::delta_k(k), k);
        let col: Vec<Rational> = (0..5).map(|i| m.get(i, 2).clone()).collect();
        assert_eq!(direct.coeffs(), &col[..]);
    }

    #[test]
    fn mk_is_the_representation_matrix_without_its_zero_row() {
        for k in 3..=9u32 {
            let mk = build_mk(k);
            let rep = representation_matrix(&GroupRingElem::delta_k(k), k);
            for j in 1..=(k - 2) as usize {
                for i in 1..=(k - 1) as usize {
                    assert_eq!(
                        mk.get(j - 1, i - 1),
                        rep.get(i - 1, j - 1),
                        "k={k} j={j} i={i}"
                    );
                }
            }
            for i in 0..(k - 1) as usize {
                assert!(rep.get(i, (k - 2) as usize).is_zero(), "k={k} row {i}");
            }
        }
    }

    #[test]
    fn mk_rank_examples() {
        assert_eq!(build_mk(6).rank(), 3);
        assert_eq!(build_mk(7).rank(), 5);
        assert_eq!(build_mk(4).rank(), 2);
    }

    #[test]
    fn im_delta_dim_examples() {
        assert_eq!(im_delta_dim(6), 3);
        assert_eq!(im_delta_dim(9), 7);
        assert_eq!(im_delta_dim(12), 8);
    }

    #[test]
    fn c_coeff_values() {
        assert_eq!(c_coeff(6, 1, 2).unwrap(), r(60));
        assert_eq!(c_coeff(6, 1, 4).unwrap(), r(-240));
        // Vanishes when n+1-m is odd >= 3.
        assert_eq!(c_coeff(8, 1, 3).unwrap(), Rational::zero());
        assert!(c_coeff(6, 0, 2).is_err());
    }

    #[test]
    fn a_coeff_values() {
        assert_eq!(a_coeff(6, 1, 2).unwrap(), r(-180));
        // Self-paired index doubles: w = 0 mod 4, n = w/2.
        let w = 8;
        let direct = a_coeff(w, 1, 4).unwrap();
        assert_eq!(direct, c_coeff(w, 1, 4).unwrap() * r(2));
        // Odd n flips the sign of the reflected term.
        let v = a_coeff(8, 2, 3).unwrap();
        assert_eq!(v, c_coeff(8, 2, 3).unwrap() - c_coeff(8, 2, 5).unwrap());
    }

    #[test]
    fn r_period_values_and_symmetry() {
        assert_eq!(r_period(6, 1, 2).unwrap(), r(16));
        assert!(r_period(6, 1, 3).is_err());
        for w in (6..=30u32).step_by(2) {
            for n in 1..w {
                for m in 1..w {
                    if (m + n) % 2 == 0 {
                        continue;
                    }
                    let lhs = r_period(w, n, m);
                    let rhs = r_period(w, m, n);
                    if let (Ok(a), Ok(b)) = (lhs, rhs) {
                        assert_eq!(a, b, "w={w} n={n} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn atilde_shapes_and_values() {
        let a6 = build_atilde(6).unwrap();
        assert_eq!((a6.rows(), a6.cols()), (1, 1));
        assert_eq!(a6.get(0, 0), &r(-180));
        let a10 = build_atilde(10).unwrap();
        assert_eq!((a10.rows(), a10.cols()), (2, 2));
        assert_eq!(a10.get(0, 0), &a_coeff(10, 1, 2).unwrap());
        assert_eq!(a10.get(0, 1), &a_coeff(10, 1, 4).unwrap());
        assert_eq!(a10.get(1, 0), &a_coeff(10, 2, 3).unwrap());
        assert_eq!(a10.get(1, 1), &a_coeff(10, 3, 4).unwrap());
        assert_eq!(build_atilde(14).unwrap().rows(), 3);
        assert!(build_atilde(7).is_err());
        assert!(build_atilde(4).is_err());
    }

    #[test]
    fn det_ord2_examples() {
        let rep6 = check_det_ord2(6).unwrap();
        assert_eq!(rep6.det, r(-180));
        assert_eq!(rep6.ord2, "2");
        assert_eq!(rep6.ord2_formula, 2);
        assert!(rep6.matches && rep6.nonzero);
        assert_eq!(check_det_ord2(8).unwrap().ord2_formula, 8);
        assert_eq!(check_det_ord2(12).unwrap().ord2_formula, 22);
        assert!(check_det_ord2(12).unwrap().matches);
    }

    #[test]
    fn delta_tilde_kernel_examples() {
        assert_eq!(delta_tilde_kernel_dim(6).unwrap(), 1);
        assert_eq!(delta_tilde_kernel_dim(8).unwrap(), 1);
        assert_eq!(delta_tilde_kernel_dim(12).unwrap(), 2);
        assert!(delta_tilde_kernel_dim(7).is_err());
    }

    #[test]
    fn im_space_rank_small() {
        assert_eq!(im_space_rank_bruteforce(6, 40), 3);
        assert_eq!(im_space_rank_bruteforce(7, 40), 5);
    }
}
