//! Exact face-count calculus: f-, h- and γ-vectors, the face recursion for
//! `Ind(G_m)`, Delannoy numbers, and real-rootedness certificates by Sturm sequences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::families::build_gm;

/// Dense integer polynomial, constant term first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `t`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the (positive) content.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Pseudo-remainder scaled by a positive factor, so signs match the true remainder.
    pub fn signed_pseudo_remainder(&self, divisor: &Self) -> Self {
        let db = divisor.degree().expect("nonzero divisor");
        let lc = divisor.leading();
        let mut r = self.clone();
        let lc_abs = lc.abs();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            // r := |lc| r - sign(lc) lead(r) t^(dr-db) divisor
            let lead = r.leading();
            let mut shifted = vec![BigInt::zero(); dr - db];
            shifted.extend(divisor.coeffs.iter().map(|c| c * &lead));
            let shifted = Self::new(shifted);
            r = if lc.is_positive() {
                &r.scale(&lc_abs) - &shifted
            } else {
                &r.scale(&lc_abs) + &shifted
            };
        }
        r
    }

    pub fn is_palindromic(&self, d: usize) -> bool {
        (0..=d).all(|i| self.coeff(i) == self.coeff(d - i))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Face numbers `f_{-1}, ..., f_{dim}` as exact integers.
pub fn f_vector(d: &SimplicialComplex) -> Result<Vec<BigInt>> {
    Ok(d.f_vector()?.into_iter().map(BigInt::from).collect())
}

/// `f_{-1}, ..., f_{m-1}` of `Ind(G_m)` from the closed forms for `f_0`, `f_1` and the
/// four-term recursion in `m`.
pub fn f_recursive(m: usize) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be at least 1".into()));
    }
    // rows[k][j] = f_{j-1}(k)
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..=m {
        let mut row = vec![BigInt::zero(); k + 1];
        row[0] = BigInt::one();
        row[1] = BigInt::from(3 * k - 1);
        if k >= 2 {
            let k = k as i64;
            row[2] = BigInt::from((9 * k * k - 19 * k + 12) / 2);
        }
        let at = |r: &Vec<BigInt>, i: isize| -> BigInt {
            usize::try_from(i + 1)
                .ok()
                .and_then(|j| r.get(j).cloned())
                .unwrap_or_default()
        };
        if k >= 3 {
            for i in 2..k as isize {
                let (p1, p2) = (&rows[k - 1], &rows[k - 2]);
                row[(i + 1) as usize] =
                    BigInt::from(2) * at(p1, i - 1) + at(p1, i) + at(p2, i - 2) + at(p2, i - 1);
            }
        }
        rows.push(row);
    }
    Ok(rows.swap_remove(m))
}

/// `h_k = Σ_{i ≤ k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`, for `f = (f_{-1}, ..., f_{d-1})`.
pub fn h_from_f(f: &[BigInt], d: usize) -> Result<Vec<BigInt>> {
    if f.len() != d + 1 {
        return Err(Error::InvalidInput(format!(
            "f has {} entries; expected {}",
            f.len(),
            d + 1
        )));
    }
    Ok((0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                let term = binomial(d - i, k - i) * &f[i];
                if (k - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect())
}

/// Inverse of [`h_from_f`]: `f_{j-1} = Σ_{i ≤ j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[BigInt]) -> Vec<BigInt> {
    let d = h.len().saturating_sub(1);
    (0..h.len())
        .map(|j| (0..=j).map(|i| binomial(d - i, j - i) * &h[i]).sum())
        .collect()
}

/// γ-vector of a palindromic h-vector: `h(t) = Σ γ_i t^i (1+t)^{d-2i}`.
pub fn gamma_from_h(h: &[BigInt]) -> Result<Vec<BigInt>> {
    let d = h
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidInput("empty h-vector".into()))?;
    let mut rest = Polynomial::new(h.to_vec());
    if !rest.is_palindromic(d) {
        return Err(Error::Domain("h-vector is not palindromic".into()));
    }
    let one_plus_t = Polynomial::from_i64(&[1, 1]);
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest.coeff(i);
        let term = (&Polynomial::t().pow(i) * &one_plus_t.pow(d - 2 * i)).scale(&g);
        rest = &rest - &term;
        gamma.push(g);
    }
    debug_assert!(rest.is_zero());
    Ok(gamma)
}

/// f-, h- and (when h is palindromic) γ-vectors of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FhgVectors {
    #[serde(serialize_with = "ser_ints")]
    pub f: Vec<BigInt>,
    #[serde(serialize_with = "ser_ints")]
    pub h: Vec<BigInt>,
    #[serde(serialize_with = "ser_opt_ints")]
    pub gamma: Option<Vec<BigInt>>,
}

fn ser_ints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

fn ser_opt_ints<S: Serializer>(
    v: &Option<Vec<BigInt>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_ints(v, s),
        None => s.serialize_none(),
    }
}

pub fn vectors(d: &SimplicialComplex) -> Result<FhgVectors> {
    if d.is_void() {
        return Err(Error::Domain("the void complex has no f-vector".into()));
    }
    let f = f_vector(d)?;
    let h = h_from_f(&f, f.len() - 1)?;
    let gamma = gamma_from_h(&h).ok();
    Ok(FhgVectors { f, h, gamma })
}

/// Index of the first negative γ entry, if any.
pub fn first_negative(gamma: &[BigInt]) -> Option<usize> {
    gamma.iter().position(Signed::is_negative)
}

/// Delannoy number `D(a, b)`: lattice paths from `(0,0)` to `(a,b)` with steps
/// `(1,0)`, `(0,1)` and `(1,1)`, by dynamic programming over the grid.
pub fn delannoy_big_d(a: usize, b: usize) -> BigInt {
    let mut row = vec![BigInt::one(); b + 1];
    for _ in 0..a {
        let mut next = vec![BigInt::one(); b + 1];
        for j in 1..=b {
            next[j] = &next[j - 1] + &row[j] + &row[j - 1];
        }
        row = next;
    }
    row.swap_remove(b)
}

/// `d(m, k)` by the recursion `d(m,k) = d(m-1,k) + d(m-1,k-1) + d(m-2,k-1)` with
/// `d(m,0) = d(m,m) = 1`.
pub fn delannoy_small_d(m: usize, k: usize) -> Result<BigInt> {
    if k > m {
        return Err(Error::InvalidInput(format!(
            "need 0 ≤ k ≤ m, got m = {m}, k = {k}"
        )));
    }
    Ok(delannoy_rows(m).swap_remove(m).swap_remove(k))
}

fn delannoy_rows(m: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let row = (0..=n)
            .map(|k| {
                if k == 0 || k == n {
                    return BigInt::one();
                }
                let get = |r: usize, j: usize| rows[r].get(j).cloned().unwrap_or_default();
                get(n - 1, k)
                    + get(n - 1, k - 1)
                    + if n >= 2 {
                        get(n - 2, k - 1)
                    } else {
                        BigInt::zero()
                    }
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `d_m(t) = Σ_k d(m,k) t^k`.
pub fn delannoy_poly(m: usize) -> Polynomial {
    Polynomial::new(delannoy_rows(m).swap_remove(m))
}

/// h-polynomial of `Ind(G_m)` from brute-force face counts.
pub fn gm_h_polynomial(m: usize) -> Result<Polynomial> {
    let f = f_vector(&SimplicialComplex::independence_complex(&build_gm(m)?))?;
    Ok(Polynomial::new(h_from_f(&f, m)?))
}

/// Check `h(m,t) = (t+1) h(m-1,t) + t h(m-2,t)` on brute-force h-polynomials.
pub fn h_recurrence_check(m: usize) -> Result<bool> {
    if m < 3 {
        return Err(Error::InvalidInput("the recurrence starts at m = 3".into()));
    }
    let (h, h1, h2) = (
        gm_h_polynomial(m)?,
        gm_h_polynomial(m - 1)?,
        gm_h_polynomial(m - 2)?,
    );
    let rhs = &(&Polynomial::from_i64(&[1, 1]) * &h1) + &(&Polynomial::t() * &h2);
    Ok(h == rhs)
}

/// f- and h-polynomials of a join are the products of those of the factors.
pub fn join_multiplicativity_check(d1: &SimplicialComplex, d2: &SimplicialComplex) -> Result<bool> {
    let j = d1.join(d2)?;
    let fp = |d: &SimplicialComplex| -> Result<Polynomial> { Ok(Polynomial::new(f_vector(d)?)) };
    let hp = |d: &SimplicialComplex| -> Result<Polynomial> {
        let f = f_vector(d)?;
        Ok(Polynomial::new(h_from_f(&f, f.len() - 1)?))
    };
    Ok(fp(&j)? == &fp(d1)? * &fp(d2)? && hp(&j)? == &hp(d1)? * &hp(d2)?)
}

/// Sturm sequence of `p`: `p, p', -rem, ...`, each term divided by its positive content.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone()];
    let d = p.derivative().primitive();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = seq[n - 2].signed_pseudo_remainder(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive());
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let nonzero: Vec<i8> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn changes_at_neg_inf(seq: &[Polynomial]) -> usize {
    sign_changes(seq.iter().map(|q| {
        let s = sign_of(&q.leading());
        if q.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

fn changes_at_pos_inf(seq: &[Polynomial]) -> usize {
    sign_changes(seq.iter().map(|q| sign_of(&q.leading())))
}

fn changes_at(seq: &[Polynomial], x: &BigRational) -> usize {
    sign_changes(seq.iter().map(|q| {
        let v = q.eval_rational(x);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }))
}

/// Exact certificate that all roots of a polynomial are real and negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCertificate {
    pub degree: usize,
    /// Real roots counted with multiplicity, via Sturm counts along the gcd chain.
    pub real_roots: usize,
    /// Roots in `(-∞, 0)` counted with multiplicity.
    pub negative_roots: usize,
    pub sturm_sequence: Vec<Polynomial>,
    /// Disjoint rational intervals `(lo, hi]`, each holding exactly one distinct negative root.
    pub isolating_intervals: Vec<(String, String)>,
    pub certified: bool,
}

/// Certify that every root of `p` is a negative real number.
pub fn certify_negative_real_roots(p: &Polynomial) -> Result<RootCertificate> {
    let degree = p
        .degree()
        .ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    if !p.leading().is_positive() {
        return Err(Error::InvalidInput(
            "leading coefficient must be positive".into(),
        ));
    }
    let zero = BigRational::zero();
    let mut real_roots = 0;
    let mut negative_roots = 0;
    let mut g = p.clone();
    while g.degree().is_some_and(|d| d > 0) {
        let seq = sturm_sequence(&g);
        real_roots += changes_at_neg_inf(&seq) - changes_at_pos_inf(&seq);
        if !p.coeff(0).is_zero() {
            negative_roots += changes_at_neg_inf(&seq) - changes_at(&seq, &zero);
        }
        g = poly_gcd(&g, &g.derivative());
    }
    let seq = sturm_sequence(p);
    let intervals = if p.coeff(0).is_zero() {
        Vec::new()
    } else {
        isolate_negative_roots(p, &BigRational::zero())
    };
    Ok(RootCertificate {
        degree,
        real_roots,
        negative_roots,
        sturm_sequence: seq,
        isolating_intervals: intervals
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        certified: real_roots == degree && negative_roots == degree,
    })
}

/// Primitive gcd over the integers, by primitive pseudo-remainder sequences.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut x, mut y) = (a.primitive(), b.primitive());
    while !y.is_zero() {
        let r = x.signed_pseudo_remainder(&y).primitive();
        x = y;
        y = r;
    }
    if x.leading().is_negative() {
        -&x
    } else {
        x
    }
}

/// Square-free part `p / gcd(p, p')`, computed over the rationals and made primitive.
fn square_free(p: &Polynomial) -> Polynomial {
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return p.primitive();
    }
    poly_div_exact(p, &g).primitive()
}

fn poly_div_exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    // Long division over Q; the quotient is scaled to integers afterwards.
    let db = b.degree().expect("nonzero divisor");
    let lb = BigRational::from_integer(b.leading());
    let mut r: Vec<BigRational> = a
        .coeffs
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    let da = a.degree().unwrap_or(0);
    let mut q = vec![BigRational::zero(); da.saturating_sub(db) + 1];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &lb;
        for (j, bc) in b.coeffs.iter().enumerate() {
            r[k + j] -= &c * BigRational::from_integer(bc.clone());
        }
        q[k] = c;
    }
    let den = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    Polynomial::new(
        q.into_iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

/// Disjoint intervals `(lo, hi]` with `hi ≤ upper`, each containing one distinct root below `upper`.
pub fn isolate_negative_roots(
    p: &Polynomial,
    upper: &BigRational,
) -> Vec<(BigRational, BigRational)> {
    let sf = square_free(p);
    let seq = sturm_sequence(&sf);
    let n = sf.coeffs.len();
    if n < 2 {
        return Vec::new();
    }
    // Cauchy bound on root magnitudes.
    let lead = BigRational::from_integer(sf.leading().abs());
    let bound = sf.coeffs[..n - 1]
        .iter()
        .map(|c| BigRational::from_integer(c.abs()) / &lead)
        .fold(BigRational::zero(), |m, x| if x > m { x } else { m })
        + BigRational::one();
    let count = |lo: &BigRational, hi: &BigRational| changes_at(&seq, lo) - changes_at(&seq, hi);
    let mut out = Vec::new();
    let mut stack = vec![(-bound, upper.clone())];
    while let Some((lo, hi)) = stack.pop() {
        match count(&lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let two = BigRational::from_integer(BigInt::from(2));
                let mut mid = (&lo + &hi) / &two;
                let mut k = 3;
                while sf.eval_rational(&mid).is_zero() {
                    mid = &lo + (&hi - &lo) / BigRational::from_integer(BigInt::from(k));
                    k += 1;
                }
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort();
    out
}

/// Refine isolating intervals until narrower than `width` and return their midpoints.
pub fn refine_roots(p: &Polynomial, width: f64) -> Vec<f64> {
    let sf = square_free(p);
    let two = BigRational::from_integer(BigInt::from(2));
    let w = BigRational::from_float(width)
        .unwrap_or_else(|| BigRational::new(BigInt::one(), BigInt::from(1u64 << 40)));
    isolate_negative_roots(p, &BigRational::zero())
        .into_iter()
        .map(|(mut lo, mut hi)| {
            // The root lies in (lo, hi]; bisect on sign changes.
            if sf.eval_rational(&hi).is_zero() {
                return hi.to_f64().unwrap_or(f64::NAN);
            }
            let sign_hi = sf.eval_rational(&hi).is_positive();
            while &hi - &lo > w {
                let mid = (&lo + &hi) / &two;
                let v = sf.eval_rational(&mid);
                if v.is_zero() {
                    return mid.to_f64().unwrap_or(f64::NAN);
                }
                if v.is_positive() == sign_hi {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            ((lo + hi) / &two).to_f64().unwrap_or(f64::NAN)
        })
        .collect()
}

/// Floating-point roots from the companion matrix eigenvalues, as `(re, im)` sorted by real part.
pub fn companion_roots(p: &Polynomial) -> Vec<(f64, f64)> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    let lc = p.leading().to_f64().unwrap_or(f64::NAN);
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -p.coeff(i).to_f64().unwrap_or(f64::NAN) / lc;
    }
    let mut roots: Vec<(f64, f64)> = m
        .complex_eigenvalues()
        .iter()
        .map(|z| (z.re, z.im))
        .collect();
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    roots
}

/// Largest disagreement between exact (refined) roots and companion-matrix roots,
/// measured as `|x - y| / max(1, |y|)`; `None` when the root counts differ.
pub fn float_root_discrepancy(p: &Polynomial) -> Option<f64> {
    let exact = refine_roots(p, 1e-14);
    let float = companion_roots(p);
    if exact.len() != float.len() {
        return None;
    }
    Some(
        exact
            .iter()
            .zip(&float)
            .map(|(x, (re, im))| ((x - re).abs() + im.abs()) / x.abs().max(1.0))
            .fold(0.0, f64::max),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn h_vectors_of_small_spheres() {
        assert_eq!(h_from_f(&ints(&[1, 5, 5]), 2).unwrap(), ints(&[1, 3, 1]));
        assert_eq!(h_from_f(&ints(&[1, 2]), 1).unwrap(), ints(&[1, 1]));
        assert_eq!(h_from_f(&ints(&[1, 6, 6]), 2).unwrap(), ints(&[1, 4, 1]));
        assert!(h_from_f(&ints(&[1, 6, 6]), 3).is_err());
        assert_eq!(f_from_h(&ints(&[1, 3, 1])), ints(&[1, 5, 5]));
    }

    #[test]
    fn gamma_vectors() {
        assert_eq!(gamma_from_h(&ints(&[1, 3, 1])).unwrap(), ints(&[1, 1]));
        assert_eq!(gamma_from_h(&ints(&[1, 5, 5, 1])).unwrap(), ints(&[1, 2]));
        assert_eq!(gamma_from_h(&ints(&[1, 1])).unwrap(), ints(&[1]));
        assert!(matches!(
            gamma_from_h(&ints(&[1, 2, 3])),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            first_negative(&gamma_from_h(&ints(&[1, 1, 1])).unwrap()),
            Some(1)
        );
    }

    #[test]
    fn delannoy_numbers() {
        assert_eq!(delannoy_big_d(3, 1), BigInt::from(7));
        assert_eq!(delannoy_big_d(2, 2), BigInt::from(13));
        assert_eq!(delannoy_poly(4), Polynomial::from_i64(&[1, 7, 13, 7, 1]));
        assert_eq!(delannoy_poly(2), Polynomial::from_i64(&[1, 3, 1]));
        assert!(delannoy_small_d(2, 3).is_err());
        for m in 0..=12 {
            for k in 0..=m {
                assert_eq!(delannoy_small_d(m, k).unwrap(), delannoy_big_d(m - k, k));
            }
        }
    }

    #[test]
    fn recurrence_by_hand_at_three() {
        let lhs = &(&Polynomial::from_i64(&[1, 1]) * &Polynomial::from_i64(&[1, 3, 1]))
            + &(&Polynomial::t() * &Polynomial::from_i64(&[1, 1]));
        assert_eq!(lhs, Polynomial::from_i64(&[1, 5, 5, 1]));
        assert!(h_recurrence_check(3).unwrap());
    }

    #[test]
    fn sturm_certificates() {
        let p = Polynomial::from_i64(&[1, 4, 1]);
        let c = certify_negative_real_roots(&p).unwrap();
        assert!(c.certified);
        assert_eq!(c.isolating_intervals.len(), 2);
        let q = Polynomial::from_i64(&[1, 1, 1]);
        assert!(!certify_negative_real_roots(&q).unwrap().certified);
        assert!(certify_negative_real_roots(&Polynomial::zero()).is_err());
        // (t+1)^2 (t+2): repeated root counted twice
        let r = &Polynomial::from_i64(&[1, 1]).pow(2) * &Polynomial::from_i64(&[2, 1]);
        let c = certify_negative_real_roots(&r).unwrap();
        assert!(c.certified);
        assert_eq!(c.real_roots, 3);
        // t (t+1): a zero root is not negative
        assert!(
            !certify_negative_real_roots(&Polynomial::from_i64(&[0, 1, 1]))
                .unwrap()
                .certified
        );
        // (t-1)(t+2): real but not negative
        let c = certify_negative_real_roots(&Polynomial::from_i64(&[-2, 1, 1])).unwrap();
        assert_eq!((c.real_roots, c.negative_roots, c.certified), (2, 1, false));
    }

    #[test]
    fn companion_roots_match_exact_ones() {
        let p = Polynomial::from_i64(&[1, 4, 1]);
        let roots = refine_roots(&p, 1e-12);
        assert!((roots[0] + 2.0 + 3f64.sqrt()).abs() < 1e-9);
        assert!(float_root_discrepancy(&p).unwrap() < 1e-8);
    }

    #[test]
    fn join_of_small_spheres() {
        use crate::graph::Graph;
        let g1 = Graph::complete(2)
            .unwrap()
            .relabeled(|_, l| format!("x{l}"))
            .unwrap();
        let g2 = Graph::cycle(5).unwrap();
        let (a, b) = (
            SimplicialComplex::independence_complex(&g1),
            SimplicialComplex::independence_complex(&g2),
        );
        assert!(join_multiplicativity_check(&a, &b).unwrap());
        assert!(join_multiplicativity_check(&a, &SimplicialComplex::empty_complex()).unwrap());
    }
}
