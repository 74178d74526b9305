//! Dense univariate polynomial arithmetic and complete factorization over
//! `Z_p`.
//!
//! Coefficients are stored ascending (index = degree) and always reduced mod
//! `p`; the zero polynomial is the empty vector. Factorization runs the
//! classic square-free / distinct-degree / equal-degree pipeline. The one
//! randomized step (equal-degree splitting) draws from a counter-based
//! stream seeded from the input polynomial's coefficients — or from a caller
//! seed — so canonical factorizations are byte-reproducible.
//!
//! Factor lists are sorted by degree, then by the ascending coefficient
//! vector compared lexicographically from the constant term, which makes
//! quoted factor lists comparable after sorting both sides.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{El, FieldContext};

pub mod text;

/// Dense polynomial over `Z_p`: ascending coefficients, trimmed, `p`-reduced.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DensePolynomial {
    coeffs: Vec<u8>,
}

impl DensePolynomial {
    /// Builds from ascending coefficients, reducing mod `p` and trimming.
    pub fn from_coeffs(coeffs: &[u8], p: u32) -> Self {
        let mut c: Vec<u8> = coeffs.iter().map(|&v| (v as u32 % p) as u8).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        DensePolynomial { coeffs: c }
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: u32, p: u32) -> Self {
        Self::from_coeffs(&[(c % p) as u8], p)
    }

    /// The monomial `x`.
    pub fn x(p: u32) -> Self {
        Self::from_coeffs(&[0, 1], p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0) as u32
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, rhs: &Self, p: u32) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u8; len];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0) as u32;
            let b = rhs.coeffs.get(i).copied().unwrap_or(0) as u32;
            *slot = ((a + b) % p) as u8;
        }
        Self::from_coeffs(&out, p)
    }

    pub fn neg(&self, p: u32) -> Self {
        let out: Vec<u8> = self
            .coeffs
            .iter()
            .map(|&c| ((p - c as u32) % p) as u8)
            .collect();
        Self::from_coeffs(&out, p)
    }

    pub fn sub(&self, rhs: &Self, p: u32) -> Self {
        self.add(&rhs.neg(p), p)
    }

    pub fn mul(&self, rhs: &Self, p: u32) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u32 * b as u32) % p;
            }
        }
        let bytes: Vec<u8> = out.iter().map(|&v| v as u8).collect();
        Self::from_coeffs(&bytes, p)
    }

    pub fn mul_scalar(&self, c: u32, p: u32) -> Self {
        let c = c % p;
        let out: Vec<u8> = self
            .coeffs
            .iter()
            .map(|&a| (a as u32 * c % p) as u8)
            .collect();
        Self::from_coeffs(&out, p)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, p: u32) -> Self {
        match self.leading() {
            0 | 1 => self.clone(),
            lead => self.mul_scalar(inv_mod(lead, p), p),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divmod(&self, den: &Self, p: u32) -> (Self, Self) {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let dd = den.degree().unwrap();
        if self.degree().map_or(true, |nd| nd < dd) {
            return (Self::zero(), self.clone());
        }
        let lead_inv = inv_mod(den.leading(), p);
        let mut rem: Vec<u32> = self.coeffs.iter().map(|&c| c as u32).collect();
        let mut quot = vec![0u8; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] % p;
            if c == 0 {
                continue;
            }
            let qc = c * lead_inv % p;
            quot[i - dd] = qc as u8;
            for (j, &dc) in den.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p * p - qc * dc as u32 % p) % p;
            }
        }
        (
            Self::from_coeffs(&quot, p),
            Self::from_coeffs(&rem.iter().map(|&v| v as u8).collect::<Vec<_>>(), p),
        )
    }

    pub fn rem(&self, den: &Self, p: u32) -> Self {
        self.divmod(den, p).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self, p: u32) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// Formal derivative.
    pub fn derivative(&self, p: u32) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out: Vec<u8> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (c as u32 * (i as u32 % p) % p) as u8)
            .collect();
        Self::from_coeffs(&out, p)
    }

    /// `self^k mod modulus` by square and multiply.
    pub fn pow_mod(&self, mut k: u64, modulus: &Self, p: u32) -> Self {
        let mut base = self.rem(modulus, p);
        let mut acc = Self::constant(1, p);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, p).rem(modulus, p);
            }
            base = base.mul(&base, p).rem(modulus, p);
            k >>= 1;
        }
        acc
    }

    /// Evaluates at a scalar in `Z_p`.
    pub fn eval(&self, x: u32, p: u32) -> u32 {
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c as u32) % p;
        }
        acc
    }

    /// Evaluates at an extension-field element.
    pub fn eval_in(&self, ctx: &FieldContext, x: El) -> El {
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, x), ctx.scalar(c as u32));
        }
        acc
    }

    /// Human-readable descending-degree form, e.g. `x^3+2x+4`.
    pub fn display(&self) -> String {
        text::print(self)
    }
}

/// `x^{p^k} mod f`, the `k`-fold Frobenius image of `x`.
pub fn x_frobenius_pow(k: u32, f: &DensePolynomial, p: u32) -> DensePolynomial {
    let mut g = DensePolynomial::x(p).rem(f, p);
    for _ in 0..k {
        g = g.pow_mod(p as u64, f, p);
    }
    g
}

/// Irreducibility over `Z_p`: `f` of degree `d ≥ 1` is irreducible iff
/// `x^{p^d} ≡ x (mod f)` and `gcd(x^{p^{d/r}} − x, f) = 1` for every prime
/// `r | d`.
pub fn is_irreducible(coeffs: &[u8], p: u32) -> bool {
    let f = DensePolynomial::from_coeffs(coeffs, p);
    let d = match f.degree() {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d == 1 {
        return true;
    }
    let x = DensePolynomial::x(p);
    let full = x_frobenius_pow(d as u32, &f, p);
    if full != x.rem(&f, p) {
        return false;
    }
    for r in crate::field::prime_divisors(d as u32) {
        let part = x_frobenius_pow(d as u32 / r, &f, p);
        let g = part.sub(&x, p).gcd(&f, p);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Complete factorization: a unit and monic irreducible factors with
/// multiplicities in canonical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    /// Leading unit in `[1, p)`.
    pub unit: u32,
    /// `(monic irreducible, multiplicity)` sorted by degree then by the
    /// ascending coefficient vector.
    pub factors: Vec<(DensePolynomial, usize)>,
}

impl Factorization {
    /// Re-multiplies `unit · Π factor^mult`.
    pub fn expand(&self, p: u32) -> DensePolynomial {
        let mut acc = DensePolynomial::constant(self.unit, p);
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                acc = acc.mul(f, p);
            }
        }
        acc
    }

    /// Degrees with multiplicity, ascending (mult 2 of a cubic yields 3, 3).
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                out.push(f.degree().unwrap_or(0));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Deterministic counter stream (splitmix64) for equal-degree splitting.
pub(crate) struct CounterRng {
    state: u64,
}

impl CounterRng {
    pub(crate) fn new(seed: u64) -> Self {
        CounterRng { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// Folds the input coefficients into a default stream seed, so repeated
/// factorization of the same polynomial is reproducible without a caller
/// seed.
fn derive_seed(f: &DensePolynomial, p: u32) -> u64 {
    let mut h = 0xcbf29ce484222325u64 ^ (p as u64).wrapping_mul(0x100000001b3);
    for &c in f.coeffs() {
        h ^= c as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Canonical factorization over `Z_p`. `seed` pins the equal-degree
/// splitting stream; `None` derives one from the input. Panics on zero.
pub fn factor(f: &DensePolynomial, p: u32, seed: Option<u64>) -> Factorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let unit = f.leading();
    let monic = f.monic(p);
    let mut rng = CounterRng::new(seed.unwrap_or_else(|| derive_seed(f, p)));
    let mut factors: Vec<(DensePolynomial, usize)> = Vec::new();
    for (part, mult) in square_free_parts(&monic, p) {
        for (deg, product) in distinct_degree_parts(&part, p) {
            for irred in equal_degree_split(&product, deg, p, &mut rng) {
                debug_assert!(is_irreducible(irred.coeffs(), p));
                factors.push((irred, mult));
            }
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs()))
    });
    let result = Factorization { unit, factors };
    debug_assert_eq!(&result.expand(p), f, "factorization must re-multiply");
    result
}

/// Square-free decomposition in characteristic `p`: monic square-free parts
/// with multiplicities, handling the `p`-th-power tail (`a^p = a` in `Z_p`
/// makes the root extraction a coefficient restride).
fn square_free_parts(f: &DensePolynomial, p: u32) -> Vec<(DensePolynomial, usize)> {
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return out;
    }
    let deriv = f.derivative(p);
    if deriv.is_zero() {
        // f = g(x^p); pull out the p-th root and scale multiplicities
        let root = p_th_root(f, p);
        for (g, mult) in square_free_parts(&root, p) {
            out.push((g, mult * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&deriv, p);
    let mut w = f.divmod(&c, p).0;
    let mut i = 1usize;
    while w.degree() != Some(0) {
        let y = w.gcd(&c, p);
        let z = w.divmod(&y, p).0;
        if z.degree() != Some(0) {
            out.push((z.monic(p), i));
        }
        c = c.divmod(&y, p).0;
        w = y;
        i += 1;
    }
    if c.degree() != Some(0) {
        let root = p_th_root(&c, p);
        for (g, mult) in square_free_parts(&root, p) {
            out.push((g, mult * p as usize));
        }
    }
    out
}

fn p_th_root(f: &DensePolynomial, p: u32) -> DensePolynomial {
    let coeffs: Vec<u8> = f
        .coeffs()
        .iter()
        .step_by(p as usize)
        .copied()
        .collect();
    DensePolynomial::from_coeffs(&coeffs, p)
}

/// Splits a monic square-free polynomial into `(degree, product of all
/// irreducible factors of that degree)` pairs.
fn distinct_degree_parts(f: &DensePolynomial, p: u32) -> Vec<(usize, DensePolynomial)> {
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = DensePolynomial::x(p);
    let mut h = x.rem(&g, p);
    let mut d = 0usize;
    while g.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(p as u64, &g, p);
        let split = h.sub(&x, p).gcd(&g, p);
        if split.degree() != Some(0) {
            out.push((d, split.clone()));
            g = g.divmod(&split, p).0;
            h = h.rem(&g, p);
        }
    }
    if g.degree().unwrap_or(0) > 0 {
        out.push((g.degree().unwrap(), g));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting for odd `p`.
fn equal_degree_split(
    f: &DensePolynomial,
    d: usize,
    p: u32,
    rng: &mut CounterRng,
) -> Vec<DensePolynomial> {
    let deg = f.degree().unwrap();
    if deg == d {
        return vec![f.monic(p)];
    }
    loop {
        let r = random_poly(deg, p, rng);
        if r.degree().map_or(true, |rd| rd == 0) {
            continue;
        }
        // character exponent (p^d − 1)/2 = (1 + p + … + p^{d−1})·(p − 1)/2,
        // taken as a norm chain of Frobenius steps so it never overflows
        let mut norm = r.rem(f, p);
        for _ in 1..d {
            norm = norm.pow_mod(p as u64, f, p).mul(&r, p).rem(f, p);
        }
        let t = norm
            .pow_mod(((p - 1) / 2) as u64, f, p)
            .sub(&DensePolynomial::constant(1, p), p);
        let g = t.gcd(f, p);
        let gd = g.degree().unwrap_or(0);
        if gd == 0 || gd == deg {
            continue;
        }
        let rest = f.divmod(&g, p).0;
        let mut out = equal_degree_split(&g, d, p, rng);
        out.extend(equal_degree_split(&rest, d, p, rng));
        return out;
    }
}

fn random_poly(below_degree: usize, p: u32, rng: &mut CounterRng) -> DensePolynomial {
    let coeffs: Vec<u8> = (0..below_degree)
        .map(|_| (rng.next_u64() % p as u64) as u8)
        .collect();
    DensePolynomial::from_coeffs(&coeffs, p)
}

/// Upper bound on the field size accepted by [`roots_in_extension`].
pub const ROOTS_FIELD_LIMIT: u32 = 15_625;

/// All roots of `f` in `F_{p^m}` by direct evaluation at every element.
/// Guarded to `q ≤ 5^6`; an irreducible factor of degree `d` contributes `d`
/// roots exactly when `d | m`.
pub fn roots_in_extension(f: &DensePolynomial, ctx: &FieldContext) -> Vec<El> {
    assert!(
        ctx.q() <= ROOTS_FIELD_LIMIT,
        "root search by evaluation is guarded to q ≤ {ROOTS_FIELD_LIMIT}"
    );
    ctx.elements()
        .filter(|&x| f.eval_in(ctx, x) == 0)
        .collect()
}

/// Minimal polynomial over `Z_p` of an extension-field element: the product
/// of `(X − σ(x))` over the distinct Frobenius conjugates `σ(x) = x^{p^j}`.
pub fn min_poly(x: El, ctx: &FieldContext) -> DensePolynomial {
    // conjugate orbit
    let mut orbit = vec![x];
    let mut y = ctx.pow_raw(x, ctx.p() as u64);
    while y != x {
        orbit.push(y);
        y = ctx.pow_raw(y, ctx.p() as u64);
    }
    // multiply (X − c) factors with coefficients in the extension field
    let mut acc: Vec<El> = vec![1];
    for &root in &orbit {
        let mut next = vec![0u32; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i + 1] = ctx.add(next[i + 1], c);
            next[i] = ctx.sub(next[i], ctx.mul(c, root));
        }
        acc = next;
    }
    // coefficients are Frobenius-stable, hence scalars
    let coeffs: Vec<u8> = acc
        .iter()
        .map(|&c| {
            debug_assert!(ctx.in_prime_subfield(c));
            c as u8
        })
        .collect();
    DensePolynomial::from_coeffs(&coeffs, ctx.p())
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat inverse; p is prime and a ≠ 0 mod p
    let mut acc = 1u64;
    let mut base = (a % p) as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}
