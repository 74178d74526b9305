//! Finite-field contexts `F_{p^m}` with a pinned, reproducible construction.
//!
//! A context fixes three things so that every discrete-log-valued artifact
//! (witnesses, generator powers, table layouts) is stable across runs and
//! machines:
//!
//! * the modulus: the lexicographically smallest monic irreducible of degree
//!   `m` over `Z_p`, where coefficient vectors are compared low degree first
//!   (the constant term is the most significant position);
//! * the generator `α`: the lexicographically smallest element (same
//!   ordering) of multiplicative order `p^m − 1`;
//! * for `m = 1` the modulus is `x − g` for the smallest primitive root `g`,
//!   so that `α = g` is still a primitive element.
//!
//! Elements are packed indices: the element with coefficients `c_0..c_{m−1}`
//! (ascending degree) is the integer `Σ c_i · p^i` in `[0, q)`. Packing makes
//! equality, hashing and table indexing free; digit decomposition is `O(m)`.
//!
//! Exponential/logarithm tables are built lazily for `q ≤ 2^21` and give
//! `O(1)` multiplication, powering and quadratic-character evaluation. Every
//! table-backed operation has a table-free twin (`mul_raw`, `pow_raw`, …)
//! used both as fallback for large `q` and as an independent re-verification
//! path for search witnesses.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use once_cell::race::OnceBox;

use crate::poly;

/// Packed field element: base-`p` digit vector read as an integer in `[0, q)`.
pub type El = u32;

/// Lazily built discrete-log tables.
struct Tables {
    /// `exp[i] = α^i`, length `n`.
    exp: Vec<u32>,
    /// `log[x]` for `x` in `[1, q)`; `log[0]` is a sentinel.
    log: Vec<u32>,
}

/// Largest field size for which log tables are materialized (two `u32`
/// vectors of length `q`; about 16 MiB at the limit).
pub const TABLE_LIMIT: u32 = 1 << 21;

/// Arithmetic context for `F_{p^m}`.
pub struct FieldContext {
    p: u32,
    m: u32,
    q: u32,
    n: u32,
    s: u32,
    /// Monic irreducible modulus, ascending coefficients, length `m + 1`.
    modulus: Vec<u8>,
    /// Packed generator of the multiplicative group.
    gen: El,
    tables: OnceBox<Tables>,
}

impl FieldContext {
    /// Builds the pinned context for `F_{p^m}`.
    ///
    /// Panics if `p` is not an odd prime, `m = 0`, or `p^m` overflows the
    /// packed representation.
    pub fn new(p: u32, m: u32) -> Self {
        assert!(m >= 1, "extension degree must be positive");
        assert!(p >= 3 && is_prime(p), "p must be an odd prime");
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= 1 << 30)
            .expect("field too large for packed representation");
        let n = q - 1;
        let modulus = smallest_modulus(p, m);
        let mut ctx = FieldContext {
            p,
            m,
            q,
            n,
            s: n / 2,
            modulus,
            gen: 0,
            tables: OnceBox::new(),
        };
        ctx.gen = smallest_generator(&ctx);
        ctx
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    /// Field size `p^m`.
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Multiplicative group order `p^m − 1`, also the code length.
    pub fn n(&self) -> u32 {
        self.n
    }
    /// `(p^m − 1) / 2`, the exponent of the fixed second power function.
    pub fn s(&self) -> u32 {
        self.s
    }
    /// Modulus coefficients, ascending degree.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }
    /// The pinned multiplicative generator `α`.
    pub fn generator(&self) -> El {
        self.gen
    }

    pub fn zero(&self) -> El {
        0
    }
    pub fn one(&self) -> El {
        1
    }

    /// Packs ascending coefficients (values reduced mod `p`) into an element.
    pub fn from_coeffs(&self, coeffs: &[u8]) -> El {
        assert!(coeffs.len() as u32 <= self.m, "too many coefficients");
        let mut x = 0u32;
        for &c in coeffs.iter().rev() {
            x = x * self.p + (c as u32 % self.p);
        }
        x
    }

    /// Ascending coefficient vector of `x`, length `m`.
    pub fn coeffs(&self, x: El) -> Vec<u8> {
        let mut out = vec![0u8; self.m as usize];
        self.digits_into(x, &mut out);
        out
    }

    fn digits_into(&self, mut x: El, out: &mut [u8]) {
        for d in out.iter_mut() {
            *d = (x % self.p) as u8;
            x /= self.p;
        }
        debug_assert_eq!(x, 0);
    }

    /// Embeds a scalar `c ∈ Z_p` (any `u32`, reduced) into the field.
    pub fn scalar(&self, c: u32) -> El {
        c % self.p
    }

    pub fn add(&self, a: El, b: El) -> El {
        let (p, m) = (self.p, self.m);
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..m {
            let d = (a % p + b % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            a /= p;
            b /= p;
        }
        out
    }

    pub fn neg(&self, a: El) -> El {
        let p = self.p;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            let d = (p - a % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            a /= p;
        }
        out
    }

    pub fn sub(&self, a: El, b: El) -> El {
        self.add(a, self.neg(b))
    }

    /// Multiplies by a scalar from `Z_p`.
    pub fn scalar_mul(&self, c: u32, a: El) -> El {
        let c = c % self.p;
        let p = self.p;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += (a % p * c) % p * place;
            place = place.wrapping_mul(p);
            a /= p;
        }
        out
    }

    /// Table-free product: schoolbook polynomial multiply, reduce by modulus.
    pub fn mul_raw(&self, a: El, b: El) -> El {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.m as usize;
        let p = self.p;
        let mut da = [0u8; 16];
        let mut db = [0u8; 16];
        self.digits_into(a, &mut da[..m]);
        self.digits_into(b, &mut db[..m]);
        // product coefficients, degree ≤ 2m − 2
        let mut prod = [0u32; 31];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] += da[i] as u32 * db[j] as u32;
            }
        }
        // reduce: x^m ≡ −(modulus − x^m), applied top down
        for i in (m..=2 * m - 2).rev() {
            let c = prod[i] % p;
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mc) in self.modulus.iter().take(m).enumerate() {
                // subtract c · mc · x^{i−m+j}
                let idx = i - m + j;
                let sub = c * mc as u32 % p;
                prod[idx] = (prod[idx] % p + p - sub) % p;
            }
        }
        let mut out = 0u32;
        let mut place = 1u32;
        for &coef in prod.iter().take(m) {
            out += coef % p * place;
            place = place.wrapping_mul(p);
        }
        out
    }

    /// Table-free power; the independent verification path for witnesses.
    pub fn pow_raw(&self, a: El, mut k: u64) -> El {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        k %= self.n as u64;
        let mut base = a;
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            k >>= 1;
        }
        acc
    }

    fn tables(&self) -> Option<&Tables> {
        if self.q > TABLE_LIMIT {
            return None;
        }
        Some(self.tables.get_or_init(|| {
            let mut exp = vec![0u32; self.n as usize];
            let mut log = vec![u32::MAX; self.q as usize];
            let mut x = 1u32;
            for (i, slot) in exp.iter_mut().enumerate() {
                *slot = x;
                log[x as usize] = i as u32;
                x = self.mul_raw(x, self.gen);
            }
            debug_assert_eq!(x, 1, "generator order must be n");
            Box::new(Tables { exp, log })
        }))
    }

    /// Whether `O(1)` log-table arithmetic is active for this field size.
    pub fn has_tables(&self) -> bool {
        self.q <= TABLE_LIMIT
    }

    /// `α^i` for `i` taken mod `n`.
    pub fn element_from_log(&self, i: u64) -> El {
        let i = (i % self.n as u64) as usize;
        match self.tables() {
            Some(t) => t.exp[i],
            None => self.pow_raw(self.gen, i as u64),
        }
    }

    /// Discrete log of `x` base `α`; `None` for zero.
    pub fn log(&self, x: El) -> Option<u32> {
        if x == 0 {
            return None;
        }
        match self.tables() {
            Some(t) => Some(t.log[x as usize]),
            None => {
                // baby-step giant-step would be overkill: the table-free path
                // only serves q > TABLE_LIMIT diagnostics, so walk directly.
                let mut acc = 1u32;
                for i in 0..self.n {
                    if acc == x {
                        return Some(i);
                    }
                    acc = self.mul_raw(acc, self.gen);
                }
                unreachable!("nonzero element must be a generator power")
            }
        }
    }

    pub fn mul(&self, a: El, b: El) -> El {
        if a == 0 || b == 0 {
            return 0;
        }
        match self.tables() {
            Some(t) => {
                let ia = t.log[a as usize] as u64;
                let ib = t.log[b as usize] as u64;
                t.exp[((ia + ib) % self.n as u64) as usize]
            }
            None => self.mul_raw(a, b),
        }
    }

    pub fn inv(&self, a: El) -> El {
        assert!(a != 0, "zero has no inverse");
        match self.tables() {
            Some(t) => {
                let ia = t.log[a as usize];
                t.exp[((self.n - ia) % self.n) as usize]
            }
            None => self.pow_raw(a, self.n as u64 - 1),
        }
    }

    pub fn pow(&self, a: El, k: u64) -> El {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        match self.tables() {
            Some(t) => {
                let ia = t.log[a as usize] as u64;
                t.exp[((ia * (k % self.n as u64)) % self.n as u64) as usize]
            }
            None => self.pow_raw(a, k),
        }
    }

    /// Quadratic character: `+1` for nonzero squares, `−1` for nonsquares.
    /// Zero input is rejected.
    pub fn eta(&self, x: El) -> i8 {
        assert!(x != 0, "character of zero is undefined");
        match self.tables() {
            Some(t) => self.eta_of_log(t.log[x as usize]),
            None => {
                if self.pow_raw(x, self.s as u64) == 1 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Character from a known discrete log: `η(α^i) = (−1)^i`.
    pub fn eta_of_log(&self, i: u32) -> i8 {
        if i % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether `x` lies in the prime subfield `Z_p` (includes zero).
    pub fn in_prime_subfield(&self, x: El) -> bool {
        if x == 0 || self.m == 1 {
            return true;
        }
        match self.tables() {
            Some(t) => t.log[x as usize] % (self.n / (self.p - 1)) == 0,
            None => self.pow_raw(x, self.p as u64) == x,
        }
    }

    /// Iterates every field element, `0` first, in packed order.
    pub fn elements(&self) -> impl Iterator<Item = El> {
        0..self.q
    }
}

/// Deterministic primality by trial division (inputs are small).
pub fn is_prime(v: u32) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors by trial division.
pub fn prime_divisors(mut v: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while d as u64 * d as u64 <= v as u64 {
        if v % d == 0 {
            out.push(d);
            while v % d == 0 {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// The lexicographically smallest monic irreducible of degree `m` over `Z_p`
/// (constant coefficient most significant). For `m = 1`: `x − g` with `g` the
/// smallest primitive root, so the root is always a primitive element.
fn smallest_modulus(p: u32, m: u32) -> Vec<u8> {
    if m == 1 {
        let g = (2..p)
            .find(|&g| {
                prime_divisors(p - 1)
                    .iter()
                    .all(|&r| pow_mod(g, (p - 1) / r as u32, p) != 1)
            })
            .expect("every prime has a primitive root");
        return vec![((p - g) % p) as u8, 1];
    }
    let mut coeffs = vec![0u8; m as usize + 1];
    coeffs[m as usize] = 1;
    // odometer over (c_0, …, c_{m−1}) with c_0 the slowest digit = lex order
    fn search(coeffs: &mut Vec<u8>, pos: usize, p: u32, m: usize) -> bool {
        if pos == m {
            return poly::is_irreducible(coeffs, p);
        }
        for c in 0..p {
            coeffs[pos] = c as u8;
            if search(coeffs, pos + 1, p, m) {
                return true;
            }
        }
        coeffs[pos] = 0;
        false
    }
    let found = search(&mut coeffs, 0, p, m as usize);
    assert!(found, "irreducibles of every degree exist");
    coeffs
}

fn pow_mod(mut b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut bb = b as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u64;
        }
        bb = bb * bb % p as u64;
        e >>= 1;
    }
    b = acc as u32;
    b
}

/// The lexicographically smallest element of full multiplicative order,
/// coefficients compared low degree first.
fn smallest_generator(ctx: &FieldContext) -> El {
    let radicals = prime_divisors(ctx.n);
    // iterate (c_0, …, c_{m−1}) in lex order: digit-reverse a plain counter
    for t in 1..ctx.q {
        let cand = digit_reverse(t, ctx.p, ctx.m);
        if cand == 0 {
            continue;
        }
        let full_order = radicals
            .iter()
            .all(|&r| ctx.pow_raw(cand, (ctx.n / r) as u64) != 1);
        if full_order {
            return cand;
        }
    }
    unreachable!("cyclic group has a generator")
}

/// Reverses the base-`p` digit string of `t` (length `m`).
fn digit_reverse(mut t: u32, p: u32, m: u32) -> u32 {
    let mut out = 0u32;
    for _ in 0..m {
        out = out * p + t % p;
        t /= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs_of(ctx: &FieldContext, x: El) -> Vec<u8> {
        ctx.coeffs(x)
    }

    #[test]
    fn pinned_moduli_and_generators() {
        // (p, m, modulus ascending, generator coefficients ascending)
        let pinned: &[(u32, u32, &[u8], &[u8])] = &[
            (5, 1, &[3, 1], &[2]),
            (5, 2, &[1, 1, 1], &[1, 3]),
            (5, 3, &[1, 0, 1, 1], &[0, 0, 2]),
            (5, 4, &[1, 0, 1, 1, 1], &[0, 0, 1, 1]),
            (5, 5, &[1, 0, 0, 0, 4, 1], &[0, 0, 0, 0, 2]),
            (5, 6, &[1, 0, 0, 0, 1, 1, 1], &[0, 0, 0, 0, 1, 1]),
            (5, 7, &[1, 0, 0, 0, 0, 0, 1, 1], &[0, 0, 0, 0, 0, 0, 2]),
            (7, 2, &[1, 0, 1], &[1, 2]),
            (7, 3, &[1, 0, 1, 1], &[0, 1, 5]),
        ];
        for &(p, m, modulus, gen) in pinned {
            let ctx = FieldContext::new(p, m);
            assert_eq!(ctx.modulus(), modulus, "modulus for ({p}, {m})");
            assert_eq!(
                coeffs_of(&ctx, ctx.generator()),
                gen,
                "generator for ({p}, {m})"
            );
        }
    }

    #[test]
    fn pinned_context_m8() {
        let ctx = FieldContext::new(5, 8);
        assert_eq!(ctx.modulus(), &[1, 0, 0, 0, 0, 1, 1, 0, 1]);
        assert_eq!(ctx.coeffs(ctx.generator()), &[0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(ctx.s(), 195_312);
    }

    #[test]
    fn generator_stream_hits_every_nonzero_element() {
        let ctx = FieldContext::new(5, 4);
        let mut seen = vec![false; ctx.q() as usize];
        for i in 0..ctx.n() {
            let x = ctx.element_from_log(i as u64);
            assert!(!seen[x as usize], "duplicate at log {i}");
            seen[x as usize] = true;
        }
        assert_eq!(seen.iter().filter(|&&b| b).count() as u32, ctx.n());
    }

    #[test]
    fn raw_and_table_arithmetic_agree() {
        let ctx = FieldContext::new(5, 3);
        for a in ctx.elements() {
            for b in ctx.elements() {
                assert_eq!(ctx.mul(a, b), ctx.mul_raw(a, b));
            }
        }
        for a in 1..ctx.q() {
            assert_eq!(ctx.mul(a, ctx.inv(a)), 1);
            assert_eq!(ctx.pow(a, 7), ctx.pow_raw(a, 7));
        }
    }

    #[test]
    fn prime_subfield_test_agrees_with_frobenius_fixed_points() {
        for m in 1..=4 {
            let ctx = FieldContext::new(5, m);
            for x in ctx.elements() {
                let fixed = ctx.pow_raw(x, 5) == x;
                assert_eq!(ctx.in_prime_subfield(x), fixed, "m={m} x={x}");
            }
        }
    }

    #[test]
    fn character_properties_exhaustive_small() {
        for m in 1..=3 {
            let ctx = FieldContext::new(5, m);
            // multiplicativity and square counting
            let mut squares = 0u32;
            for x in 1..ctx.q() {
                if ctx.eta(x) == 1 {
                    squares += 1;
                }
                for y in 1..ctx.q() {
                    assert_eq!(
                        ctx.eta(ctx.mul(x, y)) as i32,
                        ctx.eta(x) as i32 * ctx.eta(y) as i32
                    );
                }
            }
            assert_eq!(squares, ctx.n() / 2, "m={m}");
            // −1 is a square: s = (q−1)/2 is even for p = 5
            assert_eq!(ctx.eta(ctx.neg(1)), 1, "m={m}");
        }
    }

    #[test]
    fn character_matches_explicit_power_sampled_m4_m5() {
        for m in [4u32, 5] {
            let ctx = FieldContext::new(5, m);
            // deterministic stride covering ≥ 10^4 elements
            let stride = (ctx.n() / 10_000).max(1);
            let mut checked = 0u32;
            let mut i = 1u32;
            while i < ctx.n() {
                let x = ctx.element_from_log(i as u64);
                let by_power = if ctx.pow_raw(x, ctx.s() as u64) == 1 {
                    1
                } else {
                    -1
                };
                assert_eq!(ctx.eta(x), by_power);
                checked += 1;
                i += stride;
            }
            assert!(checked >= 10_000 || ctx.n() < 10_000, "m={m}: {checked}");
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let ctx = FieldContext::new(5, 3);
        for a in ctx.elements() {
            for b in ctx.elements() {
                let lhs = ctx.pow_raw(ctx.add(a, b), 5);
                let rhs = ctx.add(ctx.pow_raw(a, 5), ctx.pow_raw(b, 5));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
