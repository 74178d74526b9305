//! Cyclotomic cosets modulo `n` under multiplication by `p`.
//!
//! The coset of `e` is its orbit `{e, ep, ep², …} mod n`; its smallest
//! member is the *leader*. Exponents in the same coset index conjugate
//! field elements and therefore share a minimal polynomial, so everything
//! downstream (dimensions, code equivalence, catalogs) is stated per coset
//! and keyed by leader.

use alloc::vec;
use alloc::vec::Vec;

/// Orbit of `e` under `×p mod n`, in multiplication order starting at `e`.
pub fn orbit(e: u64, p: u64, n: u64) -> Vec<u64> {
    let start = e % n;
    let mut out = vec![start];
    let mut cur = start * p % n;
    while cur != start {
        out.push(cur);
        cur = cur * p % n;
    }
    out
}

/// Number of elements in the coset of `e`.
pub fn orbit_len(e: u64, p: u64, n: u64) -> usize {
    let start = e % n;
    let mut len = 1;
    let mut cur = start * p % n;
    while cur != start {
        len += 1;
        cur = cur * p % n;
    }
    len
}

/// Smallest member of the coset of `e`.
pub fn leader(e: u64, p: u64, n: u64) -> u64 {
    let start = e % n;
    let mut best = start;
    let mut cur = start * p % n;
    while cur != start {
        best = best.min(cur);
        cur = cur * p % n;
    }
    best
}

/// All coset leaders in `[0, n)`, ascending.
pub fn all_leaders(p: u64, n: u64) -> Vec<u64> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for e in 0..n {
        if seen[e as usize] {
            continue;
        }
        out.push(e);
        let mut cur = e;
        loop {
            seen[cur as usize] = true;
            cur = cur * p % n;
            if cur == e {
                break;
            }
        }
    }
    out
}

/// True when `a` and `b` lie in the same coset.
pub fn same_coset(a: u64, b: u64, p: u64, n: u64) -> bool {
    leader(a, p, n) == leader(b, p, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_walks_by_multiplication_and_closes() {
        // 367 ↦ 1835 ≡ 587 ↦ 2935 ≡ 439 ↦ 2195 ≡ 323 ↦ 367 (mod 624)
        assert_eq!(orbit(367, 5, 624), vec![367, 587, 439, 323]);
        assert_eq!(leader(367, 5, 624), 323);
        assert_eq!(orbit_len(367, 5, 624), 4);
    }

    #[test]
    fn coset_of_26_mod_624_has_two_elements() {
        // 26·5 = 130 and 130·5 = 650 ≡ 26, a short orbit
        assert_eq!(orbit(26, 5, 624), vec![26, 130]);
        assert_eq!(orbit_len(26, 5, 624), 2);
    }

    #[test]
    fn orbit_sizes_divide_m() {
        for m in [2u32, 3, 4] {
            let n = 5u64.pow(m) - 1;
            for e in 0..n {
                assert_eq!(m as usize % orbit_len(e, 5, n), 0, "m={m} e={e}");
            }
        }
    }

    #[test]
    fn leaders_partition_the_residues() {
        let n = 624;
        let leaders = all_leaders(5, n);
        let total: usize = leaders.iter().map(|&l| orbit_len(l, 5, n)).sum();
        assert_eq!(total, n as usize);
        assert!(leaders.windows(2).all(|w| w[0] < w[1]), "ascending");
        for &l in &leaders {
            assert_eq!(leader(l, 5, n), l, "a leader is its own minimum");
        }
    }

    #[test]
    fn same_coset_is_an_equivalence_on_examples() {
        assert!(same_coset(323, 587, 5, 624));
        assert!(!same_coset(323, 368, 5, 624));
        assert!(same_coset(0, 0, 5, 624));
    }
}
