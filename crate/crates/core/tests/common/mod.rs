#![allow(dead_code)]

use rand::Rng;
use spinor_algebra::{Multivector, Signature};

/// Product of basis blades by writing out both index lists, bubble-sorting
/// the concatenation and contracting equal neighbours. Indices are 0-based;
/// the first `p` square to +1.
pub fn oracle_blade_product(a: u32, b: u32, p: usize, n: usize) -> (f64, u32) {
    let mut word: Vec<usize> = (0..n).filter(|i| a & (1 << i) != 0).collect();
    word.extend((0..n).filter(|i| b & (1 << i) != 0));
    let mut sign = 1.0;
    for end in (1..word.len()).rev() {
        for k in 0..end {
            if word[k] > word[k + 1] {
                word.swap(k, k + 1);
                sign = -sign;
            }
        }
    }
    let mut mask = 0u32;
    let mut k = 0;
    while k < word.len() {
        if k + 1 < word.len() && word[k] == word[k + 1] {
            if word[k] >= p {
                sign = -sign;
            }
            k += 2;
        } else {
            mask |= 1 << word[k];
            k += 1;
        }
    }
    (sign, mask)
}

/// Mismatches between the library product and the oracle over every pair
/// of basis blades of `sig`.
pub fn oracle_mismatches(sig: Signature) -> Vec<(u32, u32)> {
    let count = sig.blade_count() as u32;
    let mut bad = Vec::new();
    for a in 0..count {
        let ea = Multivector::blade(sig, a, 1.0);
        for b in 0..count {
            let prod = &ea * &Multivector::blade(sig, b, 1.0);
            let (sign, mask) = oracle_blade_product(a, b, sig.p(), sig.dim());
            let ok = prod
                .coeffs()
                .iter()
                .enumerate()
                .all(|(m, &c)| c == if m as u32 == mask { sign } else { 0.0 });
            if !ok {
                bad.push((a, b));
            }
        }
    }
    bad
}

pub fn all_signatures(max_dim: usize) -> Vec<Signature> {
    (0..=max_dim)
        .flat_map(|n| (0..=n).map(move |q| Signature::new(n - q, q).unwrap()))
        .collect()
}

/// Multivector with coefficients spanning many magnitudes, some exactly zero.
pub fn wide_random(sig: Signature, rng: &mut impl Rng) -> Multivector {
    let coeffs = (0..sig.blade_count())
        .map(|_| match rng.gen_range(0..4) {
            0 => 0.0,
            1 => rng.gen_range(-9i32..=9) as f64,
            _ => rng.gen_range(-1.0..1.0) * 10f64.powi(rng.gen_range(-12..12)),
        })
        .collect();
    Multivector::from_coeffs(sig, coeffs).unwrap()
}

/// Byte strings biased toward the expression alphabet.
pub fn fuzz_input(rng: &mut impl Rng) -> Vec<u8> {
    const ALPHABET: &[u8] = b"e0123456789{},.+-*^() \t";
    let len = rng.gen_range(0..40);
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.8) {
                ALPHABET[rng.gen_range(0..ALPHABET.len())]
            } else {
                rng.gen()
            }
        })
        .collect()
}

/// `(sig, expr, expected)` triples from a `p,q;expr;expected` file.
pub fn read_fixtures(text: &str) -> Vec<(Signature, String, String)> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut parts = line.splitn(3, ';');
            let sig = parts.next().unwrap();
            let (p, q) = sig.split_once(',').unwrap();
            let sig = Signature::new(p.trim().parse().unwrap(), q.trim().parse().unwrap()).unwrap();
            (sig, parts.next().unwrap().to_string(), parts.next().unwrap().to_string())
        })
        .collect()
}
