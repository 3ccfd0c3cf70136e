//! Basis blades encoded as bitmasks.
//!
//! Bit `i - 1` is set iff basis vector `e_i` is a factor; factors are taken in
//! ascending index order, so every mask names exactly one canonical blade.

use super::Signature;

/// Grade of a blade.
#[inline]
pub fn grade(mask: u32) -> usize {
    mask.count_ones() as usize
}

/// Sign picked up when the factors of `a` followed by the factors of `b` are
/// sorted into ascending order. Repeated factors are not contracted here.
#[inline]
pub fn reorder_sign(a: u32, b: u32) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Sign of the geometric product of two basis blades: `e_a e_b = sign * e_(a^b)`.
#[inline]
pub fn product_sign(a: u32, b: u32, sig: Signature) -> f64 {
    let contracted_negatives = (a & b & sig.negative_mask()).count_ones();
    let metric = if contracted_negatives & 1 == 0 { 1.0 } else { -1.0 };
    reorder_sign(a, b) * metric
}

/// `(-1)^k` for the grade involution.
#[inline]
pub fn involution_sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(-1)^(k(k-1)/2)` for reversion.
#[inline]
pub fn reverse_sign(k: usize) -> f64 {
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(-1)^(k(k+1)/2)` for Clifford conjugation.
#[inline]
pub fn conjugate_sign(k: usize) -> f64 {
    if (k * (k + 1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// 1-based indices of the factors of a blade, ascending.
pub fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
}
