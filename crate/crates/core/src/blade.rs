//! Witt basis blades as bitmasks.
//!
//! For dimension `n`, bit `k-1` is `e_k` and bit `n+k-1` is `θ^k` (printed `tk`).
//! A mask names the wedge of its generators taken in ascending bit order, so
//! `e₁ < … < eₙ < θ¹ < … < θⁿ` is the canonical factor order.
//!
//! The only nonzero generator pairings are `⟨e_k, θ^k⟩ = 1`, so contracting a
//! blade by a generator touches at most one factor. All the kernels here are
//! monomial: they return a single blade with a sign, or nothing.

use std::cmp::Ordering;
use std::fmt::Write;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Blade {
        Blade(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// `e_k`, 1-based.
    pub fn e(k: usize) -> Blade {
        Blade(1 << (k - 1))
    }

    /// `θ^k`, 1-based.
    pub fn t(n: usize, k: usize) -> Blade {
        Blade(1 << (n + k - 1))
    }

    /// `e₁ ∧ … ∧ eₙ`.
    pub fn e_star(n: usize) -> Blade {
        Blade((1 << n) - 1)
    }

    /// `θ¹ ∧ … ∧ θⁿ`.
    pub fn theta_star(n: usize) -> Blade {
        Blade(((1 << n) - 1) << n)
    }

    /// Top blade `e_* ∧ θ*`.
    pub fn top(n: usize) -> Blade {
        Blade((1u32 << (2 * n)) - 1)
    }

    /// True when every factor is an `e_k`.
    pub fn is_vector_only(self, n: usize) -> bool {
        self.0 >> n == 0
    }

    /// True when every factor is a `θ^k`.
    pub fn is_form_only(self, n: usize) -> bool {
        self.0 & ((1 << n) - 1) == 0
    }

    /// Generator bit indices in canonical order.
    pub fn generators(self) -> impl Iterator<Item = u32> {
        let mask = self.0;
        (0..32).filter(move |b| mask & (1 << b) != 0)
    }

    /// `e1^t2` style name; the empty blade is `1`.
    pub fn label(self, n: usize) -> String {
        if self.0 == 0 {
            return "1".into();
        }
        let mut out = String::new();
        for (i, b) in self.generators().enumerate() {
            if i > 0 {
                out.push('^');
            }
            let _ = write!(out, "{}", generator_name(b, n));
        }
        out
    }

    /// Names of the factors, e.g. `["e1", "t2"]`.
    pub fn factor_names(self, n: usize) -> Vec<String> {
        self.generators().map(|b| generator_name(b, n)).collect()
    }

    /// All `4^n` blades of the algebra in (grade, mask) order.
    pub fn all(n: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..(1u32 << (2 * n))).map(Blade).collect();
        v.sort();
        v
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.grade(), self.0).cmp(&(other.grade(), other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn generator_name(bit: u32, n: usize) -> String {
    let b = bit as usize;
    if b < n {
        format!("e{}", b + 1)
    } else {
        format!("t{}", b - n + 1)
    }
}

#[inline]
pub(crate) fn partner(bit: u32, n: u32) -> u32 {
    if bit < n {
        bit + n
    } else {
        bit - n
    }
}

#[inline]
fn parity(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[inline]
fn bits_below(mask: u32, bit: u32) -> u32 {
    (mask & ((1u32 << bit) - 1)).count_ones()
}

#[inline]
fn bits_above(mask: u32, bit: u32) -> u32 {
    (mask >> bit >> 1).count_ones()
}

/// `x ∧ B` for generator bit `x`.
#[inline]
pub(crate) fn gen_wedge(x: u32, b: u32) -> Option<(u32, i64)> {
    if b & (1 << x) != 0 {
        None
    } else {
        Some((b | (1 << x), parity(bits_below(b, x))))
    }
}

/// `x ⌟ B`: Leibniz expansion, only the partner of `x` survives.
#[inline]
pub(crate) fn gen_lcontract(x: u32, b: u32, n: u32) -> Option<(u32, i64)> {
    let p = partner(x, n);
    if b & (1 << p) == 0 {
        None
    } else {
        Some((b & !(1 << p), parity(bits_below(b, p))))
    }
}

/// `B ⌞ x`.
#[inline]
pub(crate) fn gen_rcontract(b: u32, x: u32, n: u32) -> Option<(u32, i64)> {
    let p = partner(x, n);
    if b & (1 << p) == 0 {
        None
    } else {
        Some((b & !(1 << p), parity(bits_above(b, p))))
    }
}

/// `A ∧ B`: zero on overlap, otherwise the reordering sign.
pub(crate) fn blade_wedge(a: u32, b: u32) -> Option<(u32, i64)> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += bits_above(a, j);
        rest &= rest - 1;
    }
    Some((a | b, parity(swaps)))
}

/// `A ⌟ B = x₁ ⌟ (x₂ ⌟ ( … (x_k ⌟ B)))` for `A = x₁ ∧ … ∧ x_k`.
pub(crate) fn blade_lcontract(a: u32, b: u32, n: u32) -> Option<(u32, i64)> {
    if a.count_ones() > b.count_ones() {
        return None;
    }
    let (mut m, mut s) = (b, 1);
    for x in (0..2 * n).rev().filter(|x| a & (1 << x) != 0) {
        let (m2, s2) = gen_lcontract(x, m, n)?;
        m = m2;
        s *= s2;
    }
    Some((m, s))
}

/// `B ⌞ A = ((B ⌞ x₁) ⌞ x₂) … ⌞ x_k`.
pub(crate) fn blade_rcontract(b: u32, a: u32, n: u32) -> Option<(u32, i64)> {
    if a.count_ones() > b.count_ones() {
        return None;
    }
    let (mut m, mut s) = (b, 1);
    for x in (0..2 * n).filter(|x| a & (1 << x) != 0) {
        let (m2, s2) = gen_rcontract(m, x, n)?;
        m = m2;
        s *= s2;
    }
    Some((m, s))
}

/// `(-1)^{r(r-1)/2}`.
pub(crate) fn reversion_sign(grade: usize) -> i64 {
    if (grade / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(-1)^{r(r+1)/2}`.
pub(crate) fn conjugation_sign(grade: usize) -> i64 {
    if grade.div_ceil(2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn grade_sign(grade: usize) -> i64 {
    parity(grade as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_follow_canonical_order() {
        let n = 2;
        assert_eq!(Blade::SCALAR.label(n), "1");
        assert_eq!(Blade::from_mask(0b0101).label(n), "e1^t1");
        assert_eq!(Blade::top(n).label(n), "e1^e2^t1^t2");
        assert_eq!(Blade::theta_star(n).label(n), "t1^t2");
    }

    #[test]
    fn order_is_grade_then_mask() {
        let all = Blade::all(1);
        let names: Vec<_> = all.iter().map(|b| b.label(1)).collect();
        assert_eq!(names, ["1", "e1", "t1", "e1^t1"]);
    }

    #[test]
    fn wedge_signs() {
        // t1 ∧ e1 = -e1∧t1 at n = 1
        assert_eq!(blade_wedge(0b10, 0b01), Some((0b11, -1)));
        assert_eq!(blade_wedge(0b01, 0b10), Some((0b11, 1)));
        assert_eq!(blade_wedge(0b01, 0b01), None);
    }

    #[test]
    fn involution_sign_tables() {
        let rev: Vec<_> = (0..6).map(reversion_sign).collect();
        assert_eq!(rev, [1, 1, -1, -1, 1, 1]);
        let conj: Vec<_> = (0..6).map(conjugation_sign).collect();
        assert_eq!(conj, [1, -1, -1, 1, 1, -1]);
    }

    #[test]
    fn single_generator_contractions() {
        let n = 1;
        // t1 ⌟ (e1∧t1) = t1
        assert_eq!(gen_lcontract(1, 0b11, n), Some((0b10, 1)));
        // e1 ⌟ (e1∧t1) = -e1
        assert_eq!(gen_lcontract(0, 0b11, n), Some((0b01, -1)));
        // (e1∧t1) ⌞ e1 = e1
        assert_eq!(gen_rcontract(0b11, 0, n), Some((0b01, 1)));
        // (e1∧t1) ⌞ t1 = -t1
        assert_eq!(gen_rcontract(0b11, 1, n), Some((0b10, -1)));
    }
}
