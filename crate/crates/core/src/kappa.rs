//! Unit residues `κ mod M` satisfying a system of congruences
//! `κ^{±1} ≡ r (mod n)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// `κ^scale ≡ residue (mod modulus)` with `scale ∈ {+1, −1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KappaConstraint {
    pub residue: i64,
    pub modulus: u64,
    pub scale: i8,
}

impl KappaConstraint {
    pub fn new(residue: i64, modulus: u64, scale: i8) -> Self {
        KappaConstraint { residue, modulus, scale }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub(crate) fn reduce(r: i64, n: u64) -> u64 {
    (r as i128).rem_euclid(n as i128) as u64
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

// Extended Euclid on signed 128-bit values.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Inverse of `a` modulo `n`, if it exists. Everything is a unit mod 1.
pub fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd((a % n) as i128, n as i128);
    (g == 1).then(|| x.rem_euclid(n as i128) as u64)
}

/// Units modulo `m` in increasing order; `{0}` when `m = 1`.
pub fn units(m: u64) -> Vec<u64> {
    if m == 1 {
        return alloc::vec![0];
    }
    (1..m).filter(|&k| gcd(k, m) == 1).collect()
}

/// Merges `x ≡ a (mod n)` and `x ≡ b (mod k)`; `None` when inconsistent.
fn crt_merge(a: u64, n: u64, b: u64, k: u64) -> Option<(u64, u64)> {
    let g = gcd(n, k);
    let diff = b as i128 - a as i128;
    if diff.rem_euclid(g as i128) != 0 {
        return None;
    }
    let l = lcm(n, k);
    let n_g = (n / g) as i128;
    let k_g = (k / g) as i128;
    // a + n·t ≡ b (mod k)  ⇔  (n/g)·t ≡ diff/g (mod k/g)
    let (_, inv, _) = ext_gcd(n_g.rem_euclid(k_g.max(1)), k_g.max(1));
    let t = if k_g == 1 { 0 } else { ((diff / g as i128) * inv).rem_euclid(k_g) };
    let x = (a as i128 + n as i128 * t).rem_euclid(l as i128) as u64;
    Some((x, l))
}

/// All units `κ mod m` with `κ^scale ≡ residue (mod n)` for every constraint.
///
/// Each constraint is turned into a congruence on `κ` itself (inverting the
/// residue when `scale = −1`), the system is merged by the Chinese remainder
/// theorem, and the lifts to `Z/m` are filtered for units. Every constraint
/// modulus must divide `m`.
pub fn kappa_solutions(constraints: &[KappaConstraint], m: u64) -> BTreeSet<u64> {
    assert!(m >= 1, "modulus must be positive");
    let mut acc: (u64, u64) = (0, 1);
    for c in constraints {
        assert!(c.modulus >= 1 && m % c.modulus == 0, "constraint modulus {} does not divide {m}", c.modulus);
        let r = reduce(c.residue, c.modulus);
        let target = if c.scale >= 0 {
            r
        } else {
            match inverse_mod(r, c.modulus) {
                Some(inv) => inv,
                None => return BTreeSet::new(),
            }
        };
        match crt_merge(acc.0, acc.1, target, c.modulus) {
            Some(next) => acc = next,
            None => return BTreeSet::new(),
        }
    }
    let (base, step) = acc;
    let mut out = BTreeSet::new();
    let mut k = base % m;
    for _ in 0..(m / step) {
        if m == 1 || gcd(k, m) == 1 {
            out.insert(k);
        }
        k = (k + step) % m;
    }
    out
}

/// `κ^e mod n` for `e ∈ {+1, −1}`; `κ` must be a unit mod `n`.
pub(crate) fn signed_power(kappa: u64, e: i8, n: u64) -> u64 {
    if e >= 0 {
        kappa % n
    } else {
        inverse_mod(kappa, n).expect("kappa must be a unit")
    }
}

pub(crate) fn scale_residue(kappa_pow: u64, r: i64, n: u64) -> u64 {
    mul_mod(kappa_pow % n, reduce(r, n), n)
}
