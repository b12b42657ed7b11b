//! Exponent vectors over the parameter variables.
//!
//! Variables are laid out interleaved: slot `2(i-1)` holds `r_i` and slot
//! `2(i-1)+1` holds `s_i`, so a scalar never needs to know the rank `n`.
//! Vectors are stored with trailing zeros trimmed, which makes structural
//! equality coincide with mathematical equality.

use std::cmp::Ordering;
use std::fmt;

/// Slot of the parameter `r_i` (1-based `i`).
pub fn r_var(i: usize) -> usize {
    assert!(i >= 1, "parameter indices start at 1");
    2 * (i - 1)
}

/// Slot of the parameter `s_i` (1-based `i`).
pub fn s_var(i: usize) -> usize {
    assert!(i >= 1, "parameter indices start at 1");
    2 * (i - 1) + 1
}

/// Human name of a variable slot (`r3`, `s1`, ...).
pub fn var_name(v: usize) -> String {
    let idx = v / 2 + 1;
    if v.is_multiple_of(2) {
        format!("r{idx}")
    } else {
        format!("s{idx}")
    }
}

/// A Laurent exponent vector.
///
/// Ordered graded-lexicographically: first by total degree, then by the
/// first slot where the vectors differ (larger exponent is greater), with
/// slots ordered `r1, s1, r2, s2, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<i32>);

impl Exponents {
    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    /// The single-variable vector `var^e`.
    pub fn var(v: usize, e: i32) -> Self {
        let mut out = vec![0; v + 1];
        out[v] = e;
        Exponents::from_vec(out)
    }

    pub fn from_vec(mut v: Vec<i32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Exponents(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> i32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    /// Number of stored slots (one past the highest variable present).
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Nonzero `(slot, exponent)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(v, &e)| (v, e))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Self {
        let w = self.width().max(other.width());
        Exponents::from_vec((0..w).map(|v| f(self.get(v), other.get(v))).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Exponents(self.0.iter().map(|e| -e).collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        Exponents::from_vec(self.0.iter().map(|e| e * k).collect())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        self.zip_with(other, i32::min)
    }

    /// Componentwise `self <= other`.
    pub fn le_all(&self, other: &Self) -> bool {
        let w = self.width().max(other.width());
        (0..w).all(|v| self.get(v) <= other.get(v))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Rename variables slot by slot; exponents landing on the same slot add.
    pub fn remap(&self, f: &impl Fn(usize) -> usize) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for (v, e) in self.support() {
            let t = f(v);
            if out.len() <= t {
                out.resize(t + 1, 0);
            }
            out[t] += e;
        }
        Exponents::from_vec(out)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let w = self.width().max(other.width());
                (0..w)
                    .map(|v| self.get(v).cmp(&other.get(v)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", var_name(v))?;
            } else {
                write!(f, "{}^{}", var_name(v), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_do_not_affect_equality() {
        assert_eq!(Exponents::from_vec(vec![1, 0, 0]), Exponents::from_vec(vec![1]));
        assert!(Exponents::from_vec(vec![0, 0]).is_one());
    }

    #[test]
    fn graded_order_then_lex() {
        let r2 = Exponents::var(r_var(1), 2);
        let s2 = Exponents::var(s_var(1), 2);
        let r1 = Exponents::var(r_var(1), 1);
        assert!(r2 > s2);
        assert!(s2 > r1);
        assert!(Exponents::var(s_var(3), 1) < Exponents::var(r_var(1), 1));
    }

    #[test]
    fn remap_merges_slots() {
        let m = Exponents::from_vec(vec![1, 2, 3, 4]);
        let merged = m.remap(&|v| v % 2);
        assert_eq!(merged, Exponents::from_vec(vec![4, 6]));
    }
}
