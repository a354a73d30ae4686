use serde::{Deserialize, Serialize};

/// Mixed-radix digits of `n` used by the Γ₅ closed forms:
/// `n = 10·q3 + r3`, `r3 = 6·q2 + r2`, `r2 = 3·q1 + r1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadixDigits5 {
    pub q3: u64,
    pub r3: u64,
    pub q2: u64,
    pub r2: u64,
    pub q1: u64,
    pub r1: u64,
}

pub fn radix5(n: u64) -> RadixDigits5 {
    let (q3, r3) = (n / 10, n % 10);
    let (q2, r2) = (r3 / 6, r3 % 6);
    let (q1, r1) = (r2 / 3, r2 % 3);
    RadixDigits5 {
        q3,
        r3,
        q2,
        r2,
        q1,
        r1,
    }
}

impl RadixDigits5 {
    /// Inverse of [`radix5`].
    pub fn value(&self) -> u64 {
        10 * self.q3 + 6 * self.q2 + 3 * self.q1 + self.r1
    }

    /// `r1 = 2` and `q3 > 0`: the branch where μ is one less than the digit sum.
    pub fn needs_rewrite(&self) -> bool {
        self.r1 == 2 && self.q3 > 0
    }
}

/// Mixed-radix digits for the Γ₆ conjecture:
/// `n = 15·s4 + t4`, `t4 = 10·s3 + t3`, `t3 = 6·s2 + t2`, `t2 = 3·s1 + t1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadixDigits6 {
    pub s4: u64,
    pub t4: u64,
    pub s3: u64,
    pub t3: u64,
    pub s2: u64,
    pub t2: u64,
    pub s1: u64,
    pub t1: u64,
    /// `n ∈ {12} ∪ {20 + 15k, 23 + 15k, 27 + 15k : k ≥ 0}`
    pub in_s: bool,
    /// `n ∈ {20 + 15k : k ≥ 0}`
    pub in_s20: bool,
}

fn on_progression(n: u64, start: u64) -> bool {
    n >= start && (n - start) % 15 == 0
}

pub fn radix6(n: u64) -> RadixDigits6 {
    let (s4, t4) = (n / 15, n % 15);
    let (s3, t3) = (t4 / 10, t4 % 10);
    let (s2, t2) = (t3 / 6, t3 % 6);
    let (s1, t1) = (t2 / 3, t2 % 3);
    let in_s20 = on_progression(n, 20);
    let in_s = n == 12 || in_s20 || on_progression(n, 23) || on_progression(n, 27);
    RadixDigits6 {
        s4,
        t4,
        s3,
        t3,
        s2,
        t2,
        s1,
        t1,
        in_s,
        in_s20,
    }
}

impl RadixDigits6 {
    pub fn value(&self) -> u64 {
        15 * self.s4 + 10 * self.s3 + 6 * self.s2 + 3 * self.s1 + self.t1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radix5_examples() {
        let d = radix5(8);
        assert_eq!((d.q3, d.r3, d.q2, d.r2, d.q1, d.r1), (0, 8, 1, 2, 0, 2));
        let d = radix5(10);
        assert_eq!((d.q3, d.r3, d.q2, d.r2, d.q1, d.r1), (1, 0, 0, 0, 0, 0));
        let d = radix5(22);
        assert_eq!((d.q3, d.r3, d.q2, d.r2, d.q1, d.r1), (2, 2, 0, 2, 0, 2));
    }

    #[test]
    fn radix5_round_trip_and_bounds() {
        for n in 0..=10_000 {
            let d = radix5(n);
            assert_eq!(d.value(), n);
            assert!(d.r3 <= 9 && d.r2 <= 5 && d.r1 <= 2);
            assert!(d.q1 <= 1 && d.q2 <= 1);
            assert!(!(d.q1 == 1 && d.q2 == 1) || d.r3 == 9);
        }
    }

    #[test]
    fn radix6_membership_flags() {
        assert!(radix6(12).in_s && !radix6(12).in_s20);
        assert!(radix6(20).in_s && radix6(20).in_s20);
        assert!(radix6(35).in_s20);
        assert!(radix6(23).in_s && radix6(38).in_s && radix6(42).in_s);
        assert!(!radix6(27 + 1).in_s);
        assert!(!radix6(5).in_s);
        assert!(!radix6(27).in_s20);
        for n in 0..=5_000 {
            let d = radix6(n);
            assert_eq!(d.value(), n);
            assert!(d.t4 <= 14 && d.t3 <= 9 && d.t2 <= 5 && d.t1 <= 2);
        }
    }
}
