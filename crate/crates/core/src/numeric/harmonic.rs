use super::float::MpFloat;

/// Running generalized harmonic numbers `H_n^{(r)} = sum_{k<=n} k^{-r}` and
/// odd harmonic numbers `h_n^{(r)} = sum_{k<=n} (k - 1/2)^{-r}` for a fixed
/// set of orders, advanced one index at a time.
#[derive(Clone, Debug)]
pub struct HarmonicState {
    n: u64,
    bits: usize,
    orders: Vec<u32>,
    big: Vec<MpFloat>,
    odd: Vec<MpFloat>,
}

impl HarmonicState {
    /// State at `n = 0` (all sums empty).
    pub fn new(orders: &[u32], bits: usize) -> Self {
        HarmonicState {
            n: 0,
            bits,
            orders: orders.to_vec(),
            big: orders.iter().map(|_| MpFloat::zero(bits)).collect(),
            odd: orders.iter().map(|_| MpFloat::zero(bits)).collect(),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    fn slot(&self, r: u32) -> usize {
        self.orders
            .iter()
            .position(|&o| o == r)
            .expect("order tracked by this state")
    }

    /// `H_n^{(r)}`.
    pub fn big(&self, r: u32) -> &MpFloat {
        &self.big[self.slot(r)]
    }

    /// `h_n^{(r)}`.
    pub fn odd(&self, r: u32) -> &MpFloat {
        &self.odd[self.slot(r)]
    }

    /// Moves from `n` to `n + 1`.
    pub fn advance(&mut self) {
        self.n += 1;
        let k = MpFloat::from_i64(self.n as i64, self.bits);
        let k_half = (MpFloat::from_i64(2 * self.n as i64 - 1, self.bits)).mul_pow2(-1);
        for (i, &r) in self.orders.iter().enumerate() {
            self.big[i] += k.powi(-i64::from(r));
            self.odd[i] += k_half.powi(-i64::from(r));
        }
        if cfg!(debug_assertions) && self.n.is_power_of_two() {
            debug_assert!(self.matches_fresh(), "harmonic state drifted at n = {}", self.n);
        }
    }

    /// Recomputes every tracked sum from scratch and compares bit for bit.
    pub fn matches_fresh(&self) -> bool {
        let mut fresh = HarmonicState::new(&self.orders, self.bits);
        for _ in 0..self.n {
            fresh.n += 1;
            let k = MpFloat::from_i64(fresh.n as i64, self.bits);
            let k_half = MpFloat::from_i64(2 * fresh.n as i64 - 1, self.bits).mul_pow2(-1);
            for (i, &r) in self.orders.iter().enumerate() {
                fresh.big[i] += k.powi(-i64::from(r));
                fresh.odd[i] += k_half.powi(-i64::from(r));
            }
        }
        fresh.big == self.big && fresh.odd == self.odd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrences_hold_exactly() {
        let bits = 200;
        let mut s = HarmonicState::new(&[1, 2, 5], bits);
        let mut prev = s.clone();
        for _ in 0..70 {
            s.advance();
            let n = s.n() as i64;
            for r in [1u32, 2, 5] {
                let step = MpFloat::from_i64(n, bits).powi(-i64::from(r));
                assert_eq!(s.big(r), &(prev.big(r) + &step));
                let step = MpFloat::from_i64(2 * n - 1, bits).mul_pow2(-1).powi(-i64::from(r));
                assert_eq!(s.odd(r), &(prev.odd(r) + &step));
            }
            prev = s.clone();
        }
        assert!(s.matches_fresh());
    }

    #[test]
    fn small_values() {
        let mut s = HarmonicState::new(&[1], 128);
        s.advance();
        s.advance();
        assert_eq!(s.big(1).to_f64(), 1.5);
        assert!((s.odd(1).to_f64() - (2.0 + 2.0 / 3.0)).abs() < 1e-15);
    }
}
