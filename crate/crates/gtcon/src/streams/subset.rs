//! Infinite subsets of the naturals, presented by characteristic streams.

use super::ulp::UlpFunction;
use super::StreamError;
use serde::{Deserialize, Serialize};

/// An infinite set of naturals given by a 0/1 characteristic stream.  The
/// stream must be flat and its cycle must contain a 1, which is exactly what
/// makes the set infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfiniteSubset {
    bits: UlpFunction,
}

impl InfiniteSubset {
    pub fn new(bits: UlpFunction) -> Result<Self, StreamError> {
        bits.check_alphabet(2)?;
        if !bits.cycle().contains(&1) {
            return Err(StreamError::FiniteSet);
        }
        Ok(InfiniteSubset { bits })
    }

    pub fn bits(&self) -> &UlpFunction {
        &self.bits
    }

    pub fn contains(&self, n: u64) -> Result<bool, StreamError> {
        Ok(self.bits.eval(n)? == 1)
    }

    pub fn all() -> Self {
        InfiniteSubset::new(UlpFunction::constant(1)).expect("full set is infinite")
    }

    pub fn evens() -> Self {
        InfiniteSubset::new(UlpFunction::new(vec![], 0, vec![1, 0]).unwrap())
            .expect("evens are infinite")
    }

    pub fn odds() -> Self {
        InfiniteSubset::new(UlpFunction::new(vec![], 0, vec![0, 1]).unwrap())
            .expect("odds are infinite")
    }

    /// Number of members strictly below `n`.
    pub fn rank(&self, n: u64) -> Result<u64, StreamError> {
        let t = self.bits.threshold();
        let p = self.bits.period();
        let mut count = 0u64;
        for m in 0..n.min(t) {
            count += self.bits.eval(m)?;
        }
        if n > t {
            let full = (n - t) / p;
            let ones_per_cycle: u64 = self.bits.cycle().iter().sum();
            count += full * ones_per_cycle;
            for m in t + full * p..n {
                count += self.bits.eval(m)?;
            }
        }
        Ok(count)
    }

    /// The map n -> least member strictly greater than n.  The result is
    /// ultimately linear-periodic with the same period as the stream and
    /// increment equal to that period.
    pub fn next_element_fn(&self) -> Result<UlpFunction, StreamError> {
        let t = self.bits.threshold();
        let p = self.bits.period();
        let next = |n: u64| -> Result<u64, StreamError> {
            // A member occurs in any p consecutive positions beyond t.
            for m in n + 1..=n.max(t) + 2 * p {
                if self.contains(m)? {
                    return Ok(m);
                }
            }
            unreachable!("cycle contains a 1")
        };
        let mut prefix = Vec::with_capacity(t as usize);
        for n in 0..t {
            prefix.push(next(n)?);
        }
        let mut cycle = Vec::with_capacity(p as usize);
        for n in t..t + p {
            cycle.push(next(n)?);
        }
        UlpFunction::new(prefix, p, cycle)
    }

    /// The increasing enumeration e(0) < e(1) < ...  Ultimately linear-
    /// periodic with period the number of 1s per cycle and increment the
    /// stream period.
    pub fn increasing_enumeration(&self) -> Result<UlpFunction, StreamError> {
        let t = self.bits.threshold();
        let p = self.bits.period();
        let ones_per_cycle: u64 = self.bits.cycle().iter().sum();
        // Members below the stream threshold fill the enumeration's prefix.
        let in_prefix = self.rank(t)?;
        let mut values = Vec::new();
        let mut m = 0u64;
        while (values.len() as u64) < in_prefix + ones_per_cycle {
            if self.contains(m)? {
                values.push(m);
            }
            m += 1;
        }
        let cycle = values.split_off(in_prefix as usize);
        UlpFunction::new(values, p, cycle)
    }

    /// Transfers `other` along this set's enumeration: the result Z consists
    /// of those members of `self` whose rank within `self` lies in `other`.
    /// Equivalently Z = e(other) for the increasing enumeration e of `self`,
    /// so Z is an infinite subset of `self`.
    pub fn transfer(&self, other: &InfiniteSubset) -> Result<InfiniteSubset, StreamError> {
        let p = self.bits.period();
        let ones_per_cycle: u64 = self.bits.cycle().iter().sum();
        let p_other = other.bits.period();
        // Start where both streams are periodic: position beyond our
        // threshold whose rank is beyond the other threshold.
        let mut start = self.bits.threshold();
        while self.rank(start)? < other.bits.threshold() {
            start += 1;
        }
        // Over one period of ours the rank advances by `ones_per_cycle`, so
        // the combined behaviour repeats once that advance cycles mod the
        // other period.
        let g = num_integer::gcd(ones_per_cycle, p_other);
        let period = p
            .checked_mul(p_other / g)
            .ok_or(StreamError::Overflow)?;
        let mut bits = Vec::with_capacity((start + period) as usize);
        let mut rank = 0u64;
        for m in 0..start + period {
            let member = self.contains(m)? && other.contains(rank)?;
            if self.contains(m)? {
                rank += 1;
            }
            bits.push(if member { 1 } else { 0 });
        }
        let cycle = bits.split_off(start as usize);
        InfiniteSubset::new(UlpFunction::new(bits, 0, cycle)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn next_element_on_evens() {
        let g = InfiniteSubset::evens().next_element_fn().unwrap();
        // next even after 0 is 2, after 1 is 2, after 2 is 4, ...
        let got: Vec<u64> = (0..6).map(|n| g.eval(n).unwrap()).collect();
        assert_eq!(got, vec![2, 2, 4, 4, 6, 6]);
        assert_eq!(g.increment(), 2);
    }

    #[test]
    fn enumeration_of_odds() {
        let e = InfiniteSubset::odds().increasing_enumeration().unwrap();
        for n in 0..100 {
            assert_eq!(e.eval(n).unwrap(), 2 * n + 1);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let y = InfiniteSubset::new(
            UlpFunction::new(vec![1, 0, 0, 1], 0, vec![0, 1, 1, 0, 0]).unwrap(),
        )
        .unwrap();
        let e = y.increasing_enumeration().unwrap();
        let brute: Vec<u64> = (0..500).filter(|&m| y.contains(m).unwrap()).collect();
        for (n, &m) in brute.iter().enumerate() {
            assert_eq!(e.eval(n as u64).unwrap(), m);
        }
    }

    #[test]
    fn next_element_matches_brute_force() {
        let y = InfiniteSubset::new(
            UlpFunction::new(vec![0, 0, 1], 0, vec![0, 0, 0, 1, 0, 1, 0]).unwrap(),
        )
        .unwrap();
        let g = y.next_element_fn().unwrap();
        for n in 0..200u64 {
            let expect = (n + 1..).find(|&m| y.contains(m).unwrap()).unwrap();
            assert_eq!(g.eval(n).unwrap(), expect);
        }
    }

    #[test]
    fn rank_counts_members() {
        let y = InfiniteSubset::evens();
        assert_eq!(y.rank(0).unwrap(), 0);
        assert_eq!(y.rank(1).unwrap(), 1);
        assert_eq!(y.rank(10).unwrap(), 5);
    }

    #[test]
    fn transfer_composes_enumerations() {
        // Transfer the odds along the evens: members of the evens with odd
        // rank, i.e. 2, 6, 10, ...
        let z = InfiniteSubset::evens()
            .transfer(&InfiniteSubset::odds())
            .unwrap();
        for m in 0..100u64 {
            assert_eq!(z.contains(m).unwrap(), m % 4 == 2);
        }
        // Generic case: Z = e_Y(Y') pointwise.
        let y = InfiniteSubset::new(
            UlpFunction::new(vec![1, 1, 0], 0, vec![0, 1, 0, 0, 1, 1]).unwrap(),
        )
        .unwrap();
        let y2 = InfiniteSubset::new(
            UlpFunction::new(vec![0], 0, vec![1, 0, 0, 1]).unwrap(),
        )
        .unwrap();
        let z = y.transfer(&y2).unwrap();
        let e = y.increasing_enumeration().unwrap();
        let image: Vec<u64> = (0..200)
            .filter(|&n| y2.contains(n).unwrap())
            .map(|n| e.eval(n).unwrap())
            .collect();
        for m in 0..e.eval(199).unwrap() {
            assert_eq!(z.contains(m).unwrap(), image.contains(&m), "at {m}");
        }
    }

    #[test]
    fn rejects_finite_sets() {
        let bits = UlpFunction::new(vec![1, 1], 0, vec![0]).unwrap();
        assert_eq!(InfiniteSubset::new(bits).unwrap_err(), StreamError::FiniteSet);
    }
}
