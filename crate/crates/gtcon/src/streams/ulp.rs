//! Ultimately linear-periodic functions on the naturals.
//!
//! An [`UlpFunction`] stores explicit values on a finite prefix `[0, N)` and
//! then follows f(n + p) = f(n) + d for all n >= N, with the values on
//! `[N, N + p)` given by `cycle`.  With d = 0 and values below k these double
//! as streams over a finite alphabet; characteristic streams of this shape
//! present infinite subsets of the naturals.

use super::StreamError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlpFunction {
    prefix: Vec<u64>,
    period: u64,
    increment: u64,
    cycle: Vec<u64>,
}

fn checked_add(a: u64, b: u64) -> Result<u64, StreamError> {
    a.checked_add(b).ok_or(StreamError::Overflow)
}

fn checked_mul(a: u64, b: u64) -> Result<u64, StreamError> {
    a.checked_mul(b).ok_or(StreamError::Overflow)
}

pub(crate) fn lcm(a: u64, b: u64) -> Result<u64, StreamError> {
    let g = num_integer::gcd(a, b);
    checked_mul(a / g, b)
}

impl UlpFunction {
    pub fn new(prefix: Vec<u64>, increment: u64, cycle: Vec<u64>) -> Result<Self, StreamError> {
        if cycle.is_empty() {
            return Err(StreamError::EmptyCycle);
        }
        Ok(UlpFunction {
            prefix,
            period: cycle.len() as u64,
            increment,
            cycle,
        })
    }

    /// Used by the file format, where the period is stated explicitly.
    pub fn with_period(
        prefix: Vec<u64>,
        period: u64,
        increment: u64,
        cycle: Vec<u64>,
    ) -> Result<Self, StreamError> {
        if period != cycle.len() as u64 {
            return Err(StreamError::PeriodMismatch {
                period,
                cycle_len: cycle.len() as u64,
            });
        }
        UlpFunction::new(prefix, increment, cycle)
    }

    pub fn constant(value: u64) -> Self {
        UlpFunction::new(Vec::new(), 0, vec![value]).expect("nonempty cycle")
    }

    /// f(n) = n.
    pub fn identity() -> Self {
        UlpFunction::new(Vec::new(), 1, vec![0]).expect("nonempty cycle")
    }

    /// Index from which the linear-periodic law holds.
    pub fn threshold(&self) -> u64 {
        self.prefix.len() as u64
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn increment(&self) -> u64 {
        self.increment
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[u64] {
        &self.cycle
    }

    pub fn eval(&self, n: u64) -> Result<u64, StreamError> {
        let t = self.threshold();
        if n < t {
            return Ok(self.prefix[n as usize]);
        }
        let q = (n - t) / self.period;
        let r = (n - t) % self.period;
        checked_add(self.cycle[r as usize], checked_mul(q, self.increment)?)
    }

    /// Checks that this is a stream over `{0, .., alphabet-1}`: flat
    /// (increment 0) with all values below the alphabet size.
    pub fn check_alphabet(&self, alphabet: u64) -> Result<(), StreamError> {
        if self.increment != 0 {
            return Err(StreamError::NotFlat);
        }
        for (i, &v) in self.prefix.iter().chain(&self.cycle).enumerate() {
            if v >= alphabet {
                return Err(StreamError::AlphabetViolation {
                    index: i as u64,
                    value: v,
                    alphabet,
                });
            }
        }
        Ok(())
    }

    pub fn is_flat(&self) -> bool {
        self.increment == 0
    }

    /// The same function presented with a doubled period.
    pub fn doubled_period(&self) -> Result<UlpFunction, StreamError> {
        let mut cycle = self.cycle.clone();
        for &v in &self.cycle {
            cycle.push(checked_add(v, self.increment)?);
        }
        UlpFunction::new(self.prefix.clone(), checked_mul(self.increment, 2)?, cycle)
    }

    /// Pointwise recoding of a flat stream.
    pub fn recode(&self, f: impl Fn(u64) -> u64) -> Result<UlpFunction, StreamError> {
        if !self.is_flat() {
            return Err(StreamError::NotFlat);
        }
        UlpFunction::new(
            self.prefix.iter().map(|&v| f(v)).collect(),
            0,
            self.cycle.iter().map(|&v| f(v)).collect(),
        )
    }

    /// Pointwise combination of two flat streams.
    pub fn zip_flat(
        a: &UlpFunction,
        b: &UlpFunction,
        op: impl Fn(u64, u64) -> u64,
    ) -> Result<UlpFunction, StreamError> {
        if !a.is_flat() || !b.is_flat() {
            return Err(StreamError::NotFlat);
        }
        let t = a.threshold().max(b.threshold());
        let p = lcm(a.period, b.period)?;
        let mut prefix = Vec::with_capacity(t as usize);
        for n in 0..t {
            prefix.push(op(a.eval(n)?, b.eval(n)?));
        }
        let mut cycle = Vec::with_capacity(p as usize);
        for n in t..t + p {
            cycle.push(op(a.eval(n)?, b.eval(n)?));
        }
        UlpFunction::new(prefix, 0, cycle)
    }

    /// f + c pointwise.
    pub fn add_const(&self, c: u64) -> Result<UlpFunction, StreamError> {
        let prefix = self
            .prefix
            .iter()
            .map(|&v| checked_add(v, c))
            .collect::<Result<_, _>>()?;
        let cycle = self
            .cycle
            .iter()
            .map(|&v| checked_add(v, c))
            .collect::<Result<_, _>>()?;
        UlpFunction::new(prefix, self.increment, cycle)
    }

    /// Composition outer(inner(n)) where `outer` is flat.  The result is
    /// again ULP (and flat): the class is closed under composition with the
    /// enumeration-style maps produced by the subset operations.
    pub fn compose_flat(outer: &UlpFunction, inner: &UlpFunction) -> Result<UlpFunction, StreamError> {
        if !outer.is_flat() {
            return Err(StreamError::NotFlat);
        }
        // Find a start index from which a full inner period maps into the
        // periodic region of `outer`.
        let mut start = inner.threshold();
        if outer.threshold() > 0 {
            loop {
                let mut ok = true;
                for n in start..checked_add(start, inner.period)? {
                    if inner.eval(n)? < outer.threshold() {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    break;
                }
                if inner.increment == 0 {
                    // Bounded inner: composition is periodic beyond the
                    // inner threshold regardless of outer's prefix.
                    start = inner.threshold();
                    break;
                }
                start = checked_add(start, inner.period)?;
            }
        }
        let period = if inner.increment == 0 {
            inner.period
        } else {
            let g = num_integer::gcd(inner.increment, outer.period);
            checked_mul(inner.period, outer.period / g)?
        };
        let mut prefix = Vec::with_capacity(start as usize);
        for n in 0..start {
            prefix.push(outer.eval(inner.eval(n)?)?);
        }
        let mut cycle = Vec::with_capacity(period as usize);
        for n in start..checked_add(start, period)? {
            cycle.push(outer.eval(inner.eval(n)?)?);
        }
        UlpFunction::new(prefix, 0, cycle)
    }

    /// Largest n with f(n) > n, or `None` if there is none.  Only meaningful
    /// when the asymptotic rate is below 1 (increment < period), which makes
    /// the answer finite; rejected otherwise.
    pub fn last_index_above_identity(&self) -> Result<Option<u64>, StreamError> {
        if self.increment >= self.period {
            return Err(StreamError::NotFlat);
        }
        let mut last: Option<u64> = None;
        for n in 0..self.threshold() {
            if self.prefix[n as usize] > n {
                last = Some(n);
            }
        }
        let t = self.threshold() as i128;
        let slope = self.period as i128 - self.increment as i128; // > 0
        for r in 0..self.period {
            // value at n = t + q*p + r is cycle[r] + q*d; it exceeds n iff
            // base > q * slope with base = cycle[r] - (t + r).
            let base = self.cycle[r as usize] as i128 - (t + r as i128);
            if base > 0 {
                let q_max = (base - 1) / slope;
                let n = t + q_max * self.period as i128 + r as i128;
                let n = u64::try_from(n).map_err(|_| StreamError::Overflow)?;
                if last.map_or(true, |l| n > l) {
                    last = Some(n);
                }
            }
        }
        Ok(last)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_identity_and_constant() {
        assert_eq!(UlpFunction::identity().eval(5).unwrap(), 5);
        for n in [0, 1, 17] {
            assert_eq!(UlpFunction::constant(0).eval(n).unwrap(), 0);
        }
    }

    #[test]
    fn eval_with_prefix_and_increment() {
        // prefix [7], p = 2, d = 2, cycle [1, 2]
        let f = UlpFunction::new(vec![7], 2, vec![1, 2]).unwrap();
        let got: Vec<u64> = (0..5).map(|n| f.eval(n).unwrap()).collect();
        assert_eq!(got, vec![7, 1, 2, 3, 4]);
    }

    #[test]
    fn doubled_period_same_function() {
        let f = UlpFunction::new(vec![7], 2, vec![1, 2]).unwrap();
        let g = f.doubled_period().unwrap();
        assert_eq!(g.period(), 4);
        for n in 0..50 {
            assert_eq!(f.eval(n).unwrap(), g.eval(n).unwrap());
        }
    }

    #[test]
    fn ulp_law_holds() {
        let f = UlpFunction::new(vec![3, 9], 5, vec![2, 0, 7]).unwrap();
        for n in f.threshold()..f.threshold() + 1000 {
            assert_eq!(
                f.eval(n + f.period()).unwrap(),
                f.eval(n).unwrap() + f.increment()
            );
        }
    }

    #[test]
    fn compose_flat_with_growing_inner() {
        // outer = parity beyond a prefix, inner(n) = 2n.
        let outer = UlpFunction::new(vec![9, 9, 9], 0, vec![0, 1]).unwrap();
        let inner = UlpFunction::new(vec![], 2, vec![0]).unwrap();
        let h = UlpFunction::compose_flat(&outer, &inner).unwrap();
        for n in 0..200 {
            assert_eq!(
                h.eval(n).unwrap(),
                outer.eval(inner.eval(n).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn compose_flat_with_bounded_inner() {
        let outer = UlpFunction::new(vec![5], 0, vec![1, 4]).unwrap();
        let inner = UlpFunction::new(vec![2, 0], 0, vec![0, 3, 1]).unwrap();
        let h = UlpFunction::compose_flat(&outer, &inner).unwrap();
        for n in 0..100 {
            assert_eq!(
                h.eval(n).unwrap(),
                outer.eval(inner.eval(n).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn last_index_above_identity_examples() {
        // f(n) = 10 constant: exceeds n for n < 10.
        let f = UlpFunction::constant(10);
        assert_eq!(f.last_index_above_identity().unwrap(), Some(9));
        let z = UlpFunction::constant(0);
        assert_eq!(z.last_index_above_identity().unwrap(), None);
        // Half rate with a big prefix bump.
        let f = UlpFunction::new(vec![100], 1, vec![0, 0]).unwrap();
        let last = f.last_index_above_identity().unwrap().unwrap();
        for n in last + 1..last + 500 {
            assert!(f.eval(n).unwrap() <= n);
        }
        assert!(f.eval(last).unwrap() > last);
    }

    #[test]
    fn alphabet_checks() {
        let f = UlpFunction::new(vec![0, 1], 0, vec![1, 0]).unwrap();
        assert!(f.check_alphabet(2).is_ok());
        assert!(f.check_alphabet(1).is_err());
        assert!(UlpFunction::identity().check_alphabet(2).is_err());
    }
}
