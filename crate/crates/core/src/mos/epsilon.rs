use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::MosError;

const MAX_FRACTION_DIGITS: u32 = 18;

/// One non-negative decimal approximation factor `ε = num / 10^frac_digits`.
///
/// Kept as an exact decimal so that `(1+ε)·q` comparisons never round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EpsFactor {
    num: u64,
    frac_digits: u32,
}

impl EpsFactor {
    pub const ZERO: EpsFactor = EpsFactor {
        num: 0,
        frac_digits: 0,
    };

    fn den(&self) -> u64 {
        10u64.pow(self.frac_digits)
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den() as f64
    }

    /// Compares `p` against `(1+ε)·q`.
    #[inline]
    pub fn cmp_scaled(&self, p: u64, q: u64) -> Ordering {
        if self.num == 0 {
            return p.cmp(&q);
        }
        let den = self.den() as u128;
        let lhs = p as u128 * den;
        let rhs = (den + self.num as u128) * q as u128;
        lhs.cmp(&rhs)
    }

    /// `⌊(1+ε)·q⌋`, saturating.
    pub fn inflate_floor(&self, q: u64) -> u64 {
        if self.num == 0 {
            return q;
        }
        let den = self.den() as u128;
        let v = (den + self.num as u128) * q as u128 / den;
        v.min(u64::MAX as u128) as u64
    }
}

impl PartialOrd for EpsFactor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EpsFactor {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.num as u128 * other.den() as u128;
        let b = other.num as u128 * self.den() as u128;
        a.cmp(&b)
    }
}

impl FromStr for EpsFactor {
    type Err = MosError;

    fn from_str(s: &str) -> Result<Self, MosError> {
        let bad = || MosError::BadEpsilon(s.to_string());
        let t = s.trim();
        if t.is_empty() || t.starts_with('-') || t.starts_with('+') {
            return Err(bad());
        }
        let (int_part, frac_part) = match t.split_once('.') {
            Some((i, f)) => (i, f),
            None => (t, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let frac = frac_part.trim_end_matches('0');
        if frac.len() as u32 > MAX_FRACTION_DIGITS {
            return Err(bad());
        }
        let frac_digits = frac.len() as u32;
        let int_val: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let frac_val: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let num = int_val
            .checked_mul(10u64.pow(frac_digits))
            .and_then(|v| v.checked_add(frac_val))
            .ok_or_else(bad)?;
        Ok(EpsFactor { num, frac_digits })
    }
}

impl fmt::Display for EpsFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.den();
        let int = self.num / den;
        let frac = self.num % den;
        if self.frac_digits == 0 {
            write!(f, "{int}")
        } else {
            write!(f, "{int}.{frac:0width$}", width = self.frac_digits as usize)
        }
    }
}

/// Per-objective approximation factors.
///
/// A single factor is broadcast to every objective.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Epsilon {
    factors: Vec<EpsFactor>,
}

impl Epsilon {
    /// The exact case: ε = 0 for every objective.
    pub fn zero() -> Self {
        Epsilon {
            factors: vec![EpsFactor::ZERO],
        }
    }

    pub fn scalar(factor: EpsFactor) -> Self {
        Epsilon {
            factors: vec![factor],
        }
    }

    pub fn from_factors(factors: Vec<EpsFactor>) -> Result<Self, MosError> {
        if factors.is_empty() {
            return Err(MosError::BadEpsilon(String::new()));
        }
        Ok(Epsilon { factors })
    }

    /// Parses `"0.1"` (broadcast) or `"0.1,0.05"` (per objective).
    pub fn parse(s: &str) -> Result<Self, MosError> {
        let factors = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<EpsFactor>, _>>()?;
        Self::from_factors(factors)
    }

    /// Parses a scalar literal and expands it to `dim` explicit components.
    pub fn broadcast_str(s: &str, dim: usize) -> Result<Self, MosError> {
        let f: EpsFactor = s.parse()?;
        Ok(Epsilon {
            factors: vec![f; dim.max(1)],
        })
    }

    pub fn is_broadcast(&self) -> bool {
        self.factors.len() == 1
    }

    /// Number of stored factors (1 when broadcast).
    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn fits(&self, dim: usize) -> bool {
        self.is_broadcast() || self.factors.len() == dim
    }

    #[inline]
    pub fn component(&self, i: usize) -> EpsFactor {
        if self.factors.len() == 1 {
            self.factors[0]
        } else {
            self.factors[i]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.factors.iter().all(EpsFactor::is_zero)
    }

    pub fn factors(&self) -> &[EpsFactor] {
        &self.factors
    }
}

impl FromStr for Epsilon {
    type Err = MosError;
    fn from_str(s: &str) -> Result<Self, MosError> {
        Epsilon::parse(s)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for (lit, shown) in [
            ("0.0", "0"),
            ("0.01", "0.01"),
            ("0.050", "0.05"),
            ("0.1", "0.1"),
            ("1.25", "1.25"),
            (".5", "0.5"),
            ("2", "2"),
        ] {
            let e: EpsFactor = lit.parse().unwrap();
            assert_eq!(e.to_string(), shown, "{lit}");
        }
        for bad in ["", "-0.1", "abc", "0.1.2", ".", "1e-3"] {
            assert!(bad.parse::<EpsFactor>().is_err(), "{bad}");
        }
    }

    #[test]
    fn exact_comparison() {
        let e: EpsFactor = "0.05".parse().unwrap();
        assert_eq!(e.cmp_scaled(105, 100), Ordering::Equal);
        assert_eq!(e.cmp_scaled(106, 100), Ordering::Greater);
        assert_eq!(e.cmp_scaled(104, 100), Ordering::Less);
        assert_eq!(e.inflate_floor(100), 105);
        assert_eq!(e.inflate_floor(10), 10);
    }

    #[test]
    fn ordering_and_vectors() {
        let a: EpsFactor = "0.1".parse().unwrap();
        let b: EpsFactor = "0.05".parse().unwrap();
        assert!(b < a);
        let v = Epsilon::parse("0.1,0.05").unwrap();
        assert!(!v.is_broadcast());
        assert_eq!(v.component(1), b);
        assert!(v.fits(2) && !v.fits(3));
        assert_eq!(v.to_string(), "0.1,0.05");
        assert!(Epsilon::parse("0,0.0").unwrap().is_zero());
    }
}
