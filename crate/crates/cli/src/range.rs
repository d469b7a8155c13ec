use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// Inclusive `lo:hi` range of a grid parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridRange {
    pub lo: u32,
    pub hi: u32,
}

impl GridRange {
    pub fn as_range(&self) -> RangeInclusive<u32> {
        self.lo..=self.hi
    }
}

impl fmt::Display for GridRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

impl FromStr for GridRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_range(s)
    }
}

/// Parses `lo:hi` (inclusive). A single integer `k` means `k:k`.
pub fn parse_range(s: &str) -> Result<GridRange, String> {
    let (lo, hi) = match s.split_once(':') {
        Some((lo, hi)) => (lo.trim(), hi.trim()),
        None => (s.trim(), s.trim()),
    };
    let parse = |t: &str| {
        t.parse::<u32>()
            .map_err(|_| format!("invalid range bound {t:?} in {s:?}; expected lo:hi"))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok(GridRange { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!(parse_range("2:12"), Ok(GridRange { lo: 2, hi: 12 }));
        assert_eq!(parse_range("3"), Ok(GridRange { lo: 3, hi: 3 }));
        assert_eq!(parse_range("12:2").unwrap_err(), "empty range 12:2");
        assert!(parse_range("a:2").is_err());
        assert!(parse_range("2:").is_err());
        assert_eq!(GridRange { lo: 1, hi: 4 }.to_string(), "1:4");
    }
}
