use crate::error::{Error, Result};

/// Limits on the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Subspace enumeration over GF(q)ⁿ runs only while n·log₂q stays within this.
    pub max_enum_bits: u32,
    /// Largest dimension handed to the brute-force isomorphism search.
    pub iso_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_enum_bits: 16, iso_cap: 3 }
    }
}

impl Budget {
    pub fn check_enumeration(&self, ambient_dim: usize, q: u64) -> Result<()> {
        let bits = ambient_dim as f64 * (q as f64).log2();
        if bits > self.max_enum_bits as f64 + 1e-9 {
            return Err(Error::BudgetExceeded(format!(
                "enumerating subspaces of GF({q})^{ambient_dim} needs {bits:.1} bits, budget is {}",
                self.max_enum_bits
            )));
        }
        Ok(())
    }

    /// Parses overrides of the form `max_enum_bits=20,iso_cap=4` on top of `self`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::parse(0, format!("budget entry `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::parse(0, format!("budget value `{value}` is not a number")))?;
            if value == 0 {
                return Err(Error::parse(0, format!("budget `{key}` must be positive")));
            }
            match key.trim() {
                "max_enum_bits" | "max-enum-bits" => self.max_enum_bits = value as u32,
                "iso_cap" | "iso-cap" => self.iso_cap = value,
                other => return Err(Error::Unknown { kind: "budget key", name: other.into() }),
            }
        }
        Ok(self)
    }

    /// Default budget adjusted by the `NONASSOC_BUDGET` environment variable.
    pub fn from_env() -> Result<Self> {
        match std::env::var("NONASSOC_BUDGET") {
            Ok(spec) => Budget::default().with_overrides(&spec),
            Err(_) => Ok(Budget::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let b = Budget::default().with_overrides("iso_cap=4, max_enum_bits=20").unwrap();
        assert_eq!(b, Budget { max_enum_bits: 20, iso_cap: 4 });
        assert!(Budget::default().with_overrides("iso_cap=0").is_err());
        assert!(Budget::default().with_overrides("nope=1").is_err());
    }

    #[test]
    fn enumeration_gate() {
        let b = Budget::default();
        assert!(b.check_enumeration(16, 2).is_ok());
        assert!(b.check_enumeration(17, 2).is_err());
        assert!(b.check_enumeration(4, 3).is_ok());
    }
}
