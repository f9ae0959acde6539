//! Account identifiers.

use alloc::borrow::ToOwned;
use alloc::string::String;
use core::fmt;

use crate::{Error, Result};

/// An opaque account token: non-empty, no whitespace, compared by exact
/// string equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AccountId(String);

/// A vector dimension. Features are friend accounts, so the two identifier
/// spaces coincide.
pub type FeatureId = AccountId;

impl AccountId {
    /// Validates and wraps a token.
    pub fn new(token: &str) -> Result<Self> {
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::InvalidAccount(token.to_owned()));
        }
        Ok(AccountId(token.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AccountId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for AccountId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_whitespace() {
        assert!(AccountId::new("").is_err());
        assert!(AccountId::new("a b").is_err());
        assert!(AccountId::new("tab\there").is_err());
        assert!(AccountId::new("ok_handle").is_ok());
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = AccountId::new("alpha").unwrap();
        let b = AccountId::new("beta").unwrap();
        assert!(a < b);
    }
}
