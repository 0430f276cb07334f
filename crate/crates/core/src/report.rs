use serde::Serialize;

/// Both sides of an identity, evaluated and compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub witnesses: Vec<String>,
}

impl IdentityCheck {
    pub fn new(name: &str, lhs: impl ToString, rhs: impl ToString) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        IdentityCheck {
            name: name.to_string(),
            equal: lhs == rhs,
            lhs,
            rhs,
            witnesses: Vec::new(),
        }
    }

    /// Overrides the string comparison, for identities whose sides are
    /// displayed differently from how they are compared.
    pub fn with_equal(mut self, equal: bool) -> Self {
        self.equal = equal;
        self
    }

    pub fn with_witnesses(mut self, witnesses: Vec<String>) -> Self {
        self.witnesses = witnesses;
        self
    }
}
