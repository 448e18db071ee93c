use serde::Serialize;

/// Outcome of a decision procedure.
///
/// Every negative answer carries the counterexample that refutes the
/// property. `Trivial` is reserved for the one-point quantale, where the
/// Jacobson radical and the maximal spectrum are undefined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
    Trivial,
}

impl<W> Verdict<W> {
    pub fn from_witness(witness: Option<W>) -> Self {
        match witness {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Verdict::Trivial)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    /// `Some(true)` / `Some(false)` for decided verdicts, `None` when trivial.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails(_) => Some(false),
            Verdict::Trivial => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(f(w)),
            Verdict::Trivial => Verdict::Trivial,
        }
    }
}
