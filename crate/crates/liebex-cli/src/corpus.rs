//! Example files bundled into the binary.

use liebex::liecore::LieBialgebra;

use crate::files::{bialgebra_from_file, BialgebraFile};
use crate::CliError;

/// What kind of file a bundled example holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// A bialgebra file (usable wherever a base is expected).
    Bialgebra,
    /// A flag-datum file.
    Flag,
}

impl EntryKind {
    /// Lowercase label for listings.
    pub fn label(self) -> &'static str {
        match self {
            EntryKind::Bialgebra => "bialgebra",
            EntryKind::Flag => "flag",
        }
    }
}

/// A named bundled example.
pub struct Entry {
    pub name: &'static str,
    pub kind: EntryKind,
    pub text: &'static str,
}

/// All bundled examples, in listing order.
pub const ENTRIES: &[Entry] = &[
    Entry {
        name: "abelian-1",
        kind: EntryKind::Bialgebra,
        text: include_str!("../../../corpus/abelian-1.json"),
    },
    Entry {
        name: "abelian-2",
        kind: EntryKind::Bialgebra,
        text: include_str!("../../../corpus/abelian-2.json"),
    },
    Entry {
        name: "abelian-3",
        kind: EntryKind::Bialgebra,
        text: include_str!("../../../corpus/abelian-3.json"),
    },
    Entry {
        name: "heisenberg",
        kind: EntryKind::Bialgebra,
        text: include_str!("../../../corpus/heisenberg.json"),
    },
    Entry {
        name: "heisenberg-flag-a",
        kind: EntryKind::Flag,
        text: include_str!("../../../corpus/heisenberg-flag-a.json"),
    },
    Entry {
        name: "heisenberg-flag-b",
        kind: EntryKind::Flag,
        text: include_str!("../../../corpus/heisenberg-flag-b.json"),
    },
    Entry {
        name: "heisenberg-flag-c",
        kind: EntryKind::Flag,
        text: include_str!("../../../corpus/heisenberg-flag-c.json"),
    },
    Entry {
        name: "sl2-trivial",
        kind: EntryKind::Bialgebra,
        text: include_str!("../../../corpus/sl2-trivial.json"),
    },
];

/// Look up a bundled example by name.
pub fn find(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Parse a bundled bialgebra example.
pub fn bialgebra(name: &str) -> Result<LieBialgebra, CliError> {
    let entry = find(name).ok_or_else(|| {
        CliError::Shape(format!("no bundled example is named `{name}`"))
    })?;
    if entry.kind != EntryKind::Bialgebra {
        return Err(CliError::Shape(format!(
            "bundled example `{name}` is a {} file, not a bialgebra",
            entry.kind.label()
        )));
    }
    let file: BialgebraFile = serde_json::from_str(entry.text)
        .unwrap_or_else(|e| panic!("bundled example `{name}` is malformed: {e}"));
    bialgebra_from_file(&file)
}
