// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The seven card sections, in the order they appear in a card.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Section {
    Overview,
    IntendedUse,
    UsageDetails,
    PerformanceMetrics,
    Limitations,
    References,
    Caveats,
}

impl Section {
    pub const ALL: [Section; 7] = [
        Section::Overview,
        Section::IntendedUse,
        Section::UsageDetails,
        Section::PerformanceMetrics,
        Section::Limitations,
        Section::References,
        Section::Caveats,
    ];

    /// The JSON key of the section.
    pub fn key(self) -> &'static str {
        match self {
            Section::Overview => "overview",
            Section::IntendedUse => "intended_use",
            Section::UsageDetails => "usage_details",
            Section::PerformanceMetrics => "performance_metrics",
            Section::Limitations => "limitations",
            Section::References => "references",
            Section::Caveats => "caveats",
        }
    }

    /// The heading used in rendered documents.
    pub fn title(self) -> &'static str {
        match self {
            Section::Overview => "Overview",
            Section::IntendedUse => "Intended use",
            Section::UsageDetails => "Usage details",
            Section::PerformanceMetrics => "Performance metrics",
            Section::Limitations => "Limitations",
            Section::References => "References",
            Section::Caveats => "Caveats",
        }
    }

    /// Which readers the section is written for.
    pub fn audiences(self) -> &'static [Audience] {
        use Audience::*;
        match self {
            Section::Overview => &[Technology, Developers, Operations],
            Section::IntendedUse => &[Technology],
            Section::UsageDetails => &[Developers, Operations],
            Section::PerformanceMetrics => &[Technology, Operations],
            Section::Limitations => &[Technology, Developers],
            Section::References => &[Technology, Developers],
            Section::Caveats => &[Developers],
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Card readers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Audience {
    /// Technology management and architects.
    #[serde(rename = "T")]
    Technology,
    /// Software developers.
    #[serde(rename = "D")]
    Developers,
    /// Operations.
    #[serde(rename = "O")]
    Operations,
}

impl Audience {
    pub const ALL: [Audience; 3] = [
        Audience::Technology,
        Audience::Developers,
        Audience::Operations,
    ];

    pub fn letter(self) -> char {
        match self {
            Audience::Technology => 'T',
            Audience::Developers => 'D',
            Audience::Operations => 'O',
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Audience::Technology => "technology management and architects",
            Audience::Developers => "software developers",
            Audience::Operations => "operations",
        }
    }
}

impl fmt::Display for Audience {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown audience {0:?}, expected one of T, D, O")]
pub struct ParseAudienceError(pub String);

impl FromStr for Audience {
    type Err = ParseAudienceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" | "t" => Ok(Audience::Technology),
            "D" | "d" => Ok(Audience::Developers),
            "O" | "o" => Ok(Audience::Operations),
            other => Err(ParseAudienceError(other.to_string())),
        }
    }
}

/// The sections written for `audience`, in card order.
pub fn audience_sections(audience: Audience) -> Vec<Section> {
    Section::ALL
        .into_iter()
        .filter(|s| s.audiences().contains(&audience))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn union_of_audiences_covers_every_section() {
        let union: BTreeSet<Section> = Audience::ALL
            .into_iter()
            .flat_map(audience_sections)
            .collect();
        assert_eq!(union.len(), 7);
        for a in Audience::ALL {
            assert_eq!(audience_sections(a)[0], Section::Overview);
        }
    }

    #[test]
    fn audience_letters_parse() {
        for a in Audience::ALL {
            assert_eq!(a.to_string().parse::<Audience>().unwrap(), a);
        }
        assert!("X".parse::<Audience>().is_err());
    }
}
