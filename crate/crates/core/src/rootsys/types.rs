use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::RootError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    fn rank_constraint(self, rank: usize) -> Result<(), &'static str> {
        let ok = match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            return Ok(());
        }
        Err(match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 4",
            Family::E => "n in {6, 7, 8}",
            Family::F => "n = 4",
            Family::G => "n = 2",
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootError::UnknownFamily(s.to_string())),
        }
    }
}

/// A validated Cartan type such as `B4` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootType {
    family: Family,
    rank: usize,
}

impl RootType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        family.rank_constraint(rank).map_err(|constraint| RootError::InvalidRank { family, rank, constraint })?;
        Ok(RootType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn num_positive(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Every valid type with rank at most `max_rank`, in (family, rank) order.
    pub fn all_up_to(max_rank: usize) -> Vec<RootType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = RootType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootType {
    type Err = RootError;
    /// Parses `"E8"`, `"b3"`, …
    fn from_str(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let Some(first) = s.chars().next() else {
            return Err(RootError::UnknownFamily(s.to_string()));
        };
        let family: Family = first.to_string().parse()?;
        let rank: usize = s[first.len_utf8()..].parse().map_err(|_| RootError::UnknownFamily(s.to_string()))?;
        RootType::new(family, rank)
    }
}
