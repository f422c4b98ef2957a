use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GroupElem, GroupError};

/// A word in named generators, e.g. `R^2M^3` or `RM^4N`; `Id` is the empty
/// word. Negative exponents denote inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<(String, i32)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord { letters: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "Id" || s.is_empty() {
            return Ok(Self::identity());
        }
        let bad = || GroupError::WordParse(text.to_string());
        let chars: Vec<char> = s.chars().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            if !chars[i].is_ascii_uppercase() {
                return Err(bad());
            }
            let mut name = chars[i].to_string();
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit()) {
                name.push(chars[i]);
                i += 1;
            }
            let mut exp = 1i32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                exp = digits.parse().map_err(|_| bad())?;
            }
            letters.push((name, exp));
        }
        Ok(GroupWord { letters })
    }

    pub fn letters(&self) -> &[(String, i32)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|(_, e)| *e == 0)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "Id");
        }
        for (name, e) in &self.letters {
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for GroupWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GroupWord::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Left-to-right product of the letters of `w`.
pub fn eval_word<G: GroupElem>(
    w: &GroupWord,
    assignment: &HashMap<String, G>,
    identity: &G,
) -> Result<G, GroupError> {
    let mut acc = identity.clone();
    for (name, e) in &w.letters {
        let g = assignment.get(name).ok_or_else(|| GroupError::UnboundLetter(name.clone()))?;
        let base = if *e < 0 { g.inverse() } else { g.clone() };
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base);
        }
    }
    Ok(acc)
}
