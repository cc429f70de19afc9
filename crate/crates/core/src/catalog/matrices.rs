//! Generator matrices carried verbatim as data.

use std::fmt;
use std::str::FromStr;

use crate::code::{AdditiveCode, CodeParams};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddedName {
    A16,
    A38,
    A43,
    Eq6,
    Eq21,
}

impl EmbeddedName {
    pub const ALL: [EmbeddedName; 5] = [
        EmbeddedName::A16,
        EmbeddedName::A38,
        EmbeddedName::A43,
        EmbeddedName::Eq6,
        EmbeddedName::Eq21,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EmbeddedName::A16 => "A16",
            EmbeddedName::A38 => "A38",
            EmbeddedName::A43 => "A43",
            EmbeddedName::Eq6 => "Eq6",
            EmbeddedName::Eq21 => "Eq21",
        }
    }

    fn rows(self) -> &'static [&'static str] {
        match self {
            EmbeddedName::A16 => &A16,
            EmbeddedName::A38 => &A38,
            EmbeddedName::A43 => &A43,
            EmbeddedName::Eq6 => &EQ6,
            EmbeddedName::Eq21 => &EQ21,
        }
    }

    /// Parameters the matrix is known to have. `A16` has no stated distance.
    pub fn expected(self) -> (usize, usize, Option<usize>) {
        match self {
            EmbeddedName::A16 => (16, 7, None),
            EmbeddedName::A38 => (38, 7, Some(28)),
            EmbeddedName::A43 => (43, 7, Some(32)),
            EmbeddedName::Eq6 => (7, 3, Some(6)),
            EmbeddedName::Eq21 => (3, 3, Some(2)),
        }
    }

    pub fn expected_params(self) -> Option<CodeParams> {
        let (n, dim2, d) = self.expected();
        d.map(|d| CodeParams::new(n, dim2, d))
    }
}

impl fmt::Display for EmbeddedName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EmbeddedName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EmbeddedName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Seven rows; the lower six generate a `[16,3,12]` subcode.
const A16: [&str; 7] = [
    "00011w01wWWw10w1",
    "10010Ww1W101W1wW",
    "w00w01Ww1w0w1wW1",
    "010Ww1W101W1wW01",
    "0w01Ww1w0w1wW10w",
    "0011w01wWWw10w11",
    "00wwW0wW11Ww0Www",
];

const A38: [&str; 7] = [
    "11W0wWw11W0wWw11W0wWw11W0wWw11W0wWwwww",
    "w11W0wWw11W0wWw11W0wWw11W0wWw11W0wW101",
    "0wWw11W0wWw11W0wWw11W0wWw11W0wWw11W011",
    "111111100000001111111wwwwwwwwwwwwww000",
    "wwwwwww0000000wwwwwwwWWWWWWWWWWWWWW000",
    "00000001111111wwwwwwwwwwwwww1111111000",
    "0000000wwwwwwwWWWWWWWWWWWWWWwwwwwww000",
];

const A43: [&str; 7] = [
    "01001wWW00W111W0w0WWwW1Ww1w10www010WW1wwwww",
    "0w01w1wW11WwWWw100WW0www0W1W00110w1WwW01110",
    "0010w01w1wW11WwWWw100WW0www0W1W100w1WwW1101",
    "00w1W1wwWw0wW0W01WW10110Www11w0W11111111000",
    "000w1W1wwWw0wW0W01WW10110Www11wWwwwwwwww000",
    "1111111111111111111111111111111100000000000",
    "wwwwwwwwwwwwwwwwwwwwwwwwwwwwwwww00000000000",
];

const EQ6: [&str; 3] = ["1w0W1wW", "01w1wWW", "ww10WW1"];

const EQ21: [&str; 3] = ["www", "110", "011"];

pub fn embedded_matrix(name: EmbeddedName) -> AdditiveCode {
    AdditiveCode::parse_rows(name.rows()).expect("embedded matrices are well formed")
}

/// Looks a matrix up by its name (`A16`, `A38`, `A43`, `Eq6`, `Eq21`).
pub fn embedded_matrix_by_name(name: &str) -> Result<AdditiveCode> {
    Ok(embedded_matrix(name.parse()?))
}
