//! The `C_t` chain of 3.5-dimensional codes, one row per `t = n − d`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::bounds::classify;
use crate::code::{AdditiveCode, CodeParams};
use crate::construct::{combination_x, generalized_x, one_third_minus, SplitCode};
use crate::error::{invalid, Error, Result};

use super::matrices::{embedded_matrix, EmbeddedName};
use super::table1::{build_family, FamilyParams};

/// Dimension (doubled) of every code in the chain.
pub const CHAIN_DIM2: usize = 7;
pub const T_RANGE: std::ops::RangeInclusive<usize> = 3..=62;

/// How a row's longest code is obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// Known from outside sources only; no matrix is produced.
    External {
        source: &'static str,
    },
    Family {
        id: u8,
        params: FamilyParams,
    },
    Embedded(EmbeddedName),
    /// The longest code of another row.
    Ct(usize),
    OneThirdMinus {
        k: usize,
        k2: usize,
    },
    Juxtapose(Vec<Recipe>),
    Extend(Box<Recipe>),
    Puncture {
        inner: Box<Recipe>,
        count: usize,
    },
    CombinationX {
        aux: Box<Recipe>,
        s: usize,
    },
    /// Juxtaposition of two codes whose first `head` rows lie outside the subcode.
    GeneralizedX {
        c1: Box<Recipe>,
        c2: Box<Recipe>,
        head: usize,
    },
}

impl Recipe {
    pub fn is_external(&self) -> bool {
        matches!(self, Recipe::External { .. })
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::External { source } => write!(f, "EXTERNAL ({source})"),
            Recipe::Family { id, params } => {
                write!(f, "family {id} (k={}", params.k)?;
                if params.k2 > 0 {
                    write!(f, ", k1={}, k2={}", params.k1, params.k2)?;
                }
                if matches!(id, 3 | 4) {
                    write!(f, ", m={}", params.m)?;
                }
                f.write_str(")")
            }
            Recipe::Embedded(name) => write!(f, "{name}"),
            Recipe::Ct(t) => write!(f, "C{t}"),
            Recipe::OneThirdMinus { k, k2 } => write!(f, "one_third_minus({k},{k2})"),
            Recipe::Juxtapose(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Recipe::Extend(r) => write!(f, "extend {r}"),
            Recipe::Puncture { inner, count } => write!(f, "puncture({inner}, {count})"),
            Recipe::CombinationX { aux, s } => write!(f, "combination_x({aux}, s={s})"),
            Recipe::GeneralizedX { c1, c2, head } => {
                write!(f, "generalized_x({c1}, {c2}, head={head})")
            }
        }
    }
}

/// One row of the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtRow {
    pub t: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub recipe: Recipe,
}

impl CtRow {
    pub fn lengths(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }

    /// Row number used when the table is printed; it runs two ahead from `t = 58` on.
    pub fn label(&self) -> usize {
        if self.t >= 58 {
            self.t + 2
        } else {
            self.t
        }
    }
}

const RANGES: [(usize, usize, usize); 60] = [
    (3, 4, 7),
    (4, 8, 12),
    (5, 13, 17),
    (6, 18, 22),
    (7, 23, 25),
    (8, 26, 32),
    (9, 33, 35),
    (10, 36, 40),
    (11, 41, 43),
    (12, 44, 46),
    (13, 47, 51),
    (14, 52, 54),
    (15, 55, 59),
    (16, 60, 64),
    (17, 65, 67),
    (18, 68, 72),
    (19, 73, 75),
    (20, 76, 80),
    (21, 81, 85),
    (22, 86, 86),
    (23, 87, 91),
    (24, 92, 96),
    (25, 97, 101),
    (26, 102, 106),
    (27, 107, 107),
    (28, 108, 112),
    (29, 113, 117),
    (30, 118, 122),
    (31, 123, 127),
    (32, 128, 128),
    (33, 129, 133),
    (34, 134, 138),
    (35, 139, 141),
    (36, 142, 146),
    (37, 147, 149),
    (38, 150, 154),
    (39, 155, 159),
    (40, 160, 162),
    (41, 163, 167),
    (42, 168, 170),
    (43, 171, 173),
    (44, 174, 178),
    (45, 179, 181),
    (46, 182, 186),
    (47, 187, 191),
    (48, 192, 194),
    (49, 195, 199),
    (50, 200, 202),
    (51, 203, 207),
    (52, 208, 212),
    (53, 213, 213),
    (54, 214, 218),
    (55, 219, 223),
    (56, 224, 228),
    (57, 229, 233),
    (58, 234, 234),
    (59, 235, 239),
    (60, 240, 244),
    (61, 245, 249),
    (62, 250, 254),
];

fn ct(t: usize) -> Recipe {
    Recipe::Ct(t)
}

fn jux(ts: &[usize]) -> Recipe {
    Recipe::Juxtapose(ts.iter().map(|&t| ct(t)).collect())
}

fn extend(t: usize) -> Recipe {
    Recipe::Extend(Box::new(ct(t)))
}

fn family(id: u8, params: FamilyParams) -> Recipe {
    Recipe::Family { id, params }
}

fn recipe_for(t: usize) -> Recipe {
    let k = FamilyParams::with_k;
    let a16_with = |c2: Recipe| Recipe::GeneralizedX {
        c1: Box::new(Recipe::Embedded(EmbeddedName::A16)),
        c2: Box::new(c2),
        head: 1,
    };
    match t {
        3 | 4 => Recipe::External {
            source: "classification of short additive codes",
        },
        5 => Recipe::External {
            source: "best-known additive code tables",
        },
        6 | 7 | 12 => Recipe::External {
            source: "no construction listed",
        },
        13 => Recipe::External {
            source: "computer classification of short additive codes",
        },
        8 => family(2, k(5)),
        9 => family(6, FamilyParams::split(3, 4)),
        10 => family(5, FamilyParams::split(3, 4)),
        11 => family(7, k(7)),
        14 => a16_with(Recipe::OneThirdMinus { k: 7, k2: 4 }),
        15 => a16_with(family(7, k(7))),
        16 => jux(&[8, 8]),
        17 => jux(&[8, 9]),
        18 => jux(&[8, 10]),
        19 => jux(&[8, 11]),
        20 => jux(&[10, 10]),
        21 => {
            let seed = Recipe::Puncture {
                inner: Box::new(family(1, k(3))),
                count: 2,
            };
            let inner = Recipe::CombinationX {
                aux: Box::new(seed),
                s: 2,
            };
            Recipe::CombinationX {
                aux: Box::new(inner),
                s: 2,
            }
        }
        22 => extend(21),
        23 => jux(&[8, 15]),
        24 => jux(&[8, 8, 8]),
        25 => family(10, FamilyParams::split(3, 4)),
        26 => family(9, k(7)),
        27 => extend(26),
        28 => family(4, FamilyParams::blocks(3, 4, 3)),
        29 => family(4, FamilyParams::blocks(3, 4, 2)),
        30 => family(3, FamilyParams::split(3, 4)),
        31 => family(1, k(7)),
        32 => extend(31),
        33 => jux(&[8, 25]),
        34 => jux(&[8, 26]),
        35 => jux(&[10, 25]),
        36 => jux(&[10, 26]),
        37 => jux(&[11, 26]),
        38 => jux(&[8, 30]),
        39 => jux(&[8, 31]),
        40 => jux(&[9, 31]),
        41 => jux(&[10, 31]),
        42 => jux(&[11, 31]),
        43 => jux(&[8, 35]),
        44 => jux(&[8, 36]),
        45..=62 => jux(&[t - 31, 31]),
        _ => unreachable!("t checked by caller"),
    }
}

fn check_t(t: usize) -> Result<()> {
    if !T_RANGE.contains(&t) {
        return Err(invalid(format!(
            "t={t} outside {}..={}",
            T_RANGE.start(),
            T_RANGE.end()
        )));
    }
    Ok(())
}

pub fn ct_row(t: usize) -> Result<CtRow> {
    check_t(t)?;
    let &(_, n_min, n_max) = RANGES
        .iter()
        .find(|r| r.0 == t)
        .expect("every t has a range");
    Ok(CtRow {
        t,
        n_min,
        n_max,
        recipe: recipe_for(t),
    })
}

pub fn ct_rows() -> Vec<CtRow> {
    T_RANGE.map(|t| ct_row(t).expect("t in range")).collect()
}

/// Looks a row up by its printed label.
pub fn ct_row_by_label(label: usize) -> Result<CtRow> {
    ct_rows()
        .into_iter()
        .find(|r| r.label() == label)
        .ok_or_else(|| invalid(format!("no row labelled C{label}")))
}

/// Evaluates recipes, caching the longest code of every row it touches.
#[derive(Default)]
pub struct ChainBuilder {
    cache: HashMap<usize, AdditiveCode>,
}

impl ChainBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// The longest code of row `t`, or `None` for external rows.
    pub fn longest(&mut self, t: usize) -> Result<Option<AdditiveCode>> {
        if let Some(c) = self.cache.get(&t) {
            return Ok(Some(c.clone()));
        }
        let row = ct_row(t)?;
        if row.recipe.is_external() {
            return Ok(None);
        }
        let code = self.eval(&row.recipe)?;
        self.cache.insert(t, code.clone());
        Ok(Some(code))
    }

    pub fn eval(&mut self, r: &Recipe) -> Result<AdditiveCode> {
        Ok(match r {
            Recipe::External { .. } => {
                return Err(invalid("external rows carry no generator matrix"))
            }
            Recipe::Family { id, params } => build_family(*id, params)?,
            Recipe::Embedded(name) => embedded_matrix(*name),
            Recipe::Ct(t) => self
                .longest(*t)?
                .ok_or_else(|| invalid(format!("C{t} is external")))?,
            Recipe::OneThirdMinus { k, k2 } => one_third_minus(*k, *k2)?,
            Recipe::Juxtapose(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| invalid("empty juxtaposition"))?;
                let mut acc = self.eval(first)?;
                for p in it {
                    acc = acc.juxtapose(&self.eval(p)?)?;
                }
                acc
            }
            Recipe::Extend(inner) => self.eval(inner)?.extend_parity(),
            Recipe::Puncture { inner, count } => self.eval(inner)?.puncture_last(*count)?,
            Recipe::CombinationX { aux, s } => combination_x(&self.eval(aux)?, *s)?,
            Recipe::GeneralizedX { c1, c2, head } => {
                let c1 = SplitCode::new(self.eval(c1)?, *head);
                let c2 = SplitCode::new(self.eval(c2)?, *head);
                generalized_x(&c1, &c2, &AdditiveCode::null(CHAIN_DIM2))?
            }
        })
    }
}

/// One length within a row.
#[derive(Clone, Debug)]
pub struct CtEntry {
    pub n: usize,
    pub expected: CodeParams,
    /// `None` for external rows.
    pub code: Option<AdditiveCode>,
}

#[derive(Clone, Debug)]
pub struct CtBuild {
    pub row: CtRow,
    pub entries: Vec<CtEntry>,
}

/// Builds every length of row `t`: the recipe at the longest length, then
/// successive punctures of the last coordinate.
pub fn build_ct(t: usize) -> Result<CtBuild> {
    build_ct_with(&mut ChainBuilder::new(), t)
}

pub fn build_ct_with(builder: &mut ChainBuilder, t: usize) -> Result<CtBuild> {
    let row = ct_row(t)?;
    let longest = builder.longest(t)?;
    if let Some(c) = &longest {
        if c.n() != row.n_max || c.dim2() != CHAIN_DIM2 {
            return Err(Error::Shape(format!(
                "C{t} recipe gave length {} and dim2 {}, expected {} and {CHAIN_DIM2}",
                c.n(),
                c.dim2(),
                row.n_max
            )));
        }
    }
    let mut entries = Vec::new();
    for n in row.lengths().rev() {
        let code = match &longest {
            Some(c) => Some(c.puncture_last(row.n_max - n)?),
            None => None,
        };
        entries.push(CtEntry {
            n,
            expected: CodeParams::new(n, CHAIN_DIM2, n - t),
            code,
        });
    }
    Ok(CtBuild { row, entries })
}

/// Enumerated check of one row.
#[derive(Clone, Debug, Serialize)]
pub struct CtCheck {
    pub t: usize,
    pub label: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub recipe: String,
    pub external: bool,
    /// Observed distance at each length, longest first; empty for external rows.
    pub distances: Vec<(usize, usize)>,
    pub distances_ok: bool,
    pub gpo: bool,
    pub gdo: bool,
}

impl CtCheck {
    pub fn passed(&self) -> bool {
        self.external || (self.distances_ok && self.gpo)
    }
}

pub fn verify_ct(builder: &mut ChainBuilder, t: usize) -> Result<CtCheck> {
    let b = build_ct_with(builder, t)?;
    let mut distances = Vec::new();
    for e in &b.entries {
        if let Some(c) = &e.code {
            let d = c.min_distance()?.unwrap_or(0);
            distances.push((e.n, d));
        }
    }
    let distances_ok = distances.iter().all(|&(n, d)| d + t == n);
    let class = classify(b.row.n_max, CHAIN_DIM2, b.row.n_max - t)?;
    Ok(CtCheck {
        t,
        label: b.row.label(),
        n_min: b.row.n_min,
        n_max: b.row.n_max,
        recipe: b.row.recipe.to_string(),
        external: b.row.recipe.is_external(),
        distances,
        distances_ok,
        gpo: class.gpo,
        gdo: class.gdo,
    })
}
