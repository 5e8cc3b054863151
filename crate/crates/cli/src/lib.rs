//! Library side of the `abelcodes` command: report types, commands and the
//! acceptance battery.

pub mod commands;
pub mod render;
pub mod report;
pub mod suite;

use abelcodes::{AbelianGroup, Error, GroupElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_NOT_COCYCLIC: i32 = 5;
pub const EXIT_TYPE_MISMATCH: i32 = 6;
pub const EXIT_CHARACTERISTIC: i32 = 7;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::InvalidOrder(_) | Error::NotPrime(_) | Error::AmbientMismatch { .. } => EXIT_PARSE,
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::NotCocyclic(_) => EXIT_NOT_COCYCLIC,
        Error::TypeMismatch { .. } => EXIT_TYPE_MISMATCH,
        Error::CharacteristicDividesOrder { .. } => EXIT_CHARACTERISTIC,
        _ => EXIT_OTHER,
    }
}

/// Parses `"3,1;0,2"`: elements separated by `;`, coordinates by `,`, in the
/// reference basis of `g`. Negative and oversized entries are reduced.
pub fn parse_elements(g: &AbelianGroup, spec: &str) -> Result<Vec<GroupElement>, Error> {
    let err = |reason: String| Error::Parse { spec: spec.to_string(), reason };
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Vec::new());
    }
    compact
        .split(';')
        .map(|item| {
            let coords = item
                .split(',')
                .map(|c| c.parse::<i128>().map_err(|_| err(format!("bad coordinate {c:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != g.rank() {
                return Err(err(format!(
                    "element {item:?} has {} coordinates, the basis {:?} has {}",
                    coords.len(),
                    g.generator_orders(),
                    g.rank()
                )));
            }
            g.element_from_ints(&coords)
        })
        .collect()
}
