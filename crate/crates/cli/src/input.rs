//! Parsing of ray and basis references given on the command line.
//!
//! A basis is named either by its sorted ray 4-tuple (`1,2,15,16`, any
//! order accepted) or by its canonical id (`7`). Several references are
//! separated by whitespace or `;`.

use peres_core::{peres, BasisId, BasisSet, RayId, RaySet};

use crate::error::{CliError, CliResult};

fn number(token: &str, what: &str) -> CliResult<u8> {
    token
        .trim()
        .parse::<u8>()
        .map_err(|_| CliError::usage(format!("malformed {what} `{token}`")))
}

pub fn parse_basis(reference: &str) -> CliResult<BasisId> {
    let parts: Vec<&str> = reference.split(',').collect();
    match parts.len() {
        1 => {
            BasisId::new(number(parts[0], "basis id")?).map_err(|e| CliError::usage(e.to_string()))
        }
        4 => {
            let rays = parts
                .iter()
                .map(|p| number(p, "ray id"))
                .collect::<CliResult<Vec<u8>>>()?;
            peres()
                .basis_from_rays(&rays)
                .map_err(|e| CliError::usage(e.to_string()))
        }
        _ => Err(CliError::usage(format!(
            "malformed basis reference `{reference}`: expected an id or four ray ids"
        ))),
    }
}

fn references(args: &[String]) -> impl Iterator<Item = &str> {
    args.iter()
        .flat_map(|a| a.split(|c: char| c == ';' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
}

/// Between 1 and 24 distinct bases. `all` selects every basis.
pub fn parse_basis_list(args: &[String]) -> CliResult<BasisSet> {
    let refs: Vec<&str> = references(args).collect();
    if refs == ["all"] {
        return Ok(BasisSet::FULL);
    }
    if refs.is_empty() {
        return Err(CliError::usage("no bases given"));
    }
    let mut set = BasisSet::EMPTY;
    for r in refs {
        let b = parse_basis(r)?;
        if set.contains(b) {
            return Err(CliError::usage(format!("basis {r} given twice")));
        }
        set.insert(b);
    }
    Ok(set)
}

/// Ray ids separated by commas, whitespace or `;`, or `all`.
pub fn parse_ray_list(args: &[String]) -> CliResult<RaySet> {
    let tokens: Vec<&str> = args
        .iter()
        .flat_map(|a| a.split(|c: char| c == ',' || c == ';' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .collect();
    if tokens == ["all"] {
        return Ok(RaySet::FULL);
    }
    if tokens.is_empty() {
        return Err(CliError::usage("no rays given"));
    }
    let mut set = RaySet::EMPTY;
    for t in tokens {
        let r = RayId::new(number(t, "ray id")?).map_err(|e| CliError::usage(e.to_string()))?;
        if set.contains(r) {
            return Err(CliError::usage(format!("ray {t} given twice")));
        }
        set.insert(r);
    }
    Ok(set)
}
