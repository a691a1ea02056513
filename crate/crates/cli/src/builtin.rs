//! Built-in quandle specs.
//!
//! ```text
//! spec  := trivial:N | dihedral:N | affine:N:ALPHA
//!        | conj:GROUP | core:GROUP | alexander:GROUP:K
//!        | product:spec+spec[+spec..]
//! GROUP := FACTOR[xFACTOR..] | @path/to/group.json
//! FACTOR:= ZN | SN          (cyclic of order N, symmetric on N ≤ 5 points)
//! ```
//!
//! `alexander:GROUP:K` uses the power map `x ↦ x^K`, which must be an
//! automorphism.

use quandle_order::algebra::{cyclic_group, direct_product, symmetric_group, FiniteGroup, GroupAutomorphism};
use quandle_order::quandle::{
    affine_quandle, conj_quandle, core_quandle, dihedral_quandle, generalized_alexander_quandle,
    product_quandle, trivial_quandle, FiniteQuandle,
};

use crate::formats::{parse_input, Structure};
use crate::CliError;

const MAX_BUILTIN_ORDER: usize = 4096;

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.parse().map_err(|_| CliError::Parse(format!("bad {what} '{s}'")))
}

fn positive(s: &str) -> Result<usize, CliError> {
    let n: usize = parse_num(s, "size")?;
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(CliError::Parse(format!("size must lie in 1..={MAX_BUILTIN_ORDER}, got {n}")));
    }
    Ok(n)
}

pub fn parse_group(spec: &str) -> Result<FiniteGroup, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        return match parse_input(&text)? {
            Structure::Group(g) => Ok(g),
            Structure::Quandle { .. } => Err(CliError::Parse(format!("{path} holds a quandle, not a group"))),
        };
    }
    let mut group: Option<FiniteGroup> = None;
    for factor in spec.split('x') {
        let g = if let Some(n) = factor.strip_prefix('Z') {
            cyclic_group(positive(n)?)
        } else if let Some(n) = factor.strip_prefix('S') {
            let k: usize = parse_num(n, "degree")?;
            if !(1..=5).contains(&k) {
                return Err(CliError::Parse(format!("symmetric group degree must lie in 1..=5, got {k}")));
            }
            symmetric_group(k)
        } else {
            return Err(CliError::Parse(format!("unknown group factor '{factor}'")));
        };
        group = Some(match group {
            None => g,
            Some(acc) => {
                if acc.order() * g.order() > MAX_BUILTIN_ORDER {
                    return Err(CliError::Parse("group too large".into()));
                }
                direct_product(&acc, &g)
            }
        });
    }
    group.ok_or_else(|| CliError::Parse("empty group spec".into()))
}

pub fn parse_builtin(spec: &str) -> Result<FiniteQuandle, CliError> {
    if let Some(rest) = spec.strip_prefix("product:") {
        let factors = rest.split('+').map(parse_builtin).collect::<Result<Vec<_>, _>>()?;
        let size = factors.iter().try_fold(1usize, |acc, q| acc.checked_mul(q.order()));
        if size.is_none_or(|s| s > MAX_BUILTIN_ORDER) {
            return Err(CliError::Parse("product too large".into()));
        }
        return Ok(product_quandle(&factors)?);
    }
    let (family, args) = spec.split_once(':').ok_or_else(|| CliError::Parse(format!("bad builtin spec '{spec}'")))?;
    match family {
        "trivial" => Ok(trivial_quandle(positive(args)?)),
        "dihedral" => Ok(dihedral_quandle(positive(args)?)),
        "affine" => {
            let (n, alpha) = args.split_once(':').ok_or_else(|| CliError::Parse("affine:N:ALPHA".into()))?;
            Ok(affine_quandle(positive(n)?, parse_num(alpha, "multiplier")?)?)
        }
        "conj" => Ok(conj_quandle(&parse_group(args)?)),
        "core" => Ok(core_quandle(&parse_group(args)?)),
        "alexander" => {
            let (group, k) = args.rsplit_once(':').ok_or_else(|| CliError::Parse("alexander:GROUP:K".into()))?;
            let g = parse_group(group)?;
            let phi = GroupAutomorphism::power_map(&g, parse_num(k, "exponent")?)?;
            Ok(generalized_alexander_quandle(&g, &phi)?)
        }
        other => Err(CliError::Parse(format!("unknown family '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_builtin("trivial:3").unwrap(), trivial_quandle(3));
        assert_eq!(parse_builtin("dihedral:3").unwrap(), dihedral_quandle(3));
        assert_eq!(parse_builtin("affine:5:2").unwrap(), affine_quandle(5, 2).unwrap());
        assert_eq!(parse_builtin("core:Z3").unwrap(), dihedral_quandle(3));
        assert_eq!(parse_builtin("conj:S3").unwrap().order(), 6);
        assert_eq!(parse_builtin("conj:Z2xZ2").unwrap(), trivial_quandle(4));
        assert_eq!(parse_builtin("alexander:Z5:2").unwrap(), affine_quandle(5, 2).unwrap());
        assert_eq!(parse_builtin("product:trivial:2+dihedral:3").unwrap().order(), 6);
    }

    #[test]
    fn rejects_bad_specs() {
        for spec in ["trivial", "trivial:0", "cyclic:3", "affine:4:2", "conj:Q8", "alexander:S3:2", "conj:S9"] {
            assert!(parse_builtin(spec).is_err(), "{spec}");
        }
        assert!(matches!(parse_builtin("affine:4:2"), Err(CliError::Invalid(_))));
    }
}
