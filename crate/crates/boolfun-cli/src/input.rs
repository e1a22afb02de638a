//! Input resolution: each command accepts exactly one function source and
//! turns it into a scalar or vectorial function plus provenance lines for
//! the report.

use std::fs;
use std::path::PathBuf;

use boolfun::catalog;
use boolfun::{BooleanFunction, FieldContext, VectorialFunction};
use clap::Args;

use crate::error::{CliError, CliResult};

#[derive(Args, Debug)]
pub struct InputSpec {
    /// Truth table: a 0/1 string (length a power of two) or a file holding one
    #[arg(long, group = "input", value_name = "BITS|FILE")]
    pub tt: Option<String>,

    /// Lookup table file: 2^n whitespace-separated integers, optional n=<k> header
    #[arg(long, group = "input", value_name = "FILE")]
    pub lut: Option<PathBuf>,

    /// Power map over GF(2^n): n=<dim>,d=<exponent>
    #[arg(long, group = "input", value_name = "SPEC")]
    pub power: Option<String>,

    /// Univariate polynomial over GF(2^n): n=<dim>,c=<c0:c1:...> (degree ascending)
    #[arg(long, group = "input", value_name = "SPEC")]
    pub univariate: Option<String>,

    /// Catalog entry: full name like gold(6,1) or dillon, or a family name with --n
    #[arg(long, group = "input", value_name = "NAME")]
    pub catalog: Option<String>,

    /// Dimension, for catalog families named without parameters
    #[arg(long)]
    pub n: Option<u32>,

    /// Exponent parameter, for catalog families named without parameters
    #[arg(long)]
    pub k: Option<u32>,

    /// Field modulus override for --power/--univariate (decimal or 0x-hex)
    #[arg(long, value_name = "MASK")]
    pub poly: Option<String>,
}

pub enum Function {
    Scalar(BooleanFunction),
    Vectorial(VectorialFunction),
}

pub struct Loaded {
    pub function: Function,
    /// Ordered provenance entries rendered under `input.` in reports.
    pub provenance: Vec<(String, String)>,
}

pub fn parse_uint(text: &str) -> CliResult<u64> {
    let text = text.trim();
    let parsed = if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16)
    } else {
        text.parse()
    };
    parsed.map_err(|_| CliError::Input(format!("invalid integer `{text}`")))
}

/// Split a `key=value,key=value` spec string.
fn parse_kv(spec: &str) -> CliResult<Vec<(&str, &str)>> {
    spec.split(',')
        .map(|pair| {
            pair.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| CliError::Input(format!("expected key=value, got `{pair}`")))
        })
        .collect()
}

fn lookup_kv<'a>(pairs: &[(&'a str, &'a str)], key: &str, spec: &str) -> CliResult<&'a str> {
    pairs
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| CliError::Input(format!("spec `{spec}` is missing `{key}=`")))
}

fn field_context(n: u32, poly: &Option<String>) -> CliResult<FieldContext> {
    match poly {
        Some(mask) => Ok(FieldContext::with_modulus(n, parse_uint(mask)?)?),
        None => Ok(FieldContext::new(n)?),
    }
}

fn looks_like_inline_table(text: &str) -> bool {
    text.len() >= 2 && text.len().is_power_of_two() && text.bytes().all(|b| b == b'0' || b == b'1')
}

/// Default exponent parameter per family: gold starts at 1, kasami at the
/// smallest coprime k with 2k < n.
fn default_k(family: &str, n: u32) -> CliResult<u32> {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    match family {
        "gold" => Ok(1),
        "kasami" => (2..=n.saturating_sub(1) / 2)
            .find(|&k| gcd(k, n) == 1)
            .ok_or_else(|| {
                CliError::Input(format!("kasami has no valid exponent parameter at n = {n}"))
            }),
        _ => Ok(0),
    }
}

fn load_catalog(name: &str, n: Option<u32>, k: Option<u32>) -> CliResult<Loaded> {
    let full_name = if name.contains('(') || name == "dillon" {
        name.to_string()
    } else {
        let n = n.ok_or_else(|| {
            CliError::Input(format!("catalog family `{name}` needs --n <dimension>"))
        })?;
        match name {
            "inverse" => format!("inverse({n})"),
            "gold" | "kasami" => {
                let k = match k {
                    Some(k) => k,
                    None => default_k(name, n)?,
                };
                format!("{name}({n},{k})")
            }
            other => return Err(CliError::Input(format!("unknown catalog entry `{other}`"))),
        }
    };
    let entry = catalog::lookup(&full_name)?;
    let mut provenance = vec![
        ("kind".into(), "catalog".into()),
        ("name".into(), entry.name.clone()),
        ("n".into(), entry.n.to_string()),
    ];
    if let boolfun::Provenance::Catalog {
        modulus: Some(m), ..
    } = entry.function.provenance()
    {
        provenance.push(("modulus".into(), format!("{m:#x}")));
    }
    Ok(Loaded {
        function: Function::Vectorial(entry.function),
        provenance,
    })
}

impl InputSpec {
    pub fn load(&self) -> CliResult<Loaded> {
        if self.poly.is_some() && self.power.is_none() && self.univariate.is_none() {
            return Err(CliError::Input(
                "--poly applies only to --power or --univariate inputs".into(),
            ));
        }
        if let Some(tt) = &self.tt {
            let (text, source) = if looks_like_inline_table(tt) {
                (tt.clone(), ("source".into(), "inline".into()))
            } else {
                (fs::read_to_string(tt)?, ("file".into(), tt.clone()))
            };
            let f = BooleanFunction::parse_table(text.trim())?;
            let provenance = vec![
                ("kind".into(), "tt".into()),
                source,
                ("n".into(), f.n().to_string()),
            ];
            return Ok(Loaded {
                function: Function::Scalar(f),
                provenance,
            });
        }
        if let Some(path) = &self.lut {
            let f = VectorialFunction::parse_lut(&fs::read_to_string(path)?)?;
            let provenance = vec![
                ("kind".into(), "lut".into()),
                ("file".into(), path.display().to_string()),
                ("n".into(), f.n().to_string()),
            ];
            return Ok(Loaded {
                function: Function::Vectorial(f),
                provenance,
            });
        }
        if let Some(spec) = &self.power {
            let pairs = parse_kv(spec)?;
            let n = parse_uint(lookup_kv(&pairs, "n", spec)?)? as u32;
            let d = parse_uint(lookup_kv(&pairs, "d", spec)?)?;
            let ctx = field_context(n, &self.poly)?;
            let f = VectorialFunction::from_power(&ctx, d)?;
            let provenance = vec![
                ("kind".into(), "power".into()),
                ("n".into(), n.to_string()),
                ("d".into(), d.to_string()),
                ("modulus".into(), format!("{:#x}", ctx.modulus())),
            ];
            return Ok(Loaded {
                function: Function::Vectorial(f),
                provenance,
            });
        }
        if let Some(spec) = &self.univariate {
            let pairs = parse_kv(spec)?;
            let n = parse_uint(lookup_kv(&pairs, "n", spec)?)? as u32;
            let coeffs: Vec<u64> = lookup_kv(&pairs, "c", spec)?
                .split(':')
                .map(parse_uint)
                .collect::<CliResult<_>>()?;
            let ctx = field_context(n, &self.poly)?;
            let f = VectorialFunction::from_univariate(&ctx, &coeffs)?;
            let coeff_text = coeffs
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(":");
            let provenance = vec![
                ("kind".into(), "univariate".into()),
                ("n".into(), n.to_string()),
                ("coeffs".into(), coeff_text),
                ("modulus".into(), format!("{:#x}", ctx.modulus())),
            ];
            return Ok(Loaded {
                function: Function::Vectorial(f),
                provenance,
            });
        }
        if let Some(name) = &self.catalog {
            return load_catalog(name, self.n, self.k);
        }
        Err(CliError::Input(
            "no input given: use one of --tt, --lut, --power, --univariate, --catalog".into(),
        ))
    }
}
