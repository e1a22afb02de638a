//! Family scans: one row per function, computed in parallel, emitted in
//! deterministic input order.

use boolfun::{catalog, FieldContext, VectorialFunction};
use clap::ValueEnum;
use rayon::prelude::*;

use crate::error::CliResult;
use crate::report::{vectorial_row, vectorial_row_header, VectorialAnalysis};

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Family {
    /// Every power map x^d over GF(2^n), d = 0 .. 2^n - 1
    Power,
    /// Seeded uniform lookup tables; row i uses seed + i
    RandomLut,
    /// Every catalog entry at the given dimension
    CatalogAll,
}

pub fn run(family: Family, n: u32, count: u64, seed: u64) -> CliResult<String> {
    let specs: Vec<(String, VectorialFunction)> = match family {
        Family::Power => {
            let ctx = FieldContext::new(n)?;
            (0..ctx.order())
                .map(|d| Ok((d.to_string(), VectorialFunction::from_power(&ctx, d)?)))
                .collect::<CliResult<_>>()?
        }
        Family::RandomLut => (0..count)
            .map(|i| {
                let row_seed = seed + i;
                Ok((row_seed.to_string(), catalog::random_lut(n, row_seed)?))
            })
            .collect::<CliResult<_>>()?,
        Family::CatalogAll => catalog::entries_for_dimension(n)?
            .into_iter()
            .map(|e| (e.name, e.function))
            .collect(),
    };

    let rows: Vec<String> = specs
        .par_iter()
        .map(|(id, f)| {
            let analysis = VectorialAnalysis::compute(f)?;
            Ok(vectorial_row(id, f, &analysis))
        })
        .collect::<CliResult<_>>()?;

    let mut out = vectorial_row_header();
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}
