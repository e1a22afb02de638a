//! Theorem verification: each selected predicate verdict is compared with an
//! independent measurement of the property it encodes (bijectivity from the
//! table, uniformity 2 from the difference table). `--oracle` swaps the
//! measurements for the definitional oracles and cross-checks the totals.

use std::fmt::Write as _;

use boolfun::metrics::check_quadratic_apn_s1;
use boolfun::{oracle, VectorialFunction};

use crate::error::{CliError, CliResult};
use crate::report::VectorialAnalysis;

pub const ALL_THEOREMS: [&str; 6] = [
    "perm-s1",
    "apn-perm-s1sq",
    "apn-s2",
    "apn-per-direction",
    "fsq",
    "quad-apn-s1",
];

pub fn parse_selectors(spec: &str) -> CliResult<Vec<&'static str>> {
    if spec.trim() == "all" {
        return Ok(ALL_THEOREMS.to_vec());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            ALL_THEOREMS
                .iter()
                .find(|t| **t == s)
                .copied()
                .ok_or_else(|| {
                    CliError::Input(format!(
                        "unknown theorem `{s}`; valid: {} or all",
                        ALL_THEOREMS.join(", ")
                    ))
                })
        })
        .collect()
}

/// Bijectivity measured without the library's permutation check: sort the
/// table and compare against the full range.
fn sorted_table_is_permutation(f: &VectorialFunction) -> bool {
    let mut values: Vec<u64> = f.lut().to_vec();
    values.sort_unstable();
    values.iter().enumerate().all(|(i, &v)| v == i as u64)
}

pub struct VerifyOutput {
    pub text: String,
    pub mismatches: usize,
}

impl VerifyOutput {
    fn line(&mut self, name: &str, consistent: bool, detail: String) {
        if consistent {
            writeln!(self.text, "theorem {name}: PASS ({detail})").unwrap();
        } else {
            writeln!(self.text, "theorem {name}: MISMATCH ({detail})").unwrap();
            self.mismatches += 1;
        }
    }

    fn cross_check(&mut self, label: &str, fast: u64, naive: boolfun::Result<u64>) {
        match naive {
            Ok(value) => self.line(label, fast == value, format!("fast {fast} vs oracle {value}")),
            Err(_) => {
                writeln!(self.text, "oracle {label}: skipped (above oracle size cap)").unwrap()
            }
        }
    }
}

pub fn run(
    f: &VectorialFunction,
    analysis: &VectorialAnalysis,
    selectors: &[&'static str],
    use_oracle: bool,
) -> CliResult<VerifyOutput> {
    let mut out = VerifyOutput {
        text: String::new(),
        mismatches: 0,
    };

    let (is_apn, apn_source) = if use_oracle {
        let (_, apn) = oracle::naive_ddt_apn(f)?;
        (apn, "difference-table oracle")
    } else {
        (analysis.is_apn(), "difference table")
    };
    let (is_perm, perm_source) = if use_oracle {
        (sorted_table_is_permutation(f), "sorted-table check")
    } else {
        (analysis.is_permutation, "table check")
    };

    let predicates = analysis.predicates(f);
    let outcome = |name: &str| {
        predicates
            .iter()
            .find(|o| o.name == name)
            .expect("predicate list covers every selector")
    };

    for &selector in selectors {
        match selector {
            "perm-s1" => {
                let o = outcome("perm-s1");
                out.line(
                    selector,
                    o.verdict == is_perm,
                    format!("verdict {} vs {perm_source} {is_perm}", o.verdict),
                );
            }
            "apn-perm-s1sq" => {
                let o = outcome("apn-perm-s1sq");
                let measured = is_perm && is_apn;
                out.line(
                    selector,
                    o.verdict == measured,
                    format!("verdict {} vs measured {measured}", o.verdict),
                );
            }
            "apn-s2" => {
                let o = outcome("apn-s2");
                out.line(
                    selector,
                    o.verdict == is_apn,
                    format!("verdict {} vs {apn_source} {is_apn}", o.verdict),
                );
            }
            "apn-per-direction" => {
                let o = outcome("apn-per-direction-s2");
                let deviating = analysis.profile.directions_below_apn_s2();
                let consistent = o.verdict == is_apn && deviating.is_empty() == is_apn;
                out.line(
                    selector,
                    consistent,
                    format!(
                        "verdict {}, {} deviating directions, vs {apn_source} {is_apn}",
                        o.verdict,
                        deviating.len()
                    ),
                );
            }
            "fsq" => {
                let global = outcome("apn-fsq");
                let per_direction = outcome("apn-per-direction-fsq");
                let consistent = global.verdict == is_apn && per_direction.verdict == is_apn;
                out.line(
                    selector,
                    consistent,
                    format!(
                        "global verdict {}, per-direction verdict {}, vs {apn_source} {is_apn}",
                        global.verdict, per_direction.verdict
                    ),
                );
            }
            "quad-apn-s1" => {
                let check = check_quadratic_apn_s1(f, &analysis.profile);
                let consistent = !check.hypotheses_hold
                    || (check.outcome.verdict && check.census_matches_split);
                let detail = if check.hypotheses_hold {
                    format!(
                        "hypotheses hold; verdict {}, census split {}",
                        check.outcome.verdict, check.census_matches_split
                    )
                } else {
                    "hypotheses do not hold; nothing to check".into()
                };
                out.line(selector, consistent, detail);
            }
            other => unreachable!("unvetted selector {other}"),
        }
    }

    if use_oracle {
        out.cross_check("oracle-vs1", analysis.profile.vs1, oracle::naive_vs1(f));
        out.cross_check(
            "oracle-vs1-sq",
            analysis.profile.vs1_sq,
            oracle::naive_vs1_sq(f),
        );
        out.cross_check("oracle-vs2", analysis.profile.vs2, oracle::naive_vs2(f));
        out.cross_check("oracle-fsq", analysis.profile.fsq, oracle::naive_fsq(f));
    }

    writeln!(
        out.text,
        "summary: {} theorems checked, {} mismatched",
        selectors.len(),
        out.mismatches
    )
    .unwrap();
    Ok(out)
}
