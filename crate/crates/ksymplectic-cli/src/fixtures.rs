//! Built-in spaces addressable by name, so the worked examples need no
//! input files.

use ksymplectic::kspace::fixtures;
use ksymplectic::KSymplecticSpace;

use crate::CliError;

/// Names: `r3-2symp`, `r6-2symp`, `r6-5symp`, `canonical:n,k`.
pub fn resolve(name: &str) -> Result<KSymplecticSpace, CliError> {
    match name {
        "r3-2symp" => Ok(fixtures::r3_2symp()),
        "r6-2symp" => Ok(fixtures::r6_2symp()),
        "r6-5symp" => Ok(fixtures::r6_5symp()),
        other => {
            if let Some(params) = other.strip_prefix("canonical:") {
                let mut parts = params.splitn(2, ',');
                let n = parts
                    .next()
                    .and_then(|s| s.trim().parse::<usize>().ok())
                    .filter(|&n| n >= 1);
                let k = parts
                    .next()
                    .and_then(|s| s.trim().parse::<usize>().ok())
                    .filter(|&k| k >= 1);
                match (n, k) {
                    (Some(n), Some(k)) => Ok(KSymplecticSpace::canonical(n, k)),
                    _ => Err(CliError::Schema(format!(
                        "fixture {other:?}: expected canonical:n,k with n, k >= 1"
                    ))),
                }
            } else {
                Err(CliError::Schema(format!(
                    "unknown fixture {name:?}; available: r3-2symp, r6-2symp, r6-5symp, canonical:n,k"
                )))
            }
        }
    }
}
