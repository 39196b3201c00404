use std::io::Write;

use icg_core::{BigRational, DeltaVector, PAdicRational};
use serde::Serialize;
use serde_json::Value;

pub const FORMAT_VERSION: &str = "1";

/// Exact rational with a rounded decimal rendering.
#[derive(Debug, Clone, Serialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
    pub decimal: String,
    pub digits: u32,
}

impl Rational {
    pub fn new(x: &BigRational, digits: u32) -> Self {
        Rational {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
            decimal: icg_core::to_decimal(x, digits),
            digits,
        }
    }

    pub fn padic(x: &PAdicRational, digits: u32) -> Self {
        Self::new(&x.to_rational(), digits)
    }
}

pub fn entries(d: &DeltaVector) -> Vec<u32> {
    d.entries().to_vec()
}

#[derive(Debug, Serialize)]
pub struct Instance {
    pub p: u64,
    pub s: u32,
    pub r: u32,
}

impl From<&icg_core::ProblemInstance> for Instance {
    fn from(i: &icg_core::ProblemInstance) -> Self {
        Instance {
            p: i.p(),
            s: i.s(),
            r: i.r(),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Provenance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub justification: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates_examined: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub version: &'static str,
    pub command: &'static str,
    pub arguments: Value,
    pub instance: Option<Instance>,
    pub result: Value,
    pub provenance: Provenance,
}

impl Envelope {
    pub fn print(&self, pretty: bool) -> std::io::Result<()> {
        let mut out = std::io::stdout().lock();
        if pretty {
            serde_json::to_writer_pretty(&mut out, self)?;
        } else {
            serde_json::to_writer(&mut out, self)?;
        }
        match writeln!(out) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        }
    }
}
