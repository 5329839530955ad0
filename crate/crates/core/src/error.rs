use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the toolkit can report.
///
/// Each variant maps to a stable machine-readable [`code`](Error::code) and
/// a process [`exit_code`](Error::exit_code) for scripted use.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{quantity} out of domain: {value} ({reason})")]
    Domain {
        quantity: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error(
        "latency-infeasible altitude: zenith distance {zenith_distance_m} m exceeds maximum slant range {max_range_m} m"
    )]
    LatencyInfeasible { zenith_distance_m: f64, max_range_m: f64 },

    #[error("integration step underflow at altitude {altitude_m} m")]
    StepUnderflow { altitude_m: f64 },

    #[error("no altitude up to the {ceiling_m} m ceiling reaches a lifetime of {target_s} s")]
    CeilingExceeded { ceiling_m: f64, target_s: f64 },

    #[error("config parse error: {message}")]
    ConfigParse { message: String },

    #[error("unknown config key `{key}`")]
    UnknownKey { key: String },

    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },

    #[error("`{key}` references unknown catalog entry `{name}`")]
    UnknownEntry { key: String, name: String },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(quantity: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain {
            quantity,
            value,
            reason,
        }
    }

    pub(crate) fn invalid(key: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidValue {
            key: key.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// The innermost error, with stage annotations stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }

    pub fn code(&self) -> &'static str {
        match self.root() {
            Error::Domain { .. } => "domain",
            Error::LatencyInfeasible { .. } => "latency_infeasible",
            Error::StepUnderflow { .. } => "step_underflow",
            Error::CeilingExceeded { .. } => "ceiling_exceeded",
            Error::ConfigParse { .. } => "config_parse",
            Error::UnknownKey { .. } => "config_unknown_key",
            Error::InvalidValue { .. } => "config_invalid_value",
            Error::UnknownEntry { .. } => "config_unknown_entry",
            Error::Io { .. } => "io",
            Error::Stage { .. } => unreachable!("root() strips stages"),
        }
    }

    /// 2 config, 3 domain/infeasibility, 4 numerical failure, 5 I/O.
    pub fn exit_code(&self) -> i32 {
        match self.root() {
            Error::ConfigParse { .. }
            | Error::UnknownKey { .. }
            | Error::InvalidValue { .. }
            | Error::UnknownEntry { .. } => 2,
            Error::Domain { .. } | Error::LatencyInfeasible { .. } | Error::CeilingExceeded { .. } => 3,
            Error::StepUnderflow { .. } => 4,
            Error::Io { .. } => 5,
            Error::Stage { .. } => unreachable!("root() strips stages"),
        }
    }

    pub(crate) fn at_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub(crate) fn check_altitude(h: f64) -> Result<()> {
    if h.is_finite() && h >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain("altitude", h, "must be finite and non-negative"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stage_annotation_keeps_code_and_exit() {
        let e = Error::StepUnderflow { altitude_m: 12.0 }.at_stage("lifetime");
        assert_eq!(e.code(), "step_underflow");
        assert_eq!(e.exit_code(), 4);
        assert!(e.to_string().starts_with("lifetime: "));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Error::UnknownKey { key: "x".into() }.exit_code(), 2);
        assert_eq!(Error::domain("tau", -1.0, "positive").exit_code(), 3);
        let io = Error::io("/nope", std::io::Error::other("x"));
        assert_eq!(io.exit_code(), 5);
    }
}
