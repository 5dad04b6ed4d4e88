//! Run configuration: a TOML document, one per invocation.
//!
//! ```toml
//! command = "verify-thm2"
//! curve = "rational"          # or an inline table {q, genus, weil_coeffs}
//! q = 2
//!
//! [S]
//! degrees = [1]               # or places = ["inf", [0, 1]]
//!
//! [params]
//! m = 2
//! w = 1
//! range_lo = 1
//! range_hi = 10
//!
//! [output]
//! format = "csv"
//! ```

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::error::Error;
use crate::field::{FieldSpec, Fq, Poly, PolyRing};
use crate::genus0::{RationalPlace, SDivisorSpec};
use crate::zeta::{validate_weil, CurveSpec, SSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Command {
    CurveValidate,
    ZetaSeries,
    ZetaValue,
    CountElements,
    CountIdeals,
    VerifyThm1,
    VerifyThm2,
    VerifyLemma4,
    VerifyMobius,
    Density,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::CurveValidate,
        Command::ZetaSeries,
        Command::ZetaValue,
        Command::CountElements,
        Command::CountIdeals,
        Command::VerifyThm1,
        Command::VerifyThm2,
        Command::VerifyLemma4,
        Command::VerifyMobius,
        Command::Density,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::CurveValidate => "curve-validate",
            Command::ZetaSeries => "zeta-series",
            Command::ZetaValue => "zeta-value",
            Command::CountElements => "count-elements",
            Command::CountIdeals => "count-ideals",
            Command::VerifyThm1 => "verify-thm1",
            Command::VerifyThm2 => "verify-thm2",
            Command::VerifyLemma4 => "verify-lemma4",
            Command::VerifyMobius => "verify-mobius",
            Command::Density => "density",
        }
    }

    fn required(&self) -> &'static [&'static str] {
        match self {
            Command::CurveValidate | Command::ZetaSeries | Command::VerifyMobius => &[],
            Command::ZetaValue => &["t"],
            Command::CountElements => &["m", "w"],
            Command::CountIdeals => &["m", "w", "n"],
            Command::VerifyThm1 | Command::VerifyThm2 | Command::Density => {
                &["m", "w", "range_lo", "range_hi"]
            }
            Command::VerifyLemma4 => &["range_lo", "range_hi"],
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveChoice {
    Preset { name: String, q: Option<u64> },
    Explicit(CurveSpec),
}

/// A place of `F_q(X)` as written in the configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PlaceEntry {
    /// `"inf"`.
    Named(String),
    /// Coefficients of a monic irreducible, constant term first, as element indices.
    Coeffs(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SChoice {
    Degrees(Vec<u32>),
    Places(Vec<PlaceEntry>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub big_n: Option<i64>,
    #[serde(rename = "N_vec", skip_serializing_if = "Option::is_none")]
    pub n_vec: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub range_lo: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub range_hi: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
}

impl Params {
    fn has(&self, key: &str) -> bool {
        match key {
            "m" => self.m.is_some(),
            "w" => self.w.is_some(),
            "n" => self.n.is_some(),
            "N" => self.big_n.is_some(),
            "range_lo" => self.range_lo.is_some(),
            "range_hi" => self.range_hi.is_some(),
            "t" => self.t.is_some(),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default)]
    pub format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

/// A validated configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub curve: CurveChoice,
    pub modulus: Option<Vec<u32>>,
    pub s: SChoice,
    pub params: Params,
    pub output: OutputSpec,
    pub budget: Option<u64>,
}

/// One schema problem, with the 1-based line it refers to when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError {
    pub line: Option<usize>,
    pub message: String,
    /// Set when the curve data itself fails validation.
    pub invalid_curve: bool,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigErrors(pub Vec<SchemaError>);

impl ConfigErrors {
    pub fn has_invalid_curve(&self) -> bool {
        self.0.iter().any(|e| e.invalid_curve)
    }
}

impl fmt::Display for ConfigErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

impl From<ConfigErrors> for Error {
    fn from(e: ConfigErrors) -> Self {
        Error::Config(e.to_string())
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawCurve {
    Preset(String),
    Explicit { q: u64, genus: u32, weil_coeffs: Vec<i64> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawS {
    degrees: Option<Vec<u32>>,
    places: Option<Vec<PlaceEntry>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    command: Option<Spanned<String>>,
    curve: Spanned<RawCurve>,
    q: Option<Spanned<u64>>,
    modulus: Option<Vec<u32>>,
    budget: Option<u64>,
    #[serde(rename = "S")]
    s: Spanned<RawS>,
    #[serde(default)]
    params: Option<Spanned<Params>>,
    #[serde(default)]
    output: OutputSpec,
}

/// Serialized form used by [`render`].
#[derive(Debug, Serialize)]
struct RenderConfig<'a> {
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<&'a Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    budget: Option<u64>,
    curve: RenderCurve<'a>,
    #[serde(rename = "S")]
    s: RenderS<'a>,
    params: &'a Params,
    output: &'a OutputSpec,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum RenderCurve<'a> {
    Preset(&'a str),
    Explicit { q: u64, genus: u32, weil_coeffs: Vec<String> },
}

#[derive(Debug, Serialize)]
struct RenderS<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<&'a Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    places: Option<&'a Vec<PlaceEntry>>,
}

fn line_of(text: &str, span: Range<usize>) -> usize {
    text[..span.start.min(text.len())].matches('\n').count() + 1
}

/// Values given on the command line. They replace the matching config keys,
/// except `command`, which must agree with the config when both are present.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    pub command: Option<Command>,
    pub m: Option<u32>,
    pub w: Option<u32>,
    pub n: Option<i64>,
    pub big_n: Option<i64>,
    pub format: Option<Format>,
    pub path: Option<String>,
}

impl Overrides {
    pub fn command(command: Command) -> Self {
        Overrides { command: Some(command), ..Default::default() }
    }
}

/// Parses and validates a configuration after applying `overrides`.
pub fn parse_config_with(text: &str, overrides: &Overrides) -> Result<RunConfig, ConfigErrors> {
    let command_override = overrides.command;
    let raw: RawConfig = toml::from_str(text).map_err(|e| {
        ConfigErrors(vec![SchemaError {
            line: e.span().map(|s| line_of(text, s)),
            message: e.message().to_string(),
            invalid_curve: false,
        }])
    })?;
    let mut errors = Vec::new();
    let err = |errors: &mut Vec<SchemaError>, span: Option<Range<usize>>, msg: String| {
        errors.push(SchemaError { line: span.map(|s| line_of(text, s)), message: msg, invalid_curve: false });
    };

    let command = match (&raw.command, command_override) {
        (Some(c), over) => match c.get_ref().parse::<Command>() {
            Ok(parsed) => {
                if over.is_some_and(|o| o != parsed) {
                    err(&mut errors, Some(c.span()), format!(
                        "config command {parsed} conflicts with requested {}",
                        over.unwrap()
                    ));
                }
                Some(parsed)
            }
            Err(e) => {
                err(&mut errors, Some(c.span()), e);
                None
            }
        },
        (None, Some(o)) => Some(o),
        (None, None) => {
            err(&mut errors, None, "missing command".into());
            None
        }
    };

    let q_key = raw.q.as_ref().map(|q| *q.get_ref());
    let curve = match raw.curve.get_ref() {
        RawCurve::Preset(name) => CurveChoice::Preset { name: name.clone(), q: q_key },
        RawCurve::Explicit { q, genus, weil_coeffs } => {
            if q_key.is_some_and(|k| k != *q) {
                err(&mut errors, raw.q.as_ref().map(|s| s.span()), format!(
                    "top-level q = {} disagrees with curve q = {q}",
                    q_key.unwrap()
                ));
            }
            CurveChoice::Explicit(CurveSpec::new(
                *q,
                *genus,
                weil_coeffs.iter().map(|&a| BigInt::from(a)).collect(),
            ))
        }
    };

    let s_span = raw.s.span();
    let s = match (&raw.s.get_ref().degrees, &raw.s.get_ref().places) {
        (Some(d), None) => Some(SChoice::Degrees(d.clone())),
        (None, Some(p)) => Some(SChoice::Places(p.clone())),
        _ => {
            err(&mut errors, Some(s_span.clone()), "S needs exactly one of degrees or places".into());
            None
        }
    };

    let (params, params_span) = match raw.params {
        Some(p) => {
            let span = p.span();
            (p.into_inner(), Some(span))
        }
        None => (Params::default(), None),
    };
    let mut params = params;
    params.m = overrides.m.or(params.m);
    params.w = overrides.w.or(params.w);
    params.n = overrides.n.or(params.n);
    if overrides.big_n.is_some() {
        params.big_n = overrides.big_n;
        params.n_vec = None;
    }
    let mut output = raw.output;
    if let Some(f) = overrides.format {
        output.format = f;
    }
    if overrides.path.is_some() {
        output.path = overrides.path.clone();
    }

    let (Some(command), Some(s)) = (command, s) else {
        return Err(ConfigErrors(errors));
    };
    let cfg = RunConfig {
        command,
        curve,
        modulus: raw.modulus,
        s,
        params,
        output,
        budget: raw.budget,
    };
    let curve_span = Some(raw.curve.span());
    for (place, e) in cfg.semantic_errors() {
        let span = match place {
            Where::Params => params_span.clone().or(curve_span.clone()),
            Where::Curve => curve_span.clone(),
            Where::S => Some(s_span.clone()),
        };
        let invalid_curve = matches!(e, Error::InvalidCurve(_));
        let message = match e {
            Error::Config(m) => m,
            other => other.to_string(),
        };
        errors.push(SchemaError { line: span.map(|s| line_of(text, s)), message, invalid_curve });
    }
    if errors.is_empty() {
        Ok(cfg)
    } else {
        Err(ConfigErrors(errors))
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig, ConfigErrors> {
    parse_config_with(text, &Overrides::default())
}

enum Where {
    Curve,
    S,
    Params,
}

impl RunConfig {
    pub fn curve_spec(&self) -> Result<CurveSpec, Error> {
        match &self.curve {
            CurveChoice::Preset { name, q } => CurveSpec::preset(name, *q),
            CurveChoice::Explicit(c) => Ok(c.clone()),
        }
    }

    /// The polynomial ring for concrete places.
    pub fn ring(&self) -> Result<PolyRing, Error> {
        let q = self.curve_spec()?.q;
        let spec = match &self.modulus {
            Some(m) => {
                let (p, kappa) = crate::field::prime_power(q)
                    .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
                FieldSpec::new(p, kappa, Some(m.clone()))?
            }
            None => FieldSpec::with_order(q)?,
        };
        Ok(PolyRing::new(Fq::new(spec)))
    }

    /// Concrete places of `S`, when given as places.
    pub fn rational_places(&self) -> Result<Option<Vec<RationalPlace>>, Error> {
        let SChoice::Places(entries) = &self.s else {
            return Ok(None);
        };
        let ring = self.ring()?;
        entries
            .iter()
            .map(|e| match e {
                PlaceEntry::Named(s) if s == "inf" => Ok(RationalPlace::Infinity),
                PlaceEntry::Named(s) => Err(Error::Config(format!("unknown place {s:?}"))),
                PlaceEntry::Coeffs(c) => {
                    if let Some(bad) = c.iter().find(|&&x| x as u64 >= ring.q()) {
                        return Err(Error::Config(format!(
                            "coefficient {bad} is not an element index of F_{}",
                            ring.q()
                        )));
                    }
                    let p: Poly = ring.from_ints(c);
                    Ok(RationalPlace::Finite(p))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    pub fn s_spec(&self) -> Result<SSpec, Error> {
        match &self.s {
            SChoice::Degrees(d) => SSpec::new(d.clone()),
            SChoice::Places(_) => {
                let places = self.rational_places()?.expect("places");
                SSpec::new(places.iter().map(RationalPlace::degree).collect())
            }
        }
    }

    /// `D(N)` for count-elements: `N_vec` if present, otherwise all of `N` on the
    /// first place (whose degree must divide `N`).
    pub fn s_divisor(&self) -> Result<SDivisorSpec, Error> {
        let ring = self.ring()?;
        let places = self
            .rational_places()?
            .ok_or_else(|| Error::Config("count-elements needs S given as places".into()))?;
        let ns = match (&self.params.n_vec, self.params.big_n) {
            (Some(v), _) => v.clone(),
            (None, Some(n)) => {
                let d = places[0].degree() as i64;
                if n % d != 0 {
                    return Err(Error::Config(format!(
                        "N = {n} is not a multiple of the degree {d} of the first place; give N_vec"
                    )));
                }
                let mut v = vec![0; places.len()];
                v[0] = n / d;
                v
            }
            (None, None) => return Err(Error::Config("count-elements needs N or N_vec".into())),
        };
        if ns.len() != places.len() {
            return Err(Error::Config(format!(
                "N_vec has {} entries for {} places",
                ns.len(),
                places.len()
            )));
        }
        SDivisorSpec::new(&ring, places.into_iter().zip(ns).collect())
    }

    fn semantic_errors(&self) -> Vec<(Where, Error)> {
        let mut out = Vec::new();
        for key in self.command.required() {
            if !self.params.has(key) {
                out.push((Where::Params, Error::Config(format!("{} requires params.{key}", self.command))));
            }
        }
        if self.command == Command::CountElements
            && self.params.big_n.is_none()
            && self.params.n_vec.is_none()
        {
            out.push((Where::Params, Error::Config("count-elements requires params.N or params.N_vec".into())));
        }
        if let (Some(lo), Some(hi)) = (self.params.range_lo, self.params.range_hi) {
            if lo > hi {
                out.push((Where::Params, Error::Config(format!("range_lo = {lo} exceeds range_hi = {hi}"))));
            }
        }
        if self.params.m == Some(0) || self.params.w == Some(0) {
            out.push((Where::Params, Error::Config("m and w must be at least 1".into())));
        }
        let curve = match self.curve_spec() {
            Ok(c) => c,
            Err(e) => {
                out.push((Where::Curve, e));
                return out;
            }
        };
        if self.command != Command::CurveValidate {
            if let Err(e) = validate_weil(&curve).into_result() {
                out.push((Where::Curve, e));
                return out;
            }
        }
        if matches!(self.s, SChoice::Places(_)) {
            if curve.genus != 0 {
                out.push((Where::S, Error::Config("concrete places are supported for genus-0 curves only".into())));
                return out;
            }
            if let Err(e) = self.rational_places().and_then(|p| {
                let ring = self.ring()?;
                let places = p.expect("places");
                let n = places.len();
                SDivisorSpec::new(&ring, places.into_iter().zip(std::iter::repeat(0)).take(n).collect())
            }) {
                out.push((Where::S, e));
                return out;
            }
        } else if self.command == Command::CountElements {
            out.push((Where::S, Error::Config("count-elements needs S given as places".into())));
        }
        match self.s_spec() {
            Ok(s) => {
                if self.command != Command::CurveValidate {
                    if let Err(e) = s.check_compatible(&curve) {
                        out.push((Where::S, e));
                    }
                }
            }
            Err(e) => out.push((Where::S, e)),
        }
        if self.command == Command::CountElements && out.is_empty() {
            if let Err(e) = self.s_divisor() {
                out.push((Where::Params, e));
            }
        }
        out
    }

    /// TOML text that parses back to `self`.
    pub fn render(&self) -> String {
        let (curve, q) = match &self.curve {
            CurveChoice::Preset { name, q } => (RenderCurve::Preset(name), *q),
            CurveChoice::Explicit(c) => (
                RenderCurve::Explicit {
                    q: c.q,
                    genus: c.genus,
                    weil_coeffs: c.weil_coeffs.iter().map(|a| a.to_string()).collect(),
                },
                None,
            ),
        };
        let s = match &self.s {
            SChoice::Degrees(d) => RenderS { degrees: Some(d), places: None },
            SChoice::Places(p) => RenderS { degrees: None, places: Some(p) },
        };
        let doc = RenderConfig {
            command: self.command.name(),
            q,
            modulus: self.modulus.as_ref(),
            budget: self.budget,
            curve,
            s,
            params: &self.params,
            output: &self.output,
        };
        // weil coefficients are emitted as strings to survive the serializer; unquote them
        let text = toml::to_string(&doc).expect("config serializes");
        unquote_weil(&text)
    }
}

fn unquote_weil(text: &str) -> String {
    text.lines()
        .map(|l| {
            if l.trim_start().starts_with("weil_coeffs") || l.contains("weil_coeffs =") {
                l.replace('"', "")
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
command = "zeta-value"
curve = "rational"
q = 2

[S]
degrees = [1]

[params]
t = 2
"#;

    #[test]
    fn minimal_config_is_valid() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.command, Command::ZetaValue);
        assert_eq!(cfg.params.t, Some(2));
        assert_eq!(cfg.output.format, Format::Csv);
    }

    #[test]
    fn degree_two_on_curve_without_degree_two_places() {
        // P = 1 + 2u + 2u^2 over F_2 has N_1 = N_2 = 5, so a_2 = 0
        let text = r#"
command = "zeta-value"
curve = { q = 2, genus = 1, weil_coeffs = [1, 2, 2] }

[S]
degrees = [2]

[params]
t = 2
"#;
        let errs = parse_config(text).unwrap_err();
        assert!(errs.0.iter().any(|e| e.message.contains("no available place of degree 2")));
        assert_eq!(errs.0[0].line, Some(5));
    }

    #[test]
    fn concrete_places_need_genus_zero() {
        let text = r#"
command = "count-elements"
curve = "e2-supersingular"

[S]
places = ["inf"]

[params]
m = 2
w = 1
N = 2
"#;
        let errs = parse_config(text).unwrap_err();
        assert!(errs.0[0].message.contains("genus-0"));
    }

    #[test]
    fn unknown_keys_and_missing_params() {
        let errs = parse_config(&MINIMAL.replace("t = 2", "t = 2\nfoo = 1")).unwrap_err();
        assert!(errs.0[0].message.contains("foo"));
        assert_eq!(errs.0[0].line, Some(11));

        let errs = parse_config(&MINIMAL.replace("t = 2", "")).unwrap_err();
        assert!(errs.0[0].message.contains("params.t"));

        let errs = parse_config(&MINIMAL.replace("zeta-value", "frobnicate")).unwrap_err();
        assert!(errs.0[0].message.contains("unknown command"));
        assert_eq!(errs.0[0].line, Some(2));
    }

    #[test]
    fn command_override_must_agree() {
        assert!(parse_config_with(MINIMAL, &Overrides::command(Command::ZetaValue)).is_ok());
        assert!(parse_config_with(MINIMAL, &Overrides::command(Command::VerifyThm2)).is_err());
        let no_cmd = MINIMAL.replace("command = \"zeta-value\"", "");
        assert_eq!(
            parse_config_with(&no_cmd, &Overrides::command(Command::ZetaValue)).unwrap().command,
            Command::ZetaValue
        );
        assert!(parse_config(&no_cmd).is_err());
    }

    #[test]
    fn flags_win_over_config() {
        let text = MINIMAL.replace("zeta-value", "verify-thm2").replace("t = 2", "m = 3\nw = 1\nrange_lo = 1\nrange_hi = 2");
        let o = Overrides { m: Some(2), format: Some(Format::Json), ..Default::default() };
        let cfg = parse_config_with(&text, &o).unwrap();
        assert_eq!(cfg.params.m, Some(2));
        assert_eq!(cfg.output.format, Format::Json);
        // a missing required param can come from a flag
        let text = MINIMAL.replace("zeta-value", "count-ideals").replace("t = 2", "m = 2\nw = 1");
        assert!(parse_config(&text).is_err());
        assert!(parse_config_with(&text, &Overrides { n: Some(3), ..Default::default() }).is_ok());
    }

    #[test]
    fn reducible_place_rejected() {
        let text = r#"
command = "count-elements"
curve = "rational"
q = 2

[S]
places = [[1, 0, 1]]

[params]
m = 1
w = 1
N = 2
"#;
        let errs = parse_config(text).unwrap_err();
        assert!(errs.0[0].message.contains("irreducible"));
    }

    #[test]
    fn render_round_trips() {
        let explicit = r#"
command = "verify-thm2"
curve = { q = 2, genus = 1, weil_coeffs = [1, 0, 2] }
budget = 5000

[S]
degrees = [1, 2]

[params]
m = 2
w = 1
range_lo = 1
range_hi = 4

[output]
format = "json"
path = "out.json"
"#;
        let places = r#"
command = "count-elements"
curve = "rational"
q = 3

[S]
places = ["inf", [0, 1]]

[params]
m = 2
w = 1
N_vec = [1, 1]
"#;
        for text in [MINIMAL, explicit, places] {
            let cfg = parse_config(text).unwrap();
            let rendered = cfg.render();
            assert_eq!(parse_config(&rendered).unwrap(), cfg, "{rendered}");
        }
    }
}
