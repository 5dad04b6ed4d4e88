//! CSV and JSON rendering of run results.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::cli::config::Format;
use crate::rational::ExactRational;
use crate::theorems::{CountReport, DensityRow, Lemma4Report};

/// Column order of a [`CountReport`] in CSV.
pub const COUNT_COLUMNS: [&str; 23] = [
    "curve",
    "q",
    "genus",
    "s",
    "m",
    "w",
    "bound_class",
    "size_kind",
    "size",
    "exact",
    "main_num",
    "main_den",
    "error_num",
    "error_den",
    "bound",
    "ratio_num",
    "ratio_den",
    "density_num",
    "density_den",
    "limit_num",
    "limit_den",
    "constant_ratio_num",
    "constant_ratio_den",
];

pub const DENSITY_COLUMNS: [&str; 4] = ["size", "ideal_density", "element_density", "limit"];

pub const LEMMA4_COLUMNS: [&str; 8] = [
    "n",
    "j",
    "main",
    "difference",
    "leading_constant",
    "printed_constant",
    "constant_ratio",
    "stable_from",
];

/// What a command produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Report {
    Counts(Vec<CountReport>),
    Density(Vec<DensityRow>),
    Lemma4(Lemma4Report),
    /// Free-form rows of already rendered cells.
    Table { columns: Vec<String>, rows: Vec<Vec<String>> },
}

impl Report {
    pub fn table(columns: &[&str], rows: Vec<Vec<String>>) -> Self {
        Report::Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows }
    }

    pub fn len(&self) -> usize {
        match self {
            Report::Counts(r) => r.len(),
            Report::Density(r) => r.len(),
            Report::Lemma4(r) => r.rows.len(),
            Report::Table { rows, .. } => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn split(r: &ExactRational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

fn split_opt(r: &Option<ExactRational>) -> [String; 2] {
    r.as_ref().map_or([String::new(), String::new()], split)
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or(String::new(), |x| x.to_string())
}

fn count_row(r: &CountReport) -> Vec<String> {
    let mut row = vec![
        r.curve.clone(),
        r.q.to_string(),
        r.genus.to_string(),
        r.s.clone(),
        r.m.to_string(),
        r.w.to_string(),
        r.error_bound_class.to_string(),
        r.size_kind.to_string(),
        r.size.to_string(),
        opt(&r.exact_count),
    ];
    row.extend(split(&r.main_term));
    row.extend(split_opt(&r.error));
    row.push(r.bound.to_string());
    row.extend(split_opt(&r.ratio));
    row.extend(split_opt(&r.density));
    row.extend(split(&r.limit_density));
    row.extend(split_opt(&r.constant_ratio));
    row
}

fn lemma4_rows(r: &Lemma4Report) -> Vec<Vec<String>> {
    let ratio = &r.leading_constant / &r.printed_constant;
    r.rows
        .iter()
        .map(|row| {
            vec![
                row.n.to_string(),
                row.j.to_string(),
                row.main.to_string(),
                row.difference.to_string(),
                r.leading_constant.to_string(),
                r.printed_constant.to_string(),
                ratio.to_string(),
                opt(&r.stable_from),
            ]
        })
        .collect()
}

fn csv_bytes(columns: &[String], rows: &[Vec<String>]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(columns).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

fn json_bytes<T: Serialize + ?Sized>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("report serializes");
    out.push(b'\n');
    out
}

fn owned(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|c| c.to_string()).collect()
}

/// Renders a report. Rationals are always written exactly, as `num/den` in
/// JSON and free-form tables and as split numerator/denominator columns in
/// count rows.
pub fn emit_report(report: &Report, format: Format) -> Vec<u8> {
    match (report, format) {
        (Report::Counts(rows), Format::Csv) => {
            csv_bytes(&owned(&COUNT_COLUMNS), &rows.iter().map(count_row).collect::<Vec<_>>())
        }
        (Report::Counts(rows), Format::Json) => json_bytes(rows),
        (Report::Density(rows), Format::Csv) => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.size.to_string(),
                        r.ideal_density.to_string(),
                        opt(&r.element_density),
                        r.limit.to_string(),
                    ]
                })
                .collect();
            csv_bytes(&owned(&DENSITY_COLUMNS), &cells)
        }
        (Report::Density(rows), Format::Json) => json_bytes(rows),
        (Report::Lemma4(r), Format::Csv) => csv_bytes(&owned(&LEMMA4_COLUMNS), &lemma4_rows(r)),
        (Report::Lemma4(r), Format::Json) => json_bytes(r),
        (Report::Table { columns, rows }, Format::Csv) => csv_bytes(columns, rows),
        (Report::Table { columns, rows }, Format::Json) => {
            let objects: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let map: Map<String, Value> = columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                        .collect();
                    Value::Object(map)
                })
                .collect();
            json_bytes(&objects)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::thm2_report;
    use crate::zeta::{CurveSpec, SSpec, SZeta};

    #[test]
    fn empty_rows_give_header_only() {
        let out = String::from_utf8(emit_report(&Report::Counts(vec![]), Format::Csv)).unwrap();
        assert_eq!(out, format!("{}\n", COUNT_COLUMNS.join(",")));
    }

    #[test]
    fn single_density_row_is_array_of_one() {
        let z = SZeta::new(&CurveSpec::rational(2), &SSpec::new(vec![1]).unwrap(), 20).unwrap();
        let rows = crate::theorems::density_report(&z, 2, 1, 3..=3).unwrap();
        let out = emit_report(&Report::Density(rows), Format::Json);
        let v: Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 1);
        assert_eq!(v[0]["limit"], "1/2");
    }

    #[test]
    fn rationals_are_never_floated() {
        let z = SZeta::new(&CurveSpec::e2_supersingular(), &SSpec::new(vec![1]).unwrap(), 20).unwrap();
        let mut rows = thm2_report(&z, 2, 1, 1..=1).unwrap();
        rows[0].ratio = Some(ExactRational::new(16384, 9));
        let csv = String::from_utf8(emit_report(&Report::Counts(rows.clone()), Format::Csv)).unwrap();
        assert!(csv.lines().nth(1).unwrap().contains(",16384,9,"));
        let json = String::from_utf8(emit_report(&Report::Counts(rows), Format::Json)).unwrap();
        assert!(json.contains("\"16384/9\""));
    }

    #[test]
    fn verify_thm2_error_column() {
        let z = SZeta::new(&CurveSpec::rational(2), &SSpec::new(vec![1]).unwrap(), 30).unwrap();
        let rows = thm2_report(&z, 2, 1, 1..=10).unwrap();
        let csv = String::from_utf8(emit_report(&Report::Counts(rows), Format::Csv)).unwrap();
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        let headers = reader.headers().unwrap().clone();
        let num = headers.iter().position(|h| h == "error_num").unwrap();
        let den = headers.iter().position(|h| h == "error_den").unwrap();
        let recs: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
        assert_eq!(recs.len(), 10);
        assert!(recs.iter().all(|r| &r[num] == "-1" && &r[den] == "1"));
    }
}
