//! Serializable views of classes and verification reports.

use std::collections::BTreeMap;
use std::io::Write;

use lcd2_core::classify::PointGroup;
use lcd2_core::{ATuple, Check, CheckId, EquivClass, MultVector, VerificationReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRecord {
    pub m0: u32,
    pub mp: [u32; 5],
}

/// One equivalence class as written by `classify` and `census`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub n: usize,
    pub d: usize,
    pub canonical: CanonicalRecord,
    pub representative_a: Option<[u32; 5]>,
    pub a0: u32,
    pub label: Option<String>,
    /// Weight to number of codewords of that weight; weight 0 included.
    pub weight_enumerator: BTreeMap<usize, u64>,
    pub dual_min_weight_one: bool,
}

impl From<&EquivClass> for ClassRecord {
    fn from(c: &EquivClass) -> ClassRecord {
        ClassRecord {
            n: c.n,
            d: c.d,
            canonical: CanonicalRecord { m0: c.canon.m0, mp: c.canon.mp },
            representative_a: c.representative.map(|a| a.a),
            a0: c.representative.map_or(c.canon.m0, |a| a.a0),
            label: c.label.clone(),
            weight_enumerator: c.weight_enumerator.terms().collect(),
            dual_min_weight_one: c.zero_col,
        }
    }
}

impl ClassRecord {
    /// Rebuilds the class from its canonical form; the stored derived fields
    /// are recomputed rather than trusted.
    pub fn to_class(&self, group: &PointGroup) -> EquivClass {
        let mv = MultVector { m0: self.canonical.m0, mp: self.canonical.mp };
        let mut class = EquivClass::from_canonical(mv.canonical(group));
        class.label = self.label.clone();
        class.representative = self.representative_a.map(|a| ATuple::with_zero_columns(self.a0, a));
        class
    }
}

/// Flat CSV row mirroring [`ClassRecord`].
#[derive(Debug, Serialize)]
struct ClassRow<'a> {
    n: usize,
    d: usize,
    m0: u32,
    mp: String,
    representative_a: String,
    a0: u32,
    label: &'a str,
    weight_enumerator: String,
    dual_min_weight_one: bool,
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn write_classes_csv<W: Write>(out: W, classes: &[EquivClass]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for c in classes {
        w.serialize(ClassRow {
            n: c.n,
            d: c.d,
            m0: c.canon.m0,
            mp: join(&c.canon.mp),
            representative_a: c.representative.map(|a| join(&a.a)).unwrap_or_default(),
            a0: c.representative.map_or(c.canon.m0, |a| a.a0),
            label: c.label.as_deref().unwrap_or(""),
            weight_enumerator: c.weight_enumerator.to_polynomial(),
            dual_min_weight_one: c.zero_col,
        })?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub n_max: usize,
    pub checks: Vec<CheckRecord>,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> ReportRecord {
        ReportRecord {
            n_max: r.n_max,
            checks: r
                .checks
                .iter()
                .map(|c| CheckRecord {
                    id: c.id.as_str().to_string(),
                    n: c.n,
                    pass: c.pass,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

impl ReportRecord {
    /// `None` if some check id is unknown.
    pub fn to_report(&self) -> Option<VerificationReport> {
        let checks = self
            .checks
            .iter()
            .map(|c| {
                Some(Check {
                    id: CheckId::parse(&c.id)?,
                    n: c.n,
                    pass: c.pass,
                    detail: c.detail.clone(),
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(VerificationReport { n_max: self.n_max, checks })
    }
}

pub fn write_report_csv<W: Write>(out: W, report: &VerificationReport) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for c in &ReportRecord::from(report).checks {
        w.serialize(c)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcd2_core::classify_optimal;

    #[test]
    fn class_json_round_trip() {
        let group = PointGroup::new();
        let classes = classify_optimal(19, true).unwrap();
        let records: Vec<ClassRecord> = classes.iter().map(ClassRecord::from).collect();
        let json = serde_json::to_string(&records).unwrap();
        let back: Vec<ClassRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, records);
        let rebuilt: Vec<EquivClass> = back.iter().map(|r| r.to_class(&group)).collect();
        assert_eq!(rebuilt, classes);
    }

    #[test]
    fn class_json_schema() {
        let classes = classify_optimal(7, false).unwrap();
        let v = serde_json::to_value(ClassRecord::from(&classes[0])).unwrap();
        assert_eq!(v["n"], 7);
        assert_eq!(v["d"], 5);
        assert_eq!(v["a0"], 0);
        assert_eq!(v["representative_a"], serde_json::json!([1, 1, 1, 1, 1]));
        assert_eq!(v["weight_enumerator"], serde_json::json!({"0": 1, "5": 6, "6": 9}));
        assert_eq!(v["dual_min_weight_one"], false);
        assert_eq!(v["canonical"]["mp"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn class_csv_row() {
        let classes = classify_optimal(7, false).unwrap();
        let mut buf = Vec::new();
        write_classes_csv(&mut buf, &classes).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,d,m0,mp,representative_a,a0,label,weight_enumerator,dual_min_weight_one"
        );
        let row = lines.next().unwrap();
        assert!(row.contains("\"1,1,1,1,1\""), "{row}");
        assert!(row.ends_with("\"C_{5m+2,1}\",1+6y^5+9y^6,false"), "{row}");
    }

    #[test]
    fn report_round_trip() {
        let report = lcd2_core::verify_tables(8).unwrap();
        let json = serde_json::to_string(&ReportRecord::from(&report)).unwrap();
        let back: ReportRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_report().unwrap(), report);
    }
}
