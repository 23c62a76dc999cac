use crate::error::{Error, Result};

use super::CheckReport;

pub fn reports_to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialise")
}

/// One header row, then one row per report.
pub fn reports_to_csv(reports: &[CheckReport]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for report in reports {
        writer
            .serialize(report)
            .map_err(|e| Error::InvalidParam(format!("csv: {e}")))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidParam(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Floats at 15 significant digits; non-finite values as `null`.
pub(super) mod sig15 {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::numfmt::round_sig;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(round_sig(*x))
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{CheckId, Variant, Verdict};

    fn sample() -> Vec<CheckReport> {
        vec![
            CheckReport::measured(
                CheckId::ThmCycle,
                Variant::Single,
                "cycle:5".into(),
                1.0 / 3.0 * 1e-15,
                1e-8,
                "a, \"quoted\" detail".into(),
            ),
            CheckReport::inapplicable(
                CheckId::ThmStar,
                Variant::Single,
                "cycle:5".into(),
                1e-8,
                "graph is not a star".into(),
            ),
        ]
    }

    #[test]
    fn json_field_names_and_rounding() {
        let json = reports_to_json(&sample());
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let first = &value[0];
        assert_eq!(first["check"], "THM_CYCLE");
        assert_eq!(first["variant"], "single");
        assert_eq!(first["verdict"], "pass");
        assert_eq!(first["applicable"], true);
        assert_eq!(
            first["max_deviation"].as_f64().unwrap(),
            3.33333333333333e-16
        );
        assert_eq!(value[1]["verdict"], "inapplicable");
        let back: Vec<CheckReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(back[1], sample()[1]);
    }

    #[test]
    fn error_deviation_is_null() {
        let r = CheckReport::error(
            CheckId::ThmCycle,
            Variant::Single,
            "g".into(),
            1e-8,
            &Error::NotFinite,
        );
        let json = reports_to_json(&[r]);
        assert!(json.contains("\"max_deviation\": null"));
        let back: Vec<CheckReport> = serde_json::from_str(&json).unwrap();
        assert!(back[0].max_deviation.is_nan());
        assert_eq!(back[0].verdict, Verdict::Error);
    }

    #[test]
    fn csv_has_header_and_quotes() {
        let csv = reports_to_csv(&sample()).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "check,variant,graph_descriptor,applicable,verdict,max_deviation,tolerance,details"
        );
        assert!(lines
            .next()
            .unwrap()
            .ends_with("\"a, \"\"quoted\"\" detail\""));
        assert_eq!(csv.lines().count(), 3);
    }
}
