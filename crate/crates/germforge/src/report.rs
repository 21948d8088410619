//! Report rows and their CSV/JSON serialization.

use crate::ring::Coeff;
use serde::ser::Serializer;

pub fn serialize_rational<S: Serializer>(c: &Coeff, s: S) -> Result<S::Ok, S::Error> {
    use num_traits::One;
    if c.denom().is_one() {
        s.serialize_str(&format!("{}", c.numer()))
    } else {
        s.serialize_str(&format!("{}/{}", c.numer(), c.denom()))
    }
}

/// One table row in the bounds report: the four numeric columns.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ReportRow {
    pub label: String,
    pub lower: u64,
    pub value: u64,
    pub upper: u64,
    pub refined: u64,
}

impl ReportRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.label, self.lower, self.value, self.upper, self.refined
        )
    }

    /// Inverse of `to_csv`. Labels may themselves contain commas (the
    /// augmentation notation does), so the four numeric fields are taken
    /// from the right.
    pub fn from_csv(line: &str) -> Option<ReportRow> {
        let mut parts = line.trim_end().rsplitn(5, ',');
        let refined = parts.next()?.parse().ok()?;
        let upper = parts.next()?.parse().ok()?;
        let value = parts.next()?.parse().ok()?;
        let lower = parts.next()?.parse().ok()?;
        let label = parts.next()?.to_string();
        Some(ReportRow {
            label,
            lower,
            value,
            upper,
            refined,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let row = ReportRow {
            label: "A_{F,DG_3}(11_5)".into(),
            lower: 54,
            value: 57,
            upper: 60,
            refined: 57,
        };
        assert_eq!(ReportRow::from_csv(&row.to_csv()).unwrap(), row);
        assert!(ReportRow::from_csv("bad,1,2").is_none());
    }
}
