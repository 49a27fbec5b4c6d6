use std::fmt;

use lefschetz::AbelianGroup;
use serde::Serialize;
use serde_json::{Number, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub rank: usize,
    /// Invariant factors, each dividing the next.
    #[serde(serialize_with = "big_numbers")]
    pub torsion: Vec<String>,
}

fn big_numbers<S: serde::Serializer>(v: &[String], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for t in v {
        let n: Number = t.parse().map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

impl From<&AbelianGroup> for GroupSummary {
    fn from(g: &AbelianGroup) -> Self {
        Self {
            rank: g.free_rank(),
            torsion: g.torsion().iter().map(ToString::to_string).collect(),
        }
    }
}

/// One invariant report. Fields that do not apply are `None` and serialize as `null`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub genus: Option<usize>,
    pub base: Option<String>,
    pub length: Option<usize>,
    pub h1: Option<GroupSummary>,
    pub chi: Option<i64>,
    pub sigma: Option<i64>,
    pub relator_ok: Option<bool>,
    pub separating_count: Option<usize>,
    pub section_square: Option<i64>,
    pub notes: Vec<String>,
}

impl Report {
    /// Keys sorted, two-space indent, trailing newline.
    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }
}

pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    // serde_json's default map is ordered by key, so a round trip through
    // `Value` sorts every object.
    let v: Value = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn h1_text(h: &GroupSummary) -> String {
    let mut parts = Vec::new();
    match h.rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(h.torsion.iter().map(|t| format!("Z_{t}")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ⊕ ")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn line<T: fmt::Display>(f: &mut fmt::Formatter<'_>, key: &str, v: &Option<T>) -> fmt::Result {
            match v {
                Some(v) => writeln!(f, "{key:<17}{v}"),
                None => Ok(()),
            }
        }
        line(f, "genus", &self.genus)?;
        line(f, "base", &self.base)?;
        line(f, "length", &self.length)?;
        line(f, "H1", &self.h1.as_ref().map(h1_text))?;
        line(f, "chi", &self.chi)?;
        line(f, "sigma", &self.sigma)?;
        line(f, "relator", &self.relator_ok)?;
        line(f, "separating", &self.separating_count)?;
        line(f, "section square", &self.section_square)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
