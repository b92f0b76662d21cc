//! Screening a list of graphs through a dual transform.
//!
//! Each graph6 record is decoded, mapped to a hypergraph by the chosen
//! transform, and put through the full deletion report. Records are
//! evaluated in parallel, rows come back in input order, and a record that
//! fails to parse or does not suit the transform becomes an error row.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::families::{star_dual_of_graph, triangle_dual_of_cubic};
use crate::formats::parse_graph6;
use crate::hypercore::{Hypergraph, Uniformity};
use crate::metrics::{delta_report, diameter, Distance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transform {
    /// Vertices are the graph's edges, hyperedges its vertex stars.
    StarDual,
    /// Vertex stars plus triangles, for cubic graphs.
    TriangleDual,
}

impl Transform {
    pub fn name(self) -> &'static str {
        match self {
            Transform::StarDual => "star_dual",
            Transform::TriangleDual => "triangle_dual",
        }
    }

    pub fn apply(self, g: &Hypergraph) -> Result<Hypergraph, String> {
        let out = match self {
            Transform::StarDual => star_dual_of_graph(g),
            Transform::TriangleDual => triangle_dual_of_cubic(g, false),
        };
        out.map_err(|e| e.to_string())
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Transform {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "star" | "star_dual" | "star-dual" => Ok(Transform::StarDual),
            "triangle" | "triangle_dual" | "triangle-dual" => Ok(Transform::TriangleDual),
            _ => Err(format!("unknown transform {s:?} (expected star or triangle)")),
        }
    }
}

/// Statistics of one transformed record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualStats {
    pub order: usize,
    pub size: usize,
    pub uniformity: Uniformity,
    pub regular: Option<usize>,
    pub diameter: Distance,
    /// Finite deltas only.
    pub delta_min: Option<i64>,
    pub delta_max: Option<i64>,
    pub zero_count: usize,
    pub disconnecting: usize,
    /// Multiplicity of each finite delta.
    pub deltas: BTreeMap<i64, usize>,
    pub soltes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenRow {
    pub index: usize,
    pub transform: Transform,
    /// Order and size of the decoded graph, when it decoded.
    pub source: Option<(usize, usize)>,
    pub result: Result<DualStats, String>,
}

impl ScreenRow {
    pub fn soltes(&self) -> Option<bool> {
        self.result.as_ref().ok().map(|s| s.soltes)
    }
}

fn evaluate(h: &Hypergraph) -> Result<DualStats, String> {
    let uniformity = h.uniformity().map_err(|e| e.to_string())?;
    let report = delta_report(h);
    let (delta_min, delta_max) = report.delta_range().unzip();
    let mut deltas = BTreeMap::new();
    for d in report.rows.iter().filter_map(|r| r.delta) {
        *deltas.entry(d).or_insert(0) += 1;
    }
    Ok(DualStats {
        order: h.order(),
        size: h.size(),
        uniformity,
        regular: h.regularity(),
        diameter: diameter(h),
        delta_min,
        delta_max,
        zero_count: report.zero_count(),
        disconnecting: report.disconnecting_deletions(),
        deltas,
        soltes: report.verdict,
    })
}

fn screen_one(index: usize, record: &str, transform: Transform) -> ScreenRow {
    let graph = match parse_graph6(record) {
        Ok(g) => g,
        Err(e) => return ScreenRow { index, transform, source: None, result: Err(e.to_string()) },
    };
    let source = Some((graph.order(), graph.size()));
    let result = transform.apply(&graph).and_then(|h| evaluate(&h));
    ScreenRow { index, transform, source, result }
}

/// One row per record, in input order.
pub fn screen_records<S: AsRef<str> + Sync>(records: &[S], transform: Transform) -> Vec<ScreenRow> {
    records
        .par_iter()
        .enumerate()
        .map(|(i, r)| screen_one(i, r.as_ref(), transform))
        .collect()
}

/// Screens a file holding one graph6 record per line. Blank lines are not
/// records.
pub fn screen_file(path: impl AsRef<Path>, transform: Transform) -> io::Result<Vec<ScreenRow>> {
    let text = std::fs::read_to_string(path)?;
    let records: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    Ok(screen_records(&records, transform))
}

pub const CSV_HEADER: [&str; 13] = [
    "index",
    "n_src",
    "m_src",
    "transform",
    "n_dual",
    "m_dual",
    "uniformity",
    "regular",
    "diam_dual",
    "delta_min",
    "delta_max",
    "zero_count",
    "soltes",
];

fn csv_fields(row: &ScreenRow) -> [String; 13] {
    let opt = |x: Option<String>| x.unwrap_or_default();
    let (n_src, m_src) = match row.source {
        Some((n, m)) => (n.to_string(), m.to_string()),
        None => (String::new(), String::new()),
    };
    let head = [row.index.to_string(), n_src, m_src, row.transform.name().to_string()];
    let tail: [String; 9] = match &row.result {
        Ok(s) => [
            s.order.to_string(),
            s.size.to_string(),
            match s.uniformity {
                Uniformity::Uniform(r) => r.to_string(),
                Uniformity::Mixed => "mixed".into(),
            },
            s.regular.map_or("no".into(), |k| k.to_string()),
            s.diameter.to_string(),
            opt(s.delta_min.map(|d| d.to_string())),
            opt(s.delta_max.map(|d| d.to_string())),
            s.zero_count.to_string(),
            s.soltes.to_string(),
        ],
        Err(_) => Default::default(),
    };
    let mut out: [String; 13] = Default::default();
    for (slot, v) in out.iter_mut().zip(head.into_iter().chain(tail)) {
        *slot = v;
    }
    if row.result.is_err() {
        out[12] = "error".into();
    }
    out
}

/// CSV rows followed by a `#` footer: Šoltés count, the histogram of all
/// finite deltas, and the error messages.
pub fn write_csv<W: Write>(rows: &[ScreenRow], mut out: W) -> io::Result<()> {
    {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(CSV_HEADER)?;
        for row in rows {
            w.write_record(csv_fields(row))?;
        }
        w.flush()?;
    }
    let hits = rows.iter().filter(|r| r.soltes() == Some(true)).count();
    let errors: Vec<&ScreenRow> = rows.iter().filter(|r| r.result.is_err()).collect();
    let mut histogram: BTreeMap<i64, usize> = BTreeMap::new();
    for s in rows.iter().filter_map(|r| r.result.as_ref().ok()) {
        for (&d, &c) in &s.deltas {
            *histogram.entry(d).or_insert(0) += c;
        }
    }
    writeln!(out, "# records: {}", rows.len())?;
    writeln!(out, "# soltes: {hits}")?;
    writeln!(out, "# errors: {}", errors.len())?;
    writeln!(out, "# delta histogram over all deletions (delta: count)")?;
    for (d, c) in &histogram {
        writeln!(out, "#   {d}: {c}")?;
    }
    for r in errors {
        if let Err(msg) = &r.result {
            writeln!(out, "# error in record {}: {msg}", r.index)?;
        }
    }
    Ok(())
}

pub fn render_csv(rows: &[ScreenRow]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

/// The four bundled 4-regular graphs exactly as printed, line breaks
/// included.
pub const FOUR_REGULAR_RAW: [&str; 4] = [
    include_str!("../fixtures/four_regular/record1.g6"),
    include_str!("../fixtures/four_regular/record2.g6"),
    include_str!("../fixtures/four_regular/record3.g6"),
    include_str!("../fixtures/four_regular/record4.g6"),
];

/// The bundled records with all whitespace removed, one graph6 string each.
pub fn appendix_fixtures() -> Vec<String> {
    FOUR_REGULAR_RAW
        .iter()
        .map(|r| r.chars().filter(|c| !c.is_whitespace()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::write_graph6;

    const PETERSEN: &str = "IheA@GUAo";

    #[test]
    fn transform_names() {
        assert_eq!("star".parse::<Transform>().unwrap(), Transform::StarDual);
        assert_eq!("triangle".parse::<Transform>().unwrap(), Transform::TriangleDual);
        assert!("line".parse::<Transform>().is_err());
    }

    #[test]
    fn fixtures_decode() {
        let f = appendix_fixtures();
        assert_eq!(f[0], "IYIYMOre_");
        let orders: Vec<usize> = f.iter().map(|r| parse_graph6(r).unwrap().order()).collect();
        assert_eq!(orders, vec![10, 63, 84, 112]);
        for r in &f {
            let g = parse_graph6(r).unwrap();
            assert_eq!(g.regularity(), Some(4));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn fixture_star_duals() {
        let rows = screen_records(&appendix_fixtures(), Transform::StarDual);
        let mut got = Vec::new();
        for (row, record) in rows.iter().zip(appendix_fixtures()) {
            let s = row.result.as_ref().unwrap();
            let dual = star_dual_of_graph(&parse_graph6(&record).unwrap()).unwrap();
            let w = crate::metrics::wiener(&dual).finite().unwrap();
            got.push((s.order, w, s.diameter.finite().unwrap(), s.zero_count));
        }
        assert_eq!(got, vec![(20, 320, 2, 20), (126, 31437, 7, 126), (168, 50400, 6, 168), (224, 127568, 8, 224)]);
    }

    #[test]
    fn cycle_is_self_dual() {
        let c11 = crate::families::cycle(11).unwrap();
        let rows = screen_records(&[write_graph6(&c11).unwrap()], Transform::StarDual);
        let s = rows[0].result.as_ref().unwrap();
        assert!(s.soltes);
        assert_eq!((s.order, s.size), (11, 11));
        assert_eq!(s.deltas.get(&0), Some(&11));
    }

    #[test]
    fn petersen_triangle_dual() {
        let rows = screen_records(&[PETERSEN], Transform::TriangleDual);
        assert_eq!(rows[0].source, Some((10, 15)));
        let s = rows[0].result.as_ref().unwrap();
        assert_eq!((s.order, s.size), (15, 10));
        assert_eq!(s.uniformity, Uniformity::Uniform(3));
        assert_eq!(s.regular, Some(2));
        assert!(!s.soltes);
        assert_eq!((s.delta_min, s.delta_max), (Some(8), Some(8)));
    }

    #[test]
    fn bad_records_become_error_rows() {
        let c4 = "Cr";
        let rows = screen_records(&["not graph6!", c4, PETERSEN], Transform::TriangleDual);
        assert_eq!(rows.len(), 3);
        assert!(rows[0].result.is_err() && rows[0].source.is_none());
        assert!(rows[1].result.is_err() && rows[1].source == Some((4, 4)));
        assert!(rows[2].result.is_ok());
        let csv = render_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "0,,,triangle_dual,,,,,,,,,error");
        assert_eq!(lines.next().unwrap(), "1,4,4,triangle_dual,,,,,,,,,error");
        assert_eq!(lines.next().unwrap(), "2,10,15,triangle_dual,15,10,3,2,3,8,8,0,false");
        assert!(csv.contains("# soltes: 0\n"));
        assert!(csv.contains("# errors: 2\n"));
        assert!(csv.contains("#   8: 15\n"));
        assert!(csv.contains("# error in record 1: "));
    }

    #[test]
    fn row_order_is_input_order() {
        let records: Vec<String> = (3..40).map(|n| write_graph6(&crate::families::cycle(n).unwrap()).unwrap()).collect();
        let rows = screen_records(&records, Transform::StarDual);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.index, i);
            assert_eq!(r.source, Some((i + 3, i + 3)));
        }
    }
}
