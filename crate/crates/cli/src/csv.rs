use std::fmt::Write as _;

/// A small CSV table with a `#` comment line and a header row.
#[derive(Debug, Clone, PartialEq)]
pub struct Csv {
    pub comment: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new(comment: impl Into<String>, header: Vec<&'static str>) -> Self {
        Self {
            comment: comment.into(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.comment);
        let _ = writeln!(out, "{}", self.header.join(","));
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.join(","));
        }
        out
    }
}

pub fn num(x: f64) -> String {
    format!("{x:.6e}")
}
