use clap::ValueEnum;
use rcperm::harness::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Plain rows for commands whose result is naturally a sequence.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }

    fn text(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|i| self.rows.iter().map(|r| r[i].len()).chain([self.header[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let mut out = line(&self.header);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}

pub struct Output {
    pub report: Report,
    pub table: Option<Table>,
}

impl Output {
    pub fn report(report: Report) -> Self {
        Output { report, table: None }
    }

    pub fn render(&self, format: Format) -> String {
        match (format, &self.table) {
            (Format::Json, _) => self.report.to_json(),
            (Format::Csv, Some(t)) => t.csv(),
            (Format::Csv, None) => self.report.to_csv(),
            (Format::Text, Some(t)) => {
                let mut out = t.text();
                for c in self.report.failures() {
                    out.push_str(&format!("FAILED {}\n", c.id));
                }
                out
            }
            (Format::Text, None) => self.report.to_string(),
        }
    }
}
