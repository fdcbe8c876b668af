use std::fmt::Write as _;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Record,
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Everything a subcommand prints. Rendering is deterministic unless timing
/// was requested.
#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub outputs: Vec<(String, String)>,
    pub table: Option<Table>,
    pub trace: Vec<String>,
    pub timing: Option<Duration>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.push((key.to_string(), value.to_string()));
    }

    pub fn output(&mut self, key: &str, value: impl ToString) {
        self.outputs.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Record => self.render_record(),
        }
    }

    fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "brauer {} {}", env!("CARGO_PKG_VERSION"), self.command);
        if !self.inputs.is_empty() {
            let _ = writeln!(s, "inputs:");
            for (k, v) in &self.inputs {
                let _ = writeln!(s, "  {k}: {v}");
            }
        }
        if let Some(t) = &self.table {
            let _ = writeln!(s, "table:");
            let mut width: Vec<usize> = t.headers.iter().map(|h| h.len()).collect();
            for row in &t.rows {
                for (w, c) in width.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&width)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                format!("  {}", padded.join("  ").trim_end())
            };
            let _ = writeln!(s, "{}", line(&t.headers));
            for row in &t.rows {
                let _ = writeln!(s, "{}", line(row));
            }
            if t.rows.is_empty() {
                let _ = writeln!(s, "  (empty)");
            }
        }
        if !self.outputs.is_empty() {
            let _ = writeln!(s, "outputs:");
            for (k, v) in &self.outputs {
                if v.contains('\n') {
                    let _ = writeln!(s, "  {k}:");
                    for l in v.lines() {
                        let _ = writeln!(s, "    {l}");
                    }
                } else {
                    let _ = writeln!(s, "  {k}: {v}");
                }
            }
        }
        if !self.trace.is_empty() {
            let _ = writeln!(s, "trace:");
            for l in &self.trace {
                let _ = writeln!(s, "  {l}");
            }
        }
        if let Some(d) = self.timing {
            let _ = writeln!(s, "timing: {:.3} ms", d.as_secs_f64() * 1e3);
        }
        s
    }

    fn render_record(&self) -> String {
        let mut s = String::new();
        let esc = |v: &str| v.replace('\\', "\\\\").replace('\n', "\\n");
        let _ = writeln!(s, "version={}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(s, "command={}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(s, "input.{k}={}", esc(v));
        }
        if let Some(t) = &self.table {
            let _ = writeln!(s, "rows={}", t.rows.len());
            for (i, row) in t.rows.iter().enumerate() {
                for (h, c) in t.headers.iter().zip(row) {
                    let _ = writeln!(s, "row.{}.{h}={}", i + 1, esc(c));
                }
            }
        }
        for (k, v) in &self.outputs {
            let _ = writeln!(s, "output.{k}={}", esc(v));
        }
        for (i, l) in self.trace.iter().enumerate() {
            let _ = writeln!(s, "trace.{}={}", i + 1, esc(l));
        }
        if let Some(d) = self.timing {
            let _ = writeln!(s, "timing_ms={:.3}", d.as_secs_f64() * 1e3);
        }
        s
    }
}
