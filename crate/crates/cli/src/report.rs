use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// What a command produced: the same content rendered two ways, plus whether
/// every certificate in it re-verified.
pub struct Report {
    pub text: String,
    pub structured: Value,
    pub verified: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.structured)
                    .expect("report values are plain JSON");
                s.push('\n');
                s
            }
        }
    }
}

/// Left-aligned two-column block.
pub fn aligned(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// `2,6`, or `-` for the empty list.
pub fn list(items: &[usize]) -> String {
    if items.is_empty() {
        return "-".to_string();
    }
    items
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}
