use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Markdown,
    Json,
}

/// Renders rows as a pipe table (markdown) or space-padded columns (text).
/// JSON callers serialize their own data instead.
pub fn render(format: Format, headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut out = String::new();
    match format {
        Format::Markdown => {
            let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
            out += &line(headers.iter().zip(&widths).map(|(h, w)| pad(h, *w)).collect());
            out += &line(widths.iter().map(|w| "-".repeat(*w)).collect());
            for row in rows {
                out += &line(row.iter().zip(&widths).map(|(c, w)| pad(c, *w)).collect());
            }
        }
        Format::Text | Format::Json => {
            let line = |cells: Vec<String>| format!("{}\n", cells.join("  ").trim_end());
            out += &line(headers.iter().zip(&widths).map(|(h, w)| pad(h, *w)).collect());
            for row in rows {
                out += &line(row.iter().zip(&widths).map(|(c, w)| pad(c, *w)).collect());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markdown_columns_align_by_characters() {
        let rows = vec![vec!["Spin(7)/G₂".to_string(), "7".to_string()]];
        let md = render(Format::Markdown, &["space", "dim"], &rows);
        assert_eq!(md, "| space      | dim |\n| ---------- | --- |\n| Spin(7)/G₂ | 7   |\n");
        let text = render(Format::Text, &["space", "dim"], &rows);
        assert_eq!(text, "space       dim\nSpin(7)/G₂  7\n");
    }
}
