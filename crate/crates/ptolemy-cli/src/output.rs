use num_bigint::BigInt;

use crate::Format;

/// One output row; the first three cells are the class, the rest counts.
pub struct Row {
    cells: Vec<String>,
}

impl Row {
    pub fn class_count(class: (u32, u32, u32), value: &BigInt) -> Row {
        Row {
            cells: vec![
                class.0.to_string(),
                class.1.to_string(),
                class.2.to_string(),
                value.to_string(),
            ],
        }
    }

    pub fn push(&mut self, cell: String) {
        self.cells.push(cell);
    }
}

pub fn emit_rows(format: Format, headers: &[&str], rows: &[Row]) {
    match format {
        Format::TextTable => {
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in rows {
                for (i, cell) in row.cells.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            println!("{}", line(headers.to_vec()));
            for row in rows {
                println!("{}", line(row.cells.iter().map(String::as_str).collect()));
            }
        }
        Format::Csv => {
            println!("{}", headers.join(","));
            for row in rows {
                println!("{}", row.cells.join(","));
            }
        }
        Format::Json | Format::Ndjson => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map: serde_json::Map<String, serde_json::Value> = headers
                        .iter()
                        .zip(&row.cells)
                        .map(|(h, c)| {
                            // Counts stay decimal strings so arbitrary
                            // precision survives JSON.
                            let value = match *h {
                                "triangles" | "cliques" | "empty_cells" => {
                                    serde_json::json!(c.parse::<u32>().expect("class component"))
                                }
                                "ok" => {
                                    serde_json::json!(c.parse::<bool>().expect("boolean cell"))
                                }
                                _ => serde_json::Value::String(c.clone()),
                            };
                            (h.to_string(), value)
                        })
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            if format == Format::Json {
                println!("{}", serde_json::to_string(&objects).expect("plain data"));
            } else {
                for object in &objects {
                    println!("{}", serde_json::to_string(object).expect("plain data"));
                }
            }
        }
    }
}
