//! Cayley tables of the blade basis.
//!
//! Rows and columns follow the canonical (grade, mask) order; cell `(a, b)`
//! holds the canonical print of `a ∘ b`.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::blade::Blade;
use crate::context::AlgebraContext;
use crate::error::{AlgebraError, Result};
use crate::products::{gp, lcontract, wedge};

pub const MAX_TABLE_DIM: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Product {
    Geometric,
    Wedge,
    LContract,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl Product {
    pub fn name(self) -> &'static str {
        match self {
            Product::Geometric => "geometric",
            Product::Wedge => "wedge",
            Product::LContract => "lcontract",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Product::Geometric => "*",
            Product::Wedge => "^",
            Product::LContract => "_|",
        }
    }
}

impl FromStr for Product {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Product, String> {
        match s {
            "geometric" => Ok(Product::Geometric),
            "wedge" => Ok(Product::Wedge),
            "lcontract" => Ok(Product::LContract),
            _ => Err(format!("unknown product {s:?} (expected geometric, wedge or lcontract)")),
        }
    }
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<TableFormat, String> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(format!("unknown format {s:?} (expected text, csv or json)")),
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub struct CayleyTable {
    pub product: Product,
    pub n: usize,
    pub labels: Vec<String>,
    /// `cells[i][j]` is `labels[i] ∘ labels[j]`.
    pub cells: Vec<Vec<String>>,
}

pub fn cayley_table(product: Product, n: usize) -> Result<CayleyTable> {
    if n > MAX_TABLE_DIM {
        return Err(AlgebraError::TooLarge {
            what: "emit_table",
            n,
            max: MAX_TABLE_DIM,
        });
    }
    let ctx = AlgebraContext::new(n)?;
    let blades = Blade::all(n);
    let elems: Vec<_> = blades.iter().map(|b| ctx.blade(*b)).collect();
    let op = match product {
        Product::Geometric => gp,
        Product::Wedge => wedge,
        Product::LContract => lcontract,
    };
    let cells = elems
        .iter()
        .map(|a| elems.iter().map(|b| op(a, b).map(|c| c.to_string())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(CayleyTable {
        product,
        n,
        labels: blades.iter().map(|b| b.label(n)).collect(),
        cells,
    })
}

impl CayleyTable {
    /// Left-aligned grid with the operator symbol in the corner.
    pub fn to_text(&self) -> String {
        let mut widths = vec![self.product.symbol().len()];
        widths.extend(self.labels.iter().map(String::len));
        for (i, row) in self.cells.iter().enumerate() {
            widths[0] = widths[0].max(self.labels[i].len());
            for (j, cell) in row.iter().enumerate() {
                widths[j + 1] = widths[j + 1].max(cell.len());
            }
        }
        let line = |first: &str, rest: &[String]| {
            let mut cols = vec![format!("{first:<w$}", w = widths[0])];
            cols.extend(rest.iter().enumerate().map(|(j, c)| format!("{c:<w$}", w = widths[j + 1])));
            cols.join(" | ").trim_end().to_string()
        };
        let mut out = line(self.product.symbol(), &self.labels);
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&rule.join("-+-"));
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&self.cells) {
            out.push_str(&line(label, row));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![self.product.symbol().to_string()];
        header.extend(self.labels.iter().cloned());
        w.write_record(&header).expect("in-memory write");
        for (label, row) in self.labels.iter().zip(&self.cells) {
            let mut record = vec![label.clone()];
            record.extend(row.iter().cloned());
            w.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "product": self.product.name(),
            "dim": self.n,
            "basis": self.labels,
            "cells": self.cells,
        })
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Text => self.to_text(),
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => format!("{}\n", serde_json::to_string_pretty(&self.to_json()).expect("plain values")),
        }
    }
}

pub fn emit_table(product: Product, n: usize, format: TableFormat) -> Result<String> {
    Ok(cayley_table(product, n)?.render(format))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(t: &CayleyTable, a: &str, b: &str) -> String {
        let i = t.labels.iter().position(|l| l == a).unwrap();
        let j = t.labels.iter().position(|l| l == b).unwrap();
        t.cells[i][j].clone()
    }

    #[test]
    fn documented_cells() {
        let g = cayley_table(Product::Geometric, 1).unwrap();
        assert_eq!(cell(&g, "t1", "e1"), "1 - e1^t1");
        assert_eq!(cell(&g, "e1^t1", "e1^t1"), "1");
        let w = cayley_table(Product::Wedge, 1).unwrap();
        assert_eq!(cell(&w, "e1", "e1"), "0");
    }

    #[test]
    fn hand_computed_n1_geometric() {
        let g = cayley_table(Product::Geometric, 1).unwrap();
        assert_eq!(g.labels, ["1", "e1", "t1", "e1^t1"]);
        assert_eq!(g.cells[1], ["e1", "0", "1 + e1^t1", "-e1"]);
        assert_eq!(g.cells[2], ["t1", "1 - e1^t1", "0", "t1"]);
        assert_eq!(g.cells[3], ["e1^t1", "e1", "-t1", "1"]);
        let l = cayley_table(Product::LContract, 1).unwrap();
        assert_eq!(l.cells[0], ["1", "e1", "t1", "e1^t1"]);
        assert_eq!(l.cells[1], ["0", "0", "1", "-e1"]);
        assert_eq!(l.cells[2], ["0", "1", "0", "t1"]);
        assert_eq!(l.cells[3], ["0", "0", "0", "1"]);
    }

    #[test]
    fn size_and_limits() {
        let t = cayley_table(Product::Wedge, 2).unwrap();
        assert_eq!(t.cells.len(), 16);
        assert!(cayley_table(Product::Wedge, 4).is_err());
        let csv = t.to_csv();
        assert_eq!(csv.lines().count(), 17);
    }
}
