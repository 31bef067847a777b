//! Cayley tables of the n = 1 algebra in all three formats.

use hyclif::table::{emit_table, Product, TableFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for product in [Product::Geometric, Product::Wedge, Product::LContract] {
        println!("{}", emit_table(product, 1, TableFormat::Text)?);
    }
    print!("{}", emit_table(Product::Geometric, 1, TableFormat::Csv)?);
    Ok(())
}
