//! Parse the text format, inspect the instance and write it back.

use mbcut::generate::gen_random_weighted;
use mbcut::{parse_instance, write_instance, Instance};

const TEXT: &str = "\
# two colored parallel paths
p mbcut 4 4 2
b 1 1
x 1
y 4
a 1 2 c 1
a 2 4
a 1 3 c 2
a 3 4
";

pub fn run() -> mbcut::Result<String> {
    let mut out = String::new();
    let inst = parse_instance(TEXT.as_bytes())?;
    if let Instance::Cut(c) = &inst {
        out += &format!(
            "{} vertices, {} edges, budgets {:?}\n",
            c.graph.num_vertices(),
            c.graph.num_edges(),
            c.budgets.0
        );
    }
    let written = write_instance(&inst);
    out += &format!("round trip equal: {}\n", parse_instance(written.as_bytes())? == inst);

    let weighted = Instance::Weighted(gen_random_weighted(7, 5, 8, 3, 2, 4)?);
    out += &write_instance(&weighted);
    match parse_instance(b"p mbcut 2 1 1\nb 1\nx 1\ny 3\n") {
        Err(e) => out += &format!("rejected: {e}\n"),
        Ok(_) => out += "accepted\n",
    }
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
