//! Evaluating expressions of the calculator language.

use hyclif::expr::{parse, Env};
use hyclif::AlgebraContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut env = Env::new(AlgebraContext::new(2)?);
    for src in [
        "sigma*sigma",
        "!sigma",
        "t1*e1 + e1*t1",
        "ip(e1^t1, e1^t1)",
        "3/2 e1^t2 - (1-r2) e2",
        "grade(s1*s3, 2)",
        "~(e1^e2) _| (t2^t1)",
    ] {
        println!("{src:<24} => {}", env.eval_str(src)?);
    }

    env.bind("x", env.eval_str("e1 + 2 t1")?)?;
    println!("{:<24} => {}", "x*x", env.eval_str("x*x")?);

    let tree = parse("-e1^t1*e2 + 1/2 r2 t2", 2)?;
    println!("printed back: {tree}");
    if let Err(e) = parse("e1 + e3", 2) {
        println!("error: {e}");
    }
    Ok(())
}
