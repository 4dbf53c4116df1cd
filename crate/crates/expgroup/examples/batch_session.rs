//! Driving the command interface programmatically: the same line protocol the
//! `expgroup` binary reads from stdin or a batch file.
//!
//! Run with `cargo run --example batch_session`.

use expgroup::{Ring, Session};

fn main() {
    let mut session = Session::new(&["a", "b"], Ring::IntPoly, 42).unwrap();

    let batch = "\
# normal forms and predicates
norm a^(t)*b*b^-1*a^(t)
eq a^(t)*b ; a^(t+1)*a^-1*b
conj a^(t)*b ; b*a^(t)
comm a^(t) ; a^(3*t^2+1)
root a^(t)*b*a^(t)*b
cent b^-1*a*b
level (a^(t)*b)^(t)
len a^(t)*b*a^(t)*b
pow b^-1*a*b ; t^2+1
eval a^(t^2)*b
let w = a^(t)*b
eq w*w ; a^(t)*b*a^(t)*b
";
    let (output, code) = session.run_batch(batch);
    print!("{output}");
    println!("(exit code of last command: {code})");
}
