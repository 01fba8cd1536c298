//! Coroot chains between dominant coweights and the minuscule lift.

use iwahori::stembridge::{minuscule_lift, stembridge_chain};
use iwahori::RootDatum;

fn main() -> iwahori::Result<()> {
    let gsp = RootDatum::gsp(4)?;
    let chain = stembridge_chain(&gsp, &[1, 1, 2], &[3, 1, 2])?;
    println!("GSp4: {:?}", chain.points);

    let gl3 = RootDatum::gl(3)?;
    match stembridge_chain(&gl3, &[1, 0, 0], &[1, 1, 0]) {
        Ok(c) => println!("unexpected chain {:?}", c.steps),
        Err(e) => println!("GL3 (1,1,0) -> (1,0,0): {e}"),
    }

    let gl4 = RootDatum::gl(4)?;
    let lift = minuscule_lift(&gl4, &[0, 1, 1, 0], &[1, 1, 0, 0])?;
    for s in &lift.steps {
        println!("GL4: {:?} - {:?} = {:?}", s.from, s.coroot, s.to);
    }
    Ok(())
}
