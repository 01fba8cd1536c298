//! The μ-admissible set, its unique length-0 element and its image at a
//! parahoric level.
//!
//!     cargo run --example admissible -- 2,1,0

use iwahori::admissible::{adm, adm_k, tau};
use iwahori::config::parse_vector;
use iwahori::notation::format_element;
use iwahori::{AffineWeylGroup, ParahoricLevel, RootDatum, SigmaAction};

fn main() -> iwahori::Result<()> {
    let mu = match std::env::args().nth(1) {
        Some(s) => parse_vector(&s)?,
        None => vec![1, 1, 0],
    };
    let g = AffineWeylGroup::new(RootDatum::gl(mu.len())?);
    let a = adm(&g, &mu);
    println!("|Adm({mu:?})| = {}", a.len());
    println!("tau = {}", format_element(&g, &tau(&g, &mu)));
    for w in &a.elements {
        println!("  {:<24} length {}", format_element(&g, w), g.length(w));
    }
    let id = SigmaAction::identity(g.datum());
    let names: Vec<String> = (1..mu.len()).map(|i| format!("s{i}")).collect();
    let hyperspecial = ParahoricLevel::from_names(&g, &names, &id)?;
    let reps = adm_k(&g, &a, &hyperspecial);
    println!("at the hyperspecial level {:?}: {} double cosets", names, reps.len());
    Ok(())
}
