//! Straight classes inside Adm(μ) and the Newton set B(G, μ), with the
//! component-bound report of the basic class.

use iwahori::admissible::adm;
use iwahori::notation::format_element;
use iwahori::straight::{b_set, components_bound_report, Frobenius};
use iwahori::{AffineWeylGroup, RootDatum, SigmaAction};

fn main() -> iwahori::Result<()> {
    let g = AffineWeylGroup::new(RootDatum::gl(3)?);
    for sigma in [SigmaAction::identity(g.datum()), SigmaAction::flip(g.datum(), g.weyl())?] {
        let fr = Frobenius::new(&g, &sigma)?;
        let mu = [2, 1, 0];
        let a = adm(&g, &mu);
        let set = b_set(&fr, &a)?;
        println!("B(GL3, {mu:?}) with sigma = {}: {} points", sigma.name(), set.classes.len());
        for c in &set.classes {
            let marker = if set.is_basic(c.id) { " basic" } else { "" };
            println!(
                "  [{}] {:<28} rep {:<18} {} straight members in Adm{marker}",
                c.id,
                c.newton.to_string(),
                format_element(&g, &c.representative),
                c.members_in_adm.len()
            );
        }
        let basic = &set.classes[set.basic].newton;
        let report = components_bound_report(&fr, &set, basic)?;
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    }
    Ok(())
}
