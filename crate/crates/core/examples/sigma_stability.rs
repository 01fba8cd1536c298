//! The diagram flip on GL_4 permutes admissible sets.

use std::collections::BTreeSet;

use iwahori::admissible::adm;
use iwahori::{AffineWeylGroup, RootDatum, SigmaAction};

fn main() -> iwahori::Result<()> {
    let g = AffineWeylGroup::new(RootDatum::gl(4)?);
    let flip = SigmaAction::flip(g.datum(), g.weyl())?;
    println!("sigma has order {} and permutes the simple roots as {:?}", flip.order(), flip.simple_perm());
    for mu in [[1, 0, 0, 0], [1, 1, 0, 0], [2, 1, 0, 0]] {
        let image: BTreeSet<_> = adm(&g, &mu).elements.iter().map(|w| g.sigma_apply(&flip, w)).collect();
        let target: BTreeSet<_> = adm(&g, &flip.apply(&mu)).elements.into_iter().collect();
        println!(
            "mu = {mu:?}, sigma(mu) = {:?}: sigma(Adm) = Adm(sigma mu) is {}",
            flip.apply(&mu),
            image == target
        );
    }
    Ok(())
}
