//! Adm(μ) against the permissible set for GL_n in window notation.

use iwahori::admissible::adm;
use iwahori::gln_perm::{adm_eq_perm_check, to_affine_perm};
use iwahori::notation::format_element;
use iwahori::{AffineWeylGroup, RootDatum};

fn main() -> iwahori::Result<()> {
    let g = AffineWeylGroup::new(RootDatum::gl(3)?);
    for w in &adm(&g, &[1, 1, 0]).elements {
        let p = to_affine_perm(&g, w)?;
        println!("{:<18} {p}  inversions {}", format_element(&g, w), p.inversions());
    }
    for n in 2..=5 {
        let g = AffineWeylGroup::new(RootDatum::gl(n)?);
        for r in 0..=n {
            let mu: Vec<i64> = (0..n).map(|i| i64::from(i < r)).collect();
            let rep = adm_eq_perm_check(&g, &mu)?;
            println!("GL{n} {mu:?}: |Adm| = {} |Perm| = {} equal = {}", rep.adm_size, rep.perm_size, rep.equal);
        }
    }
    Ok(())
}
