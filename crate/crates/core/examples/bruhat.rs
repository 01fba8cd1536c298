//! Length, reduced words and Bruhat order in the extended affine Weyl group.

use iwahori::notation::{format_element, parse_element};
use iwahori::{AffineWeylGroup, RootDatum};

fn main() -> iwahori::Result<()> {
    let g = AffineWeylGroup::new(RootDatum::gl(3)?);
    for s in ["t[1,0,0]", "t[2,1,0]*s1", "s0*s1*s2", "tau", "tau^-1*s1"] {
        let w = parse_element(&g, s)?;
        let (word, omega) = g.reduced_word(&w);
        println!(
            "{s:<14} = {:<22} length {}  word {} * {}  kappa {:?}",
            format_element(&g, &w),
            g.length(&w),
            g.word_names(&word).join(""),
            format_element(&g, &omega),
            g.kottwitz(&w)
        );
    }

    // translations by the W_0-orbit of (1,0,0) are pairwise incomparable
    let orbit = g.datum().weyl_orbit(&[1, 0, 0]);
    for a in &orbit {
        let row: Vec<&str> = orbit
            .iter()
            .map(|b| if g.bruhat_leq(&g.translation(a), &g.translation(b)) { "<=" } else { ".." })
            .collect();
        println!("t{a:?}: {}", row.join(" "));
    }
    let small = g.translation(&[1, 1, 0]);
    let big = g.translation(&[2, 0, 0]);
    println!("t[1,1,0] <= t[2,0,0]: {}", g.bruhat_leq(&small, &big));
    Ok(())
}
