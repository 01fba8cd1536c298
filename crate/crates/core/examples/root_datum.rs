//! Root data of the presets: roots, Cartan type and fundamental group.
//!
//!     cargo run --example root_datum -- GSp4

use iwahori::{GroupSpec, RootDatum};

fn main() -> iwahori::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() {
        ["GL3", "SL3", "PGL3", "GSp4"].map(String::from).to_vec()
    } else {
        names
    };
    for name in names {
        let rd = RootDatum::from_spec(&GroupSpec::parse_name(&name)?)?;
        println!("{} (type {}, rank {})", rd.name(), rd.type_label(), rd.rank());
        println!("  simple roots   {:?}", rd.simple_roots());
        println!("  simple coroots {:?}", rd.simple_coroots());
        println!("  positive roots {}", rd.positive_roots().len());
        println!("  pi_1           {}", rd.fundamental_group(None));
        let rho2 = rd.simple_coroots().iter().map(|c| rd.pairing_with_2rho(c)).collect::<Vec<_>>();
        println!("  <2rho, alpha_i^v> = {rho2:?}");
    }
    Ok(())
}
