//! KR poset at Iwahori level in DOT, via the command-line entry point.
//!
//!     cargo run --example kr_poset_dot | dot -Tsvg > kr.svg

fn main() {
    let args = ["iwahori", "poset", "--group", "GL3", "--mu", "1,1,0"];
    let status = iwahori::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(status);
}
