//! Enumerating tableaux, flipping them and walking the composition poset.

use shinsym::comp;
use shinsym::composition::WeakComposition;
use shinsym::tableau::{enumerate_standard, enumerate_tableaux, maximal_chains, Family, Shape};

fn main() -> shinsym::Result<()> {
    let shape = Shape::straight(comp![3, 4]);
    let content = WeakComposition::new(vec![1, 2, 1, 1, 2]);
    for t in enumerate_tableaux(&shape, Family::Shin, &content)? {
        println!("{t}\n");
    }

    for t in enumerate_standard(&Shape::straight(comp![3, 2]), Family::Shin) {
        println!("{t}\n  descents {}  flips to\n{}\n", t.descent_composition()?, t.flip()?);
    }

    for chain in maximal_chains(&comp![2, 1], &comp![3, 3])? {
        let names: Vec<String> = chain.iter().map(|c| c.to_string()).collect();
        println!("{}", names.join(" < "));
    }
    Ok(())
}
