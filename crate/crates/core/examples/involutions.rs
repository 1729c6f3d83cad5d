//! The involutions and the antipode.

use shinsym::algebra::{antipode, convert, involution, Basis, Element, Involution};

fn main() -> shinsym::Result<()> {
    let x: Element = "sh[2,3]".parse()?;
    for w in Involution::ALL {
        println!("{w:?}(sh[2,3]) = {}", convert(&involution(w, &x)?, Basis::H)?);
    }
    println!("S(sh[2,3]) = {}", convert(&antipode(&x)?, Basis::H)?);

    let f: Element = "sh*[3,1]".parse()?;
    println!("Psi(sh*[3,1]) = {}", convert(&involution(Involution::Psi, &f)?, Basis::F)?);
    println!("rsh*[3,1]     = {}", convert(&"rsh*[3,1]".parse()?, Basis::F)?);
    Ok(())
}
