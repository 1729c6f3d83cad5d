//! Change of basis in NSym and QSym.

use shinsym::algebra::{convert, pair, Basis, Element};

fn main() -> shinsym::Result<()> {
    let x: Element = "sh[3,2]".parse()?;
    println!("sh[3,2] = {}", convert(&x, Basis::H)?);
    println!("        = {}", convert(&x, Basis::R)?);

    let f: Element = "sh*[2,3]".parse()?;
    println!("sh*[2,3] = {}", convert(&f, Basis::F)?);
    println!("         = {}", convert(&f, Basis::M)?);

    println!("<sh[3,2], sh*[3,2]> = {}", pair(&x, &"sh*[3,2]".parse()?)?);
    Ok(())
}
