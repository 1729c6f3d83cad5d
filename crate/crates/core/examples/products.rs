//! Products and the right Pieri rule.

use shinsym::algebra::{convert, multiply, Basis, Element};
use shinsym::comp;
use shinsym::schur::{pieri, Generator, Side};
use shinsym::tableau::Family;

fn main() -> shinsym::Result<()> {
    let x: Element = "sh[2,3,1]".parse()?;
    let h: Element = "H[2]".parse()?;
    println!("sh[2,3,1] H[2] = {}", convert(&multiply(&x, &h)?, Basis::Sh)?);
    println!("pieri          = {}", pieri(Family::Shin, &comp![2, 3, 1], 2, Side::Right, Generator::H)?);

    let f: Element = "M[1]".parse()?;
    let g: Element = "M[2,1]".parse()?;
    println!("M[1] M[2,1] = {}", multiply(&f, &g)?);
    Ok(())
}
