//! Determinantal formulas and creation operators.

use shinsym::algebra::{convert, Basis};
use shinsym::comp;
use shinsym::schur::{beth, beth_chain, jacobi_trudi, nsym_basis};
use shinsym::tableau::Family;

fn main() -> shinsym::Result<()> {
    let g = comp![1, 3, 4];
    println!("jt(sh[1,3,4])     = {}", jacobi_trudi(Family::Shin, &g)?);
    println!("beth chain        = {}", beth_chain(&g)?);
    println!("beth_3(H[4])      = {}", beth(3, &"H[4]".parse()?)?);

    let d = comp![4, 2, 1];
    println!("jt(fsh[4,2,1])    = {}", jacobi_trudi(Family::Flipped, &d)?);
    println!("fsh[4,2,1] direct = {}", convert(&nsym_basis(Family::Flipped, d), Basis::H)?);
    Ok(())
}
