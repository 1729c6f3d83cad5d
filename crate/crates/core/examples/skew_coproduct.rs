//! Skew functions and the coproduct of the QSym bases.

use shinsym::algebra::{convert, coproduct, Basis};
use shinsym::comp;
use shinsym::schur::{coproduct_formula, qsym_basis, skew, skew_ii, CoproductVariant};
use shinsym::tableau::Family;

fn main() -> shinsym::Result<()> {
    println!("sh*[3,4]/[2,1]   = {}", skew(Family::Shin, &comp![3, 4], &comp![2, 1])?);
    println!("rsh*[1,3,2]/[1,2] = {}", convert(&skew(Family::RowStrict, &comp![1, 3, 2], &comp![1, 2])?, Basis::F)?);
    println!("sh*[2,1,3]//[1,2,1] = {}", skew_ii(Family::Shin, &comp![2, 1, 3], &comp![1, 2, 1])?);

    let x = qsym_basis(Family::Shin, comp![2, 1]);
    println!("coproduct  = {}", coproduct(&x)?);
    let f = coproduct_formula(Family::Shin, &comp![2, 1], CoproductVariant::Skew)?;
    println!("skew sum   = {}", f.tensor);
    let f = coproduct_formula(Family::Shin, &comp![2, 1], CoproductVariant::SkewII)?;
    println!("skew-II sum = {} (uncontained: {:?})", f.tensor, f.uncontained);
    Ok(())
}
