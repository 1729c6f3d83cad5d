//! Passing to symmetric functions.

use shinsym::algebra::Element;
use shinsym::composition::Partition;
use shinsym::schur::{chi, lr_coefficient, schur_detect};

fn main() -> shinsym::Result<()> {
    for s in ["sh[2,1]", "sh[1,2]", "sh[3,1,2]"] {
        let x: Element = s.parse()?;
        println!("chi({s}) = {}", chi(&x)?);
    }
    for s in ["sh*[3,1]", "sh*[1,3]", "bsh*[1,2]"] {
        let f: Element = s.parse()?;
        match schur_detect(&f)? {
            Some(e) => println!("{s} = {e}"),
            None => println!("{s} is not a Schur function"),
        }
    }
    let p = |v: Vec<usize>| Partition::new(v).unwrap();
    println!("coefficient of s[3,2,1] in s[2,1]^2 = {}", lr_coefficient(&p(vec![3, 2, 1]), &p(vec![2, 1]), &p(vec![2, 1])));
    Ok(())
}
