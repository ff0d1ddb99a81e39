use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// A cyclic extension `1 -> N -> G -> Z_p -> 1`.
#[derive(Clone, Debug)]
pub struct CyclicExtension {
    pub group: FiniteGroup,
    /// Index in `group` of each element of `N`.
    pub inclusion: Vec<usize>,
    /// The lift `t` of the generator of `Z_p`.
    pub lift: usize,
    /// Image in `Z_p` of each element.
    pub projection: Vec<usize>,
}

/// The group of words `x t^i` (`x` in `N`, `0 <= i < p`) with
/// `t x t^-1 = twist(x)` and `t^p = top`.
///
/// Requires `twist(top) = top` and `twist^p = (y -> top y top^-1)`.
pub fn cyclic_extension(n: &FiniteGroup, twist: &[usize], top: usize, p: usize) -> Result<CyclicExtension> {
    if p == 0 {
        return Err(Error::invalid("extension degree must be positive"));
    }
    if twist.len() != n.order() {
        return Err(Error::invalid("twist must be an element map of N"));
    }
    super::hom::check_hom(n, n, twist)?;
    if twist[top] != top {
        return Err(Error::invalid("the twist must fix t^p"));
    }
    let mut powers: Vec<Vec<usize>> = vec![n.elements().collect()];
    for i in 1..=p {
        powers.push(powers[i - 1].iter().map(|&x| twist[x]).collect());
    }
    let top_inv = n.inv(top);
    if n.elements().any(|y| powers[p][y] != n.mul(n.mul(top, y), top_inv)) {
        return Err(Error::invalid("twist^p is not conjugation by t^p"));
    }
    let mul = |&(x, i): &(usize, usize), &(y, j): &(usize, usize)| {
        let z = n.mul(x, powers[i][y]);
        if i + j >= p {
            (n.mul(z, top), i + j - p)
        } else {
            (z, i + j)
        }
    };
    let t = if p == 1 { (top, 0) } else { (0, 1) };
    let mut gens: Vec<(usize, usize)> = n.generators().iter().map(|&g| (g, 0)).collect();
    gens.push(t);
    let (group, elems) = FiniteGroup::from_closure((0usize, 0usize), &gens, mul, usize::MAX)?;
    let mut pos = vec![0usize; n.order() * p];
    for (idx, &(x, i)) in elems.iter().enumerate() {
        pos[x * p + i] = idx;
    }
    Ok(CyclicExtension {
        inclusion: n.elements().map(|x| pos[x * p]).collect(),
        lift: pos[t.0 * p + t.1],
        projection: elems.iter().map(|&(_, i)| i).collect(),
        group,
    })
}
