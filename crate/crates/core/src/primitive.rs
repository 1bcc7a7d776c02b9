//! Dimensions of the primitive parts `Λ^k_0 ⊂ Λ^k V` of the exterior algebra on the
//! `ψ_j`, where `Λ^k_0` is the kernel of `∧ γ^{g+1-k}: Λ^k V → Λ^{2g+2-k} V`.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graded::{gamma_element, graded_slice_rank, ExteriorElement, PsiSet};
use crate::series::binomial;

fn check_range(g: u32, k: u32) -> Result<()> {
    if k > g {
        return Err(Error::InvalidParameter(format!(
            "primitive part index k = {k} exceeds genus g = {g}"
        )));
    }
    Ok(())
}

/// `C(2g, k) - C(2g, k-2)`.
pub fn primitive_dim_closed_form(g: u32, k: u32) -> Result<usize> {
    check_range(g, k)?;
    let n = 2 * g as u64;
    let lower = if k >= 2 {
        binomial(n, k as u64 - 2)
    } else {
        0.into()
    };
    (binomial(n, k as u64) - lower)
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter(format!("dimension overflow at g = {g}")))
}

/// Kernel dimension of wedging with `γ^{g+1-k}`, by exact rank of the image.
pub fn primitive_dim_by_kernel(g: u32, k: u32) -> Result<usize> {
    check_range(g, k)?;
    let power = gamma_element(g).pow(g + 1 - k);
    let basis = PsiSet::subsets(2 * g, k);
    let images = basis
        .iter()
        .map(|s| ExteriorElement::basis(g, *s).wedge(&power))
        .collect::<Result<Vec<_>>>()?;
    let rank = graded_slice_rank(&images, 3 * (2 * g + 2 - k))?;
    Ok(basis.len() - rank)
}

/// `dim Λ^k_0`, computed both ways; a disagreement is reported as a verification error.
pub fn primitive_dim(g: u32, k: u32) -> Result<usize> {
    let closed = primitive_dim_closed_form(g, k)?;
    let kernel = primitive_dim_by_kernel(g, k)?;
    if closed != kernel {
        return Err(Error::Verification(format!(
            "dim Λ^{k}_0 at g = {g}: closed form {closed} but kernel rank gives {kernel}"
        )));
    }
    Ok(closed)
}
