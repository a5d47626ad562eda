#pragma once

// Scaled complementary error function and the order-1/2 upper incomplete
// Gamma function built on it.

#include "bandedge/types.hpp"

namespace bandedge::specfun {

/// e^{z^2} erfc(z) for any finite complex z.
///
/// For Re z >= 0 the value is bounded by 1/|z| asymptotically and is computed
/// without overflow. For Re z < 0 the reflection 2e^{z^2} - erfcx(-z) is used,
/// which overflows only when Re(z^2) is itself too large for exp().
Complex erfcx(Complex z);

/// e^w Γ(1/2, w) on the principal branch (cut along the negative real axis).
///
/// Evaluated as √π erfcx(√w) with the principal square root; the product is
/// never formed from separate exponential and Gamma factors. On the cut itself
/// (w real negative, with either sign of zero imaginary part) the value is taken
/// from the upper side, i.e. √w = +i√|w|.
Complex scaled_upper_gamma_half(Complex w);

/// e^w Γ(1/2, w) with w = root², continued to the sheet on which w^{1/2} = root.
///
/// Equal to √π erfcx(root). For Re(root) >= 0 this coincides with the
/// principal-branch value; for Re(root) < 0 it is the analytic continuation
/// across the cut, 2√π e^w - scaled_upper_gamma_half(w).
Complex scaled_upper_gamma_half_sheet(Complex root);

}  // namespace bandedge::specfun
