#pragma once

namespace pagraph {

// lgamma_diff(z, d) = ln Gamma(z + d) - ln Gamma(z) for z > 0, z + d > 0.
//
// Computed without forming the two large lgamma values, so the result keeps
// near-full relative precision even for z ~ 1e6 where a naive difference of
// lgamma() calls loses ~5 digits to cancellation. Small z is shifted up with
// the Gamma(z+1) = z Gamma(z) identity, large z uses a Stirling-series
// difference.
double lgamma_diff(double z, double d);

}  // namespace pagraph
