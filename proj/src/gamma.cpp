#include "pagraph/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace pagraph {

namespace {

// Terms B_{2n} / (2n (2n-1) z^{2n-1}) of the Stirling series for ln Gamma.
constexpr double kStirlingCoeff[] = {
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
};

double stirling_tail(double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double power = inv;
    double acc = 0.0;
    for (double c : kStirlingCoeff) {
        acc += c * power;
        power *= inv2;
    }
    return acc;
}

}  // namespace

double lgamma_diff(double z, double d) {
    if (!(z > 0.0) || !(z + d > 0.0))
        throw std::domain_error("lgamma_diff: requires z > 0 and z + d > 0");

    // Shift z into the Stirling regime: ln G(z+d) - ln G(z)
    //   = ln G(z+1+d) - ln G(z+1) - ln((z+d)/z).
    double shift = 0.0;
    while (z < 30.0) {
        shift -= std::log1p(d / z);
        z += 1.0;
    }

    // ln G(z) ~ (z - 1/2) ln z - z + ln(2 pi)/2 + S(z); the difference of the
    // leading terms is rearranged so every summand is O(d log z), not O(z log z).
    const double core = (z - 0.5) * std::log1p(d / z) + d * std::log(z + d) - d;
    return core + stirling_tail(z + d) - stirling_tail(z) + shift;
}

}  // namespace pagraph
