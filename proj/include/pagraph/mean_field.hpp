#pragma once

#include <variant>

#include "pagraph/model.hpp"

namespace pagraph {

// Continuum (mean-field) degree dynamics and the asymptotic classification of
// the vertex degree distribution. m may be non-integral here: asymptotics
// only depend on the mean increment size.

// Expected degree at time t of the vertex that arrived at time i:
//   k_i(t) = (m+s) (t/i)^{m/(2m+s)} - s.
double meanfield_degree(double m, double s, double i, double t);

// Distribution-function estimate F^(k) = 1 - ((k+s)/(m+s))^{-(2m+s)/m}.
double meanfield_cdf(double m, double s, double k);

// Density estimate with asymptotically exact decay rate:
//   Q^_k = (2m+s)/m (m+s)^{(2m+s)/m} (k+s)^{-(3m+s)/m}.
double meanfield_vdd(double m, double s, double k);

// Displacement producing a k^-alpha tail: s = (alpha - 3) m. Exponents
// alpha <= 2 are rejected: they would force an infinite mean degree, which
// preferential attachment fixes at 2m by construction.
double alpha_to_s(double alpha, double m);
double s_to_alpha(double s, double m);

struct PowerLaw {
    double alpha;
};
struct Exponential {};
using AsymptoticClass = std::variant<PowerLaw, Exponential>;

// Tail class of the model's final VDD. Constant weights (and the a = 1
// hybrid) give the exponential class; every other rule maps to a power law
// with alpha = 3 + s/m, where s is the weight function's tail displacement.
AsymptoticClass classify(const ModelSpec& model);

}  // namespace pagraph
