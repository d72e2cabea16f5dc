#include "pagraph/mean_field.hpp"

#include <cmath>
#include <stdexcept>

namespace pagraph {

namespace {

void require_linear_domain(double m, double s) {
    if (!(m > 0.0))
        throw std::invalid_argument("mean field: m must be positive");
    if (!(s > -m))
        throw std::domain_error("mean field: s must exceed -m");
}

}  // namespace

double meanfield_degree(double m, double s, double i, double t) {
    require_linear_domain(m, s);
    if (!(i >= 1.0 && i <= t))
        throw std::domain_error("meanfield_degree: need 1 <= i <= t");
    return (m + s) * std::pow(t / i, m / (2.0 * m + s)) - s;
}

double meanfield_cdf(double m, double s, double k) {
    require_linear_domain(m, s);
    if (!(k + s > 0.0))
        throw std::domain_error("meanfield_cdf: k + s must be positive");
    return 1.0 - std::pow((k + s) / (m + s), -(2.0 * m + s) / m);
}

double meanfield_vdd(double m, double s, double k) {
    require_linear_domain(m, s);
    if (!(k + s > 0.0))
        throw std::domain_error("meanfield_vdd: k + s must be positive");
    return (2.0 * m + s) / m * std::pow(m + s, (2.0 * m + s) / m) *
           std::pow(k + s, -(3.0 * m + s) / m);
}

double alpha_to_s(double alpha, double m) {
    if (!(m > 0.0))
        throw std::invalid_argument("alpha_to_s: m must be positive");
    if (!(alpha > 2.0))
        throw std::domain_error(
            "alpha_to_s: alpha <= 2 is unattainable for any weight function; a k^-2 tail "
            "would need an infinite mean degree, but growth fixes <k> = 2m");
    return (alpha - 3.0) * m;
}

double s_to_alpha(double s, double m) {
    if (!(m > 0.0))
        throw std::invalid_argument("s_to_alpha: m must be positive");
    if (!(s > -m))
        throw std::domain_error("s_to_alpha: s must exceed -m");
    return 3.0 + s / m;
}

AsymptoticClass classify(const ModelSpec& model) {
    const double m = model.increment().mean();
    if (model.rule() == AttachmentRule::Hybrid) {
        const double a = model.mixing_a();
        if (a == 1.0)
            return Exponential{};
        return PowerLaw{s_to_alpha(2.0 * a * m / (1.0 - a), m)};
    }
    const auto s = model.weight().asymptotic_displacement();
    if (!s)
        return Exponential{};
    return PowerLaw{s_to_alpha(*s, m)};
}

}  // namespace pagraph
